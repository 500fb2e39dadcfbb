//! Input documents: a rank and a list of named classes.
//!
//! ```json
//! {"rank": 2, "classes": [{"name": "A", "weights": [{"vertex": [], "gen": 1, "weight": 1}]}]}
//! ```

use serde_json::{json, Value};
use thiserror::Error;

use spheres_core::{Rank, SphereClass};

use crate::json::{as_array, as_object, field, rank_from_json, weights_from_json, weights_to_json};

/// Validation failures, each naming the JSON path of the offending item.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: rank must be a positive integer, got {value}")]
    InvalidRank { path: String, value: i64 },
    #[error("{path}: word {word} is not freely reduced")]
    NonReducedWord { path: String, word: String },
    #[error("{path}: letter {value} out of range for rank {rank}")]
    LetterOutOfRange { path: String, value: i64, rank: u32 },
    #[error("{path}: class \"{class}\": generator {gen} out of range 1..={rank}")]
    GenOutOfRange {
        path: String,
        class: String,
        gen: i64,
        rank: u32,
    },
    #[error("{path}: class \"{class}\": weight must be nonzero")]
    ZeroWeight { path: String, class: String },
    #[error("{path}: class \"{class}\": duplicate (vertex, gen) entry")]
    DuplicateEdge { path: String, class: String },
    #[error("{path}: duplicate class name \"{name}\"")]
    DuplicateName { path: String, name: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedClass {
    pub name: String,
    pub class: SphereClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub rank: Rank,
    pub classes: Vec<NamedClass>,
}

impl InputDocument {
    pub fn get(&self, name: &str) -> Option<&SphereClass> {
        self.classes
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.class)
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| json!({ "name": c.name, "weights": weights_to_json(&c.class) }))
            .collect();
        json!({ "rank": self.rank.get(), "classes": classes })
    }
}

pub fn parse_input(bytes: &[u8]) -> Result<InputDocument, InputError> {
    let value: Value =
        serde_json::from_slice(bytes).map_err(|e| InputError::MalformedJson(e.to_string()))?;
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> Result<InputDocument, InputError> {
    let root = as_object(value, "$")?;
    let rank = rank_from_json(field(root, "rank", "$")?, "$.rank")?;
    let entries = as_array(field(root, "classes", "$")?, "$.classes")?;
    let mut classes: Vec<NamedClass> = Vec::with_capacity(entries.len());
    for (i, entry) in entries.iter().enumerate() {
        let path = format!("$.classes[{i}]");
        let obj = as_object(entry, &path)?;
        let name = field(obj, "name", &path)?
            .as_str()
            .ok_or_else(|| InputError::Schema {
                path: format!("{path}.name"),
                message: "expected a string".to_string(),
            })?
            .to_string();
        if classes.iter().any(|c| c.name == name) {
            return Err(InputError::DuplicateName {
                path: format!("{path}.name"),
                name,
            });
        }
        let class = weights_from_json(
            field(obj, "weights", &path)?,
            rank,
            &format!("{path}.weights"),
            &name,
        )?;
        classes.push(NamedClass { name, class });
    }
    Ok(InputDocument { rank, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_document() {
        let doc = parse_input(
            br#"{"rank":2,"classes":[{"name":"A","weights":[{"vertex":[],"gen":1,"weight":1}]}]}"#,
        )
        .unwrap();
        assert_eq!(doc.rank.get(), 2);
        assert_eq!(doc.classes.len(), 1);
        assert_eq!(doc.get("A").unwrap().support_len(), 1);
        assert!(doc.get("B").is_none());
    }

    #[test]
    fn rejects_non_reduced_vertex() {
        let err = parse_input(
            br#"{"rank":2,"classes":[{"name":"A","weights":[{"vertex":[1,-1],"gen":1,"weight":1}]}]}"#,
        )
        .unwrap_err();
        assert_eq!(
            err,
            InputError::NonReducedWord {
                path: "$.classes[0].weights[0].vertex".to_string(),
                word: "[1,-1]".to_string(),
            }
        );
    }

    #[test]
    fn rejects_duplicate_edges_and_names() {
        let err = parse_input(
            br#"{"rank":2,"classes":[{"name":"A","weights":[
                {"vertex":[],"gen":1,"weight":1},{"vertex":[],"gen":1,"weight":-1}]}]}"#,
        )
        .unwrap_err();
        assert_eq!(
            err,
            InputError::DuplicateEdge {
                path: "$.classes[0].weights[1]".to_string(),
                class: "A".to_string(),
            }
        );
        let err = parse_input(
            br#"{"rank":1,"classes":[{"name":"A","weights":[]},{"name":"A","weights":[]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, InputError::DuplicateName { .. }));
    }

    #[test]
    fn rejects_malformed_json_and_schema_errors() {
        assert!(matches!(
            parse_input(b"{"),
            Err(InputError::MalformedJson(_))
        ));
        assert!(matches!(
            parse_input(br#"{"rank":2}"#),
            Err(InputError::Schema { .. })
        ));
        let err = parse_input(
            br#"{"rank":2,"classes":[{"name":"B","weights":[{"vertex":[],"gen":5,"weight":1}]}]}"#,
        )
        .unwrap_err();
        assert_eq!(
            err.to_string(),
            "$.classes[0].weights[0].gen: class \"B\": generator 5 out of range 1..=2"
        );
    }

    #[test]
    fn serialization_round_trips() {
        let text = br#"{"rank":3,"classes":[
            {"name":"A","weights":[{"vertex":[2,-1],"gen":3,"weight":-2},{"vertex":[],"gen":1,"weight":1}]},
            {"name":"Z","weights":[]}]}"#;
        let doc = parse_input(text).unwrap();
        let again = parse_value(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
    }
}
