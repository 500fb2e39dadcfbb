//! JSON encodings of words, classes, certificates and complexes.
//!
//! Encoders produce `serde_json::Value`s with a fixed key layout; object
//! keys are sorted by `serde_json`, so output is byte-stable.

use serde_json::{json, Map, Value};

use spheres_core::complex::{ComplexOutput, RejectionReason};
use spheres_core::decision::{
    CoverDisjointCertificate, CoverEmbedCertificate, InnerCertificate, ManifoldCertificate, Side,
    Witness,
};
use spheres_core::{Edge, Rank, SphereClass, Word};

use crate::document::InputError;

pub fn word_to_json(word: &Word) -> Value {
    Value::Array(word.values().map(Value::from).collect())
}

/// Weight entries in edge order.
pub fn weights_to_json(class: &SphereClass) -> Value {
    Value::Array(
        class
            .weights()
            .map(|(edge, weight)| {
                json!({
                    "vertex": word_to_json(&edge.base),
                    "gen": edge.gen,
                    "weight": weight,
                })
            })
            .collect(),
    )
}

pub fn class_to_json(class: &SphereClass) -> Value {
    json!({
        "rank": class.rank().get(),
        "weights": weights_to_json(class),
    })
}

fn at(path: &str, key: &str) -> String {
    format!("{path}.{key}")
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

pub(crate) fn field<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    path: &str,
) -> Result<&'a Value, InputError> {
    obj.get(key)
        .ok_or_else(|| schema(path, format!("missing field \"{key}\"")))
}

pub(crate) fn as_object<'a>(
    value: &'a Value,
    path: &str,
) -> Result<&'a Map<String, Value>, InputError> {
    value
        .as_object()
        .ok_or_else(|| schema(path, "expected an object"))
}

pub(crate) fn as_array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>, InputError> {
    value
        .as_array()
        .ok_or_else(|| schema(path, "expected an array"))
}

pub(crate) fn as_int(value: &Value, path: &str) -> Result<i64, InputError> {
    value
        .as_i64()
        .ok_or_else(|| schema(path, "expected an integer"))
}

pub fn rank_from_json(value: &Value, path: &str) -> Result<Rank, InputError> {
    let k = as_int(value, path)?;
    u32::try_from(k)
        .ok()
        .and_then(|k| Rank::new(k).ok())
        .ok_or_else(|| InputError::InvalidRank {
            path: path.to_string(),
            value: k,
        })
}

/// Parses a reduced word; non-reduced input is rejected, not reduced.
pub fn word_from_json(value: &Value, rank: Rank, path: &str) -> Result<Word, InputError> {
    let items = as_array(value, path)?;
    let mut letters = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        letters.push(as_int(item, &format!("{path}[{i}]"))?);
    }
    Word::from_reduced(rank, &letters).map_err(|e| match e {
        spheres_core::Error::NonReducedWord => InputError::NonReducedWord {
            path: path.to_string(),
            word: Value::Array(letters.iter().map(|&v| Value::from(v)).collect()).to_string(),
        },
        spheres_core::Error::LetterOutOfRange { value, rank } => InputError::LetterOutOfRange {
            path: path.to_string(),
            value,
            rank,
        },
        other => schema(path, other.to_string()),
    })
}

/// Parses a weight list under `path`, attributing errors to `class_name`.
pub fn weights_from_json(
    value: &Value,
    rank: Rank,
    path: &str,
    class_name: &str,
) -> Result<SphereClass, InputError> {
    let entries = as_array(value, path)?;
    let mut parsed: Vec<(Edge, i64)> = Vec::with_capacity(entries.len());
    for (i, entry) in entries.iter().enumerate() {
        let entry_path = format!("{path}[{i}]");
        let obj = as_object(entry, &entry_path)?;
        let vertex = word_from_json(
            field(obj, "vertex", &entry_path)?,
            rank,
            &at(&entry_path, "vertex"),
        )?;
        let gen_path = at(&entry_path, "gen");
        let gen = as_int(field(obj, "gen", &entry_path)?, &gen_path)?;
        if gen < 1 || gen > i64::from(rank.get()) {
            return Err(InputError::GenOutOfRange {
                path: gen_path,
                class: class_name.to_string(),
                gen,
                rank: rank.get(),
            });
        }
        let weight_path = at(&entry_path, "weight");
        let weight = as_int(field(obj, "weight", &entry_path)?, &weight_path)?;
        if weight == 0 {
            return Err(InputError::ZeroWeight {
                path: weight_path,
                class: class_name.to_string(),
            });
        }
        let edge = Edge::new(vertex, gen as u32);
        if parsed.iter().any(|(e, _)| *e == edge) {
            return Err(InputError::DuplicateEdge {
                path: entry_path,
                class: class_name.to_string(),
            });
        }
        parsed.push((edge, weight));
    }
    SphereClass::new(rank, parsed).map_err(|e| schema(path, e.to_string()))
}

/// Parses a standalone class object `{"rank": k, "weights": [...]}`.
pub fn class_from_json(value: &Value) -> Result<SphereClass, InputError> {
    let obj = as_object(value, "$")?;
    let rank = rank_from_json(field(obj, "rank", "$")?, "$.rank")?;
    weights_from_json(field(obj, "weights", "$")?, rank, "$.weights", "")
}

pub fn witness_to_json(witness: &Witness) -> Value {
    json!({
        "source": word_to_json(&witness.pair.source),
        "target": word_to_json(&witness.pair.target),
        "values": witness.values,
    })
}

pub fn cover_embed_to_json(cert: &CoverEmbedCertificate) -> Value {
    match cert {
        CoverEmbedCertificate::Positive { sides } => {
            let list = |which: Side| -> Value {
                Value::Array(
                    sides
                        .iter()
                        .filter(|(_, s)| **s == which)
                        .map(|(v, _)| word_to_json(v))
                        .collect(),
                )
            };
            json!({
                "kind": "cover_embed_positive",
                "sides": { "1": list(Side::One), "2": list(Side::Two) },
            })
        }
        CoverEmbedCertificate::Negative { witness } => json!({
            "kind": "cover_embed_negative",
            "pair": witness_to_json(witness),
        }),
    }
}

pub fn cover_disjoint_to_json(cert: &CoverDisjointCertificate) -> Value {
    match cert {
        CoverDisjointCertificate::Positive => json!({ "kind": "cover_disjoint_positive" }),
        CoverDisjointCertificate::Negative {
            same_sign,
            opposite_sign,
        } => json!({
            "kind": "cover_disjoint_negative",
            "same_sign": witness_to_json(same_sign),
            "opposite_sign": witness_to_json(opposite_sign),
        }),
    }
}

pub fn manifold_to_json(cert: &ManifoldCertificate) -> Value {
    match cert {
        ManifoldCertificate::Positive { checked } => json!({
            "kind": "manifold_positive",
            "checked": checked.iter().map(word_to_json).collect::<Vec<_>>(),
        }),
        ManifoldCertificate::Negative { g, inner } => json!({
            "kind": "manifold_negative",
            "g": word_to_json(g),
            "inner": match inner {
                InnerCertificate::Embed(c) => cover_embed_to_json(c),
                InnerCertificate::Disjoint(c) => cover_disjoint_to_json(c),
            },
        }),
    }
}

/// Complex output; `sources` and rejection `index` refer to input positions.
pub fn complex_to_json(out: &ComplexOutput) -> Value {
    let vertices: Vec<Value> = out
        .vertices
        .iter()
        .map(|v| json!({ "canonical": class_to_json(&v.canonical), "sources": v.sources }))
        .collect();
    let edges: Vec<Value> = out.edges.iter().map(|(i, j)| json!([i, j])).collect();
    let rejected: Vec<Value> = out
        .rejected
        .iter()
        .map(|r| {
            let (reason, certificate) = match &r.reason {
                RejectionReason::ZeroClass => ("zero_class".to_string(), Value::Null),
                RejectionReason::NotEmbeddableInM(cert) => {
                    ("not_embeddable_in_m".to_string(), manifold_to_json(cert))
                }
                RejectionReason::Failed(e) => (e.to_string(), Value::Null),
            };
            json!({ "index": r.index, "reason": reason, "certificate": certificate })
        })
        .collect();
    json!({
        "vertices": vertices,
        "edges": edges,
        "simplices": out.simplices,
        "simplex_rule": "pairwise-compatible cliques",
        "rejected": rejected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank() -> Rank {
        Rank::new(2).unwrap()
    }

    #[test]
    fn word_round_trip() {
        let w = Word::from_reduced(rank(), &[1, -2]).unwrap();
        assert_eq!(word_to_json(&w), json!([1, -2]));
        assert_eq!(word_from_json(&json!([1, -2]), rank(), "$").unwrap(), w);
        assert_eq!(word_to_json(&Word::identity()), json!([]));
    }

    #[test]
    fn word_errors_name_the_path() {
        let err = word_from_json(&json!([1, -1]), rank(), "$.x").unwrap_err();
        assert!(matches!(err, InputError::NonReducedWord { ref path, .. } if path == "$.x"));
        let err = word_from_json(&json!([3]), rank(), "$.x").unwrap_err();
        assert!(matches!(err, InputError::LetterOutOfRange { value: 3, .. }));
        let err = word_from_json(&json!("a"), rank(), "$.x").unwrap_err();
        assert!(matches!(err, InputError::Schema { .. }));
    }

    #[test]
    fn class_round_trip() {
        let value = json!({"rank": 2, "weights": [
            {"vertex": [], "gen": 1, "weight": 1},
            {"vertex": [1], "gen": 2, "weight": -3},
        ]});
        let class = class_from_json(&value).unwrap();
        assert_eq!(class.support_len(), 2);
        assert_eq!(class_to_json(&class), value);
    }

    #[test]
    fn class_errors() {
        let dup = json!({"rank": 2, "weights": [
            {"vertex": [], "gen": 1, "weight": 1},
            {"vertex": [], "gen": 1, "weight": 2},
        ]});
        assert!(matches!(
            class_from_json(&dup),
            Err(InputError::DuplicateEdge { ref path, .. }) if path == "$.weights[1]"
        ));
        let zero = json!({"rank": 2, "weights": [{"vertex": [], "gen": 1, "weight": 0}]});
        assert!(matches!(
            class_from_json(&zero),
            Err(InputError::ZeroWeight { .. })
        ));
        let gen = json!({"rank": 2, "weights": [{"vertex": [], "gen": 3, "weight": 1}]});
        assert!(matches!(
            class_from_json(&gen),
            Err(InputError::GenOutOfRange { gen: 3, .. })
        ));
        let rank0 = json!({"rank": 0, "weights": []});
        assert!(matches!(
            class_from_json(&rank0),
            Err(InputError::InvalidRank { .. })
        ));
    }
}
