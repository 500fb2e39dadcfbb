//! Command-line front end.
//!
//! Exit codes: 0 when a command ran and produced a report (a `false`
//! verdict included), 2 for invalid input or usage, 3 when a resource limit
//! or integer overflow stopped the computation.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use spheres_core::oracle::{default_max_len, oracle_embeddable_in_cover, EdgePath, Sampler};
use spheres_core::{
    build_complex, disjoint_in_cover, disjoint_in_m, embeddable_in_cover, embeddable_in_m,
    DecisionConfig, Hull, SphereClass,
};

use crate::document::{parse_input, InputDocument, InputError};
use crate::json::{
    complex_to_json, cover_disjoint_to_json, cover_embed_to_json, manifold_to_json, word_to_json,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "spheres",
    version,
    about = "Embedded sphere decisions in connected sums of S2 x S1"
)]
pub struct Cli {
    /// Input document; `-` reads standard input.
    #[arg(short, long, global = true, default_value = "-")]
    pub input: PathBuf,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Include witnesses in the report.
    #[arg(long, global = true)]
    pub certificate: bool,
    /// Also check translates whose hulls lie within this distance.
    #[arg(long, global = true, default_value_t = 0)]
    pub overlap_radius: usize,
    /// Largest simplex dimension reported by `complex`.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub dim_cap: u32,
    /// Seed for randomized oracle runs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide embeddability in the universal cover and in the manifold.
    Check { name: String },
    /// Decide disjointness of two classes in the manifold.
    Disjoint {
        first: String,
        second: String,
        /// Decide disjointness in the universal cover instead.
        #[arg(long)]
        cover_only: bool,
    },
    /// Build the splitting subcomplex spanned by all classes.
    Complex,
    /// Cross-check the cover decision against exhaustive path enumeration.
    /// Without a name, checks random classes at the document's rank.
    Oracle {
        name: Option<String>,
        #[arg(long)]
        max_len: Option<usize>,
        /// Number of random classes when no name is given.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("no class named \"{0}\"")]
    UnknownClass(String),
    #[error("{0}")]
    Core(#[from] spheres_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource_limit() => EXIT_RESOURCE,
            _ => EXIT_INVALID,
        }
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<R: Read>(cli: &Cli, stdin: R) -> Outcome {
    match read_document(cli, stdin).and_then(|doc| execute(cli, &doc)) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: render(&report, cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_document<R: Read>(cli: &Cli, mut stdin: R) -> Result<InputDocument, CliError> {
    let mut bytes = Vec::new();
    let io_error = |source| CliError::Io {
        path: cli.input.display().to_string(),
        source,
    };
    if cli.input.as_os_str() == "-" {
        stdin.read_to_end(&mut bytes).map_err(io_error)?;
    } else {
        bytes = std::fs::read(&cli.input).map_err(io_error)?;
    }
    Ok(parse_input(&bytes)?)
}

fn lookup<'a>(doc: &'a InputDocument, name: &str) -> Result<&'a SphereClass, CliError> {
    doc.get(name)
        .ok_or_else(|| CliError::UnknownClass(name.to_string()))
}

fn path_to_json(path: &EdgePath) -> Value {
    json!({
        "start": word_to_json(&path.start),
        "letters": path.steps.iter().map(|s| s.letter.value()).collect::<Vec<_>>(),
    })
}

pub fn execute(cli: &Cli, doc: &InputDocument) -> Result<Value, CliError> {
    let config = DecisionConfig::with_overlap_radius(cli.overlap_radius);
    match &cli.command {
        Command::Check { name } => {
            let class = lookup(doc, name)?;
            let cover = embeddable_in_cover(class)?;
            let manifold = embeddable_in_m(class, &config)?;
            let mut report = json!({
                "command": "check",
                "name": name,
                "verdict": manifold.verdict,
                "cover_verdict": cover.verdict,
                "overlap_radius": cli.overlap_radius,
            });
            if cli.certificate {
                report["certificate"] = manifold_to_json(&manifold.certificate);
                report["cover_certificate"] = cover_embed_to_json(&cover.certificate);
            }
            Ok(report)
        }
        Command::Disjoint {
            first,
            second,
            cover_only,
        } => {
            let a = lookup(doc, first)?;
            let b = lookup(doc, second)?;
            let (verdict, certificate) = if *cover_only {
                let d = disjoint_in_cover(a, b)?;
                (d.verdict, cover_disjoint_to_json(&d.certificate))
            } else {
                let d = disjoint_in_m(a, b, &config)?;
                (d.verdict, manifold_to_json(&d.certificate))
            };
            let mut report = json!({
                "command": "disjoint",
                "names": [first, second],
                "mode": if *cover_only { "cover" } else { "manifold" },
                "verdict": verdict,
            });
            if cli.certificate {
                report["certificate"] = certificate;
            }
            Ok(report)
        }
        Command::Complex => {
            let classes: Vec<SphereClass> = doc.classes.iter().map(|c| c.class.clone()).collect();
            let out = build_complex(&classes, cli.dim_cap as usize, &config);
            let mut report = complex_to_json(&out);
            report["command"] = json!("complex");
            report["names"] = json!(doc.classes.iter().map(|c| &c.name).collect::<Vec<_>>());
            Ok(report)
        }
        Command::Oracle {
            name: Some(name),
            max_len,
            ..
        } => {
            let class = lookup(doc, name)?;
            if class.is_zero() {
                return Err(spheres_core::Error::ZeroClass.into());
            }
            let hull = Hull::of(&[class])?;
            let max_len = max_len.unwrap_or_else(|| default_max_len(&hull));
            let geodesic = embeddable_in_cover(class)?;
            let oracle = oracle_embeddable_in_cover(class, Some(max_len))?;
            let mut report = json!({
                "command": "oracle",
                "name": name,
                "max_len": max_len,
                "paths": oracle.paths,
                "geodesic_verdict": geodesic.verdict,
                "oracle_verdict": oracle.verdict,
                "path_mismatches": oracle.mismatches,
                "verdict": geodesic.verdict == oracle.verdict && oracle.mismatches == 0,
            });
            if cli.certificate {
                report["witness"] = oracle.witness.as_ref().map_or(Value::Null, path_to_json);
            }
            Ok(report)
        }
        Command::Oracle {
            name: None,
            max_len,
            samples,
        } => {
            let mut sampler = Sampler::new(cli.seed);
            let mut disagreements = Vec::new();
            let mut mismatches = 0u64;
            let mut paths = 0u64;
            for i in 0..*samples {
                let class = sampler.class(doc.rank, 5, 3, 3);
                let geodesic = embeddable_in_cover(&class)?;
                let oracle = oracle_embeddable_in_cover(&class, *max_len)?;
                paths += oracle.paths;
                mismatches += oracle.mismatches;
                if geodesic.verdict != oracle.verdict {
                    disagreements.push(i);
                }
            }
            Ok(json!({
                "command": "oracle",
                "seed": cli.seed,
                "samples": samples,
                "paths": paths,
                "disagreements": disagreements,
                "path_mismatches": mismatches,
                "verdict": disagreements.is_empty() && mismatches == 0,
            }))
        }
    }
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            render_text(report, 0, &mut out);
            out
        }
    }
}

fn is_scalar_list(value: &Value) -> bool {
    match value {
        Value::Array(items) => items
            .iter()
            .all(|v| !v.is_object() && (!v.is_array() || is_scalar_list(v))),
        _ => !value.is_object(),
    }
}

/// Indented `key: value` lines; flat lists print inline as JSON.
fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                if is_scalar_list(v) {
                    out.push_str(&format!("{pad}{key}: {v}\n"));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render_text(v, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                if is_scalar_list(v) {
                    out.push_str(&format!("{pad}- {v}\n"));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    render_text(v, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_nests_objects() {
        let v = json!({"verdict": true, "certificate": {"g": [1], "kind": "x"}});
        let text = render(&v, Format::Text);
        assert_eq!(
            text,
            "certificate:\n  g: [1]\n  kind: \"x\"\nverdict: true\n"
        );
    }

    #[test]
    fn resource_errors_map_to_exit_three() {
        assert_eq!(
            CliError::Core(spheres_core::Error::Overflow).exit_code(),
            EXIT_RESOURCE
        );
        assert_eq!(
            CliError::Core(spheres_core::Error::ZeroClass).exit_code(),
            EXIT_INVALID
        );
        assert_eq!(CliError::UnknownClass("A".into()).exit_code(), EXIT_INVALID);
    }
}
