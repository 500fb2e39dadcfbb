//! File formats and command-line front end for `spheres-core`.

pub mod cli;
pub mod document;
pub mod json;

pub use document::{parse_input, InputDocument, InputError, NamedClass};
