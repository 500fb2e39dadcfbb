//! Deciding which classes in the second homotopy group of a connected sum
//! of `k` copies of `S^2 x S^1` are represented by embedded spheres, and
//! which pairs by disjoint embedded spheres.
//!
//! Classes are finitely supported integer weights on the edges of the
//! Cayley tree of the free group of rank `k`. Every decision returns a
//! certificate that can be rechecked independently.

#![no_std]

extern crate alloc;

pub mod complex;
pub mod decision;
mod error;
pub mod free_group;
pub mod oracle;
pub mod sphere_class;

pub use complex::{build_complex, normalize, vertex_equivalent, ComplexOutput};
pub use decision::{
    disjoint_in_cover, disjoint_in_m, embeddable_in_cover, embeddable_in_m, overlap_elements,
    Decision, DecisionConfig,
};
pub use error::{Error, Operand, Result};
pub use free_group::{geodesic, Letter, Rank, Step, Word};
pub use sphere_class::{pair_intersection_number, Edge, EndPair, Hull, SphereClass};
