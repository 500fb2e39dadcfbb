//! Finite subcomplexes of the splitting complex of a free group.
//!
//! Vertices are classes embeddable in the manifold, taken up to the deck
//! action and orientation reversal. Two vertices are joined when their
//! classes are disjoint in the manifold. Higher simplices follow the flag
//! rule: a set of vertices spans a simplex when its members are pairwise
//! joined. These are reported as pairwise-compatible cliques.

use alloc::vec::Vec;

use crate::decision::{disjoint_in_m, embeddable_in_m, DecisionConfig, ManifoldCertificate};
use crate::error::{Error, Result};
use crate::sphere_class::{Hull, SphereClass};

/// Canonical representative of the orbit of `class` under translation and
/// negation: the least, in class order, of the translates placing a hull
/// vertex at the identity and their negations.
pub fn normalize(class: &SphereClass) -> Result<SphereClass> {
    if class.is_zero() {
        return Err(Error::ZeroClass);
    }
    let hull = Hull::of(&[class])?;
    let mut best: Option<SphereClass> = None;
    for q in hull.vertices() {
        let moved = class.translate(&q.inverse())?;
        let flipped = moved.negate();
        for candidate in [moved, flipped] {
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    Ok(best.expect("hull of a nonzero class has vertices"))
}

/// Whether `b = ±g·a` for some group element `g`.
pub fn vertex_equivalent(a: &SphereClass, b: &SphereClass) -> Result<bool> {
    Ok(normalize(a)? == normalize(b)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingVertex {
    pub canonical: SphereClass,
    /// Input positions that normalize to this vertex, ascending.
    pub sources: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectionReason {
    ZeroClass,
    /// Fails the manifold embeddability test; the certificate explains why.
    NotEmbeddableInM(ManifoldCertificate),
    /// Evaluation failed outright (rank mismatch, overflow, ...).
    Failed(Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub index: usize,
    pub reason: RejectionReason,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexOutput {
    /// Sorted by canonical class.
    pub vertices: Vec<SplittingVertex>,
    /// Pairs `i < j` of vertex indices, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Every clique with at most `dim_cap + 1` vertices, each ascending,
    /// in lexicographic order.
    pub simplices: Vec<Vec<usize>>,
    pub rejected: Vec<Rejection>,
}

/// Assembles the subcomplex spanned by the given classes.
///
/// Invalid classes are reported in `rejected` rather than aborting.
pub fn build_complex(
    classes: &[SphereClass],
    dim_cap: usize,
    config: &DecisionConfig,
) -> ComplexOutput {
    let mut rejected = Vec::new();
    let mut survivors: Vec<(SphereClass, usize)> = Vec::new();
    let rank = classes.first().map(|c| c.rank());
    for (index, class) in classes.iter().enumerate() {
        if class.is_zero() {
            rejected.push(Rejection {
                index,
                reason: RejectionReason::ZeroClass,
            });
            continue;
        }
        if let Some(rank) = rank.filter(|r| *r != class.rank()) {
            rejected.push(Rejection {
                index,
                reason: RejectionReason::Failed(Error::RankMismatch {
                    left: rank.get(),
                    right: class.rank().get(),
                }),
            });
            continue;
        }
        let outcome = embeddable_in_m(class, config).and_then(|d| {
            if d.verdict {
                normalize(class).map(Ok)
            } else {
                Ok(Err(d.certificate))
            }
        });
        match outcome {
            Ok(Ok(canonical)) => survivors.push((canonical, index)),
            Ok(Err(cert)) => rejected.push(Rejection {
                index,
                reason: RejectionReason::NotEmbeddableInM(cert),
            }),
            Err(e) => rejected.push(Rejection {
                index,
                reason: RejectionReason::Failed(e),
            }),
        }
    }

    survivors.sort();
    let mut vertices: Vec<SplittingVertex> = Vec::new();
    for (canonical, index) in survivors {
        match vertices.last_mut() {
            Some(v) if v.canonical == canonical => v.sources.push(index),
            _ => vertices.push(SplittingVertex {
                canonical,
                sources: alloc::vec![index],
            }),
        }
    }

    let n = vertices.len();
    let mut adjacent = alloc::vec![alloc::vec![false; n]; n];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = &vertices[i].canonical;
            let b = &vertices[j].canonical;
            // Both passed the embeddability test, so only evaluation
            // failures can surface here; treat them as non-adjacent.
            if let Ok(d) = disjoint_in_m(a, b, config) {
                if d.verdict {
                    adjacent[i][j] = true;
                    adjacent[j][i] = true;
                    edges.push((i, j));
                }
            }
        }
    }

    let mut simplices = Vec::new();
    let mut current = Vec::new();
    extend_cliques(&adjacent, dim_cap + 1, 0, &mut current, &mut simplices);

    ComplexOutput {
        vertices,
        edges,
        simplices,
        rejected,
    }
}

/// Depth-first enumeration of cliques in lexicographic order.
fn extend_cliques(
    adjacent: &[Vec<bool>],
    max_size: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == max_size {
        return;
    }
    for v in start..adjacent.len() {
        if current.iter().all(|&u| adjacent[u][v]) {
            current.push(v);
            out.push(current.clone());
            extend_cliques(adjacent, max_size, v + 1, current, out);
            current.pop();
        }
    }
}
