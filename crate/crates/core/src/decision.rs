//! Certified decision procedures for embedded and disjoint spheres.
//!
//! Quantifiers over proper paths become quantifiers over ordered pairs of
//! distinct boundary vertices of the relevant hull, and quantifiers over
//! deck transformations become quantifiers over the finite set of group
//! elements moving one hull onto another. Every negative verdict carries a
//! witness that [`CoverEmbedCertificate::validate`] and friends recheck by
//! direct recomputation of intersection numbers along geodesics.
//!
//! Witnesses are chosen deterministically: boundary pairs `(source, target)`
//! with `source < target` are scanned in lexicographic order, and translates
//! in ascending order, both under the shortlex order on words.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Operand, Result};
use crate::free_group::{ball, Word};
use crate::sphere_class::{pair_intersection_number, EndPair, Hull, SphereClass};

/// Tunables shared by the manifold-level procedures.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecisionConfig {
    /// Also check translates whose hull lies within this tree distance of
    /// the other hull. Zero checks exactly the translates sharing a vertex.
    pub overlap_radius: usize,
}

impl DecisionConfig {
    pub fn with_overlap_radius(overlap_radius: usize) -> Self {
        DecisionConfig { overlap_radius }
    }
}

/// A verdict together with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision<C> {
    pub verdict: bool,
    pub certificate: C,
}

/// An end pair and the intersection numbers of its paths with each class
/// under consideration, in argument order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub pair: EndPair,
    pub values: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverEmbedCertificate {
    /// Boundary vertices split into two sides: paths between vertices on the
    /// same side meet the class zero times, paths across meet it once.
    Positive { sides: BTreeMap<Word, Side> },
    /// A pair whose intersection number has absolute value at least two.
    Negative { witness: Witness },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverDisjointCertificate {
    Positive,
    /// Paths meeting both classes with equal signs and with opposite signs.
    Negative {
        same_sign: Witness,
        opposite_sign: Witness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerCertificate {
    Embed(CoverEmbedCertificate),
    Disjoint(CoverDisjointCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ManifoldCertificate {
    /// Translates that were examined (besides those excluded by symmetry).
    Positive { checked: Vec<Word> },
    /// `g` is the translate whose cover test failed; the identity when the
    /// class itself fails the cover test.
    Negative { g: Word, inner: InnerCertificate },
}

fn nonzero(class: &SphereClass) -> Result<()> {
    if class.is_zero() {
        Err(Error::ZeroClass)
    } else {
        Ok(())
    }
}

fn difference(phi: &BTreeMap<Word, i64>, source: &Word, target: &Word) -> Result<i64> {
    phi[target].checked_sub(phi[source]).ok_or(Error::Overflow)
}

/// Decides whether the class is represented by an embedded sphere in the
/// universal cover: every proper path must meet it 0, 1 or -1 times.
pub fn embeddable_in_cover(class: &SphereClass) -> Result<Decision<CoverEmbedCertificate>> {
    nonzero(class)?;
    let hull = Hull::of(&[class])?;
    let phi = hull.potential(class)?;
    let boundary: Vec<&Word> = hull.boundary().iter().collect();

    let mut anchor = None;
    for (i, p) in boundary.iter().enumerate() {
        for q in &boundary[i + 1..] {
            let value = difference(&phi, p, q)?;
            if value.unsigned_abs() >= 2 {
                let witness = Witness {
                    pair: EndPair::new((*p).clone(), (*q).clone()),
                    values: vec![value],
                };
                return Ok(Decision {
                    verdict: false,
                    certificate: CoverEmbedCertificate::Negative { witness },
                });
            }
            if value != 0 && anchor.is_none() {
                anchor = Some(*p);
            }
        }
    }

    // Two-class structure: the side of q is fixed by the value from the
    // anchor, which all nonzero values share the sign of.
    let anchor = anchor.unwrap_or(boundary[0]);
    let mut sides = BTreeMap::new();
    for q in &boundary {
        let side = if difference(&phi, anchor, q)? == 0 {
            Side::One
        } else {
            Side::Two
        };
        sides.insert((*q).clone(), side);
    }
    Ok(Decision {
        verdict: true,
        certificate: CoverEmbedCertificate::Positive { sides },
    })
}

/// Cover disjointness without checking that both classes are embeddable.
fn cover_disjoint_unchecked(
    a: &SphereClass,
    b: &SphereClass,
) -> Result<Decision<CoverDisjointCertificate>> {
    let hull = Hull::of(&[a, b])?;
    let phi_a = hull.potential(a)?;
    let phi_b = hull.potential(b)?;
    let boundary: Vec<&Word> = hull.boundary().iter().collect();

    let mut same_sign = None;
    let mut opposite_sign = None;
    'scan: for (i, p) in boundary.iter().enumerate() {
        for q in &boundary[i + 1..] {
            let va = difference(&phi_a, p, q)?;
            let vb = difference(&phi_b, p, q)?;
            if va == 0 || vb == 0 {
                continue;
            }
            let slot = if (va > 0) == (vb > 0) {
                &mut same_sign
            } else {
                &mut opposite_sign
            };
            if slot.is_none() {
                *slot = Some(Witness {
                    pair: EndPair::new((*p).clone(), (*q).clone()),
                    values: vec![va, vb],
                });
                if same_sign.is_some() && opposite_sign.is_some() {
                    break 'scan;
                }
            }
        }
    }

    Ok(match (same_sign, opposite_sign) {
        (Some(same_sign), Some(opposite_sign)) => Decision {
            verdict: false,
            certificate: CoverDisjointCertificate::Negative {
                same_sign,
                opposite_sign,
            },
        },
        _ => Decision {
            verdict: true,
            certificate: CoverDisjointCertificate::Positive,
        },
    })
}

/// Decides whether two classes, each represented by an embedded sphere in
/// the universal cover, are represented by disjoint embedded spheres there.
///
/// This is the case exactly when no two proper paths meet both classes once,
/// one with equal signs and one with opposite signs.
pub fn disjoint_in_cover(
    a: &SphereClass,
    b: &SphereClass,
) -> Result<Decision<CoverDisjointCertificate>> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank().get(),
            right: b.rank().get(),
        });
    }
    if !embeddable_in_cover(a)?.verdict {
        return Err(Error::NotEmbeddable(Operand::First));
    }
    if !embeddable_in_cover(b)?.verdict {
        return Err(Error::NotEmbeddable(Operand::Second));
    }
    cover_disjoint_unchecked(a, b)
}

/// The group elements `g` for which `g * h2` comes within `radius` of `h1`.
///
/// With radius zero these are exactly the products `p * q^-1` of a vertex
/// `p` of `h1` and a vertex `q` of `h2`.
pub fn overlap_elements(h1: &Hull, h2: &Hull, radius: usize) -> Result<BTreeSet<Word>> {
    if h1.vertices().is_empty() || h2.vertices().is_empty() {
        return Err(Error::EmptySupport);
    }
    if h1.rank() != h2.rank() {
        return Err(Error::RankMismatch {
            left: h1.rank().get(),
            right: h2.rank().get(),
        });
    }
    let offsets = ball(h1.rank(), radius);
    let mut out = BTreeSet::new();
    for q in h2.vertices() {
        let q_inv = q.inverse();
        for p in h1.vertices() {
            for offset in &offsets {
                out.insert(p.multiply(offset).multiply(&q_inv));
            }
        }
    }
    Ok(out)
}

/// Decides whether the class is represented by an embedded sphere in the
/// manifold: it must embed in the cover, disjointly from each of its
/// translates whose hull meets its own.
///
/// `g` and `g^-1` give the same answer, so only the smaller of each such
/// pair is checked.
pub fn embeddable_in_m(
    class: &SphereClass,
    config: &DecisionConfig,
) -> Result<Decision<ManifoldCertificate>> {
    let cover = embeddable_in_cover(class)?;
    if !cover.verdict {
        return Ok(Decision {
            verdict: false,
            certificate: ManifoldCertificate::Negative {
                g: Word::identity(),
                inner: InnerCertificate::Embed(cover.certificate),
            },
        });
    }
    let hull = Hull::of(&[class])?;
    let checked: Vec<Word> = overlap_elements(&hull, &hull, config.overlap_radius)?
        .into_iter()
        .filter(|g| !g.is_identity() && *g < g.inverse())
        .collect();
    for g in &checked {
        let moved = class.translate(g)?;
        let result = cover_disjoint_unchecked(class, &moved)?;
        if !result.verdict {
            return Ok(Decision {
                verdict: false,
                certificate: ManifoldCertificate::Negative {
                    g: g.clone(),
                    inner: InnerCertificate::Disjoint(result.certificate),
                },
            });
        }
    }
    Ok(Decision {
        verdict: true,
        certificate: ManifoldCertificate::Positive { checked },
    })
}

/// Decides whether two classes, each represented by an embedded sphere in
/// the manifold, are represented by disjoint embedded spheres there.
///
/// Translates `g * b` whose hull is vertex-disjoint from the hull of `a`
/// pass automatically, so only the overlap set is checked.
pub fn disjoint_in_m(
    a: &SphereClass,
    b: &SphereClass,
    config: &DecisionConfig,
) -> Result<Decision<ManifoldCertificate>> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank().get(),
            right: b.rank().get(),
        });
    }
    if !embeddable_in_m(a, config)?.verdict {
        return Err(Error::NotEmbeddableInM(Operand::First));
    }
    if !embeddable_in_m(b, config)?.verdict {
        return Err(Error::NotEmbeddableInM(Operand::Second));
    }
    let hull_a = Hull::of(&[a])?;
    let hull_b = Hull::of(&[b])?;
    let checked: Vec<Word> = overlap_elements(&hull_a, &hull_b, config.overlap_radius)?
        .into_iter()
        .collect();
    for g in &checked {
        let moved = b.translate(g)?;
        let result = cover_disjoint_unchecked(a, &moved)?;
        if !result.verdict {
            return Ok(Decision {
                verdict: false,
                certificate: ManifoldCertificate::Negative {
                    g: g.clone(),
                    inner: InnerCertificate::Disjoint(result.certificate),
                },
            });
        }
    }
    Ok(Decision {
        verdict: true,
        certificate: ManifoldCertificate::Positive { checked },
    })
}

fn recompute(witness: &Witness, classes: &[&SphereClass]) -> Result<bool> {
    if witness.pair.source == witness.pair.target || witness.values.len() != classes.len() {
        return Ok(false);
    }
    for (class, &expected) in classes.iter().zip(&witness.values) {
        if pair_intersection_number(&witness.pair, class)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Witness {
    /// Rechecks the recorded values along the pair's geodesic.
    pub fn validate(&self, classes: &[&SphereClass]) -> Result<bool> {
        recompute(self, classes)
    }
}

impl CoverEmbedCertificate {
    /// Rechecks the certificate against the class by direct recomputation.
    ///
    /// A negative certificate must cite a pair meeting the class at least
    /// twice. A positive one must cover the boundary of the hull and split
    /// it into exactly the zero / unit pattern of the two sides.
    pub fn validate(&self, class: &SphereClass) -> Result<bool> {
        match self {
            CoverEmbedCertificate::Negative { witness } => {
                Ok(recompute(witness, &[class])? && witness.values[0].unsigned_abs() >= 2)
            }
            CoverEmbedCertificate::Positive { sides } => {
                let hull = Hull::of(&[class])?;
                if !sides.keys().eq(hull.boundary().iter()) {
                    return Ok(false);
                }
                for (u, su) in sides {
                    for (v, sv) in sides {
                        let value = class.value(u, v)?;
                        let ok = if su == sv {
                            value == 0
                        } else {
                            value.unsigned_abs() == 1
                        };
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }
}

impl CoverDisjointCertificate {
    /// Rechecks the witness values; a positive certificate carries nothing
    /// to check.
    pub fn validate(&self, a: &SphereClass, b: &SphereClass) -> Result<bool> {
        match self {
            CoverDisjointCertificate::Positive => Ok(true),
            CoverDisjointCertificate::Negative {
                same_sign,
                opposite_sign,
            } => {
                let shape = |w: &Witness, same: bool| {
                    w.values.len() == 2
                        && w.values[0].unsigned_abs() == 1
                        && w.values[1].unsigned_abs() == 1
                        && ((w.values[0] == w.values[1]) == same)
                };
                Ok(shape(same_sign, true)
                    && shape(opposite_sign, false)
                    && recompute(same_sign, &[a, b])?
                    && recompute(opposite_sign, &[a, b])?)
            }
        }
    }
}

impl ManifoldCertificate {
    /// Rechecks a certificate produced by [`embeddable_in_m`].
    pub fn validate_embedding(&self, class: &SphereClass) -> Result<bool> {
        match self {
            ManifoldCertificate::Positive { .. } => Ok(true),
            ManifoldCertificate::Negative { g, inner } => match inner {
                InnerCertificate::Embed(cert) => Ok(g.is_identity()
                    && cert.validate(class)?
                    && !matches!(cert, CoverEmbedCertificate::Positive { .. })),
                InnerCertificate::Disjoint(cert) => Ok(!g.is_identity()
                    && matches!(cert, CoverDisjointCertificate::Negative { .. })
                    && cert.validate(class, &class.translate(g)?)?),
            },
        }
    }

    /// Rechecks a certificate produced by [`disjoint_in_m`].
    pub fn validate_disjointness(&self, a: &SphereClass, b: &SphereClass) -> Result<bool> {
        match self {
            ManifoldCertificate::Positive { .. } => Ok(true),
            ManifoldCertificate::Negative { g, inner } => match inner {
                InnerCertificate::Embed(_) => Ok(false),
                InnerCertificate::Disjoint(cert) => {
                    Ok(matches!(cert, CoverDisjointCertificate::Negative { .. })
                        && cert.validate(a, &b.translate(g)?)?)
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::Rank;
    use crate::sphere_class::Edge;

    fn rank(k: u32) -> Rank {
        Rank::new(k).unwrap()
    }

    fn w(values: &[i64]) -> Word {
        Word::from_reduced(rank(4), values).unwrap()
    }

    fn class(entries: &[(&[i64], u32, i64)]) -> SphereClass {
        SphereClass::new(
            rank(2),
            entries.iter().map(|(b, g, x)| (Edge::new(w(b), *g), *x)),
        )
        .unwrap()
    }

    fn witness(s: &[i64], t: &[i64], values: &[i64]) -> Witness {
        Witness {
            pair: EndPair::new(w(s), w(t)),
            values: values.to_vec(),
        }
    }

    fn config() -> DecisionConfig {
        DecisionConfig::default()
    }

    #[test]
    fn cover_embed_generator() {
        let a = class(&[(&[], 1, 1)]);
        let d = embeddable_in_cover(&a).unwrap();
        assert!(d.verdict);
        let CoverEmbedCertificate::Positive { sides } = &d.certificate else {
            panic!("expected positive certificate");
        };
        assert_eq!(sides[&w(&[])], Side::One);
        assert_eq!(sides[&w(&[1])], Side::Two);
        assert!(d.certificate.validate(&a).unwrap());
    }

    #[test]
    fn cover_embed_negative_examples() {
        let a = class(&[(&[], 1, 2)]);
        let d = embeddable_in_cover(&a).unwrap();
        assert!(!d.verdict);
        assert_eq!(
            d.certificate,
            CoverEmbedCertificate::Negative {
                witness: witness(&[], &[1], &[2])
            }
        );
        assert!(d.certificate.validate(&a).unwrap());

        let b = class(&[(&[], 1, 1), (&[1], 1, 1)]);
        let d = embeddable_in_cover(&b).unwrap();
        assert!(!d.verdict);
        assert_eq!(
            d.certificate,
            CoverEmbedCertificate::Negative {
                witness: witness(&[], &[1, 1], &[2])
            }
        );
    }

    #[test]
    fn cover_embed_dipole() {
        let a = class(&[(&[], 1, 1), (&[1], 1, -1)]);
        let d = embeddable_in_cover(&a).unwrap();
        assert!(d.verdict);
        assert!(d.certificate.validate(&a).unwrap());
    }

    #[test]
    fn zero_class_is_rejected() {
        let z = SphereClass::zero(rank(2));
        assert_eq!(embeddable_in_cover(&z), Err(Error::ZeroClass));
        assert_eq!(embeddable_in_m(&z, &config()), Err(Error::ZeroClass));
        let a = class(&[(&[], 1, 1)]);
        assert_eq!(disjoint_in_cover(&a, &z), Err(Error::ZeroClass));
    }

    #[test]
    fn disjoint_in_cover_examples() {
        let a = class(&[(&[], 1, 1)]);
        assert!(
            disjoint_in_cover(&a, &class(&[(&[1], 1, 1)]))
                .unwrap()
                .verdict
        );
        assert!(
            disjoint_in_cover(&a, &class(&[(&[], 2, 1)]))
                .unwrap()
                .verdict
        );

        let b = class(&[(&[], 2, 1), (&[1], 2, 1)]);
        let d = disjoint_in_cover(&a, &b).unwrap();
        assert!(!d.verdict);
        assert_eq!(
            d.certificate,
            CoverDisjointCertificate::Negative {
                same_sign: witness(&[], &[1, 2], &[1, 1]),
                opposite_sign: witness(&[1], &[2], &[-1, 1]),
            }
        );
        assert!(d.certificate.validate(&a, &b).unwrap());
    }

    #[test]
    fn disjoint_in_cover_preconditions() {
        let a = class(&[(&[], 1, 1)]);
        let bad = class(&[(&[], 1, 2)]);
        assert_eq!(
            disjoint_in_cover(&bad, &a),
            Err(Error::NotEmbeddable(Operand::First))
        );
        assert_eq!(
            disjoint_in_cover(&a, &bad),
            Err(Error::NotEmbeddable(Operand::Second))
        );
        let other = SphereClass::single(rank(3), Edge::new(w(&[]), 1), 1).unwrap();
        assert!(matches!(
            disjoint_in_cover(&a, &other),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn overlap_examples() {
        let h = Hull::of(&[&class(&[(&[], 1, 1)])]).unwrap();
        let set = overlap_elements(&h, &h, 0).unwrap();
        assert_eq!(set, [w(&[]), w(&[1]), w(&[-1])].into_iter().collect());

        let h = Hull::of(&[&class(&[(&[], 1, 1), (&[1], 1, 1)])]).unwrap();
        let set = overlap_elements(&h, &h, 0).unwrap();
        assert_eq!(
            set,
            [w(&[]), w(&[1]), w(&[-1]), w(&[1, 1]), w(&[-1, -1])]
                .into_iter()
                .collect()
        );

        let h1 = Hull::of(&[&class(&[(&[], 1, 1)])]).unwrap();
        let h2 = Hull::of(&[&class(&[(&[2, 2], 1, 1)])]).unwrap();
        let set = overlap_elements(&h1, &h2, 0).unwrap();
        assert_eq!(
            set,
            [w(&[-2, -2]), w(&[1, -2, -2]), w(&[-1, -2, -2])]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn overlap_radius_one_adds_neighbouring_translates() {
        let h = Hull::of(&[&class(&[(&[], 1, 1)])]).unwrap();
        let set = overlap_elements(&h, &h, 1).unwrap();
        // Every element moving [] or [1] to within distance one of {[], [1]}.
        for g in &set {
            let moved = [g.clone(), g.multiply(&w(&[1]))];
            let near = moved
                .iter()
                .any(|m| h.vertices().iter().any(|v| v.distance(m) <= 1));
            assert!(near, "{g}");
        }
        assert!(set.contains(&w(&[2])));
        assert!(set.contains(&w(&[1, 1])));
        assert!(!set.contains(&w(&[2, 2])));
    }

    #[test]
    fn embeddable_in_m_examples() {
        assert!(
            embeddable_in_m(&class(&[(&[], 1, 1)]), &config())
                .unwrap()
                .verdict
        );

        let b = class(&[(&[], 2, 1), (&[1], 2, 1)]);
        let d = embeddable_in_m(&b, &config()).unwrap();
        assert!(!d.verdict);
        assert_eq!(
            d.certificate,
            ManifoldCertificate::Negative {
                g: w(&[1]),
                inner: InnerCertificate::Disjoint(CoverDisjointCertificate::Negative {
                    same_sign: witness(&[], &[1, 2], &[1, 1]),
                    opposite_sign: witness(&[2], &[1, 1, 2], &[-1, 1]),
                }),
            }
        );
        assert!(d.certificate.validate_embedding(&b).unwrap());

        let dipole = class(&[(&[], 1, 1), (&[1], 1, -1)]);
        let d = embeddable_in_m(&dipole, &config()).unwrap();
        assert!(d.verdict);
        assert_eq!(
            d.certificate,
            ManifoldCertificate::Positive {
                checked: vec![w(&[1]), w(&[1, 1])]
            }
        );
    }

    #[test]
    fn embeddable_in_m_reports_cover_failure_at_identity() {
        let a = class(&[(&[], 1, 3)]);
        let d = embeddable_in_m(&a, &config()).unwrap();
        assert!(!d.verdict);
        let ManifoldCertificate::Negative { g, inner } = &d.certificate else {
            panic!("expected negative certificate");
        };
        assert!(g.is_identity());
        assert!(matches!(inner, InnerCertificate::Embed(_)));
        assert!(d.certificate.validate_embedding(&a).unwrap());
    }

    #[test]
    fn disjoint_in_m_examples() {
        let a = class(&[(&[], 1, 1)]);
        let b = class(&[(&[], 2, 1)]);
        let dipole = class(&[(&[], 1, 1), (&[1], 1, -1)]);
        assert!(disjoint_in_m(&a, &a, &config()).unwrap().verdict);
        assert!(disjoint_in_m(&a, &b, &config()).unwrap().verdict);
        let d = disjoint_in_m(&dipole, &a, &config()).unwrap();
        assert!(d.verdict);
        let ManifoldCertificate::Positive { checked } = &d.certificate else {
            panic!("expected positive certificate");
        };
        // p * q^-1 with p in {[], [1], [1, 1]} and q in {[], [1]}.
        let powers: BTreeSet<Word> = [w(&[]), w(&[1]), w(&[1, 1]), w(&[-1])]
            .into_iter()
            .collect();
        assert_eq!(checked.iter().cloned().collect::<BTreeSet<_>>(), powers);
    }

    #[test]
    fn disjoint_in_m_preconditions() {
        let a = class(&[(&[], 1, 1)]);
        let b = class(&[(&[], 2, 1), (&[1], 2, 1)]);
        assert_eq!(
            disjoint_in_m(&a, &b, &config()),
            Err(Error::NotEmbeddableInM(Operand::Second))
        );
        assert_eq!(
            disjoint_in_m(&b, &a, &config()),
            Err(Error::NotEmbeddableInM(Operand::First))
        );
    }

    #[test]
    fn tampered_certificates_fail_validation() {
        let a = class(&[(&[], 1, 1)]);
        let b = class(&[(&[], 2, 1), (&[1], 2, 1)]);
        let forged = CoverDisjointCertificate::Negative {
            same_sign: witness(&[], &[1, 2], &[1, 1]),
            opposite_sign: witness(&[1], &[2], &[1, -1]),
        };
        assert!(!forged.validate(&a, &b).unwrap());
        let forged = CoverEmbedCertificate::Negative {
            witness: witness(&[], &[1], &[1]),
        };
        assert!(!forged.validate(&a).unwrap());
        let mut sides = BTreeMap::new();
        sides.insert(w(&[]), Side::One);
        sides.insert(w(&[1]), Side::One);
        assert!(!CoverEmbedCertificate::Positive { sides }
            .validate(&a)
            .unwrap());
    }
}
