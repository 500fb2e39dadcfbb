//! Classes in the second homotopy group as finitely supported integer
//! weights on edges of the Cayley tree.
//!
//! Each tree edge is dual to a sphere crossing it once; a class is an
//! integer combination of those spheres. The algebraic intersection number
//! of a proper path with a class is the signed weight sum along the tree
//! geodesic the path induces.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::free_group::{geodesic, Letter, Rank, Step, Word};

/// An unoriented tree edge, stored as the unique pair `(base, gen)` such
/// that the edge joins `base` to `base * x_gen`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub base: Word,
    pub gen: u32,
}

impl Edge {
    pub fn new(base: Word, gen: u32) -> Self {
        Edge { base, gen }
    }

    /// Canonical edge of the traversal `from -> from * letter`, with sign
    /// `+1` when the traversal runs from `base` towards `base * x_gen`.
    pub fn of_step(from: &Word, letter: Letter) -> (Edge, i64) {
        if letter.is_positive() {
            (Edge::new(from.clone(), letter.gen()), 1)
        } else {
            (Edge::new(from.times(letter), letter.gen()), -1)
        }
    }

    pub fn head(&self) -> Word {
        self.base.times(Letter::generator(self.gen))
    }

    pub fn endpoints(&self) -> [Word; 2] {
        [self.base.clone(), self.head()]
    }

    /// Image under the deck transformation `g`.
    pub fn translate(&self, g: &Word) -> Edge {
        Edge::new(g.multiply(&self.base), self.gen)
    }
}

/// Same as [`Edge::of_step`], for a [`Step`].
pub fn canonical_edge(step: &Step) -> (Edge, i64) {
    Edge::of_step(&step.from, step.letter)
}

/// Orders nonzero integers as `1 < -1 < 2 < -2 < ...`.
fn weight_key(w: i64) -> (u64, bool) {
    (w.unsigned_abs(), w < 0)
}

/// A finitely supported integer weight system on tree edges.
///
/// Zero weights are never stored, so two classes are equal exactly when
/// their weight maps are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphereClass {
    rank: Rank,
    weights: BTreeMap<Edge, i64>,
}

impl SphereClass {
    pub fn zero(rank: Rank) -> Self {
        SphereClass {
            rank,
            weights: BTreeMap::new(),
        }
    }

    /// Builds a class from explicit entries, rejecting zero weights,
    /// repeated edges and labels outside the rank.
    pub fn new<I>(rank: Rank, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Edge, i64)>,
    {
        let mut weights = BTreeMap::new();
        for (edge, weight) in entries {
            if edge.gen == 0 || edge.gen > rank.get() {
                return Err(Error::GenOutOfRange {
                    gen: edge.gen,
                    rank: rank.get(),
                });
            }
            edge.base.check_rank(rank)?;
            if weight == 0 {
                return Err(Error::ZeroWeight);
            }
            if weights.insert(edge, weight).is_some() {
                return Err(Error::DuplicateEdge);
            }
        }
        Ok(SphereClass { rank, weights })
    }

    pub fn single(rank: Rank, edge: Edge, weight: i64) -> Result<Self> {
        SphereClass::new(rank, [(edge, weight)])
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, edge: &Edge) -> i64 {
        self.weights.get(edge).copied().unwrap_or(0)
    }

    /// Support edges with their weights, in edge order.
    pub fn weights(&self) -> impl Iterator<Item = (&Edge, i64)> + '_ {
        self.weights.iter().map(|(e, &w)| (e, w))
    }

    pub fn support(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.weights.keys()
    }

    fn check_same_rank(&self, other: &SphereClass) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank.get(),
                right: other.rank.get(),
            });
        }
        Ok(())
    }

    /// The deck transformation `A -> gA`: the weight of `(v, i)` in the
    /// image is the weight of `(g^-1 v, i)` here.
    pub fn translate(&self, g: &Word) -> Result<Self> {
        if g.max_gen() > self.rank.get() {
            return Err(Error::RankMismatch {
                left: self.rank.get(),
                right: g.max_gen(),
            });
        }
        Ok(SphereClass {
            rank: self.rank,
            weights: self
                .weights
                .iter()
                .map(|(e, &w)| (e.translate(g), w))
                .collect(),
        })
    }

    pub fn negate(&self) -> Self {
        SphereClass {
            rank: self.rank,
            weights: self.weights.iter().map(|(e, &w)| (e.clone(), -w)).collect(),
        }
    }

    pub fn checked_add(&self, other: &SphereClass) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut weights = self.weights.clone();
        for (edge, &w) in &other.weights {
            let slot = weights.entry(edge.clone()).or_insert(0);
            *slot = slot.checked_add(w).ok_or(Error::Overflow)?;
            if *slot == 0 {
                weights.remove(edge);
            }
        }
        Ok(SphereClass {
            rank: self.rank,
            weights,
        })
    }

    pub fn scale(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(SphereClass::zero(self.rank));
        }
        let mut weights = BTreeMap::new();
        for (edge, &w) in &self.weights {
            weights.insert(edge.clone(), w.checked_mul(n).ok_or(Error::Overflow)?);
        }
        Ok(SphereClass {
            rank: self.rank,
            weights,
        })
    }

    /// Signed weight sum along the geodesic from `u` to `v`.
    pub fn value(&self, u: &Word, v: &Word) -> Result<i64> {
        let mut sum: i64 = 0;
        for step in geodesic(u, v) {
            let (edge, sign) = canonical_edge(&step);
            let w = self.weight(&edge);
            if w != 0 {
                sum = sum.checked_add(sign * w).ok_or(Error::Overflow)?;
            }
        }
        Ok(sum)
    }
}

/// Canonical total order: rank, then support entries in edge order, with
/// weights ordered `1 < -1 < 2 < -2 < ...`, a shorter support winning ties.
impl Ord for SphereClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank.cmp(&other.rank).then_with(|| {
            let lhs = self.weights.iter().map(|(e, &w)| (e, weight_key(w)));
            let rhs = other.weights.iter().map(|(e, &w)| (e, weight_key(w)));
            lhs.cmp(rhs)
        })
    }
}

impl PartialOrd for SphereClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A proper-homotopy class of proper paths, represented by the boundary
/// vertices where its geodesic enters and leaves a hull.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndPair {
    pub source: Word,
    pub target: Word,
}

impl EndPair {
    pub fn new(source: Word, target: Word) -> Self {
        EndPair { source, target }
    }

    pub fn reversed(&self) -> Self {
        EndPair {
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }
}

/// Algebraic intersection number of the proper paths joining the pair with
/// the class.
pub fn pair_intersection_number(pair: &EndPair, class: &SphereClass) -> Result<i64> {
    class.value(&pair.source, &pair.target)
}

/// Minimal finite subtree spanning the support of one or more classes.
///
/// `boundary` holds the vertices having at least one tree edge that leaves
/// the subtree; these are where proper paths enter and exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    rank: Rank,
    vertices: BTreeSet<Word>,
    edges: BTreeSet<Edge>,
    boundary: BTreeSet<Word>,
}

impl Hull {
    /// Hull of the union of the supports.
    pub fn of(classes: &[&SphereClass]) -> Result<Self> {
        let first = classes.first().ok_or(Error::EmptySupport)?;
        for c in classes {
            first.check_same_rank(c)?;
        }
        let endpoints: BTreeSet<Word> = classes
            .iter()
            .flat_map(|c| c.support())
            .flat_map(|e| e.endpoints())
            .collect();
        if endpoints.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(Hull::spanning(first.rank, &endpoints))
    }

    /// Minimal subtree containing the given vertices: the union of the
    /// geodesics from one of them to all others.
    pub fn spanning(rank: Rank, points: &BTreeSet<Word>) -> Self {
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        if let Some(root) = points.first() {
            vertices.insert(root.clone());
            for p in points {
                for step in geodesic(root, p) {
                    vertices.insert(step.to());
                    edges.insert(canonical_edge(&step).0);
                }
            }
        }
        let mut degree: BTreeMap<&Word, usize> = BTreeMap::new();
        let heads: Vec<(Word, Word)> = edges.iter().map(|e| (e.base.clone(), e.head())).collect();
        for (a, b) in &heads {
            *degree.entry(vertices.get(a).unwrap()).or_default() += 1;
            *degree.entry(vertices.get(b).unwrap()).or_default() += 1;
        }
        let boundary = vertices
            .iter()
            .filter(|v| degree.get(v).copied().unwrap_or(0) < rank.valence())
            .cloned()
            .collect();
        Hull {
            rank,
            vertices,
            edges,
            boundary,
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn vertices(&self) -> &BTreeSet<Word> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn boundary(&self) -> &BTreeSet<Word> {
        &self.boundary
    }

    pub fn contains_edge(&self, edge: &Edge) -> bool {
        self.edges.contains(edge)
    }

    /// Hull neighbours of `v` together with the letter leading to them.
    pub fn neighbours<'a>(&'a self, v: &'a Word) -> impl Iterator<Item = (Letter, Word)> + 'a {
        self.rank.letters().filter_map(move |letter| {
            let (edge, _) = Edge::of_step(v, letter);
            self.edges
                .contains(&edge)
                .then(|| (letter, v.times(letter)))
        })
    }

    /// Largest tree distance between two hull vertices.
    pub fn diameter(&self) -> usize {
        let mut best = 0;
        for (i, u) in self.vertices.iter().enumerate() {
            for v in self.vertices.iter().skip(i + 1) {
                best = best.max(u.distance(v));
            }
        }
        best
    }

    /// Intersection numbers from the least hull vertex to every hull
    /// vertex. By additivity the number for a pair `(u, v)` is
    /// `potential[v] - potential[u]`.
    pub fn potential(&self, class: &SphereClass) -> Result<BTreeMap<Word, i64>> {
        let mut out = BTreeMap::new();
        let Some(root) = self.vertices.first() else {
            return Ok(out);
        };
        out.insert(root.clone(), 0i64);
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(v) = queue.pop_front() {
            let here = out[&v];
            for letter in self.rank.letters() {
                let (edge, sign) = Edge::of_step(&v, letter);
                if !self.edges.contains(&edge) {
                    continue;
                }
                let next = v.times(letter);
                if out.contains_key(&next) {
                    continue;
                }
                let value = here
                    .checked_add(sign * class.weight(&edge))
                    .ok_or(Error::Overflow)?;
                out.insert(next.clone(), value);
                queue.push_back(next);
            }
        }
        Ok(out)
    }
}
