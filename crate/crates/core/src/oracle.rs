//! Brute-force validators for the decision procedures.
//!
//! The oracle evaluates intersection numbers literally, by walking every
//! edge path (backtracking included) inside a hull between boundary
//! vertices, and never uses the geodesic shortcut the decision procedures
//! rely on. Seeded instance generation lives here too.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::free_group::{Letter, Rank, Step, Word};
use crate::sphere_class::{
    canonical_edge, pair_intersection_number, Edge, EndPair, Hull, SphereClass,
};

/// Largest path length [`enumerate_paths`] accepts.
pub const MAX_LEN_LIMIT: usize = 24;

/// Signed weight sum over every traversed edge, with multiplicity.
pub fn path_intersection_sum(path: &[Step], class: &SphereClass) -> Result<i64> {
    let mut sum: i64 = 0;
    let mut at: Option<Word> = None;
    for (index, step) in path.iter().enumerate() {
        if let Some(prev) = &at {
            if *prev != step.from {
                return Err(Error::BrokenPath { index });
            }
        }
        let (edge, sign) = canonical_edge(step);
        sum = sum
            .checked_add(sign * class.weight(&edge))
            .ok_or(Error::Overflow)?;
        at = Some(step.to());
    }
    Ok(sum)
}

/// An edge path inside a hull. `start` is kept so that zero-length paths
/// still know where they are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePath {
    pub start: Word,
    pub steps: Vec<Step>,
}

impl EdgePath {
    pub fn end(&self) -> Word {
        self.steps
            .last()
            .map_or_else(|| self.start.clone(), Step::to)
    }
}

/// Depth-first walker over all edge paths of bounded length inside a hull
/// that start and end at boundary vertices.
pub struct PathEnumerator {
    words: Vec<Word>,
    adjacency: Vec<Vec<(usize, Letter)>>,
    boundary: Vec<bool>,
    max_len: usize,
    next_start: usize,
    start: usize,
    // (vertex, next neighbour position)
    stack: Vec<(usize, usize)>,
    steps: Vec<Step>,
    pending_empty: bool,
}

/// Every edge path of length at most `max_len` in the hull whose endpoints
/// are both boundary vertices, including zero-length and backtracking ones.
pub fn enumerate_paths(hull: &Hull, max_len: usize) -> Result<PathEnumerator> {
    if hull.vertices().is_empty() {
        return Err(Error::EmptySupport);
    }
    if max_len > MAX_LEN_LIMIT {
        return Err(Error::LimitExceeded {
            requested: max_len,
            limit: MAX_LEN_LIMIT,
        });
    }
    let words: Vec<Word> = hull.vertices().iter().cloned().collect();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let adjacency = words
        .iter()
        .map(|v| {
            hull.neighbours(v)
                .map(|(letter, n)| (index[&n], letter))
                .collect()
        })
        .collect();
    let boundary = words.iter().map(|w| hull.boundary().contains(w)).collect();
    Ok(PathEnumerator {
        words,
        adjacency,
        boundary,
        max_len,
        next_start: 0,
        start: 0,
        stack: Vec::new(),
        steps: Vec::new(),
        pending_empty: false,
    })
}

impl PathEnumerator {
    /// Advances to the next path and borrows it, avoiding the copy that the
    /// `Iterator` implementation makes.
    pub fn next_path(&mut self) -> Option<(&Word, &[Step])> {
        loop {
            if self.pending_empty {
                self.pending_empty = false;
                return Some((&self.words[self.start], &self.steps));
            }
            let Some(&mut (v, ref mut pos)) = self.stack.last_mut() else {
                // Begin the walks from the next boundary vertex.
                let s = (self.next_start..self.words.len()).find(|&i| self.boundary[i])?;
                self.next_start = s + 1;
                self.start = s;
                self.stack.push((s, 0));
                self.pending_empty = true;
                continue;
            };
            if self.steps.len() < self.max_len && *pos < self.adjacency[v].len() {
                let (n, letter) = self.adjacency[v][*pos];
                *pos += 1;
                self.steps.push(Step::new(self.words[v].clone(), letter));
                self.stack.push((n, 0));
                if self.boundary[n] {
                    return Some((&self.words[self.start], &self.steps));
                }
            } else {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.steps.pop();
                }
            }
        }
    }
}

impl Iterator for PathEnumerator {
    type Item = EdgePath;

    fn next(&mut self) -> Option<EdgePath> {
        self.next_path().map(|(start, steps)| EdgePath {
            start: start.clone(),
            steps: steps.to_vec(),
        })
    }
}

/// Default walk length: long enough for every geodesic plus a few
/// backtracking detours.
pub fn default_max_len(hull: &Hull) -> usize {
    hull.diameter() + 4
}

/// Outcome of an exhaustive path check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub verdict: bool,
    pub paths: u64,
    /// Paths whose literal sum differs from the geodesic intersection
    /// number of their endpoints.
    pub mismatches: u64,
    /// First offending path, if the verdict is negative.
    pub witness: Option<EdgePath>,
}

struct PairCache<'a> {
    classes: &'a [&'a SphereClass],
    values: BTreeMap<(Word, Word), Vec<i64>>,
}

impl<'a> PairCache<'a> {
    fn get(&mut self, source: &Word, target: &Word) -> Result<&[i64]> {
        let key = (source.clone(), target.clone());
        if !self.values.contains_key(&key) {
            let pair = EndPair::new(source.clone(), target.clone());
            let mut row = Vec::with_capacity(self.classes.len());
            for class in self.classes {
                row.push(pair_intersection_number(&pair, class)?);
            }
            self.values.insert(key.clone(), row);
        }
        Ok(&self.values[&key])
    }
}

/// Walks every path and returns the literal sums per class, counting
/// disagreements with the geodesic intersection number.
fn exhaust<F>(
    hull: &Hull,
    classes: &[&SphereClass],
    max_len: usize,
    mut visit: F,
) -> Result<OracleReport>
where
    F: FnMut(&[i64]) -> bool,
{
    let mut paths = enumerate_paths(hull, max_len)?;
    let mut cache = PairCache {
        classes,
        values: BTreeMap::new(),
    };
    let mut report = OracleReport {
        verdict: true,
        ..OracleReport::default()
    };
    let mut sums = Vec::with_capacity(classes.len());
    while let Some((start, steps)) = paths.next_path() {
        report.paths += 1;
        sums.clear();
        for class in classes {
            sums.push(path_intersection_sum(steps, class)?);
        }
        let end = steps.last().map_or_else(|| start.clone(), Step::to);
        if cache.get(start, &end)? != sums.as_slice() {
            report.mismatches += 1;
        }
        if !visit(&sums) && report.witness.is_none() {
            report.verdict = false;
            report.witness = Some(EdgePath {
                start: start.clone(),
                steps: steps.to_vec(),
            });
        }
    }
    Ok(report)
}

/// Embeddability in the universal cover decided by exhausting edge paths:
/// negative as soon as some path meets the class twice or more.
pub fn oracle_embeddable_in_cover(
    class: &SphereClass,
    max_len: Option<usize>,
) -> Result<OracleReport> {
    if class.is_zero() {
        return Err(Error::ZeroClass);
    }
    let hull = Hull::of(&[class])?;
    let max_len = max_len.unwrap_or_else(|| default_max_len(&hull));
    exhaust(&hull, &[class], max_len, |sums| sums[0].unsigned_abs() <= 1)
}

/// Disjointness in the universal cover decided by exhausting edge paths:
/// negative when both a `(1, 1)`-type and a `(1, -1)`-type path occur.
pub fn oracle_disjoint_in_cover(
    a: &SphereClass,
    b: &SphereClass,
    max_len: Option<usize>,
) -> Result<OracleReport> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroClass);
    }
    let hull = Hull::of(&[a, b])?;
    let max_len = max_len.unwrap_or_else(|| default_max_len(&hull));
    let mut same = false;
    let mut opposite = false;
    let mut report = exhaust(&hull, &[a, b], max_len, |sums| {
        match (sums[0], sums[1]) {
            (1, 1) | (-1, -1) => same = true,
            (1, -1) | (-1, 1) => opposite = true,
            _ => {}
        }
        true
    })?;
    report.verdict = !(same && opposite);
    Ok(report)
}

/// Deterministic source of random test instances.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// A reduced word of length exactly `len`.
    pub fn word_of_len(&mut self, rank: Rank, len: usize) -> Word {
        let k = i64::from(rank.get());
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let gen = self.rng.gen_range(1..=k);
            let value = if self.rng.gen() { gen } else { -gen };
            let letter = Letter::new(value, rank).expect("in range");
            if letters.last() != Some(&letter.inverse()) {
                letters.push(letter);
            }
        }
        Word::from_letters(letters)
    }

    /// A reduced word with length uniform in `0..=max_len`.
    pub fn word(&mut self, rank: Rank, max_len: usize) -> Word {
        let len = self.rng.gen_range(0..=max_len);
        self.word_of_len(rank, len)
    }

    /// Between one and `support_bound` edges based in the ball of the
    /// given radius, with nonzero weights bounded by `weight_bound`.
    pub fn class(
        &mut self,
        rank: Rank,
        support_bound: usize,
        radius: usize,
        weight_bound: i64,
    ) -> SphereClass {
        let target = self.rng.gen_range(1..=support_bound.max(1));
        let mut weights: BTreeMap<Edge, i64> = BTreeMap::new();
        // Small balls may hold fewer edges than requested.
        for _ in 0..target * 8 {
            if weights.len() == target {
                break;
            }
            let base = self.word(rank, radius);
            let gen = self.rng.gen_range(1..=rank.get());
            let magnitude = self.rng.gen_range(1..=weight_bound.max(1));
            let weight = if self.rng.gen() {
                magnitude
            } else {
                -magnitude
            };
            weights.entry(Edge::new(base, gen)).or_insert(weight);
        }
        SphereClass::new(rank, weights).expect("generated entries are valid")
    }
}

/// Seeded random class; see [`Sampler::class`].
pub fn random_class(
    rank: Rank,
    support_bound: usize,
    radius: usize,
    weight_bound: i64,
    seed: u64,
) -> SphereClass {
    Sampler::new(seed).class(rank, support_bound, radius, weight_bound)
}
