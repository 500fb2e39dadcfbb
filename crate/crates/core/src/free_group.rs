//! Free groups and their Cayley trees.
//!
//! Words are immutable, freely reduced sequences of signed generator
//! indices: `i` stands for the generator `x_i` and `-i` for its inverse.
//! The Cayley tree is never built; its vertices are words and its edges
//! join `w` to `w * x_i`, so every geodesic is read off from word structure.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Number of free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u32);

impl Rank {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(Rank(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Valence of every vertex of the Cayley tree.
    pub fn valence(self) -> usize {
        2 * self.0 as usize
    }

    /// All `2k` letters, in letter order `x_1, x_1^-1, x_2, ...`.
    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (1..=self.0 as i32).flat_map(|i| [Letter(i), Letter(-i)])
    }
}

/// A generator or its inverse.
///
/// Letters order as `x_1 < x_1^-1 < x_2 < x_2^-1 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: i64, rank: Rank) -> Result<Self> {
        if value == 0 || value.unsigned_abs() > u64::from(rank.get()) {
            return Err(Error::LetterOutOfRange {
                value,
                rank: rank.get(),
            });
        }
        Ok(Letter(value as i32))
    }

    /// The positive letter `x_gen`.
    pub fn generator(gen: u32) -> Self {
        debug_assert!(gen >= 1);
        Letter(gen as i32)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// Index of the underlying generator, in `1..=k`.
    pub fn gen(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    fn key(self) -> (u32, bool) {
        (self.gen(), self.0 < 0)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A freely reduced word; equivalently an element of the free group and a
/// vertex of its Cayley tree.
///
/// Words are ordered shortlex: shorter words first, then lexicographically
/// in letter order, so `[] < [1] < [-1] < [2] < [1, 1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces a sequence of raw letter values.
    pub fn reduce(rank: Rank, values: &[i64]) -> Result<Self> {
        let mut word = Word::identity();
        for &value in values {
            word.push(Letter::new(value, rank)?);
        }
        Ok(word)
    }

    /// Accepts raw letter values only if they already form a reduced word.
    pub fn from_reduced(rank: Rank, values: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(values.len());
        for &value in values {
            let letter = Letter::new(value, rank)?;
            if letters.last() == Some(&letter.inverse()) {
                return Err(Error::NonReducedWord);
            }
            letters.push(letter);
        }
        Ok(Word(letters))
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut word = Word::identity();
        for letter in letters {
            word.push(letter);
        }
        word
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn values(&self) -> impl Iterator<Item = i32> + '_ {
        self.0.iter().map(|l| l.value())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Same as [`Word::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Largest generator index occurring in the word, or 0 for the identity.
    pub fn max_gen(&self) -> u32 {
        self.0.iter().map(|l| l.gen()).max().unwrap_or(0)
    }

    /// Fails if some letter does not exist in the free group of this rank.
    pub fn check_rank(&self, rank: Rank) -> Result<()> {
        match self.0.iter().find(|l| l.gen() > rank.get()) {
            Some(l) => Err(Error::LetterOutOfRange {
                value: i64::from(l.value()),
                rank: rank.get(),
            }),
            None => Ok(()),
        }
    }

    fn push(&mut self, letter: Letter) {
        if self.0.last() == Some(&letter.inverse()) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    /// `self * x` for a single letter: the tree neighbour across that letter.
    pub fn times(&self, letter: Letter) -> Self {
        let mut out = self.clone();
        out.push(letter);
        out
    }

    pub fn multiply(&self, other: &Word) -> Self {
        let cancel = self
            .0
            .iter()
            .rev()
            .zip(other.0.iter())
            .take_while(|(a, b)| a.inverse() == **b)
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * cancel);
        letters.extend_from_slice(&self.0[..self.len() - cancel]);
        letters.extend_from_slice(&other.0[cancel..]);
        Word(letters)
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn prefix(&self, len: usize) -> Self {
        Word(self.0[..len].to_vec())
    }

    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// Tree distance between two vertices.
    pub fn distance(&self, other: &Word) -> usize {
        self.len() + other.len() - 2 * self.common_prefix_len(other)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", l.value())?;
        }
        f.write_str("]")
    }
}

/// One edge traversal in the Cayley tree: from `from` to `from * letter`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub from: Word,
    pub letter: Letter,
}

impl Step {
    pub fn new(from: Word, letter: Letter) -> Self {
        Step { from, letter }
    }

    pub fn to(&self) -> Word {
        self.from.times(self.letter)
    }

    /// The same edge traversed the other way.
    pub fn reversed(&self) -> Self {
        Step {
            from: self.to(),
            letter: self.letter.inverse(),
        }
    }
}

/// The unique backtracking-free edge path from `u` to `v`: down from `u` to
/// the longest common prefix, then up to `v`.
pub fn geodesic(u: &Word, v: &Word) -> Vec<Step> {
    let common = u.common_prefix_len(v);
    let mut steps = Vec::with_capacity(u.len() + v.len() - 2 * common);
    for i in (common..u.len()).rev() {
        steps.push(Step {
            from: u.prefix(i + 1),
            letter: u.0[i].inverse(),
        });
    }
    for i in common..v.len() {
        steps.push(Step {
            from: v.prefix(i),
            letter: v.0[i],
        });
    }
    steps
}

/// All reduced words of length at most `radius`, in word order.
pub fn ball(rank: Rank, radius: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut frontier = alloc::vec![Word::identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for letter in rank.letters() {
                if w.last() != Some(letter.inverse()) {
                    let mut letters = w.0.clone();
                    letters.push(letter);
                    next.push(Word(letters));
                }
            }
        }
        out.append(&mut frontier);
        frontier = next;
    }
    out.append(&mut frontier);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rank(k: u32) -> Rank {
        Rank::new(k).unwrap()
    }

    fn w(values: &[i64]) -> Word {
        Word::from_reduced(rank(4), values).unwrap()
    }

    fn steps(pairs: &[(&[i64], i64)]) -> Vec<Step> {
        pairs
            .iter()
            .map(|(from, l)| Step::new(w(from), Letter::new(*l, rank(4)).unwrap()))
            .collect()
    }

    #[test]
    fn reduce_examples() {
        let r = rank(2);
        assert_eq!(Word::reduce(r, &[1, -1]).unwrap(), Word::identity());
        assert_eq!(Word::reduce(r, &[1, 2, -2, 1]).unwrap(), w(&[1, 1]));
        assert_eq!(Word::reduce(r, &[2, -1, 1, -2, 1]).unwrap(), w(&[1]));
    }

    #[test]
    fn reduce_rejects_bad_letters() {
        let r = rank(2);
        assert_eq!(
            Word::reduce(r, &[1, 3]),
            Err(Error::LetterOutOfRange { value: 3, rank: 2 })
        );
        assert!(matches!(
            Word::reduce(r, &[0]),
            Err(Error::LetterOutOfRange { value: 0, .. })
        ));
        assert_eq!(Rank::new(0), Err(Error::InvalidRank));
    }

    #[test]
    fn from_reduced_rejects_cancelling_pairs() {
        assert_eq!(
            Word::from_reduced(rank(2), &[1, -1]),
            Err(Error::NonReducedWord)
        );
        assert_eq!(
            Word::from_reduced(rank(2), &[2, 1, -1]),
            Err(Error::NonReducedWord)
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w(&[1, 2]).multiply(&w(&[-2, 1])), w(&[1, 1]));
        assert_eq!(Word::identity().multiply(&w(&[-2])), w(&[-2]));
        assert_eq!(w(&[1]).multiply(&w(&[-1])), Word::identity());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[1, 2]).inverse(), w(&[-2, -1]));
        assert_eq!(Word::identity().inverse(), Word::identity());
        assert_eq!(w(&[-1]).inverse(), w(&[1]));
    }

    #[test]
    fn geodesic_examples() {
        assert!(geodesic(&w(&[1]), &w(&[1])).is_empty());
        assert_eq!(
            geodesic(&Word::identity(), &w(&[1, 2])),
            steps(&[(&[], 1), (&[1], 2)])
        );
        assert_eq!(geodesic(&w(&[1]), &w(&[2])), steps(&[(&[1], -1), (&[], 2)]));
    }

    #[test]
    fn letter_and_word_order() {
        let r = rank(2);
        let letters: Vec<i32> = r.letters().map(|l| l.value()).collect();
        assert_eq!(letters, vec![1, -1, 2, -2]);
        assert!(Word::identity() < w(&[1]));
        assert!(w(&[1]) < w(&[-1]));
        assert!(w(&[-1]) < w(&[2]));
        assert!(w(&[-2]) < w(&[1, 1]));
        assert!(w(&[1, -2]) < w(&[-1, 2]));
    }

    #[test]
    fn ball_sizes() {
        // 1 + 2k + 2k(2k-1) for radius 2.
        assert_eq!(ball(rank(2), 0), vec![Word::identity()]);
        assert_eq!(ball(rank(2), 1).len(), 5);
        assert_eq!(ball(rank(2), 2).len(), 17);
        assert_eq!(ball(rank(1), 3).len(), 7);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", w(&[1, -2])), "[1,-2]");
        assert_eq!(alloc::format!("{}", Word::identity()), "[]");
    }
}
