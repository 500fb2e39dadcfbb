use core::fmt;

/// Which argument of a binary operation an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operand {
    First,
    Second,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::First => f.write_str("first"),
            Operand::Second => f.write_str("second"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Rank must be at least one.
    InvalidRank,
    /// A letter was zero or referred to a generator beyond the rank.
    LetterOutOfRange {
        value: i64,
        rank: u32,
    },
    /// A word that was required to be freely reduced was not.
    NonReducedWord,
    /// An edge label outside `1..=rank`.
    GenOutOfRange {
        gen: u32,
        rank: u32,
    },
    ZeroWeight,
    DuplicateEdge,
    RankMismatch {
        left: u32,
        right: u32,
    },
    /// All classes involved have empty support.
    EmptySupport,
    /// The zero class does not represent a sphere.
    ZeroClass,
    /// Checked 64-bit arithmetic overflowed.
    Overflow,
    /// A precondition of a disjointness test failed: the operand is not
    /// embeddable in the universal cover.
    NotEmbeddable(Operand),
    /// The operand is not embeddable in the manifold itself.
    NotEmbeddableInM(Operand),
    /// Consecutive steps of a path do not share an endpoint.
    BrokenPath {
        index: usize,
    },
    /// An enumeration bound exceeded the configured limit.
    LimitExceeded {
        requested: usize,
        limit: usize,
    },
}

impl Error {
    /// Resource-type failures, as opposed to invalid input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Overflow | Error::LimitExceeded { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank => f.write_str("rank must be at least 1"),
            Error::LetterOutOfRange { value, rank } => {
                write!(f, "letter {value} out of range for rank {rank}")
            }
            Error::NonReducedWord => f.write_str("word is not freely reduced"),
            Error::GenOutOfRange { gen, rank } => {
                write!(f, "generator {gen} out of range 1..={rank}")
            }
            Error::ZeroWeight => f.write_str("edge weight must be nonzero"),
            Error::DuplicateEdge => f.write_str("duplicate edge in class"),
            Error::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            Error::EmptySupport => f.write_str("all classes have empty support"),
            Error::ZeroClass => f.write_str("the zero class is not a sphere class"),
            Error::Overflow => f.write_str("64-bit integer overflow"),
            Error::NotEmbeddable(which) => {
                write!(f, "{which} class is not embeddable in the universal cover")
            }
            Error::NotEmbeddableInM(which) => {
                write!(f, "{which} class is not embeddable in the manifold")
            }
            Error::BrokenPath { index } => write!(f, "path is broken at step {index}"),
            Error::LimitExceeded { requested, limit } => {
                write!(f, "requested bound {requested} exceeds limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
