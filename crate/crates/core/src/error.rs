use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of size {size} exceeds the maximum of {max}")]
    GroundTooLarge { size: usize, max: usize },

    #[error("element {element} is outside the ground set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("invalid bases: {0}")]
    InvalidBases(String),

    #[error("uniform matroid requires r <= n, got r = {r}, n = {n}")]
    UniformRank { r: usize, n: usize },

    #[error("matroid of rank {rank} is not allowed here: {reason}")]
    RankOutOfRange { rank: usize, reason: &'static str },

    #[error("matroid has loops {loops:?}; its zeta function is 0 and Y is undefined")]
    HasLoops { loops: Vec<usize> },

    #[error("{0} is not a flat")]
    NotAFlat(String),

    #[error("flats {lower} and {upper} are not comparable")]
    NotComparable { lower: String, upper: String },

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("flag enumeration exceeded the cap of {cap} flags")]
    FlagCapExceeded { cap: u64 },

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("denominator vanishes at s = 0")]
    PoleAtZero,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
