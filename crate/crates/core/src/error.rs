use thiserror::Error;

/// Errors raised by the path, permutation and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("character {ch:?} at position {pos} is not a step symbol (expected u/d, U/D or parentheses)")]
    NonAlphabet { ch: char, pos: usize },
    #[error("empty word")]
    Empty,
    #[error("word has odd length {0}")]
    OddLength(usize),
    #[error("word has {ups} up steps and {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("prefix of length {pos} dips below the axis")]
    PrefixViolation { pos: usize },
    #[error("pairing is crossing: chords ({0},{1}) and ({2},{3}) intersect")]
    CrossingPairing(usize, usize, usize, usize),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("size mismatch: permutation acts on {perm} points but the path has {path} steps")]
    SizeMismatch { perm: usize, path: usize },
    #[error("permutation {0} is not circularly connected")]
    NotCcp(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("half-length {n} is below the minimum {min} for this operation")]
    SizeTooSmall { n: usize, min: usize },
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("{count} results exceed the materialization limit {limit}")]
    TooMany { count: String, limit: u64 },
    #[error("half-length {n} too large for rendering (max {max})")]
    TooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, lo: usize, hi: usize) -> Result<()> {
    if index < lo || index > hi {
        return Err(Error::IndexOutOfRange { index, lo, hi });
    }
    Ok(())
}
