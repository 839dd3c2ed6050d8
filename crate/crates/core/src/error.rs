use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant except `Internal` is a caller mistake (bad root-system
/// selector, wrong rank, out-of-range generator, corrupt cache). `Internal`
/// means an exactness contract was broken, e.g. a localized Euler
/// characteristic that failed to clear its denominator; it always points at
/// a convention bug rather than bad input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {0:?}; expected one of A1, A2, A3, B2, B3, C3, G2")]
    UnsupportedType(String),
    #[error("weight {weight:?} has {got} coordinates, expected {expected}")]
    RankMismatch {
        weight: String,
        got: usize,
        expected: usize,
    },
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a bug.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
