use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series caps differ")]
    CapMismatch,
    #[error("constant term is not a unit")]
    NonUnitConstant,
    #[error("exp needs a series with zero constant term")]
    ExpConstant,
    #[error("log needs a series with constant term 1")]
    LogConstant,
    #[error("edge weight a must be nonzero")]
    ZeroWeight,
    #[error("unstable psi integral with {0} points")]
    Unstable(usize),
    #[error("empty locus has no contribution")]
    EmptyLocus,
    #[error("denominator vanishes at Q = -1")]
    ContinuationPole,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
