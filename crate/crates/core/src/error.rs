use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("rank {rank} is not supported by {op}")]
    UnsupportedRank { op: &'static str, rank: usize },
    #[error("orientation mismatch between operands")]
    OrientationMismatch,
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid Lorentz map: {0}")]
    InvalidMap(String),
    #[error("charge undefined for this field: {0}")]
    ChargeUndefined(String),
    #[error("charge degenerate: witness is zero")]
    ChargeDegenerate,
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
