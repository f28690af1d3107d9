use thiserror::Error;

use crate::involution::Involution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term must be 1")]
    NonUnitConstant,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("rank is only defined for partitions without a zero part")]
    ZeroPartRank,

    #[error("{map} domain violation: {reason}")]
    Domain { map: Involution, reason: String },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("product involves α; use the bivariate builder")]
    NotUnivariate,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
