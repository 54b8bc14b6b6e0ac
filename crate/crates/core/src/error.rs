use thiserror::Error;

/// Errors raised by the algebra engines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("group order {order} exceeds the configured bound {bound}")]
    SizeBound { order: usize, bound: usize },
    #[error("not an exact factorization: {0}")]
    NotAFactorization(String),
    #[error("degenerate numerical rank: smallest accepted pivot {accepted:.3e}, largest rejected {rejected:.3e}")]
    DegenerateRank { accepted: f64, rejected: f64 },
    #[error("eigenvalue clusters not separable at the configured tolerance")]
    Unsplittable,
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("search exceeded {0} ms without a decision")]
    Timeout(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
