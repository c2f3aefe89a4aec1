use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid transform length {len}: {reason}")]
    InvalidLength { len: usize, reason: &'static str },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("shape error: {0}")]
    Shape(&'static str),

    #[error("invalid parameter: {0}")]
    Parameter(&'static str),

    #[error("refusing to materialize {rows}x{cols} matrix (limit {limit} entries)")]
    TooLarge { rows: usize, cols: usize, limit: usize },

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("infinite reach: use the special-case secant cover")]
    InfiniteReach,

    #[error("descriptor is neither zero-dimensional nor of infinite reach")]
    NotSpecial,

    #[error("point set is empty")]
    EmptySet,

    #[error("need at least two distinct points")]
    TooFewPoints,

    #[error("{count} supports exceed the enumeration guard of {limit}")]
    TooManySupports { count: f64, limit: f64 },

    #[error("invalid descriptor: {0}")]
    Descriptor(&'static str),

    #[error("geometry does not fit: {0}")]
    DimensionError(&'static str),
}
