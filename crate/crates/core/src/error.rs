use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("partition is crossing: {0}")]
    Crossing(String),

    #[error("invalid type vector: {0}")]
    InvalidTypeVector(String),

    #[error("type vectors disagree on k ({0} vs {1})")]
    MismatchedK(usize, usize),

    #[error("invalid cycle-size multiset: {0}")]
    InvalidCycleSizes(String),

    #[error("odd quotient region of size {size} in interleaved pair {partition}")]
    OddRegion { size: usize, partition: String },

    #[error("moment sequence '{label}' has {available} entries, {needed} required")]
    InsufficientMoments {
        label: String,
        needed: usize,
        available: usize,
    },

    #[error("closed form requires s <= m, got s={s}, m={m}")]
    ChainTooLong { s: usize, m: usize },

    #[error("independent routes disagree: {0}")]
    Mismatch(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("unknown distribution spec '{0}'")]
    UnknownDistribution(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
