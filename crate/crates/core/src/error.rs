use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("weight mismatch: expected partitions of {expected}, got one of weight {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("colength {colength} is out of range for partitions of {n}")]
    ColengthOutOfRange { n: usize, colength: usize },

    #[error("branch profile {0} has zero colength")]
    ZeroColength(String),

    #[error("configuration has total colength {found}, expected {expected}")]
    ColengthMismatch { expected: usize, found: usize },

    #[error("series with zero constant term is not invertible")]
    NotInvertible,

    #[error("q = {0} is outside the open interval (0, 1)")]
    QOutOfRange(String),

    #[error("{what} = {value} exceeds the limit {limit}")]
    GuardExceeded { what: &'static str, value: usize, limit: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("verification failed for {what}: expected {expected}, computed {computed}")]
    Verification { what: String, expected: String, computed: String },

    #[error("not enough values: monomial of length {needed} evaluated on {given} values")]
    TooFewValues { needed: usize, given: usize },

    #[error("character cache {path}: {reason}")]
    Cache { path: PathBuf, reason: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
