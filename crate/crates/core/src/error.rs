use thiserror::Error;

use crate::extract::FalsificationRecord;

/// Errors raised by graph construction, searches and verification runs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} outside 1..={max}", max = crate::graph::MAX_ORDER)]
    OrderOutOfRange(usize),

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{family} requires parameter >= {min}, got {got}")]
    BelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },

    #[error("{family} expects {expected} parameter(s), got {got}")]
    BadParameters {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },

    #[error("{what} is limited to order {limit}, got {got}")]
    CeilingExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("instance (k={k}, n={n}, m={m}) is outside every proven regime")]
    OutOfProvenRange { k: usize, n: usize, m: usize },

    #[error("invalid instance (k={k}, n={n}, m={m}): need k >= 1, n >= 2, m >= 2")]
    InvalidInstance { k: usize, n: usize, m: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("theorem falsification candidate: {0}")]
    Falsification(Box<FalsificationRecord>),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
