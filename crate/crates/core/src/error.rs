use thiserror::Error;

use crate::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows do not form a tableau: {0}")]
    InvalidTableau(String),

    #[error("columns are not in lexicographic order at column {0}")]
    UnorderedBiWord(usize),

    #[error("bi-word rows have different lengths ({top} vs {bottom})")]
    RaggedBiWord { top: usize, bottom: usize },

    #[error("P and Q have different shapes")]
    ShapeMismatch,

    #[error("cannot remove {requested} letters from a word of length {len}")]
    StripTooMany { requested: usize, len: usize },

    #[error("carrier is empty but the word is not")]
    EmptyCarrier,

    #[error("state has no balls")]
    EmptyState,

    #[error("box {label} holds {count} balls but has capacity {capacity}")]
    CapacityExceeded {
        label: Label,
        count: usize,
        capacity: u32,
    },

    #[error("color {color} is outside 1..={colors}")]
    ColorOutOfRange { color: i64, colors: u32 },

    #[error("capacity must be at least 1 (box {0})")]
    ZeroCapacity(Label),

    #[error("compact notation needs every capacity to be 1 (box {0})")]
    NotCompact(Label),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
