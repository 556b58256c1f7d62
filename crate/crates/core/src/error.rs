use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input word (or array) is empty.
    #[error("input is empty")]
    InputEmpty,

    /// A range-minimum query with `x > y` or bounds outside `1..=len`.
    #[error("invalid range [{x}, {y}] for array of length {len}")]
    RangeInvalid { x: usize, y: usize, len: usize },

    /// A word position outside `1..=n`.
    #[error("position {pos} out of range 1..={n}")]
    PositionOutOfRange { pos: usize, n: usize },

    /// Direct table access where neither position has a table column.
    #[error("neither {i} nor {j} is a transit position or n+1")]
    NotATransitColumn { i: usize, j: usize },

    /// A letter that cannot be written as a byte distinct from the hole byte.
    #[error("symbol at position {pos} cannot be encoded as a byte distinct from the hole byte")]
    SymbolNotByte { pos: usize },

    #[error("bad magic, expected \"LCCP\"")]
    BadMagic,

    #[error("unsupported index format version {found}")]
    BadVersion { found: u8 },

    /// A structural invariant of a stored index failed to verify.
    #[error("corrupt index: {0}")]
    Corrupt(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
