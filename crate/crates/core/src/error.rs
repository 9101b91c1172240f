use std::io;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by codec operations and file I/O.
///
/// File-format failures are kept as separate variants so callers can
/// distinguish a wrong file from a damaged one.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Caller-supplied data violated a precondition (shape mismatch,
    /// out-of-range index, invalid configuration).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An object reached an operation in a state it must not be in.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// File does not start with the expected magic bytes.
    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },

    /// File format version not understood by this build.
    #[error("unsupported format version {found} (expected {expected})")]
    UnsupportedVersion { expected: u32, found: u32 },

    /// File ended before the payload announced by its header.
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    Truncated { expected: u64, found: u64 },

    /// A payload or input value is NaN or infinite.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn invalid_state(msg: impl Into<String>) -> Self {
        Error::InvalidState(msg.into())
    }
}
