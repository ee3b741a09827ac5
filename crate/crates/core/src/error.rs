use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The variants are grouped by how a caller is expected to react: bad input,
/// resource limits, and internal consistency failures (which always indicate
/// a bug or corrupted data, never a user mistake).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("modulus {modulus:#x} is reducible over GF(2): divisible by {factor:#x}")]
    ReducibleModulus { modulus: u32, factor: u32 },

    #[error(
        "field context mismatch: element of modulus {left:#x} combined with modulus {right:#x}"
    )]
    ContextMismatch { left: u32, right: u32 },

    #[error("unknown group name {0:?}")]
    UnknownGroup(String),

    #[error("enumeration exceeded the size cap of {cap} elements")]
    SizeCap { cap: usize },

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
