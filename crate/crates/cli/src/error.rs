use std::fmt;

use codegree_core::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 2;
    pub const SIZE_CAP: i32 = 3;
    pub const INTERNAL: i32 = 4;
    pub const VIOLATIONS: i32 = 10;
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    SizeCap(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => exit::INPUT,
            CliError::SizeCap(_) => exit::SIZE_CAP,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::SizeCap(m) => write!(f, "resource cap: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeCap { .. } => CliError::SizeCap(e.to_string()),
            Error::InvalidArgument(_)
            | Error::UnknownGroup(_)
            | Error::ReducibleModulus { .. }
            | Error::ContextMismatch { .. }
            | Error::Unsupported(_) => CliError::Input(e.to_string()),
            Error::Construction(_) | Error::Consistency(_) => CliError::Internal(e.to_string()),
        }
    }
}
