//! Library half of the `paratorsion` binary: input resolution, report types
//! and the corpus regression table. Kept separate so tests can deserialize
//! the JSON the binary prints.

pub mod input;
pub mod regression;
pub mod report;

use std::fmt;
use std::process::ExitCode;

use paratorsion::Error;

/// Exit status contract: 0 success, 1 a mathematical check failed, 2 the
/// input did not parse, 3 a precondition was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Math = 1,
    Parse = 2,
    Precondition = 3,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> ExitCode {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: String, source: std::io::Error },
    /// A check on the mathematics failed.
    Math(String),
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Core(e) => match e {
                Error::Parse { .. } | Error::IndexOutOfRange { .. } => Status::Parse,
                Error::OddDimension(_)
                | Error::Precondition(_)
                | Error::ParamZero(_)
                | Error::Jacobi { .. }
                | Error::Singular
                | Error::DimensionMismatch(..) => Status::Precondition,
                _ => Status::Math,
            },
            CliError::Io { .. } => Status::Parse,
            CliError::Math(_) => Status::Math,
            CliError::Usage(_) => Status::Precondition,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Math(m) => write!(f, "{m}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}
