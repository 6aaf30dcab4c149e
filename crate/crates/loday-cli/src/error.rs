//! Error type shared by the command-line front end.

use thiserror::Error;

/// Anything that can go wrong while running a `loday` command.
///
/// Errors fall into two families with different exit codes:
/// usage/input problems (bad JSON, unknown names, missing slots) exit
/// with code 1, while mathematically meaningful negative outcomes
/// (an axiom fails, a precondition is violated) exit with code 2 and
/// are reported as verdicts rather than errors.
#[derive(Debug, Error)]
pub enum CliError {
    /// The input file could not be read or the output file written.
    #[error("io: {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// The input was not valid JSON in the interchange schema.
    #[error("parse: {0}")]
    Parse(String),

    /// A bundle decoded cleanly but its contents are inconsistent
    /// (index out of range, ragged matrix, duplicate entry, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested catalog entry does not exist.
    #[error("unknown catalog entry: {0}")]
    UnknownFixture(String),

    /// The requested verification suite does not exist.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    /// The requested construction does not exist.
    #[error("unknown construction: {0}")]
    UnknownOp(String),

    /// A flag required by the selected construction was missing.
    #[error("missing option: {0}")]
    MissingOption(String),

    /// The core library rejected the data (unknown system name,
    /// missing slot, dimension mismatch, singular matrix, ...).
    #[error(transparent)]
    Core(#[from] loday_core::Error),
}

impl CliError {
    /// Read a file, attaching the path to any failure.
    pub fn read(path: &str) -> Result<String, CliError> {
        std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })
    }

    /// Write a file, attaching the path to any failure.
    pub fn write(path: &str, contents: &str) -> Result<(), CliError> {
        std::fs::write(path, contents).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })
    }
}
