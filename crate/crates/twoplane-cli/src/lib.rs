//! Command-line companion to the `twoplane` library.
//!
//! The library half of this crate owns everything the binary needs that is
//! worth testing in isolation: the JSON wire format for embedded drawings
//! ([`document`]), DOT/SVG renderings ([`render`]), and the error-to-exit-code
//! mapping ([`CliError`]).

pub mod document;
pub mod render;

use twoplane::Error;

/// Anything a command can fail with, split by where the blame lies so the
/// process exit code stays meaningful for scripts.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// Structurally valid JSON that does not describe a usable document,
    /// or an unusable flag/value combination.
    #[error("{0}")]
    Value(String),
    #[error("{0}")]
    Core(#[from] Error),
}

impl CliError {
    /// Exit code contract: 0 success, 2 unparseable or unusable input,
    /// 3 invalid embedding, 4 drawing too deep for the algorithm,
    /// 5 internal invariant violation, 6 over an exact-search size cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Json(_) | CliError::Value(_) => 2,
            CliError::Core(e) => match e {
                Error::InfeasibleSpec { .. } => 2,
                Error::InvalidEmbedding(_) | Error::UnknownVertex(_) => 3,
                Error::NotTwoOuterplanar { .. } | Error::LayerTooDeep { .. } => 4,
                Error::TooLarge { .. } => 6,
                _ => 5,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
