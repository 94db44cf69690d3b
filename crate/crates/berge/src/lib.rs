//! File formats, parallel exhaustive runs and JSON reports on top of
//! `berge-core`.

pub mod formats;
pub mod parallel;

pub use parallel::exhaust_parallel;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] berge_core::Error),

    /// `line` is 1-based; 0 when the problem is not tied to a line.
    #[error("parse error (line {line}): {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
