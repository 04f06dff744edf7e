//! Error taxonomy for the reconstruction library.
//!
//! Every fallible operation returns [`Result`]. Variants separate caller
//! mistakes (`Domain`, `Argument`), data defects discovered at run time
//! (`Data`, `Parse`), numerical breakdown (`Singular`, `Construction`,
//! `NonFinite`), and I/O. The pipeline wraps stage failures in [`Error::Stage`]
//! so a batch run can report which stage of which target aborted.

use thiserror::Error;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the reconstruction library.
#[derive(Debug, Error)]
pub enum Error {
    /// A mathematical precondition on an input value was violated
    /// (e.g. a non-positive wave number).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural argument was malformed (wrong length, even window, ...).
    #[error("argument error: {0}")]
    Argument(String),

    /// A linear system could not be factored.
    #[error("singular system in {context}: condition estimate {cond_estimate:.3e}")]
    Singular {
        /// Which solve failed, with enough detail to reproduce it.
        context: String,
        /// Ratio of the largest to smallest pivot seen before breakdown.
        cond_estimate: f64,
    },

    /// An object failed its own construction-time validation.
    #[error("construction error: {0}")]
    Construction(String),

    /// Measured or simulated data violated an assumption (zero sample, ...).
    #[error("data error: {0}")]
    Data(String),

    /// An objective or gradient evaluated to a non-finite value.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// A pipeline stage aborted; carries the stage name for diagnostics.
    #[error("pipeline stage '{stage}' failed: {source}")]
    Stage {
        /// Name of the pipeline stage that failed.
        stage: &'static str,
        /// The underlying failure.
        #[source]
        source: Box<Error>,
    },

    /// A data file could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {what}")]
    Parse {
        /// 1-based line number in the offending file.
        line: usize,
        /// Description of the defect.
        what: String,
    },

    /// Filesystem failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// CSV encoding/decoding failure.
    #[error(transparent)]
    Csv(#[from] csv::Error),

    /// JSON encoding/decoding failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wrap an error with the pipeline stage it occurred in.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}
