use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("adaptive quadrature on [{a}, {b}] did not reach tolerance {tol:e}")]
    Quadrature { a: f64, b: f64, tol: f64 },

    #[error("cross-validation score is infinite at every bandwidth in [{h_lo}, {h_hi}]")]
    AllInfiniteCv { h_lo: f64, h_hi: f64 },

    #[error("no violation found within the search budget")]
    NotFound,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status used by the command line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_) | Error::Precondition(_) => 2,
            Error::Parse { .. } => 3,
            Error::Quadrature { .. } | Error::AllInfiniteCv { .. } | Error::NotFound => 4,
            Error::FileNotFound(_) | Error::Io(_) | Error::Json(_) => 5,
        }
    }

    /// Short machine-readable category, printed alongside the message.
    pub fn category(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) | Error::Precondition(_) => "invalid-config",
            Error::Parse { .. } => "parse-error",
            Error::AllInfiniteCv { .. } => "all-infinite-cv",
            Error::Quadrature { .. } => "quadrature",
            Error::NotFound => "not-found",
            Error::FileNotFound(_) => "file-not-found",
            Error::Io(_) | Error::Json(_) => "io",
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
