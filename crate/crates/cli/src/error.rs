use hsvd::HsvdError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("{path}: {msg}")]
    BadFile { path: String, msg: String },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{name}: {0}", name = .0.name())]
    Hsvd(#[from] HsvdError),
    #[error("verification failed: {0}")]
    Failed(String),
}

impl CliError {
    /// Process exit status: 2 shape errors, 3 unreadable input, 4 numerical
    /// breakdown, 5 infeasible request, 1 failed verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::BadFile { .. } | CliError::Io(..) => 3,
            CliError::Failed(_) => 1,
            CliError::Hsvd(e) => match e {
                HsvdError::DimensionMismatch(_)
                | HsvdError::SignatureMismatch { .. }
                | HsvdError::InvalidSignature { .. }
                | HsvdError::InvalidTolerance(_) => 2,
                HsvdError::Infeasible(_) => 5,
                _ => 4,
            },
        }
    }
}
