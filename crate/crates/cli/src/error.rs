use rankforge_core::Error as CoreError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Core(e) => match e {
                CoreError::Convergence { .. }
                | CoreError::Numerical { .. }
                | CoreError::Size { .. }
                | CoreError::InvalidProbability { .. }
                | CoreError::InvalidRank(_) => EXIT_NUMERICAL,
                _ => EXIT_INPUT,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "io",
            CliError::Core(e) => match e {
                CoreError::Parse { .. } => "parse",
                CoreError::Range { .. } => "range",
                CoreError::InsufficientData { .. } => "insufficient_data",
                CoreError::Dimension { .. } => "dimension",
                CoreError::Size { .. } => "size",
                CoreError::Convergence { .. } => "convergence",
                CoreError::InvalidArgument(_) => "invalid_argument",
                CoreError::InvalidProbability { .. } => "invalid_probability",
                CoreError::InvalidRank(_) => "invalid_rank",
                CoreError::Numerical { .. } => "eigensolver",
                CoreError::NotFound(_) => "not_found",
                CoreError::Scenario { .. } => "scenario",
                CoreError::Incompatible(_) => "incompatible",
                CoreError::Io(_) => "io",
                CoreError::Json(_) => "json",
            },
        }
    }

    /// One-line stderr record: `error code=<n> kind=<kind> message="<text>"`.
    pub fn record(&self) -> String {
        format!(
            "error code={} kind={} message={:?}",
            self.exit_code(),
            self.kind(),
            self.to_string()
        )
    }
}

pub type CliResult<T> = Result<T, CliError>;
