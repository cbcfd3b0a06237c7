use std::fmt;

/// Everything the front end can fail with. All of these exit with code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse { offset: usize, message: String },
    Solver(bisolve_core::Error),
    Input(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "PARSE_ERROR",
            CliError::Solver(e) => e.code(),
            CliError::Input(_) => "INPUT_ERROR",
            CliError::Io(_) => "IO_ERROR",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { offset, message } => write!(f, "PARSE_ERROR at offset {offset}: {message}"),
            CliError::Solver(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "INPUT_ERROR: {m}"),
            CliError::Io(m) => write!(f, "IO_ERROR: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<bisolve_core::Error> for CliError {
    fn from(e: bisolve_core::Error) -> Self {
        CliError::Solver(e)
    }
}
