use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("state is unphysical: {0}")]
    Unphysical(String),

    #[error("degenerate ground state: |eps^M_{index}| = {value:e} below threshold; perturb the Hamiltonian or pick a sector")]
    DegenerateGroundState { index: usize, value: f64 },

    #[error("forbidden measurement outcome: probability {prob:e} at site {site}")]
    ForbiddenOutcome { site: usize, prob: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code convention: 2 config, 3 numerical guard, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidInput(_) => 2,
            Error::Numerical(_) | Error::Unphysical(_) => 3,
            _ => 1,
        }
    }
}
