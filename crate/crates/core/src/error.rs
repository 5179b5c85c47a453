use thiserror::Error;

/// Errors raised by the simulator, the circuit constructions and the fitters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("capacity exceeded: {needed} qubits requested, limit is {limit}")]
    Capacity { needed: usize, limit: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("impossible outcome: {0}")]
    ImpossibleOutcome(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("rank-deficient design matrix: {0}")]
    RankDeficient(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::DegenerateInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures caused by the numbers themselves rather than by shapes
    /// or arguments: zero vectors, vanishing postselection branches, singular fits.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::DegenerateInput(_)
                | Error::ImpossibleOutcome(_)
                | Error::RankDeficient(_)
                | Error::NotUnitary { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
