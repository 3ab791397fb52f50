use thiserror::Error;

/// Errors raised by state construction, channel evaluation and the optimizers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    InvalidTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("Bloch angle out of range: theta={theta}, phi={phi}")]
    InvalidAngles { theta: f64, phi: f64 },

    #[error("temperature must be positive, got {0}")]
    InvalidTemperature(f64),

    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error(
        "resonant parameter set: level {level} has a zero-frequency coherence term \
         (|f| = {frequency:e}, weight {weight:e}); time-averaged coherence is not modelled"
    )]
    Resonant {
        level: usize,
        frequency: f64,
        weight: f64,
    },

    #[error(
        "{0} is unbounded; global maximization is not defined, use the state-dependent relations"
    )]
    UnboundedMeasure(&'static str),

    #[error("relation `{0}` needs an explicit initial state pair")]
    MissingStatePair(&'static str),

    #[error("bath size N={n} exceeds the dense oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
