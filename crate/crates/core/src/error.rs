use thiserror::Error;

/// Errors raised by the algebra kernel, the Segre pipeline and the front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),

    #[error("{0} is not a valid field modulus: {1}")]
    InvalidModulus(u64, &'static str),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("too many variables: {got} (at most {max} supported)")]
    TooManyVariables { got: usize, max: usize },

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("Segre class undefined for X = Y")]
    SegreUndefined,

    #[error("genericity failure at {stage}: {detail}")]
    GenericityFailure { stage: String, detail: String },

    #[error("randomization inconsistency; increase prime size")]
    RandomizationInconsistency,

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn genericity(stage: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::GenericityFailure {
            stage: stage.into(),
            detail: detail.into(),
        }
    }

    /// True for failures caused by an unlucky random choice rather than bad input.
    pub fn is_genericity_failure(&self) -> bool {
        matches!(
            self,
            Error::GenericityFailure { .. } | Error::RandomizationInconsistency
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
