use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("form degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("degree mismatch: expected a {expected}-form, got a {got}-form")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("metric is not positive definite")]
    DegenerateMetric,

    #[error("metric is not symmetric")]
    AsymmetricMetric,

    #[error("square root of {0} is not rational; use floating-point mode")]
    Irrational(String),

    #[error("parameter must be strictly positive: {name} = {value}")]
    NonPositive { name: &'static str, value: String },

    #[error("Milnor eigenvalues {0:?} do not all share one sign: not an su(2)-type algebra")]
    NotSu2Type([f64; 3]),

    #[error("metric lies outside the S^3 family: {0}")]
    OutsideFamily(String),

    #[error("torsion is not totally skew-symmetric (violation {0:e})")]
    TorsionNotSkew(f64),

    #[error("torsion tensor was not derived from the supplied 3-form (violation {0:e})")]
    InconsistentTorsion(f64),

    #[error("spin pairing failed calibration: round metric gives {got} instead of -1")]
    UncalibratedPairing { got: String },

    #[error(
        "spin representation needs a metric connection in an orthonormal frame (skew defect {0:e})"
    )]
    NotSkewConnection(f64),

    #[error("structure constants violate the Jacobi identity (violation {0:e})")]
    NotLieAlgebra(f64),

    #[error("connections live on different frames")]
    FrameMismatch,

    #[error("invalid sweep specification: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by user input rather than internal failure.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::UncalibratedPairing { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
