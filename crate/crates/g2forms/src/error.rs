use thiserror::Error;

#[derive(Debug, Error)]
pub enum G2Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("degenerate metric")]
    DegenerateMetric,
    #[error("volume scalar has no square root in the coefficient field")]
    IrrationalVolume,
    #[error("form is not stable: its GL-orbit is not open")]
    NotStable,
    #[error("form is stable but not positive")]
    NotPositive,
    #[error("plane is not reversible: {0}")]
    NotReversible(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("d^2 != 0: Jacobi identity fails on generator {0}")]
    JacobiFailure(usize),
    #[error("identity failure: {0}")]
    IdentityFailure(String),
    #[error("no compatible complex pairing found for the Cayley four-form")]
    NoCompatiblePairing,
    #[error("non-conforming flag: {0}")]
    NonConformingFlag(String),
    #[error("square root not representable in exact mode: {0}")]
    InexactSqrt(String),
    #[error("numeric search failed: {0}")]
    NumericFailure(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, G2Error>;
