use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("point is not on the unit sphere (|z| - 1 = {deviation:e})")]
    NotOnSphere { deviation: f64 },
    #[error("vector is not tangent to the sphere (<v, z> = {inner:e})")]
    NotTangent { inner: f64 },
    #[error("invalid structure parameter: {0}")]
    InvalidParameter(String),
    #[error("jet variable index {index} out of range for {vars} variables")]
    VarIndexOutOfRange { index: usize, vars: usize },
    #[error("jet shape unsupported: {vars} variables, order {order}")]
    UnsupportedJetShape { vars: usize, order: usize },
    #[error("derivative of total order {requested} exceeds jet order {order}")]
    OrderExceeded { requested: usize, order: usize },
    #[error("induced metric is singular at the sample point")]
    SingularMetric,
    #[error("chart is not flat-orthonormal (|G - I| = {deviation:e})")]
    NonFlatChart { deviation: f64 },
    #[error("curve is not parametrized by arc length (||T| - 1| = {deviation:e})")]
    NonUnitSpeed { deviation: f64 },
    #[error("osculating order is numerically indeterminate (residual {residual:e})")]
    IndeterminateOrder { residual: f64 },
    #[error("osculating order exceeds the supported maximum {max}")]
    OrderAboveMaximum { max: usize },
    #[error("osculating order {order} too low for this operation")]
    OrderTooLow { order: usize },
    #[error("quantity is not constant along the samples (spread {spread:e})")]
    NotConstant { spread: f64 },
    #[error("negative radicand in {0}")]
    NegativeRadicand(&'static str),
    #[error("vector conditions violated: {0:?}")]
    VectorConditions(Vec<String>),
    #[error("complex coordinate {index} does not have constant modulus (spread {spread:e})")]
    ModulusNotConstant { index: usize, spread: f64 },
    #[error("split does not diagonalize the coordinate Laplacian (residual {residual:e})")]
    NotDiagonalized { residual: f64 },
    #[error("basis is not unitary (Gram deviation {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("unknown example: {0}")]
    UnknownExample(String),
    #[error("root isolation failed: {0}")]
    RootIsolation(String),
}
