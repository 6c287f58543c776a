use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("invalid sign matrix: {0}")]
    InvalidSignMatrix(String),
    #[error("relative bound requires r < 1/alpha^2 (r = {r}, alpha = {angle})")]
    HypothesisViolated { r: usize, angle: String },
    #[error("dimension {0} outside the known-bounds table (2..=43)")]
    OutOfRange(usize),
    #[error("construction mismatch: {0}")]
    ConstructionMismatch(String),
    #[error("no member survives the orthogonality filter")]
    EmptyResult,
    #[error("malformed graph6 data: {0}")]
    MalformedGraph6(String),
    #[error("I + alpha*S is not positive semidefinite for alpha = {0}")]
    NotPsd(String),
    #[error("indices {0:?} do not form a basis of the line set")]
    NotABasis(Vec<usize>),
    #[error("subset {0:?} has a singular Gram block")]
    RankDeficient(Vec<usize>),
    #[error("index {index} out of bounds for {len} lines")]
    IndexOutOfBounds { index: usize, len: usize },
    #[error("two candidates {0} and {1} represent the same line")]
    DuplicateLine(usize, usize),
    #[error("invalid line set file: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
