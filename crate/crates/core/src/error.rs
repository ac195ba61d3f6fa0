use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("symbol {symbol} out of range for alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },
    #[error("forbidden words must be nonempty")]
    EmptyForbiddenWord,
    #[error("transition matrix rows must form a square 0/1 matrix")]
    MalformedMatrix,
    #[error("operation requires a 1-step presentation, got step {step}")]
    NotOneStep { step: usize },
    #[error("subshift is empty after essentialization")]
    EmptyShift,
    #[error("target subshift has zero entropy; the roof construction requires positive entropy")]
    ZeroEntropy,
    #[error("matrix is not irreducible")]
    Reducible,
    #[error(
        "power iteration did not reach residual {tolerance:e} within {max_iterations} iterations"
    )]
    NonConvergence {
        tolerance: f64,
        max_iterations: usize,
    },
    #[error("roof constant {value} must exceed max(2, log of ambient alphabet size) = {minimum}")]
    RoofConstantTooSmall { value: f64, minimum: f64 },
    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    InvalidAlpha(f64),
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("requested index {requested} exceeds the table capacity {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },
    #[error("invalid bracket [{lo}, {hi}]: need f(lo) >= 0 >= f(hi)")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("non-finite weight encountered in a partition computation")]
    NonFiniteWeight,
    #[error("kernel row {row} is not a probability distribution supported on the ambient graph")]
    MalformedKernel { row: usize },
    #[error("measure is not stationary: residual {residual:e}")]
    NotStationary { residual: f64 },
    #[error("roof integral must be positive, got {0}")]
    NonPositiveIntegral(f64),
    #[error("recoded alphabet of {blocks} blocks exceeds the supported limit {limit}")]
    RecodeTooLarge { blocks: usize, limit: usize },
    #[error("sequence is not sub-additive at (i, j) = ({i}, {j})")]
    NotSubadditive { i: usize, j: usize },
    #[error("index {index} out of range for sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid subshift definition: {0}")]
    InvalidDefinition(String),
}
