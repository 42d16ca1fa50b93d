use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("coefficient fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("term t^{0} is not in the semigroup ring")]
    NotInRing(u32),
    #[error("precision cap {cap} reached without certifying an ideal tail")]
    PrecisionExhausted { cap: u32 },
    #[error("ideal is not contained in the expected ideal: {0}")]
    NotContained(String),
    #[error("no reduction found with exponent <= {0}")]
    NoReductionWithinBound(u32),
    #[error("Hilbert function did not stabilize within {0} degrees")]
    StabilizationNotReached(u32),
    #[error("quotient is not Artinian")]
    NotArtinian,
    #[error("length is infinite")]
    InfiniteLength,
    #[error("hypothesis failed: {0}")]
    HypothesisFailure(String),
    #[error("hypothesis not detected: {0}")]
    HypothesisNotDetected(String),
    #[error("equivalent criteria disagree: {0}")]
    CriteriaDisagree(String),
    #[error("conductors of principal reductions differ: {0}")]
    ConductorMismatch(String),
    #[error("generators are not minimal: {0}")]
    NotMinimalGenerators(String),
    #[error("complete intersection test inconclusive at degree bound {0}")]
    InconclusiveAtBound(u32),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("corpus mismatch: {0}")]
    CorpusMismatch(String),
    #[error("{0}")]
    Unsupported(String),
}
