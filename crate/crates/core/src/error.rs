use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("sentinel r0 misplaced or wrongly signed")]
    SentinelMisplaced,
    #[error("reversal ({i}, {j}) out of range for n = {n}")]
    OutOfRange { i: usize, j: usize, n: usize },
    #[error("reversal ({i}, {j}) is not symmetric")]
    NotSymmetric { i: usize, j: usize },
    #[error("trace step {step}: {source}")]
    TraceStep { step: usize, source: Box<Error> },
    #[error("malformed trace line {line}: `{text}`")]
    MalformedTrace { line: usize, text: String },
    #[error("chromosomes are not related (duplication numbers differ)")]
    Unrelated,
    #[error("adjacency multisets differ")]
    MultisetMismatch,
    #[error("duplication number {found} exceeds {max}")]
    DpTooLarge { found: usize, max: usize },
    #[error("chromosome is not simple")]
    NotSimple,
    #[error("target is not 2-balanced: repeat `{0}` has both occurrences in one orientation")]
    NotBalanced(String),
    #[error("symbol `{0}` is not a repeat with duplication number 2")]
    NotARepeat(String),
    #[error("instance is not solvable")]
    NoInstance,
    #[error("sorting made no progress: {0}")]
    ProgressFailure(String),
    #[error("deletion log inconsistent with chromosome: {0}")]
    InvalidLog(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
