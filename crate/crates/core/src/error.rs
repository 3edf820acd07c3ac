use thiserror::Error;

/// Errors shared across the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: image array is not a bijection of 0..{degree}")]
    InvalidPermutation { degree: usize },
    #[error("group too large: closure exceeds order cap {cap}")]
    GroupTooLarge { cap: usize },
    #[error("automorphism group too large: more than {cap} elements")]
    AutGroupTooLarge { cap: usize },
    #[error("character table failed: eigenspaces not separated after {attempts} attempts")]
    CharacterTableFailed { attempts: usize },
    #[error("character inconsistency: fixed-space dimension {value} is not integral")]
    CharacterInconsistency { value: f64 },
    #[error("arithmetic overflow in {context}")]
    Overflow { context: &'static str },
    #[error("signature store not populated for genus {genus}")]
    NotPopulated { genus: u32 },
    #[error("set not invariant: generator image of tuple {index} left the indexed set")]
    SetNotInvariant { index: usize },
    #[error("{0}")]
    Skipped(#[from] Skip),
    #[error("catalog error at {path}:{line}: {message}")]
    Catalog {
        path: String,
        line: usize,
        message: String,
    },
    #[error("results file error at {path}:{line}: {message}")]
    Results {
        path: String,
        line: usize,
        message: String,
    },
    #[error("checkpoint mismatch: {0}")]
    CheckpointMismatch(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A task abandoned for resource reasons; recorded, never silently dropped.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Skip {
    #[error("fiber of size {size} exceeds cap {cap}")]
    FiberTooLarge { size: u128, cap: u128 },
    #[error("automorphism group larger than cap {cap}")]
    AutTooLarge { cap: usize },
    #[error("brute-force state space of size {size} exceeds cap {cap}")]
    OracleTooLarge { size: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
