use thiserror::Error;

/// Errors across group construction, table computation, field data ingestion
/// and the CLI pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order bound {bound} exceeded during closure")]
    OrderBoundExceeded { bound: usize },

    #[error("unknown group family: {0}")]
    UnknownFamily(String),

    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),

    #[error("group file parse error at line {line}: {msg}")]
    GroupFileParse { line: usize, msg: String },

    #[error("no suitable character-table prime l = 1 mod {modulus} below {bound}")]
    NoSuitablePrime { modulus: u64, bound: u64 },

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("class-data file rejected: {0}")]
    ClassDataInvalid(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("invalid signature spec: {0}")]
    InvalidSignature(String),

    #[error("invalid module spec: {0}")]
    InvalidModuleSpec(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
