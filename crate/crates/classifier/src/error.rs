use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("cannot parse group description {0:?}")]
    Parse(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    Invalid { family: String, reason: String },
    #[error("unsupported outer automorphism {token:?} for {group}")]
    Outer { group: String, token: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("rows {rows:?} fired together for {group}, r = {r}")]
    DoubleFire {
        group: String,
        r: u64,
        rows: Vec<String>,
    },
    #[error("corollary requires a unique maximal overgroup; {group}, r = {r} has none")]
    NotUnique { group: String, r: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("malformed operand {0:?}")]
    Operand(String),
    #[error("arithmetic failure: {0}")]
    Arithmetic(String),
}
