use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },
    #[error("element is not in the group")]
    NotMember,
    #[error("randomized construction did not reach the target order {target} after {tries} tries")]
    TargetNotReached { target: String, tries: u64 },
    #[error("subgroup does not normalize the given subgroup")]
    NotNormal,
}
