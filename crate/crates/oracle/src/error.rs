use permgroup::PermError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    /// The computation would exceed a feasibility bound.
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("profile: {0}")]
    Profile(String),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Classify(#[from] classifier::ClassifyError),
    #[error(transparent)]
    Perm(PermError),
}

impl From<PermError> for OracleError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::BoundExceeded { .. } => OracleError::Infeasible(e.to_string()),
            other => OracleError::Perm(other),
        }
    }
}
