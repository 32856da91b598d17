use permgroup::PermError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("field: {0}")]
    Field(String),
    #[error("no permutation model for {0}")]
    Unsupported(String),
    #[error("{name}: constructed order {got} differs from expected {expected}")]
    OrderMismatch {
        name: String,
        expected: String,
        got: String,
    },
    #[error("manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Spec(#[from] classifier::SpecError),
    #[error(transparent)]
    Perm(#[from] PermError),
}
