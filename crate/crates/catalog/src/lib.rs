//! Concrete groups for the brute-force oracle: finite fields, permutation
//! models of almost simple groups built from a [`classifier::GroupSpec`],
//! small test groups, and the manifest of instances with frozen orders.

mod error;
pub mod gf;
mod instance;
pub mod linear;
mod manifest;
mod models;
mod small;

pub use error::CatalogError;
pub use gf::Gf;
pub use instance::{build, build_named, GroupInstance};
pub use manifest::{manifest, Manifest, ManifestEntry, Tier, MANIFEST_TOML};
pub use models::{build_model, Model};
pub use small::{coprime_semidirect_products, small_groups, Semidirect, SmallGroup};
