//! The instance manifest: which groups the oracle runs on, with frozen
//! degrees and orders of the permutation models.

use serde::{Deserialize, Serialize};

use crate::error::CatalogError;

pub const MANIFEST_TOML: &str = include_str!("../catalog.toml");

/// Which verification profile includes an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Desk,
    Stretch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    /// A name accepted by [`classifier::GroupSpec::parse`].
    pub name: String,
    pub tier: Tier,
    pub degree: usize,
    /// `|G|` as a decimal string.
    pub order: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema: u32,
    /// Commit the frozen values were taken at.
    pub frozen_at: String,
    pub instance: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, CatalogError> {
        let m: Manifest =
            toml::from_str(text).map_err(|e| CatalogError::Manifest(e.to_string()))?;
        for e in &m.instance {
            classifier::GroupSpec::parse(&e.name)?;
        }
        Ok(m)
    }

    /// Entries included at `tier` (stretch includes desk).
    pub fn entries(&self, tier: Tier) -> impl Iterator<Item = &ManifestEntry> {
        self.instance.iter().filter(move |e| e.tier <= tier)
    }
}

/// The built-in manifest.
pub fn manifest() -> Manifest {
    Manifest::parse(MANIFEST_TOML).expect("built-in manifest parses")
}
