//! Feasibility profiles: permgroup bounds, a per-pair time budget, and the manifest tier.

use std::collections::BTreeMap;
use std::path::Path;

use catalog::Tier;
use permgroup::Bounds;
use serde::{Deserialize, Serialize};

use crate::error::OracleError;

pub const PROFILES_TOML: &str = include_str!("../profiles.toml");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Profile {
    pub tier: Tier,
    /// Pairs running longer are reported as slow; the result is still used.
    pub max_seconds_per_pair: u64,
    pub bounds: Bounds,
}

impl Profile {
    /// A built-in profile: `desk` or `stretch`.
    pub fn named(name: &str) -> Result<Profile, OracleError> {
        let all: BTreeMap<String, Profile> =
            toml::from_str(PROFILES_TOML).map_err(|e| OracleError::Profile(e.to_string()))?;
        all.get(name).cloned().ok_or_else(|| {
            let known: Vec<&str> = all.keys().map(String::as_str).collect();
            OracleError::Profile(format!(
                "unknown profile {name:?}; known: {}",
                known.join(", ")
            ))
        })
    }

    /// A profile from a TOML file with the same fields as one built-in entry.
    pub fn from_path(path: &Path) -> Result<Profile, OracleError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| OracleError::Profile(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| OracleError::Profile(format!("{}: {e}", path.display())))
    }

    /// A built-in name, or otherwise a path to a profile file.
    pub fn resolve(name_or_path: &str) -> Result<Profile, OracleError> {
        match Profile::named(name_or_path) {
            Ok(p) => Ok(p),
            Err(_) if Path::new(name_or_path).exists() => {
                Profile::from_path(Path::new(name_or_path))
            }
            Err(e) => Err(e),
        }
    }
}
