use serde::{Deserialize, Serialize};

use crate::error::PermError;

/// Feasibility limits for the exhaustive algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    /// Largest coset space enumerated explicitly.
    pub max_cosets: u64,
    /// Largest group order for which overgroup lattices are explored.
    pub max_order: u64,
    /// Largest group order for full maximal-subgroup enumeration.
    pub max_small_order: u64,
    /// Largest subgroup order whose conjugation orbit is enumerated.
    pub max_normalized_order: u64,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_cosets: 200_000,
            max_order: 10_000_000,
            max_small_order: 10_000,
            max_normalized_order: 10_000,
        }
    }
}

impl Bounds {
    pub(crate) fn check(what: &'static str, limit: u64, actual: u64) -> Result<(), PermError> {
        if actual > limit {
            Err(PermError::BoundExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
