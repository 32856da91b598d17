//! Permutation-group engine for exhaustive overgroup computations.
//!
//! Groups carry a stabilizer chain built by randomized Schreier–Sims and
//! either verified deterministically or stopped at a known order, so every
//! order and membership answer is exact. Randomness is seeded and only
//! affects running time and which of several conjugate answers is returned.

mod bounds;
mod chain;
mod cosets;
mod error;
mod group;
mod normalizer;
mod overgroups;
mod perm;
mod random;
mod subgroups;
mod sylow;

pub use bounds::Bounds;
pub use chain::StabChain;
pub use cosets::{
    core_by_reps, coset_action_kernel, double_coset_reps, double_cosets, index, CosetSpace,
    DoubleCosets,
};
pub use error::PermError;
pub use group::{rng_from_seed, PermGroup, DEFAULT_SEED};
pub use normalizer::{normalizer, orbit_transversal, point_stabilizer};
pub use overgroups::{
    classes_under, conjugacy_classes_of_overgroups, maximal_overgroups, overgroup_search,
    OvergroupSearch,
};
pub use perm::Perm;
pub use subgroups::{
    core, frattini_small, intersection, intersection_all, maximal_subgroups_small, normal_closure,
    pcore,
};
pub use sylow::{element_r_part, r_part, sylow_subgroup};

/// Seeded generator used by every randomized routine.
pub type GroupRng = rand_chacha::ChaCha8Rng;
