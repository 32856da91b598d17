//! Decides whether a Sylow `r`-subgroup `R` of an almost simple group `G`
//! lies in a unique maximal subgroup, names that subgroup, and answers the
//! follow-up questions about `N_G(R₀)`, weak subnormality and `O_r(H)`.
//!
//! Every verdict carries a trace of the atomic conditions it evaluated; each
//! entry holds its operands and can be replayed independently.

mod classify;
mod corollary;
mod ctx;
mod error;
mod order;
mod rows;
mod spec;
mod trace;
mod verdict;

pub use classify::{classify, precheck};
pub use corollary::{
    m_or_h_unique, maximal_sylow, ngr0_unique, or_h_nontrivial, weakly_subnormal_sylow, OrH,
};
pub use error::{ClassifyError, SpecError, TraceError};
pub use order::{factorial, socle_order, sporadic, SporadicData, SPORADICS};
pub use rows::{row_doc, row_reference_markdown, RowDoc, ROW_DOCS};
pub use spec::{Family, GroupSpec, OuterLabel, SpecRecord};
pub use trace::{Atom, CmpOp, OuterFlag, TraceEntry};
pub use verdict::{Outcome, OvergroupDesc, Verdict, VERDICT_SCHEMA};
