//! Brute-force ground truth: `𝓜(R)`, normalizers, cores and `O_r(H)` for
//! concrete groups from the catalog, checks of general statements on small
//! groups, and the harness that diffs the classifier against all of it.

mod brute;
mod checks;
mod error;
mod harness;
mod profile;
pub mod util;

pub use brute::{
    analyze, brute_m_r, or_of, report, unique_overgroup_is, Analysis, Flags, InvariantCheck,
    MemberReport, Mode, OvergroupReport, REPORT_SCHEMA,
};
pub use checks::{
    brute_weak_subnormal, check_coprime_lemma, check_lemma_equiv, check_rfrattini,
    check_unique_overgroup_structure, CoprimeReport, EquivReport, RFrattiniReport,
    UniqueOvergroupReport,
};
pub use error::OracleError;
pub use harness::{
    classifier_side, run_verification, run_with, summary_table, ClassifierFn, ClassifierSide,
    Filter, FlagAgreement, Run, RunOptions, Status, Summary, VerdictDiff, DIFF_SCHEMA,
};
pub use profile::{Profile, PROFILES_TOML};
