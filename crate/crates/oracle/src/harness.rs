//! The verification harness: classifier verdicts against oracle reports over a manifest.

use std::time::{Duration, Instant};

use catalog::{build_named, GroupInstance, Manifest, ManifestEntry};
use classifier::{
    classify, m_or_h_unique, maximal_sylow, ngr0_unique, or_h_nontrivial, weakly_subnormal_sylow,
    ClassifyError, GroupSpec, OrH, Outcome,
};
use permgroup::rng_from_seed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brute::{brute_m_r, Mode, OvergroupReport};
use crate::error::OracleError;
use crate::profile::Profile;

pub const DIFF_SCHEMA: u32 = 1;

/// What the classifier says about one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierSide {
    pub outcome: Outcome,
    pub row: Option<String>,
    pub order: Option<String>,
    pub maximal_sylow: bool,
    pub weakly_subnormal: Option<bool>,
    pub ngr0_unique: Option<bool>,
    pub or_h_nontrivial: Option<bool>,
    pub m_or_h_unique: Option<bool>,
}

/// The classifier verdict and corollary flags.
pub fn classifier_side(spec: &GroupSpec, r: u64) -> Result<ClassifierSide, ClassifyError> {
    let v = classify(spec, r)?;
    let unique = v.is_unique();
    let opt = |b: bool| unique.then_some(b);
    Ok(ClassifierSide {
        outcome: v.outcome.clone(),
        row: v.overgroup.as_ref().map(|o| o.row.clone()),
        order: v.overgroup.as_ref().and_then(|o| o.order.clone()),
        maximal_sylow: maximal_sylow(spec, r),
        weakly_subnormal: opt(weakly_subnormal_sylow(spec, r)?),
        ngr0_unique: opt(ngr0_unique(spec, r)?),
        or_h_nontrivial: if unique {
            Some(or_h_nontrivial(spec, r)? != OrH::No)
        } else {
            None
        },
        m_or_h_unique: if unique {
            Some(m_or_h_unique(spec, r)?)
        } else {
            None
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Agree,
    Mismatch,
    Skipped,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagAgreement {
    pub flag: String,
    pub classifier: Option<bool>,
    pub oracle: Option<bool>,
    pub agree: bool,
}

/// Classifier against oracle for one `(instance, r)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDiff {
    pub schema: u32,
    pub instance: String,
    pub r: u64,
    pub status: Status,
    pub classifier: Option<ClassifierSide>,
    pub oracle: Option<OvergroupReport>,
    pub flags: Vec<FlagAgreement>,
    pub mismatches: Vec<String>,
    pub reason: Option<String>,
}

/// Restricts a run to part of the manifest.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    /// Socle family code, e.g. `A`, `L`, `U`, `2B2`, `M11`.
    pub family: Option<String>,
    pub instance: Option<String>,
    pub r: Option<u64>,
}

impl Filter {
    /// Parses `key=value` terms separated by commas: `family=`, `instance=`, `r=`.
    pub fn parse(text: &str) -> Result<Filter, String> {
        let mut f = Filter::default();
        for term in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = term
                .split_once('=')
                .ok_or_else(|| format!("filter term {term:?} is not key=value"))?;
            match k.trim() {
                "family" => f.family = Some(v.trim().to_string()),
                "instance" | "name" => f.instance = Some(v.trim().to_string()),
                "r" => {
                    f.r = Some(
                        v.trim()
                            .parse()
                            .map_err(|_| format!("r = {v:?} is not an integer"))?,
                    )
                }
                other => return Err(format!("unknown filter key {other:?}")),
            }
        }
        Ok(f)
    }

    fn keeps_instance(&self, spec: &GroupSpec, name: &str) -> bool {
        let family_ok = self.family.as_deref().is_none_or(|f| {
            let code = spec.family.code();
            code == f
                || (f == "Alt" && code == "A")
                || (f == "Sporadic" && matches!(spec.family, classifier::Family::Sporadic(_)))
        });
        family_ok && self.instance.as_deref().is_none_or(|n| n == name)
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub profile: Profile,
    pub jobs: usize,
    pub seed: u64,
    pub filter: Filter,
}

/// Diffs in manifest order, with wall time per pair (kept out of the diffs for determinism).
#[derive(Debug, Clone)]
pub struct Run {
    pub diffs: Vec<VerdictDiff>,
    pub elapsed: Vec<Duration>,
    pub total: Duration,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pairs: usize,
    pub agree: usize,
    pub mismatch: usize,
    pub skipped: usize,
    pub error: usize,
}

impl Run {
    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            pairs: self.diffs.len(),
            ..Summary::default()
        };
        for d in &self.diffs {
            match d.status {
                Status::Agree => s.agree += 1,
                Status::Mismatch => s.mismatch += 1,
                Status::Skipped => s.skipped += 1,
                Status::Error => s.error += 1,
            }
        }
        s
    }

    pub fn is_clean(&self) -> bool {
        let s = self.summary();
        s.mismatch == 0 && s.error == 0
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.diffs
            .iter()
            .map(|d| serde_json::to_string(d).expect("diffs serialize") + "\n")
            .collect()
    }

    /// Pairs slower than the profile's per-pair budget.
    pub fn slow_pairs(&self, profile: &Profile) -> Vec<(&VerdictDiff, Duration)> {
        self.diffs
            .iter()
            .zip(&self.elapsed)
            .filter(|(_, t)| t.as_secs() >= profile.max_seconds_per_pair)
            .map(|(d, t)| (d, *t))
            .collect()
    }
}

pub type ClassifierFn = dyn Fn(&GroupSpec, u64) -> Result<ClassifierSide, ClassifyError> + Sync;

fn pair_seed(seed: u64, instance_index: usize, r: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ ((instance_index as u64) << 20) ^ r
}

fn flag(name: &str, c: Option<bool>, o: Option<bool>) -> FlagAgreement {
    let agree = match (c, o) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    FlagAgreement {
        flag: name.to_string(),
        classifier: c,
        oracle: o,
        agree,
    }
}

fn compare(c: &ClassifierSide, o: &OvergroupReport) -> (Vec<FlagAgreement>, Vec<String>) {
    let mut mismatches = Vec::new();
    let c_unique = c.outcome == Outcome::Unique;
    if c.outcome == Outcome::OutOfScope {
        mismatches.push("classifier is out of scope on an oracle instance".to_string());
    }
    if c_unique != o.flags.unique {
        mismatches.push(format!(
            "uniqueness: classifier {}, oracle {} member(s) ({:?} mode)",
            if c_unique { "unique" } else { "not unique" },
            o.members.len(),
            o.mode
        ));
    } else if c_unique {
        let oracle_order = &o.members[0].order;
        if c.order.as_ref() != Some(oracle_order) {
            mismatches.push(format!(
                "overgroup order: classifier {:?}, oracle {oracle_order}",
                c.order
            ));
        }
    }
    let exhaustive = o.mode == Mode::Exhaustive;
    let mut flags = vec![flag(
        "maximal_sylow",
        Some(c.maximal_sylow),
        exhaustive.then_some(o.flags.maximal_sylow),
    )];
    if c_unique && o.flags.unique {
        flags.push(flag(
            "weakly_subnormal",
            c.weakly_subnormal,
            o.flags.weakly_subnormal,
        ));
        flags.push(flag("ngr0_unique", c.ngr0_unique, o.flags.ngr0_unique));
        flags.push(flag(
            "or_h_nontrivial",
            c.or_h_nontrivial,
            o.flags.or_h_nontrivial,
        ));
        flags.push(flag(
            "m_or_h_unique",
            c.m_or_h_unique,
            o.flags.m_or_h_unique,
        ));
    }
    for f in flags.iter().filter(|f| !f.agree) {
        mismatches.push(format!(
            "flag {}: classifier {:?}, oracle {:?}",
            f.flag, f.classifier, f.oracle
        ));
    }
    for inv in o.invariants.iter().filter(|i| !i.holds) {
        mismatches.push(format!("invariant {} fails", inv.name));
    }
    (flags, mismatches)
}

fn diff_pair(
    inst: &GroupInstance,
    r: u64,
    seed: u64,
    profile: &Profile,
    classifier: &ClassifierFn,
) -> VerdictDiff {
    let mut d = VerdictDiff {
        schema: DIFF_SCHEMA,
        instance: inst.name.clone(),
        r,
        status: Status::Error,
        classifier: None,
        oracle: None,
        flags: Vec::new(),
        mismatches: Vec::new(),
        reason: None,
    };
    let c = match classifier(&inst.spec, r) {
        Ok(c) => c,
        Err(e) => {
            d.reason = Some(format!("classifier: {e}"));
            return d;
        }
    };
    d.classifier = Some(c.clone());
    let o = match brute_m_r(inst, r, &profile.bounds, &mut rng_from_seed(seed)) {
        Ok(o) => o,
        Err(OracleError::Infeasible(why)) => {
            d.status = Status::Skipped;
            d.reason = Some(why);
            return d;
        }
        Err(e) => {
            d.reason = Some(format!("oracle: {e}"));
            return d;
        }
    };
    let (flags, mismatches) = compare(&c, &o);
    d.status = if mismatches.is_empty() {
        Status::Agree
    } else {
        Status::Mismatch
    };
    d.flags = flags;
    d.mismatches = mismatches;
    d.oracle = Some(o);
    d
}

fn select<'a>(
    manifest: &'a Manifest,
    opts: &RunOptions,
) -> Result<Vec<&'a ManifestEntry>, OracleError> {
    let mut out = Vec::new();
    for e in manifest.entries(opts.profile.tier) {
        let spec = GroupSpec::parse(&e.name)
            .map_err(|err| OracleError::Precondition(format!("{}: {err}", e.name)))?;
        if opts.filter.keeps_instance(&spec, &e.name) {
            out.push(e);
        }
    }
    Ok(out)
}

/// Runs every selected `(instance, r)` pair with the real classifier.
pub fn run_verification(manifest: &Manifest, opts: &RunOptions) -> Result<Run, OracleError> {
    run_with(manifest, opts, &classifier_side)
}

/// Runs every selected pair against an arbitrary classifier.
pub fn run_with(
    manifest: &Manifest,
    opts: &RunOptions,
    classifier: &ClassifierFn,
) -> Result<Run, OracleError> {
    let start = Instant::now();
    let entries = select(manifest, opts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| OracleError::Precondition(e.to_string()))?;
    pool.install(|| {
        let instances: Vec<GroupInstance> = entries
            .par_iter()
            .map(|e| build_named(&e.name))
            .collect::<Result<_, _>>()?;
        for (e, inst) in entries.iter().zip(&instances) {
            if inst.degree() != e.degree || inst.group.order().to_string() != e.order {
                return Err(OracleError::Precondition(format!(
                    "{}: built degree {} and order {} differ from the manifest",
                    e.name,
                    inst.degree(),
                    inst.group.order()
                )));
            }
        }
        let pairs: Vec<(usize, u64)> = instances
            .iter()
            .enumerate()
            .flat_map(|(i, inst)| {
                crate::util::prime_divisors(inst.group.order())
                    .into_iter()
                    .filter(|r| opts.filter.r.is_none_or(|x| x == *r))
                    .map(move |r| (i, r))
            })
            .collect();
        let results: Vec<(VerdictDiff, Duration)> = pairs
            .par_iter()
            .map(|&(i, r)| {
                let t = Instant::now();
                let d = diff_pair(
                    &instances[i],
                    r,
                    pair_seed(opts.seed, i, r),
                    &opts.profile,
                    classifier,
                );
                (d, t.elapsed())
            })
            .collect();
        let (diffs, elapsed) = results.into_iter().unzip();
        Ok(Run {
            diffs,
            elapsed,
            total: start.elapsed(),
        })
    })
}

/// Human summary: one line per pair and totals.
pub fn summary_table(run: &Run) -> String {
    let mut rows = vec![[
        "instance".to_string(),
        "r".to_string(),
        "status".to_string(),
        "classifier".to_string(),
        "oracle".to_string(),
        "mode".to_string(),
    ]];
    for d in &run.diffs {
        let c = d
            .classifier
            .as_ref()
            .map_or("-".to_string(), |c| match (&c.outcome, &c.order) {
                (Outcome::Unique, Some(o)) => format!("unique ({o})"),
                (outcome, _) => format!("{outcome:?}").to_lowercase(),
            });
        let (o, mode) = d
            .oracle
            .as_ref()
            .map_or(("-".to_string(), "-".to_string()), |o| {
                let orders: Vec<&str> = o.members.iter().map(|m| m.order.as_str()).collect();
                (
                    format!("{} [{}]", o.members.len(), orders.join(",")),
                    format!("{:?}", o.mode).to_lowercase(),
                )
            });
        let status = format!("{:?}", d.status).to_lowercase();
        rows.push([d.instance.clone(), d.r.to_string(), status, c, o, mode]);
    }
    let widths: Vec<usize> = (0..6)
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    for d in run
        .diffs
        .iter()
        .filter(|d| !d.mismatches.is_empty() || d.reason.is_some())
    {
        for m in &d.mismatches {
            out.push_str(&format!("MISMATCH {} r={}: {m}\n", d.instance, d.r));
        }
        if let Some(reason) = &d.reason {
            out.push_str(&format!(
                "{} {} r={}: {reason}\n",
                format!("{:?}", d.status).to_uppercase(),
                d.instance,
                d.r
            ));
        }
    }
    let s = run.summary();
    out.push_str(&format!(
        "pairs {}  agree {}  mismatch {}  skipped {}  error {}\n",
        s.pairs, s.agree, s.mismatch, s.skipped, s.error
    ));
    out
}
