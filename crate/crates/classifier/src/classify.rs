//! The main decision: is `𝓜(R)` a singleton, and if so which row names it.

use num_bigint::BigUint;
use numtheory::is_prime;

use crate::ctx::Ctx;
use crate::error::ClassifyError;
use crate::rows::{self, sporadic};
use crate::spec::{Family, GroupSpec};
use crate::trace::{Atom, TraceEntry};
use crate::verdict::{Outcome, OvergroupDesc, Verdict, VERDICT_SCHEMA};

fn verdict(spec: &GroupSpec, r: u64, outcome: Outcome, trace: Vec<TraceEntry>) -> Verdict {
    Verdict {
        schema: VERDICT_SCHEMA,
        spec: spec.record(),
        name: spec.name(),
        r,
        outcome,
        overgroup: None,
        reason: None,
        trace,
    }
}

/// `r ∤ |T|`, or `G/T` not an `r`-group: both force `|𝓜(R)| ≥ 2`.
fn precheck_failed(c: &mut Ctx) -> bool {
    let (t, r) = (c.t_order.clone(), c.r);
    let divides = c.tr.check(
        "r divides |T|",
        Atom::ResidueIn {
            a: t.to_string(),
            m: r,
            residues: vec![0],
        },
    );
    let outer = c.s.outer.order();
    !(divides && c.power_of("G/T is an r-group", outer, r, 0))
}

fn check_inputs(spec: &GroupSpec, r: u64) -> Result<GroupSpec, ClassifyError> {
    spec.validate()?;
    if !is_prime(r) {
        return Err(ClassifyError::NotPrime(r));
    }
    Ok(spec.normalized(r))
}

/// `Some(NotUnique)` when the quick necessary conditions already fail.
pub fn precheck(spec: &GroupSpec, r: u64) -> Result<Option<Verdict>, ClassifyError> {
    let s = check_inputs(spec, r)?;
    let mut c = Ctx::new(&s, r);
    if precheck_failed(&mut c) {
        return Ok(Some(verdict(
            spec,
            r,
            Outcome::NotUnique,
            c.tr.into_entries(),
        )));
    }
    Ok(None)
}

/// Decides whether a Sylow `r`-subgroup of `spec` lies in a unique maximal subgroup.
pub fn classify(spec: &GroupSpec, r: u64) -> Result<Verdict, ClassifyError> {
    let s = check_inputs(spec, r)?;
    let mut c = Ctx::new(&s, r);
    if precheck_failed(&mut c) {
        return Ok(verdict(spec, r, Outcome::NotUnique, c.tr.into_entries()));
    }
    let mut fired = Vec::new();
    for row in rows::block(&s.family, s.n, r) {
        if let Some(f) = row(&mut c) {
            fired.push(f);
        }
    }
    if fired.len() > 1 {
        return Err(ClassifyError::DoubleFire {
            group: spec.name(),
            r,
            rows: fired.iter().map(|f| f.row.to_string()).collect(),
        });
    }
    let g_order = c.g_order.clone();
    let monster_gap = matches!(&s.family, Family::Sporadic(name) if name == "M")
        && r != 2
        && sporadic::rows_for("M").all(|row| row.r != r);
    let mut v = verdict(spec, r, Outcome::NotUnique, c.tr.into_entries());
    match fired.pop() {
        Some(f) => {
            let order = f.order.or_else(|| f.index.map(|i| &g_order / i));
            v.outcome = Outcome::Unique;
            v.overgroup = Some(OvergroupDesc {
                row: f.row.to_string(),
                type_string: f.type_string,
                order: order.map(|o: BigUint| o.to_string()),
            });
        }
        None if monster_gap => {
            v.outcome = Outcome::OutOfScope;
            v.reason = Some(format!("no listed row for the Monster at r = {r}; the maximal subgroups containing R are not encoded"));
        }
        None => {}
    }
    Ok(v)
}
