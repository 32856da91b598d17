//! Properties of the unique overgroup: `H = N_G(R₀)`, weak subnormality,
//! `O_r(H) ≠ 1`, `𝓜(O_r(H)) = {H}`, and maximal Sylow subgroups.

use serde::{Deserialize, Serialize};

use crate::classify::classify;
use crate::ctx::Ctx;
use crate::error::ClassifyError;
use crate::rows::{core, normalizer};
use crate::spec::{Family, GroupSpec};
use crate::verdict::Verdict;

/// Which list certifies `O_r(H) ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "row", rename_all = "snake_case")]
pub enum OrH {
    No,
    Normalizer(String),
    Core(String),
}

fn unique(spec: &GroupSpec, r: u64) -> Result<Verdict, ClassifyError> {
    let v = classify(spec, r)?;
    if !v.is_unique() {
        return Err(ClassifyError::NotUnique {
            group: spec.name(),
            r,
        });
    }
    Ok(v)
}

fn normalizer_row(spec: &GroupSpec, r: u64) -> Option<&'static str> {
    let s = spec.normalized_for_corollaries(r);
    normalizer::find(&mut Ctx::new(&s, r))
}

fn core_row(spec: &GroupSpec, r: u64) -> Option<&'static str> {
    let s = spec.normalized_for_corollaries(r);
    core::find(&mut Ctx::new(&s, r))
}

fn q_of(s: &GroupSpec) -> Option<u64> {
    s.q.as_ref().and_then(|q| q.q_u64())
}

fn is_l2(s: &GroupSpec) -> bool {
    s.family == Family::L && s.n == 2
}

/// `𝓜(R) = {N_G(R₀)}`.
pub fn ngr0_unique(spec: &GroupSpec, r: u64) -> Result<bool, ClassifyError> {
    Ok(classify(spec, r)?.is_unique() && normalizer_row(spec, r).is_some())
}

/// `𝓜(R) = {N_G(R)}`, i.e. `R` is weakly subnormal in `G`.
pub fn weakly_subnormal_sylow(spec: &GroupSpec, r: u64) -> Result<bool, ClassifyError> {
    if !classify(spec, r)?.is_unique() {
        return Ok(false);
    }
    let s = spec.normalized_for_corollaries(r);
    let o = &s.outer;
    let q = q_of(&s);
    let simple_listed = o.is_trivial() && normalizer_row(spec, r).is_some();
    let pgl_prime = r == 2
        && is_l2(&s)
        && s.is_pgl()
        && s.f() == 1
        && q.is_some_and(|q| {
            q >= 7 && (numtheory::PrimeShape::is_fermat(q) || numtheory::PrimeShape::is_mersenne(q))
        });
    let l29 = r == 2 && is_l2(&s) && q == Some(9) && !o.is_trivial() && !s.in_psigmal();
    let l34 = r == 2
        && s.family == Family::L
        && s.n == 3
        && q == Some(4)
        && o.graph
        && o.diag == 1
        && o.field == 1;
    let three = r == 3
        && ((is_l2(&s) && q == Some(8) && o.field == 3 && o.diag == 1)
            || (s.family == Family::U && s.n == 3 && q == Some(8) && o.order() > 1));
    let sz32 = r == 5 && s.family == Family::B2Twisted && q == Some(32) && o.field == 5;
    Ok(simple_listed || pgl_prime || l29 || l34 || three || sz32)
}

/// Whether `O_r(H) ≠ 1` for the unique overgroup `H`, and which list says so.
pub fn or_h_nontrivial(spec: &GroupSpec, r: u64) -> Result<OrH, ClassifyError> {
    unique(spec, r)?;
    if let Some(row) = normalizer_row(spec, r) {
        return Ok(OrH::Normalizer(row.to_string()));
    }
    Ok(core_row(spec, r).map_or(OrH::No, |row| OrH::Core(row.to_string())))
}

/// `𝓜(O_r(H)) = {H}` for the unique overgroup `H`.
pub fn m_or_h_unique(spec: &GroupSpec, r: u64) -> Result<bool, ClassifyError> {
    let v = unique(spec, r)?;
    if weakly_subnormal_sylow(spec, r)? {
        return Ok(true);
    }
    let s = spec.normalized_for_corollaries(r);
    let o = &s.outer;
    let row = v.overgroup.as_ref().map(|h| h.row.as_str()).unwrap_or("");
    let Some(qq) = s.q.as_ref() else {
        return Ok(false);
    };
    let q = qq.q_u64();
    let split = r == 2
        && is_l2(&s)
        && row == "even:L2:GL1(q)wrS2"
        && ((o.diag == 2 && o.field == 2) || o.twisted)
        && (q == Some(81) || (qq.f == 2 && qq.p >= 5 && numtheory::PrimeShape::is_fermat(qq.p)));
    let nonsplit = r == 2
        && is_l2(&s)
        && row == "even:L2:GL1(q^2)"
        && qq.f == 1
        && qq.p % 4 == 3
        && v_r_order_at_least(&s, r, 16);
    let l33 =
        r == 2 && s.family == Family::L && s.n == 3 && q == Some(3) && o.graph && o.order() == 2;
    Ok(split || nonsplit || l33)
}

fn v_r_order_at_least(s: &GroupSpec, r: u64, bound: u64) -> bool {
    numtheory::r_valuation(&s.order(), r)
        .expect("r prime")
        .value
        >= num_bigint::BigUint::from(bound)
}

/// A Sylow `r`-subgroup of `G` is itself maximal.
pub fn maximal_sylow(spec: &GroupSpec, r: u64) -> bool {
    if r != 2 {
        return false;
    }
    let s = spec.normalized(r);
    if !is_l2(&s) {
        return false;
    }
    let o = &s.outer;
    let Some(q) = q_of(&s) else {
        return false;
    };
    let prime_shape = s.f() == 1
        && (numtheory::PrimeShape::is_fermat(q) || numtheory::PrimeShape::is_mersenne(q));
    match q {
        7 => s.is_pgl(),
        9 => s.is_pgl() || o.twisted || (o.diag == 2 && o.field == 2),
        _ => q > 7 && prime_shape && (o.is_trivial() || s.is_pgl()),
    }
}
