//! Oracle checks of general statements on concrete groups.

use catalog::{GroupInstance, Semidirect};
use permgroup::{
    frattini_small, intersection, intersection_all, maximal_overgroups, maximal_subgroups_small,
    pcore, sylow_subgroup, Bounds, GroupRng, Perm, PermGroup,
};
use serde::{Deserialize, Serialize};

use crate::brute::{analyze, or_of, unique_overgroup_is, Mode};
use crate::error::OracleError;
use crate::util::{
    commutator, core_order, coset_action, generated, is_soluble, preimage, prime_divisors,
};

/// `𝓜(R) = {N_G(R)}`, by exhaustive search.
pub fn brute_weak_subnormal(
    inst: &GroupInstance,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<bool, OracleError> {
    let a = analyze(inst, r, bounds, rng)?;
    if a.mode != Mode::Exhaustive {
        return Err(OracleError::Infeasible(format!(
            "{} at r = {r} needs exhaustive search",
            inst.name
        )));
    }
    Ok(a.unique().is_some_and(|h| h.same_group(&a.ngr)))
}

/// The four conditions of the equivalence for `𝓜(R) = {N_G(R₀)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivReport {
    pub instance: String,
    pub r: u64,
    /// `N_G(R₀) = N_G(R)`.
    pub normalizers_equal: bool,
    /// `𝓜(O_r(H)) = {H}`.
    pub m_or_h_unique: bool,
    /// `G = O_r(H)·T`.
    pub or_h_supplements_socle: bool,
    /// `[R, H ∩ T] ≤ R₀`.
    pub commutator_in_r0: bool,
    pub all_agree: bool,
}

/// Checks that the four conditions agree, given `𝓜(R) = {H}` with `H = N_G(R₀)`.
pub fn check_lemma_equiv(
    inst: &GroupInstance,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<EquivReport, OracleError> {
    let a = analyze(inst, r, bounds, rng)?;
    let g = &inst.group;
    let t = &inst.socle;
    let h = match a.unique() {
        Some(h) if h.same_group(&a.ngr0) => h.clone(),
        _ => {
            return Err(OracleError::Precondition(format!(
                "{} at r = {r}: 𝓜(R) is not {{N_G(R₀)}}",
                inst.name
            )))
        }
    };
    let normalizers_equal = a.ngr0.same_group(&a.ngr);
    let orh = or_of(&h, &a.sylow, bounds)?;
    let m_or_h_unique = unique_overgroup_is(g, &orh, &h, bounds, rng)?.ok_or_else(|| {
        OracleError::Infeasible(format!(
            "|G : O_r(H)| for {} exceeds the coset bound",
            inst.name
        ))
    })?;
    let orh_t = intersection(&orh, t, bounds)?;
    let product = orh.order() * t.order() / orh_t.order();
    let or_h_supplements_socle = &product == g.order();
    let h0 = intersection(&h, t, bounds)?;
    let commutator_in_r0 = a.sylow.generators().iter().all(|x| {
        h0.generators()
            .iter()
            .all(|y| a.r0.contains(&commutator(x, y)))
    });
    let all = [
        normalizers_equal,
        m_or_h_unique,
        or_h_supplements_socle,
        commutator_in_r0,
    ];
    Ok(EquivReport {
        instance: inst.name.clone(),
        r,
        normalizers_equal,
        m_or_h_unique,
        or_h_supplements_socle,
        commutator_in_r0,
        all_agree: all.iter().all(|&x| x == all[0]),
    })
}

/// Both sides of the criterion for a coprime complement to lie in a unique maximal subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeReport {
    pub group: String,
    /// `K` lies in a unique maximal subgroup of `G`.
    pub unique_overgroup: bool,
    pub normal_is_p_group: bool,
    /// `K` fixes no proper nontrivial subgroup of `N/Φ(N)`; absent unless `N` is a `p`-group.
    pub irreducible: Option<bool>,
    pub holds: bool,
}

/// The smallest `K`-invariant subgroup of `N` containing `Φ` and `x`.
fn invariant_closure(phi: &PermGroup, x: &Perm, k: &PermGroup) -> Result<PermGroup, OracleError> {
    let mut gens: Vec<Perm> = phi.generators().to_vec();
    gens.push(x.clone());
    loop {
        let m = generated(phi.degree(), gens.clone())?;
        let missing: Vec<Perm> = m
            .generators()
            .iter()
            .flat_map(|y| k.generators().iter().map(move |s| y.conj(s)))
            .filter(|z| !m.contains(z))
            .collect();
        if missing.is_empty() {
            return Ok(m);
        }
        gens.extend(missing);
    }
}

pub fn check_coprime_lemma(
    sd: &Semidirect,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<CoprimeReport, OracleError> {
    let (g, n, k) = (&sd.group, &sd.normal, &sd.complement);
    let gcd = num_gcd(n.size(), k.size());
    if !n.is_normal_in(g) || gcd != 1 || n.size() * k.size() != g.size() {
        return Err(OracleError::Precondition(format!(
            "{} is not a coprime split extension N:K",
            sd.name
        )));
    }
    let unique_overgroup = maximal_overgroups(g, k, bounds, rng)?.len() == 1;
    let primes = prime_divisors(n.order());
    let normal_is_p_group = primes.len() == 1;
    let irreducible = if normal_is_p_group {
        let phi = frattini_small(n, bounds, rng)?;
        let mut irr = true;
        for x in n.elements() {
            if !phi.contains(&x) && invariant_closure(&phi, &x, k)?.order() != n.order() {
                irr = false;
                break;
            }
        }
        Some(irr)
    } else {
        None
    };
    let rhs = normal_is_p_group && irreducible == Some(true);
    Ok(CoprimeReport {
        group: sd.name.to_string(),
        unique_overgroup,
        normal_is_p_group,
        irreducible,
        holds: unique_overgroup == rhs,
    })
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// `D` (the preimage of `Φ(G/O_r(G))`) against the intersection of the `r′`-index maximal subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RFrattiniReport {
    pub group: String,
    pub r: u64,
    pub or_order: u64,
    pub d_order: u64,
    pub intersection_order: u64,
    pub equal: bool,
    pub quotient_or_trivial: bool,
    pub quotient_frattini_trivial: bool,
    pub holds: bool,
}

/// `G/N` as a permutation group, with the map from `G`.
fn quotient(
    g: &PermGroup,
    n: &PermGroup,
    bounds: &Bounds,
) -> Result<(permgroup::CosetSpace, PermGroup), OracleError> {
    coset_action(g, n, bounds)
}

pub fn check_rfrattini(
    name: &str,
    g: &PermGroup,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<RFrattiniReport, OracleError> {
    if g.size() > bounds.max_small_order {
        return Err(OracleError::Infeasible(format!(
            "|{name}| = {} exceeds {}",
            g.order(),
            bounds.max_small_order
        )));
    }
    if !g.size().is_multiple_of(r) {
        return Err(OracleError::Precondition(format!(
            "{r} does not divide |{name}|"
        )));
    }
    let or = pcore(g, r, bounds, rng)?;
    let (space, q) = quotient(g, &or, bounds)?;
    let phi_q = frattini_small(&q, bounds, rng)?;
    let d = preimage(g, &space, &phi_q, bounds)?;
    let rprime: Vec<PermGroup> = maximal_subgroups_small(g, bounds, rng)?
        .into_iter()
        .filter(|m| !(g.size() / m.size()).is_multiple_of(r))
        .collect();
    let a = if rprime.is_empty() {
        g.clone()
    } else {
        intersection_all(&rprime, bounds)?
    };
    let (_, qd) = quotient(g, &d, bounds)?;
    let quotient_or_trivial = pcore(&qd, r, bounds, rng)?.is_trivial();
    let quotient_frattini_trivial =
        qd.size() == 1 || frattini_small(&qd, bounds, rng)?.is_trivial();
    let equal = d.same_group(&a);
    Ok(RFrattiniReport {
        group: name.to_string(),
        r,
        or_order: or.size(),
        d_order: d.size(),
        intersection_order: a.size(),
        equal,
        quotient_or_trivial,
        quotient_frattini_trivial,
        holds: equal && quotient_or_trivial && quotient_frattini_trivial,
    })
}

/// For `𝓜(R) = {H}` with `R` not normal: `core_G(H) = D`, and two prime divisors when `G` is soluble.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniqueOvergroupReport {
    pub group: String,
    pub r: u64,
    pub unique: bool,
    pub sylow_normal: bool,
    pub soluble: bool,
    pub prime_divisors: usize,
    pub core_equals_d: Option<bool>,
    pub holds: bool,
}

pub fn check_unique_overgroup_structure(
    name: &str,
    g: &PermGroup,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<UniqueOvergroupReport, OracleError> {
    let sylow = sylow_subgroup(g, r, bounds, rng)?;
    let members = maximal_overgroups(g, &sylow, bounds, rng)?;
    let unique = members.len() == 1;
    let sylow_normal = sylow.is_normal_in(g);
    let soluble = is_soluble(g, rng)?;
    let primes = prime_divisors(g.order()).len();
    let mut core_equals_d = None;
    let mut holds = true;
    if unique && !sylow_normal {
        let or = pcore(g, r, bounds, rng)?;
        let (space, q) = quotient(g, &or, bounds)?;
        let d = preimage(g, &space, &frattini_small(&q, bounds, rng)?, bounds)?;
        let c = permgroup::core(g, &members[0], bounds)?;
        let core_is_d = c.same_group(&d) && *c.order() == core_order(g, &members[0], bounds)?;
        core_equals_d = Some(core_is_d);
        holds = core_is_d && (!soluble || primes == 2);
    }
    Ok(UniqueOvergroupReport {
        group: name.to_string(),
        r,
        unique,
        sylow_normal,
        soluble,
        prime_divisors: primes,
        core_equals_d,
        holds,
    })
}
