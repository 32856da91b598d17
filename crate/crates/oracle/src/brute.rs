//! `𝓜(R)` by exhaustive search, and the quantities derived from it.

use catalog::GroupInstance;
use num_bigint::BigUint;
use permgroup::{
    classes_under, core, coset_action_kernel, normal_closure, normalizer, overgroup_search,
    sylow_subgroup, Bounds, CosetSpace, GroupRng, Perm, PermGroup,
};
use serde::{Deserialize, Serialize};

use crate::error::OracleError;
use crate::util::{core_order, cycle_string, generated};

pub const REPORT_SCHEMA: u32 = 1;

/// Number of random joins `⟨R, x⟩` tried in witness mode.
const WITNESS_SAMPLES: usize = 8;
/// Number of `R`-fixed points whose stabilizers are tried in witness mode.
const WITNESS_FIXED_POINTS: usize = 4;

/// How `𝓜(R)` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every overgroup of `R` was explored: the member list is complete.
    Exhaustive,
    /// `|G : R|` is over the coset bound; the members were found above larger
    /// subgroups `K ⊇ R`, so the list is a certified subset of `𝓜(R)`.
    Witness,
}

/// The Sylow data and overgroups of one `(G, r)` pair.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub instance: String,
    pub r: u64,
    pub sylow: PermGroup,
    pub r0: PermGroup,
    pub ngr: PermGroup,
    pub ngr0: PermGroup,
    pub mode: Mode,
    pub members: Vec<PermGroup>,
    /// For each member, the generators it has beyond those of `R`.
    pub witnesses: Vec<Vec<Perm>>,
}

impl Analysis {
    pub fn unique(&self) -> Option<&PermGroup> {
        (self.mode == Mode::Exhaustive && self.members.len() == 1).then(|| &self.members[0])
    }
}

/// `R₀` as the kernel of the action of `R` on the cosets of `T` in `G`.
fn r0_as_kernel(
    g: &PermGroup,
    t: &PermGroup,
    r: &PermGroup,
    bounds: &Bounds,
) -> Result<PermGroup, OracleError> {
    if g.order() == t.order() {
        return Ok(r.clone());
    }
    let space = CosetSpace::new(g, t, bounds)?;
    let id: Vec<u32> = (0..space.len() as u32).collect();
    let kept: Vec<Perm> = r
        .elements()
        .into_iter()
        .filter(|x| space.action_of(x) == id)
        .collect();
    Ok(PermGroup::from_element_list(g.degree(), &kept)?)
}

fn extra_generators(member: &PermGroup, r: &PermGroup) -> Vec<Perm> {
    member
        .generators()
        .iter()
        .filter(|x| !r.contains(x))
        .cloned()
        .collect()
}

/// Computes `R`, `R₀`, `N_G(R)`, `N_G(R₀)` and `𝓜(R)`.
pub fn analyze(
    inst: &GroupInstance,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<Analysis, OracleError> {
    let g = &inst.group;
    if !numtheory::is_prime(r) || !g.size().is_multiple_of(r) {
        return Err(OracleError::Precondition(format!(
            "{r} is not a prime divisor of |{}|",
            inst.name
        )));
    }
    if g.size() > bounds.max_order {
        return Err(OracleError::Infeasible(format!(
            "|{}| = {} exceeds {}",
            inst.name,
            g.order(),
            bounds.max_order
        )));
    }
    let sylow = sylow_subgroup(g, r, bounds, rng)?;
    let r0 = r0_as_kernel(g, &inst.socle, &sylow, bounds)?;
    let ngr = normalizer(g, &sylow, bounds, rng)?;
    let ngr0 = normalizer(g, &r0, bounds, rng)?;
    let index = g.size() / sylow.size();
    let (mode, members) = if index <= bounds.max_cosets {
        let search = overgroup_search(g, &sylow, bounds, rng)?;
        if !search.completeness {
            return Err(OracleError::Precondition(format!(
                "incomplete overgroup search for {} at r = {r}",
                inst.name
            )));
        }
        (Mode::Exhaustive, search.members)
    } else {
        (
            Mode::Witness,
            witness_members(inst, &sylow, &[&ngr, &ngr0], bounds, rng)?,
        )
    };
    let witnesses = members
        .iter()
        .map(|m| extra_generators(m, &sylow))
        .collect();
    Ok(Analysis {
        instance: inst.name.clone(),
        r,
        sylow,
        r0,
        ngr,
        ngr0,
        mode,
        members,
        witnesses,
    })
}

fn push_distinct(found: &mut Vec<PermGroup>, m: PermGroup) {
    if !found.iter().any(|f| f.same_group(&m)) {
        found.push(m);
    }
}

/// At least two distinct maximal subgroups containing `R`, found as
/// maximal overgroups of subgroups `K ⊇ R` of feasible index.
fn witness_members(
    inst: &GroupInstance,
    sylow: &PermGroup,
    normalizers: &[&PermGroup],
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<Vec<PermGroup>, OracleError> {
    let g = &inst.group;
    let mut candidates: Vec<PermGroup> = normalizers.iter().map(|&n| n.clone()).collect();
    let fixed: Vec<u32> = (0..g.degree() as u32)
        .filter(|&p| sylow.generators().iter().all(|x| x.apply(p) == p))
        .take(WITNESS_FIXED_POINTS)
        .collect();
    for p in fixed {
        candidates.push(permgroup::point_stabilizer(g, p, rng)?);
    }
    for _ in 0..WITNESS_SAMPLES {
        let mut gens = sylow.generators().to_vec();
        gens.push(g.random_element(rng));
        candidates.push(generated(g.degree(), gens)?);
    }
    let mut found = Vec::new();
    for k in candidates {
        if k.order() == g.order() || g.size() / k.size() > bounds.max_cosets {
            continue;
        }
        for m in overgroup_search(g, &k, bounds, rng)?.members {
            push_distinct(&mut found, m);
        }
        if found.len() >= 2 {
            return Ok(found);
        }
    }
    Err(OracleError::Infeasible(format!(
        "|{} : R| = {} exceeds {} and no two maximal overgroups were certified",
        inst.name,
        g.size() / sylow.size(),
        bounds.max_cosets
    )))
}

/// One element of `𝓜(R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub order: String,
    pub index: String,
    pub index_r_part: String,
    /// Generators beyond those of `R`, in cycle notation on `0..degree`.
    pub witness: Vec<String>,
    pub core_free: bool,
    pub contains_ngr: bool,
}

/// Properties of the unique member `H`, when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub unique: bool,
    pub maximal_sylow: bool,
    pub weakly_subnormal: Option<bool>,
    pub ngr0_unique: Option<bool>,
    pub or_h_nontrivial: Option<bool>,
    /// `𝓜(O_r(H)) = {H}`; absent when `|G : O_r(H)|` is over the coset bound.
    pub m_or_h_unique: Option<bool>,
    pub or_h_order: Option<String>,
}

/// A named check of a general fact about `𝓜(R)` on this instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub holds: bool,
    /// The hypothesis did not apply.
    pub vacuous: bool,
}

impl InvariantCheck {
    fn new(name: &str, applies: bool, holds: bool) -> InvariantCheck {
        InvariantCheck {
            name: name.to_string(),
            holds: !applies || holds,
            vacuous: !applies,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvergroupReport {
    pub schema: u32,
    pub instance: String,
    pub r: u64,
    pub mode: Mode,
    pub sylow_order: String,
    pub r0_order: String,
    pub ngr_order: String,
    pub ngr0_order: String,
    pub members: Vec<MemberReport>,
    /// Classes of maximal subgroups of `r′`-index (exhaustive mode only).
    pub num_classes_rprime_index: Option<usize>,
    pub flags: Flags,
    pub invariants: Vec<InvariantCheck>,
}

fn r_part_big(n: &BigUint, r: u64) -> BigUint {
    let mut n = n.clone();
    let mut v = BigUint::from(1u32);
    let rr = BigUint::from(r);
    while (&n % &rr) == BigUint::from(0u32) {
        n /= &rr;
        v *= &rr;
    }
    v
}

/// `O_r(H)` for `R ≤ H` Sylow: the core of `R` in `H`, by element filtering.
pub fn or_of(h: &PermGroup, sylow: &PermGroup, bounds: &Bounds) -> Result<PermGroup, OracleError> {
    Ok(core(h, sylow, bounds)?)
}

/// `𝓜(K) = {H}`, or `None` when `|G : K|` is over the coset bound.
pub fn unique_overgroup_is(
    g: &PermGroup,
    k: &PermGroup,
    h: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<Option<bool>, OracleError> {
    if k.is_trivial() {
        // 𝓜(1) holds every maximal subgroup; a non-normal H has distinct conjugates there.
        return Ok((!h.is_normal_in(g)).then_some(false));
    }
    if g.size() / k.size() > bounds.max_cosets {
        return Ok(None);
    }
    let members = overgroup_search(g, k, bounds, rng)?.members;
    Ok(Some(members.len() == 1 && members[0].same_group(h)))
}

/// `𝓜(R)` and the derived flags and invariants.
pub fn brute_m_r(
    inst: &GroupInstance,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<OvergroupReport, OracleError> {
    let a = analyze(inst, r, bounds, rng)?;
    report(inst, &a, bounds, rng)
}

/// Builds the serializable report for an analysis.
pub fn report(
    inst: &GroupInstance,
    a: &Analysis,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<OvergroupReport, OracleError> {
    let g = &inst.group;
    let r = a.r;
    let mut members = Vec::new();
    let mut core_free = Vec::new();
    for (m, w) in a.members.iter().zip(&a.witnesses) {
        let index = g.order() / m.order();
        let free = core_order(g, m, bounds)? == BigUint::from(1u32);
        core_free.push(free);
        members.push(MemberReport {
            order: m.order().to_string(),
            index: index.to_string(),
            index_r_part: r_part_big(&index, r).to_string(),
            witness: w.iter().map(cycle_string).collect(),
            core_free: free,
            contains_ngr: a.ngr.is_subgroup_of(m),
        });
    }
    let exhaustive = a.mode == Mode::Exhaustive;
    let num_classes = exhaustive.then(|| classes_under(a.ngr.generators(), &a.members));
    let mut flags = Flags {
        unique: a.unique().is_some(),
        maximal_sylow: a.unique().is_some_and(|h| h.order() == a.sylow.order()),
        weakly_subnormal: None,
        ngr0_unique: None,
        or_h_nontrivial: None,
        m_or_h_unique: None,
        or_h_order: None,
    };
    let mut invariants = Vec::new();
    let r0_trivial = a.r0.is_trivial();
    let t_rpart = r_part_big(inst.socle.order(), r);
    invariants.push(InvariantCheck::new(
        "r0_is_sylow_of_socle",
        true,
        *a.r0.order() == t_rpart,
    ));
    invariants.push(InvariantCheck::new(
        "member_index_prime_to_r",
        true,
        members.iter().all(|m| m.index_r_part == "1"),
    ));
    let incomparable = a.members.iter().enumerate().all(|(i, x)| {
        a.members
            .iter()
            .enumerate()
            .all(|(j, y)| i == j || !x.is_subgroup_of(y))
    });
    invariants.push(InvariantCheck::new(
        "members_pairwise_incomparable",
        true,
        incomparable,
    ));
    invariants.push(InvariantCheck::new(
        "trivial_r0_forces_two_members",
        r0_trivial,
        !flags.unique && (exhaustive || a.members.len() >= 2),
    ));
    if exhaustive {
        invariants.push(InvariantCheck::new(
            "unique_iff_one_rprime_class",
            !r0_trivial,
            flags.unique == (num_classes == Some(1)),
        ));
        invariants.push(InvariantCheck::new(
            "core_free_member_contains_ngr",
            !r0_trivial,
            members
                .iter()
                .zip(&core_free)
                .any(|(m, &free)| free && m.contains_ngr),
        ));
    }
    if let Some(h) = a.unique() {
        let outer = (g.order() / inst.socle.order())
            .to_string()
            .parse::<u64>()
            .expect("small outer order");
        invariants.push(InvariantCheck::new(
            "unique_forces_r_quotient",
            !r0_trivial,
            numtheory::prime_divisors(outer).iter().all(|&p| p == r),
        ));
        let normal = a.sylow.is_normal_in(g);
        let closure_is_g = !normal && normal_closure(g, &a.sylow, rng)?.order() == g.order();
        invariants.push(InvariantCheck::new(
            "unique_nonnormal_sylow_generates",
            !normal,
            closure_is_g,
        ));
        invariants.push(InvariantCheck::new(
            "unique_member_is_core_free",
            true,
            core_free[0],
        ));
        flags.weakly_subnormal = Some(h.same_group(&a.ngr));
        flags.ngr0_unique = Some(h.same_group(&a.ngr0));
        let orh = or_of(h, &a.sylow, bounds)?;
        let (_, kernel) = coset_action_kernel(h, &a.sylow, bounds, rng)?;
        invariants.push(InvariantCheck::new(
            "or_h_two_ways",
            true,
            kernel.same_group(&orh),
        ));
        flags.or_h_nontrivial = Some(!orh.is_trivial());
        flags.or_h_order = Some(orh.order().to_string());
        flags.m_or_h_unique = unique_overgroup_is(g, &orh, h, bounds, rng)?;
    }
    Ok(OvergroupReport {
        schema: REPORT_SCHEMA,
        instance: inst.name.clone(),
        r,
        mode: a.mode,
        sylow_order: a.sylow.order().to_string(),
        r0_order: a.r0.order().to_string(),
        ngr_order: a.ngr.order().to_string(),
        ngr0_order: a.ngr0.order().to_string(),
        members,
        num_classes_rprime_index: num_classes,
        flags,
        invariants,
    })
}
