//! Small helpers over permgroup.

use num_bigint::BigUint;
use permgroup::{Bounds, CosetSpace, Perm, PermError, PermGroup};

use crate::error::OracleError;

/// Cycle notation on points `0..n`, e.g. `(0,1,2)(3,4)`; the identity is `()`.
pub fn cycle_string(p: &Perm) -> String {
    let cycles: Vec<Vec<u32>> = p.cycles().into_iter().filter(|c| c.len() > 1).collect();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            format!(
                "({})",
                c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect()
}

/// The permutation action of `G` on the right cosets of `H`.
pub fn coset_action(
    g: &PermGroup,
    h: &PermGroup,
    bounds: &Bounds,
) -> Result<(CosetSpace, PermGroup), OracleError> {
    let space = CosetSpace::new(g, h, bounds)?;
    let gens = (0..g.generators().len())
        .map(|i| Perm::from_images(space.generator_action(i).to_vec()))
        .collect::<Result<Vec<_>, PermError>>()?;
    let image = PermGroup::new(space.len(), gens)?;
    Ok((space, image))
}

/// `|core_G(H)|`, as `|G|` over the order of the coset action image.
pub fn core_order(g: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<BigUint, OracleError> {
    let (_, image) = coset_action(g, h, bounds)?;
    Ok(g.order() / image.order())
}

/// The elements of `G` whose image under the coset action of `G` on `H` lies in `image_sub`.
pub fn preimage(
    g: &PermGroup,
    space: &CosetSpace,
    image_sub: &PermGroup,
    bounds: &Bounds,
) -> Result<PermGroup, OracleError> {
    if g.size() > bounds.max_small_order {
        return Err(OracleError::Infeasible(format!(
            "preimage in a group of order {}",
            g.order()
        )));
    }
    let kept: Vec<Perm> = g
        .elements()
        .into_iter()
        .filter(|x| Perm::from_images(space.action_of(x)).is_ok_and(|y| image_sub.contains(&y)))
        .collect();
    Ok(PermGroup::from_element_list(g.degree(), &kept)?)
}

/// The group generated by `gens` on `degree` points.
pub fn generated(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, OracleError> {
    Ok(PermGroup::new(degree, gens)?)
}

/// `[a, b] = a⁻¹ b⁻¹ a b`.
pub fn commutator(a: &Perm, b: &Perm) -> Perm {
    a.inv().mul(&b.inv()).mul(a).mul(b)
}

/// The derived subgroup: the normal closure of the commutators of generators.
pub fn derived_subgroup(
    g: &PermGroup,
    rng: &mut permgroup::GroupRng,
) -> Result<PermGroup, OracleError> {
    let gens = g.generators();
    let comms: Vec<Perm> = gens
        .iter()
        .flat_map(|a| gens.iter().map(move |b| commutator(a, b)))
        .filter(|c| !c.is_identity())
        .collect();
    if comms.is_empty() {
        return Ok(PermGroup::trivial(g.degree()));
    }
    let c = generated(g.degree(), comms)?;
    Ok(permgroup::normal_closure(g, &c, rng)?)
}

/// Whether the derived series reaches the trivial group.
pub fn is_soluble(g: &PermGroup, rng: &mut permgroup::GroupRng) -> Result<bool, OracleError> {
    let mut k = g.clone();
    while !k.is_trivial() {
        let d = derived_subgroup(&k, rng)?;
        if d.order() == k.order() {
            return Ok(false);
        }
        k = d;
    }
    Ok(true)
}

/// Distinct prime divisors of `n`.
pub fn prime_divisors(n: &BigUint) -> Vec<u64> {
    let n = u64::try_from(n).expect("group orders in scope fit in u64");
    numtheory::prime_divisors(n)
}
