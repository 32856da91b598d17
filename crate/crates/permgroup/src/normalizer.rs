use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bounds::Bounds;
use crate::error::PermError;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::GroupRng;

/// Orbit of a point together with transversal elements `t` (`point^t = image`).
pub fn orbit_transversal(g: &PermGroup, point: u32) -> (Vec<u32>, Vec<Option<Perm>>) {
    let mut trans: Vec<Option<Perm>> = vec![None; g.degree()];
    trans[point as usize] = Some(g.identity());
    let mut orbit = vec![point];
    let mut k = 0;
    while k < orbit.len() {
        let c = orbit[k];
        let tc = trans[c as usize]
            .clone()
            .expect("orbit point has a transversal");
        for s in g.generators() {
            let d = s.apply(c);
            if trans[d as usize].is_none() {
                trans[d as usize] = Some(tc.mul(s));
                orbit.push(d);
            }
        }
        k += 1;
    }
    (orbit, trans)
}

/// The stabilizer of a point, from uniformly random Schreier generators.
pub fn point_stabilizer(
    g: &PermGroup,
    point: u32,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    let (orbit, trans) = orbit_transversal(g, point);
    let target = g.order() / BigUint::from(orbit.len());
    PermGroup::from_sampler(g.degree(), &target, rng, |rng| {
        let x = g.random_element(rng);
        let t = trans[x.apply(point) as usize]
            .as_ref()
            .expect("image lies in the orbit");
        x.mul(&t.inv())
    })
}

/// Order-independent fingerprint of the subgroup `{t⁻¹ x t : x ∈ elems}`.
fn conjugate_key(elems: &[Perm], t: &Perm) -> (u64, u64) {
    let mut a = 0u64;
    let mut b = 0u64;
    for x in elems {
        let y = x.conj(t);
        a = a.wrapping_add(y.fingerprint(0x9e37_79b9_7f4a_7c15));
        b = b.wrapping_add(y.fingerprint(0xc2b2_ae3d_27d4_eb4f));
    }
    (a, b)
}

/// `N_G(H)` for `H ≤ G`, as the stabilizer of `H` in the conjugation action.
///
/// Conjugates are identified by a fingerprint; a collision could only make
/// the computed orbit shorter, which would make the target order unreachable,
/// so a returned group is always exact. Generators are checked at the end.
pub fn normalizer(
    g: &PermGroup,
    h: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    Bounds::check(
        "normalized subgroup order",
        bounds.max_normalized_order,
        h.size(),
    )?;
    if h.is_trivial() || h.order() == g.order() {
        return Ok(g.clone());
    }
    let elems = h.elements();
    let mut index: HashMap<(u64, u64), u32> = HashMap::new();
    let mut trans: Vec<Perm> = vec![g.identity()];
    index.insert(conjugate_key(&elems, &g.identity()), 0);
    let mut k = 0;
    while k < trans.len() {
        for s in g.generators() {
            let t = trans[k].mul(s);
            let key = conjugate_key(&elems, &t);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                e.insert(trans.len() as u32);
                trans.push(t);
            }
        }
        k += 1;
    }
    let len = BigUint::from(trans.len());
    if !(g.order() % &len).is_zero() {
        return Err(PermError::TargetNotReached {
            target: format!("|G|/{len}"),
            tries: 0,
        });
    }
    let target = g.order() / len;
    let n = PermGroup::from_sampler(g.degree(), &target, rng, |rng| {
        let x = g.random_element(rng);
        let i = index[&conjugate_key(&elems, &x)] as usize;
        x.mul(&trans[i].inv())
    })?;
    if !n.normalizes(h) {
        return Err(PermError::NotNormal);
    }
    Ok(n)
}
