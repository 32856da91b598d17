use num_bigint::BigUint;

use crate::bounds::Bounds;
use crate::error::PermError;
use crate::group::PermGroup;
use crate::normalizer::{normalizer, point_stabilizer};
use crate::perm::Perm;
use crate::GroupRng;

const START_SAMPLES: usize = 40;
const CLIMB_GUARD: usize = 20_000;

/// Largest power of `r` dividing `n`.
pub fn r_part(n: u64, r: u64) -> u64 {
    let mut n = n;
    let mut v = 1;
    while n.is_multiple_of(r) {
        n /= r;
        v *= r;
    }
    v
}

/// The `r`-part `x^m` of an element, where `m` is the `r′`-part of its order.
pub fn element_r_part(x: &Perm, r: u64) -> Perm {
    let o = x.order();
    x.pow(o / r_part(o, r))
}

/// A Sylow `r`-subgroup of `G`.
///
/// First passes to point stabilizers along orbits of `r′`-length, which keep
/// the full `r`-part of the order. Then starts from the `r`-part of a random element and climbs: while `S` is not
/// Sylow, `N_G(S)/S` has elements of order `r`, so a random element of
/// `N_G(S)` has an `r`-part outside `S` often enough, and adjoining it gives
/// an `r`-group of known order.
pub fn sylow_subgroup(
    g: &PermGroup,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    let target = r_part(g.size(), r);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    if target == g.size() {
        return Ok(g.clone());
    }
    let mut k = g.clone();
    while let Some(point) = rprime_orbit_point(&k, r) {
        k = point_stabilizer(&k, point, rng)?;
    }
    if k.size() == target {
        return Ok(k);
    }
    climb(&k, r, target, bounds, rng)
}

/// A point whose orbit has length greater than 1 and prime to `r`.
fn rprime_orbit_point(g: &PermGroup, r: u64) -> Option<u32> {
    let mut seen = vec![false; g.degree()];
    for p in 0..g.degree() as u32 {
        if seen[p as usize] {
            continue;
        }
        let orbit = g.orbit(p);
        for &x in &orbit {
            seen[x as usize] = true;
        }
        if orbit.len() > 1 && !(orbit.len() as u64).is_multiple_of(r) {
            return Some(p);
        }
    }
    None
}

fn climb(
    g: &PermGroup,
    r: u64,
    target: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    let mut best = g.identity();
    for _ in 0..START_SAMPLES {
        let y = element_r_part(&g.random_element(rng), r);
        if y.order() > best.order() {
            best = y;
        }
    }
    while best.is_identity() {
        best = element_r_part(&g.random_element(rng), r);
    }
    let mut s = PermGroup::with_order(
        g.degree(),
        vec![best.clone()],
        &BigUint::from(best.order()),
        rng,
    )?;
    while s.size() < target {
        let n = normalizer(g, &s, bounds, rng)?;
        let mut found = None;
        for _ in 0..CLIMB_GUARD {
            let y = element_r_part(&n.random_element(rng), r);
            if !s.contains(&y) {
                found = Some(y);
                break;
            }
        }
        let y = found.ok_or(PermError::TargetNotReached {
            target: target.to_string(),
            tries: CLIMB_GUARD as u64,
        })?;
        let mut step = 1u64;
        let mut z = y.pow(r);
        step *= r;
        while !s.contains(&z) {
            z = z.pow(r);
            step *= r;
        }
        let order = BigUint::from(s.size() * step);
        let mut gens = s.generators().to_vec();
        gens.push(y);
        s = PermGroup::with_order(g.degree(), gens, &order, rng)?;
    }
    Ok(s)
}
