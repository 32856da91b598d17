//! Intersections, cores, normal closures and full maximal-subgroup
//! enumeration for groups small enough to list.

use std::collections::{HashMap, HashSet};

use crate::bounds::Bounds;
use crate::error::PermError;
use crate::group::PermGroup;
use crate::overgroups::maximal_overgroups;
use crate::perm::Perm;
use crate::sylow::sylow_subgroup;
use crate::GroupRng;

/// `A ∩ B`, by filtering the elements of the smaller group.
pub fn intersection(a: &PermGroup, b: &PermGroup, bounds: &Bounds) -> Result<PermGroup, PermError> {
    let (small, large) = if a.size() <= b.size() { (a, b) } else { (b, a) };
    Bounds::check("enumerated subgroup order", bounds.max_cosets, small.size())?;
    let kept: Vec<Perm> = small
        .elements()
        .into_iter()
        .filter(|x| large.contains(x))
        .collect();
    PermGroup::from_element_list(a.degree(), &kept)
}

/// Intersection of a nonempty list of subgroups.
pub fn intersection_all(groups: &[PermGroup], bounds: &Bounds) -> Result<PermGroup, PermError> {
    let smallest = groups
        .iter()
        .min_by_key(|h| h.size())
        .expect("nonempty list");
    Bounds::check(
        "enumerated subgroup order",
        bounds.max_cosets,
        smallest.size(),
    )?;
    let kept: Vec<Perm> = smallest
        .elements()
        .into_iter()
        .filter(|x| groups.iter().all(|h| h.contains(x)))
        .collect();
    PermGroup::from_element_list(smallest.degree(), &kept)
}

/// `core_G(H)`, by shrinking `K := K ∩ K^s` over generators `s` of `G` until stable.
pub fn core(g: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<PermGroup, PermError> {
    Bounds::check("enumerated subgroup order", bounds.max_cosets, h.size())?;
    let inv_gens: Vec<Perm> = g.generators().iter().map(|s| s.inv()).collect();
    let mut k: HashSet<Perm> = h.elements().into_iter().collect();
    loop {
        let before = k.len();
        for si in &inv_gens {
            let next: HashSet<Perm> = k
                .iter()
                .filter(|x| k.contains(&x.conj(si)))
                .cloned()
                .collect();
            k = next;
        }
        if k.len() == before {
            break;
        }
    }
    let mut elems: Vec<Perm> = k.into_iter().collect();
    elems.sort();
    PermGroup::from_element_list(h.degree(), &elems)
}

/// The normal closure of `H` in `G`.
pub fn normal_closure(
    g: &PermGroup,
    h: &PermGroup,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    let mut k = h.clone();
    loop {
        if k.order() == g.order() {
            return Ok(k);
        }
        let missing: Vec<Perm> = k
            .generators()
            .iter()
            .flat_map(|x| g.generators().iter().map(move |s| x.conj(s)))
            .filter(|y| !k.contains(y))
            .collect();
        if missing.is_empty() {
            return Ok(k);
        }
        k = k.join(&missing, rng)?;
    }
}

/// `O_r(G)`: the core of a Sylow `r`-subgroup.
pub fn pcore(
    g: &PermGroup,
    r: u64,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    let p = sylow_subgroup(g, r, bounds, rng)?;
    core(g, &p, bounds)
}

/// Conjugacy-class representatives of the elements of prime order.
fn prime_order_class_reps(g: &PermGroup, elems: &[Perm]) -> Vec<Perm> {
    let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut class = vec![usize::MAX; elems.len()];
    let mut reps = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        let o = x.order();
        if class[i] != usize::MAX || o == 1 || !numtheory::is_prime(o) {
            continue;
        }
        class[i] = reps.len();
        let mut stack = vec![i];
        while let Some(j) = stack.pop() {
            for s in g.generators() {
                let y = elems[j].conj(s);
                let t = index[&y];
                if class[t] == usize::MAX {
                    class[t] = reps.len();
                    stack.push(t);
                }
            }
        }
        reps.push(x.clone());
    }
    reps
}

/// Every maximal subgroup of a small group (all conjugates listed), as the
/// conjugation closure of the union of `𝓜(⟨x⟩)` over prime-order class
/// representatives `x`.
pub fn maximal_subgroups_small(
    g: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<Vec<PermGroup>, PermError> {
    Bounds::check("small group order", bounds.max_small_order, g.size())?;
    let n = g.size();
    if n == 1 {
        return Ok(Vec::new());
    }
    if numtheory::is_prime(n) {
        return Ok(vec![PermGroup::trivial(g.degree())]);
    }
    let elems = g.elements();
    let index: HashMap<&Perm, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i as u32))
        .collect();
    let conj_tables: Vec<Vec<u32>> = g
        .generators()
        .iter()
        .map(|s| elems.iter().map(|x| index[&x.conj(s)]).collect())
        .collect();
    let to_key = |h: &PermGroup| -> Vec<u32> {
        let mut v: Vec<u32> = h.elements().iter().map(|x| index[x]).collect();
        v.sort_unstable();
        v
    };
    let mut found: HashMap<Vec<u32>, ()> = HashMap::new();
    let mut order: Vec<Vec<u32>> = Vec::new();
    for x in prime_order_class_reps(g, &elems) {
        let cyc = PermGroup::with_order(g.degree(), vec![x.clone()], &x.order().into(), rng)?;
        for m in maximal_overgroups(g, &cyc, bounds, rng)? {
            let key = to_key(&m);
            if found.insert(key.clone(), ()).is_none() {
                order.push(key);
            }
        }
    }
    let mut k = 0;
    while k < order.len() {
        for table in &conj_tables {
            let mut key: Vec<u32> = order[k].iter().map(|&i| table[i as usize]).collect();
            key.sort_unstable();
            if found.insert(key.clone(), ()).is_none() {
                order.push(key);
            }
        }
        k += 1;
    }
    order.sort();
    order
        .iter()
        .map(|key| {
            let list: Vec<Perm> = key.iter().map(|&i| elems[i as usize].clone()).collect();
            PermGroup::from_element_list(g.degree(), &list)
        })
        .collect()
}

/// The Frattini subgroup of a small group.
pub fn frattini_small(
    g: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<PermGroup, PermError> {
    let maximals = maximal_subgroups_small(g, bounds, rng)?;
    if maximals.is_empty() {
        return Ok(g.clone());
    }
    intersection_all(&maximals, bounds)
}
