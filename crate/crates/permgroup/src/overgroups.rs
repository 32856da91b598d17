//! Maximal subgroups of `G` containing a given subgroup `R`.
//!
//! A subgroup `K ⊇ R` is the union of the right cosets `Rk`, `k ∈ K`, which
//! is the orbit of the trivial coset under `K` acting on `R\G`. Every
//! question about the lattice above `R` therefore reduces to orbit
//! computations on the coset space, which are exact.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::bounds::Bounds;
use crate::cosets::{r_orbits, CosetSpace, DoubleCosets};
use crate::error::PermError;
use crate::group::PermGroup;
use crate::normalizer::normalizer;
use crate::perm::Perm;
use crate::GroupRng;

type Bits = Vec<u64>;

const SYMMETRY_MIN_DOUBLE_COSETS: usize = 1000;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn is_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn popcount(b: &Bits) -> usize {
    b.iter().map(|x| x.count_ones() as usize).sum()
}

/// A coset action given as a table or as a word in the generators of `G`.
#[derive(Clone, Copy)]
enum Step<'a> {
    Table(&'a [u32]),
    Word(&'a [u32]),
}

impl Step<'_> {
    fn apply(self, space: &CosetSpace, c: u32) -> u32 {
        match self {
            Step::Table(t) => t[c as usize],
            Step::Word(w) => space.apply_word(w, c),
        }
    }
}

/// Closure of `base` under `old` and `new`, where `base` is already closed
/// under `old`; `None` once it has more than `limit` cosets.
fn extend_closure(
    space: &CosetSpace,
    base: &Bits,
    old: &[Step],
    new: &[Step],
    limit: usize,
) -> Option<Bits> {
    let mut seen = base.clone();
    let mut count = popcount(base);
    let mut fresh: Vec<u32> = Vec::new();
    let mut visit = |d: u32, seen: &mut Bits, fresh: &mut Vec<u32>| {
        if !bit(seen, d as usize) {
            set_bit(seen, d as usize);
            count += 1;
            fresh.push(d);
        }
        count <= limit
    };
    for (w, &word) in base.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let c = (w * 64 + word.trailing_zeros() as usize) as u32;
            word &= word - 1;
            for step in new {
                if !visit(step.apply(space, c), &mut seen, &mut fresh) {
                    return None;
                }
            }
        }
    }
    while let Some(c) = fresh.pop() {
        for step in old.iter().chain(new) {
            if !visit(step.apply(space, c), &mut seen, &mut fresh) {
                return None;
            }
        }
    }
    Some(seen)
}

fn map_set(set: &Bits, map: &[u32]) -> Bits {
    let mut out = bits_new(map.len());
    for (i, &m) in map.iter().enumerate() {
        if bit(set, i) {
            set_bit(&mut out, m as usize);
        }
    }
    out
}

/// A proper overgroup of `R`: its coset set and generators beyond those of `R`.
struct Node {
    set: Bits,
    gens: Vec<Perm>,
    /// Atom list, for the one node of each orbit that is explored.
    atoms: Option<Vec<usize>>,
    /// Index of the explored node in the same orbit.
    explored: usize,
    /// For explored nodes: whether some atom extends it properly.
    extended: Option<bool>,
}

/// Adds a new node and all its images under `conj`.
fn add_orbit(
    nodes: &mut Vec<Node>,
    index: &mut HashMap<Bits, usize>,
    conj: &[(Perm, Vec<u32>)],
    atoms: Vec<usize>,
    gens: Vec<Perm>,
    set: Bits,
) {
    let explored = nodes.len();
    index.insert(set.clone(), explored);
    nodes.push(Node {
        set,
        gens,
        atoms: Some(atoms),
        explored,
        extended: None,
    });
    let mut k = explored;
    while k < nodes.len() {
        for (x, map) in conj {
            let image = map_set(&nodes[k].set, map);
            if !index.contains_key(&image) {
                let gens = nodes[k].gens.iter().map(|y| y.conj(x)).collect();
                index.insert(image.clone(), nodes.len());
                nodes.push(Node {
                    set: image,
                    gens,
                    atoms: None,
                    explored,
                    extended: None,
                });
            }
        }
        k += 1;
    }
}

/// Result of exploring the proper overgroups of `R`.
pub struct OvergroupSearch {
    /// The maximal subgroups of `G` containing `R`.
    pub members: Vec<PermGroup>,
    /// Cosets `Rx` contained in each member.
    pub member_cosets: Vec<Vec<u32>>,
    pub double_cosets: DoubleCosets,
    /// Number of distinct proper subgroups `⟨R, g⟩` over double-coset representatives.
    pub atoms: usize,
    /// Number of proper overgroups of `R` visited (excluding `R` itself).
    pub visited: usize,
    /// Whether every proper `⟨R, g⟩` lies in some returned member.
    pub completeness: bool,
}

/// All maximal subgroups of `G` containing `R`, as a complete duplicate-free list.
pub fn maximal_overgroups(
    g: &PermGroup,
    r: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<Vec<PermGroup>, PermError> {
    Ok(overgroup_search(g, r, bounds, rng)?.members)
}

/// Explores every proper overgroup of `R` as a join of the subgroups
/// `⟨R, g⟩` (`g` over double-coset representatives) and keeps those with no
/// proper extension. Complete: any maximal `M ⊇ R` is reached along a chain
/// of joins of such subgroups inside `M`.
pub fn overgroup_search(
    g: &PermGroup,
    r: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<OvergroupSearch, PermError> {
    Bounds::check("group order", bounds.max_order, g.size())?;
    let space = CosetSpace::new(g, r, bounds)?;
    let n = space.len();
    let r_actions: Vec<Vec<u32>> = r.generators().iter().map(|x| space.action_of(x)).collect();
    let dc = r_orbits(&space, &r_actions);
    if n == 1 {
        return Ok(OvergroupSearch {
            members: Vec::new(),
            member_cosets: Vec::new(),
            double_cosets: dc,
            atoms: 0,
            visited: 0,
            completeness: true,
        });
    }
    let limit = n / 2;
    let r_steps: Vec<Step> = r_actions.iter().map(|v| Step::Table(v)).collect();
    let mut trivial = bits_new(n);
    set_bit(&mut trivial, 0);

    // Conjugation by N_G(R) and inversion permute the subgroups ⟨R, g⟩ and
    // the overgroups of R, so one member of each orbit is explored. Computing
    // N_G(R) pays off only when there are many double cosets.
    let conj: Vec<(Perm, Vec<u32>)> = if dc.reps.len() < SYMMETRY_MIN_DOUBLE_COSETS {
        Vec::new()
    } else {
        match normalizer(g, r, bounds, rng) {
            Ok(nr) => nr
                .generators()
                .iter()
                .filter(|x| !r.contains(x))
                .map(|x| {
                    let xi = x.inv();
                    let map = (0..n as u32)
                        .map(|c| {
                            space
                                .coset_of(&xi.mul(space.rep(c)).mul(x))
                                .expect("N_G(R) permutes the cosets of R")
                        })
                        .collect();
                    (x.clone(), map)
                })
                .collect(),
            Err(PermError::BoundExceeded { .. }) => Vec::new(),
            Err(e) => return Err(e),
        }
    };
    let classes = dc.reps.len();
    let inv_class: Vec<u32> = dc
        .reps
        .iter()
        .map(|x| dc.class_of[space.coset_of(&x.inv()).expect("inverse lies in G") as usize])
        .collect();

    // Proper subgroups ⟨R, g⟩, deduplicated by coset set.
    let mut atom_actions: Vec<Vec<u32>> = Vec::new();
    let mut atom_sets: Vec<Bits> = Vec::new();
    let mut atom_reps: Vec<Perm> = Vec::new();
    let mut seen_atoms: HashMap<Bits, usize> = HashMap::new();
    let mut done = vec![false; classes];
    done[0] = true;
    for d0 in 1..classes {
        if done[d0] {
            continue;
        }
        done[d0] = true;
        let word = space.rep_word(dc.rep_coset[d0]);
        let first = extend_closure(&space, &trivial, &r_steps, &[Step::Word(&word)], limit);
        let mut queue = vec![(d0, first)];
        while let Some((d, set)) = queue.pop() {
            let e = inv_class[d] as usize;
            if !done[e] {
                done[e] = true;
                queue.push((e, set.clone()));
            }
            for (_, map) in &conj {
                let e = dc.class_of[map[dc.rep_coset[d] as usize] as usize] as usize;
                if !done[e] {
                    done[e] = true;
                    queue.push((e, set.as_ref().map(|s| map_set(s, map))));
                }
            }
            if let Some(set) = set {
                seen_atoms.entry(set.clone()).or_insert_with(|| {
                    atom_actions.push(space.rep_action(dc.rep_coset[d]));
                    atom_sets.push(set);
                    atom_reps.push(dc.reps[d].clone());
                    atom_reps.len() - 1
                });
            }
        }
    }

    // Worklist over proper overgroups. Each orbit under `conj` has one
    // explored node, stored with its atom list; the others are images of it.
    let mut nodes: Vec<Node> = Vec::new();
    let mut node_index: HashMap<Bits, usize> = HashMap::new();
    for (a, set) in atom_sets.iter().enumerate() {
        if !node_index.contains_key(set) {
            let gens = vec![atom_reps[a].clone()];
            add_orbit(
                &mut nodes,
                &mut node_index,
                &conj,
                vec![a],
                gens,
                set.clone(),
            );
        }
    }
    let mut k = 0;
    while k < nodes.len() {
        let Some(atoms) = nodes[k].atoms.clone() else {
            k += 1;
            continue;
        };
        let set = nodes[k].set.clone();
        let mut old = r_steps.clone();
        old.extend(atoms.iter().map(|&b| Step::Table(&atom_actions[b])));
        let mut extended = false;
        for (a, aset) in atom_sets.iter().enumerate() {
            if is_subset(aset, &set) {
                continue;
            }
            let Some(joined) =
                extend_closure(&space, &set, &old, &[Step::Table(&atom_actions[a])], limit)
            else {
                continue;
            };
            extended = true;
            if !node_index.contains_key(&joined) {
                let mut list = atoms.clone();
                list.push(a);
                let gens = list.iter().map(|&b| atom_reps[b].clone()).collect();
                add_orbit(&mut nodes, &mut node_index, &conj, list, gens, joined);
            }
        }
        nodes[k].extended = Some(extended);
        k += 1;
    }
    let maximal: Vec<usize> = (0..nodes.len())
        .filter(|&i| nodes[nodes[i].explored].extended == Some(false))
        .collect();

    let mut members = Vec::new();
    let mut member_cosets = Vec::new();
    if nodes.is_empty() {
        // Every ⟨R, g⟩ is G, so R itself is maximal.
        members.push(r.clone());
        member_cosets.push(vec![0]);
    }
    for &m in &maximal {
        let node = &nodes[m];
        let mut gens = r.generators().to_vec();
        gens.extend(node.gens.iter().cloned());
        let order = r.order() * BigUint::from(popcount(&node.set));
        members.push(PermGroup::with_order(g.degree(), gens, &order, rng)?);
        member_cosets.push(
            (0..n as u32)
                .filter(|&c| bit(&node.set, c as usize))
                .collect(),
        );
    }
    let completeness = atom_sets
        .iter()
        .all(|a| maximal.iter().any(|&m| is_subset(a, &nodes[m].set)));
    Ok(OvergroupSearch {
        members,
        member_cosets,
        double_cosets: dc,
        atoms: atom_sets.len(),
        visited: nodes.len(),
        completeness,
    })
}

/// Number of `G`-classes among overgroups of a Sylow subgroup `R`.
/// Two such overgroups are `G`-conjugate iff they are `N_G(R)`-conjugate.
pub fn conjugacy_classes_of_overgroups(
    g: &PermGroup,
    r: &PermGroup,
    members: &[PermGroup],
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<usize, PermError> {
    let n = normalizer(g, r, bounds, rng)?;
    Ok(classes_under(n.generators(), members))
}

/// Orbits of the conjugation action of `gens` on a conjugation-closed list of subgroups.
pub fn classes_under(gens: &[Perm], members: &[PermGroup]) -> usize {
    let mut parent: Vec<usize> = (0..members.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, m) in members.iter().enumerate() {
        for s in gens {
            let conj: Vec<Perm> = m.generators().iter().map(|x| x.conj(s)).collect();
            if let Some(j) = members
                .iter()
                .position(|k| k.order() == m.order() && conj.iter().all(|x| k.contains(x)))
            {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..members.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}
