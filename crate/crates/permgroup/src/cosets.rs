use std::collections::HashMap;

use num_bigint::BigUint;

use crate::bounds::Bounds;
use crate::error::PermError;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::GroupRng;

/// Subgroups at least this large, of small index, are handled by membership
/// tests instead of enumerating their elements.
const MEMBERSHIP_MIN_ORDER: u64 = 20_000;
const MEMBERSHIP_MAX_INDEX: u64 = 64;

enum Identify {
    /// Canonical key: lexicographically least base image over the coset.
    Keys {
        base: Vec<u32>,
        sub_images: Vec<u32>,
        index: HashMap<Vec<u32>, u32>,
    },
    /// Small index: test `g · rep⁻¹ ∈ H` against each representative.
    Membership {
        sub: Box<PermGroup>,
        rep_invs: Vec<Perm>,
    },
}

/// The right cosets `Hg` of a subgroup `H ≤ G`, enumerated breadth-first
/// from `H` under right multiplication by the generators of `G`.
pub struct CosetSpace {
    reps: Vec<Perm>,
    /// `parent[c] = (p, s)` with `reps[c] = reps[p] · gens[s]`.
    parent: Vec<(u32, u32)>,
    /// Action of each generator of `G` on coset indices.
    gen_action: Vec<Vec<u32>>,
    ident: Identify,
}

impl CosetSpace {
    pub fn new(g: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<CosetSpace, PermError> {
        let index = g.size() / h.size();
        Bounds::check("coset count", bounds.max_cosets, index)?;
        let ident = if h.size() >= MEMBERSHIP_MIN_ORDER && index <= MEMBERSHIP_MAX_INDEX {
            Identify::Membership {
                sub: Box::new(h.clone()),
                rep_invs: Vec::new(),
            }
        } else {
            Bounds::check("enumerated subgroup order", bounds.max_cosets, h.size())?;
            let base = g.base();
            let mut sub_images = Vec::with_capacity(h.size() as usize * base.len());
            for x in h.elements() {
                sub_images.extend(base.iter().map(|&b| x.apply(b)));
            }
            Identify::Keys {
                base,
                sub_images,
                index: HashMap::new(),
            }
        };
        let mut space = CosetSpace {
            reps: Vec::new(),
            parent: Vec::new(),
            gen_action: Vec::new(),
            ident,
        };
        space.enumerate(g, index as usize);
        Ok(space)
    }

    fn key(&self, g: &Perm) -> Vec<u32> {
        let Identify::Keys {
            base, sub_images, ..
        } = &self.ident
        else {
            unreachable!("keys are only used in key mode")
        };
        let l = base.len();
        let mut best: Vec<u32> = sub_images[..l].iter().map(|&p| g.apply(p)).collect();
        for chunk in sub_images.chunks_exact(l).skip(1) {
            for (k, &p) in chunk.iter().enumerate() {
                let v = g.apply(p);
                if v < best[k] {
                    for (kk, &pp) in chunk.iter().enumerate().skip(k) {
                        best[kk] = g.apply(pp);
                    }
                    break;
                }
                if v > best[k] {
                    break;
                }
            }
        }
        best
    }

    /// Index of the coset `Hg`, if it has been enumerated.
    pub fn coset_of(&self, g: &Perm) -> Option<u32> {
        match &self.ident {
            Identify::Keys { index, .. } => index.get(&self.key(g)).copied(),
            Identify::Membership { sub, rep_invs } => rep_invs
                .iter()
                .position(|ri| sub.contains(&g.mul(ri)))
                .map(|i| i as u32),
        }
    }

    fn insert(&mut self, rep: Perm, parent: (u32, u32)) -> u32 {
        let c = self.reps.len() as u32;
        if matches!(self.ident, Identify::Keys { .. }) {
            let key = self.key(&rep);
            if let Identify::Keys { index, .. } = &mut self.ident {
                index.insert(key, c);
            }
        } else if let Identify::Membership { rep_invs, .. } = &mut self.ident {
            rep_invs.push(rep.inv());
        }
        self.reps.push(rep);
        self.parent.push(parent);
        c
    }

    fn enumerate(&mut self, g: &PermGroup, expected: usize) {
        let gens = g.generators().to_vec();
        self.gen_action = vec![Vec::with_capacity(expected); gens.len()];
        self.insert(g.identity(), (0, u32::MAX));
        let mut k = 0;
        while k < self.reps.len() {
            for (si, s) in gens.iter().enumerate() {
                let x = self.reps[k].mul(s);
                let c = match self.coset_of(&x) {
                    Some(c) => c,
                    None => self.insert(x, (k as u32, si as u32)),
                };
                self.gen_action[si].push(c);
            }
            k += 1;
        }
        debug_assert_eq!(self.reps.len(), expected);
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, c: u32) -> &Perm {
        &self.reps[c as usize]
    }

    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }

    /// Action of the `i`-th generator of `G` on cosets.
    pub fn generator_action(&self, i: usize) -> &[u32] {
        &self.gen_action[i]
    }

    /// Action of an arbitrary element of `G` on cosets: `Hx ↦ Hxg`.
    pub fn action_of(&self, g: &Perm) -> Vec<u32> {
        self.reps
            .iter()
            .map(|r| self.coset_of(&r.mul(g)).expect("element lies in G"))
            .collect()
    }

    /// Generator indices whose product, left to right, is the representative of coset `c`.
    pub fn rep_word(&self, c: u32) -> Vec<u32> {
        let mut path = Vec::new();
        let mut x = c;
        while x != 0 {
            let (p, s) = self.parent[x as usize];
            path.push(s);
            x = p;
        }
        path.reverse();
        path
    }

    /// Image of coset `c` under the product of the generators in `word`.
    pub fn apply_word(&self, word: &[u32], c: u32) -> u32 {
        word.iter()
            .fold(c, |x, &s| self.gen_action[s as usize][x as usize])
    }

    /// Action of the representative of coset `c`, composed along the
    /// breadth-first tree from generator actions.
    pub fn rep_action(&self, c: u32) -> Vec<u32> {
        let word = self.rep_word(c);
        (0..self.len() as u32)
            .map(|x| self.apply_word(&word, x))
            .collect()
    }
}

/// Permutation action of `G` on the right cosets of `H`, and its kernel `core_G(H)`.
pub fn coset_action_kernel(
    g: &PermGroup,
    h: &PermGroup,
    bounds: &Bounds,
    rng: &mut GroupRng,
) -> Result<(PermGroup, PermGroup), PermError> {
    let space = CosetSpace::new(g, h, bounds)?;
    let kernel = core_by_reps(h, space.reps(), bounds)?;
    let n = space.len();
    let gens: Vec<Perm> = (0..g.generators().len())
        .map(|i| {
            Perm::from_images(space.generator_action(i).to_vec())
                .expect("coset action is a bijection")
        })
        .collect();
    let image_order = g.order() / kernel.order();
    let image = PermGroup::with_order(n, gens, &image_order, rng)?;
    Ok((image, kernel))
}

/// `core_G(H) = ⋂ H^t` over coset representatives `t`, by filtering elements of `H`:
/// `x ∈ H^t` iff `t x t⁻¹ ∈ H`.
pub fn core_by_reps(h: &PermGroup, reps: &[Perm], bounds: &Bounds) -> Result<PermGroup, PermError> {
    Bounds::check("enumerated subgroup order", bounds.max_cosets, h.size())?;
    let invs: Vec<Perm> = reps.iter().map(|t| t.inv()).collect();
    let kept: Vec<Perm> = h
        .elements()
        .into_iter()
        .filter(|x| invs.iter().all(|ti| h.contains(&x.conj(ti))))
        .collect();
    PermGroup::from_element_list(h.degree(), &kept)
}

/// One representative of each double coset `R g R`, with the number of
/// right cosets `Rx` it contains.
pub struct DoubleCosets {
    pub reps: Vec<Perm>,
    pub sizes: Vec<usize>,
    /// For each right coset, the double coset containing it.
    pub class_of: Vec<u32>,
    /// For each double coset, the right coset its representative came from.
    pub rep_coset: Vec<u32>,
}

/// Orbits of `R` on a coset space of `R` under right multiplication.
pub(crate) fn r_orbits(space: &CosetSpace, r_actions: &[Vec<u32>]) -> DoubleCosets {
    let n = space.len();
    let mut class_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut rep_coset = Vec::new();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        class_of[start] = id;
        let mut stack = vec![start as u32];
        let mut size = 0;
        while let Some(c) = stack.pop() {
            size += 1;
            for act in r_actions {
                let d = act[c as usize];
                if class_of[d as usize] == u32::MAX {
                    class_of[d as usize] = id;
                    stack.push(d);
                }
            }
        }
        reps.push(space.rep(start as u32).clone());
        sizes.push(size);
        rep_coset.push(start as u32);
    }
    DoubleCosets {
        reps,
        sizes,
        class_of,
        rep_coset,
    }
}

/// `R\G/R` as orbits of `R` on the right cosets of `R`; the first
/// representative is the identity.
pub fn double_cosets(
    g: &PermGroup,
    r: &PermGroup,
    bounds: &Bounds,
) -> Result<DoubleCosets, PermError> {
    let space = CosetSpace::new(g, r, bounds)?;
    let r_actions: Vec<Vec<u32>> = r.generators().iter().map(|x| space.action_of(x)).collect();
    Ok(r_orbits(&space, &r_actions))
}

pub fn double_coset_reps(
    g: &PermGroup,
    r: &PermGroup,
    bounds: &Bounds,
) -> Result<Vec<Perm>, PermError> {
    Ok(double_cosets(g, r, bounds)?.reps)
}

/// Index `|G : H|` as an exact integer.
pub fn index(g: &PermGroup, h: &PermGroup) -> BigUint {
    g.order() / h.order()
}
