use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;

use crate::chain::StabChain;
use crate::error::PermError;
use crate::perm::Perm;
use crate::GroupRng;

/// Seed used by constructors that do not take an explicit generator.
pub const DEFAULT_SEED: u64 = 0;

pub fn rng_from_seed(seed: u64) -> GroupRng {
    GroupRng::seed_from_u64(seed)
}

/// A permutation group with a verified stabilizer chain and exact order.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    order: BigUint,
}

impl PermGroup {
    fn from_chain(degree: usize, gens: Vec<Perm>, chain: StabChain) -> PermGroup {
        let order = chain.order();
        PermGroup {
            degree,
            gens,
            chain,
            order,
        }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_chain(degree, Vec::new(), StabChain::new(degree))
    }

    /// Builds the group generated by `gens`; the result does not depend on luck
    /// because the randomized chain is verified deterministically.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, PermError> {
        PermGroup::new_seeded(degree, gens, &mut rng_from_seed(DEFAULT_SEED))
    }

    pub fn new_seeded(
        degree: usize,
        gens: Vec<Perm>,
        rng: &mut GroupRng,
    ) -> Result<PermGroup, PermError> {
        let gens: Vec<Perm> = gens
            .into_iter()
            .filter(|g| !g.is_identity() || g.degree() != degree)
            .collect();
        let chain = StabChain::schreier_sims(degree, &gens, None, rng)?;
        Ok(PermGroup::from_chain(degree, gens, chain))
    }

    /// Builds the group generated by `gens`, known to have order `order`.
    /// Exact: the orbit product can only reach `order` once the chain is complete.
    pub fn with_order(
        degree: usize,
        gens: Vec<Perm>,
        order: &BigUint,
        rng: &mut GroupRng,
    ) -> Result<PermGroup, PermError> {
        let gens: Vec<Perm> = gens
            .into_iter()
            .filter(|g| !g.is_identity() || g.degree() != degree)
            .collect();
        let chain = StabChain::schreier_sims(degree, &gens, Some(order), rng)?;
        Ok(PermGroup::from_chain(degree, gens, chain))
    }

    /// Builds a group of known order from a sampler of its elements.
    pub fn from_sampler(
        degree: usize,
        order: &BigUint,
        rng: &mut GroupRng,
        sample: impl FnMut(&mut GroupRng) -> Perm,
    ) -> Result<PermGroup, PermError> {
        let chain = StabChain::from_sampler(degree, order, rng, sample)?;
        let gens = chain.strong_generators().to_vec();
        Ok(PermGroup::from_chain(degree, gens, chain))
    }

    /// The group whose elements are exactly `elements` (which must form a subgroup).
    /// Generators are the strong generators found while sifting.
    pub fn from_element_list(degree: usize, elements: &[Perm]) -> Result<PermGroup, PermError> {
        let mut chain = StabChain::new(degree);
        for e in elements {
            if e.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    got: e.degree(),
                });
            }
            chain.sift_add(e);
        }
        let order = chain.order();
        if order != BigUint::from(elements.len()) {
            return Err(PermError::TargetNotReached {
                target: elements.len().to_string(),
                tries: 0,
            });
        }
        let gens = chain.strong_generators().to_vec();
        Ok(PermGroup::from_chain(degree, gens, chain))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.chain.strong_generators()
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain.base()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.orbit_lengths()
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// The order as a machine integer; every desk-scale group fits.
    pub fn size(&self) -> u64 {
        self.order.to_u64().expect("group order exceeds u64")
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn random_element(&self, rng: &mut GroupRng) -> Perm {
        self.chain.random_element(rng)
    }

    pub fn elements(&self) -> Vec<Perm> {
        self.chain.elements()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.gens.iter().all(|g| other.contains(g))
            && (&other.order % &self.order) == BigUint::from(0u32)
    }

    /// Equality of subgroups: same order and mutual generator membership.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order
            && self.is_subgroup_of(other)
            && other.gens.iter().all(|g| self.contains(g))
    }

    /// `t⁻¹ G t`.
    pub fn conjugate(&self, t: &Perm) -> PermGroup {
        let gens = self.gens.iter().map(|g| g.conj(t)).collect();
        PermGroup::from_chain(self.degree, gens, self.chain.conjugate(t))
    }

    /// Whether `self` normalizes `h` (conjugates of generators stay inside).
    pub fn normalizes(&self, h: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|s| h.gens.iter().all(|x| h.contains(&x.conj(s))))
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g) && g.normalizes(self)
    }

    /// The subgroup generated by `self` and `extra`.
    pub fn join(&self, extra: &[Perm], rng: &mut GroupRng) -> Result<PermGroup, PermError> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().filter(|g| !self.contains(g)).cloned());
        if gens.len() == self.gens.len() {
            return Ok(self.clone());
        }
        PermGroup::new_seeded(self.degree, gens, rng)
    }

    /// Orbit of a point under the generators.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut out = vec![point];
        let mut k = 0;
        while k < out.len() {
            let c = out[k];
            for g in &self.gens {
                let d = g.apply(c);
                if !seen[d as usize] {
                    seen[d as usize] = true;
                    out.push(d);
                }
            }
            k += 1;
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Element orders present in the group (requires enumerating it).
    pub fn element_orders(&self) -> Vec<u64> {
        let set: HashSet<u64> = self.elements().iter().map(|e| e.order()).collect();
        let mut v: Vec<u64> = set.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Whether every element is an `r`-element, i.e. the order is a power of `r`.
    pub fn is_p_group(&self, r: u64) -> bool {
        let mut n = self.size();
        while n.is_multiple_of(r) {
            n /= r;
        }
        n == 1
    }
}
