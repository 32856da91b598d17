//! Base and strong generating set with Schreier-vector transversals.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::error::PermError;
use crate::perm::Perm;
use crate::random::ProductReplacement;
use crate::GroupRng;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// Consecutive trivial sifts after which a randomized build is handed to
/// deterministic verification.
const QUIET_SIFTS: u32 = 24;

/// Sifts tried before a target-order build gives up.
const TARGET_GUARD: u64 = 200_000;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<u32>,
    pub orbit: Vec<u32>,
    /// For each point of the orbit, the strong generator that first reached it.
    pub sv: Vec<u32>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Level {
        let mut sv = vec![NONE; degree];
        sv[base as usize] = ROOT;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            sv,
        }
    }

    #[inline]
    pub fn in_orbit(&self, point: u32) -> bool {
        self.sv[point as usize] != NONE
    }
}

/// A stabilizer chain `G = G⁰ ≥ G¹ ≥ …` with one level per base point.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    gens: Vec<Perm>,
    invs: Vec<Perm>,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> StabChain {
        StabChain {
            degree,
            gens: Vec::new(),
            invs: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` from level `start`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    pub fn sift_from(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let mut beta = h.apply(lvl.base);
            if !lvl.in_orbit(beta) {
                return (h, i);
            }
            while beta != lvl.base {
                let s = lvl.sv[beta as usize] as usize;
                let inv = &self.invs[s];
                h.mul_assign(inv);
                beta = inv.apply(beta);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, lvl) = self.sift_from(g, 0);
        lvl == self.levels.len() && h.is_identity()
    }

    /// The transversal element `u` at `level` with `base^u = point`.
    pub fn transversal(&self, level: usize, point: u32) -> Perm {
        let lvl = &self.levels[level];
        debug_assert!(lvl.in_orbit(point));
        let mut path = Vec::new();
        let mut beta = point;
        while beta != lvl.base {
            let s = lvl.sv[beta as usize] as usize;
            path.push(s);
            beta = self.invs[s].apply(beta);
        }
        let mut u = Perm::identity(self.degree);
        for &s in path.iter().rev() {
            u.mul_assign(&self.gens[s]);
        }
        u
    }

    /// A uniformly distributed element, as a product of random transversal elements.
    pub fn random_element(&self, rng: &mut GroupRng) -> Perm {
        let mut g = Perm::identity(self.degree);
        for i in (0..self.levels.len()).rev() {
            let lvl = &self.levels[i];
            let point = lvl.orbit[rng.gen_range(0..lvl.orbit.len())];
            g.mul_assign(&self.transversal(i, point));
        }
        g
    }

    /// Every element of the group, by running through transversal products.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for i in (0..self.levels.len()).rev() {
            let trans: Vec<Perm> = self.levels[i]
                .orbit
                .iter()
                .map(|&p| self.transversal(i, p))
                .collect();
            let mut next = Vec::with_capacity(out.len() * trans.len());
            for u in &trans {
                for x in &out {
                    next.push(x.mul(u));
                }
            }
            out = next;
        }
        out
    }

    fn push_gen(&mut self, h: Perm) -> u32 {
        self.invs.push(h.inv());
        self.gens.push(h);
        (self.gens.len() - 1) as u32
    }

    fn extend_orbit(&mut self, level: usize, gen: u32) {
        let lvl = &mut self.levels[level];
        lvl.gens.push(gen);
        let old_len = lvl.orbit.len();
        let g = &self.gens[gen as usize];
        for k in 0..old_len {
            let d = g.apply(lvl.orbit[k]);
            if lvl.sv[d as usize] == NONE {
                lvl.sv[d as usize] = gen;
                lvl.orbit.push(d);
            }
        }
        let mut k = old_len;
        while k < lvl.orbit.len() {
            let c = lvl.orbit[k];
            for &s in &lvl.gens {
                let d = self.gens[s as usize].apply(c);
                if lvl.sv[d as usize] == NONE {
                    lvl.sv[d as usize] = s;
                    lvl.orbit.push(d);
                }
            }
            k += 1;
        }
    }

    /// Adds a residue `h` that fixes the first `level` base points.
    fn add_residue(&mut self, h: Perm, level: usize) {
        if level == self.levels.len() {
            let b = h.first_moved().expect("residue is not the identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let id = self.push_gen(h);
        for i in 0..=level {
            self.extend_orbit(i, id);
        }
    }

    /// Sifts `g` and adds its residue if nontrivial; reports whether the chain grew.
    pub fn sift_add(&mut self, g: &Perm) -> bool {
        let (h, level) = self.sift_from(g, 0);
        if h.is_identity() {
            return false;
        }
        self.add_residue(h, level);
        true
    }

    /// Deterministic Schreier-generator check, bottom level upward.
    /// Residues found are added and the affected levels re-checked.
    pub fn verify(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let level = i - 1;
            match self.first_failing_schreier(level) {
                Some((h, j)) => {
                    self.add_residue(h, j);
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    fn first_failing_schreier(&self, level: usize) -> Option<(Perm, usize)> {
        let lvl = &self.levels[level];
        let trans: Vec<Perm> = lvl
            .orbit
            .iter()
            .map(|&p| self.transversal(level, p))
            .collect();
        let mut pos = vec![0usize; self.degree];
        for (k, &p) in lvl.orbit.iter().enumerate() {
            pos[p as usize] = k;
        }
        for (k, &beta) in lvl.orbit.iter().enumerate() {
            for &s in &lvl.gens {
                let s = &self.gens[s as usize];
                let delta = s.apply(beta);
                let mut g = trans[k].mul(s);
                g.mul_assign(&trans[pos[delta as usize]].inv());
                let (h, j) = self.sift_from(&g, level + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Randomized Schreier–Sims. With a target order the build stops exactly
    /// when the orbit product reaches it; otherwise it stops after a run of
    /// trivial sifts and is then verified deterministically.
    pub fn schreier_sims(
        degree: usize,
        gens: &[Perm],
        target: Option<&BigUint>,
        rng: &mut GroupRng,
    ) -> Result<StabChain, PermError> {
        let mut chain = StabChain::new(degree);
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            chain.sift_add(g);
        }
        if gens.iter().all(|g| g.is_identity()) {
            return match target {
                Some(t) if !t.is_one() => Err(PermError::TargetNotReached {
                    target: t.to_string(),
                    tries: 0,
                }),
                _ => Ok(chain),
            };
        }
        let mut pr = ProductReplacement::new(degree, gens, rng);
        match target {
            Some(t) => {
                let mut tries = 0u64;
                while &chain.order() < t {
                    if tries >= TARGET_GUARD {
                        return Err(PermError::TargetNotReached {
                            target: t.to_string(),
                            tries,
                        });
                    }
                    let g = pr.next(rng);
                    chain.sift_add(&g);
                    tries += 1;
                }
                if &chain.order() != t {
                    return Err(PermError::TargetNotReached {
                        target: t.to_string(),
                        tries,
                    });
                }
            }
            None => {
                let mut quiet = 0;
                while quiet < QUIET_SIFTS {
                    let g = pr.next(rng);
                    if chain.sift_add(&g) {
                        quiet = 0;
                    } else {
                        quiet += 1;
                    }
                }
                chain.verify();
            }
        }
        Ok(chain)
    }

    /// Builds a chain for a group of known order from a sampler of its
    /// elements (for instance random Schreier generators of a stabilizer).
    pub fn from_sampler(
        degree: usize,
        target: &BigUint,
        rng: &mut GroupRng,
        mut sample: impl FnMut(&mut GroupRng) -> Perm,
    ) -> Result<StabChain, PermError> {
        let mut chain = StabChain::new(degree);
        let mut tries = 0u64;
        while &chain.order() < target {
            if tries >= TARGET_GUARD {
                return Err(PermError::TargetNotReached {
                    target: target.to_string(),
                    tries,
                });
            }
            let g = sample(rng);
            chain.sift_add(&g);
            tries += 1;
        }
        if &chain.order() != target {
            return Err(PermError::TargetNotReached {
                target: target.to_string(),
                tries,
            });
        }
        Ok(chain)
    }

    /// The chain of `t⁻¹ G t`, obtained by relabelling points.
    pub fn conjugate(&self, t: &Perm) -> StabChain {
        let gens: Vec<Perm> = self.gens.iter().map(|g| g.conj(t)).collect();
        let invs: Vec<Perm> = self.invs.iter().map(|g| g.conj(t)).collect();
        let levels = self
            .levels
            .iter()
            .map(|l| {
                let mut sv = vec![NONE; self.degree];
                for &p in &l.orbit {
                    sv[t.apply(p) as usize] = l.sv[p as usize];
                }
                Level {
                    base: t.apply(l.base),
                    gens: l.gens.clone(),
                    orbit: l.orbit.iter().map(|&p| t.apply(p)).collect(),
                    sv,
                }
            })
            .collect();
        StabChain {
            degree: self.degree,
            gens,
            invs,
            levels,
        }
    }
}
