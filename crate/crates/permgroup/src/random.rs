use rand::Rng;

use crate::perm::Perm;
use crate::GroupRng;

const SLOTS: usize = 10;
const WARMUP: usize = 60;

/// Product-replacement ("rattle") generator of pseudo-random group elements.
pub(crate) struct ProductReplacement {
    state: Vec<Perm>,
    acc: Perm,
}

impl ProductReplacement {
    pub fn new(degree: usize, gens: &[Perm], rng: &mut GroupRng) -> ProductReplacement {
        let nontrivial: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
        let slots = SLOTS.max(nontrivial.len() + 1);
        let state = if nontrivial.is_empty() {
            vec![Perm::identity(degree); slots]
        } else {
            (0..slots)
                .map(|k| nontrivial[k % nontrivial.len()].clone())
                .collect()
        };
        let mut pr = ProductReplacement {
            state,
            acc: Perm::identity(degree),
        };
        for _ in 0..WARMUP {
            pr.next(rng);
        }
        pr
    }

    pub fn next(&mut self, rng: &mut GroupRng) -> Perm {
        let n = self.state.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let rhs = if rng.gen_bool(0.5) {
            self.state[j].clone()
        } else {
            self.state[j].inv()
        };
        if rng.gen_bool(0.5) {
            self.state[i].mul_assign(&rhs);
        } else {
            self.state[i] = rhs.mul(&self.state[i]);
        }
        let k = rng.gen_range(0..n);
        self.acc.mul_assign(&self.state[k]);
        self.acc.clone()
    }
}
