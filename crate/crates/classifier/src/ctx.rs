//! Evaluation context: the parameters of `(G, r)` and traced predicates over them.

use num_bigint::BigUint;
use numtheory::{mult_order, r_valuation, PrimePowerQ, Sign};

use crate::spec::GroupSpec;
use crate::trace::{Atom, CmpOp, OuterFlag, Tracer};

pub(crate) struct Ctx<'a> {
    pub s: &'a GroupSpec,
    pub r: u64,
    pub n: u32,
    pub q: Option<PrimePowerQ>,
    pub p: u64,
    pub f: u32,
    /// `d_q(r)`, when `q` is defined and `r ≠ p`.
    pub d: Option<u64>,
    pub t_order: BigUint,
    pub g_order: BigUint,
    /// `|R|` for a Sylow `r`-subgroup `R` of `G`.
    pub r_order: BigUint,
    /// `|R₀| = |R ∩ T|`.
    pub r0_order: BigUint,
    pub tr: Tracer,
}

impl<'a> Ctx<'a> {
    pub fn new(s: &'a GroupSpec, r: u64) -> Ctx<'a> {
        let t_order = s.socle_order();
        let g_order = s.order();
        let r_order = r_valuation(&g_order, r).expect("r is prime").value;
        let r0_order = r_valuation(&t_order, r).expect("r is prime").value;
        let q = s.q.clone();
        let (p, f) = q.as_ref().map_or((0, 0), |q| (q.p, q.f));
        let d = q
            .as_ref()
            .filter(|_| p != r)
            .map(|q| mult_order(&q.q, r).expect("r does not divide q"));
        Ctx {
            s,
            r,
            n: s.n,
            q,
            p,
            f,
            d,
            t_order,
            g_order,
            r_order,
            r0_order,
            tr: Tracer::new(),
        }
    }

    pub fn q(&self) -> &BigUint {
        &self.q.as_ref().expect("field defined").q
    }

    pub fn q_u64(&self) -> Option<u64> {
        self.q.as_ref().and_then(|q| q.q_u64())
    }

    fn cmp_big(&mut self, label: &str, a: &BigUint, op: CmpOp, b: &BigUint) -> bool {
        self.tr.check(
            label,
            Atom::Cmp {
                a: a.to_string(),
                op,
                b: b.to_string(),
            },
        )
    }

    pub fn cmp(&mut self, label: &str, a: u64, op: CmpOp, b: u64) -> bool {
        self.cmp_big(label, &BigUint::from(a), op, &BigUint::from(b))
    }

    pub fn eq(&mut self, label: &str, a: u64, b: u64) -> bool {
        self.cmp(label, a, CmpOp::Eq, b)
    }

    pub fn ne(&mut self, label: &str, a: u64, b: u64) -> bool {
        self.cmp(label, a, CmpOp::Ne, b)
    }

    pub fn ge(&mut self, label: &str, a: u64, b: u64) -> bool {
        self.cmp(label, a, CmpOp::Ge, b)
    }

    pub fn gt(&mut self, label: &str, a: u64, b: u64) -> bool {
        self.cmp(label, a, CmpOp::Gt, b)
    }

    pub fn le(&mut self, label: &str, a: u64, b: u64) -> bool {
        self.cmp(label, a, CmpOp::Le, b)
    }

    /// `q` compared with a constant.
    pub fn q_cmp(&mut self, label: &str, op: CmpOp, b: u64) -> bool {
        let q = self.q().clone();
        self.cmp_big(label, &q, op, &BigUint::from(b))
    }

    /// `|R| > r`.
    pub fn r_large(&mut self) -> bool {
        let (a, b) = (self.r_order.clone(), BigUint::from(self.r));
        self.cmp_big("|R| > r", &a, CmpOp::Gt, &b)
    }

    /// `|R| = r`.
    pub fn r_exact(&mut self) -> bool {
        let (a, b) = (self.r_order.clone(), BigUint::from(self.r));
        self.cmp_big("|R| = r", &a, CmpOp::Eq, &b)
    }

    /// `|R|` compared with a constant.
    pub fn r_cmp(&mut self, label: &str, op: CmpOp, b: u64) -> bool {
        let a = self.r_order.clone();
        self.cmp_big(label, &a, op, &BigUint::from(b))
    }

    /// `|R₀|` compared with a constant.
    pub fn r0_cmp(&mut self, label: &str, op: CmpOp, b: u64) -> bool {
        let a = self.r0_order.clone();
        self.cmp_big(label, &a, op, &BigUint::from(b))
    }

    /// `a mod m ∈ residues`.
    pub fn residue(&mut self, label: &str, a: &BigUint, m: u64, residues: &[u64]) -> bool {
        self.tr.check(
            label,
            Atom::ResidueIn {
                a: a.to_string(),
                m,
                residues: residues.to_vec(),
            },
        )
    }

    /// `q mod m ∈ residues`.
    pub fn q_mod(&mut self, label: &str, m: u64, residues: &[u64]) -> bool {
        let q = self.q().clone();
        self.residue(label, &q, m, residues)
    }

    /// `r = r_i`: `r ≠ p` and `d_q(r) = i`.
    pub fn ri(&mut self, i: u64) -> bool {
        let label = format!("r = r_{i}");
        if self.r == self.p {
            return self.ne(&label, self.r, self.p);
        }
        let q = self.q().to_string();
        self.tr.check(label, Atom::MultOrder { q, r: self.r, d: i })
    }

    pub fn alpha(&mut self, m: u64, eps: Sign) -> bool {
        let (p, f, r) = (self.p, self.f, self.r);
        self.tr.check(
            format!("alpha({m},{}1)", eps.symbol()),
            Atom::Alpha { m, eps, p, f, r },
        )
    }

    pub fn beta(&mut self, m: u64, eps: Sign) -> bool {
        let (p, f, r) = (self.p, self.f, self.r);
        self.tr.check(
            format!("beta({m},{}1)", eps.symbol()),
            Atom::Beta { m, eps, p, f, r },
        )
    }

    /// `(q^{1/k})^m ≢ ε (mod r)` for every prime `k | f` outside `skip`.
    pub fn avoid(&mut self, label: &str, m: u64, eps: Sign, skip: &[u64]) -> bool {
        let (p, f, r) = (self.p, self.f, self.r);
        self.tr.check(
            label,
            Atom::SubfieldAvoid {
                m,
                eps,
                p,
                f,
                r,
                skip: skip.to_vec(),
            },
        )
    }

    pub fn square(&mut self, label: &str, s: i64, p: u64) -> bool {
        self.tr.check(label, Atom::Square { s, p })
    }

    pub fn nonsquare(&mut self, label: &str, s: i64, p: u64) -> bool {
        self.tr.check(label, Atom::NonSquare { s, p })
    }

    pub fn power_of(&mut self, label: &str, n: u64, base: u64, min_exp: u32) -> bool {
        self.tr.check(label, Atom::PowerOf { n, base, min_exp })
    }

    pub fn prime_power(&mut self, label: &str, n: u64, min_prime: u64) -> bool {
        self.tr.check(label, Atom::PrimePower { n, min_prime })
    }

    pub fn prime(&mut self, label: &str, n: u64) -> bool {
        self.tr.check(label, Atom::Prime { n })
    }

    pub fn fermat(&mut self, label: &str, n: u64) -> bool {
        self.tr.check(label, Atom::Fermat { n })
    }

    pub fn mersenne(&mut self, label: &str, n: u64) -> bool {
        self.tr.check(label, Atom::Mersenne { n })
    }

    /// `|G : T|` compared with a constant.
    pub fn outer_order_cmp(&mut self, label: &str, op: CmpOp, b: u64) -> bool {
        let a = self.s.outer.order();
        self.cmp(label, a, op, b)
    }

    pub fn in_script_p(&mut self, r: u64) -> bool {
        self.tr.check("r = (q^d-1)/(q-1)", Atom::InScriptP { r })
    }

    pub fn outer(&mut self, label: &str, flag: OuterFlag) -> bool {
        let atom = Atom::Outer {
            flag,
            label: self.s.outer.clone(),
            full_diag: self.s.full_diag(),
        };
        self.tr.check(label, atom)
    }

    pub fn caveat(&mut self, note: &str) {
        self.tr.check(
            "depends-on",
            Atom::Caveat {
                note: note.to_string(),
            },
        );
    }

    /// `f = base^a` with `a ≥ min_exp`.
    pub fn f_power_of(&mut self, label: &str, base: u64, min_exp: u32) -> bool {
        let f = self.f as u64;
        self.power_of(label, f, base, min_exp)
    }
}
