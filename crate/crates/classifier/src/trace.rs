//! Atomic conditions and the replayable trace of their evaluation.

use num_bigint::BigUint;
use numtheory::{
    alpha_cond, beta_cond, in_script_p, is_prime, is_prime_power, mult_order, pow_mod,
    subfield_roots, PrimePowerQ, PrimeShape, Sign,
};
use serde::{Deserialize, Serialize};

use crate::error::TraceError;
use crate::spec::OuterLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
    Gt,
    Ge,
}

impl CmpOp {
    fn apply<T: Ord>(self, a: &T, b: &T) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
            CmpOp::Gt => a > b,
            CmpOp::Ge => a >= b,
        }
    }
}

/// Containments of `G` in overgroups of `T` inside `Aut(T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OuterFlag {
    /// `G = T`.
    Trivial,
    /// `G ≤ T.⟨field⟩`: no diagonal, graph or twisted part.
    InFieldExtension,
    /// `G` is the full diagonal extension `T.d` and nothing more.
    FullDiagonalOnly,
    /// No graph automorphism: `G ≤ PΓL`, `G ≤ PΓSp`.
    NoGraph,
    /// `G ≤ PO⁺`: no field automorphism and no similitude outside `PO⁺`.
    InPO,
    /// `G ≤ T.⟨φ⟩`: no diagonal or twisted part.
    InTPhi,
}

impl OuterFlag {
    pub fn eval(self, label: &OuterLabel, full_diag: u32) -> bool {
        let o = label;
        match self {
            OuterFlag::Trivial => o.is_trivial(),
            OuterFlag::InFieldExtension => o.diag == 1 && !o.graph && !o.twisted,
            OuterFlag::FullDiagonalOnly => {
                o.diag == full_diag && full_diag > 1 && o.field == 1 && !o.graph && !o.twisted
            }
            OuterFlag::NoGraph => !o.graph,
            OuterFlag::InPO => o.field == 1 && !o.twisted,
            OuterFlag::InTPhi => o.diag == 1 && !o.twisted,
        }
    }
}

/// One atomic condition with every operand needed to re-evaluate it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Atom {
    /// `a op b` over the integers (decimal strings).
    Cmp {
        a: String,
        op: CmpOp,
        b: String,
    },
    /// `a mod m ∈ residues`.
    ResidueIn {
        a: String,
        m: u64,
        residues: Vec<u64>,
    },
    /// `d_q(r) = d`.
    MultOrder {
        q: String,
        r: u64,
        d: u64,
    },
    /// `α(m, ε)`: `(q^{1/k})^m ≢ ε (mod r)` for all primes `k | f`, `k ≠ r`.
    Alpha {
        m: u64,
        eps: Sign,
        p: u64,
        f: u32,
        r: u64,
    },
    /// `β(m, ε)`: as `α` over odd primes `k | f`, `k ≠ r`.
    Beta {
        m: u64,
        eps: Sign,
        p: u64,
        f: u32,
        r: u64,
    },
    /// `(q^{1/k})^m ≢ ε (mod r)` for all primes `k | f` outside `skip`.
    SubfieldAvoid {
        m: u64,
        eps: Sign,
        p: u64,
        f: u32,
        r: u64,
        skip: Vec<u64>,
    },
    /// `s` is a square modulo the prime `p` (`s ≡ 1 mod 8` when `p = 2`;
    /// true when `p | s`).
    Square {
        s: i64,
        p: u64,
    },
    /// `s` is a nonsquare modulo `p` (false when `p | s`).
    NonSquare {
        s: i64,
        p: u64,
    },
    /// `r = (q^d − 1)/(q − 1)` for some prime power `q` and `d ≥ 2`.
    InScriptP {
        r: u64,
    },
    /// `n = base^a` with `a ≥ min_exp`.
    PowerOf {
        n: u64,
        base: u64,
        min_exp: u32,
    },
    /// `n = t^a` with `t ≥ min_prime` prime and `a ≥ 1`.
    PrimePower {
        n: u64,
        min_prime: u64,
    },
    Prime {
        n: u64,
    },
    /// `n` is a prime of the form `2^k + 1`.
    Fermat {
        n: u64,
    },
    /// `n` is a prime of the form `2^k − 1`.
    Mersenne {
        n: u64,
    },
    Outer {
        flag: OuterFlag,
        label: OuterLabel,
        full_diag: u32,
    },
    /// A result resting on data outside this library; always holds.
    Caveat {
        note: String,
    },
}

fn parse_big(s: &str) -> Result<BigUint, TraceError> {
    s.parse().map_err(|_| TraceError::Operand(s.to_string()))
}

fn prime_power_q(p: u64, f: u32) -> Result<PrimePowerQ, TraceError> {
    PrimePowerQ::new(p, f).map_err(|e| TraceError::Arithmetic(e.to_string()))
}

pub(crate) fn square_mod(s: i64, p: u64) -> Result<bool, TraceError> {
    if !is_prime(p) {
        return Err(TraceError::Arithmetic(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(s.rem_euclid(8) == 1);
    }
    let m = (s as i128).rem_euclid(p as i128) as u64;
    Ok(m == 0 || pow_mod(m, (p - 1) / 2, p) == 1)
}

pub(crate) fn nonsquare_mod(s: i64, p: u64) -> Result<bool, TraceError> {
    if (s as i128).rem_euclid(p as i128) == 0 {
        return Ok(false);
    }
    Ok(!square_mod(s, p)?)
}

impl Atom {
    pub fn eval(&self) -> Result<bool, TraceError> {
        Ok(match self {
            Atom::Cmp { a, op, b } => op.apply(&parse_big(a)?, &parse_big(b)?),
            Atom::ResidueIn { a, m, residues } => {
                if *m == 0 {
                    return Err(TraceError::Operand("modulus 0".into()));
                }
                let v = u64::try_from(parse_big(a)? % *m).expect("residue fits");
                residues.contains(&v)
            }
            Atom::MultOrder { q, r, d } => {
                let q = parse_big(q)?;
                mult_order(&q, *r).map_err(|e| TraceError::Arithmetic(e.to_string()))? == *d
            }
            Atom::Alpha { m, eps, p, f, r } => alpha_cond(*m, *eps, &prime_power_q(*p, *f)?, *r),
            Atom::Beta { m, eps, p, f, r } => beta_cond(*m, *eps, &prime_power_q(*p, *f)?, *r),
            Atom::SubfieldAvoid {
                m,
                eps,
                p,
                f,
                r,
                skip,
            } => {
                let q = prime_power_q(*p, *f)?;
                let target = match eps {
                    Sign::Plus => 1 % r,
                    Sign::Minus => r - 1,
                };
                subfield_roots(&q, *r, skip)
                    .into_iter()
                    .all(|(_, root)| pow_mod(root, *m, *r) != target)
            }
            Atom::Square { s, p } => square_mod(*s, *p)?,
            Atom::NonSquare { s, p } => nonsquare_mod(*s, *p)?,
            Atom::InScriptP { r } => in_script_p(*r),
            Atom::PowerOf { n, base, min_exp } => {
                let mut k = 0u32;
                let mut x = *n;
                while x > 1 && *base > 1 && x % base == 0 {
                    x /= base;
                    k += 1;
                }
                x == 1 && k >= *min_exp
            }
            Atom::PrimePower { n, min_prime } => {
                is_prime_power(*n).is_some_and(|(t, _)| t >= *min_prime)
            }
            Atom::Prime { n } => is_prime(*n),
            Atom::Fermat { n } => PrimeShape::is_fermat(*n),
            Atom::Mersenne { n } => PrimeShape::is_mersenne(*n),
            Atom::Outer {
                flag,
                label,
                full_diag,
            } => flag.eval(label, *full_diag),
            Atom::Caveat { .. } => true,
        })
    }
}

/// One evaluated condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub cond: String,
    pub value: bool,
    pub operands: Atom,
}

impl TraceEntry {
    /// Re-evaluates the operands; `Ok(true)` when they reproduce `value`.
    pub fn replay(&self) -> Result<bool, TraceError> {
        Ok(self.operands.eval()? == self.value)
    }
}

/// Records each condition as it is evaluated.
#[derive(Debug, Clone, Default)]
pub struct Tracer {
    entries: Vec<TraceEntry>,
}

impl Tracer {
    pub fn new() -> Tracer {
        Tracer::default()
    }

    /// Evaluates `atom`, logs it under the label `cond` and returns its value.
    pub fn check(&mut self, cond: impl Into<String>, atom: Atom) -> bool {
        let value = atom
            .eval()
            .unwrap_or_else(|e| panic!("internal condition failed to evaluate: {e}"));
        self.entries.push(TraceEntry {
            cond: cond.into(),
            value,
            operands: atom,
        });
        value
    }

    pub fn into_entries(self) -> Vec<TraceEntry> {
        self.entries
    }
}
