//! Finite fields `GF(p^f)` with full operation tables.
//!
//! An element is the integer `Σ cᵢ pⁱ` encoding the coefficients of its
//! polynomial representative modulo the defining polynomial.

use crate::error::CatalogError;

/// Largest field order with tabulated arithmetic.
pub const MAX_FIELD_ORDER: u32 = 256;

#[derive(Debug, Clone)]
pub struct Gf {
    p: u32,
    f: u32,
    q: u32,
    /// Coefficients `c₀..c_{f−1}` of the monic defining polynomial (leading 1 omitted).
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    primitive: u32,
}

fn digits(x: u32, p: u32, f: u32) -> Vec<u32> {
    let mut x = x;
    (0..f)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` (coefficients low to high, leading 1 included).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - lead) * c % p) % p;
            }
        }
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Whether the monic polynomial with low coefficients `low` has no monic factor of degree `1..=deg/2`.
fn is_irreducible(low: &[u32], p: u32) -> bool {
    let deg = low.len() as u32;
    let mut m = low.to_vec();
    m.push(1);
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let mut g = digits(code, p, d);
            g.push(1);
            let rem = poly_rem(&m, &g, p);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Gf {
    /// `GF(p^f)` defined by the monic irreducible polynomial of degree `f`
    /// whose low coefficients have the smallest encoding `Σ cᵢ pⁱ`.
    pub fn new(p: u32, f: u32) -> Result<Gf, CatalogError> {
        if !numtheory::is_prime(p as u64) || f == 0 {
            return Err(CatalogError::Field(format!("{p}^{f} is not a prime power")));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| {
                CatalogError::Field(format!(
                    "{p}^{f} exceeds the tabulated limit {MAX_FIELD_ORDER}"
                ))
            })?;
        let modulus = (0..q)
            .map(|code| digits(code, p, f))
            .find(|low| f == 1 || is_irreducible(low, p))
            .expect("an irreducible polynomial exists in every degree");
        let mut m = modulus.clone();
        m.push(1);
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a, p, f);
            for b in 0..q {
                let db = digits(b, p, f);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p);
                let mut prod = poly_rem(&poly_mul(&da, &db, p), &m, p);
                prod.resize(f as usize, 0);
                mul[(a * q + b) as usize] = undigits(&prod, p);
            }
        }
        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..q {
            neg[a as usize] = (0..q)
                .find(|&b| add[(a * q + b) as usize] == 0)
                .expect("additive inverse");
            if a != 0 {
                inv[a as usize] = (1..q)
                    .find(|&b| mul[(a * q + b) as usize] == 1)
                    .expect("field inverse");
            }
        }
        let mut field = Gf {
            p,
            f,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q)
            .find(|&a| field.mult_order(a) == q - 1)
            .expect("cyclic multiplicative group");
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Low coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `0` maps to `0`.
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let (mut base, mut e, mut acc) = (a, e, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(k % self.f.max(1)))
    }

    pub fn mult_order(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.pow(a, ((self.q - 1) / 2) as u64) == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}
