use num_traits::ToPrimitive;

use crate::error::NumError;
use crate::primes::{is_prime, is_prime_power, pow_mod, prime_divisors};
use crate::types::{PrimePowerQ, Sign};

/// Euler's criterion: whether `a` is a nonzero square modulo the odd prime `p`.
pub fn is_square_mod(a: i64, p: u64) -> Result<bool, NumError> {
    if !is_prime(p) {
        return Err(NumError::NotPrime(p));
    }
    if p == 2 {
        return Err(NumError::EvenModulus(p));
    }
    let m = (a as i128).rem_euclid(p as i128) as u64;
    if m == 0 {
        return Err(NumError::Divides {
            r: p,
            n: a.to_string(),
        });
    }
    Ok(pow_mod(m, (p - 1) / 2, p) == 1)
}

/// The subfield values `(k, q^{1/k} mod r)` for the primes `k | f` not in `skip`.
pub fn subfield_roots(q: &PrimePowerQ, r: u64, skip: &[u64]) -> Vec<(u64, u64)> {
    prime_divisors(q.f as u64)
        .into_iter()
        .filter(|k| !skip.contains(k))
        .map(|k| {
            let root = q.root(k as u32);
            (k, (&root.q % r).to_u64().expect("residue fits"))
        })
        .collect()
}

fn eps_mod(eps: Sign, r: u64) -> u64 {
    match eps {
        Sign::Plus => 1 % r,
        Sign::Minus => r - 1,
    }
}

fn cond(m: u64, eps: Sign, q: &PrimePowerQ, r: u64, skip: &[u64]) -> bool {
    let target = eps_mod(eps, r);
    subfield_roots(q, r, skip)
        .into_iter()
        .all(|(_, root)| pow_mod(root, m, r) != target)
}

/// `(q^{1/k})^m ≢ ε (mod r)` for every prime `k | f` with `k ≠ r`.
pub fn alpha_cond(m: u64, eps: Sign, q: &PrimePowerQ, r: u64) -> bool {
    cond(m, eps, q, r, &[r])
}

/// As [`alpha_cond`], over the odd primes `k | f` with `k ≠ r`.
pub fn beta_cond(m: u64, eps: Sign, q: &PrimePowerQ, r: u64) -> bool {
    cond(m, eps, q, r, &[2, r])
}

/// Whether the prime `r` equals `1 + q + … + q^{d−1}` for a prime power `q`
/// and some `d >= 2`.
///
/// `d = 2` means `q = r − 1`; for `d >= 3` we have `q² < r`, so the search
/// is finite and exact.
pub fn in_script_p(r: u64) -> bool {
    if r < 3 {
        return false;
    }
    if is_prime_power(r - 1).is_some() {
        return true;
    }
    let mut q: u64 = 2;
    while q.saturating_mul(q) < r {
        if is_prime_power(q).is_some() {
            let mut sum: u128 = 1 + q as u128;
            let mut pw: u128 = q as u128;
            loop {
                pw *= q as u128;
                sum += pw;
                if sum >= r as u128 {
                    break;
                }
            }
            if sum == r as u128 {
                return true;
            }
        }
        q += 1;
    }
    false
}
