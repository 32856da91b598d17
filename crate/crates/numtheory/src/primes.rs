use num_prime::nt_funcs::{factorize64, is_prime64};
use serde::{Deserialize, Serialize};

/// Deterministic primality for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    is_prime64(n)
}

/// Distinct prime divisors of `n`, ascending. Empty for `n <= 1`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    if n <= 1 {
        return Vec::new();
    }
    factorize64(n).into_keys().collect()
}

/// `Some((p, f))` when `n = p^f` with `p` prime and `f >= 1`.
pub fn is_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let fac = factorize64(n);
    if fac.len() == 1 {
        let (&p, &f) = fac.iter().next().unwrap();
        Some((p, f as u32))
    } else {
        None
    }
}

/// `base^exp mod m` in 128-bit arithmetic.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimeShape {
    Mersenne,
    Fermat,
    Neither,
    NotPrime,
}

/// Classify `n` as a Mersenne prime (`n + 1` a power of 2), a Fermat prime
/// (`n − 1` a power of 2), another prime, or a non-prime.
///
/// `3` is both `2² − 1` and `2 + 1` and reports `Mersenne`; `2` reports
/// `Fermat`. Callers that need both readings use [`PrimeShape::is_fermat`].
pub fn prime_shape(n: u64) -> PrimeShape {
    if !is_prime(n) {
        return PrimeShape::NotPrime;
    }
    if (n + 1).is_power_of_two() {
        PrimeShape::Mersenne
    } else if (n - 1).is_power_of_two() {
        PrimeShape::Fermat
    } else {
        PrimeShape::Neither
    }
}

impl PrimeShape {
    /// Fermat reading that also accepts 3.
    pub fn is_fermat(n: u64) -> bool {
        is_prime(n) && n >= 2 && (n - 1).is_power_of_two()
    }

    /// Mersenne reading.
    pub fn is_mersenne(n: u64) -> bool {
        is_prime(n) && (n + 1).is_power_of_two()
    }
}
