use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_prime::nt_funcs::factorize128;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::NumError;
use crate::primes::{is_prime, pow_mod, prime_divisors, PrimeShape};
use crate::types::PrimePowerQ;

/// Order of `q` modulo the prime `r`, written `d_q(r)`.
pub fn mult_order(q: &BigUint, r: u64) -> Result<u64, NumError> {
    if !is_prime(r) {
        return Err(NumError::NotPrime(r));
    }
    let qr = (q % r).to_u64().expect("residue fits");
    if qr == 0 {
        return Err(NumError::Divides {
            r,
            n: q.to_string(),
        });
    }
    let mut d = r - 1;
    for s in prime_divisors(r - 1) {
        while d.is_multiple_of(s) && pow_mod(qr, d / s, r) == 1 {
            d /= s;
        }
    }
    Ok(d)
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut s = 2;
    while s * s <= n {
        if n.is_multiple_of(s) {
            n /= s;
            if n.is_multiple_of(s) {
                return 0;
            }
            sign = -sign;
        }
        s += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The cyclotomic value `Φ_d(q)`, computed as `∏_{e|d} (q^e − 1)^{μ(d/e)}`.
pub fn cyclotomic_value(d: u32, q: &BigUint) -> BigUint {
    assert!(
        d >= 1 && *q >= BigUint::from(2u32),
        "need d >= 1 and q >= 2"
    );
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        let term = num_traits::pow(q.clone(), e as usize) - BigUint::one();
        match mobius((d / e) as u64) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Primitive prime divisors of `q^d − 1`: primes `r` with `d_q(r) = d`.
///
/// Every such prime divides `Φ_d(q)`, whose remaining prime factors divide
/// `d`, so the set is the factors of `Φ_d(q)` filtered by multiplicative
/// order.
pub fn ppd(q: &PrimePowerQ, d: u32) -> Result<BTreeSet<BigUint>, NumError> {
    assert!(d >= 2, "ppd needs d >= 2");
    let phi = cyclotomic_value(d, &q.q);
    let phi128 = phi.to_u128().ok_or(NumError::TooLarge(phi.bits()))?;
    let mut out = BTreeSet::new();
    for (r, _) in factorize128(phi128) {
        let keep = match u64::try_from(r) {
            Ok(r64) => mult_order(&q.q, r64)? == d as u64,
            // r > 2^64 exceeds d + 1, so it is primitive.
            Err(_) => true,
        };
        if keep {
            out.insert(BigUint::from(r));
        }
    }
    Ok(out)
}

/// Zsigmondy's exceptions: `(d, q) = (6, 2)`, or `d = 2` with `q` a Mersenne prime.
pub fn is_zsigmondy_exception(q: &PrimePowerQ, d: u32) -> bool {
    match (d, q.q_u64()) {
        (6, Some(2)) => true,
        (2, Some(qq)) => PrimeShape::is_mersenne(qq),
        _ => false,
    }
}
