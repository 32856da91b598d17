use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::NumError;
use crate::primes::{is_prime, is_prime_power};

/// The largest power `value = r^exponent` of a prime `r` dividing some integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RPart {
    pub r: u64,
    pub exponent: u32,
    pub value: BigUint,
}

impl RPart {
    pub fn new(r: u64, exponent: u32) -> RPart {
        RPart {
            r,
            exponent,
            value: BigUint::from(r).pow(exponent),
        }
    }

    pub fn one(r: u64) -> RPart {
        RPart::new(r, 0)
    }

    /// Product of two r-parts for the same prime.
    pub fn times(&self, other: &RPart) -> RPart {
        assert_eq!(self.r, other.r, "r-parts for different primes");
        RPart::new(self.r, self.exponent + other.exponent)
    }
}

impl fmt::Display for RPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.r, self.exponent)
    }
}

/// A prime power `q = p^f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePowerQ {
    pub p: u64,
    pub f: u32,
    pub q: BigUint,
}

impl PrimePowerQ {
    pub fn new(p: u64, f: u32) -> Result<PrimePowerQ, NumError> {
        if !is_prime(p) {
            return Err(NumError::NotPrime(p));
        }
        if f == 0 {
            return Err(NumError::Zero);
        }
        Ok(PrimePowerQ {
            p,
            f,
            q: BigUint::from(p).pow(f),
        })
    }

    pub fn from_u64(q: u64) -> Result<PrimePowerQ, NumError> {
        let (p, f) = is_prime_power(q).ok_or_else(|| NumError::NotPrimePower(q.to_string()))?;
        PrimePowerQ::new(p, f)
    }

    /// `q` as a machine integer, if it fits.
    pub fn q_u64(&self) -> Option<u64> {
        u64::try_from(&self.q).ok()
    }

    /// `q^{1/k} = p^{f/k}`; `k` must divide `f`.
    pub fn root(&self, k: u32) -> PrimePowerQ {
        assert!(
            k > 0 && self.f.is_multiple_of(k),
            "{k} does not divide f = {}",
            self.f
        );
        PrimePowerQ::new(self.p, self.f / k).expect("valid prime power")
    }

    pub fn is_prime_field(&self) -> bool {
        self.f == 1
    }

    pub fn pow(&self, e: u32) -> BigUint {
        if e == 0 {
            BigUint::one()
        } else {
            self.q.clone().pow(e)
        }
    }
}

impl fmt::Display for PrimePowerQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// A sign `ε ∈ {+1, −1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
