use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::NumError;
use crate::primes::is_prime;
use crate::types::{PrimePowerQ, RPart, Sign};

/// Bit budget under which [`rpart_q_pow`] checks its formula against a
/// direct valuation of the literal integer.
const SELF_CHECK_BITS: u64 = 4096;

/// Largest power of the prime `r` dividing `n`.
pub fn r_valuation(n: &BigUint, r: u64) -> Result<RPart, NumError> {
    if n.is_zero() {
        return Err(NumError::Zero);
    }
    if !is_prime(r) {
        return Err(NumError::NotPrime(r));
    }
    let rb = BigUint::from(r);
    let mut m = n.clone();
    let mut e = 0u32;
    loop {
        let (quo, rem) = m.div_rem(&rb);
        if !rem.is_zero() {
            break;
        }
        m = quo;
        e += 1;
    }
    Ok(RPart::new(r, e))
}

fn valuation_u64(n: u64, r: u64) -> u32 {
    let mut n = n;
    let mut e = 0;
    while n > 0 && n.is_multiple_of(r) {
        n /= r;
        e += 1;
    }
    e
}

/// Which of `q^d − ε` and `q^d + ε` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    MinusEps,
    PlusEps,
}

fn q_minus_eps(q: &BigUint, eps: Sign) -> BigUint {
    match eps {
        Sign::Plus => q - BigUint::one(),
        Sign::Minus => q + BigUint::one(),
    }
}

/// `(q^d ∓ ε)_r` by the closed-form case analysis, for a prime `r`
/// dividing `q − ε`.
///
/// For `r = 2` the `q^d + ε` form is rewritten as `q^d − (−ε)`, which is
/// valid because `q` is odd whenever `2 | q − ε`.
pub fn rpart_q_pow(
    q: &PrimePowerQ,
    d: u64,
    form: Form,
    eps: Sign,
    r: u64,
) -> Result<RPart, NumError> {
    if d == 0 {
        return Err(NumError::Zero);
    }
    if !is_prime(r) {
        return Err(NumError::NotPrime(r));
    }
    let base = q_minus_eps(&q.q, eps);
    if base.is_zero() || !(&base % r).is_zero() {
        return Err(NumError::NotDividing {
            r,
            n: base.to_string(),
        });
    }
    let formula = formula(q, d, form, eps, r)?;
    let bits = q.q.bits().saturating_mul(d);
    if bits <= SELF_CHECK_BITS {
        let lit = literal(q, d, form, eps);
        let direct = r_valuation(&lit, r)?;
        if direct != formula {
            return Err(NumError::FormulaMismatch {
                q: q.q.to_string(),
                d,
                r,
            });
        }
    }
    Ok(formula)
}

fn literal(q: &PrimePowerQ, d: u64, form: Form, eps: Sign) -> BigUint {
    let qd = num_traits::pow(q.q.clone(), d as usize);
    let sub = matches!(
        (form, eps),
        (Form::MinusEps, Sign::Plus) | (Form::PlusEps, Sign::Minus)
    );
    if sub {
        qd - BigUint::one()
    } else {
        qd + BigUint::one()
    }
}

fn formula(q: &PrimePowerQ, d: u64, form: Form, eps: Sign, r: u64) -> Result<RPart, NumError> {
    let v = |n: &BigUint| r_valuation(n, r);
    let d_part = RPart::new(r, valuation_u64(d, r));
    if r == 2 {
        return match form {
            Form::PlusEps => formula(q, d, Form::MinusEps, -eps, r),
            Form::MinusEps => {
                if d % 2 == 1 {
                    v(&q_minus_eps(&q.q, eps))
                } else if eps == Sign::Plus {
                    let q2 = &q.q * &q.q - BigUint::one();
                    Ok(v(&q2)?.times(&RPart::new(2, valuation_u64(d / 2, 2))))
                } else {
                    Ok(RPart::new(2, 1))
                }
            }
        };
    }
    let even_minus = d.is_multiple_of(2) && eps == Sign::Minus;
    let main = || Ok::<_, NumError>(v(&q_minus_eps(&q.q, eps))?.times(&d_part));
    match form {
        Form::MinusEps if even_minus => Ok(RPart::one(r)),
        Form::MinusEps => main(),
        Form::PlusEps if even_minus => main(),
        Form::PlusEps => Ok(RPart::one(r)),
    }
}
