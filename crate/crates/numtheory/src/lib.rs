//! Exact integer predicates used by the classification tables.
//!
//! Everything here works over arbitrary-precision integers where group
//! orders are involved and over `u64` for primes. Primality is decided by
//! deterministic Miller–Rabin (via `num-prime`), never probabilistically.

mod error;
mod primes;
mod residue;
mod rpart;
mod types;
mod zsigmondy;

pub use error::NumError;
pub use primes::{is_prime, is_prime_power, pow_mod, prime_divisors, prime_shape, PrimeShape};
pub use residue::{alpha_cond, beta_cond, in_script_p, is_square_mod, subfield_roots};
pub use rpart::{r_valuation, rpart_q_pow, Form};
pub use types::{PrimePowerQ, RPart, Sign};
pub use zsigmondy::{cyclotomic_value, is_zsigmondy_exception, mult_order, ppd};
