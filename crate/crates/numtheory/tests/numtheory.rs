use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use numtheory::*;
use proptest::prelude::*;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn prime_powers_upto(limit: u64) -> Vec<PrimePowerQ> {
    (2..=limit)
        .filter_map(|q| PrimePowerQ::from_u64(q).ok())
        .collect()
}

/// Multiplicative order by walking successive powers.
fn order_by_walk(q: u64, r: u64) -> u64 {
    let mut x = q % r;
    let mut d = 1;
    while x != 1 {
        x = x * (q % r) % r;
        d += 1;
    }
    d
}

/// Whether `q^d − 1` has a primitive prime divisor, by stripping every
/// common factor with `q^e − 1` for `e < d` (no factorisation involved).
fn has_ppd_by_gcd(q: u64, d: u32) -> bool {
    let qb = big(q);
    let mut n = num_traits::pow(qb.clone(), d as usize) - BigUint::one();
    for e in 1..d {
        let m = num_traits::pow(qb.clone(), e as usize) - BigUint::one();
        loop {
            let g = n.gcd(&m);
            if g.is_one() {
                break;
            }
            n /= g;
        }
    }
    n > BigUint::one()
}

#[test]
fn r_valuation_examples() {
    assert_eq!(r_valuation(&big(63), 3).unwrap(), RPart::new(3, 2));
    assert_eq!(r_valuation(&big(17), 2).unwrap(), RPart::new(2, 0));
    assert_eq!(r_valuation(&big(4095), 3).unwrap(), RPart::new(3, 2));
    assert_eq!(r_valuation(&big(0), 3), Err(NumError::Zero));
    assert_eq!(r_valuation(&big(12), 4), Err(NumError::NotPrime(4)));
}

#[test]
fn mult_order_examples() {
    assert_eq!(mult_order(&big(2), 7).unwrap(), 3);
    assert_eq!(mult_order(&big(4), 3).unwrap(), 1);
    assert_eq!(mult_order(&big(2), 11).unwrap(), 10);
    assert!(matches!(
        mult_order(&big(9), 3),
        Err(NumError::Divides { .. })
    ));
}

#[test]
fn mult_order_matches_walk() {
    for r in (3..400u64).filter(|&r| is_prime(r)) {
        for q in 2..200u64 {
            if q % r == 0 {
                continue;
            }
            let d = mult_order(&big(q), r).unwrap();
            assert_eq!(d, order_by_walk(q, r), "q={q} r={r}");
            assert_eq!((r - 1) % d, 0);
        }
    }
}

#[test]
fn ppd_examples() {
    let q2 = PrimePowerQ::new(2, 1).unwrap();
    let q7 = PrimePowerQ::new(7, 1).unwrap();
    assert!(ppd(&q2, 6).unwrap().is_empty());
    assert!(ppd(&q7, 2).unwrap().is_empty());
    let got: Vec<u64> = ppd(&q2, 11)
        .unwrap()
        .iter()
        .map(|r| r.to_u64().unwrap())
        .collect();
    assert_eq!(got, vec![23, 89]);
}

#[test]
fn zsigmondy_exceptions_exhaustive() {
    let mut empties = Vec::new();
    for q in prime_powers_upto(128) {
        for d in 2..=12u32 {
            let set = ppd(&q, d).unwrap();
            assert_eq!(
                set.is_empty(),
                !has_ppd_by_gcd(q.q_u64().unwrap(), d),
                "q={} d={d}",
                q.q
            );
            assert_eq!(set.is_empty(), is_zsigmondy_exception(&q, d));
            for r in &set {
                let r = r.to_u128().unwrap();
                assert_eq!(r % d as u128, 1, "ppd {r} of q={} d={d} not 1 mod d", q.q);
            }
            if set.is_empty() {
                empties.push((q.q_u64().unwrap(), d));
            }
        }
    }
    empties.sort();
    assert_eq!(empties, vec![(2, 6), (3, 2), (7, 2), (31, 2), (127, 2)]);
}

fn rpart_cases() -> Vec<(PrimePowerQ, u64, Form, Sign, u64)> {
    let odd_r: Vec<u64> = (3..=31).filter(|&r| is_prime(r)).collect();
    let mut cases = Vec::new();
    for q in prime_powers_upto(128) {
        let qq = q.q_u64().unwrap();
        for d in 1..=12u64 {
            for eps in [Sign::Plus, Sign::Minus] {
                let base = if eps == Sign::Plus { qq - 1 } else { qq + 1 };
                for &r in odd_r.iter().chain(std::iter::once(&2)) {
                    if base % r != 0 {
                        continue;
                    }
                    for form in [Form::MinusEps, Form::PlusEps] {
                        cases.push((q.clone(), d, form, eps, r));
                    }
                }
            }
        }
    }
    cases
}

#[test]
fn rpart_formula_exhaustive() {
    let start = Instant::now();
    let cases = rpart_cases();
    assert!(cases.len() > 2000, "{} cases", cases.len());
    for (q, d, form, eps, r) in cases {
        let qd = num_traits::pow(q.q.clone(), d as usize);
        let lit = match (form, eps) {
            (Form::MinusEps, Sign::Plus) | (Form::PlusEps, Sign::Minus) => qd - BigUint::one(),
            _ => qd + BigUint::one(),
        };
        let got = rpart_q_pow(&q, d, form, eps, r).unwrap();
        assert_eq!(
            got,
            r_valuation(&lit, r).unwrap(),
            "q={} d={d} {form:?} eps={eps} r={r}",
            q.q
        );
    }
    assert!(start.elapsed().as_secs_f64() < 5.0);
}

#[test]
fn rpart_examples() {
    let q4 = PrimePowerQ::new(2, 2).unwrap();
    let q3 = PrimePowerQ::new(3, 1).unwrap();
    let q2 = PrimePowerQ::new(2, 1).unwrap();
    assert_eq!(
        rpart_q_pow(&q4, 6, Form::MinusEps, Sign::Plus, 3).unwrap(),
        RPart::new(3, 2)
    );
    assert_eq!(
        rpart_q_pow(&q3, 2, Form::MinusEps, Sign::Plus, 2).unwrap(),
        RPart::new(2, 3)
    );
    assert_eq!(
        rpart_q_pow(&q2, 4, Form::MinusEps, Sign::Minus, 3).unwrap(),
        RPart::new(3, 0)
    );
    assert!(matches!(
        rpart_q_pow(&q4, 2, Form::MinusEps, Sign::Minus, 3),
        Err(NumError::NotDividing { .. })
    ));
}

#[test]
fn alpha_beta_examples() {
    let q64 = PrimePowerQ::new(2, 6).unwrap();
    assert!(!alpha_cond(1, Sign::Minus, &q64, 3));
    let q17 = PrimePowerQ::new(17, 1).unwrap();
    assert!(alpha_cond(1, Sign::Plus, &q17, 5));
    let q27 = PrimePowerQ::new(3, 3).unwrap();
    assert!(!alpha_cond(3, Sign::Minus, &q27, 7));
    // k = 2 is the only subfield index for q = 5^2, and beta ignores it.
    let q25 = PrimePowerQ::new(5, 2).unwrap();
    assert!(!alpha_cond(1, Sign::Minus, &q25, 3));
    assert!(beta_cond(1, Sign::Minus, &q25, 3));
}

#[test]
fn prime_shape_examples() {
    assert_eq!(prime_shape(17), PrimeShape::Fermat);
    assert_eq!(prime_shape(31), PrimeShape::Mersenne);
    assert_eq!(prime_shape(11), PrimeShape::Neither);
    assert_eq!(prime_shape(15), PrimeShape::NotPrime);
    assert_eq!(prime_shape(2), PrimeShape::Fermat);
    assert_eq!(prime_shape(3), PrimeShape::Mersenne);
    assert!(PrimeShape::is_fermat(3));
}

#[test]
fn script_p_examples() {
    assert!(in_script_p(7));
    assert!(in_script_p(13));
    assert!(!in_script_p(11));
    assert!(!in_script_p(29));
    assert!(in_script_p(31));
    assert!(!in_script_p(23));
}

/// Literal search over all prime powers below `r` and all lengths.
fn script_p_by_search(r: u64) -> bool {
    (2..r).filter(|&q| is_prime_power(q).is_some()).any(|q| {
        let mut sum = 1 + q;
        let mut pw = q;
        while sum < r {
            pw *= q;
            sum += pw;
        }
        sum == r
    })
}

#[test]
fn script_p_matches_search() {
    for r in (2..3000u64).filter(|&r| is_prime(r)) {
        assert_eq!(in_script_p(r), script_p_by_search(r), "r={r}");
    }
}

#[test]
fn square_mod_examples() {
    assert!(is_square_mod(-7, 11).unwrap());
    assert!(is_square_mod(2, 7).unwrap());
    assert!(!is_square_mod(5, 13).unwrap());
    assert!(is_square_mod(14, 7).is_err());
    assert!(is_square_mod(3, 2).is_err());
}

proptest! {
    #[test]
    fn valuation_divides_and_is_maximal(n in 1u64..1_000_000_000, ri in 0usize..10) {
        let r = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29][ri];
        let part = r_valuation(&big(n), r).unwrap();
        let v = part.value.to_u64().unwrap();
        prop_assert_eq!(n % v, 0);
        prop_assert!(!(n / v).is_multiple_of(r));
    }

    #[test]
    fn order_divides_r_minus_one(q in 2u64..100_000, ri in 0usize..12) {
        let r = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41][ri];
        prop_assume!(q % r != 0);
        let d = mult_order(&big(q), r).unwrap();
        prop_assert_eq!((r - 1) % d, 0);
        prop_assert_eq!(pow_mod(q, d, r), 1);
    }

    #[test]
    fn alpha_implies_beta(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
                          f in 1u32..13, m in 1u64..20,
                          r in prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19]),
                          minus in any::<bool>()) {
        let q = PrimePowerQ::new(p, f).unwrap();
        prop_assume!(p != r);
        let eps = if minus { Sign::Minus } else { Sign::Plus };
        prop_assert!(!alpha_cond(m, eps, &q, r) || beta_cond(m, eps, &q, r));
    }

    #[test]
    fn euler_matches_square_table(a in -500i64..500, pi in 0usize..8) {
        let p = [3u64, 5, 7, 11, 13, 17, 19, 23][pi];
        prop_assume!(a.rem_euclid(p as i64) != 0);
        let target = a.rem_euclid(p as i64) as u64;
        let by_table = (1..p).any(|x| x * x % p == target);
        prop_assert_eq!(is_square_mod(a, p).unwrap(), by_table);
    }
}
