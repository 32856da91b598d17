//! Rows for odd `r` with alternating or classical socle.

use num_bigint::BigUint;
use numtheory::Sign;

use super::{Fired, RowFn};
use crate::ctx::Ctx;
use crate::order::factorial;
use crate::spec::Family;
use crate::trace::{CmpOp, OuterFlag};

pub(crate) fn block(family: &Family, n: u32) -> Vec<RowFn> {
    match family {
        Family::Alt => vec![
            alt_point_stabilizer,
            alt_two_blocks,
            alt_square_blocks,
            alt_affine,
        ],
        Family::L if n == 2 => vec![l2_borel, l2_nonsplit_torus],
        Family::L => vec![ln_monomial, l3_unitary, ln_extension_field],
        Family::U if n == 3 => vec![u3_borel, u3_monomial, u3_l27, u3_torus],
        Family::U => vec![un_monomial, un_reducible, u5_l211, un_extension_field],
        Family::Sp => vec![sp6_minus, sp_extension_field],
        Family::OOdd => vec![omega_r2, omega_ri, omega_top],
        Family::OMinus => vec![ominus_unitary, ominus_extension_field],
        _ => vec![],
    }
}

fn gcd(a: u64, b: &BigUint) -> BigUint {
    let mut x = BigUint::from(a);
    let mut y = b % a;
    while y != BigUint::from(0u32) {
        let t = &x % &y;
        x = y;
        y = t;
    }
    x
}

fn alt_simple(c: &mut Ctx) -> bool {
    c.outer("G = T", OuterFlag::Trivial)
}

pub(crate) fn alt_point_stabilizer(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    if !(alt_simple(c) && c.power_of("n - 1 = r^k, k >= 2", n - 1, c.r, 2)) {
        return None;
    }
    Some(Fired::new("odd:A:point-stabilizer", "A_{n-1}").index(BigUint::from(n)))
}

pub(crate) fn alt_two_blocks(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    if !(alt_simple(c) && c.eq("n = 2r", n, 2 * c.r)) {
        return None;
    }
    let r = c.r;
    let index = factorial(2 * r) / (factorial(r) * factorial(r) * 2u32);
    Some(Fired::new("odd:A:SrwrS2", "(S_r wr S_2) cap G").index(index))
}

pub(crate) fn alt_square_blocks(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    if !(alt_simple(c) && c.eq("n = r^2", n, c.r * c.r)) {
        return None;
    }
    let r = c.r;
    let index = factorial(r * r) / (factorial(r).pow(r as u32) * factorial(r));
    Some(Fired::new("odd:A:SrwrSr", "(S_r wr S_r) cap G").index(index))
}

pub(crate) fn alt_affine(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r;
    let ok = alt_simple(c)
        && c.eq("n = r", n, r)
        && c.ne("r != 11", r, 11)
        && c.ne("r != 23", r, 23)
        && (c.eq("r = 5", r, 5) || !c.in_script_p(r));
    if !ok {
        return None;
    }
    Some(Fired::new("odd:A:AGL1(r)", "AGL_1(r) cap G").index(factorial(r - 2)))
}

pub(crate) fn l2_borel(c: &mut Ctx) -> Option<Fired> {
    if !c.eq("r = p", c.r, c.p) {
        return None;
    }
    Some(Fired::new("odd:L2:P1", "P_1").index(c.q() + 1u32))
}

/// `f > 2` with either `α(1,−1)`, or `(r,p) = (3,2)` and no `q^{1/k} ≡ −1 mod 3`
/// for primes `k | f` other than `3` and `f`.
fn l2_torus_large_f(c: &mut Ctx) -> bool {
    c.gt("f > 2", c.f as u64, 2)
        && (c.alpha(1, Sign::Minus)
            || (c.eq("r = 3", c.r, 3)
                && c.eq("p = 2", c.p, 2)
                && c.avoid(
                    "q^(1/k) != -1 mod 3 for k in pi(f) - {3,f}",
                    1,
                    Sign::Minus,
                    &[3, c.f as u64],
                )))
}

pub(crate) fn l2_nonsplit_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(2)
        && ((c.le("f <= 2", c.f as u64, 2) && (c.gt("r > 5", c.r, 5) || c.r_large()))
            || l2_torus_large_f(c));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    Some(Fired::new("odd:L2:r2:GL1(q^2)", "GL_1(q^2)").index(&q * (&q - 1u32) / 2u32))
}

pub(crate) fn ln_monomial(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.ri(1)
        && c.eq("n = r", n, c.r)
        && ((c.eq("n = 3", n, 3)
            && ((c.eq("f = 1", c.f as u64, 1) && c.q_mod("q = 1 mod 9", 9, &[1]))
                || c.f_power_of("f = 3^a > 1", 3, 1)))
            || (c.ge("n >= 5", n, 5)
                && c.residue("f odd", &BigUint::from(c.f), 2, &[1])
                && c.alpha(1, Sign::Plus)));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let h = (&q - 1u32).pow(c.n - 1) * factorial(n) / gcd(n, &(&q - 1u32));
    Some(Fired::new("odd:Ln:r1:GL1(q)wrSn", "GL_1(q) wr S_n").index(&c.t_order / h))
}

pub(crate) fn l3_unitary(c: &mut Ctx) -> Option<Fired> {
    let ok = c.eq("n = 3", c.n as u64, 3)
        && c.q_cmp("q = 4", CmpOp::Eq, 4)
        && c.eq("r = 3", c.r, 3)
        && c.outer("G = PGL_3(4)", OuterFlag::FullDiagonalOnly);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:L3:GU3(2)", "GU_3(q^{1/2})").index(BigUint::from(280u32)))
}

/// The `f = 1` escape clause shared by the extension-field rows:
/// `|R| > r`, or `r ≠ bound`, or the residue test on `s` modulo `p`.
fn prime_field_escape(c: &mut Ctx, bound: u64, s: i64, square: bool) -> bool {
    c.r_large()
        || c.ne(&format!("r != {bound}"), c.r, bound)
        || if square {
            c.square(&format!("{s} is a square mod p"), s, c.p)
        } else {
            c.nonsquare(&format!("{s} is a nonsquare mod p"), s, c.p)
        }
}

pub(crate) fn ln_extension_field(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r as i64;
    let ok = c.ri(n)
        && c.prime_power("n = t^a, t >= 3 prime", n, 3)
        && c.alpha(n, Sign::Plus)
        && ((c.gt("f > 1", c.f as u64, 1) && c.residue("f odd", &BigUint::from(c.f), 2, &[1]))
            || (c.eq("f = 1", c.f as u64, 1) && prime_field_escape(c, 2 * n + 1, -r, false)));
    if !ok {
        return None;
    }
    let mut fired = Fired::new("odd:Ln:rn:GL(n/t)(q^t)", "GL_{n/t}(q^t)");
    if numtheory::is_prime(n) {
        let q = c.q().clone();
        let h = BigUint::from(n) * (q.pow(c.n) - 1u32) / ((&q - 1u32) * gcd(n, &(&q - 1u32)));
        fired = fired.index(&c.t_order / h);
    }
    Some(fired)
}

pub(crate) fn u3_borel(c: &mut Ctx) -> Option<Fired> {
    if !c.eq("r = p", c.r, c.p) {
        return None;
    }
    Some(Fired::new("odd:U3:P1", "P_1").index(c.q().pow(3) + 1u32))
}

pub(crate) fn u3_monomial(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(2)
        && c.eq("r = 3", c.r, 3)
        && ((c.eq("f = 1", c.f as u64, 1) && c.q_mod("q = -1 mod 9", 9, &[8]))
            || c.f_power_of("f = 3^a > 1", 3, 1));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let h = BigUint::from(6u32) * (&q + 1u32).pow(2) / gcd(3, &(&q + 1u32));
    Some(Fired::new("odd:U3:r2:GU1(q)wrS3", "GU_1(q) wr S_3").index(&c.t_order / h))
}

pub(crate) fn u3_l27(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(6) && c.q_cmp("q = 3", CmpOp::Eq, 3) && c.eq("r = 7", c.r, 7);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:U3:r6:L2(7)", "L_2(7)").index(&c.t_order / 168u32))
}

pub(crate) fn u3_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(6)
        && c.beta(3, Sign::Minus)
        && (c.gt("f > 1", c.f as u64, 1)
            || (c.eq("f = 1", c.f as u64, 1) && (c.r_large() || c.gt("r > 7", c.r, 7))));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let h = BigUint::from(3u32) * (&q * &q - &q + 1u32) / gcd(3, &(&q + 1u32));
    Some(Fired::new("odd:U3:r6:GU1(q^3)", "GU_1(q^3)").index(&c.t_order / h))
}

pub(crate) fn un_monomial(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.ri(2) && c.eq("n = r", n, c.r) && c.ge("n >= 5", n, 5) && c.beta(1, Sign::Minus);
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let h = (&q + 1u32).pow(c.n - 1) * factorial(n) / gcd(n, &(&q + 1u32));
    Some(Fired::new("odd:Un:r2:GU1(q)wrSn", "GU_1(q) wr S_n").index(&c.t_order / h))
}

pub(crate) fn un_reducible(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r as i64;
    let ok = c.residue("n even", &BigUint::from(n), 2, &[0])
        && c.ri(2 * n - 2)
        && c.beta(n - 1, Sign::Minus)
        && (c.gt("f > 1", c.f as u64, 1)
            || (c.eq("f = 1", c.f as u64, 1) && prime_field_escape(c, 2 * n - 1, -r, true)));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let index = q.pow(c.n - 1) * (q.pow(c.n) - 1u32) / (&q + 1u32);
    Some(Fired::new("odd:Un:r(2n-2):GU(n-1)xGU1", "GU_{n-1}(q) x GU_1(q)").index(index))
}

pub(crate) fn u5_l211(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(2 * c.n as u64)
        && c.eq("n = 5", c.n as u64, 5)
        && c.q_cmp("q = 2", CmpOp::Eq, 2)
        && c.eq("r = 11", c.r, 11);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:U5:r10:L2(11)", "L_2(11)").index(&c.t_order / 660u32))
}

pub(crate) fn un_extension_field(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r as i64;
    let ok = c.ri(2 * n)
        && c.prime_power("n = t^a, t >= 3 prime", n, 3)
        && c.beta(n, Sign::Minus)
        && (c.gt("f > 1", c.f as u64, 1)
            || (c.eq("f = 1", c.f as u64, 1) && prime_field_escape(c, 2 * n + 1, -r, true)));
    if !ok {
        return None;
    }
    let mut fired = Fired::new("odd:Un:r2n:GU(n/t)(q^t)", "GU_{n/t}(q^t)");
    if numtheory::is_prime(n) {
        let q = c.q().clone();
        let h = BigUint::from(n) * (q.pow(c.n) + 1u32) / ((&q + 1u32) * gcd(n, &(&q + 1u32)));
        fired = fired.index(&c.t_order / h);
    }
    Some(fired)
}

pub(crate) fn sp6_minus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(2)
        && c.eq("n = 6", c.n as u64, 6)
        && c.q_cmp("q = 2", CmpOp::Eq, 2)
        && c.eq("r = 3", c.r, 3);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:Sp6:r2:O6-(2)", "O_6^-(2)").index(BigUint::from(28u32)))
}

pub(crate) fn sp_extension_field(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r;
    let f = c.f as u64;
    let ok = c.ri(n)
        && c.power_of("n = 2^a >= 4", n, 2, 2)
        && c.ne("q odd", c.p, 2)
        && c.alpha(n, Sign::Plus)
        && (c.gt("f > 2", f, 2)
            || (c.eq("f = 2", f, 2)
                && (c.r_large()
                    || c.ne("r != 2n+1", r, 2 * n + 1)
                    || c.square("r is a square mod p", r as i64, c.p)))
            || (c.eq("f = 1", f, 1)
                && (c.r_large()
                    || c.gt("r > 2n+1", r, 2 * n + 1)
                    || (c.eq("r = 2n+1", r, 2 * n + 1)
                        && c.nonsquare("r is a nonsquare mod p", r as i64, c.p)))));
    if !ok {
        return None;
    }
    Some(Fired::new("odd:Sp:rn:Sp(n/2)(q^2)", "Sp_{n/2}(q^2)"))
}

pub(crate) fn omega_r2(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r;
    let ok = c.ri(2)
        && c.eq("n = 2r+1", n, 2 * r + 1)
        && c.alpha(1, Sign::Minus)
        && (c.gt("r > 3", r, 3)
            || c.gt("f > 1", c.f as u64, 1)
            || c.q_mod("q = -1 mod 9", 9, &[8]));
    if !ok {
        return None;
    }
    Some(Fired::new("odd:O:r2:O-(n-1)xO1", "O_{n-1}^-(q) x O_1(q)"))
}

pub(crate) fn omega_ri(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let i = c.d?;
    let ok = c.ri(i)
        && c.residue("i even", &BigUint::from(i), 2, &[0])
        && c.ge("i >= 4", i, 4)
        && c.le("i <= n-3", i, n - 3)
        && c.alpha(i, Sign::Plus)
        && c.residue("i divides n-1", &BigUint::from(n - 1), i, &[0])
        && c.power_of("(n-1)/i = r^a, a >= 1", (n - 1) / i, c.r, 1);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:O:ri:O-(n-1)xO1", "O_{n-1}^-(q) x O_1(q)"))
}

pub(crate) fn omega_top(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let r = c.r;
    let f = c.f as u64;
    let ok = c.ge("n >= 9", n, 9)
        && c.ri(n - 1)
        && c.alpha(n - 1, Sign::Plus)
        && (c.gt("r > 2n-1", r, 2 * n - 1)
            || c.r_large()
            || (c.eq("r = 2n-1", r, 2 * n - 1)
                && ((c.eq("f = 2", f, 2) && c.square("r is a square mod p", r as i64, c.p))
                    || (c.eq("f = 1", f, 1)
                        && c.nonsquare("r is a nonsquare mod p", r as i64, c.p)))));
    if !ok {
        return None;
    }
    Some(Fired::new(
        "odd:O:r(n-1):O-(n-1)xO1",
        "O_{n-1}^-(q) x O_1(q)",
    ))
}

fn ominus_tail(c: &mut Ctx) -> bool {
    let n = c.n as u64;
    c.beta(n / 2, Sign::Minus) && (c.r_large() || c.gt("r > n+1", c.r, n + 1))
}

pub(crate) fn ominus_unitary(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.ri(n) && c.ge("n/2 >= 5", n / 2, 5) && c.prime("n/2 prime", n / 2) && ominus_tail(c);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:O-:rn:GU(n/2)(q)", "GU_{n/2}(q)"))
}

pub(crate) fn ominus_extension_field(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.ri(n) && c.power_of("n = 2^a >= 8", n, 2, 3) && ominus_tail(c);
    if !ok {
        return None;
    }
    Some(Fired::new("odd:O-:rn:O-(n/2)(q^2)", "O_{n/2}^-(q^2)"))
}
