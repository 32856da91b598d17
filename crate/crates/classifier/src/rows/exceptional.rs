//! Rows for odd `r` with exceptional socle.

use num_bigint::BigUint;
use numtheory::Sign;

use super::{Fired, RowFn};
use crate::ctx::Ctx;
use crate::spec::Family;
use crate::trace::CmpOp;

pub(crate) fn block(family: &Family) -> Vec<RowFn> {
    match family {
        Family::B2Twisted => vec![suzuki_torus],
        Family::G2Twisted => vec![ree_borel, ree_torus],
        Family::G2 => vec![g2_r3, g2_torus],
        Family::D4Twisted => vec![d4_r3, d4_torus],
        Family::F4Twisted => vec![f4_twisted_torus],
        Family::F4 => vec![f4_r8, f4_r12],
        Family::E6 => vec![e6_r9],
        Family::E6Twisted => vec![e6_twisted_r18],
        Family::E7 => vec![e7_r18],
        Family::E8 => vec![e8_torus],
        _ => vec![],
    }
}

/// `ε` for `r = r_{(3−ε)/2}`: `+` when `d_q(r) = 1`, `−` when `d_q(r) = 2`.
fn eps_from_d(c: &Ctx, one: u64) -> Option<Sign> {
    match c.d? {
        d if d == one => Some(Sign::Plus),
        d if d == 2 * one => Some(Sign::Minus),
        _ => None,
    }
}

fn divides(c: &mut Ctx, label: &str, value: &BigUint) -> bool {
    let r = c.r;
    c.residue(label, value, r, &[0])
}

pub(crate) fn suzuki_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(4)
        && c.avoid(
            "(q^(1/k))^2 != -1 mod r for k in pi(f) - {r,f}",
            2,
            Sign::Minus,
            &[c.r, c.f as u64],
        );
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let s = (&q * 2u32).sqrt();
    let plus = &q + &s + 1u32;
    let (sign, factor) = if divides(c, "r | q+sqrt(2q)+1", &plus) {
        ("+", plus)
    } else {
        ("-", &q - &s + 1u32)
    };
    let h = factor * 4u32;
    let index = &c.t_order / h;
    Some(Fired::new("exceptional:2B2:r4:torus", format!("(q{sign}sqrt(2q)+1):4")).index(index))
}

pub(crate) fn ree_borel(c: &mut Ctx) -> Option<Fired> {
    if !c.eq("r = 3", c.r, 3) {
        return None;
    }
    Some(Fired::new("exceptional:2G2:r3:borel", "[q^3]:(q-1)").index(c.q().pow(3) + 1u32))
}

pub(crate) fn ree_torus(c: &mut Ctx) -> Option<Fired> {
    if !(c.ri(6) && c.alpha(3, Sign::Minus)) {
        return None;
    }
    let q = c.q().clone();
    let s = (&q * 3u32).sqrt();
    let plus = &q + &s + 1u32;
    let (sign, factor) = if divides(c, "r | q+sqrt(3q)+1", &plus) {
        ("+", plus)
    } else {
        ("-", &q - &s + 1u32)
    };
    let index = &c.t_order / (factor * 6u32);
    Some(Fired::new("exceptional:2G2:r6:torus", format!("(q{sign}sqrt(3q)+1):6")).index(index))
}

pub(crate) fn g2_r3(c: &mut Ctx) -> Option<Fired> {
    let eps = eps_from_d(c, 1)?;
    let ok = c.eq("r = 3", c.r, 3)
        && c.ri(if eps == Sign::Plus { 1 } else { 2 })
        && c.f_power_of("f = 3^a", 3, 0)
        && (c.p < 5
            || c.f != 1
            || c.q_mod(
                &format!("q = {}1 mod 9", eps.symbol()),
                9,
                &[if eps == Sign::Plus { 1 } else { 8 }],
            ));
    if !ok {
        return None;
    }
    Some(Fired::new(
        "exceptional:G2:r3:SL3",
        format!("SL_3^{}(q).2", eps.symbol()),
    ))
}

pub(crate) fn g2_torus(c: &mut Ctx) -> Option<Fired> {
    let eps = eps_from_d(c, 3)?;
    let r = c.r;
    let f = c.f as u64;
    let p = c.p;
    let ok = c.ri(if eps == Sign::Plus { 3 } else { 6 })
        && c.alpha(3, eps)
        && ((c.eq("p = 2", p, 2) && !(eps == Sign::Minus && c.q_cmp("q = 4", CmpOp::Eq, 4)))
            || (c.ge("p >= 5", p, 5)
                && (c.gt("f > 3", f, 3)
                    || c.r_large()
                    || c.gt("r > 13", r, 13)
                    || (c.eq("f = 3", f, 3)
                        && (c.eq("r = 13", r, 13)
                            || c.residue(
                                "p = +-1, +-3 mod 9",
                                &BigUint::from(p),
                                9,
                                &[1, 3, 6, 8],
                            )))
                    || (c.eq("f = 2", f, 2) && c.square("p is a square mod 13", p as i64, 13))
                    || (c.eq("f = 1", f, 1)
                        && c.eq("r = 13", r, 13)
                        && c.nonsquare("p is a nonsquare mod 13", p as i64, 13)))));
    if !ok {
        return None;
    }
    Some(Fired::new(
        "exceptional:G2:r3or6:SL3",
        format!("SL_3^{}(q).2", eps.symbol()),
    ))
}

pub(crate) fn d4_r3(c: &mut Ctx) -> Option<Fired> {
    let eps = eps_from_d(c, 1)?;
    let ok = c.eq("r = 3", c.r, 3)
        && c.ri(if eps == Sign::Plus { 1 } else { 2 })
        && c.f_power_of("f = 3^a", 3, 0);
    if !ok {
        return None;
    }
    let s = eps.symbol();
    Some(Fired::new(
        "exceptional:3D4:r3:A2",
        format!("A_2^{s}(q) x (q^2{s}q+1)"),
    ))
}

pub(crate) fn d4_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(12)
        && c.avoid(
            "(q^(1/k))^6 != -1 mod r for k in pi(f) - {3,r}",
            6,
            Sign::Minus,
            &[3, c.r],
        );
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let index = &c.t_order / ((q.pow(4) - q.pow(2) + 1u32) * 4u32);
    Some(Fired::new("exceptional:3D4:r12:torus", "(q^4-q^2+1):4").index(index))
}

pub(crate) fn f4_twisted_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.ri(12) && c.ge("f >= 3", c.f as u64, 3) && c.alpha(6, Sign::Minus);
    if !ok {
        return None;
    }
    Some(Fired::new(
        "exceptional:2F4:r12:torus",
        "(q^2+-sqrt(2q^3)+q+-sqrt(2q)+1):12",
    ))
}

pub(crate) fn f4_r8(c: &mut Ctx) -> Option<Fired> {
    let (r, f, p) = (c.r, c.f as u64, c.p);
    let ok = c.ri(8)
        && c.ge("p >= 3", p, 3)
        && c.alpha(4, Sign::Minus)
        && (c.gt("f > 2", f, 2)
            || c.gt("r > 17", r, 17)
            || c.r_large()
            || (c.eq("f = 2", f, 2)
                && (c.eq("p = 3", p, 3) || c.square("p is a square mod 17", p as i64, 17)))
            || (c.eq("f = 1", f, 1) && c.nonsquare("p is a nonsquare mod 17", p as i64, 17)));
    if !ok {
        return None;
    }
    Some(Fired::new("exceptional:F4:r8:B4", "B_4(q)"))
}

pub(crate) fn f4_r12(c: &mut Ctx) -> Option<Fired> {
    let (r, f, p) = (c.r, c.f as u64, c.p);
    let ok = c.ri(12)
        && c.ge("p >= 3", p, 3)
        && c.alpha(6, Sign::Minus)
        && ((c.ne("f != 1", f, 1) && c.ne("f != 3", f, 3))
            || c.gt("r > 13", r, 13)
            || c.r_large()
            || (c.eq("f = 3", f, 3) && c.residue("p = +-1 mod 7", &BigUint::from(p), 7, &[1, 6])));
    if !ok {
        return None;
    }
    Some(Fired::new("exceptional:F4:r12:3D4", "3D4(q).3"))
}

pub(crate) fn e6_r9(c: &mut Ctx) -> Option<Fired> {
    let (r, f, p) = (c.r, c.f as u64, c.p);
    let ok = c.ri(9)
        && c.alpha(9, Sign::Plus)
        && (c.gt("f > 2", f, 2)
            || c.gt("r > 19", r, 19)
            || c.r_large()
            || (c.eq("f = 2", f, 2) && c.square("p is a square mod 5", p as i64, 5))
            || (c.eq("f = 1", f, 1)
                && (c.nonsquare("p is a nonsquare mod 5", p as i64, 5)
                    || c.nonsquare("p is a nonsquare mod 19", p as i64, 19))));
    if !ok {
        return None;
    }
    Some(Fired::new("exceptional:E6:r9:A2(q^3)", "A_2(q^3).3"))
}

pub(crate) fn e6_twisted_r18(c: &mut Ctx) -> Option<Fired> {
    let (r, f, p) = (c.r, c.f as u64, c.p);
    let ok = c.ri(18)
        && c.beta(9, Sign::Minus)
        && (c.gt("f > 1", f, 1)
            || c.gt("r > 19", r, 19)
            || c.r_large()
            || (c.eq("f = 1", f, 1)
                && (c.nonsquare("p is a nonsquare mod 5", p as i64, 5)
                    || c.square("p is a square mod 19", p as i64, 19))));
    if !ok {
        return None;
    }
    Some(Fired::new("exceptional:2E6:r18:2A2(q^3)", "A_2^-(q^3).3"))
}

pub(crate) fn e7_r18(c: &mut Ctx) -> Option<Fired> {
    let (r, f, p) = (c.r, c.f as u64, c.p);
    c.caveat("maximal subgroups of E7(q) announced as forthcoming");
    let ok = c.ri(18)
        && c.alpha(18, Sign::Plus)
        && (c.gt("f > 2", f, 2)
            || c.gt("r > 37", r, 37)
            || c.r_large()
            || (c.eq("f = 2", f, 2) && c.square("p is a square mod 37", p as i64, 37))
            || (c.eq("f = 1", f, 1)
                && ((c.q_cmp("q = 2", CmpOp::Eq, 2) && c.eq("r = 19", r, 19))
                    || (c.eq("r = 37", r, 37)
                        && c.nonsquare("p is a nonsquare mod 37", p as i64, 37)))));
    if !ok {
        return None;
    }
    Some(Fired::new("exceptional:E7:r18:2E6", "2E6(q) x (q+1)"))
}

pub(crate) fn e8_torus(c: &mut Ctx) -> Option<Fired> {
    let i = c.d?;
    let eps = match i {
        15 => Sign::Plus,
        30 => Sign::Minus,
        _ => return None,
    };
    let (r, f, p) = (c.r, c.f as u64, c.p);
    c.caveat("maximal subgroups of E8(q) announced as forthcoming");
    let ok = c.ri(i)
        && c.alpha(30, Sign::Plus)
        && (c.gt("r > 61", r, 61)
            || c.r_large()
            || (c.r_exact()
                && c.eq("r = 61", r, 61)
                && (c.gt("f > 2", f, 2)
                    || (c.eq("f = 2", f, 2)
                        && c.eq("i = 15", i, 15)
                        && (c.tr.check(
                            "d_p(r) = 15",
                            crate::trace::Atom::MultOrder {
                                q: p.to_string(),
                                r,
                                d: 15,
                            },
                        ) || c.tr.check(
                            "d_p(r) = 30",
                            crate::trace::Atom::MultOrder {
                                q: p.to_string(),
                                r,
                                d: 30,
                            },
                        ))))));
    if !ok {
        return None;
    }
    let s = eps.symbol();
    Some(Fired::new(
        "exceptional:E8:r15or30:torus",
        format!("(q^8{s}q^7...+1):30"),
    ))
}
