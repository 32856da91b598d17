//! Rows for `r = 2`.

use num_bigint::BigUint;

use super::{Fired, RowFn};
use crate::ctx::Ctx;
use crate::spec::Family;
use crate::trace::{CmpOp, OuterFlag};

pub(crate) fn block(family: &Family, n: u32) -> Vec<RowFn> {
    match family {
        Family::Alt => vec![alt_point_stabilizer],
        Family::B2Twisted => vec![suzuki_borel],
        Family::L if n == 2 => vec![l2_borel, l2_q5, l2_split_torus, l2_nonsplit_torus],
        Family::L => vec![l3_borel, ln_reducible],
        Family::U => vec![u3_borel, un_reducible],
        Family::Sp => vec![sp4_borel],
        Family::OOdd => vec![omega_reducible],
        Family::OPlus => vec![oplus_reducible],
        Family::OMinus => vec![ominus_reducible],
        _ => vec![],
    }
}

pub(crate) fn alt_point_stabilizer(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    if !c.power_of("n - 1 = 2^k, k >= 2", n - 1, 2, 2) {
        return None;
    }
    Some(Fired::new("even:A:point-stabilizer", "S_{n-1} cap G").index(BigUint::from(n)))
}

pub(crate) fn suzuki_borel(c: &mut Ctx) -> Option<Fired> {
    if !c.outer("G = T", OuterFlag::Trivial) {
        return None;
    }
    let q = c.q().clone();
    Some(Fired::new("even:2B2:borel", "q^{1+1}:(q-1)").index(&q * &q + 1u32))
}

pub(crate) fn l2_borel(c: &mut Ctx) -> Option<Fired> {
    if !c.eq("p = 2", c.p, 2) {
        return None;
    }
    Some(Fired::new("even:L2:P1", "P_1").index(c.q() + 1u32))
}

pub(crate) fn l2_q5(c: &mut Ctx) -> Option<Fired> {
    if !c.q_cmp("q = 5", CmpOp::Eq, 5) {
        return None;
    }
    Some(Fired::new("even:L2:q=5", "2^{1+2}_-.O_2^-(2)").index(BigUint::from(5u32)))
}

/// `|R₀| ≥ 2⁴`, or `|R₀| = 2³` and `G = PGL₂(q)`.
fn r0_condition(c: &mut Ctx) -> bool {
    c.r0_cmp("|R0| >= 2^4", CmpOp::Ge, 16)
        || (c.r0_cmp("|R0| = 2^3", CmpOp::Eq, 8)
            && c.outer("G = PGL_2(q)", OuterFlag::FullDiagonalOnly))
}

pub(crate) fn l2_split_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.q_mod("q = 1 mod 4", 4, &[1])
        && c.q_cmp("q >= 9", CmpOp::Ge, 9)
        && ((c.f_power_of("f = 2^a > 1", 2, 1)
            && !c.outer("G <= PSigmaL_2(q)", OuterFlag::InFieldExtension))
            || (c.eq("f = 1", c.f as u64, 1) && r0_condition(c)));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    Some(Fired::new("even:L2:GL1(q)wrS2", "GL_1(q) wr S_2").index(&q * (&q + 1u32) / 2u32))
}

pub(crate) fn l2_nonsplit_torus(c: &mut Ctx) -> Option<Fired> {
    let ok = c.eq("f = 1", c.f as u64, 1) && c.q_mod("q = 3 mod 4", 4, &[3]) && r0_condition(c);
    if !ok {
        return None;
    }
    let q = c.q().clone();
    Some(Fired::new("even:L2:GL1(q^2)", "GL_1(q^2)").index(&q * (&q - 1u32) / 2u32))
}

pub(crate) fn l3_borel(c: &mut Ctx) -> Option<Fired> {
    let ok = c.eq("n = 3", c.n as u64, 3)
        && c.eq("p = 2", c.p, 2)
        && !c.outer("G <= PGammaL_3(q)", OuterFlag::NoGraph);
    if !ok {
        return None;
    }
    let q = c.q().clone();
    Some(Fired::new("even:L3:P12", "P_{1,2}").index((&q * &q + &q + 1u32) * (&q + 1u32)))
}

pub(crate) fn ln_reducible(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.power_of("n - 1 = 2^k, k >= 1", n - 1, 2, 1)
        && c.eq("f = 1", c.f as u64, 1)
        && c.q_mod("q = 3 mod 4", 4, &[3])
        && !c.outer("G <= PGammaL_n(q)", OuterFlag::NoGraph);
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let index = q.pow(c.n - 1) * (q.pow(c.n) - 1u32) / (&q - 1u32);
    Some(Fired::new("even:Ln:GL(n-1)xGL1", "GL_{n-1}(q) x GL_1(q)").index(index))
}

pub(crate) fn u3_borel(c: &mut Ctx) -> Option<Fired> {
    if !(c.eq("n = 3", c.n as u64, 3) && c.eq("p = 2", c.p, 2)) {
        return None;
    }
    Some(Fired::new("even:U3:P1", "P_1").index(c.q().pow(3) + 1u32))
}

pub(crate) fn un_reducible(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.power_of("n - 1 = 2^k, k >= 1", n - 1, 2, 1)
        && c.q_mod("q = 1 mod 4", 4, &[1])
        && c.f_power_of("f = 2^a", 2, 0)
        && (n != 3 || c.q_cmp("q >= 9", CmpOp::Ge, 9));
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let index = q.pow(c.n - 1) * (q.pow(c.n) + 1u32) / (&q + 1u32);
    Some(Fired::new("even:Un:GU(n-1)xGU1", "GU_{n-1}(q) x GU_1(q)").index(index))
}

pub(crate) fn sp4_borel(c: &mut Ctx) -> Option<Fired> {
    let ok = c.eq("n = 4", c.n as u64, 4)
        && c.eq("p = 2", c.p, 2)
        && c.q_cmp("q >= 4", CmpOp::Ge, 4)
        && !c.outer("G <= PGammaSp_4(q)", OuterFlag::NoGraph);
    if !ok {
        return None;
    }
    let q = c.q().clone();
    let index = (&q * &q + 1u32) * (&q + 1u32) * (&q + 1u32);
    Some(Fired::new("even:Sp4:P12", "P_{1,2}").index(index))
}

pub(crate) fn omega_reducible(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.power_of("n - 1 = 2^k", n - 1, 2, 1)
        && c.ge("n >= 9", n, 9)
        && c.f_power_of("f = 2^a", 2, 0)
        && (c.f != 1 || c.q_mod("q = +-1 mod 8", 8, &[1, 7]));
    if !ok {
        return None;
    }
    Some(Fired::new("even:O:O+(n-1)xO1", "O_{n-1}^+(q) x O_1(q)"))
}

pub(crate) fn oplus_reducible(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.power_of("n - 2 = 2^k", n - 2, 2, 1)
        && c.ge("n >= 10", n, 10)
        && c.eq("f = 1", c.f as u64, 1)
        && c.q_mod("q = 3 mod 4", 4, &[3])
        && !c.outer("G <= PO^+_n(q)", OuterFlag::InPO);
    if !ok {
        return None;
    }
    Some(Fired::new("even:O+:O+(n-2)xO2+", "O_{n-2}^+(q) x O_2^+(q)"))
}

pub(crate) fn ominus_reducible(c: &mut Ctx) -> Option<Fired> {
    let n = c.n as u64;
    let ok = c.power_of("n - 2 = 2^k", n - 2, 2, 1)
        && c.ge("n >= 10", n, 10)
        && c.q_mod("q = 1 mod 4", 4, &[1])
        && c.f_power_of("f = 2^a", 2, 0)
        && !c.outer("G <= T.<phi>", OuterFlag::InTPhi);
    if !ok {
        return None;
    }
    Some(Fired::new("even:O-:O+(n-2)xO2-", "O_{n-2}^+(q) x O_2^-(q)"))
}
