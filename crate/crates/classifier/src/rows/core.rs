//! Cases where `O_r(H) ≠ 1` although `H ≠ N_G(R₀)`.

use super::{even, exceptional, odd};
use crate::ctx::Ctx;
use crate::spec::Family;
use crate::trace::{CmpOp, OuterFlag};

/// The matching row, if any. `c` is built on `GroupSpec::normalized_for_corollaries`.
pub(crate) fn find(c: &mut Ctx) -> Option<&'static str> {
    let (r, n) = (c.r, c.n as u64);
    match &c.s.family {
        Family::Alt if r == 3 => {
            (c.eq("n = 9", n, 9) && odd::alt_square_blocks(c).is_some()).then_some("core:A9")
        }
        Family::L if n == 2 && r == 2 => {
            let q = c.q_u64().unwrap_or(0);
            let split = c.q_mod("q = 1 mod 4", 4, &[1])
                && c.q_cmp("q >= 13", CmpOp::Ge, 13)
                && ((c.f_power_of("f = 2^a > 1", 2, 1)
                    && !c.outer("G <= PSigmaL_2(q)", OuterFlag::InFieldExtension))
                    || (c.eq("f = 1", c.f as u64, 1)
                        && !c.fermat("q Fermat prime", q)
                        && c.r_cmp("|R| >= 2^4", CmpOp::Ge, 16)));
            if split {
                return Some("core:L2:GL1(q)wrS2");
            }
            let nonsplit = c.eq("f = 1", c.f as u64, 1)
                && c.q_mod("q = 3 mod 4", 4, &[3])
                && !c.mersenne("q Mersenne prime", q)
                && c.r_cmp("|R| >= 2^4", CmpOp::Ge, 16);
            nonsplit.then_some("core:L2:GL1(q^2)")
        }
        Family::L if r == 2 => (even::ln_reducible(c).is_some()
            && c.outer_order_cmp("|G:T| = 2", CmpOp::Eq, 2))
        .then_some("core:Ln:GL(n-1)xGL1"),
        Family::L => odd::ln_monomial(c).map(|_| "core:Ln:r1"),
        Family::U if r == 2 => even::un_reducible(c).map(|_| "core:Un:GU(n-1)xGU1"),
        Family::U if n == 3 => (odd::u3_monomial(c).is_some()
            && c.ne("q != 8", c.q_u64().unwrap_or(0), 8))
        .then_some("core:Un:r2"),
        Family::U => odd::un_monomial(c).map(|_| "core:Un:r2"),
        Family::OOdd if r == 2 => even::omega_reducible(c).map(|_| "core:O:r2"),
        Family::OPlus if r == 2 => even::oplus_reducible(c).map(|_| "core:O+:r2"),
        Family::OMinus if r == 2 => even::ominus_reducible(c).map(|_| "core:O-:r2"),
        Family::G2 if r == 3 => exceptional::g2_r3(c).map(|_| "core:G2:r3"),
        Family::D4Twisted if r == 3 => exceptional::d4_r3(c).map(|_| "core:3D4:r3"),
        _ => None,
    }
}
