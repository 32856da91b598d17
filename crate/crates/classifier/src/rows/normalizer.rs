//! Cases where the unique overgroup is `N_G(R₀)`.

use super::{even, exceptional, odd, sporadic};
use crate::ctx::Ctx;
use crate::spec::Family;
use crate::trace::{CmpOp, OuterFlag};

const SPORADIC_GROUPS: &[&str] = &["M23", "J1", "J3", "J4", "Ly", "Fi24'", "B"];

/// The matching row, if any. `c` is built on `GroupSpec::normalized_for_corollaries`.
pub(crate) fn find(c: &mut Ctx) -> Option<&'static str> {
    let (r, p, n) = (c.r, c.p, c.n as u64);
    match &c.s.family {
        Family::Alt => {
            let ok = c.outer("G = T", OuterFlag::Trivial)
                && c.eq("n = r", n, r)
                && c.ge("r >= 13", r, 13)
                && c.ne("r != 23", r, 23)
                && !c.in_script_p(r);
            ok.then_some("normalizer:A")
        }
        Family::L if n == 2 => {
            if c.eq("r = p", r, p) {
                return Some("normalizer:L2:P1");
            }
            if r == 2 {
                let q = c.q_u64().unwrap_or(0);
                let split = (c.q_cmp("q = 9", CmpOp::Eq, 9)
                    && !c.outer("G <= PSigmaL_2(q)", OuterFlag::InFieldExtension))
                    || (c.eq("f = 1", c.f as u64, 1)
                        && c.fermat("q Fermat prime", q)
                        && c.ge("q >= 17", q, 17));
                if split {
                    return Some("normalizer:L2:GL1(q)wrS2");
                }
                let nonsplit = (c.q_cmp("q = 7", CmpOp::Eq, 7)
                    && c.outer("G = PGL_2(q)", OuterFlag::FullDiagonalOnly))
                    || (c.eq("f = 1", c.f as u64, 1)
                        && c.mersenne("q Mersenne prime", q)
                        && c.ge("q >= 31", q, 31));
                return nonsplit.then_some("normalizer:L2:GL1(q^2)");
            }
            odd::l2_nonsplit_torus(c).map(|_| "normalizer:L2:r2")
        }
        Family::L => {
            if n == 3 && r == 2 {
                return even::l3_borel(c).map(|_| "normalizer:L3:P12");
            }
            if n == 3 && r == 3 && odd::l3_unitary(c).is_some() {
                return Some("normalizer:L3:GU3(2)");
            }
            if r == 2 || !c.prime("n prime", n) {
                return None;
            }
            odd::ln_extension_field(c).map(|_| "normalizer:Ln:rn")
        }
        Family::U if n == 3 => {
            if c.eq("r = p", r, p) {
                return Some("normalizer:U3:P1");
            }
            if r == 3 && c.q_cmp("q = 8", CmpOp::Eq, 8) {
                return odd::u3_monomial(c).map(|_| "normalizer:U3:GU1(q)wrS3");
            }
            if r == 2 {
                return None;
            }
            odd::u3_torus(c).map(|_| "normalizer:U3:r6")
        }
        Family::U => {
            if r == 2 || !c.prime("n prime", n) {
                return None;
            }
            odd::un_extension_field(c).map(|_| "normalizer:Un:r2n")
        }
        Family::Sp if n == 4 && r == 2 => even::sp4_borel(c).map(|_| "normalizer:Sp4:P12"),
        Family::B2Twisted if r == 2 => even::suzuki_borel(c).map(|_| "normalizer:2B2:borel"),
        Family::B2Twisted => exceptional::suzuki_torus(c).map(|_| "normalizer:2B2:r4"),
        Family::G2Twisted if r == 3 => exceptional::ree_borel(c).map(|_| "normalizer:2G2:borel"),
        Family::G2Twisted => exceptional::ree_torus(c).map(|_| "normalizer:2G2:r6"),
        Family::D4Twisted => exceptional::d4_torus(c).map(|_| "normalizer:3D4:r12"),
        Family::F4Twisted => exceptional::f4_twisted_torus(c).map(|_| "normalizer:2F4:r12"),
        Family::E8 => exceptional::e8_torus(c).map(|_| "normalizer:E8"),
        Family::Sporadic(name) if SPORADIC_GROUPS.contains(&name.as_str()) && r != 2 => {
            sporadic::lookup(c).map(|_| "normalizer:sporadic")
        }
        _ => None,
    }
}
