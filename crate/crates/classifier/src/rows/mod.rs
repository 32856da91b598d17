//! One predicate function per classification row, plus the row documentation.

pub(crate) mod core;
pub(crate) mod even;
pub(crate) mod exceptional;
pub(crate) mod normalizer;
pub(crate) mod odd;
pub(crate) mod sporadic;

use num_bigint::BigUint;

use crate::ctx::Ctx;
use crate::spec::Family;

/// A row whose conditions all held.
#[derive(Debug, Clone)]
pub(crate) struct Fired {
    pub row: &'static str,
    pub type_string: String,
    /// `|T : H ∩ T|`, which equals `|G : H|`.
    pub index: Option<BigUint>,
    /// `|H|`, for rows stated with `G = T`.
    pub order: Option<BigUint>,
}

impl Fired {
    pub fn new(row: &'static str, type_string: impl Into<String>) -> Fired {
        Fired {
            row,
            type_string: type_string.into(),
            index: None,
            order: None,
        }
    }

    pub fn index(mut self, index: BigUint) -> Fired {
        self.index = Some(index);
        self
    }

    pub fn order(mut self, order: BigUint) -> Fired {
        self.order = Some(order);
        self
    }
}

pub(crate) type RowFn = fn(&mut Ctx) -> Option<Fired>;

/// The rows that can fire for `(family, n, r)`.
pub(crate) fn block(family: &Family, n: u32, r: u64) -> Vec<RowFn> {
    match family {
        Family::Sporadic(_) if r == 2 => vec![],
        Family::Sporadic(_) => vec![sporadic::lookup],
        _ if r == 2 => even::block(family, n),
        f if f.is_classical() || *f == Family::Alt => odd::block(family, n),
        _ => exceptional::block(family),
    }
}

/// Plain-words statement of a row's conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowDoc {
    pub id: &'static str,
    pub overgroup: &'static str,
    pub condition: &'static str,
}

const fn doc(id: &'static str, overgroup: &'static str, condition: &'static str) -> RowDoc {
    RowDoc {
        id,
        overgroup,
        condition,
    }
}

/// Every row identifier the classifier and the corollary operations can report.
pub const ROW_DOCS: &[RowDoc] = &[
    doc("even:A:point-stabilizer", "S_{n-1} cap G", "T = A_n, r = 2, n = 2^k + 1 with k >= 2"),
    doc("even:2B2:borel", "q^{1+1}:(q-1)", "T = 2B2(q), r = 2, G = T"),
    doc("even:L2:P1", "P_1", "T = L_2(q), r = p = 2"),
    doc("even:L2:q=5", "2^{1+2}_-.O_2^-(2)", "T = L_2(5), r = 2"),
    doc(
        "even:L2:GL1(q)wrS2",
        "GL_1(q) wr S_2",
        "T = L_2(q), r = 2, q = 1 mod 4, q >= 9, and either f = 2^a > 1 with G not in PSigmaL_2(q), \
         or f = 1 with |R0| >= 2^4 or (|R0| = 2^3 and G = PGL_2(q))",
    ),
    doc(
        "even:L2:GL1(q^2)",
        "GL_1(q^2)",
        "T = L_2(q), r = 2, f = 1, q = 3 mod 4, |R0| >= 2^4 or (|R0| = 2^3 and G = PGL_2(q))",
    ),
    doc("even:L3:P12", "P_{1,2}", "T = L_3(q), r = p = 2, G contains a graph automorphism"),
    doc(
        "even:Ln:GL(n-1)xGL1",
        "GL_{n-1}(q) x GL_1(q)",
        "T = L_n(q), r = 2, n = 2^k + 1, q = p = 3 mod 4, G contains a graph automorphism",
    ),
    doc("even:U3:P1", "P_1", "T = U_3(q), r = p = 2"),
    doc(
        "even:Un:GU(n-1)xGU1",
        "GU_{n-1}(q) x GU_1(q)",
        "T = U_n(q), r = 2, n = 2^k + 1, q = 1 mod 4, f = 2^a, q >= 9 when n = 3",
    ),
    doc("even:Sp4:P12", "P_{1,2}", "T = PSp_4(q), r = p = 2, q >= 4, G contains a graph automorphism"),
    doc(
        "even:O:O+(n-1)xO1",
        "O_{n-1}^+(q) x O_1(q)",
        "T = Omega_n(q), r = 2, n = 2^k + 1 >= 9, f = 2^a, q = +-1 mod 8 when f = 1",
    ),
    doc(
        "even:O+:O+(n-2)xO2+",
        "O_{n-2}^+(q) x O_2^+(q)",
        "T = POmega_n^+(q), r = 2, n = 2^k + 2 >= 10, q = p = 3 mod 4, G not in PO_n^+(q)",
    ),
    doc(
        "even:O-:O+(n-2)xO2-",
        "O_{n-2}^+(q) x O_2^-(q)",
        "T = POmega_n^-(q), r = 2, n = 2^k + 2 >= 10, q = 1 mod 4, f = 2^a, G not in T.<phi>",
    ),
    doc("odd:A:point-stabilizer", "A_{n-1}", "G = A_n, r odd, n = r^k + 1 with k >= 2"),
    doc("odd:A:SrwrS2", "(S_r wr S_2) cap G", "G = A_n, r odd, n = 2r"),
    doc("odd:A:SrwrSr", "(S_r wr S_r) cap G", "G = A_n, r odd, n = r^2"),
    doc(
        "odd:A:AGL1(r)",
        "AGL_1(r) cap G",
        "G = A_n, n = r, r not 11 or 23, and r = 5 or r not of the form (q^d-1)/(q-1)",
    ),
    doc("odd:L2:P1", "P_1", "T = L_2(q), r = p odd"),
    doc(
        "odd:L2:r2:GL1(q^2)",
        "GL_1(q^2)",
        "T = L_2(q), r = r_2, and either f <= 2 with r > 5 or |R| > r, \
         or f > 2 with alpha(1,-1) or ((r,p) = (3,2) and no q^(1/k) = -1 mod 3 for primes k | f other than 3, f)",
    ),
    doc(
        "odd:Ln:r1:GL1(q)wrSn",
        "GL_1(q) wr S_n",
        "T = L_n(q), r = r_1 = n, and either n = 3 with (f = 1, q = 1 mod 9) or f = 3^a > 1, \
         or n >= 5 with f odd and alpha(1,+1)",
    ),
    doc("odd:L3:GU3(2)", "GU_3(q^{1/2})", "G = PGL_3(4), r = 3"),
    doc(
        "odd:Ln:rn:GL(n/t)(q^t)",
        "GL_{n/t}(q^t)",
        "T = L_n(q), r = r_n, n = t^a with t >= 3 prime, alpha(n,+1), \
         and either f > 1 odd, or f = 1 with |R| > r, r != 2n+1 or -r a nonsquare mod p",
    ),
    doc("odd:U3:P1", "P_1", "T = U_3(q), r = p odd"),
    doc(
        "odd:U3:r2:GU1(q)wrS3",
        "GU_1(q) wr S_3",
        "T = U_3(q), r = r_2 = 3, and f = 1 with q = -1 mod 9, or f = 3^a > 1",
    ),
    doc("odd:U3:r6:L2(7)", "L_2(7)", "T = U_3(3), r = 7"),
    doc(
        "odd:U3:r6:GU1(q^3)",
        "GU_1(q^3)",
        "T = U_3(q), r = r_6, beta(3,-1), and f > 1 or |R| > r or r > 7",
    ),
    doc("odd:Un:r2:GU1(q)wrSn", "GU_1(q) wr S_n", "T = U_n(q), r = r_2 = n >= 5, beta(1,-1)"),
    doc(
        "odd:Un:r(2n-2):GU(n-1)xGU1",
        "GU_{n-1}(q) x GU_1(q)",
        "T = U_n(q), n >= 4 even, r = r_{2n-2}, beta(n-1,-1), \
         and f > 1, or f = 1 with |R| > r, r != 2n-1 or -r a square mod p",
    ),
    doc("odd:U5:r10:L2(11)", "L_2(11)", "T = U_5(2), r = 11"),
    doc(
        "odd:Un:r2n:GU(n/t)(q^t)",
        "GU_{n/t}(q^t)",
        "T = U_n(q), n >= 4, r = r_{2n}, n = t^a with t >= 3 prime, beta(n,-1), \
         and f > 1, or f = 1 with |R| > r, r != 2n+1 or -r a square mod p",
    ),
    doc("odd:Sp6:r2:O6-(2)", "O_6^-(2)", "T = Sp_6(2), r = 3"),
    doc(
        "odd:Sp:rn:Sp(n/2)(q^2)",
        "Sp_{n/2}(q^2)",
        "T = PSp_n(q), n = 2^a >= 4, q odd, r = r_n, alpha(n,+1), and f > 2, \
         or f = 2 with |R| > r, r != 2n+1 or r a square mod p, \
         or f = 1 with |R| > r, r > 2n+1 or (r = 2n+1 and r a nonsquare mod p)",
    ),
    doc(
        "odd:O:r2:O-(n-1)xO1",
        "O_{n-1}^-(q) x O_1(q)",
        "T = Omega_n(q), r = r_2, n = 2r+1, alpha(1,-1), and r > 3 or f > 1 or q = -1 mod 9",
    ),
    doc(
        "odd:O:ri:O-(n-1)xO1",
        "O_{n-1}^-(q) x O_1(q)",
        "T = Omega_n(q), r = r_i with i even, 4 <= i <= n-3, alpha(i,+1), (n-1)/i = r^a with a >= 1",
    ),
    doc(
        "odd:O:r(n-1):O-(n-1)xO1",
        "O_{n-1}^-(q) x O_1(q)",
        "T = Omega_n(q), n >= 9, r = r_{n-1}, alpha(n-1,+1), and r > 2n-1 or |R| > r, \
         or r = 2n-1 with (f = 2, r a square mod p) or (f = 1, r a nonsquare mod p)",
    ),
    doc(
        "odd:O-:rn:GU(n/2)(q)",
        "GU_{n/2}(q)",
        "T = POmega_n^-(q), r = r_n, n/2 >= 5 prime, beta(n/2,-1), |R| > r or r > n+1",
    ),
    doc(
        "odd:O-:rn:O-(n/2)(q^2)",
        "O_{n/2}^-(q^2)",
        "T = POmega_n^-(q), r = r_n, n = 2^a >= 8, beta(n/2,-1), |R| > r or r > n+1",
    ),
    doc(
        "exceptional:2B2:r4:torus",
        "(q+-sqrt(2q)+1):4",
        "T = 2B2(q), r = r_4, (q^(1/k))^2 != -1 mod r for primes k | f other than r, f",
    ),
    doc("exceptional:2G2:r3:borel", "[q^3]:(q-1)", "T = 2G2(q), r = p = 3"),
    doc("exceptional:2G2:r6:torus", "(q+-sqrt(3q)+1):6", "T = 2G2(q), r = r_6, alpha(3,-1)"),
    doc(
        "exceptional:G2:r3:SL3",
        "SL_3^e(q).2",
        "T = G_2(q), r = 3 = r_1 (e = +) or r_2 (e = -), f = 3^a, and p < 5 or f > 1 or q = e mod 9",
    ),
    doc(
        "exceptional:G2:r3or6:SL3",
        "SL_3^e(q).2",
        "T = G_2(q), r = r_3 (e = +) or r_6 (e = -), alpha(3,e), and either p = 2 with (e,q) != (-,4), \
         or p >= 5 with f > 3, |R| > r, r > 13, (f = 3 and (r = 13 or p = +-1, +-3 mod 9)), \
         (f = 2 and p a square mod 13), or (f = 1, r = 13, p a nonsquare mod 13)",
    ),
    doc(
        "exceptional:3D4:r3:A2",
        "A_2^e(q) x (q^2+eq+1)",
        "T = 3D4(q), r = 3 = r_1 (e = +) or r_2 (e = -), f = 3^a",
    ),
    doc(
        "exceptional:3D4:r12:torus",
        "(q^4-q^2+1):4",
        "T = 3D4(q), r = r_12, (q^(1/k))^6 != -1 mod r for primes k | f other than 3, r",
    ),
    doc("exceptional:2F4:r12:torus", "(q^2+-sqrt(2q^3)+q+-sqrt(2q)+1):12", "T = 2F4(q), r = r_12, f >= 3, alpha(6,-1)"),
    doc(
        "exceptional:F4:r8:B4",
        "B_4(q)",
        "T = F_4(q), r = r_8, p >= 3, alpha(4,-1), and f > 2, r > 17 or |R| > r, \
         or f = 2 with p = 3 or p a square mod 17, or f = 1 with p a nonsquare mod 17",
    ),
    doc(
        "exceptional:F4:r12:3D4",
        "3D4(q).3",
        "T = F_4(q), r = r_12, p >= 3, alpha(6,-1), and f not 1 or 3, r > 13 or |R| > r, \
         or f = 3 with p = +-1 mod 7",
    ),
    doc(
        "exceptional:E6:r9:A2(q^3)",
        "A_2(q^3).3",
        "T = E_6(q), r = r_9, alpha(9,+1), and f > 2, r > 19 or |R| > r, \
         or f = 2 with p a square mod 5, or f = 1 with p a nonsquare mod 5 or mod 19",
    ),
    doc(
        "exceptional:2E6:r18:2A2(q^3)",
        "A_2^-(q^3).3",
        "T = 2E6(q), r = r_18, beta(9,-1), and f > 1, r > 19 or |R| > r, \
         or f = 1 with p a nonsquare mod 5 or a square mod 19",
    ),
    doc(
        "exceptional:E7:r18:2E6",
        "2E6(q) x (q+1)",
        "T = E_7(q), r = r_18, alpha(18,+1), and f > 2, r > 37 or |R| > r, \
         or f = 2 with p a square mod 37, or f = 1 with (q,r) = (2,19) or (r = 37, p a nonsquare mod 37)",
    ),
    doc(
        "exceptional:E8:r15or30:torus",
        "(q^8+-q^7...+1):30",
        "T = E_8(q), r = r_15 or r_30, alpha(30,+1), and r > 61 or |R| > r, \
         or |R| = r = 61 with f > 2 or (f = 2, r = r_15, d_p(r) in {15, 30})",
    ),
    doc("sporadic:M11:11", "L_2(11)", "G = M11, r = 11"),
    doc("sporadic:M22:11", "L_2(11)", "G = M22, r = 11"),
    doc("sporadic:M23:23", "23:11", "G = M23, r = 23"),
    doc("sporadic:He:17", "Sp_4(4):2", "G = He, r = 17"),
    doc("sporadic:Ru:29", "L_2(29)", "G = Ru, r = 29"),
    doc("sporadic:Co2:23", "M_23", "G = Co2, r = 23"),
    doc("sporadic:Co3:23", "M_23", "G = Co3, r = 23"),
    doc("sporadic:J1:19", "19:6", "G = J1, r = 19"),
    doc("sporadic:J3:3", "3^2.3^{1+2}:8", "G = J3, r = 3"),
    doc("sporadic:Fi24':29", "29:14", "G = Fi24', r = 29"),
    doc("sporadic:HN:19", "U_3(8):3", "G = HN, r = 19"),
    doc("sporadic:J4:29", "29:28", "G = J4, r = 29"),
    doc("sporadic:J4:43", "43:14", "G = J4, r = 43"),
    doc("sporadic:Ly:37", "37:18", "G = Ly, r = 37"),
    doc("sporadic:Ly:67", "67:22", "G = Ly, r = 67"),
    doc("sporadic:B:47", "47:23", "G = B, r = 47"),
    doc("sporadic:M:47", "2.B", "G = M, r = 47"),
    doc("sporadic:M:59", "L_2(59)", "G = M, r = 59"),
    doc("sporadic:M:71", "L_2(71)", "G = M, r = 71"),
    doc("normalizer:A", "AGL_1(r) cap G", "G = A_r, r >= 13, r != 23, r not of the form (q^d-1)/(q-1)"),
    doc("normalizer:L2:P1", "P_1", "T = L_2(q), r = p"),
    doc(
        "normalizer:L2:GL1(q)wrS2",
        "GL_1(q) wr S_2",
        "T = L_2(q), r = 2, and q = 9 with G not in PSigmaL_2(9), or q = p = 2^k + 1 >= 17",
    ),
    doc(
        "normalizer:L2:GL1(q^2)",
        "GL_1(q^2)",
        "T = L_2(q), r = 2, and G = PGL_2(7), or q = p = 2^k - 1 >= 31",
    ),
    doc("normalizer:L2:r2", "GL_1(q^2)", "T = L_2(q), r = r_2, conditions of odd:L2:r2:GL1(q^2)"),
    doc("normalizer:L3:P12", "P_{1,2}", "T = L_3(q), r = p = 2, G contains a graph automorphism"),
    doc("normalizer:L3:GU3(2)", "GU_3(2)", "G = PGL_3(4), r = 3"),
    doc("normalizer:U3:P1", "P_1", "T = U_3(q), r = p"),
    doc("normalizer:U3:GU1(q)wrS3", "GU_1(q) wr S_3", "T = U_3(8), r = 3"),
    doc("normalizer:U3:r6", "GU_1(q^3)", "T = U_3(q), r = r_6, beta(3,-1), and f > 1 or |R| > r or r > 7"),
    doc("normalizer:Sp4:P12", "P_{1,2}", "T = PSp_4(q), r = p = 2, q >= 4, G contains a graph automorphism"),
    doc("normalizer:Ln:rn", "GL_1(q^n)", "T = L_n(q), n >= 3 prime, conditions of odd:Ln:rn:GL(n/t)(q^t)"),
    doc("normalizer:Un:r2n", "GU_1(q^n)", "T = U_n(q), n >= 3 prime, conditions of odd:Un:r2n:GU(n/t)(q^t)"),
    doc("normalizer:2B2:borel", "q^{1+1}:(q-1)", "T = 2B2(q), r = 2, G = T"),
    doc("normalizer:2B2:r4", "(q+-sqrt(2q)+1):4", "T = 2B2(q), conditions of exceptional:2B2:r4:torus"),
    doc("normalizer:2G2:borel", "[q^3]:(q-1)", "T = 2G2(q), r = 3"),
    doc("normalizer:2G2:r6", "(q+-sqrt(3q)+1):6", "T = 2G2(q), conditions of exceptional:2G2:r6:torus"),
    doc("normalizer:3D4:r12", "(q^4-q^2+1):4", "T = 3D4(q), conditions of exceptional:3D4:r12:torus"),
    doc("normalizer:2F4:r12", "(q^2+-sqrt(2q^3)+q+-sqrt(2q)+1):12", "T = 2F4(q), conditions of exceptional:2F4:r12:torus"),
    doc("normalizer:E8", "(q^8+-q^7...+1):30", "T = E_8(q), conditions of exceptional:E8:r15or30:torus"),
    doc("normalizer:sporadic", "N_G(R)", "G = M23, J1, J3, J4, Ly, Fi24' or B with r as in their sporadic rows"),
    doc("core:A9", "S_3 wr S_3", "G = A_9, r = 3"),
    doc(
        "core:L2:GL1(q)wrS2",
        "GL_1(q) wr S_2",
        "T = L_2(q), r = 2, q = 1 mod 4, q >= 13, and f = 2^a > 1 with G not in PSigmaL_2(q), \
         or q = p not a Fermat prime with |R| >= 2^4",
    ),
    doc(
        "core:L2:GL1(q^2)",
        "GL_1(q^2)",
        "T = L_2(q), r = 2, q = p = 3 mod 4 not a Mersenne prime, |R| >= 2^4",
    ),
    doc(
        "core:Ln:GL(n-1)xGL1",
        "GL_{n-1}(q) x GL_1(q)",
        "T = L_n(q), r = 2, n = 2^k + 1 >= 3, q = p = 3 mod 4, G = T.2 with a graph automorphism",
    ),
    doc("core:Ln:r1", "GL_1(q) wr S_n", "T = L_n(q), conditions of odd:Ln:r1:GL1(q)wrSn"),
    doc("core:Un:GU(n-1)xGU1", "GU_{n-1}(q) x GU_1(q)", "T = U_n(q), conditions of even:Un:GU(n-1)xGU1"),
    doc(
        "core:Un:r2",
        "GU_1(q) wr S_n",
        "T = U_n(q), r = r_2 = n, and n = 3 with (f = 1, q = -1 mod 9) or (f = 3^a > 1, q != 8), \
         or n >= 5 with beta(1,-1)",
    ),
    doc("core:O:r2", "O_{n-1}^+(q) x O_1(q)", "T = Omega_n(q), conditions of even:O:O+(n-1)xO1"),
    doc("core:O+:r2", "O_{n-2}^+(q) x O_2^+(q)", "T = POmega_n^+(q), conditions of even:O+:O+(n-2)xO2+"),
    doc("core:O-:r2", "O_{n-2}^+(q) x O_2^-(q)", "T = POmega_n^-(q), conditions of even:O-:O+(n-2)xO2-"),
    doc("core:G2:r3", "SL_3^e(q).2", "T = G_2(q), conditions of exceptional:G2:r3:SL3"),
    doc("core:3D4:r3", "A_2^e(q) x (q^2+eq+1)", "T = 3D4(q), conditions of exceptional:3D4:r3:A2"),
];

/// Looks up the documentation of a row identifier.
pub fn row_doc(id: &str) -> Option<&'static RowDoc> {
    ROW_DOCS.iter().find(|d| d.id == id)
}

/// Markdown table mapping every row identifier to its overgroup and conditions.
pub fn row_reference_markdown() -> String {
    let mut out = String::from("| row | overgroup | conditions |\n|---|---|---|\n");
    for d in ROW_DOCS {
        out.push_str(&format!(
            "| `{}` | `{}` | {} |\n",
            d.id, d.overgroup, d.condition
        ));
    }
    out
}
