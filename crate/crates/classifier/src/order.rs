//! Orders of the finite simple groups.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::spec::{Family, GroupSpec};

/// A sporadic simple group: its order and `|Out|`.
#[derive(Debug, Clone, Copy)]
pub struct SporadicData {
    pub name: &'static str,
    pub order: &'static str,
    pub out: u32,
}

pub const SPORADICS: &[SporadicData] = &[
    SporadicData {
        name: "M11",
        order: "7920",
        out: 1,
    },
    SporadicData {
        name: "M12",
        order: "95040",
        out: 2,
    },
    SporadicData {
        name: "M22",
        order: "443520",
        out: 2,
    },
    SporadicData {
        name: "M23",
        order: "10200960",
        out: 1,
    },
    SporadicData {
        name: "M24",
        order: "244823040",
        out: 1,
    },
    SporadicData {
        name: "J1",
        order: "175560",
        out: 1,
    },
    SporadicData {
        name: "J2",
        order: "604800",
        out: 2,
    },
    SporadicData {
        name: "J3",
        order: "50232960",
        out: 2,
    },
    SporadicData {
        name: "J4",
        order: "86775571046077562880",
        out: 1,
    },
    SporadicData {
        name: "HS",
        order: "44352000",
        out: 2,
    },
    SporadicData {
        name: "McL",
        order: "898128000",
        out: 2,
    },
    SporadicData {
        name: "Suz",
        order: "448345497600",
        out: 2,
    },
    SporadicData {
        name: "He",
        order: "4030387200",
        out: 2,
    },
    SporadicData {
        name: "Ru",
        order: "145926144000",
        out: 1,
    },
    SporadicData {
        name: "Co1",
        order: "4157776806543360000",
        out: 1,
    },
    SporadicData {
        name: "Co2",
        order: "42305421312000",
        out: 1,
    },
    SporadicData {
        name: "Co3",
        order: "495766656000",
        out: 1,
    },
    SporadicData {
        name: "ON",
        order: "460815505920",
        out: 2,
    },
    SporadicData {
        name: "Ly",
        order: "51765179004000000",
        out: 1,
    },
    SporadicData {
        name: "Fi22",
        order: "64561751654400",
        out: 2,
    },
    SporadicData {
        name: "Fi23",
        order: "4089470473293004800",
        out: 1,
    },
    SporadicData {
        name: "Fi24'",
        order: "1255205709190661721292800",
        out: 2,
    },
    SporadicData {
        name: "HN",
        order: "273030912000000",
        out: 2,
    },
    SporadicData {
        name: "Th",
        order: "90745943887872000",
        out: 1,
    },
    SporadicData {
        name: "B",
        order: "4154781481226426191177580544000000",
        out: 1,
    },
    SporadicData {
        name: "M",
        order: "808017424794512875886459904961710757005754368000000000",
        out: 1,
    },
];

pub fn sporadic(name: &str) -> Option<&'static SporadicData> {
    SPORADICS.iter().find(|s| s.name == name)
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn gcd_big(a: &BigUint, b: u64) -> BigUint {
    let mut x = big(b);
    let mut y = a % b;
    while !y.is_zero() {
        let t = &x % &y;
        x = y;
        y = t;
    }
    x
}

/// `q^e − 1` or `q^e + 1`.
fn qe(q: &BigUint, e: u32, plus: bool) -> BigUint {
    let v = q.pow(e);
    if plus {
        v + 1u32
    } else {
        v - 1u32
    }
}

/// `|T|` for the socle of `spec`, honouring the derived-subgroup socles
/// `Sp₄(2)′`, `G₂(2)′`, `²G₂(3)′` and `²F₄(2)′`.
pub fn socle_order(spec: &GroupSpec) -> BigUint {
    let n = spec.n;
    match &spec.family {
        Family::Alt => factorial(n as u64) / 2u32,
        Family::Sporadic(name) => sporadic(name)
            .expect("validated")
            .order
            .parse()
            .expect("literal"),
        family => {
            let q = &spec.q.as_ref().expect("validated").q;
            let two = big(2);
            let three = big(3);
            let prod = |terms: &[(u32, bool)]| {
                terms
                    .iter()
                    .fold(BigUint::one(), |acc, &(e, plus)| acc * qe(q, e, plus))
            };
            match family {
                Family::L => {
                    let terms: Vec<(u32, bool)> = (2..=n).map(|i| (i, false)).collect();
                    q.pow(n * (n - 1) / 2) * prod(&terms) / gcd_big(&(q - 1u32), n as u64)
                }
                Family::U => {
                    let terms: Vec<(u32, bool)> = (2..=n).map(|i| (i, i % 2 == 1)).collect();
                    q.pow(n * (n - 1) / 2) * prod(&terms) / gcd_big(&(q + 1u32), n as u64)
                }
                Family::Sp | Family::OOdd => {
                    let m = n / 2;
                    let terms: Vec<(u32, bool)> = (1..=m).map(|i| (2 * i, false)).collect();
                    let full = q.pow(m * m) * prod(&terms) / gcd_big(&(q - 1u32), 2);
                    if family == &Family::Sp && n == 4 && *q == two {
                        full / 2u32
                    } else {
                        full
                    }
                }
                Family::OPlus | Family::OMinus => {
                    let m = n / 2;
                    let plus = family == &Family::OMinus;
                    let terms: Vec<(u32, bool)> = (1..m).map(|i| (2 * i, false)).collect();
                    let top = qe(q, m, plus);
                    let d = gcd_big(&top, 4);
                    q.pow(m * (m - 1)) * top * prod(&terms) / d
                }
                Family::B2Twisted => q.pow(2) * (q.pow(2) + 1u32) * (q - 1u32),
                Family::G2Twisted => {
                    let full = q.pow(3) * (q.pow(3) + 1u32) * (q - 1u32);
                    if *q == three {
                        full / 3u32
                    } else {
                        full
                    }
                }
                Family::F4Twisted => {
                    let full = q.pow(12) * prod(&[(6, true), (4, false), (3, true), (1, false)]);
                    if *q == two {
                        full / 2u32
                    } else {
                        full
                    }
                }
                Family::D4Twisted => {
                    q.pow(12) * (q.pow(8) + q.pow(4) + 1u32) * prod(&[(6, false), (2, false)])
                }
                Family::G2 => {
                    let full = q.pow(6) * prod(&[(6, false), (2, false)]);
                    if *q == two {
                        full / 2u32
                    } else {
                        full
                    }
                }
                Family::F4 => q.pow(24) * prod(&[(12, false), (8, false), (6, false), (2, false)]),
                Family::E6 => {
                    let t = [
                        (12, false),
                        (9, false),
                        (8, false),
                        (6, false),
                        (5, false),
                        (2, false),
                    ];
                    q.pow(36) * prod(&t) / gcd_big(&(q - 1u32), 3)
                }
                Family::E6Twisted => {
                    let t = [
                        (12, false),
                        (9, true),
                        (8, false),
                        (6, false),
                        (5, true),
                        (2, false),
                    ];
                    q.pow(36) * prod(&t) / gcd_big(&(q + 1u32), 3)
                }
                Family::E7 => {
                    let t = [
                        (18, false),
                        (14, false),
                        (12, false),
                        (10, false),
                        (8, false),
                        (6, false),
                        (2, false),
                    ];
                    q.pow(63) * prod(&t) / gcd_big(&(q - 1u32), 2)
                }
                Family::E8 => {
                    let t = [
                        (30, false),
                        (24, false),
                        (20, false),
                        (18, false),
                        (14, false),
                        (12, false),
                        (8, false),
                        (2, false),
                    ];
                    q.pow(120) * prod(&t)
                }
                Family::Alt | Family::Sporadic(_) => unreachable!(),
            }
        }
    }
}
