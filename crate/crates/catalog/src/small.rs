//! Small soluble and non-soluble groups used to test general group-theoretic facts.

use permgroup::{Perm, PermGroup};

use crate::error::CatalogError;
use crate::gf::Gf;

/// A named small permutation group.
#[derive(Debug, Clone)]
pub struct SmallGroup {
    pub name: &'static str,
    pub group: PermGroup,
}

/// `G = N ⋊ K` with `N` normal and `N ∩ K = 1`.
#[derive(Debug, Clone)]
pub struct Semidirect {
    pub name: &'static str,
    pub group: PermGroup,
    pub normal: PermGroup,
    pub complement: PermGroup,
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(degree, cycles).expect("valid cycles")
}

fn gen_group(degree: usize, gens: Vec<Perm>) -> PermGroup {
    PermGroup::new(degree, gens).expect("valid generators")
}

fn cyclic_cycle(n: u32) -> Vec<u32> {
    (0..n).collect()
}

fn dihedral(n: u32) -> PermGroup {
    let d = n as usize;
    let reflection: Vec<u32> = (0..n).map(|i| (n - i) % n).collect();
    gen_group(
        d,
        vec![
            perm(d, &[&cyclic_cycle(n)]),
            Perm::from_images(reflection).expect("bijection"),
        ],
    )
}

fn symmetric(n: u32) -> PermGroup {
    let d = n as usize;
    gen_group(d, vec![perm(d, &[&[0, 1]]), perm(d, &[&cyclic_cycle(n)])])
}

fn alternating(n: u32) -> PermGroup {
    let d = n as usize;
    let long: Vec<u32> = if n % 2 == 1 {
        cyclic_cycle(n)
    } else {
        (1..n).collect()
    };
    gen_group(d, vec![perm(d, &[&[0, 1, 2]]), perm(d, &[&long])])
}

/// Maps on `GF(q)` as permutations of its element codes.
fn field_map(k: &Gf, f: impl Fn(u32) -> u32) -> Perm {
    Perm::from_images(k.elements().map(f).collect()).expect("bijection")
}

/// Affine pieces over `GF(q)`: the translations, and the multiplications by `mults`.
fn affine(
    p: u32,
    f: u32,
    mults: &[u32],
    frobenius: bool,
) -> Result<(PermGroup, PermGroup, PermGroup), CatalogError> {
    let k = Gf::new(p, f)?;
    let d = k.q() as usize;
    let translations: Vec<Perm> = (0..f)
        .map(|i| field_map(&k, |t| k.add(t, p.pow(i))))
        .collect();
    let mut top: Vec<Perm> = mults
        .iter()
        .map(|&a| field_map(&k, |t| k.mul(a, t)))
        .collect();
    if frobenius {
        top.push(field_map(&k, |t| k.frobenius(t, 1)));
    }
    let n = PermGroup::new(d, translations.clone())?;
    let kk = PermGroup::new(d, top.clone())?;
    let mut all = translations;
    all.extend(top);
    Ok((PermGroup::new(d, all)?, n, kk))
}

fn power_of_primitive(p: u32, f: u32, order: u32) -> u32 {
    let k = Gf::new(p, f).expect("field");
    k.pow(k.primitive(), ((k.q() - 1) / order) as u64)
}

/// Small groups of order at most 200 with at least two prime divisors.
pub fn small_groups() -> Result<Vec<SmallGroup>, CatalogError> {
    let mut out = vec![
        SmallGroup {
            name: "S3",
            group: symmetric(3),
        },
        SmallGroup {
            name: "C6",
            group: gen_group(6, vec![perm(6, &[&cyclic_cycle(6)])]),
        },
        SmallGroup {
            name: "D10",
            group: dihedral(5),
        },
        SmallGroup {
            name: "D12",
            group: dihedral(6),
        },
        SmallGroup {
            name: "D14",
            group: dihedral(7),
        },
        SmallGroup {
            name: "D30",
            group: dihedral(15),
        },
        SmallGroup {
            name: "A4",
            group: alternating(4),
        },
        SmallGroup {
            name: "S4",
            group: symmetric(4),
        },
        SmallGroup {
            name: "A5",
            group: alternating(5),
        },
        SmallGroup {
            name: "S5",
            group: symmetric(5),
        },
        SmallGroup {
            name: "A4xC2",
            group: gen_group(
                6,
                vec![
                    perm(6, &[&[0, 1, 2]]),
                    perm(6, &[&[1, 2, 3]]),
                    perm(6, &[&[4, 5]]),
                ],
            ),
        },
        SmallGroup {
            name: "S3xC3",
            group: gen_group(
                6,
                vec![
                    perm(6, &[&[0, 1, 2]]),
                    perm(6, &[&[0, 1]]),
                    perm(6, &[&[3, 4, 5]]),
                ],
            ),
        },
        SmallGroup {
            name: "SL2(3)",
            group: sl2_3()?,
        },
    ];
    let affine_list: [(&'static str, u32, u32, u32, bool); 8] = [
        ("F20", 5, 1, 4, false),
        ("F21", 7, 1, 3, false),
        ("2^3:7", 2, 3, 7, false),
        ("2^3:7:3", 2, 3, 7, true),
        ("3^2:4", 3, 2, 4, false),
        ("3^2:8", 3, 2, 8, false),
        ("2^4:5", 2, 4, 5, false),
        ("2^4:3", 2, 4, 3, false),
    ];
    for (name, p, f, order, frob) in affine_list {
        let (g, _, _) = affine(p, f, &[power_of_primitive(p, f, order)], frob)?;
        out.push(SmallGroup { name, group: g });
    }
    Ok(out)
}

/// `SL₂(3)` on the 8 nonzero vectors of `GF(3)²`.
fn sl2_3() -> Result<PermGroup, CatalogError> {
    let vecs: Vec<(u32, u32)> = (1..9).map(|c| (c % 3, c / 3)).collect();
    let idx = |v: (u32, u32)| vecs.iter().position(|&w| w == v).expect("nonzero") as u32;
    let act = |m: [[u32; 2]; 2]| {
        let images = vecs
            .iter()
            .map(|&(x, y)| {
                idx((
                    (x * m[0][0] + y * m[1][0]) % 3,
                    (x * m[0][1] + y * m[1][1]) % 3,
                ))
            })
            .collect();
        Perm::from_images(images).expect("bijection")
    };
    Ok(PermGroup::new(
        8,
        vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])],
    )?)
}

/// Coprime semidirect products `N ⋊ K`, with and without a unique maximal overgroup of `K`.
pub fn coprime_semidirect_products() -> Result<Vec<Semidirect>, CatalogError> {
    let mut out = Vec::new();
    let affine_list: [(&'static str, u32, u32, u32); 5] = [
        ("F21", 7, 1, 3),
        ("2^3:7", 2, 3, 7),
        ("3^2:4", 3, 2, 4),
        ("2^4:5", 2, 4, 5),
        ("2^4:3", 2, 4, 3),
    ];
    for (name, p, f, order) in affine_list {
        let (group, normal, complement) = affine(p, f, &[power_of_primitive(p, f, order)], false)?;
        out.push(Semidirect {
            name,
            group,
            normal,
            complement,
        });
    }
    let k9 = Gf::new(3, 2)?;
    let (group, normal, complement) = affine(3, 2, &[k9.neg(1)], false)?;
    out.push(Semidirect {
        name: "3^2:2",
        group,
        normal,
        complement,
    });
    let a4c2 = gen_group(
        6,
        vec![
            perm(6, &[&[1, 2, 3]]),
            perm(6, &[&[0, 1], &[2, 3]]),
            perm(6, &[&[4, 5]]),
        ],
    );
    out.push(Semidirect {
        name: "A4xC2",
        normal: gen_group(
            6,
            vec![
                perm(6, &[&[0, 1], &[2, 3]]),
                perm(6, &[&[0, 2], &[1, 3]]),
                perm(6, &[&[4, 5]]),
            ],
        ),
        complement: gen_group(6, vec![perm(6, &[&[1, 2, 3]])]),
        group: a4c2,
    });
    let d30 = dihedral(15);
    out.push(Semidirect {
        name: "D30",
        normal: gen_group(15, vec![perm(15, &[&cyclic_cycle(15)])]),
        complement: gen_group(15, vec![d30.generators()[1].clone()]),
        group: d30,
    });
    Ok(out)
}
