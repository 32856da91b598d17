//! Faithful permutation models of almost simple groups, from a [`GroupSpec`].

use classifier::{Family, GroupSpec};
use permgroup::Perm;

use crate::error::CatalogError;
use crate::gf::Gf;
use crate::linear::{normalize, vec_mat, Mat, PointSet};

/// Generators for `T` and for `G` modulo `T`, on `degree` points.
#[derive(Debug, Clone)]
pub struct Model {
    pub degree: usize,
    pub socle: Vec<Perm>,
    pub outer: Vec<Perm>,
}

fn unsupported(spec: &GroupSpec) -> CatalogError {
    CatalogError::Unsupported(spec.name())
}

fn cycles(degree: usize, cs: &[&[u32]]) -> Result<Perm, CatalogError> {
    Ok(Perm::from_cycles(degree, cs)?)
}

pub fn build_model(spec: &GroupSpec) -> Result<Model, CatalogError> {
    spec.validate()?;
    match &spec.family {
        Family::Alt => alternating(spec),
        Family::L => linear(spec),
        Family::U if spec.n == 3 => unitary3(spec),
        Family::Sp => symplectic(spec),
        Family::B2Twisted => suzuki(spec),
        Family::Sporadic(name) => mathieu(name, spec),
        _ => Err(unsupported(spec)),
    }
}

fn alternating(spec: &GroupSpec) -> Result<Model, CatalogError> {
    let n = spec.n as usize;
    let three: Vec<u32> = vec![0, 1, 2];
    let long: Vec<u32> = if n % 2 == 1 {
        (0..n as u32).collect()
    } else {
        (1..n as u32).collect()
    };
    let socle = vec![cycles(n, &[&three])?, cycles(n, &[&long])?];
    let outer = if spec.outer.diag == 2 {
        vec![cycles(n, &[&[0, 1]])?]
    } else {
        Vec::new()
    };
    Ok(Model {
        degree: n,
        socle,
        outer,
    })
}

fn field_of(spec: &GroupSpec, degree_factor: u32) -> Result<Gf, CatalogError> {
    let q = spec.q.as_ref().ok_or_else(|| unsupported(spec))?;
    Gf::new(q.p as u32, q.f * degree_factor)
}

/// Frobenius exponent giving a field automorphism of order `k` on a field of degree `f`.
fn frob_exponent(f: u32, k: u32) -> u32 {
    f / k
}

/// `PSL_n(q)` and its extensions. With a graph part the action is on points and hyperplanes.
fn linear(spec: &GroupSpec) -> Result<Model, CatalogError> {
    let k = field_of(spec, 1)?;
    let (n, f, q, w) = (spec.n as usize, k.f(), k.q(), k.primitive());
    let o = &spec.outer;
    let mut socle = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                socle.push((Mat::elementary(n, i, j, 1), 0));
                if q > 2 {
                    socle.push((Mat::elementary(n, i, j, w), 0));
                }
            }
        }
    }
    let mut outer = Vec::new();
    if o.diag > 1 {
        let full = spec.full_diag();
        let mut d = vec![1; n];
        d[0] = k.pow(w, (full / o.diag) as u64);
        outer.push((Mat::diag(&d), 0));
    }
    if o.field > 1 {
        outer.push((Mat::identity(n), frob_exponent(f, o.field)));
    }
    if o.twisted {
        if n != 2 || f % 2 != 0 {
            return Err(unsupported(spec));
        }
        let mut d = vec![1; n];
        d[0] = w;
        outer.push((Mat::diag(&d), f / 2));
    }
    let points = PointSet::projective(n, &k);
    if !o.graph {
        let act = |(m, e): &(Mat, u32)| points.semilinear(&k, m, *e);
        return Ok(Model {
            degree: points.len(),
            socle: socle.iter().map(act).collect::<Result<_, _>>()?,
            outer: outer.iter().map(act).collect::<Result<_, _>>()?,
        });
    }
    let np = points.len();
    let act = |(m, e): &(Mat, u32)| -> Result<Perm, CatalogError> {
        let dual = m.inverse(&k).expect("invertible").transpose();
        let mut images = Vec::with_capacity(2 * np);
        for (mat, offset) in [(m, 0), (&dual, np as u32)] {
            for v in &points.points {
                let w: Vec<u32> = v.iter().map(|&x| k.frobenius(x, *e)).collect();
                let img = points
                    .index_of(&vec_mat(&w, mat, &k), &k)
                    .expect("point image");
                images.push(img + offset);
            }
        }
        Ok(Perm::from_images(images)?)
    };
    let mut outer: Vec<Perm> = outer.iter().map(act).collect::<Result<_, _>>()?;
    let swap: Vec<u32> = (0..2 * np as u32)
        .map(|i| (i + np as u32) % (2 * np as u32))
        .collect();
    outer.push(Perm::from_images(swap)?);
    Ok(Model {
        degree: 2 * np,
        socle: socle.iter().map(act).collect::<Result<_, _>>()?,
        outer,
    })
}

/// `PSU_3(q)` on the isotropic points of the Hermitian form `Σ xᵢ^(q+1)`.
fn unitary3(spec: &GroupSpec) -> Result<Model, CatalogError> {
    let k = field_of(spec, 2)?;
    let qq = spec.q.as_ref().expect("q");
    let q = qq.q_u64().ok_or_else(|| unsupported(spec))? as u32;
    let norm = |x: u32| k.pow(x, (q + 1) as u64);
    let zeta = k.pow(k.primitive(), (q - 1) as u64);
    let zinv = k.inv(zeta);
    let points = PointSet::filtered(3, &k, |v| v.iter().fold(0, |s, &x| k.add(s, norm(x))) == 0);
    let mut socle = vec![
        Mat::diag(&[zeta, zinv, 1]),
        Mat::diag(&[1, zeta, zinv]),
        Mat::from_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
    ];
    let blocks = k
        .elements()
        .flat_map(|a| k.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| a != 0 && b != 0 && k.add(norm(a), norm(b)) == 1)
        .take(4);
    for (a, b) in blocks {
        let c = k.neg(k.frobenius(b, qq.f));
        let d = k.frobenius(a, qq.f);
        socle.push(Mat::from_rows(&[&[a, b, 0], &[c, d, 0], &[0, 0, 1]]));
    }
    let o = &spec.outer;
    let mut outer = Vec::new();
    if o.diag > 1 {
        let full = spec.full_diag();
        outer.push((Mat::diag(&[k.pow(zeta, (full / o.diag) as u64), 1, 1]), 0));
    }
    if o.field > 1 {
        outer.push((Mat::identity(3), frob_exponent(k.f(), o.field)));
    }
    if o.graph || o.twisted {
        return Err(unsupported(spec));
    }
    Ok(Model {
        degree: points.len(),
        socle: socle
            .iter()
            .map(|m| points.semilinear(&k, m, 0))
            .collect::<Result<_, _>>()?,
        outer: outer
            .iter()
            .map(|(m, e)| points.semilinear(&k, m, *e))
            .collect::<Result<_, _>>()?,
    })
}

/// `PSp_{2m}(q)` generated by symplectic transvections.
fn symplectic(spec: &GroupSpec) -> Result<Model, CatalogError> {
    let k = field_of(spec, 1)?;
    let (n, m, w) = (spec.n as usize, spec.n as usize / 2, k.primitive());
    let form = |x: &[u32], y: &[u32]| {
        (0..m).fold(0, |s, i| {
            k.add(s, k.sub(k.mul(x[i], y[m + i]), k.mul(x[m + i], y[i])))
        })
    };
    let points = PointSet::projective(n, &k);
    let mut vs: Vec<Vec<u32>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut v = vec![0; n];
            v[i] = 1;
            if j != i {
                v[j] = 1;
            }
            vs.push(v);
        }
    }
    let scalars: Vec<u32> = if k.q() > 2 { vec![1, w] } else { vec![1] };
    let mut socle = Vec::new();
    for v in &vs {
        for &a in &scalars {
            socle.push(points.perm(&k, |x| {
                let c = k.mul(a, form(x, v));
                x.iter()
                    .zip(v)
                    .map(|(&xi, &vi)| k.add(xi, k.mul(c, vi)))
                    .collect()
            })?);
        }
    }
    let o = &spec.outer;
    let mut outer = Vec::new();
    if o.diag > 1 {
        let d: Vec<u32> = (0..n).map(|i| if i < m { w } else { 1 }).collect();
        outer.push(points.semilinear(&k, &Mat::diag(&d), 0)?);
    }
    if o.field > 1 {
        outer.push(points.semilinear(&k, &Mat::identity(n), frob_exponent(k.f(), o.field))?);
    }
    if o.graph || o.twisted {
        return Err(unsupported(spec));
    }
    Ok(Model {
        degree: points.len(),
        socle,
        outer,
    })
}

/// `Sz(q)`, `q = 2^(2m+1)`, on the `q² + 1` points of its ovoid in `PG(3, q)`.
fn suzuki(spec: &GroupSpec) -> Result<Model, CatalogError> {
    let k = field_of(spec, 1)?;
    let mm = (k.f() - 1) / 2;
    let sigma = |x: u32| k.frobenius(x, mm + 1);
    let mut gens = Vec::new();
    for &a in &[0, 1, k.primitive()] {
        for &b in &[0, 1, k.primitive()] {
            if a == 0 && b == 0 {
                continue;
            }
            let a_s = sigma(a);
            let r3 = [
                k.add(k.add(k.mul(k.mul(a, a), a_s), k.mul(a, b)), sigma(b)),
                k.add(k.mul(a, a_s), b),
                a,
                1,
            ];
            gens.push(Mat::from_rows(&[
                &[1, 0, 0, 0],
                &[a, 1, 0, 0],
                &[b, a_s, 1, 0],
                &r3,
            ]));
        }
    }
    let l = k.primitive();
    let t = 1u64 << mm;
    let lp = |e: i64| k.pow(if e >= 0 { l } else { k.inv(l) }, e.unsigned_abs());
    gens.push(Mat::diag(&[
        lp(1 + t as i64),
        lp(t as i64),
        lp(-(t as i64)),
        lp(-1 - t as i64),
    ]));
    gens.push(Mat::from_rows(&[
        &[0, 0, 0, 1],
        &[0, 0, 1, 0],
        &[0, 1, 0, 0],
        &[1, 0, 0, 0],
    ]));
    let start = vec![0, 0, 0, 1];
    let mut orbit = vec![start.clone()];
    let mut seen: std::collections::HashSet<Vec<u32>> = orbit.iter().cloned().collect();
    let mut i = 0;
    while i < orbit.len() {
        for g in &gens {
            let img = normalize(&vec_mat(&orbit[i], g, &k), &k);
            if seen.insert(img.clone()) {
                orbit.push(img);
            }
        }
        i += 1;
    }
    let points = PointSet::from_points(orbit);
    let socle = gens
        .iter()
        .map(|g| points.semilinear(&k, g, 0))
        .collect::<Result<_, _>>()?;
    let o = &spec.outer;
    let mut outer = Vec::new();
    if o.field > 1 {
        outer.push(points.semilinear(&k, &Mat::identity(4), frob_exponent(k.f(), o.field))?);
    }
    if o.diag > 1 || o.graph || o.twisted {
        return Err(unsupported(spec));
    }
    Ok(Model {
        degree: points.len(),
        socle,
        outer,
    })
}

/// `M₁₁` on 11 points and `M₁₂` on 12 points.
fn mathieu(name: &str, spec: &GroupSpec) -> Result<Model, CatalogError> {
    if !spec.outer.is_trivial() {
        return Err(unsupported(spec));
    }
    let a: Vec<u32> = (0..11).collect();
    let b: &[&[u32]] = &[&[2, 6, 10, 7], &[3, 9, 4, 5]];
    match name {
        "M11" => Ok(Model {
            degree: 11,
            socle: vec![cycles(11, &[&a])?, cycles(11, b)?],
            outer: Vec::new(),
        }),
        "M12" => {
            let c: &[&[u32]] = &[&[0, 11], &[1, 10], &[2, 5], &[3, 7], &[4, 8], &[6, 9]];
            Ok(Model {
                degree: 12,
                socle: vec![cycles(12, &[&a])?, cycles(12, b)?, cycles(12, c)?],
                outer: Vec::new(),
            })
        }
        _ => Err(unsupported(spec)),
    }
}
