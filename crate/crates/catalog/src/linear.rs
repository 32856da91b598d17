//! Matrices over a [`Gf`] and semilinear actions on projective points.

use std::collections::HashMap;

use permgroup::{Perm, PermError};

use crate::gf::Gf;

/// Square matrix, row-major. Vectors are rows and act by `v ↦ vM`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<u32>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    pub fn from_rows(rows: &[&[u32]]) -> Mat {
        let n = rows.len();
        Mat {
            n,
            a: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn diag(d: &[u32]) -> Mat {
        let mut m = Mat::identity(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// `I + c·E_ij`.
    pub fn elementary(n: usize, i: usize, j: usize, c: u32) -> Mat {
        let mut m = Mat::identity(n);
        m.set(i, j, c);
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.a[i * self.n + j] = x;
    }

    pub fn mul(&self, other: &Mat, k: &Gf) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] =
                    (0..n).fold(0, |s, l| k.add(s, k.mul(self.get(i, l), other.get(l, j))));
            }
        }
        Mat { n, a }
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        Mat {
            n,
            a: (0..n * n).map(|x| self.get(x % n, x / n)).collect(),
        }
    }

    /// Entrywise `x ↦ x^(p^e)`.
    pub fn frobenius(&self, e: u32, k: &Gf) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().map(|&x| k.frobenius(x, e)).collect(),
        }
    }

    pub fn det(&self, k: &Gf) -> u32 {
        let (n, mut m, mut det) = (self.n, self.clone(), 1);
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    let (x, y) = (m.get(col, j), m.get(piv, j));
                    m.set(col, j, y);
                    m.set(piv, j, x);
                }
                det = k.neg(det);
            }
            let pv = m.get(col, col);
            det = k.mul(det, pv);
            let pinv = k.inv(pv);
            for r in col + 1..n {
                let factor = k.mul(m.get(r, col), pinv);
                for j in col..n {
                    let v = k.sub(m.get(r, j), k.mul(factor, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self, k: &Gf) -> Option<Mat> {
        let n = self.n;
        let (mut m, mut inv) = (self.clone(), Mat::identity(n));
        for col in 0..n {
            let piv = (col..n).find(|&r| m.get(r, col) != 0)?;
            for j in 0..n {
                let (x, y) = (m.get(col, j), m.get(piv, j));
                m.set(col, j, y);
                m.set(piv, j, x);
                let (x, y) = (inv.get(col, j), inv.get(piv, j));
                inv.set(col, j, y);
                inv.set(piv, j, x);
            }
            let pinv = k.inv(m.get(col, col));
            for j in 0..n {
                m.set(col, j, k.mul(m.get(col, j), pinv));
                inv.set(col, j, k.mul(inv.get(col, j), pinv));
            }
            for r in 0..n {
                let factor = m.get(r, col);
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = k.sub(m.get(r, j), k.mul(factor, m.get(col, j)));
                    m.set(r, j, v);
                    let v = k.sub(inv.get(r, j), k.mul(factor, inv.get(col, j)));
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }
}

pub fn vec_mat(v: &[u32], m: &Mat, k: &Gf) -> Vec<u32> {
    (0..m.n)
        .map(|j| {
            v.iter()
                .enumerate()
                .fold(0, |s, (i, &x)| k.add(s, k.mul(x, m.get(i, j))))
        })
        .collect()
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn normalize(v: &[u32], k: &Gf) -> Vec<u32> {
    let lead = v.iter().copied().find(|&x| x != 0).expect("nonzero vector");
    let s = k.inv(lead);
    v.iter().map(|&x| k.mul(x, s)).collect()
}

/// A finite set of projective points, indexed `0..len`.
#[derive(Debug, Clone)]
pub struct PointSet {
    pub points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl PointSet {
    /// All points of `PG(n−1, q)`.
    pub fn projective(n: usize, k: &Gf) -> PointSet {
        PointSet::filtered(n, k, |_| true)
    }

    /// The points of `PG(n−1, q)` whose normalized representative satisfies `keep`.
    pub fn filtered(n: usize, k: &Gf, keep: impl Fn(&[u32]) -> bool) -> PointSet {
        let q = k.q() as usize;
        let mut points = Vec::new();
        for code in 1..q.pow(n as u32) {
            let mut x = code;
            let v: Vec<u32> = (0..n)
                .map(|_| {
                    let d = (x % q) as u32;
                    x /= q;
                    d
                })
                .rev()
                .collect();
            if v.iter().find(|&&c| c != 0) == Some(&1) && keep(&v) {
                points.push(v);
            }
        }
        PointSet::from_points(points)
    }

    pub fn from_points(points: Vec<Vec<u32>>) -> PointSet {
        let index = points
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect();
        PointSet { points, index }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, v: &[u32], k: &Gf) -> Option<u32> {
        self.index.get(&normalize(v, k)).copied()
    }

    /// The permutation induced by `v ↦ map(v)`; fails if the set is not preserved.
    pub fn perm(&self, k: &Gf, map: impl Fn(&[u32]) -> Vec<u32>) -> Result<Perm, PermError> {
        let images = self
            .points
            .iter()
            .map(|v| self.index_of(&map(v), k).ok_or(PermError::NotBijection))
            .collect::<Result<Vec<_>, _>>()?;
        Perm::from_images(images)
    }

    /// The permutation induced by `v ↦ v^(p^e) M`.
    pub fn semilinear(&self, k: &Gf, m: &Mat, e: u32) -> Result<Perm, PermError> {
        self.perm(k, |v| {
            let w: Vec<u32> = v.iter().map(|&x| k.frobenius(x, e)).collect();
            vec_mat(&w, m, k)
        })
    }
}
