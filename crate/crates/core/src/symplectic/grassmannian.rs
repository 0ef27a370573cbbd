//! The Lagrangian Grassmannian `X(F_p)` for the form `J` and the action of
//! `Sp₄(F_p)` on it.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::{is_symplectic, j_form};
use crate::error::{Error, Result};
use crate::exactalg::arith::inv_mod;
use crate::exactalg::{MatrixN, ModInt};

/// A point of `X(F_p)`, in the normal forms
///
/// * `A(a,b,c) = ⟨(1,0,a,b), (0,1,c,−3a)⟩`
/// * `B(a,b) = ⟨(1,a,0,b), (0,0,1,3a)⟩`
/// * `C(a) = ⟨(0,1,a,0), (0,0,0,1)⟩`
/// * `D = ⟨(0,0,1,0), (0,0,0,1)⟩`
///
/// with coordinates stored as residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Lagrangian {
    A(u64, u64, u64),
    B(u64, u64),
    C(u64),
    D,
}

/// `|X(F_p)| = (p² + 1)(p + 1)`.
pub fn grassmannian_size(p: u64) -> usize {
    ((p * p + 1) * (p + 1)) as usize
}

impl Lagrangian {
    /// Position in the canonical enumeration: all `A` lexicographically,
    /// then `B`, then `C`, then `D`.
    pub fn index(self, p: u64) -> usize {
        let i = match self {
            Lagrangian::A(a, b, c) => (a * p + b) * p + c,
            Lagrangian::B(a, b) => p * p * p + a * p + b,
            Lagrangian::C(a) => p * p * p + p * p + a,
            Lagrangian::D => p * p * p + p * p + p,
        };
        i as usize
    }

    pub fn from_index(p: u64, i: usize) -> Option<Lagrangian> {
        let i = i as u64;
        let (p2, p3) = (p * p, p * p * p);
        Some(if i < p3 {
            Lagrangian::A(i / p2, i / p % p, i % p)
        } else if i < p3 + p2 {
            let j = i - p3;
            Lagrangian::B(j / p, j % p)
        } else if i < p3 + p2 + p {
            Lagrangian::C(i - p3 - p2)
        } else if i == p3 + p2 + p {
            Lagrangian::D
        } else {
            return None;
        })
    }

    /// The spanning pair of the normal form.
    pub fn basis(self, p: u64) -> [[u64; 4]; 2] {
        let neg = |v: u64| (p - v % p) % p;
        let m3 = |v: u64| 3 * v % p;
        match self {
            Lagrangian::A(a, b, c) => [[1, 0, a, b], [0, 1, c, neg(m3(a))]],
            Lagrangian::B(a, b) => [[1, a, 0, b], [0, 0, 1, m3(a)]],
            Lagrangian::C(a) => [[0, 1, a, 0], [0, 0, 0, 1]],
            Lagrangian::D => [[0, 0, 1, 0], [0, 0, 0, 1]],
        }
    }
}

/// All points of `X(F_p)` in canonical order.
pub fn lagrangians(p: u64) -> Vec<Lagrangian> {
    (0..grassmannian_size(p))
        .map(|i| Lagrangian::from_index(p, i).expect("index in range"))
        .collect()
}

/// `vᵀJw` for the standard form `J`.
pub fn pairing(p: u64, v: &[u64; 4], w: &[u64; 4]) -> u64 {
    let pos = v[0] * w[3] + 3 * v[2] * w[1];
    let neg = v[3] * w[0] + 3 * v[1] * w[2];
    (pos % p + p - neg % p) % p
}

pub fn is_isotropic(p: u64, l: Lagrangian) -> bool {
    let [v, w] = l.basis(p);
    pairing(p, &v, &w) == 0
}

/// A 4×4 matrix over `F_p` with plain residues, for the inner loops.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Mat4 {
    p: u64,
    m: [[u64; 4]; 4],
}

impl Mat4 {
    pub(crate) fn from_matrix(m: &MatrixN<ModInt>) -> Result<Mat4> {
        if m.size() != 4 {
            return Err(Error::domain(format!("expected a 4×4 matrix, got {0}×{0}", m.size())));
        }
        let p = m.get(0, 0).modulus();
        let mut out = [[0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = m.get(i, j).value();
            }
        }
        Ok(Mat4 { p, m: out })
    }

    fn apply(&self, v: &[u64; 4]) -> [u64; 4] {
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.m[i][j] * v[j]).sum::<u64>() % self.p;
        }
        out
    }

    pub(crate) fn act(&self, l: Lagrangian) -> Result<Lagrangian> {
        let [v, w] = l.basis(self.p);
        classify(self.p, [self.apply(&v), self.apply(&w)])
    }
}

/// Reduced echelon form of a 2×4 matrix; returns the rows and pivots.
fn rref2(p: u64, mut rows: [[u64; 4]; 2]) -> ([[u64; 4]; 2], Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..4 {
        if r == 2 {
            break;
        }
        let Some(k) = (r..2).find(|&k| rows[k][col] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][col], p).expect("nonzero residue mod p");
        for e in rows[r].iter_mut() {
            *e = *e * inv % p;
        }
        let other = 1 - r;
        let f = rows[other][col];
        if f != 0 {
            for j in 0..4 {
                rows[other][j] = (rows[other][j] + (p - f) * rows[r][j]) % p;
            }
        }
        pivots.push(col);
        r += 1;
    }
    (rows, pivots)
}

/// Normal form of the span of two vectors, which must be a Lagrangian plane.
fn classify(p: u64, rows: [[u64; 4]; 2]) -> Result<Lagrangian> {
    let (r, pivots) = rref2(p, rows);
    let neg3 = |a: u64| (p - 3 * a % p) % p;
    let l = match pivots.as_slice() {
        [0, 1] if r[1][3] == neg3(r[0][2]) => Lagrangian::A(r[0][2], r[0][3], r[1][2]),
        [0, 2] if r[1][3] == 3 * r[0][1] % p => Lagrangian::B(r[0][1], r[0][3]),
        [1, 3] => Lagrangian::C(r[0][2]),
        [2, 3] => Lagrangian::D,
        _ => {
            return Err(Error::internal(format!(
                "image plane {rows:?} has echelon form {r:?} with pivots {pivots:?}, not a Lagrangian"
            )))
        }
    };
    Ok(l)
}

/// Image of `l` under `m`, which should preserve `J`.
pub fn act_subspace(m: &MatrixN<ModInt>, l: Lagrangian) -> Result<Lagrangian> {
    Mat4::from_matrix(m)?.act(l)
}

/// A permutation of `{0, …, n−1}` stored by images; `(g·h)(i) = h(g(i))`,
/// so products act left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Checks that the images form a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::domain("image array is not a bijection")),
            }
        }
        Ok(Perm { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// First then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    /// `g⁻¹·self·g`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn fixed_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i as u32 == j)
            .count()
    }

    /// Cycle lengths with multiplicities.
    pub fn cycle_type(&self) -> BTreeMap<usize, usize> {
        let mut seen = vec![false; self.images.len()];
        let mut out = BTreeMap::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            *out.entry(len).or_insert(0) += 1;
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.cycle_type()
            .keys()
            .fold(BigUint::one(), |acc, &l| acc.lcm(&BigUint::from(l)))
    }
}

/// The permutation of `X(F_p)` induced by a symplectic matrix.
pub fn permutation(m: &MatrixN<ModInt>) -> Result<Perm> {
    let p = m.get(0, 0).modulus();
    if !is_symplectic(m, &j_form(p)) {
        return Err(Error::domain("matrix does not preserve the symplectic form J"));
    }
    let m4 = Mat4::from_matrix(m)?;
    let images = (0..grassmannian_size(p))
        .into_par_iter()
        .map(|i| {
            let l = Lagrangian::from_index(p, i).expect("index in range");
            m4.act(l).map(|l| l.index(p) as u32)
        })
        .collect::<Result<Vec<u32>>>()?;
    Perm::from_images(images).map_err(|_| Error::internal("induced map on X(F_p) is not a bijection"))
}

/// Number of fixed points and order of a permutation.
pub fn fixed_and_orders(perm: &Perm) -> (usize, BigUint) {
    (perm.fixed_count(), perm.order())
}
