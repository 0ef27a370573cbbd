//! Small dense square matrices over a commutative ring.

use std::fmt;
use std::ops::Mul;

use super::RingElem;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixN<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: RingElem> MatrixN<R> {
    /// Matrix from rows; panics unless square and nonempty.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(n > 0, "empty matrix");
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        MatrixN {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize, sample: &R) -> Self {
        let mut entries = vec![sample.zero_like(); n * n];
        for i in 0..n {
            entries[i * n + i] = sample.one_like();
        }
        MatrixN { n, entries }
    }

    /// Same shape with every entry mapped, e.g. to reduce modulo a prime.
    pub fn map<S: RingElem>(&self, f: impl Fn(&R) -> S) -> MatrixN<S> {
        MatrixN {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.n).map(<[R]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j).clone();
            }
        }
        MatrixN { n, entries }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        (0..self.n)
            .map(|i| {
                let mut acc = v[0].zero_like();
                for (j, x) in v.iter().enumerate() {
                    acc = acc + self.get(i, j).clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one_elem()
                } else {
                    e.is_zero_elem()
                }
            })
        })
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let mut entries = Vec::with_capacity((self.n - 1) * (self.n - 1));
        for i in (0..self.n).filter(|&i| i != row) {
            for j in (0..self.n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        MatrixN {
            n: self.n - 1,
            entries,
        }
    }

    /// Determinant by cofactor expansion (fine for n ≤ 4).
    pub fn det(&self) -> R {
        if self.n == 1 {
            return self.entries[0].clone();
        }
        let mut acc = self.entries[0].zero_like();
        for j in 0..self.n {
            let term = self.get(0, j).clone() * self.minor(0, j).det();
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Classical adjugate, so that `m · adj(m) = det(m) · I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return MatrixN::identity(1, &self.entries[0]);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det();
                entries.push(if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        MatrixN { n, entries }
    }

    /// Inverse when the determinant is a unit of the ring.
    pub fn try_inverse(&self) -> Result<Self> {
        let d = self.det();
        let dinv = d
            .try_inv()
            .ok_or_else(|| Error::domain(format!("matrix determinant {d:?} is not a unit")))?;
        Ok(self.adjugate().scale(&dinv))
    }

    /// Integer power; negative exponents need an invertible matrix.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 {
            self.try_inverse()?
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = MatrixN::identity(self.n, &self.entries[0]);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl<R: RingElem> Mul for &MatrixN<R> {
    type Output = MatrixN<R>;
    fn mul(self, rhs: &MatrixN<R>) -> MatrixN<R> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.entries[0].zero_like();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero_elem() && !b.is_zero_elem() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                entries.push(acc);
            }
        }
        MatrixN { n, entries }
    }
}

impl<R: RingElem> Mul for MatrixN<R> {
    type Output = MatrixN<R>;
    fn mul(self, rhs: MatrixN<R>) -> MatrixN<R> {
        &self * &rhs
    }
}

impl<R: RingElem> fmt::Debug for MatrixN<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n)).finish()
    }
}
