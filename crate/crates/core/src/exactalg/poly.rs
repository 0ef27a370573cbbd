//! Dense univariate polynomials, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RingElem;

/// A polynomial with coefficients in `R`; the highest stored coefficient is
/// nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: RingElem> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c · X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Coefficient of `X^i` (zero beyond the degree), using `sample` for the
    /// ring when the polynomial is zero.
    pub fn coeff_or(&self, i: usize, sample: &R) -> R {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| sample.zero_like())
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.from_i64_like(i as i64) * c.clone())
                .collect(),
        )
    }

    /// Horner evaluation at a point of the same ring.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let Some(one) = self.coeffs.first().map(|c| c.one_like()) else {
            return if e == 0 { panic!("0^0 of the zero polynomial") } else { UniPoly::zero() };
        };
        let mut acc = UniPoly::constant(one);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Apply a coefficientwise map (e.g. reduction mod p).
    pub fn map<S: RingElem>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<BigInt> {
    pub fn from_i64s(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Greatest common divisor of the coefficients (the content).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide every coefficient by `d`, returning `None` unless the division
    /// is exact.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(UniPoly::new(out))
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        assert!(d.coeffs[dd].is_one(), "divisor must be monic");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = std::mem::take(&mut r[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs[..dd].iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let m = BigInt::from(m);
        let mut out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&m);
                r.try_into().expect("residue fits in u64")
            })
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// `f(c·X)`.
    pub fn scale_variable(&self, c: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        UniPoly::new(out)
    }

    /// Homogenization `b^d · f(a/b)` for polynomial inputs `a`, `b` and a
    /// chosen total degree `d ≥ deg f`.
    pub fn homogenize(&self, a: &Self, b: &Self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        let mut apow = vec![UniPoly::from_i64s(&[1])];
        let mut bpow = vec![UniPoly::from_i64s(&[1])];
        for _ in 0..d {
            apow.push(&apow[apow.len() - 1] * a);
            bpow.push(&bpow[bpow.len() - 1] * b);
        }
        let mut acc = UniPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&apow[i] * &bpow[d - i]).scale(c);
            }
        }
        acc
    }
}

impl RingElem for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn one_like(&self) -> Self {
        BigInt::one()
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn try_inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_i64_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
}

impl<R: RingElem> Add for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn add(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.clone() + s.clone();
        }
        UniPoly::new(out)
    }
}

impl<R: RingElem> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<R: RingElem> Sub for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn sub(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        self + &(-rhs)
    }
}

impl<R: RingElem> Mul for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn mul(self, rhs: &UniPoly<R>) -> UniPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero_elem() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        UniPoly::new(out)
    }
}

impl<R: RingElem + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_elem() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*X")?,
                _ => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: RingElem> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let f = UniPoly::from_i64s(&[1, 1]);
        let g = f.pow(3);
        assert_eq!(g, UniPoly::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(g.eval(&BigInt::from(2)), BigInt::from(27));
        assert_eq!(g.derivative(), UniPoly::from_i64s(&[3, 6, 3]));
        assert_eq!(&g - &g, UniPoly::zero());
        assert_eq!(g.degree(), Some(3));
        assert_eq!(UniPoly::<BigInt>::zero().degree(), None);
    }

    #[test]
    fn content_and_scaling() {
        let f = UniPoly::from_i64s(&[6, 0, 12, 18]);
        assert_eq!(f.content(), BigInt::from(6));
        assert_eq!(f.div_exact(&BigInt::from(6)).unwrap(), UniPoly::from_i64s(&[1, 0, 2, 3]));
        assert!(f.div_exact(&BigInt::from(4)).is_none());
        let (q, r) = f.div_rem_monic(&UniPoly::from_i64s(&[-1, 1]));
        assert_eq!(&(&q * &UniPoly::from_i64s(&[-1, 1])) + &r, f);
        assert_eq!(r, UniPoly::from_i64s(&[36]));
        assert_eq!(f.scale_variable(&BigInt::from(2)), UniPoly::from_i64s(&[6, 0, 48, 144]));
        assert_eq!(UniPoly::from_i64s(&[-1, 0, 3]).reduce_mod(3), vec![2]);
    }

    #[test]
    fn homogenize_matches_substitution() {
        // f(X) = X^2 + 1 at X = a/b with a = X, b = 2: b^2 f(a/b) = X^2 + 4
        let f = UniPoly::from_i64s(&[1, 0, 1]);
        let a = UniPoly::from_i64s(&[0, 1]);
        let b = UniPoly::from_i64s(&[2]);
        assert_eq!(f.homogenize(&a, &b, 2), UniPoly::from_i64s(&[4, 0, 1]));
    }
}
