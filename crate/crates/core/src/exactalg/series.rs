//! Truncated Laurent series in one variable over the rationals.
//!
//! A series knows every coefficient with exponent below its precision and
//! nothing above it. Arithmetic keeps the weakest precision its inputs can
//! guarantee. Polynomials and constants are represented with precision
//! [`EXACT`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_sqrt, Rational};
use crate::error::{Error, Result};

/// Precision of a series that is known exactly.
pub const EXACT: i64 = i64::MAX / 4;

fn cap(x: i64) -> i64 {
    x.min(EXACT)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    val: i64,
    coeffs: Vec<Rational>,
    prec: i64,
}

impl LaurentSeries {
    /// Series `Σ coeffs[i]·q^{val+i} + O(q^prec)`. Coefficients at or beyond
    /// the precision are discarded.
    pub fn new(val: i64, mut coeffs: Vec<Rational>, prec: i64) -> Self {
        let prec = cap(prec);
        let keep = (prec - val).clamp(0, coeffs.len() as i64) as usize;
        coeffs.truncate(keep);
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentSeries {
                val: prec,
                coeffs: Vec::new(),
                prec,
            };
        }
        coeffs.drain(..lead);
        LaurentSeries {
            val: val + lead as i64,
            coeffs,
            prec,
        }
    }

    /// `O(q^prec)`.
    pub fn zero(prec: i64) -> Self {
        LaurentSeries::new(0, Vec::new(), prec)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentSeries::new(0, vec![c], EXACT)
    }

    pub fn one() -> Self {
        LaurentSeries::constant(Rational::one())
    }

    /// Exact monomial `c·q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        LaurentSeries::new(e, vec![c], EXACT)
    }

    /// Series from `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, Rational)], prec: i64) -> Self {
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return LaurentSeries::zero(prec);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentSeries::new(lo, coeffs, prec)
    }

    /// Lowest exponent with a nonzero coefficient, `None` when the series is
    /// zero to its precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec >= EXACT
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Coefficient of `q^e`, or `None` if `e` is at or beyond the precision.
    pub fn coeff(&self, e: i64) -> Option<Rational> {
        if e >= self.prec {
            return None;
        }
        let i = e - self.val;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Some(Rational::zero())
        } else {
            Some(self.coeffs[i as usize].clone())
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing order.
    pub fn terms(&self) -> Vec<(i64, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.val + i as i64, c.clone()))
            .collect()
    }

    /// Forget everything at or beyond `q^prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        LaurentSeries::new(self.val, self.coeffs.clone(), prec.min(self.prec))
    }

    /// Declare the precision to be `prec`, treating unknown coefficients as
    /// zero. Used by Newton iteration when doubling the working precision.
    pub fn assume_prec(&self, prec: i64) -> Self {
        LaurentSeries::new(self.val, self.coeffs.clone(), prec)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries::new(
            self.val + k,
            self.coeffs.clone(),
            if self.is_exact() { EXACT } else { self.prec + k },
        )
    }

    /// Substitute `q ↦ q^k` for `k ≥ 1`.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k >= 1, "inflation factor must be positive");
        let mut coeffs = Vec::new();
        if let Some((last, rest)) = self.coeffs.split_last() {
            coeffs.reserve(self.coeffs.len() * k as usize);
            for c in rest {
                coeffs.push(c.clone());
                coeffs.extend(std::iter::repeat_n(Rational::zero(), k as usize - 1));
            }
            coeffs.push(last.clone());
        }
        let prec = if self.is_exact() { EXACT } else { self.prec * k };
        LaurentSeries::new(self.val * k, coeffs, prec)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        LaurentSeries::new(
            self.val,
            self.coeffs.iter().map(|c| c * r).collect(),
            self.prec,
        )
    }

    /// Multiplicative inverse. The leading coefficient must be nonzero; an
    /// exact series must be a monomial.
    pub fn inverse(&self) -> Result<Self> {
        let Some(a0) = self.coeffs.first() else {
            return Err(Error::domain("inverse of a series that vanishes to its precision"));
        };
        let v = self.val;
        if self.is_exact() {
            if self.coeffs.len() == 1 {
                return Ok(LaurentSeries::monomial(a0.recip(), -v));
            }
            return Err(Error::Precision(
                "inverse of an exact non-monomial series needs a precision bound".into(),
            ));
        }
        let n = (self.prec - v) as usize;
        let b0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(b0.clone());
        for k in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[i].is_zero() && !b[k - i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(-acc * &b0);
        }
        Ok(LaurentSeries::new(-v, b, self.prec - 2 * v))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentSeries::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation of `Σ coeffs[i]·X^i` at `x`.
    pub fn eval_poly(coeffs: &[LaurentSeries], x: &LaurentSeries) -> LaurentSeries {
        let mut acc = LaurentSeries::zero(EXACT);
        for c in coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Common denominator of the first `n` coefficients and the matching
    /// integer numerators.
    fn integer_form(&self, n: usize) -> (BigInt, Vec<BigInt>) {
        let cs = &self.coeffs[..n.min(self.coeffs.len())];
        let den = cs
            .iter()
            .fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let nums = cs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (den, nums)
    }
}

/// Square root with prescribed sign of the leading coefficient.
///
/// For an exact input the result is exact when the input is a perfect square
/// of a finite series, and a precision error otherwise.
pub fn series_sqrt(s: &LaurentSeries, branch_sign: i32) -> Result<LaurentSeries> {
    let Some(a0) = s.leading_coeff() else {
        return Err(Error::domain("square root of a series that vanishes to its precision"));
    };
    if s.val.rem_euclid(2) != 0 {
        return Err(Error::domain(format!("square root of a series of odd valuation {}", s.val)));
    }
    let Some(mut b0) = rational_sqrt(a0) else {
        return Err(Error::domain(format!("leading coefficient {a0} is not a rational square")));
    };
    if branch_sign < 0 {
        b0 = -b0;
    }
    let half = s.val / 2;
    let u = &s.coeffs;
    let n = if s.is_exact() {
        u.len()
    } else {
        (s.prec - s.val) as usize
    };
    let inv2b0 = (b0.clone() * Rational::from_integer(BigInt::from(2))).recip();
    let mut b = vec![b0];
    for k in 1..n {
        let mut acc = u.get(k).cloned().unwrap_or_else(Rational::zero);
        for i in 1..k {
            if !b[i].is_zero() && !b[k - i].is_zero() {
                acc -= &b[i] * &b[k - i];
            }
        }
        b.push(acc * &inv2b0);
    }
    if s.is_exact() {
        let root = LaurentSeries::new(half, b, EXACT);
        if &(&root * &root) == s {
            return Ok(root);
        }
        return Err(Error::Precision(
            "exact series is not the square of a polynomial; truncate it first".into(),
        ));
    }
    Ok(LaurentSeries::new(half, b, half + n as i64))
}

/// Root of the polynomial `Σ P[i]·X^i` (series coefficients) congruent to
/// `x0` modulo `q`, correct modulo `q^prec`, by Newton iteration with
/// doubling precision.
pub fn hensel_root(p: &[LaurentSeries], x0: &Rational, prec: i64) -> Result<LaurentSeries> {
    if p.iter().all(LaurentSeries::is_zero) {
        return Err(Error::Hensel("polynomial is zero to its precision".into()));
    }
    if prec < 1 {
        return Err(Error::domain(format!("target precision {prec} must be positive")));
    }
    if let Some(weak) = p.iter().map(LaurentSeries::prec).min().filter(|&m| m < prec) {
        return Err(Error::Precision(format!(
            "coefficients known only to O(q^{weak}), root requested to O(q^{prec})"
        )));
    }
    let dp: Vec<LaurentSeries> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&Rational::from_integer(BigInt::from(i))))
        .collect();

    let seed = LaurentSeries::constant(x0.clone());
    let f0 = LaurentSeries::eval_poly(p, &seed);
    if f0.valuation().is_some_and(|v| v < 1) {
        return Err(Error::Hensel(format!("{x0} is not a root modulo q")));
    }
    let d0 = LaurentSeries::eval_poly(&dp, &seed);
    match d0.valuation() {
        Some(0) => {}
        Some(v) if v < 0 => {
            return Err(Error::Hensel(format!(
                "derivative at {x0} has a pole of order {}",
                -v
            )))
        }
        _ => return Err(Error::Hensel(format!("{x0} is not a simple root modulo q"))),
    }

    let mut x = seed.truncate(1);
    let mut k = 1;
    while k < prec {
        k = (2 * k).min(prec);
        let pk: Vec<LaurentSeries> = p.iter().map(|c| c.truncate(k)).collect();
        let dpk: Vec<LaurentSeries> = dp.iter().map(|c| c.truncate(k)).collect();
        let xk = x.assume_prec(k);
        let f = LaurentSeries::eval_poly(&pk, &xk);
        let fp = LaurentSeries::eval_poly(&dpk, &xk).truncate(k);
        x = (&xk - &(&f * &fp.inverse()?)).truncate(k);
    }
    x = x.assume_prec(prec);
    let check = LaurentSeries::eval_poly(p, &x);
    if check.prec() < prec {
        return Err(Error::Precision(format!(
            "residual known only to O(q^{})",
            check.prec()
        )));
    }
    if !check.truncate(prec).is_zero() {
        return Err(Error::Hensel("Newton iteration did not converge".into()));
    }
    Ok(x)
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let prec = self.prec.min(rhs.prec);
        if self.is_zero() {
            return rhs.truncate(prec);
        }
        if rhs.is_zero() {
            return self.truncate(prec);
        }
        let lo = self.val.min(rhs.val);
        let hi = (self.val + self.coeffs.len() as i64)
            .max(rhs.val + rhs.coeffs.len() as i64)
            .min(prec);
        if hi <= lo {
            return LaurentSeries::zero(prec);
        }
        let mut out = vec![Rational::zero(); (hi - lo) as usize];
        for s in [self, rhs] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let e = s.val + i as i64;
                if e < hi {
                    out[(e - lo) as usize] += c;
                }
            }
        }
        LaurentSeries::new(lo, out, prec)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let bound = |v: i64, pr: i64| if pr >= EXACT { EXACT } else { v + pr };
        let prec = cap(bound(self.val, rhs.prec).min(bound(rhs.val, self.prec)));
        if self.is_zero() || rhs.is_zero() {
            return LaurentSeries::zero(prec);
        }
        let val = self.val + rhs.val;
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let n = ((prec - val).max(0) as usize).min(full);
        if n == 0 {
            return LaurentSeries::zero(prec);
        }
        // integer convolution over a common denominator
        let (da, a) = self.integer_form(n);
        let (db, b) = rhs.integer_form(n);
        let mut c = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n - i) {
                if !bj.is_zero() {
                    c[i + j] += ai * bj;
                }
            }
        }
        let den = da * db;
        let coeffs = c
            .into_iter()
            .map(|x| Rational::new(x, den.clone()))
            .collect();
        LaurentSeries::new(val, coeffs, prec)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = if mag.is_integer() {
                format!("{mag}")
            } else {
                format!("({mag})")
            };
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "q")?,
                1 => write!(f, "{coef}*q")?,
                _ if mag.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "{coef}*q^{e}")?,
            }
        }
        if !self.is_exact() {
            if first {
                write!(f, "O(q^{})", self.prec)?;
            } else {
                write!(f, " + O(q^{})", self.prec)?;
            }
        } else if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn ser(val: i64, cs: &[i64], prec: i64) -> LaurentSeries {
        LaurentSeries::new(val, cs.iter().map(|&c| int(c)).collect(), prec)
    }

    #[test]
    fn normalization_and_precision() {
        let s = ser(-1, &[0, 0, 3, 0, 5, 7], 3);
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.terms(), vec![(1, int(3))]);
        assert_eq!(s.coeff(2), Some(int(0)));
        assert_eq!(s.coeff(3), None);
        assert!(LaurentSeries::zero(4).is_zero());
    }

    #[test]
    fn product_precision_is_pessimistic() {
        let a = ser(-2, &[1, 1], 5);
        let b = ser(1, &[2], 4);
        let c = &a * &b;
        // min(-2 + 4, 1 + 5)
        assert_eq!(c.prec(), 2);
        assert_eq!(c.terms(), vec![(-1, int(2)), (0, int(2))]);
    }

    #[test]
    fn inverse_of_geometric() {
        let s = ser(0, &[1, -1], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, ser(0, &[1, 1, 1, 1, 1, 1], 6));
        let m = LaurentSeries::monomial(int(2), -3).inverse().unwrap();
        assert_eq!(m, LaurentSeries::monomial(rat(1, 2), 3));
        assert!(ser(0, &[1, 1], EXACT).inverse().is_err());
    }

    #[test]
    fn inflate_and_shift() {
        let s = ser(0, &[1, 2], 3);
        let t = s.inflate(6).shift(-2);
        assert_eq!(t.terms(), vec![(-2, int(1)), (4, int(2))]);
        assert_eq!(t.prec(), 16);
    }

    #[test]
    fn sqrt_examples() {
        let sq = series_sqrt(&ser(0, &[1, 2, 1], EXACT), 1).unwrap();
        assert_eq!(sq, ser(0, &[1, 1], EXACT));
        let m = series_sqrt(&LaurentSeries::monomial(int(1), -6), -1).unwrap();
        assert_eq!(m, LaurentSeries::monomial(int(-1), -3));
        let s = ser(-4, &[4, 0, 0, 4], 6);
        let r = series_sqrt(&s, 1).unwrap();
        assert_eq!(r.coeff(-2), Some(int(2)));
        assert_eq!(r.coeff(1), Some(int(1)));
        assert_eq!(&r * &r, s);
        assert!(series_sqrt(&ser(-3, &[1], 4), 1).is_err());
        assert!(series_sqrt(&ser(0, &[2], 4), 1).is_err());
    }

    #[test]
    fn hensel_binomial_series() {
        // X² − (1 + q) with seed 1: binomial series of (1+q)^{1/2}
        let p = vec![
            -ser(0, &[1, 1], EXACT),
            LaurentSeries::zero(EXACT),
            LaurentSeries::one(),
        ];
        let x = hensel_root(&p, &int(1), 4).unwrap();
        let want = LaurentSeries::new(
            0,
            vec![int(1), rat(1, 2), rat(-1, 8), rat(1, 16)],
            4,
        );
        assert_eq!(x, want);
    }

    #[test]
    fn hensel_linear_and_failures() {
        let p = vec![LaurentSeries::constant(int(-7)), LaurentSeries::one()];
        let x = hensel_root(&p, &int(7), 5).unwrap();
        assert_eq!(x.terms(), vec![(0, int(7))]);
        assert!(matches!(hensel_root(&p, &int(6), 5), Err(Error::Hensel(_))));
        // double root
        let sq = vec![LaurentSeries::zero(EXACT), LaurentSeries::zero(EXACT), LaurentSeries::one()];
        assert!(matches!(hensel_root(&sq, &int(0), 3), Err(Error::Hensel(_))));
        let weak = vec![ser(0, &[-7], 2), LaurentSeries::one()];
        assert!(matches!(hensel_root(&weak, &int(7), 5), Err(Error::Precision(_))));
    }
}
