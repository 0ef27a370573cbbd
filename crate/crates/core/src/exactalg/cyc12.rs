//! The cyclotomic field `Q(ζ)` with `ζ` a primitive twelfth root of unity,
//! stored in the power basis `1, ζ, ζ², ζ³` modulo `ζ⁴ − ζ² + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::linalg;
use super::rational::{int, Rational};
use super::RingElem;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc12 {
    coeffs: [Rational; 4],
}

impl Cyc12 {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        Cyc12 { coeffs }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Cyc12::new([int(a), int(b), int(c), int(d)])
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyc12::new([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn zero() -> Self {
        Cyc12::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Cyc12::from_ints(1, 0, 0, 0)
    }

    pub fn zeta() -> Self {
        Cyc12::from_ints(0, 1, 0, 0)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12);
        let mut acc = Cyc12::one();
        let z = Cyc12::zeta();
        for _ in 0..k {
            acc = acc * z.clone();
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when all power-basis coordinates are integers, i.e. the element
    /// lies in `Z[ζ]` (the full ring of integers).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every coordinate is an integer divisible by `n`.
    pub fn is_divisible_by(&self, n: u64) -> bool {
        let n = num_bigint::BigInt::from(n);
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && (c.numer() % &n).is_zero())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyc12::new(self.coeffs.clone().map(|c| c * r))
    }

    /// Matrix of multiplication by `self` in the power basis; column `j`
    /// holds the coordinates of `self · ζ^j`.
    fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); 4]; 4];
        let mut col = self.clone();
        for j in 0..4 {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coeffs[i].clone();
            }
            col = col * Cyc12::zeta();
        }
        m
    }

    /// Inverse in `Q(ζ)`, found by solving the 4×4 linear system
    /// `self · r = 1` over the rationals.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero in Q(ζ12)"));
        }
        let m = self.multiplication_matrix();
        let rhs = vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()];
        let sol = linalg::solve(&m, &rhs)
            .ok_or_else(|| Error::internal("multiplication matrix of a nonzero element is singular"))?;
        Ok(Cyc12::new([
            sol[0].clone(),
            sol[1].clone(),
            sol[2].clone(),
            sol[3].clone(),
        ]))
    }

    /// Exponent `k ∈ [0, 12)` with `self = ζ^k`, if `self` is a twelfth root
    /// of unity.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        let mut acc = Cyc12::one();
        for k in 0..12 {
            if &acc == self {
                return Some(k);
            }
            acc = acc * Cyc12::zeta();
        }
        None
    }
}

/// `cyc_inverse`: the inverse of a nonzero element of `Q(ζ₁₂)`.
pub fn cyc_inverse(z: &Cyc12) -> Result<Cyc12> {
    z.inverse()
}

impl fmt::Debug for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyc12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "ζ", "ζ^2", "ζ^3"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if name.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "({c}){name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for Cyc12 {
    type Output = Cyc12;
    fn add(self, rhs: Cyc12) -> Cyc12 {
        let [a0, a1, a2, a3] = self.coeffs;
        let [b0, b1, b2, b3] = rhs.coeffs;
        Cyc12::new([a0 + b0, a1 + b1, a2 + b2, a3 + b3])
    }
}

impl Sub for Cyc12 {
    type Output = Cyc12;
    fn sub(self, rhs: Cyc12) -> Cyc12 {
        self + (-rhs)
    }
}

impl Neg for Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        Cyc12::new(self.coeffs.map(|c| -c))
    }
}

impl Mul for Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: Cyc12) -> Cyc12 {
        let mut prod: [Rational; 7] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // ζ^k = ζ^{k-2} - ζ^{k-4} for k ≥ 4
        for k in (4..7).rev() {
            let c = std::mem::take(&mut prod[k]);
            if !c.is_zero() {
                prod[k - 2] += &c;
                prod[k - 4] -= c;
            }
        }
        let [c0, c1, c2, c3, ..] = prod;
        Cyc12::new([c0, c1, c2, c3])
    }
}

impl RingElem for Cyc12 {
    fn zero_like(&self) -> Self {
        Cyc12::zero()
    }

    fn one_like(&self) -> Self {
        Cyc12::one()
    }

    fn is_zero_elem(&self) -> bool {
        Cyc12::is_zero(self)
    }

    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Cyc12::from_ints(n, 0, 0, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_identities() {
        let z = Cyc12::zeta();
        assert_eq!(Cyc12::zeta_pow(4), Cyc12::zeta_pow(2) - Cyc12::one());
        assert_eq!(Cyc12::zeta_pow(6), -Cyc12::one());
        assert_eq!(Cyc12::zeta_pow(12), Cyc12::one());
        assert_eq!(z.clone() * Cyc12::zeta_pow(-1), Cyc12::one());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(cyc_inverse(&Cyc12::one()).unwrap(), Cyc12::one());
        // ζ⁻¹ = ζ − ζ³
        assert_eq!(cyc_inverse(&Cyc12::zeta()).unwrap(), Cyc12::from_ints(0, 1, 0, -1));
        // ζ³ is a primitive fourth root of unity: (ζ³)⁻¹ = −ζ³
        let z3 = Cyc12::zeta_pow(3);
        let inv = cyc_inverse(&z3).unwrap();
        assert_eq!(inv, Cyc12::from_ints(0, 0, 0, -1));
        assert_eq!(z3 * inv, Cyc12::one());
        assert!(cyc_inverse(&Cyc12::zero()).is_err());
    }

    #[test]
    fn roots_of_unity() {
        for k in 0..12 {
            assert_eq!(Cyc12::zeta_pow(k).root_of_unity_exponent(), Some(k as u32));
        }
        assert_eq!(Cyc12::from_ints(2, 0, 0, 0).root_of_unity_exponent(), None);
    }
}
