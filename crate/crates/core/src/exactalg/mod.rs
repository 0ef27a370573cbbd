//! Exact arithmetic foundation.
//!
//! Everything in this crate is computed exactly: arbitrary-precision
//! rationals, the cyclotomic ring `Z[ζ₁₂]` and its fraction field, residue
//! rings `Z/nZ`, quadratic extensions `F_{p²}`, univariate polynomials,
//! truncated Laurent series and small dense matrices over any of these.

pub mod arith;
pub mod cyc12;
pub mod fp2;
pub mod linalg;
pub mod matrix;
pub mod modint;
pub mod poly;
pub mod rational;
pub mod series;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use cyc12::Cyc12;
pub use fp2::{Fp2Elem, Fp2Field};
pub use matrix::MatrixN;
pub use modint::{FpElem, ModInt};
pub use poly::UniPoly;
pub use rational::{padic_val, Rational};
pub use series::LaurentSeries;

/// Commutative ring element whose ring is determined by the value itself
/// (residue rings carry their modulus), so constants are produced from an
/// existing element.
pub trait RingElem:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;

    /// Multiplicative inverse, if this element is a unit.
    fn try_inv(&self) -> Option<Self>;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    /// The image of an integer in the ring of `self`.
    fn from_i64_like(&self, n: i64) -> Self;
}
