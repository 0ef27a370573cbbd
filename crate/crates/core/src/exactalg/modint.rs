//! Residues modulo a runtime modulus. With a prime modulus this is `F_p`;
//! the lifting check also uses it with modulus `p²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::arith::{inv_mod, mul_mod, reduce_i64};
use super::RingElem;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

/// Element of the prime field `F_p`.
pub type FpElem = ModInt;

impl ModInt {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        ModInt {
            value: reduce_i64(value, modulus),
            modulus,
        }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        ModInt {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn signed(self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        inv_mod(self.value, self.modulus).map(|v| ModInt::from_u64(v, self.modulus))
    }
}

impl fmt::Debug for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.value + rhs.value;
        ModInt {
            value: if s >= self.modulus { s - self.modulus } else { s },
            modulus: self.modulus,
        }
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        };
        ModInt {
            value,
            modulus: self.modulus,
        }
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        ModInt {
            value: mul_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        ModInt {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl RingElem for ModInt {
    fn zero_like(&self) -> Self {
        ModInt::from_u64(0, self.modulus)
    }

    fn one_like(&self) -> Self {
        ModInt::from_u64(1, self.modulus)
    }

    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        ModInt::new(n, self.modulus)
    }
}
