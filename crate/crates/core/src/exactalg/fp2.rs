//! Quadratic extensions `F_p[u]/(u² + c₁u + c₀)` and the reduction map
//! `Z[ζ₁₂] → F_{p²}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::arith::{inv_mod, is_prime, legendre, mul_mod};
use super::cyc12::Cyc12;
use super::rational::Rational;
use super::RingElem;
use crate::error::{Error, Result};

/// The field `F_p[u]/(u² + c1·u + c0)` for an irreducible quadratic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2Field {
    pub p: u64,
    pub c0: u64,
    pub c1: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp2Elem {
    a: u64,
    b: u64,
    field: Fp2Field,
}

impl Fp2Field {
    /// The quadratic factor of `x⁴ − x² + 1` over `F_p` used to realize
    /// `Z[ζ₁₂]/𝔭`: among the monic irreducible quadratic factors the one whose
    /// coefficient sequence `(c0, c1, 1)` is lexicographically smallest.
    pub fn for_cyclotomic12(p: u64) -> Result<Self> {
        if !is_prime(p) || p % 12 != 5 {
            return Err(Error::UnsupportedPrime {
                p,
                reason: "reduction of Z[ζ12] requires a prime p ≡ 5 (mod 12)".into(),
            });
        }
        for c0 in 0..p {
            for c1 in 0..p {
                let disc = mul_mod(c1, c1, p) as i64 - 4 * c0 as i64;
                if legendre(disc, p) != -1 {
                    continue;
                }
                let field = Fp2Field { p, c0, c1 };
                let u = field.gen();
                let val = u.pow(4) - u.pow(2) + field.one();
                if val.is_zero_elem() {
                    return Ok(field);
                }
            }
        }
        Err(Error::internal(format!(
            "x^4 - x^2 + 1 has no irreducible quadratic factor mod {p}"
        )))
    }

    pub fn elem(&self, a: u64, b: u64) -> Fp2Elem {
        Fp2Elem {
            a: a % self.p,
            b: b % self.p,
            field: *self,
        }
    }

    pub fn one(&self) -> Fp2Elem {
        self.elem(1, 0)
    }

    /// The class of `u`.
    pub fn gen(&self) -> Fp2Elem {
        self.elem(0, 1)
    }

    fn reduce_rational(&self, r: &Rational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let den = r.denom().mod_floor(&p).to_u64().unwrap_or(0);
        if den == 0 {
            return Err(Error::domain(format!("{r} is not {}-integral", self.p)));
        }
        let num = r.numer().mod_floor(&p).to_u64().unwrap_or(0);
        Ok(mul_mod(num, inv_mod(den, self.p).unwrap_or(0), self.p))
    }

    /// Ring homomorphism `Z[ζ]_(p) → F_{p²}` sending `ζ` to `u`.
    pub fn reduce(&self, z: &Cyc12) -> Result<Fp2Elem> {
        let u = self.gen();
        let mut acc = self.elem(0, 0);
        let mut upow = self.one();
        for c in z.coeffs() {
            let c = self.reduce_rational(c)?;
            acc = acc + upow * self.elem(c, 0);
            upow = upow * u;
        }
        Ok(acc)
    }
}

/// `reduce_cyc`: reduce an element of `Z[ζ₁₂]` (localized at `p`) into
/// `F_{p²}` for a prime `p ≡ 5 (mod 12)`.
pub fn reduce_cyc(z: &Cyc12, p: u64) -> Result<Fp2Elem> {
    Fp2Field::for_cyclotomic12(p)?.reduce(z)
}

impl Fp2Elem {
    /// Coordinates `(a, b)` of `a + b·u`.
    pub fn coords(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn field(&self) -> Fp2Field {
        self.field
    }

    /// True when the element lies in the prime field `F_p`.
    pub fn in_prime_field(&self) -> bool {
        self.b == 0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut acc = self.field.one();
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
        if self.is_zero_elem() {
            return None;
        }
        // x^{p²-2} in a field of order p²
        let q = self.field.p * self.field.p;
        Some(self.pow(q - 2))
    }
}

impl fmt::Debug for Fp2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}u (mod {}, u^2 + {}u + {})",
            self.a, self.b, self.field.p, self.field.c1, self.field.c0
        )
    }
}

impl Add for Fp2Elem {
    type Output = Fp2Elem;
    fn add(self, rhs: Fp2Elem) -> Fp2Elem {
        let p = self.field.p;
        self.field.elem((self.a + rhs.a) % p, (self.b + rhs.b) % p)
    }
}

impl Neg for Fp2Elem {
    type Output = Fp2Elem;
    fn neg(self) -> Fp2Elem {
        let p = self.field.p;
        self.field.elem((p - self.a) % p, (p - self.b) % p)
    }
}

impl Sub for Fp2Elem {
    type Output = Fp2Elem;
    fn sub(self, rhs: Fp2Elem) -> Fp2Elem {
        self + (-rhs)
    }
}

impl Mul for Fp2Elem {
    type Output = Fp2Elem;
    fn mul(self, rhs: Fp2Elem) -> Fp2Elem {
        let Fp2Field { p, c0, c1 } = self.field;
        // (a + bu)(c + du) = ac + (ad + bc)u + bd·u², u² = −c1·u − c0
        let ac = mul_mod(self.a, rhs.a, p);
        let bd = mul_mod(self.b, rhs.b, p);
        let mid = (mul_mod(self.a, rhs.b, p) + mul_mod(self.b, rhs.a, p)) % p;
        let a = (ac + p - mul_mod(bd, c0, p)) % p;
        let b = (mid + p - mul_mod(bd, c1, p)) % p;
        self.field.elem(a, b)
    }
}

impl RingElem for Fp2Elem {
    fn zero_like(&self) -> Self {
        self.field.elem(0, 0)
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero_elem(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        let p = self.field.p;
        self.field.elem(super::arith::reduce_i64(n, p), 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    /// Brute-force factorization of x⁴ − x² + 1 over F_p into monic
    /// quadratics, independent of the field construction.
    fn quadratic_factors(p: u64) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for c0 in 0..p {
            for c1 in 0..p {
                // long division of x^4 - x^2 + 1 by x^2 + c1 x + c0
                let mut r = [1i64, 0, (p - 1) as i64, 0, 1]; // x^4 .. x^0, leading first
                for i in 0..3 {
                    let lead = r[i].rem_euclid(p as i64);
                    r[i] = 0;
                    r[i + 1] -= lead * c1 as i64;
                    r[i + 2] -= lead * c0 as i64;
                    r[i + 1] = r[i + 1].rem_euclid(p as i64);
                    r[i + 2] = r[i + 2].rem_euclid(p as i64);
                }
                if r[3] == 0 && r[4] == 0 {
                    out.push((c0, c1));
                }
            }
        }
        out
    }

    #[test]
    fn field_for_17_is_a_factor() {
        let f = Fp2Field::for_cyclotomic12(17).unwrap();
        let factors = quadratic_factors(17);
        assert!(factors.contains(&(f.c0, f.c1)));
        // smallest irreducible one in lexicographic order
        let first_irreducible = factors
            .iter()
            .find(|(c0, c1)| legendre((c1 * c1) as i64 - 4 * *c0 as i64, 17) == -1)
            .unwrap();
        assert_eq!(*first_irreducible, (f.c0, f.c1));
        let z = reduce_cyc(&Cyc12::zeta(), 17).unwrap();
        assert!((z.pow(4) - z.pow(2) + f.one()).is_zero_elem());
        assert!(!z.in_prime_field());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_cyc(&Cyc12::one(), 17).unwrap(), Fp2Field::for_cyclotomic12(17).unwrap().one());
        let m1 = reduce_cyc(&Cyc12::zeta_pow(6), 29).unwrap();
        assert_eq!(m1.coords(), (28, 0));
        assert!(matches!(
            reduce_cyc(&Cyc12::one(), 13),
            Err(Error::UnsupportedPrime { p: 13, .. })
        ));
        let bad = Cyc12::from_rational(rat(1, 17));
        assert!(matches!(reduce_cyc(&bad, 17), Err(Error::Domain(_))));
        let ok = Cyc12::from_rational(rat(1, 2));
        assert_eq!(reduce_cyc(&ok, 17).unwrap().coords(), (9, 0));
    }
}
