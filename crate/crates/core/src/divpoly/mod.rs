//! Division polynomials of `E : y² = x³ − 1728`, their rescalings to
//! `y² = x³ − 1`, and p-adic coefficient profiles.
//!
//! `ψ_n` is stored as `g_n(x)·y^{n even}`; every other quantity is reduced
//! with `y² = x³ − 1728`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::arith::{is_prime, valuation_u64};
use crate::exactalg::rational::int_val;
use crate::exactalg::UniPoly;

pub type ZPoly = UniPoly<BigInt>;

/// Weierstrass coefficient `b` of `y² = x³ + b`.
pub const CURVE_B: i64 = -1728;

/// `f(x) · y^parity` with `parity ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPoly {
    pub poly: ZPoly,
    pub y_parity: u8,
}

fn curve_rhs() -> ZPoly {
    ZPoly::from_i64s(&[CURVE_B, 0, 0, 1])
}

impl YPoly {
    fn x_only(poly: ZPoly) -> Self {
        YPoly { poly, y_parity: 0 }
    }

    fn mul(&self, other: &YPoly) -> YPoly {
        let mut poly = &self.poly * &other.poly;
        let mut y_parity = self.y_parity + other.y_parity;
        if y_parity == 2 {
            poly = &poly * &curve_rhs();
            y_parity = 0;
        }
        if poly.is_zero() {
            y_parity = 0;
        }
        YPoly { poly, y_parity }
    }

    fn sub(&self, other: &YPoly) -> YPoly {
        if self.poly.is_zero() {
            return YPoly {
                poly: -&other.poly,
                y_parity: other.y_parity,
            };
        }
        if other.poly.is_zero() {
            return self.clone();
        }
        assert_eq!(self.y_parity, other.y_parity, "mixed y-parity in a difference");
        YPoly {
            poly: &self.poly - &other.poly,
            y_parity: self.y_parity,
        }
    }

    fn neg(&self) -> YPoly {
        YPoly {
            poly: -&self.poly,
            y_parity: self.y_parity,
        }
    }

    /// Divide by `c·y`, exactly.
    fn div_cy(&self, c: i64) -> YPoly {
        let c = BigInt::from(c);
        if self.y_parity == 1 {
            return YPoly::x_only(self.poly.div_exact(&c).expect("exact division by a constant"));
        }
        // P/(c y) = P y / (c f)
        let (q, r) = self.poly.div_rem_monic(&curve_rhs());
        assert!(r.is_zero(), "division by y² is not exact");
        YPoly {
            poly: q.div_exact(&c).expect("exact division by a constant"),
            y_parity: 1,
        }
    }
}

/// `ψ_0, …, ψ_max` built bottom-up with the doubling recurrences.
struct PsiTable {
    psi: Vec<YPoly>,
}

impl PsiTable {
    fn build(max: usize) -> Self {
        let b = CURVE_B;
        let mut psi = vec![
            YPoly::x_only(ZPoly::zero()),
            YPoly::x_only(ZPoly::from_i64s(&[1])),
            YPoly {
                poly: ZPoly::from_i64s(&[2]),
                y_parity: 1,
            },
            YPoly::x_only(ZPoly::from_i64s(&[0, 12 * b, 0, 0, 3])),
            YPoly {
                poly: ZPoly::from_i64s(&[-8 * b * b, 0, 0, 20 * b, 0, 0, 1]).scale(&BigInt::from(4)),
                y_parity: 1,
            },
        ];
        for n in 5..=max.max(4) {
            let m = n / 2;
            let next = if n % 2 == 1 {
                // ψ_{2m+1} = ψ_{m+2}ψ_m³ − ψ_{m−1}ψ_{m+1}³
                let a = psi[m + 2].mul(&psi[m].mul(&psi[m]).mul(&psi[m]));
                let c = psi[m - 1].mul(&psi[m + 1].mul(&psi[m + 1]).mul(&psi[m + 1]));
                a.sub(&c)
            } else {
                // ψ_{2m} = ψ_m (ψ_{m+2}ψ_{m−1}² − ψ_{m−2}ψ_{m+1}²) / 2y
                let a = psi[m + 2].mul(&psi[m - 1].mul(&psi[m - 1]));
                let c = psi[m - 2].mul(&psi[m + 1].mul(&psi[m + 1]));
                psi[m].mul(&a.sub(&c)).div_cy(2)
            };
            psi.push(next);
        }
        psi.truncate(max + 1);
        PsiTable { psi }
    }

    /// `ψ_n` for any integer `n`, using `ψ_{−n} = −ψ_n`.
    fn get(&self, n: i64) -> YPoly {
        let p = &self.psi[n.unsigned_abs() as usize];
        if n < 0 {
            p.neg()
        } else {
            p.clone()
        }
    }
}

/// `ψ_N`, `ψ_N²`, `φ_N` and `ω_N` on `y² = x³ − 1728`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionTriple {
    pub n: u64,
    pub psi: YPoly,
    pub psi_sq: ZPoly,
    pub phi_pol: ZPoly,
    pub omega: YPoly,
}

pub fn division_polynomials(n: u64) -> Result<DivisionTriple> {
    if n == 0 {
        return Err(Error::domain("division polynomials need N ≥ 1"));
    }
    let table = PsiTable::build(n as usize + 2);
    let k = n as i64;
    let psi = table.get(k);
    let sq = psi.mul(&psi);
    debug_assert_eq!(sq.y_parity, 0);
    let prod = table.get(k + 1).mul(&table.get(k - 1));
    debug_assert_eq!(prod.y_parity, 0);
    let phi_pol = &(&ZPoly::from_i64s(&[0, 1]) * &sq.poly) - &prod.poly;
    let a = table.get(k + 2).mul(&table.get(k - 1).mul(&table.get(k - 1)));
    let c = table.get(k - 2).mul(&table.get(k + 1).mul(&table.get(k + 1)));
    let omega = a.sub(&c).div_cy(4);
    Ok(DivisionTriple {
        n,
        psi,
        psi_sq: sq.poly,
        phi_pol,
        omega,
    })
}

/// `ψ̂_N = ψ_N²(12X)/12^{N²−1}` and `φ̂_N = φ_N(12X)/12^{N²}`, the division
/// polynomials of `y² = x³ − 1`.
pub fn rescaled(n: u64) -> Result<(ZPoly, ZPoly)> {
    let t = division_polynomials(n)?;
    let twelve = BigInt::from(12);
    let d = (n * n) as u32;
    let psi_hat = t
        .psi_sq
        .scale_variable(&twelve)
        .div_exact(&twelve.pow(d - 1))
        .ok_or_else(|| Error::internal("rescaled ψ² is not integral"))?;
    let phi_hat = t
        .phi_pol
        .scale_variable(&twelve)
        .div_exact(&twelve.pow(d))
        .ok_or_else(|| Error::internal("rescaled φ is not integral"))?;
    Ok((psi_hat, phi_hat))
}

/// For `p ∈ {2, 3}` with `p^r ‖ N`: `(ψ̂_N/p^{2r} mod p, φ̂_N mod p)` as
/// residue coefficient lists, lowest degree first.
pub fn rescaled_mod_small_prime(n: u64, p: u64) -> Result<(Vec<u64>, Vec<u64>)> {
    if p != 2 && p != 3 {
        return Err(Error::domain("only p = 2 and p = 3 are meaningful here"));
    }
    let r = valuation_u64(n, p);
    let (psi_hat, phi_hat) = rescaled(n)?;
    let scaled = psi_hat
        .div_exact(&BigInt::from(p).pow(2 * r))
        .ok_or_else(|| Error::internal(format!("ψ̂_{n} is not divisible by {p}^{}", 2 * r)))?;
    Ok((scaled.reduce_mod(p), phi_hat.reduce_mod(p)))
}

/// Residues mod `p` of a polynomial given as a product of powers
/// `X^a (X − 1)^b (X³ − 1)^c`, for comparing against predicted shapes.
pub fn shape_mod(p: u64, a: usize, b: usize, c: usize) -> Vec<u64> {
    let x_minus_1 = ZPoly::from_i64s(&[-1, 1]);
    let x3_minus_1 = ZPoly::from_i64s(&[-1, 0, 0, 1]);
    let f = &(&ZPoly::monomial(BigInt::one(), a) * &x_minus_1.pow(b as u32)) * &x3_minus_1.pow(c as u32);
    f.reduce_mod(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionProfile {
    pub n: u64,
    pub p: u64,
    /// `v_p` of the coefficient of `x^i` in `ψ_N²`; `None` for a zero
    /// coefficient.
    pub valuations: Vec<Option<u64>>,
    /// `p ≡ 2 (mod 3)`: the curve has supersingular reduction at `p`.
    pub supersingular_prime: bool,
    /// Every nonconstant coefficient of `ψ_N²` is divisible by `p`.
    pub supersingular_const: bool,
    /// Every coefficient of `x^i` in `ψ_N²` with `i > p² − p` is divisible by
    /// `p` (the squared form of `p | a_i` for `i > (p² − p)/2` in `ψ_p`).
    pub ordinary_tail: bool,
    /// `p^r ‖ N`.
    pub r: u32,
    /// `v_p(b_{N²−1−i})` for `i < (p − 1)/2`.
    pub top_valuations: Vec<Option<u64>>,
    /// Every nonzero entry of `top_valuations` equals `2r` (zero coefficients
    /// are common: only exponents divisible by 3 occur).
    pub top_valuations_ok: bool,
    /// `v_p(b_{N²−1−i}) > r − ⌈2i/(p−1)⌉` for `i ≥ (p − 1)/2`.
    pub lower_bounds_ok: bool,
}

pub fn reduction_profile(n: u64, p: u64) -> Result<ReductionProfile> {
    if !is_prime(p) || p <= 3 {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "division polynomials are not defined modulo 2 and 3 for this model".into(),
        });
    }
    let r = valuation_u64(n.max(1), p);
    if n == 1 {
        return Ok(ReductionProfile {
            n,
            p,
            valuations: Vec::new(),
            supersingular_prime: p % 3 == 2,
            supersingular_const: true,
            ordinary_tail: true,
            r,
            top_valuations: Vec::new(),
            top_valuations_ok: true,
            lower_bounds_ok: true,
        });
    }
    let t = division_polynomials(n)?;
    let val = |c: &BigInt| (!c.is_zero()).then(|| int_val(c, p));
    let valuations: Vec<Option<u64>> = t.psi_sq.coeffs().iter().map(val).collect();
    let divisible = |v: &Option<u64>| v.is_none_or(|v| v >= 1);
    let supersingular_const = valuations.iter().skip(1).all(divisible);
    let tail_start = (p * p - p + 1) as usize;
    let ordinary_tail = valuations.iter().skip(tail_start).all(divisible);
    let deg = valuations.len() - 1;
    let half = ((p - 1) / 2) as usize;
    let top_valuations: Vec<Option<u64>> = (0..half.min(deg + 1)).map(|i| valuations[deg - i]).collect();
    let top_valuations_ok = top_valuations.iter().flatten().all(|&v| v == 2 * r as u64);
    let lower_bounds_ok = (half..=deg).all(|i| {
        let bound = r as i64 - (2 * i as u64).div_ceil(p - 1) as i64;
        valuations[deg - i].is_none_or(|v| v as i64 > bound)
    });
    Ok(ReductionProfile {
        n,
        p,
        valuations,
        supersingular_prime: p % 3 == 2,
        supersingular_const,
        ordinary_tail,
        r,
        top_valuations,
        top_valuations_ok,
        lower_bounds_ok,
    })
}
