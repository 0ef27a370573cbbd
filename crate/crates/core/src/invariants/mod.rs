//! Elliptic points, cusps, genus and dimension formulas.
//!
//! For the point stabilizers of `Sp₄(F_p)` acting on `X(F_p)` the index in
//! `SL₂(Z)` is `(p² + 1)(p + 1)`, the elliptic points are fixed points of
//! `ρ(S)` and `ρ(R)`, and cusps are cycles of `ρ(T)`. The cusp widths
//! follow from the permutation character `χ` evaluated on powers of `T`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::arith::{divisors, factorize, is_prime, legendre, mobius};
use crate::exactalg::rational::{int, rat};
use crate::exactalg::Rational;
use crate::symplectic::{grassmannian_size, Perm};

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if p <= 7 {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "formulas hold for primes p > 7".into(),
        });
    }
    Ok(())
}

/// `χ(T^d)`, the number of points of `X(F_p)` fixed by `ρ(T)^d`, for
/// `d | p(p−1)`.
pub fn chi_power(p: u64, d: u64) -> Result<u64> {
    check_prime(p)?;
    let n = p * (p - 1);
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::domain(format!("{d} does not divide p(p−1) = {n}")));
    }
    let half = (p - 1) / 2;
    Ok(if d == n || d == n / 2 {
        p * p * p + p * p + p + 1
    } else if d == half || d == p - 1 {
        2 * p + 1
    } else if d < half {
        3
    } else {
        // here p | d and d > p − 1
        p + 3
    })
}

/// Number of cusps and their widths with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuspData {
    pub total: u64,
    pub widths: BTreeMap<u64, u64>,
}

impl CuspData {
    fn from_widths(widths: BTreeMap<u64, u64>) -> CuspData {
        CuspData {
            total: widths.values().sum(),
            widths,
        }
    }

    /// `Σ width · multiplicity`, the index of the group.
    pub fn width_sum(&self) -> u64 {
        self.widths.iter().map(|(w, m)| w * m).sum()
    }
}

/// `{1: 3, (p−1)/2: 4, p: 1, p(p−1)/2: 2p+4}`.
pub fn expected_cusp_widths(p: u64) -> BTreeMap<u64, u64> {
    BTreeMap::from([(1, 3), ((p - 1) / 2, 4), (p, 1), (p * (p - 1) / 2, 2 * p + 4)])
}

/// Cusp widths by Möbius inversion of the fixed-point counts of `T^d`:
/// `c_n = (1/n) Σ_{d|n} μ(n/d) χ(T^d)`.
pub fn cusp_data_character(p: u64) -> Result<CuspData> {
    check_prime(p)?;
    let mut widths = BTreeMap::new();
    for n in divisors(p * (p - 1)) {
        let mut acc: i64 = 0;
        for d in divisors(n) {
            acc += mobius(n / d) * chi_power(p, d)? as i64;
        }
        if acc % n as i64 != 0 || acc < 0 {
            return Err(Error::internal(format!("cycle count for width {n} is {acc}/{n}")));
        }
        if acc > 0 {
            widths.insert(n, (acc / n as i64) as u64);
        }
    }
    let data = CuspData::from_widths(widths);
    if data.total != 2 * p + 12 || data.widths != expected_cusp_widths(p) {
        return Err(Error::internal(format!("unexpected cusp data {data:?} for p = {p}")));
    }
    Ok(data)
}

/// Cusp widths read off as the cycle type of `ρ(T)` acting on `X(F_p)`.
pub fn cusp_data_cycles(perm_t: &Perm) -> CuspData {
    CuspData::from_widths(
        perm_t
            .cycle_type()
            .into_iter()
            .map(|(l, m)| (l as u64, m as u64))
            .collect(),
    )
}

/// `(ε₂, ε₃) = (p + 2 + (−1/p), p + 1 + (p + 1)(−3/p))`.
pub fn elliptic_counts(p: u64) -> Result<(u64, u64)> {
    check_prime(p)?;
    let e2 = (p as i64 + 2 + legendre(-1, p) as i64) as u64;
    let e3 = ((p + 1) as i64 * (1 + legendre(-3, p) as i64)) as u64;
    Ok((e2, e3))
}

/// Genus of a curve of index `n` in `SL₂(Z)`:
/// `1 + n/12 − ε₂/4 − ε₃/3 − c/2`.
pub fn genus_formula(index: u64, e2: u64, e3: u64, cusps: u64) -> Rational {
    int(1) + rat(index as i64, 12) - rat(e2 as i64, 4) - rat(e3 as i64, 3) - rat(cusps as i64, 2)
}

/// The closed form of the point-stabilizer genus by `p mod 12`.
pub fn genus_closed_form(p: u64) -> Result<u64> {
    check_prime(p)?;
    let base = (p * p * p + p * p) as i64;
    let p = p as i64;
    let num = match p % 12 {
        1 => base - 22 * p - 76,
        5 => base - 14 * p - 68,
        7 => base - 22 * p - 70,
        11 => base - 14 * p - 62,
        _ => unreachable!("primes above 3 are ±1, ±5 mod 12"),
    };
    Ok((num / 12) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub p: u64,
    pub epsilon2: u64,
    pub epsilon3: u64,
    pub cusps: CuspData,
    pub genus: u64,
}

/// Genus of the point stabilizer, by both the closed form and the general
/// genus formula, which must agree.
pub fn genus_report(p: u64) -> Result<GenusReport> {
    let (e2, e3) = elliptic_counts(p)?;
    let cusps = cusp_data_character(p)?;
    let index = grassmannian_size(p) as u64;
    let assembled = genus_formula(index, e2, e3, cusps.total);
    let closed = genus_closed_form(p)?;
    if assembled != int(closed as i64) {
        return Err(Error::internal(format!(
            "genus routes disagree at p = {p}: formula gives {assembled}, closed form {closed}"
        )));
    }
    Ok(GenusReport {
        p,
        epsilon2: e2,
        epsilon3: e3,
        cusps,
        genus: closed,
    })
}

pub fn genus_pointstab(p: u64) -> Result<u64> {
    Ok(genus_report(p)?.genus)
}

/// `1 + n(N − 6)/(24N)` for a normal subgroup of index `n` with branch
/// schema `(2, 3, N)`.
pub fn genus_newman(index: u64, n: u64) -> Result<Rational> {
    if index == 0 || n == 0 {
        return Err(Error::domain("index and N must be positive"));
    }
    Ok(int(1) + int(index as i64) * int(n as i64 - 6) / int(24 * n as i64))
}

/// Dimensions for weight `2k` on `Γ″ ⊆ G ⊆ Γ′`, with `index = [Γ′ : G]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnipotentDims {
    pub k: u64,
    pub index: u64,
    pub character_trivial: bool,
    /// `dim M_{2k}(G) = k·[Γ′:G]`.
    pub modular_forms: u64,
    /// `dim S_{2k}(G)`: `(k−1)·[Γ′:G]` for `k > 1`, and `1` for `k = 1`.
    pub cusp_forms: u64,
    /// `dim M_{2k}(G, χ)`.
    pub char_modular_forms: u64,
    /// `dim S_{2k}(G, χ)`.
    pub char_cusp_forms: u64,
    /// Dimension of the Eisenstein part with character `χ`.
    pub char_eisenstein: u64,
}

pub fn dims_unipotent(k: u64, index: u64, character_trivial: bool) -> Result<UnipotentDims> {
    if k == 0 || index == 0 {
        return Err(Error::domain("k and the index must be positive"));
    }
    // weight 2 with trivial character: S₂(Γ′) is one-dimensional, no E₂
    let (char_cusp, char_eis) = if character_trivial && k == 1 { (1, 0) } else { (k - 1, 1) };
    Ok(UnipotentDims {
        k,
        index,
        character_trivial,
        modular_forms: k * index,
        cusp_forms: if k > 1 { (k - 1) * index } else { 1 },
        char_modular_forms: k,
        char_cusp_forms: char_cusp,
        char_eisenstein: char_eis,
    })
}

/// Dimension of weight-`2k` forms on `X(G_p)` with the geometry of the
/// curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpDims {
    pub k: u64,
    pub p: u64,
    pub dimension: u64,
    pub genus: u64,
    pub cusps: u64,
    pub elliptic2: u64,
    pub elliptic3: u64,
}

/// `kp/2 + 1 − 3/2` for odd `k`, `kp/2 + 1` for even `k`.
pub fn dims_gp(k: u64, p: u64) -> Result<GpDims> {
    if !is_prime(p) || p % 12 != 5 {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "G_p is defined for primes p ≡ 5 mod 12".into(),
        });
    }
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    let dimension = if k % 2 == 1 { (k * p - 1) / 2 } else { k * p / 2 + 1 };
    Ok(GpDims {
        k,
        p,
        dimension,
        genus: 0,
        cusps: p.div_ceil(2),
        elliptic2: 3,
        elliptic3: 0,
    })
}

/// `|SL₂(Z/n)| = n³ ∏_{ℓ|n} (1 − ℓ⁻²)`.
pub fn sl2_order(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for (l, e) in factorize(n) {
        let l = BigUint::from(l);
        acc *= l.pow(3 * e - 2) * (&l * &l - 1u32);
    }
    acc
}

/// `|Sp₄(F_p)| = p⁴(p⁴ − 1)(p² − 1)`.
pub fn sp4_order(p: u64) -> BigUint {
    let p = BigUint::from(p);
    let p2 = &p * &p;
    let p4 = &p2 * &p2;
    &p4 * (&p4 - 1u32) * (&p2 - 1u32)
}

/// Index comparison showing that the point stabilizers cannot be
/// congruence: their level would be `p(p−1)`, but `Γ(p(p−1))` has smaller
/// index than `ker ρ_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoncongruenceReport {
    pub p: u64,
    pub level: u64,
    pub congruence_index: String,
    pub kernel_index: String,
    pub noncongruent: bool,
}

pub fn noncongruence_report(p: u64) -> Result<NoncongruenceReport> {
    check_prime(p)?;
    let level = p * (p - 1);
    let ci = sl2_order(level);
    let ki = sp4_order(p);
    Ok(NoncongruenceReport {
        p,
        level,
        noncongruent: ci < ki && !ki.is_zero(),
        congruence_index: ci.to_string(),
        kernel_index: ki.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_values() {
        assert_eq!(chi_power(11, 1).unwrap(), 3);
        assert_eq!(chi_power(11, 5).unwrap(), 23);
        assert_eq!(chi_power(11, 10).unwrap(), 23);
        assert_eq!(chi_power(11, 11).unwrap(), 14);
        assert_eq!(chi_power(11, 55).unwrap(), 1464);
        assert_eq!(chi_power(11, 110).unwrap(), 1464);
        assert!(chi_power(11, 7).is_err());
        assert!(chi_power(7, 1).is_err());
    }

    #[test]
    fn cusp_widths() {
        let c = cusp_data_character(11).unwrap();
        assert_eq!(c.total, 34);
        assert_eq!(c.widths, BTreeMap::from([(1, 3), (5, 4), (11, 1), (55, 26)]));
        assert_eq!(c.width_sum(), 1464);
        let c = cusp_data_character(13).unwrap();
        assert_eq!(c.total, 38);
        assert_eq!(c.widths, BTreeMap::from([(1, 3), (6, 4), (13, 1), (78, 30)]));
        let id = cusp_data_cycles(&Perm::identity(5));
        assert_eq!(id.widths, BTreeMap::from([(1, 5)]));
    }

    #[test]
    fn elliptic_and_genus() {
        assert_eq!(elliptic_counts(13).unwrap(), (16, 28));
        assert_eq!(elliptic_counts(11).unwrap(), (12, 0));
        assert_eq!(elliptic_counts(17).unwrap(), (20, 0));
        let table = [(11, 103), (13, 167), (17, 408), (19, 561), (23, 1026), (29, 2063), (31, 2500)];
        for (p, g) in table {
            assert_eq!(genus_pointstab(p).unwrap(), g);
        }
    }

    #[test]
    fn newman_and_dims() {
        assert_eq!(genus_newman(216, 6).unwrap(), int(1));
        assert_eq!(genus_newman(6, 6).unwrap(), int(1));
        assert_eq!(genus_newman(12, 4).unwrap(), rat(3, 4));
        assert_eq!(dims_unipotent(1, 4, false).unwrap().modular_forms, 4);
        let d = dims_unipotent(2, 1, true).unwrap();
        assert_eq!((d.cusp_forms, d.char_cusp_forms), (1, 1));
        let d = dims_unipotent(1, 1, true).unwrap();
        assert_eq!((d.char_cusp_forms, d.char_eisenstein), (1, 0));
        assert_eq!(dims_gp(1, 5).unwrap().dimension, 2);
        assert_eq!(dims_gp(2, 5).unwrap().dimension, 6);
        assert_eq!(dims_gp(2, 17).unwrap().dimension, 18);
        assert_eq!(dims_gp(1, 17).unwrap().cusps, 9);
        assert!(dims_gp(1, 13).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(sl2_order(2), BigUint::from(6u32));
        assert_eq!(sl2_order(6), BigUint::from(144u32));
        assert_eq!(sp4_order(3), BigUint::from(51840u32));
        assert!(noncongruence_report(11).unwrap().noncongruent);
    }
}
