//! q-expansions in `q = e^{2πiτ/6}` of `η⁴`, `E₄`, `E₆`, the coordinates
//! `x`, `y` on `X(Γ′)`, and the functions `x̃`, `ỹ` on `X(Γ′(N))`.
//!
//! Everything here is supported on `q^a·Q^k` with `Q = q⁶`, so the heavy
//! lifting happens in the variable `Q` and the result is inflated. A
//! precision of `K` means `K` coefficients in `Q`; the corresponding
//! q-series of `x̃` is known to `O(q^{6K−2})`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::divpoly::{division_polynomials, YPoly, ZPoly};
use crate::error::{Error, Result};
use crate::exactalg::arith::{divisors, is_prime, valuation_u64};
use crate::exactalg::rational::{big, int};
use crate::exactalg::series::{hensel_root, series_sqrt, EXACT};
use crate::exactalg::{padic_val, LaurentSeries, Rational};

/// `∏_{n≥1} (1 − Qⁿ)` to `O(Q^k)` by Euler's pentagonal number theorem.
pub fn euler_product(k: usize) -> LaurentSeries {
    let mut coeffs = vec![Rational::zero(); k];
    let mut j: i64 = 0;
    loop {
        let mut any = false;
        for m in [j, -j] {
            let e = m * (3 * m - 1) / 2;
            if (e as usize) < k {
                any = true;
                coeffs[e as usize] = int(if m.rem_euclid(2) == 0 { 1 } else { -1 });
            }
            if j == 0 {
                break;
            }
        }
        if !any {
            break;
        }
        j += 1;
    }
    LaurentSeries::new(0, coeffs, k as i64)
}

fn sigma(n: u64, k: u32) -> BigInt {
    divisors(n).into_iter().map(|d| BigInt::from(d).pow(k)).sum()
}

/// `1 + c·Σ σ_k(n) Qⁿ` to `O(Q^prec)`.
fn eisenstein(prec: usize, c: i64, k: u32) -> LaurentSeries {
    let mut coeffs = vec![int(1)];
    for n in 1..prec as u64 {
        coeffs.push(big(sigma(n, k) * c));
    }
    LaurentSeries::new(0, coeffs, prec as i64)
}

/// The basic forms in the variable `Q = q⁶`, with the powers of `q` that
/// are factored out noted in each field name.
#[derive(Clone, Debug)]
pub struct QBasis {
    pub prec: usize,
    /// `∏(1 − Qⁿ)⁴ = q⁻¹η⁴`.
    pub eta4_hat: LaurentSeries,
    /// `∏(1 − Qⁿ)⁸ = q⁻²η⁸`.
    pub eta8_hat: LaurentSeries,
    pub e4: LaurentSeries,
    pub e6: LaurentSeries,
}

pub fn q_basis(prec: usize) -> QBasis {
    let eta = euler_product(prec);
    let eta4_hat = eta.pow(4);
    QBasis {
        prec,
        eta8_hat: &eta4_hat * &eta4_hat,
        eta4_hat,
        e4: eisenstein(prec, 240, 3),
        e6: eisenstein(prec, -504, 5),
    }
}

/// Series in `q` for the generators of `M(Γ′) = C[η⁴, E₄, E₆]` and the
/// Weierstrass coordinates `x = E₄/η⁸`, `y = E₆/η¹²`.
#[derive(Clone, Debug)]
pub struct BasisSeries {
    pub eta4: LaurentSeries,
    pub e4: LaurentSeries,
    pub e6: LaurentSeries,
    pub x: LaurentSeries,
    pub y: LaurentSeries,
    /// Number of coefficients computed in `Q = q⁶`.
    pub prec: usize,
}

pub fn basis_series(prec: usize) -> Result<BasisSeries> {
    if prec == 0 {
        return Err(Error::domain("precision must be at least 1"));
    }
    let b = q_basis(prec);
    let x_hat = &b.e4 * &b.eta8_hat.inverse()?;
    let eta12_hat = &b.eta8_hat * &b.eta4_hat;
    let y_hat = &b.e6 * &eta12_hat.inverse()?;
    Ok(BasisSeries {
        eta4: b.eta4_hat.inflate(6).shift(1),
        e4: b.e4.inflate(6),
        e6: b.e6.inflate(6),
        x: x_hat.inflate(6).shift(-2),
        y: y_hat.inflate(6).shift(-3),
        prec,
    })
}

/// `x̃` for level `N` together with `x̂ = q²x̃` as a series in `Q = q⁶`.
#[derive(Clone, Debug)]
pub struct XtildeSeries {
    pub n: u64,
    /// `x̃` as a Laurent series in `q`.
    pub series: LaurentSeries,
    /// `x̂(Q)` with `x̃ = q⁻² x̂(q⁶)`.
    pub x_hat: LaurentSeries,
    /// Number of coefficients computed in `Q`.
    pub prec: usize,
}

/// Coefficients in `Q` of `M̂(X) = q^{2N²−2}·(ψ_N²(X/q²)E₄ − φ_N(X/q²)η⁸)`.
fn m_hat(psi_sq: &ZPoly, phi: &ZPoly, n: u64, b: &QBasis) -> Result<Vec<LaurentSeries>> {
    let d = (n * n) as i64;
    let mut out = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let mut term = LaurentSeries::zero(EXACT);
        // b_k q^{2(N²−1−k)} E₄ and f_k q^{2(N²−k)} q²η̂⁸
        for (poly, shift, series) in [(psi_sq, d - 1 - k, &b.e4), (phi, d - k, &b.eta8_hat)] {
            let c = poly.coeffs().get(k as usize).cloned().unwrap_or_default();
            if c.is_zero() {
                continue;
            }
            if shift % 3 != 0 {
                return Err(Error::internal(format!(
                    "coefficient of X^{k} sits at a q-exponent outside 6Z"
                )));
            }
            let part = series.shift(shift / 3).scale(&big(c));
            term = if shift == d - 1 - k { &term + &part } else { &term - &part };
        }
        out.push(term);
    }
    Ok(out)
}

pub fn xtilde(n: u64, prec: usize) -> Result<XtildeSeries> {
    if n == 0 {
        return Err(Error::domain("level must be at least 1"));
    }
    if prec == 0 {
        return Err(Error::domain("precision must be at least 1"));
    }
    let t = division_polynomials(n)?;
    let b = q_basis(prec);
    let poly = m_hat(&t.psi_sq, &t.phi_pol, n, &b)?;
    let seed = int((n * n) as i64);
    let x_hat = hensel_root(&poly, &seed, prec as i64).map_err(|e| match e {
        Error::Hensel(m) => Error::internal(format!("Hensel lifting failed at level {n}: {m}")),
        other => other,
    })?;
    Ok(XtildeSeries {
        n,
        series: x_hat.inflate(6).shift(-2),
        x_hat,
        prec,
    })
}

/// `g(x)·y^parity` evaluated at series `x`, `y`.
fn eval_ypoly(f: &YPoly, x: &LaurentSeries, y: &LaurentSeries) -> LaurentSeries {
    let coeffs: Vec<LaurentSeries> = f
        .poly
        .coeffs()
        .iter()
        .map(|c| LaurentSeries::constant(big(c.clone())))
        .collect();
    let v = LaurentSeries::eval_poly(&coeffs, x);
    if f.y_parity == 1 {
        &v * y
    } else {
        v
    }
}

/// `ỹ` with `ỹ² = x̃³ − 1728`, on the branch for which
/// `ψ_N(x̃,ỹ)³E₆ = ω_N(x̃,ỹ)η¹²`.
pub fn ytilde(n: u64, prec: usize) -> Result<LaurentSeries> {
    let xt = xtilde(n, prec)?;
    let t = division_polynomials(n)?;
    let b = q_basis(prec);
    let rhs = &xt.x_hat.pow(3) - &LaurentSeries::monomial(int(1728), 1);
    let e6 = b.e6.inflate(6);
    let eta12 = (&b.eta8_hat * &b.eta4_hat).inflate(6).shift(3);
    let mut matches = Vec::new();
    for sign in [1, -1] {
        let y = series_sqrt(&rhs, sign)?.inflate(6).shift(-3);
        let psi = eval_ypoly(&t.psi, &xt.series, &y);
        let lhs = &(&psi * &psi) * &(&psi * &e6);
        let omega = &eval_ypoly(&t.omega, &xt.series, &y) * &eta12;
        let diff = &lhs - &omega;
        let lead = lhs.valuation().unwrap_or(diff.prec());
        if diff.prec() <= lead {
            return Err(Error::Precision(format!(
                "precision {prec} is too small to fix the branch of ỹ at level {n}"
            )));
        }
        if diff.is_zero() {
            matches.push(y);
        }
    }
    match matches.len() {
        1 => Ok(matches.pop().expect("one match")),
        k => Err(Error::internal(format!(
            "{k} branches of ỹ satisfy the ω-relation at level {n}"
        ))),
    }
}

/// Primes examined by [`denominator_report`].
pub const REPORT_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDenominators {
    pub p: u64,
    /// Numbers of leading `Q`-coefficients of `x̃` over which minima are
    /// taken.
    pub cutoffs: Vec<usize>,
    /// `min v_p` over the coefficients within each cutoff (`None` when all
    /// vanish).
    pub min_valuations: Vec<Option<i64>>,
    /// Integrality predicted by the theory: `p ∤ N`, or `p = 2` with `4 ∤ N`.
    pub expected_integral: bool,
    /// Every computed coefficient is `p`-integral.
    pub integral: bool,
    /// The minima strictly decrease along the cutoffs.
    pub unbounded_trend: bool,
    /// `v_p(a_n) ≥ −(2n − 2)·v_p(N)` for every coefficient `a_n` of `qⁿ` in
    /// `x̂ = q²x̃`.
    pub bound_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenominatorReport {
    pub n: u64,
    pub prec: usize,
    pub primes: Vec<PrimeDenominators>,
}

/// Cutoffs at one, two and three thirds of the available coefficients.
pub fn cutoffs(prec: usize) -> Vec<usize> {
    let mut c: Vec<usize> = (1..=3).map(|i| (i * prec).div_ceil(3)).collect();
    c.dedup();
    c
}

pub fn denominator_report_for(xt: &XtildeSeries) -> DenominatorReport {
    let n = xt.n;
    let coeffs: Vec<Rational> = (0..xt.prec as i64)
        .map(|k| xt.x_hat.coeff(k).unwrap_or_default())
        .collect();
    let cuts = cutoffs(xt.prec);
    let primes = REPORT_PRIMES
        .iter()
        .map(|&p| {
            let vals: Vec<Option<i64>> = coeffs.iter().map(|c| padic_val(c, p)).collect();
            let min_valuations: Vec<Option<i64>> = cuts
                .iter()
                .map(|&c| vals[..c].iter().flatten().copied().min())
                .collect();
            let vn = valuation_u64(n, p) as i64;
            let bound_ok = vals.iter().enumerate().all(|(k, v)| {
                // the coefficient of Q^k in x̂ is that of q^{6k}
                let qexp = 6 * k as i64;
                v.is_none_or(|v| v + (2 * qexp - 2) * vn >= 0)
            });
            let integral = vals.iter().flatten().all(|&v| v >= 0);
            let unbounded_trend = min_valuations.len() >= 3
                && min_valuations.windows(2).all(|w| match (w[0], w[1]) {
                    (Some(a), Some(b)) => b < a,
                    _ => false,
                });
            PrimeDenominators {
                p,
                cutoffs: cuts.clone(),
                min_valuations,
                expected_integral: !n.is_multiple_of(p) || (p == 2 && !n.is_multiple_of(4)),
                integral,
                unbounded_trend,
                bound_ok,
            }
        })
        .collect();
    DenominatorReport {
        n,
        prec: xt.prec,
        primes,
    }
}

pub fn denominator_report(n: u64, prec: usize) -> Result<DenominatorReport> {
    Ok(denominator_report_for(&xtilde(n, prec)?))
}

/// True when `p` divides some denominator among the computed coefficients.
pub fn has_denominator(xt: &XtildeSeries, p: u64) -> bool {
    debug_assert!(is_prime(p));
    xt.series
        .terms()
        .iter()
        .any(|(_, c)| padic_val(c, p).is_some_and(|v| v < 0))
}

/// Exponent of the largest power of `p` dividing a denominator.
pub fn max_denominator_exponent(xt: &XtildeSeries, p: u64) -> i64 {
    xt.series
        .terms()
        .iter()
        .filter_map(|(_, c)| padic_val(c, p))
        .map(|v| (-v).max(0))
        .max()
        .unwrap_or(0)
}

/// Leading coefficient sign helper for reports.
pub fn leading_sign(s: &LaurentSeries) -> i32 {
    match s.leading_coeff() {
        Some(c) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}
