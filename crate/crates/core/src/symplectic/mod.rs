//! A rank-4 family `ρ : SL₂(Z) → Sp₄(F_p)` and its action on the
//! Lagrangian Grassmannian.
//!
//! With `J` the alternating form with `J₁₄ = 1`, `J₂₃ = −3`,
//!
//! ```text
//! ρ(T) = | x  3y  3/y  1/x |     ρ(S) = | 0   0   0   −1/x |
//!        | 0   y  2/y  1/x |            | 0   0   1/y  0   |
//!        | 0   0  1/y  1/x |            | 0  −y   0    0   |
//!        | 0   0   0   1/x |            | x   0   0    0   |
//! ```
//!
//! For a primitive root `x` and `y = 1/x` the image is all of `Sp₄(F_p)`,
//! which is verified here by computing the order of the induced
//! permutation group on `X(F_p)`.

mod grassmannian;
mod schreier;

pub use grassmannian::{
    act_subspace, fixed_and_orders, grassmannian_size, is_isotropic, lagrangians, pairing,
    permutation, Lagrangian, Perm,
};
pub use schreier::group_order;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::arith::{divisors, inv_mod, is_prime, lcm, multiplicative_order, reduce_i64};
use crate::exactalg::linalg::nullspace;
use crate::exactalg::{MatrixN, ModInt, RingElem};
use crate::modgroup::{eval_word, relations_check, Word};

/// Parameters `(p, x, y)` of the family; `y` defaults to `x⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpParams {
    pub p: u64,
    pub x: i64,
    pub y: Option<i64>,
}

impl SpParams {
    pub fn new(p: u64, x: i64, y: Option<i64>) -> Result<SpParams> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if p <= 7 {
            return Err(Error::UnsupportedPrime {
                p,
                reason: "the family is only set up for p > 7".into(),
            });
        }
        if reduce_i64(x, p) == 0 {
            return Err(Error::domain(format!("x = {x} vanishes mod {p}")));
        }
        if y.is_some_and(|y| reduce_i64(y, p) == 0) {
            return Err(Error::domain(format!("y vanishes mod {p}")));
        }
        Ok(SpParams { p, x, y })
    }

    pub fn x_mod(&self, m: u64) -> u64 {
        reduce_i64(self.x, m)
    }

    /// `y` modulo `m`, the inverse of `x` when not given explicitly.
    pub fn y_mod(&self, m: u64) -> u64 {
        match self.y {
            Some(y) => reduce_i64(y, m),
            None => inv_mod(self.x_mod(m), m).expect("x is a unit"),
        }
    }

    pub fn x_is_primitive(&self) -> bool {
        multiplicative_order(self.x_mod(self.p), self.p) == Some(self.p - 1)
    }
}

fn mat(m: u64, rows: [[i64; 4]; 4]) -> MatrixN<ModInt> {
    MatrixN::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| ModInt::new(v, m)).collect())
            .collect(),
    )
}

/// The form `J` over `Z/m`.
pub fn j_form(m: u64) -> MatrixN<ModInt> {
    mat(m, [[0, 0, 0, 1], [0, 0, -3, 0], [0, 3, 0, 0], [-1, 0, 0, 0]])
}

pub fn is_symplectic(m: &MatrixN<ModInt>, j: &MatrixN<ModInt>) -> bool {
    m.size() == j.size() && &(&m.transpose() * j) * m == *j
}

/// `(ρ(S), ρ(T))` over `Z/m` for `m` a power of `p`.
pub fn rho_matrices_mod(params: &SpParams, m: u64) -> (MatrixN<ModInt>, MatrixN<ModInt>) {
    let x = params.x_mod(m) as i64;
    let y = params.y_mod(m) as i64;
    let xi = inv_mod(x as u64, m).expect("x is a unit") as i64;
    let yi = inv_mod(y as u64, m).expect("y is a unit") as i64;
    let s = mat(m, [[0, 0, 0, -xi], [0, 0, yi, 0], [0, -y, 0, 0], [x, 0, 0, 0]]);
    let t = mat(
        m,
        [[x, 3 * y, 3 * yi, xi], [0, y, 2 * yi, xi], [0, 0, yi, xi], [0, 0, 0, xi]],
    );
    (s, t)
}

/// `(ρ(S), ρ(T))` over `F_p`, after checking that both preserve `J`,
/// `ρ(S)² = −I`, and the defining relations of `SL₂(Z)` hold.
pub fn rho_matrices(params: &SpParams) -> Result<(MatrixN<ModInt>, MatrixN<ModInt>)> {
    let p = params.p;
    let (s, t) = rho_matrices_mod(params, p);
    let j = j_form(p);
    let minus_one = MatrixN::identity(4, &ModInt::new(0, p)).scale(&ModInt::new(-1, p));
    if !is_symplectic(&s, &j) || !is_symplectic(&t, &j) {
        return Err(Error::internal("ρ(S) or ρ(T) does not preserve J"));
    }
    if s.pow(2)? != minus_one || !relations_check(&s, &t) {
        return Err(Error::internal("ρ(S), ρ(T) violate the relations of SL₂(Z)"));
    }
    Ok((s, t))
}

/// `ρ(R) = ρ(S)ρ(T)`.
pub fn rho_r(params: &SpParams) -> Result<MatrixN<ModInt>> {
    let (s, t) = rho_matrices(params)?;
    Ok(&s * &t)
}

/// Basis of the alternating forms `G` with `MᵀGM = G` for both matrices.
pub fn invariant_forms(a: &MatrixN<ModInt>, b: &MatrixN<ModInt>) -> Vec<MatrixN<ModInt>> {
    let n = a.size();
    let zero = a.get(0, 0).zero_like();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let elementary = |i: usize, j: usize| {
        let mut g = MatrixN::identity(n, &zero).scale(&zero);
        g.set(i, j, zero.one_like());
        g.set(j, i, -zero.one_like());
        g
    };
    // one column per basis form, one row per matrix entry of MᵀGM − G
    let images: Vec<Vec<MatrixN<ModInt>>> = pairs
        .iter()
        .map(|&(i, j)| {
            let g = elementary(i, j);
            [a, b]
                .iter()
                .map(|m| {
                    let h = &(&m.transpose() * &g) * *m;
                    MatrixN::from_rows(
                        (0..n)
                            .map(|r| (0..n).map(|c| *h.get(r, c) - *g.get(r, c)).collect())
                            .collect(),
                    )
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for k in 0..2 {
        for r in 0..n {
            for c in 0..n {
                rows.push(images.iter().map(|im| *im[k].get(r, c)).collect());
            }
        }
    }
    nullspace(&rows, pairs.len(), &zero)
        .into_iter()
        .map(|v| {
            let mut g = MatrixN::identity(n, &zero).scale(&zero);
            for (&(i, j), c) in pairs.iter().zip(v) {
                g.set(i, j, c);
                g.set(j, i, -c);
            }
            g
        })
        .collect()
}

/// Order of `ρ(T)` as a matrix over `F_p`.
pub fn matrix_order_t(params: &SpParams) -> Result<u64> {
    let p = params.p;
    let (_, t) = rho_matrices(params)?;
    let ox = multiplicative_order(params.x_mod(p), p).expect("unit");
    let oy = multiplicative_order(params.y_mod(p), p).expect("unit");
    let bound = lcm(ox, oy) * p;
    divisors(bound)
        .into_iter()
        .find(|&d| t.pow(d as i64).map(|m| m.is_identity()).unwrap_or(false))
        .ok_or_else(|| Error::internal("order of ρ(T) exceeds its a priori bound"))
}

/// `|PSp₄(F_p)| = p⁴(p⁴ − 1)(p² − 1)/2`.
pub fn psp4_order(p: u64) -> BigUint {
    let p = BigUint::from(p);
    let p2 = &p * &p;
    let p4 = &p2 * &p2;
    &p4 * (&p4 - 1u32) * (&p2 - 1u32) / 2u32
}

/// Permutations of `X(F_p)` induced by `ρ(S)`, `ρ(T)` and `ρ(R)`.
pub struct ActionPerms {
    pub s: Perm,
    pub t: Perm,
    pub r: Perm,
}

pub fn action_perms(params: &SpParams) -> Result<ActionPerms> {
    let (s, t) = rho_matrices(params)?;
    Ok(ActionPerms {
        s: permutation(&s)?,
        t: permutation(&t)?,
        r: permutation(&(&s * &t))?,
    })
}

/// Fixed points of `ρ(S)` and `ρ(R)` on `X(F_p)`: the elliptic point counts
/// of the point stabilizer.
pub fn epsilons(params: &SpParams) -> Result<(usize, usize)> {
    let perms = action_perms(params)?;
    Ok((perms.s.fixed_count(), perms.r.fixed_count()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurjectivityVerdict {
    pub p: u64,
    pub x: i64,
    pub order_t: u64,
    /// Decimal string, since the order exceeds the JSON-safe integer range.
    pub perm_group_order: String,
    #[serde(rename = "surjectivePSp4")]
    pub surjective_psp4: bool,
    pub epsilon2: usize,
    pub epsilon3: usize,
}

/// Compares the order of `⟨ρ(S), ρ(T)⟩` acting on `X(F_p)` with `|PSp₄(F_p)|`.
pub fn surjectivity_verdict(params: &SpParams) -> Result<SurjectivityVerdict> {
    let perms = action_perms(params)?;
    let order = group_order(&[perms.s.clone(), perms.t.clone()]);
    Ok(SurjectivityVerdict {
        p: params.p,
        x: params.x,
        order_t: matrix_order_t(params)?,
        surjective_psp4: order == psp4_order(params.p),
        perm_group_order: order.to_string(),
        epsilon2: perms.s.fixed_count(),
        epsilon3: perms.r.fixed_count(),
    })
}

/// Whether the word evaluates to the identity under `ρ` over `F_p`.
pub fn kernel_test(w: &Word, params: &SpParams) -> Result<bool> {
    let (s, t) = rho_matrices(params)?;
    Ok(eval_word(w, &s, &t)?.is_identity())
}

/// Whether `ρ(T)^{p(p−1)}` over `Z/p²` is a nontrivial element of the
/// kernel of reduction mod `p`.
pub fn lift_witness_mod_p2(params: &SpParams) -> Result<bool> {
    let p = params.p;
    let (_, t) = rho_matrices_mod(params, p * p);
    let m = t.pow((p * (p - 1)) as i64)?;
    let mod_p = m.map(|e| ModInt::from_u64(e.value(), p));
    Ok(mod_p.is_identity() && !m.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, x: i64) -> SpParams {
        SpParams::new(p, x, None).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(SpParams::new(7, 2, None), Err(Error::UnsupportedPrime { .. })));
        assert!(SpParams::new(3, 2, None).is_err());
        assert!(SpParams::new(12, 5, None).is_err());
        assert!(SpParams::new(11, 22, None).is_err());
        assert!(params(11, 2).x_is_primitive());
        assert!(!params(11, 3).x_is_primitive());
    }

    #[test]
    fn representation_relations() {
        for (p, x) in [(11, 2), (13, 2), (17, 3), (11, 8)] {
            let (s, t) = rho_matrices(&params(p, x)).unwrap();
            let r = &s * &t;
            assert!(r.pow(6).unwrap().is_identity());
            assert!(!r.pow(3).unwrap().is_identity());
            let forms = invariant_forms(&s, &t);
            assert!(!forms.is_empty());
            // J lies in the span: adjoining it does not raise the rank
            let j = j_form(p);
            let flat = |g: &MatrixN<ModInt>| -> Vec<ModInt> { g.rows().concat() };
            let mut rows: Vec<Vec<ModInt>> = forms.iter().map(flat).collect();
            let r0 = crate::exactalg::linalg::rank(&rows);
            rows.push(flat(&j));
            assert_eq!(crate::exactalg::linalg::rank(&rows), r0);
        }
        let id = MatrixN::identity(4, &ModInt::new(0, 11));
        assert_eq!(invariant_forms(&id, &id).len(), 6);
    }

    #[test]
    fn closed_form_anchors() {
        let pr = params(11, 2);
        let (s, _) = rho_matrices(&pr).unwrap();
        let r = rho_r(&pr).unwrap();
        assert_eq!(act_subspace(&s, Lagrangian::D).unwrap(), Lagrangian::A(0, 0, 0));
        let (x, y) = (2i64, 6i64);
        let red = |v: i64| reduce_i64(v, 11);
        assert_eq!(
            act_subspace(&r, Lagrangian::D).unwrap(),
            Lagrangian::A(red(-x * y), red(2 * x * x), red(-2 * y * y))
        );
    }

    #[test]
    fn orders_and_counts() {
        let pr = params(11, 2);
        assert_eq!(matrix_order_t(&pr).unwrap(), 110);
        assert_ne!(matrix_order_t(&params(11, 3)).unwrap(), 110);
        let perms = action_perms(&pr).unwrap();
        assert_eq!(perms.t.order(), BigUint::from(55u32));
        assert_eq!(group_order(std::slice::from_ref(&perms.t)), BigUint::from(55u32));
        assert_eq!(perms.s.fixed_count(), 12);
        assert_eq!(perms.r.fixed_count(), 0);
        let minus = MatrixN::identity(4, &ModInt::new(0, 11)).scale(&ModInt::new(-1, 11));
        assert!(permutation(&minus).unwrap().is_identity());
        let bad = MatrixN::identity(4, &ModInt::new(0, 11)).scale(&ModInt::new(2, 11));
        assert!(permutation(&bad).is_err());
    }

    #[test]
    fn kernel_word_and_lift() {
        let w: Word = "S T^20 S^-1 T^33 S^-1 T^20 S^-1 T^33".parse().unwrap();
        assert!(kernel_test(&w, &params(11, 2)).unwrap());
        assert!(!kernel_test(&w, &params(11, 8)).unwrap());
        assert!(kernel_test(&Word::identity(), &params(11, 8)).unwrap());
        assert!(lift_witness_mod_p2(&params(11, 2)).unwrap());
        assert!(lift_witness_mod_p2(&params(13, 2)).unwrap());
    }

    #[test]
    fn psp4_order_values() {
        assert_eq!(psp4_order(11), BigUint::from(12_860_654_400u64));
    }
}
