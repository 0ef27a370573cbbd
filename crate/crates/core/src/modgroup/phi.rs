//! The indecomposable representation `φ : Γ → SL₂(Z[ζ₁₂])` with
//! `φ(T) = diag(ζ, ζ⁻¹)` and `φ(S) = (−ζ³, 1; 0, ζ³)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::word::{eval_word, Word};
use crate::error::{Error, Result};
use crate::exactalg::{Cyc12, MatrixN};

/// `φ(γ) = (u, uv; 0, u⁻¹)` with `u = ζ^u_exp` and `v = v.0·ζ + v.1·ζ³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiImage {
    pub u_exp: u32,
    pub v: (BigInt, BigInt),
}

pub fn phi_t() -> MatrixN<Cyc12> {
    MatrixN::from_rows(vec![
        vec![Cyc12::zeta(), Cyc12::zero()],
        vec![Cyc12::zero(), Cyc12::zeta_pow(-1)],
    ])
}

pub fn phi_s() -> MatrixN<Cyc12> {
    MatrixN::from_rows(vec![
        vec![-Cyc12::zeta_pow(3), Cyc12::one()],
        vec![Cyc12::zero(), Cyc12::zeta_pow(3)],
    ])
}

/// Multiply `aζ + bζ³` by `ζ^{2k}`.
fn rotate(v: &(BigInt, BigInt), k: i64) -> (BigInt, BigInt) {
    let (mut a, mut b) = v.clone();
    for _ in 0..k.rem_euclid(6) {
        // ζ²(aζ + bζ³) = −bζ + (a+b)ζ³
        let na = -&b;
        b += &a;
        a = na;
    }
    (a, b)
}

impl PhiImage {
    pub fn identity() -> Self {
        PhiImage {
            u_exp: 0,
            v: (BigInt::zero(), BigInt::zero()),
        }
    }

    /// Product `self · other`: `u = u₁u₂`, `v = v₂ + u₂⁻²v₁`.
    pub fn compose(&self, other: &PhiImage) -> PhiImage {
        let twisted = rotate(&self.v, -(other.u_exp as i64));
        PhiImage {
            u_exp: (self.u_exp + other.u_exp) % 12,
            v: (&other.v.0 + twisted.0, &other.v.1 + twisted.1),
        }
    }

    pub fn v_cyc(&self) -> Cyc12 {
        Cyc12::new([
            Zero::zero(),
            self.v.0.clone().into(),
            Zero::zero(),
            self.v.1.clone().into(),
        ])
    }

    pub fn to_matrix(&self) -> MatrixN<Cyc12> {
        let u = Cyc12::zeta_pow(self.u_exp as i64);
        let uinv = Cyc12::zeta_pow(-(self.u_exp as i64));
        MatrixN::from_rows(vec![
            vec![u.clone(), u * self.v_cyc()],
            vec![Cyc12::zero(), uinv],
        ])
    }

    /// Read `(u, uv; 0, u⁻¹)` off a matrix in the image of `φ`.
    pub fn from_matrix(m: &MatrixN<Cyc12>) -> Result<PhiImage> {
        if m.size() != 2 || !m.get(1, 0).is_zero() {
            return Err(Error::internal("φ image is not upper triangular"));
        }
        let u = m.get(0, 0);
        let u_exp = u
            .root_of_unity_exponent()
            .ok_or_else(|| Error::internal(format!("diagonal entry {u} is not a root of unity")))?;
        if m.get(1, 1) != &Cyc12::zeta_pow(-(u_exp as i64)) {
            return Err(Error::internal("φ image has inconsistent diagonal"));
        }
        let v = Cyc12::zeta_pow(-(u_exp as i64)) * m.get(0, 1).clone();
        let [c0, c1, c2, c3] = v.coeffs();
        if !c0.is_zero() || !c2.is_zero() || !c1.is_integer() || !c3.is_integer() {
            return Err(Error::internal(format!("v = {v} is not in Zζ ⊕ Zζ³")));
        }
        Ok(PhiImage {
            u_exp,
            v: (c1.to_integer(), c3.to_integer()),
        })
    }

    /// `v` as a pair of machine integers, when it fits.
    pub fn v_i64(&self) -> Option<(i64, i64)> {
        Some((self.v.0.to_i64()?, self.v.1.to_i64()?))
    }
}

/// `φ(w)`, evaluated as a matrix over `Z[ζ₁₂]` and decomposed.
pub fn phi(w: &Word) -> Result<PhiImage> {
    let m = eval_word(w, &phi_s(), &phi_t())?;
    PhiImage::from_matrix(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgroup::word::relations_check;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn pi(u: u32, a: i64, b: i64) -> PhiImage {
        PhiImage {
            u_exp: u,
            v: (a.into(), b.into()),
        }
    }

    #[test]
    fn generator_images() {
        assert!(relations_check(&phi_s(), &phi_t()));
        let t = eval_word(&w("T"), &phi_s(), &phi_t()).unwrap();
        assert_eq!(t.get(0, 0), &Cyc12::zeta());
        assert_eq!(t.get(1, 1), &Cyc12::from_ints(0, 1, 0, -1));
        assert!(eval_word(&Word::identity(), &phi_s(), &phi_t()).unwrap().is_identity());
    }

    #[test]
    fn unipotent_identities() {
        let m = eval_word(&w("T^2 S T"), &phi_s(), &phi_t()).unwrap();
        assert_eq!(
            m,
            MatrixN::from_rows(vec![
                vec![Cyc12::one(), Cyc12::zeta()],
                vec![Cyc12::zero(), Cyc12::one()]
            ])
        );
        assert_eq!(phi(&w("T^3 S")).unwrap(), pi(0, 0, 1));
        assert_eq!(phi(&w("T^4 S^-1 T^-2 S^-1 T S^-1")).unwrap(), pi(0, -2, 2));
        assert_eq!(phi(&Word::identity()).unwrap(), PhiImage::identity());
        assert_eq!(phi(&w("T^6")).unwrap(), pi(6, 0, 0));
    }

    #[test]
    fn compose_matches_matrix_product() {
        let a = phi(&w("T^2 S T^-5 S")).unwrap();
        let b = phi(&w("S^-1 T^7 S T")).unwrap();
        let prod = &a.to_matrix() * &b.to_matrix();
        assert_eq!(PhiImage::from_matrix(&prod).unwrap(), a.compose(&b));
    }

    #[test]
    fn commutator_identities() {
        let one = BigInt::from(1);
        let z = BigInt::from(0);
        let s_int = MatrixN::from_rows(vec![vec![z.clone(), -one.clone()], vec![one.clone(), z.clone()]]);
        let t_int = MatrixN::from_rows(vec![vec![one.clone(), one], vec![z.clone(), BigInt::from(1)]]);
        let ev = |x: &Word| eval_word(x, &s_int, &t_int).unwrap();
        let projectively_equal = |x: &Word, y: &Word| {
            let (mx, my) = (ev(x), ev(y));
            mx == my || mx == my.scale(&BigInt::from(-1))
        };
        let (a, b, s, r) = (Word::a(), Word::b(), Word::s(), Word::r());
        // S conjugates A to A⁻¹ (not to A): φ(S) has u² = −1, so S acts as −1 on Γ'/Γ''
        assert!(projectively_equal(&a.conjugate_by(&s), &a.inverse()));
        assert!(!projectively_equal(&a.conjugate_by(&s), &a));
        assert!(projectively_equal(&b.conjugate_by(&s), &b.inverse()));
        assert!(projectively_equal(&a.conjugate_by(&r), &a.inverse().concat(&b)));
        assert!(projectively_equal(&b.conjugate_by(&r), &a.inverse()));
        let lhs = ev(&Word::commutator(&a, &b.inverse()));
        assert_eq!(lhs, ev(&w("T^6")).scale(&BigInt::from(-1)));
        assert_eq!(phi(&a).unwrap(), pi(0, 1, 0));
        assert_eq!(phi(&b).unwrap(), pi(0, 1, -1));
    }
}
