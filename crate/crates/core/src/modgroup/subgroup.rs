//! Membership in the subgroup families cut out by `φ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::phi::{phi, PhiImage};
use super::word::Word;
use crate::error::{Error, Result};
use crate::exactalg::arith::is_prime;
use crate::exactalg::{Cyc12, Fp2Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupSpec {
    /// The commutator subgroup `Γ′`.
    GammaPrime,
    /// `Γ″ = [Γ′, Γ′]`.
    GammaDoublePrime,
    /// `Γ′(N) = ⟨A^N, B^N, Γ″⟩`.
    GammaPrimeN(u64),
    /// `G_p`: `u⁴ = 1` and `v ∈ F_p` after reduction mod `p ≡ 5 (mod 12)`.
    Gp(u64),
    /// `Γ(φ, N) = {γ : φ(γ) ≡ 1 (mod N)}`.
    PhiCong(u64),
}

impl SubgroupSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SubgroupSpec::GammaPrimeN(0) | SubgroupSpec::PhiCong(0) => {
                Err(Error::domain("level must be a positive integer"))
            }
            SubgroupSpec::Gp(p) if !is_prime(p) || p % 12 != 5 => Err(Error::UnsupportedPrime {
                p,
                reason: "G_p is defined for primes p ≡ 5 (mod 12)".into(),
            }),
            _ => Ok(()),
        }
    }
}

fn v_divisible(img: &PhiImage, n: u64) -> bool {
    let n = BigInt::from(n);
    img.v.0.is_multiple_of(&n) && img.v.1.is_multiple_of(&n)
}

/// Membership of `w` in the subgroup described by `spec`. `Γ′`, `Γ″` and
/// `Γ′(N)` are taken in `PSL₂(Z)` (so `u = −1` is allowed); `G_p` and
/// `Γ(φ, N)` are taken in `SL₂(Z)`.
pub fn subgroup_member(w: &Word, spec: &SubgroupSpec) -> Result<bool> {
    spec.validate()?;
    let img = phi(w)?;
    Ok(match *spec {
        SubgroupSpec::GammaPrime => img.u_exp % 6 == 0,
        SubgroupSpec::GammaDoublePrime => img.u_exp % 6 == 0 && img.v.0.is_zero() && img.v.1.is_zero(),
        SubgroupSpec::GammaPrimeN(n) => img.u_exp % 6 == 0 && v_divisible(&img, n),
        SubgroupSpec::Gp(p) => {
            let field = Fp2Field::for_cyclotomic12(p)?;
            let m = img.to_matrix();
            let u = field.reduce(m.get(0, 0))?;
            let corner = field.reduce(m.get(0, 1))?;
            u.pow(4) == field.one() && corner.in_prime_field()
        }
        SubgroupSpec::PhiCong(n) => {
            let m = img.to_matrix();
            let one = Cyc12::one();
            (m.get(0, 0).clone() - one.clone()).is_divisible_by(n)
                && m.get(0, 1).is_divisible_by(n)
                && (m.get(1, 1).clone() - one).is_divisible_by(n)
        }
    })
}

/// Index in `PSL₂(Z)`: `6N²` for `Γ′(N)` and `3p` for `G_p`.
pub fn index_of(spec: &SubgroupSpec) -> Result<u64> {
    spec.validate()?;
    match *spec {
        SubgroupSpec::GammaPrimeN(n) => Ok(6 * n * n),
        SubgroupSpec::Gp(p) => Ok(3 * p),
        other => Err(Error::Unsupported(format!("index of {other:?} is not provided"))),
    }
}
