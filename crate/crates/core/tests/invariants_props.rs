use num_bigint::BigUint;
use proptest::prelude::*;

use phicong::exactalg::arith::{divisors, is_prime};
use phicong::exactalg::rational::int;
use phicong::invariants::{
    chi_power, cusp_data_character, cusp_data_cycles, dims_gp, dims_unipotent, elliptic_counts,
    genus_closed_form, genus_formula, genus_newman, genus_report, noncongruence_report, sl2_order,
};
use phicong::symplectic::{action_perms, grassmannian_size, SpParams};

fn primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&p| is_prime(p))
}

#[test]
fn genus_routes_agree() {
    for p in primes(11, 200) {
        let rep = genus_report(p).unwrap();
        let index = grassmannian_size(p) as u64;
        assert_eq!(index, (p * p + 1) * (p + 1));
        let g = genus_formula(index, rep.epsilon2, rep.epsilon3, rep.cusps.total);
        assert_eq!(g, int(genus_closed_form(p).unwrap() as i64), "p = {p}");
    }
}

#[test]
fn genus_table() {
    let want = [(11, 103), (13, 167), (17, 408), (19, 561), (23, 1026), (29, 2063), (31, 2500)];
    for (p, g) in want {
        assert_eq!(genus_report(p).unwrap().genus, g, "p = {p}");
    }
}

#[test]
fn cusp_counts_are_consistent() {
    for p in primes(11, 200) {
        let c = cusp_data_character(p).unwrap();
        assert_eq!(c.width_sum(), (p * p + 1) * (p + 1), "p = {p}");
        assert_eq!(c.total, 2 * p + 12);
        assert_eq!(
            chi_power(p, p * (p - 1)).unwrap() as usize,
            grassmannian_size(p),
            "T^(p(p-1)) is trivial"
        );
    }
}

#[test]
fn character_matches_permutation() {
    for (p, x) in [(11u64, 2i64), (13, 2), (17, 3)] {
        let perms = action_perms(&SpParams::new(p, x, None).unwrap()).unwrap();
        assert_eq!(cusp_data_cycles(&perms.t), cusp_data_character(p).unwrap(), "p = {p}");
        let mut power = perms.t.clone();
        let n = p * (p - 1);
        for d in 1..=n {
            if n % d == 0 {
                assert_eq!(power.fixed_count() as u64, chi_power(p, d).unwrap(), "p = {p}, d = {d}");
            }
            power = power.then(&perms.t);
        }
        let (e2, e3) = elliptic_counts(p).unwrap();
        assert_eq!(perms.s.fixed_count() as u64, e2);
        assert_eq!(perms.r.fixed_count() as u64, e3);
    }
}

#[test]
fn sl2_order_by_counting() {
    for n in 2..=12u64 {
        let mut count = 0u64;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if (a * d + n * n - b * c % n) % n == 1 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(sl2_order(n), BigUint::from(count), "n = {n}");
    }
}

#[test]
fn noncongruence_for_small_primes() {
    for p in primes(11, 200) {
        assert!(noncongruence_report(p).unwrap().noncongruent, "p = {p}");
    }
}

#[test]
fn newman_genus() {
    // indices in SL₂(Z): Γ(7) has index 336 and genus 3, Γ(5) index 120 and genus 0
    assert_eq!(genus_newman(336, 7).unwrap(), int(3));
    assert_eq!(genus_newman(120, 5).unwrap(), int(0));
    assert_eq!(genus_newman(24, 6).unwrap(), int(1));
    assert!(genus_newman(0, 5).is_err());
}

#[test]
fn gp_dimensions() {
    assert!(dims_gp(2, 13).is_err());
    for p in [17u64, 29, 41] {
        for k in 1..=6u64 {
            let d = dims_gp(k, p).unwrap();
            // Riemann–Roch on a genus-0 curve with the stated elliptic points and cusps
            let (g, c, e2, e3) = (d.genus as i64, d.cusps as i64, d.elliptic2 as i64, d.elliptic3 as i64);
            let k = k as i64;
            let rr = (2 * k - 1) * (g - 1) + k * c + (k / 2) * e2 + (2 * k / 3) * e3;
            assert_eq!(d.dimension as i64, rr, "k = {k}, p = {p}");
        }
    }
}

proptest! {
    #[test]
    fn chi_divisor_sums(idx in 0usize..40) {
        let ps: Vec<u64> = primes(11, 200).collect();
        let p = ps[idx % ps.len()];
        let n = p * (p - 1);
        // every point lies in exactly one cycle
        let total: u64 = divisors(n)
            .into_iter()
            .filter_map(|w| cusp_data_character(p).unwrap().widths.get(&w).map(|m| w * m))
            .sum();
        prop_assert_eq!(total as usize, grassmannian_size(p));
    }

    #[test]
    fn unipotent_dims_grow_with_weight(k in 1u64..20, index in 1u64..200) {
        let a = dims_unipotent(k, index, true).unwrap();
        let b = dims_unipotent(k + 1, index, true).unwrap();
        prop_assert!(b.modular_forms >= a.modular_forms);
        prop_assert!(a.cusp_forms <= a.modular_forms);
    }
}
