mod common;

use proptest::prelude::*;

use phicong::exactalg::{MatrixN, ModInt};
use phicong::invariants::elliptic_counts;
use phicong::modgroup::eval_word;
use phicong::symplectic::{
    act_subspace, action_perms, grassmannian_size, group_order, is_isotropic, lagrangians,
    permutation, rho_matrices, Lagrangian, Perm, SpParams,
};

use common::{word_with, Oracle};

const CASES: [(u64, u64); 3] = [(11, 2), (13, 2), (17, 3)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn closed_form_actions(idx in 0usize..grassmannian_size(11), which in 0usize..3) {
        let (p, x) = CASES[which];
        let i = idx * grassmannian_size(p) / grassmannian_size(11);
        let l = Lagrangian::from_index(p, i).unwrap();
        let oracle = Oracle::new(p, x);
        let params = SpParams::new(p, x as i64, None).unwrap();
        let (s, t) = rho_matrices(&params).unwrap();
        let r = &s * &t;
        prop_assert_eq!(act_subspace(&s, l).unwrap(), oracle.s(l));
        prop_assert_eq!(act_subspace(&r, l).unwrap(), oracle.r(l));
    }
}

#[test]
fn closed_form_actions_exhaustive_small() {
    for (p, x) in CASES {
        let oracle = Oracle::new(p, x);
        let (s, t) = rho_matrices(&SpParams::new(p, x as i64, None).unwrap()).unwrap();
        let r = &s * &t;
        for l in lagrangians(p) {
            assert_eq!(act_subspace(&s, l).unwrap(), oracle.s(l), "S on {l:?}, p = {p}");
            assert_eq!(act_subspace(&r, l).unwrap(), oracle.r(l), "R on {l:?}, p = {p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sign_blind_action(w in word_with(10, 12)) {
        let params = SpParams::new(11, 2, None).unwrap();
        let (s, t) = rho_matrices(&params).unwrap();
        let m = eval_word(&w, &s, &t).unwrap();
        let neg = m.scale(&ModInt::new(-1, 11));
        prop_assert_eq!(permutation(&m).unwrap(), permutation(&neg).unwrap());
    }
}

#[test]
fn isotropy_of_all_points_and_images() {
    for (p, x) in [(11u64, 2i64), (13, 2)] {
        let (s, t) = rho_matrices(&SpParams::new(p, x, None).unwrap()).unwrap();
        for l in lagrangians(p) {
            assert!(is_isotropic(p, l));
            for m in [&s, &t] {
                assert!(is_isotropic(p, act_subspace(m, l).unwrap()));
            }
        }
    }
}

fn legendre_brute(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    if (1..p).any(|t| t * t % p == a) {
        1
    } else {
        -1
    }
}

#[test]
fn elliptic_point_counts() {
    for (p, x) in [(11u64, 2i64), (13, 2), (17, 3), (19, 2), (23, 5)] {
        let perms = action_perms(&SpParams::new(p, x, None).unwrap()).unwrap();
        let e2 = (p as i64 + 2 + legendre_brute(-1, p)) as usize;
        let e3 = ((p as i64 + 1) * (1 + legendre_brute(-3, p))) as usize;
        assert_eq!(perms.s.fixed_count(), e2, "ε₂ at p = {p}");
        assert_eq!(perms.r.fixed_count(), e3, "ε₃ at p = {p}");
        assert_eq!(elliptic_counts(p).unwrap(), (e2 as u64, e3 as u64));
    }
}

#[test]
fn group_order_is_presentation_independent() {
    let perms = action_perms(&SpParams::new(11, 2, None).unwrap()).unwrap();
    let want = group_order(&[perms.s.clone(), perms.t.clone()]);
    assert_eq!(want.to_string(), "12860654400");
    assert_eq!(group_order(&[perms.t.clone(), perms.s.clone()]), want);
    // relabel the points
    let n = perms.s.len();
    let shuffle = Perm::from_images((0..n as u32).map(|i| (i * 7 + 3) % n as u32).collect()).unwrap();
    assert_eq!(
        group_order(&[perms.s.conjugate(&shuffle), perms.t.conjugate(&shuffle)]),
        want
    );
    let g = perms.s.then(&perms.t);
    assert_eq!(group_order(&[perms.s.conjugate(&g), perms.t.clone()]), want);
    assert_eq!(group_order(std::slice::from_ref(&perms.t)).to_string(), "55");
}

#[test]
fn identity_matrix_acts_trivially() {
    let id = MatrixN::identity(4, &ModInt::new(0, 13));
    assert!(permutation(&id).unwrap().is_identity());
}
