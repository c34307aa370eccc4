use mcf_repsl2::poly::{mat2_det, mat2_mul};
use mcf_repsl2::transvectant::{omega_matrix, swap_matrix};
use mcf_repsl2::*;
use proptest::prelude::*;

const PRIMES: [u64; 4] = [5, 7, 11, 13];

fn invertible(p: u64) -> impl Strategy<Value = Mat2> {
    prop::array::uniform4(0..p)
        .prop_map(move |v| [[v[0], v[1]], [v[2], v[3]]])
        .prop_filter("singular", move |m| mat2_det(p, m) != 0)
}

fn prime_and_pair() -> impl Strategy<Value = (u64, Mat2, Mat2)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|p| (Just(p), invertible(p), invertible(p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_multiplicative((p, g, h) in prime_and_pair(), e in 0usize..5) {
        let gh = mat2_mul(p, &g, &h);
        prop_assert_eq!(action_matrix(p, e, &gh), action_matrix(p, e, &g).mul(&action_matrix(p, e, &h)));
    }

    #[test]
    fn omega_twists_by_determinant((p, c, _) in prime_and_pair(), d in 1usize..5, e in 1usize..5) {
        let om = omega_matrix(p, d, e);
        let lhs = action_matrix(p, d, &c).kron(&action_matrix(p, e, &c)).mul(&om);
        let rhs = om.mul(&action_matrix(p, d - 1, &c).kron(&action_matrix(p, e - 1, &c)));
        prop_assert_eq!(lhs, rhs.scale(mat2_det(p, &c)));
    }

    #[test]
    fn transvectants_are_equivariant_for_unimodular((p, c, _) in prime_and_pair(), d in 0usize..5, e in 0usize..5, r in 0usize..5) {
        prop_assume!(r <= d.min(e));
        prop_assume!(mat2_det(p, &c) == 1);
        let th = theta_matrix(p, d, e, r).unwrap();
        let lhs = action_matrix(p, d, &c).kron(&action_matrix(p, e, &c)).mul(&th);
        prop_assert_eq!(lhs, th.mul(&action_matrix(p, d + e - 2 * r, &c)));
    }

    #[test]
    fn swap_sign(p in prop::sample::select(PRIMES.to_vec()), d in 0usize..6, r in 0usize..6) {
        prop_assume!(r <= d);
        let th = theta_matrix(p, d, d, r).unwrap();
        let sign = if r % 2 == 0 { 1 } else { p - 1 };
        prop_assert_eq!(swap_matrix(p, d).mul(&th), th.scale(sign));
    }

    #[test]
    fn transvectant_of_monomials(p in prop::sample::select(PRIMES.to_vec()), a in 0usize..6, b in 0usize..6, r in 0usize..6) {
        prop_assume!(r <= a.min(b));
        // Ω(x^a ⊗ y^b) = a b x^{a−1} ⊗ y^{b−1}, since ∂y x^a = ∂x y^b = 0.
        let t = transvectant(r, &Form::monomial(p, a, 0), &Form::monomial(p, 0, b)).unwrap();
        let mut expect = 1u64;
        for k in 0..r {
            expect = expect * ((a - k) * (b - k)) as u64 % p;
        }
        let mut coeffs = vec![0u64; a + b - 2 * r + 1];
        coeffs[b - r] = expect;
        prop_assert_eq!(t.coeffs, coeffs);
    }
}

#[test]
fn dimensions_are_conserved_everywhere() {
    for p in PRIMES {
        for d in 0..p as usize {
            for e in 0..=d {
                if d + e <= p as usize - 1 {
                    let dec = clebsch_gordan_decompose(p, d, e).unwrap();
                    let dims: usize = dec.degrees().iter().map(|k| k + 1).sum();
                    assert_eq!(dims, (d + 1) * (e + 1));
                }
            }
        }
    }
}

#[test]
fn middle_summand_in_exterior_square() {
    // For d + 1 = (p − 1)/2, V_d occurs in Λ²(V_d) exactly when d ≡ 2 mod 4.
    for p in [5u64, 7, 11, 13, 17, 19] {
        let d = (p as usize - 1) / 2 - 1;
        let split = lambda2_s2_decompose(p, d).unwrap();
        assert!(split.holds());
        assert_eq!(split.lambda2_degrees().contains(&d), d % 4 == 2, "p = {p}, d = {d}");
    }
}

#[test]
fn stated_summand_lists() {
    for p in PRIMES {
        for d in 0..=(p as usize - 1) / 2 {
            let split = lambda2_s2_decompose(p, d).unwrap();
            let (a, b) = ((2 * d) % 4, (2 * d + 2) % 4);
            let s2: Vec<usize> = (0..=2 * d).rev().step_by(4).filter(|&k| k >= a).collect();
            assert_eq!(split.s2_degrees(), s2);
            if d >= 1 {
                let l2: Vec<usize> = (0..=2 * d - 2).rev().step_by(4).filter(|&k| k >= b).collect();
                assert_eq!(split.lambda2_degrees(), l2, "p = {p}, d = {d}");
            } else {
                assert!(split.lambda2_degrees().is_empty());
            }
        }
    }
}

#[test]
fn torus_fixed_dimension_by_parity() {
    for p in PRIMES {
        for e in 0..p as usize {
            let d = e + 1;
            let t = torus_fixed_points(p, e).unwrap();
            let expect = if d == p as usize {
                3
            } else if d % 2 == 1 {
                1
            } else {
                0
            };
            assert_eq!(t.dim, expect, "p = {p}, e = {e}");
            if d % 2 == 1 && d < p as usize {
                assert_eq!(t.positions, vec![e / 2]);
            }
        }
    }
}

#[test]
fn weyl_and_unipotent_generate_the_expected_group_order() {
    // Orbit of the identity under right multiplication: |SL₂(5)| = 120.
    use std::collections::BTreeSet;
    let p = 5;
    let m = build_ve(p, 1).unwrap();
    let gens: Vec<Mat2> = m.generators.iter().take(2).map(|g| g.matrix).collect();
    let mut seen = BTreeSet::from([[[1u64, 0], [0, 1]]]);
    let mut frontier = vec![[[1u64, 0], [0, 1]]];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = mat2_mul(p, &x, g);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    assert_eq!(seen.len(), 120);
}
