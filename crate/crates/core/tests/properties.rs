use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superharrison::algebra::{
    exterior_algebra, multiply, self_module, tensor_product, truncated_polynomial, DualNumber,
};
use superharrison::cochain::{hochschild_coboundary, hochschild_dim, Cochain};
use superharrison::combinatorics::{
    binomial, enumerate_shuffles, is_shuffle, odd_subpermutation, permutation_sign, sigma_o_sign,
    ParityVector, Permutation, Sign,
};
use superharrison::deformation::random_parity_cochain;
use superharrison::exactla::{
    kernel_basis, quotient_representatives, rank, ratio, solve, Rational, RationalMatrix, SubspaceBasis,
};
use superharrison::io::{algebra_to_json, cochain_to_json, parse_algebra, parse_cochain};
use superharrison::SuperAlgebra;

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

/// Mostly-zero entries so ranks vary.
fn sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![3 => Just(Rational::zero()), 2 => rational()]
}

fn matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(sparse_rational(), r * c)
            .prop_map(move |data| RationalMatrix::from_vec(r, c, data).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_zero_based(v).unwrap())
}

fn corpus() -> Vec<SuperAlgebra> {
    vec![
        exterior_algebra(1).unwrap(),
        exterior_algebra(2).unwrap(),
        truncated_polynomial(2).unwrap(),
        truncated_polynomial(3).unwrap(),
        tensor_product(&truncated_polynomial(2).unwrap(), &exterior_algebra(1).unwrap()).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(40)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn solve_agrees_with_membership(m in matrix(8), x in prop::collection::vec(rational(), 8)) {
        let x = &x[..m.cols()];
        let b = m.mul_vec(x).unwrap();
        let y = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn quotient_representatives_complete_a_basis(m in matrix(10)) {
        // Z = everything, B = image of m
        let ambient = m.rows();
        let identity = RationalMatrix::identity(ambient);
        let z = SubspaceBasis::span(ambient, (0..ambient).map(|r| identity.row(r).to_vec()).collect()).unwrap();
        let b = SubspaceBasis::span(ambient, (0..m.cols()).map(|c| m.column(c)).collect()).unwrap();
        let q = quotient_representatives(&z, &b).unwrap();
        prop_assert_eq!(q.dim() + b.dim(), ambient);
        let mut rows = b.vectors().to_vec();
        rows.extend(q.vectors().iter().cloned());
        prop_assert_eq!(rank(&RationalMatrix::from_rows(ambient, rows).unwrap()), ambient);
    }

    #[test]
    fn dual_numbers_truncate_polynomial_products(a0 in rational(), a1 in rational(), b0 in rational(), b1 in rational()) {
        let x = DualNumber::new(a0.clone(), a1.clone());
        let y = DualNumber::new(b0.clone(), b1.clone());
        let p = &x * &y;
        prop_assert_eq!(p.c0, &a0 * &b0);
        prop_assert_eq!(p.c1, &a0 * &b1 + &a1 * &b0);
        prop_assert_eq!((&x + &y).c1, &a1 + &b1);
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn multiplication_is_bilinear(which in 0usize..5, xs in prop::collection::vec(rational(), 12)) {
        let a = &corpus()[which];
        let d = a.dim();
        let (x, rest) = xs.split_at(d);
        let (x2, rest) = rest.split_at(d);
        let y = &rest[..d];
        let sum: Vec<Rational> = x.iter().zip(x2).map(|(p, q)| p + q).collect();
        let lhs = multiply(a, &sum, y).unwrap();
        let rhs: Vec<Rational> = multiply(a, x, y).unwrap().into_iter()
            .zip(multiply(a, x2, y).unwrap())
            .map(|(p, q)| p + q)
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_is_trivial_on_identity_and_even_slots(p in permutation(6), bits in prop::collection::vec(0u8..2, 6)) {
        let v = ParityVector::from_bits(&bits).unwrap();
        prop_assert_eq!(sigma_o_sign(&Permutation::identity(6), &v).unwrap(), Sign::Plus);
        prop_assert_eq!(sigma_o_sign(&p, &ParityVector::even(6)).unwrap(), Sign::Plus);
        prop_assert_eq!(sigma_o_sign(&p, &ParityVector::odd(6)).unwrap(), permutation_sign(&p));
    }

    #[test]
    fn inverse_composes_to_identity(p in permutation(7)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(permutation_sign(&p), permutation_sign(&p.inverse()));
    }

    #[test]
    fn coboundary_of_random_cochains_squares_to_zero(which in 0usize..5, n in 0usize..3, seed in any::<u64>()) {
        let a = &corpus()[which];
        let m = self_module(a);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_parity_cochain(a, &m, n, &mut rng).unwrap();
        let d = hochschild_coboundary(a, &m, &f).unwrap();
        prop_assert!(hochschild_coboundary(a, &m, &d).unwrap().is_zero());
        prop_assert!(d.is_parity_preserving(a, &m));
    }

    #[test]
    fn cochain_files_round_trip(which in 0usize..5, n in 0usize..3, coeffs in prop::collection::vec(sparse_rational(), 64)) {
        let a = &corpus()[which];
        let m = self_module(a);
        let len = hochschild_dim(a, &m, n).unwrap();
        let f = Cochain::from_coeffs(a, &m, n, coeffs.iter().cycle().take(len).cloned().collect()).unwrap();
        prop_assert_eq!(parse_cochain(a, &m, &cochain_to_json(a, &m, &f)).unwrap(), f);
    }
}

/// Odd indices α and the positions β read straight off the definition, with
/// the sign computed by counting inversions of the image sequence.
fn brute_force_odd_sign(images: &[usize], bits: &[u8]) -> (Vec<usize>, Vec<usize>, bool) {
    let alpha: Vec<usize> = (0..bits.len()).filter(|&i| bits[i] == 1).collect();
    let beta: Vec<usize> = (0..images.len()).filter(|&m| bits[images[m]] == 1).collect();
    let seq: Vec<usize> = beta.iter().map(|&m| images[m]).collect();
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    (alpha, seq, inversions % 2 == 1)
}

#[test]
fn odd_subpermutation_matches_brute_force_on_sym5() {
    use itertools::Itertools;
    for images in (0..5).permutations(5) {
        let p = Permutation::from_zero_based(images.clone()).unwrap();
        for v in ParityVector::all(5) {
            let bits: Vec<u8> = v.as_slice().iter().map(|b| b.bit()).collect();
            let (alpha, seq, negative) = brute_force_odd_sign(&images, &bits);
            let o = odd_subpermutation(&p, &v).unwrap();
            assert_eq!(o.domain, alpha);
            assert_eq!(o.images, seq);
            let expected = if negative { Sign::Minus } else { Sign::Plus };
            assert_eq!(sigma_o_sign(&p, &v).unwrap(), expected, "{images:?} {bits:?}");
        }
    }
}

#[test]
fn shuffle_enumeration_invariants() {
    for n in 2..=7 {
        for p in 1..n {
            let all = enumerate_shuffles(n, p).unwrap();
            assert_eq!(all.len(), binomial(n, p));
            assert!(all.iter().all(|s| is_shuffle(s.perm(), p).unwrap()));
            let firsts: Vec<Vec<usize>> = all.iter().map(|s| s.perm().images()[..p].to_vec()).collect();
            assert!(firsts.windows(2).all(|w| w[0] < w[1]), "lexicographic and distinct");
        }
    }
    assert!(enumerate_shuffles(3, 0).is_err());
    assert!(enumerate_shuffles(3, 3).is_err());
}

#[test]
fn algebra_files_round_trip_for_the_corpus() {
    for a in corpus() {
        assert_eq!(parse_algebra(&algebra_to_json(&a)).unwrap(), a);
    }
}
