mod common;

use common::{gf, random_central_unit, random_unit, Q};
use frobform::corpus;
use frobform::homothety::{central_norm_test, CentralNormOutcome, ProbeConfig, Verdict};
use frobform::{
    conjecture_probe, form_from_functional, homothety_probe, is_similar, nakayama, nth_root_in_k, square_class,
    twist, verify_morphism, verify_witness, FieldElement, FieldSpec, Matrix, Polynomial,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(Q), Just(gf(2)), Just(gf(7)), Just(gf(101))]
}

fn matrix(field: FieldSpec, n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..4, n * n).prop_map(move |v| {
        let rows = v.chunks(n).map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        Matrix::from_rows(field, rows)
    })
}

/// Upper triangular with eigenvalues from a small set, so repeated roots and
/// nontrivial invariant factors are common, then conjugated by `p`.
fn structured(field: FieldSpec, n: usize) -> impl Strategy<Value = Matrix> {
    (
        proptest::collection::vec(0i64..2, n),
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..3], n * n),
        matrix(field, n),
    )
        .prop_map(move |(diag, upper, p)| {
            let mut d = Matrix::zeros(field, n, n);
            for i in 0..n {
                d[(i, i)] = field.int(diag[i]);
                for j in i + 1..n {
                    d[(i, j)] = field.int(upper[i * n + j]);
                }
            }
            match p.inverse() {
                Some(pi) => &(&p * &d) * &pi,
                None => d,
            }
        })
}

fn shifted(a: &Matrix, c: &FieldElement) -> Matrix {
    &Matrix::identity(a.field(), a.rows()).scale(c) - a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, f.zero());
        match a.inv() {
            Some(inv) => prop_assert!((&a * &inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn square_classes_ignore_squares(f in field_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = f.sample_nonzero(&mut rng);
        let y = f.sample_nonzero(&mut rng);
        let cx = square_class(&x).unwrap();
        prop_assert_eq!(&square_class(&(&x * &(&y * &y))).unwrap(), &cx);
        // the representative lies in the class of x
        let ratio = &x * &cx.rep.inv().unwrap();
        prop_assert!(nth_root_in_k(&ratio, 2).is_some());
    }

    #[test]
    fn roots_of_powers(f in field_strategy(), seed in any::<u64>(), n in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = f.sample(&mut rng).pow(n as u64);
        let r = nth_root_in_k(&x, n).expect("a power has a root");
        prop_assert_eq!(r.pow(n as u64), x);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(Q, 4), b in matrix(Q, 4)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
        prop_assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
        prop_assert_eq!(a.inverse().is_some(), !a.det().unwrap().is_zero());
    }

    #[test]
    fn rank_nullity(a in matrix(gf(7), 5), rows in 1usize..6) {
        let cut = Matrix::from_rows(gf(7), (0..rows).map(|i| a.row(i)).collect());
        let kernel = cut.kernel_basis();
        prop_assert_eq!(cut.rank() + kernel.len(), 5);
        for v in &kernel {
            prop_assert!(cut.mul_vec(v).iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn invariant_factors_agree_with_determinants(a in structured(Q, 5)) {
        let chi = a.char_poly().unwrap();
        for c in -2..3 {
            let c = Q.int(c);
            prop_assert_eq!(chi.eval(&c), shifted(&a, &c).det().unwrap());
        }
        let factors = a.invariant_factors().unwrap();
        let product = factors.iter().fold(Polynomial::one(Q), |acc, f| &acc * f);
        prop_assert_eq!(&product, &chi);
        for w in factors.windows(2) {
            prop_assert!(w[1].div_rem(&w[0]).1.is_zero());
        }
        let minimal = a.minimal_polynomial().unwrap();
        prop_assert!(minimal.eval_matrix(&a).is_zero());
        prop_assert_eq!(factors.last().unwrap(), &minimal);
    }

    #[test]
    fn similarity_is_invariant_under_conjugation(a in structured(gf(5), 4), p in matrix(gf(5), 4)) {
        if let Some(pi) = p.inverse() {
            let b = &(&p * &a) * &pi;
            prop_assert!(is_similar(&a, &b).unwrap());
        }
        let bumped = &a + &Matrix::identity(gf(5), 4);
        prop_assert!(!is_similar(&a, &bumped).unwrap());
    }

    #[test]
    fn algebra_identities(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in [corpus::extended_nn(Q), corpus::nakayama_nesbitt(gf(7), &gf(7).int(3)).unwrap()] {
            let a = &e.algebra;
            let (x, y, z) = (a.sample_element(&mut rng), a.sample_element(&mut rng), a.sample_element(&mut rng));
            prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
            prop_assert_eq!(a.mul(&a.one(), &x), x.clone());
            prop_assert_eq!(a.apply(&a.left_mul(&x), &y), a.mul(&x, &y));
            prop_assert_eq!(a.apply(&a.right_mul(&x), &y), a.mul(&y, &x));
            let u = random_unit(a, &mut rng);
            let ui = a.try_inverse(&u).unwrap();
            prop_assert!(a.mul(&u, &ui) == a.one() && a.mul(&ui, &u) == a.one());
            let b = form_from_functional(a, &e.functional).unwrap();
            let b2 = twist(a, &b, &u).unwrap();
            let sigma = nakayama(a, &b2).unwrap();
            prop_assert!(verify_morphism(&sigma, a, a).unwrap());
            prop_assert_eq!(b2.eval(&x, &y), b.eval(&x, &a.mul(&y, &u)));
        }
    }

    #[test]
    fn constructed_homotheties_pass_the_norm_test(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in [corpus::truncated_poly(Q, 5).unwrap(), corpus::planar_quartic(gf(7), &gf(7).int(1), &gf(7).int(1), &gf(7).int(2)).unwrap()] {
            let a = &e.algebra;
            let b = form_from_functional(a, &e.functional).unwrap();
            let v = random_central_unit(a, &mut rng);
            let alpha = a.field().sample_nonzero(&mut rng);
            let u = a.mul(&v, &v).scale(&alpha);
            let outcome = central_norm_test(a, &b, &u, 16).unwrap();
            let passes = matches!(outcome, CentralNormOutcome::Passes { .. });
            prop_assert!(passes);
            let b2 = twist(a, &b, &u).unwrap();
            let report = homothety_probe(a, &b, &b2, ProbeConfig::default()).unwrap();
            let Verdict::WitnessFound(w) = report.verdict else {
                return Err(TestCaseError::fail("no witness for a constructed homothety"));
            };
            prop_assert!(verify_witness(&b, &b2, &w).unwrap());
        }
    }
}

#[test]
fn conjecture_probe_ignores_scheduling() {
    let e = corpus::extended_nn(Q);
    let b = form_from_functional(&e.algebra, &e.functional).unwrap();
    let parallel = conjecture_probe(&e.algebra, &b, 40, 3, ProbeConfig::default()).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let sequential = pool.install(|| conjecture_probe(&e.algebra, &b, 40, 3, ProbeConfig::default()).unwrap());
    let counts = |s: &frobform::homothety::ConjectureSummary| {
        (s.central_unobstructed, s.central_obstructed, s.noncentral_obstructed, s.noncentral_inconclusive)
    };
    assert_eq!(counts(&parallel), counts(&sequential));
    assert_eq!(parallel.trials, 40);
}

#[test]
fn obstructions_are_backed_by_a_failed_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let e = corpus::extended_nn(gf(7));
    let a = &e.algebra;
    let b = form_from_functional(a, &e.functional).unwrap();
    for _ in 0..40 {
        let u = random_unit(a, &mut rng);
        let b2 = twist(a, &b, &u).unwrap();
        let r = homothety_probe(a, &b, &b2, ProbeConfig::default()).unwrap();
        if let Verdict::Obstructed(reason) = r.verdict {
            use frobform::homothety::{ObstructionReason::*, Similarity};
            let d = &r.details;
            let backed = match reason {
                CentralNorm => d.central_norm.failed() || d.noncentral_symmetric_twist,
                NakayamaSimilarity => d.similarity == Similarity::NotSimilar,
                DetClass => d.det_classes.as_ref().is_some_and(|(x, y)| x != y),
                SymmetryMismatch => d.first_symmetric != d.second_symmetric,
            };
            assert!(backed, "{reason} without a failed check");
        }
    }
}
