mod common;

use eadhm_core::constructions::{
    assemble_lift, lift_solve, quotient_adhm, random_adhm, random_commuting_pair, random_gauge, rng_from_seed,
    sample_representations, sample_stable, ENTRY_BOUND,
};
use eadhm_core::deformation::{
    build_cx, build_cx_form, build_rho, check_h0rho_injective, check_les_consistency, cohomology, expected_dimension,
    ComplexForm,
};
use eadhm_core::exactmat::{rat, RatMatrix, Subspace};
use eadhm_core::stability::{chamber_of, is_delta_stable, krylov_closure, make_param, ChamberLocation};
use eadhm_core::{DimVector, EnhancedRep};
use proptest::prelude::*;

fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(m, n)| {
        prop::collection::vec(-4i64..=4, m * n).prop_map(move |v| RatMatrix::from_fn(m, n, |i, j| rat(v[i * n + j])))
    })
}

fn small_dims() -> impl Strategy<Value = DimVector> {
    (1usize..=2, 1usize..=3)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), 1..=c))
        .prop_map(|(r, c, cp)| DimVector::new(r, c, cp).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_and_transpose(m in int_matrix(5, 5)) {
        let rank = m.rank();
        prop_assert_eq!(rank + m.kernel().dim(), m.cols());
        prop_assert_eq!(rank, m.transpose().rank());
        prop_assert!(rank <= m.rows().min(m.cols()));
        prop_assert_eq!(rank, common::rank_mod_p(&m));
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn solve_affine_solutions_solve(m in int_matrix(4, 5), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let x = eadhm_core::constructions::random_matrix(&mut rng, m.cols(), 1, 3).column(0);
        let b = m.mul_vec(&x);
        let (p, ker) = m.solve_affine(&b).expect("b lies in the image");
        prop_assert_eq!(m.mul_vec(&p), b);
        prop_assert_eq!(ker, m.kernel());
    }

    #[test]
    fn subspace_canonical_form(m in int_matrix(4, 4), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let g = eadhm_core::constructions::random_unimodular(&mut rng, m.cols());
        prop_assert_eq!(Subspace::span_columns(&m), Subspace::span_columns(&(&m * &g)));
    }

    #[test]
    fn sum_intersection_dimension(u in int_matrix(4, 3), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let v = eadhm_core::constructions::random_matrix(&mut rng, u.rows(), 2, 2);
        let (su, sv) = (Subspace::span_columns(&u), Subspace::span_columns(&v));
        prop_assert_eq!(su.sum(&sv).dim() + su.intersect(&sv).dim(), su.dim() + sv.dim());
        prop_assert!(su.sum(&sv).contains(&su) && su.contains(&su.intersect(&sv)));
    }

    #[test]
    fn krylov_closure_is_minimal_invariant(a in int_matrix(4, 4), seed in any::<u64>()) {
        prop_assume!(a.is_square() && a.rows() > 0);
        let n = a.rows();
        let mut rng = rng_from_seed(seed);
        let b = eadhm_core::constructions::random_matrix(&mut rng, n, n, 2);
        let seed_space = Subspace::span_columns(&eadhm_core::constructions::random_matrix(&mut rng, n, 1, 2));
        let s = krylov_closure(&a, &b, &seed_space);
        prop_assert!(s.contains(&seed_space));
        prop_assert!(s.is_invariant_under(&a) && s.is_invariant_under(&b));
        let mut words = vec![seed_space.basis().clone()];
        for _ in 0..n {
            let last = words.last().unwrap().clone();
            words.push((&a * &last).hstack(&(&b * &last)));
        }
        let mut span = Subspace::zero(n);
        for w in &words {
            span = span.sum(&Subspace::span_columns(w));
        }
        prop_assert_eq!(s, span);
    }

    #[test]
    fn json_roundtrip(d in small_dims(), seed in any::<u64>()) {
        for x in sample_representations(d, seed, 3) {
            prop_assert_eq!(EnhancedRep::from_json(&x.to_json()).unwrap(), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn complex_axioms_and_les(d in small_dims(), seed in any::<u64>()) {
        for x in sample_representations(d, seed, 2) {
            let cx = build_cx(&x).unwrap();
            let ds = cx.differentials();
            prop_assert!((&ds[1] * &ds[0]).is_zero() && (&ds[2] * &ds[1]).is_zero());
            prop_assert!(build_rho(&x).is_ok());
            let rep = cohomology(&cx);
            let alt: i64 = rep.h.iter().enumerate().map(|(i, &h)| if i % 2 == 0 { h as i64 } else { -(h as i64) }).sum();
            prop_assert_eq!(alt, rep.euler);
            prop_assert_eq!(check_les_consistency(&x, false).unwrap().alternating_sum, 0);
            if x.f().rank() == d.cprime {
                prop_assert!(check_h0rho_injective(&x));
            }
        }
    }

    #[test]
    fn differentials_match_oracle(d in small_dims(), seed in any::<u64>()) {
        for x in sample_representations(d, seed, 2) {
            let ours = build_cx(&x).unwrap();
            let theirs = common::cx_differentials(&x, d.cprime != 1);
            prop_assert_eq!(ours.differentials(), &theirs[..]);
            let general = build_cx_form(&x, ComplexForm::General).unwrap();
            prop_assert_eq!(general.differentials(), &common::cx_differentials(&x, true)[..]);
            prop_assert_eq!(&cohomology(&ours).h, &common::oracle_cohomology(&x, d.cprime != 1));
        }
    }

    #[test]
    fn gauge_invariance(d in small_dims(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed ^ 0x5eed);
        for x in sample_representations(d, seed, 2) {
            let y = random_gauge(&mut rng, &x);
            prop_assert!(y.residuals().is_zero());
            prop_assert_eq!(is_delta_stable(&x), is_delta_stable(&y));
            prop_assert_eq!(cohomology(&build_cx(&x).unwrap()), cohomology(&build_cx(&y).unwrap()));
        }
    }

    #[test]
    fn stable_points_have_perfect_obstruction_theory(d in small_dims(), seed in any::<u64>()) {
        for x in sample_stable(d, seed, 3) {
            let h = cohomology(&build_cx(&x).unwrap()).h;
            prop_assert_eq!((h[0], h[3]), (0, 0));
            let q = quotient_adhm(&x).unwrap();
            prop_assert!(q.satisfies_relation());
            prop_assert!(eadhm_core::stability::is_adhm_stable(&q));
        }
    }

    #[test]
    fn lift_section_property(d in small_dims(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let base = random_adhm(&mut rng, d.r, d.c - d.cprime);
        let (ap, bp) = random_commuting_pair(&mut rng, d.cprime);
        let sol = lift_solve(&base, &ap, &bp).unwrap();
        prop_assert_eq!(sol.unknowns(), d.cprime * (2 * (d.c - d.cprime) + d.r));
        prop_assert_eq!(sol.equations(), d.cprime * (d.c - d.cprime));
        let x = assemble_lift(&sol.sample(&mut rng, ENTRY_BOUND)).unwrap();
        prop_assert!(x.residuals().is_zero());
        prop_assert_eq!(quotient_adhm(&x).unwrap(), base);
    }

    #[test]
    fn chamber_verdict_is_constant(d in small_dims(), seed in any::<u64>(), t in 1i64..20, s in 1i64..20, u in 1i64..20) {
        let theta_prime = eadhm_core::exactmat::ratio(t, u);
        let theta = -&theta_prime - eadhm_core::exactmat::ratio(s, u);
        let p = make_param(theta, theta_prime, d);
        prop_assert_eq!(chamber_of(&p), ChamberLocation::Delta);
        for x in sample_representations(d, seed, 2) {
            prop_assert_eq!(
                eadhm_core::stability::is_stable_in_chamber(&x, &p).unwrap(),
                is_delta_stable(&x).unwrap()
            );
        }
    }
}

#[test]
fn euler_matches_expected_dimension() {
    for r in 1..=4 {
        for c in 1..=5 {
            for cp in 1..=c {
                let d = DimVector::new(r, c, cp).unwrap();
                let cx = build_cx(&EnhancedRep::zero(d)).unwrap();
                assert_eq!(-cx.euler(), expected_dimension(d).unwrap(), "{d}");
            }
        }
    }
}
