use super::*;
use crate::constructions::{random_lift, rng_from_seed, vandermonde_rep, VandermondeParams};
use crate::exactmat::{rat, vectorize, RatMatrix};
use crate::quiver::{DimVector, EnhancedParts, EnhancedRep};
use crate::stability::{wall_witness_minus, wall_witness_plus};

fn dims(r: usize, c: usize, cp: usize) -> DimVector {
    DimVector::new(r, c, cp).unwrap()
}

fn vdm(r: usize, c: usize) -> EnhancedRep {
    vandermonde_rep(&VandermondeParams::standard(r, c).unwrap()).unwrap()
}

fn h(cx: &ChainComplex) -> Vec<usize> {
    cohomology(cx).h
}

#[test]
fn degree_dims_general_and_simplified() {
    let x = EnhancedRep::zero(dims(1, 2, 2));
    assert_eq!(build_cx(&x).unwrap().degree_dims(), &[8, 24, 18, 4]);
    let x = EnhancedRep::zero(dims(1, 2, 1));
    assert_eq!(build_cx(&x).unwrap().degree_dims(), &[5, 16, 9, 2]);
    assert_eq!(build_cx_form(&x, ComplexForm::General).unwrap().degree_dims(), &[5, 16, 10, 2]);
}

#[test]
fn general_form_misses_one_dimension_when_cprime_is_one() {
    let x = vdm(2, 3);
    let general = build_cx_form(&x, ComplexForm::General).unwrap();
    let simplified = build_cx(&x).unwrap();
    assert_eq!(-general.euler(), 2 * (2 * 3 - 1));
    assert_eq!(-simplified.euler(), expected_dimension(x.dims()).unwrap());
}

#[test]
fn build_rejects_broken_relations() {
    let d = dims(1, 1, 1);
    let mut parts = EnhancedParts::zeros(d);
    parts.f[(0, 0)] = rat(1);
    parts.j[(0, 0)] = rat(1);
    let x = EnhancedRep::new(d, parts).unwrap();
    assert_eq!(build_cx(&x).unwrap_err().code(), "not_a_representation");
    assert_eq!(build_cx(&EnhancedRep::zero(dims(1, 1, 0))).unwrap_err().code(), "invalid_dims");
}

#[test]
fn auxiliary_complexes() {
    let x = vdm(1, 2);
    let cxpp = build_cx_double_prime(&x).unwrap();
    assert_eq!(cxpp.degree_dims(), &[1, 2]);
    assert!(cxpp.differentials()[0].is_zero());
    assert_eq!(h(&cxpp), vec![1, 2]);

    let zero = EnhancedRep::zero(dims(1, 2, 2));
    assert_eq!(h(&build_cx_double_prime(&zero).unwrap()), vec![4, 8, 4]);
    assert_eq!(build_cx_pair(&zero).unwrap().degree_dims(), &[4, 10, 4]);

    let cxp = build_cx_prime(&x).unwrap();
    assert_eq!(cxp.degree_dims(), &[4, 12, 4]);
    assert_eq!(h(&cxp), vec![0, 4, 0]);
}

#[test]
fn rho_examples() {
    let x = vdm(1, 2);
    let rho = build_rho(&x).unwrap();
    let src0 = rho.source().layout(0).unwrap();
    let mut v = vec![rat(0); src0.dim()];
    v[src0.span(Summand::HPrime).0] = rat(1);
    assert_eq!(rho.component(0).mul_vec(&v), vectorize(x.f()));

    let src2 = rho.source().layout(2).unwrap();
    assert_eq!(src2.names(), vec!["c1"]);
    let out = rho.component(2).mul_vec(&vectorize(&RatMatrix::identity(2)));
    assert_eq!(out, vectorize(&-x.f()));

    assert!(build_rho(&vdm(1, 3)).is_ok());
    assert!(build_rho_form(&vdm(1, 3), ComplexForm::General).is_ok());
    assert!(build_rho(&wall_witness_plus(dims(2, 3, 2)).unwrap()).is_ok());
}

#[test]
fn vandermonde_cohomology() {
    for (r, c, h1) in [(1, 2, 4), (1, 3, 6), (2, 2, 7), (2, 3, 11)] {
        let rep = cohomology(&build_cx(&vdm(r, c)).unwrap());
        assert_eq!(rep.h, vec![0, h1, 0, 0], "r={r} c={c}");
        assert_eq!(rep.euler, -(h1 as i64));
    }
}

#[test]
fn expected_dimension_examples() {
    assert_eq!(expected_dimension(dims(2, 3, 2)), Ok(8));
    assert_eq!(expected_dimension(dims(1, 2, 1)), Ok(4));
    assert_eq!(expected_dimension(dims(1, 1, 1)), Ok(2));
    assert_eq!(expected_dimension(dims(1, 1, 0)).unwrap_err().code(), "invalid_dims");
}

#[test]
fn perfect_obstruction() {
    let rep = check_perfect_obstruction(&vdm(1, 3)).unwrap();
    assert!(rep.passed);
    assert_eq!(rep.cohomology.h, vec![0, 6, 0, 0]);
    let minus = wall_witness_minus(dims(1, 2, 1)).unwrap();
    assert_eq!(check_perfect_obstruction(&minus).unwrap_err().code(), "requires_stability");

    let mut rng = rng_from_seed(3);
    let mut found = 0;
    for _ in 0..20 {
        let x = random_lift(&mut rng, dims(1, 3, 1));
        if let Ok(rep) = check_perfect_obstruction(&x) {
            assert!(rep.passed);
            found += 1;
        }
    }
    assert!(found > 0);
}

#[test]
fn les_consistency_examples() {
    let mut rng = rng_from_seed(11);
    let samples = [
        vdm(1, 2),
        wall_witness_plus(dims(1, 2, 1)).unwrap(),
        wall_witness_minus(dims(1, 2, 2)).unwrap(),
        random_lift(&mut rng, dims(2, 3, 1)),
        random_lift(&mut rng, dims(1, 3, 2)),
    ];
    for x in &samples {
        let rep = check_les_consistency(x, true).unwrap();
        assert_eq!(rep.alternating_sum, 0);
        assert!(rep.passed(), "{:?}", rep);
        assert_eq!(rep.deep.as_ref().unwrap().len(), 10);
    }
}

#[test]
fn cx_is_the_shifted_cone_of_rho() {
    let mut rng = rng_from_seed(5);
    for d in [dims(1, 3, 1), dims(2, 3, 2)] {
        let x = random_lift(&mut rng, d);
        let cx = build_cx(&x).unwrap();
        let rho = build_rho(&x).unwrap();
        let (p, q) = (rho.source(), rho.target());
        for k in 0..3 {
            let (ck, ck1) = (cx.layout(k).unwrap(), cx.layout(k + 1).unwrap());
            let dx = cx.differential(k);
            let p_in = selection(p.layout(k).unwrap(), ck);
            let p_out = p.layout(k + 1).map(|l| selection(ck1, l));
            let q_out = selection(ck1, q.layout(k).unwrap());
            if let Some(p_out) = p_out {
                assert_eq!(&(&p_out * &dx) * &p_in, p.differential(k));
            }
            assert_eq!(&(&q_out * &dx) * &p_in, -&rho.component(k));
            if k >= 1 {
                let q_in = selection(q.layout(k - 1).unwrap(), ck);
                assert_eq!(&(&q_out * &dx) * &q_in, -&q.differential(k - 1));
            }
        }
    }
}

#[test]
fn h0rho_probe() {
    assert!(check_h0rho_injective(&vdm(1, 2)));
    assert!(check_h0rho_injective(&wall_witness_plus(dims(1, 3, 1)).unwrap()));
    assert!(!check_h0rho_injective(&wall_witness_minus(dims(1, 3, 1)).unwrap()));
}

#[test]
fn rho1_probe() {
    assert_eq!(check_rho1_surjective_on_cocycles(&vdm(1, 2)), Ok(true));
    assert_eq!(check_rho1_surjective_on_cocycles(&vdm(2, 3)), Ok(true));
    let d = dims(1, 1, 1);
    let mut parts = EnhancedParts::zeros(d);
    parts.i[(0, 0)] = rat(1);
    let decoupled = EnhancedRep::new(d, parts).unwrap();
    assert_eq!(check_rho1_surjective_on_cocycles(&decoupled), Ok(false));
    let plus = wall_witness_plus(dims(1, 2, 2)).unwrap();
    assert_eq!(check_rho1_surjective_on_cocycles(&plus).unwrap_err().code(), "unsupported");
}

#[test]
fn d1dual_probe() {
    assert!(check_d1dual_injective(&vdm(1, 3)));
    assert!(!check_d1dual_injective(&EnhancedRep::zero(dims(1, 1, 1))));
    assert!(check_d1dual_injective(&wall_witness_plus(dims(2, 2, 1)).unwrap()));
}

#[test]
fn complex_json_lists_summands() {
    let v = build_cx(&vdm(1, 1)).unwrap().to_json_value();
    assert_eq!(v["degree_dims"], serde_json::json!([2, 7, 4, 1]));
    assert_eq!(v["summands"][2], serde_json::json!(["c1", "c2", "c3", "c4"]));
    let report = cohomology(&build_cx(&vdm(1, 1)).unwrap()).to_json_value(Some(2));
    assert_eq!(report, serde_json::json!({"h": [0, 2, 0, 0], "euler": -2, "expected_dimension": 2}));
}
