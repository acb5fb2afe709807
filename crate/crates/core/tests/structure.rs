//! Structure identities of the deformed sphere at random points.

use biharmonic::ambient::{AmbientVector, SasakianSphere};
use proptest::prelude::*;

const CURVATURES: [f64; 4] = [-2.0, 5.0 / 9.0, 1.0, 7.0];
const TOL: f64 = 1e-10;

fn unit(raw: &[f64]) -> AmbientVector<f64> {
    let v = AmbientVector::new(raw.to_vec());
    v.scale(1.0 / v.norm())
}

fn tangent(z: &AmbientVector<f64>, raw: &[f64]) -> AmbientVector<f64> {
    let w = AmbientVector::new(raw.to_vec());
    w.axpy(-w.dot(z), z)
}

fn vectors(count: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(-1.0f64..1.0, 8), count)
}

fn sphere(index: usize) -> SasakianSphere<f64> {
    SasakianSphere::with_curvature(3, CURVATURES[index]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn phi_squared_and_reeb(index in 0usize..4, raw in vectors(3)) {
        prop_assume!(raw[0].iter().map(|x| x * x).sum::<f64>() > 1e-2);
        let s = sphere(index);
        let z = unit(&raw[0]);
        let (u, v) = (tangent(&z, &raw[1]), tangent(&z, &raw[2]));
        let xi = s.xi(&z).unwrap();
        prop_assert!((s.eta(&z, &xi).unwrap() - 1.0).abs() < TOL);
        let phi2 = s.phi(&z, &s.phi(&z, &v).unwrap()).unwrap();
        let expected = (-&v).axpy(s.eta(&z, &v).unwrap(), &xi);
        prop_assert!((&phi2 - &expected).max_abs() < TOL);
        let (pu, pv) = (s.phi(&z, &u).unwrap(), s.phi(&z, &v).unwrap());
        let lhs = s.metric(&z, &pu, &pv).unwrap();
        let rhs = s.metric(&z, &u, &v).unwrap() - s.eta(&z, &u).unwrap() * s.eta(&z, &v).unwrap();
        prop_assert!((lhs - rhs).abs() < TOL);
    }

    #[test]
    fn first_bianchi_identity(index in 0usize..4, raw in vectors(4)) {
        prop_assume!(raw[0].iter().map(|x| x * x).sum::<f64>() > 1e-2);
        let s = sphere(index);
        let z = unit(&raw[0]);
        let (u, v, w) = (tangent(&z, &raw[1]), tangent(&z, &raw[2]), tangent(&z, &raw[3]));
        let sum = &(&s.curvature(&z, &u, &v, &w).unwrap() + &s.curvature(&z, &v, &w, &u).unwrap())
            + &s.curvature(&z, &w, &u, &v).unwrap();
        prop_assert!(sum.max_abs() < TOL);
    }

    #[test]
    fn curvature_is_skew_in_last_pair(index in 0usize..4, raw in vectors(5)) {
        prop_assume!(raw[0].iter().map(|x| x * x).sum::<f64>() > 1e-2);
        let s = sphere(index);
        let z = unit(&raw[0]);
        let t: Vec<_> = raw[1..].iter().map(|r| tangent(&z, r)).collect();
        let a = s.metric(&z, &s.curvature(&z, &t[0], &t[1], &t[2]).unwrap(), &t[3]).unwrap();
        let b = s.metric(&z, &s.curvature(&z, &t[0], &t[1], &t[3]).unwrap(), &t[2]).unwrap();
        prop_assert!((a + b).abs() < TOL);
    }
}

#[test]
fn curvature_parameter_matches_deformation() {
    for c in CURVATURES {
        let s = SasakianSphere::with_curvature(3, c).unwrap();
        assert_eq!(s.c(), 4.0 / s.a() - 3.0);
    }
    assert!(SasakianSphere::<f64>::with_curvature(3, -3.0).is_err());
}
