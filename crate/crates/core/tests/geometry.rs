//! Geometric invariants of the example immersions.

use biharmonic::ambient::SasakianSphere;
use biharmonic::examples::{self, UnitaryBasis};
use biharmonic::frenet;
use biharmonic::immersion::{self, BitensionMode, Grid, ParametricImmersion};
use biharmonic::jets::Jet;

fn standard() -> UnitaryBasis<f64> {
    UnitaryBasis::standard(4)
}

fn all_examples(basis: &UnitaryBasis<f64>) -> Vec<ParametricImmersion<f64>> {
    let mut out = vec![examples::corollary_c1(basis), examples::s5_surface()];
    for i in 0..3 {
        out.push(examples::minus4_immersion(i, basis).unwrap());
    }
    let cylinders: Vec<_> = out.iter().map(examples::cylinder).collect();
    out.extend(cylinders);
    out
}

#[test]
fn every_example_lies_on_the_unit_sphere() {
    for basis in [standard(), UnitaryBasis::random(4, 3)] {
        for f in all_examples(&basis) {
            let grid = Grid::for_immersion(&f, 3);
            assert!(immersion::unit_norm_deviation(&f, &grid).unwrap() < 1e-13, "{}", f.name());
        }
    }
}

#[test]
fn second_fundamental_form_is_normal_and_reeb_free() {
    for f in [examples::corollary_c1(&standard()), examples::s5_surface()] {
        let grid = Grid::for_immersion(&f, 3);
        let (tangential, reeb) = immersion::second_fundamental_orthogonality(&f, &grid).unwrap();
        assert!(tangential < 1e-10 && reeb < 1e-10, "{}", f.name());
    }
}

#[test]
fn trace_b_ah_is_twice_h_on_the_torus() {
    let x = examples::corollary_c1(&standard());
    let grid = Grid::for_immersion(&x, 3);
    assert!(immersion::trace_b_ah_residual(&x, &grid, 2.0).unwrap() < 1e-8);
}

#[test]
fn verdicts_are_basis_independent() {
    for seed in [1, 2] {
        let basis = UnitaryBasis::random(4, seed);
        let x = examples::corollary_c1(&basis);
        let grid = Grid::for_immersion(&x, 3);
        assert!(immersion::bitension_sup(&x, &grid, BitensionMode::Biharmonic).unwrap() < 1e-8);
        assert!(immersion::check_integral(&x, &grid).unwrap().pass);
        let h: Vec<f64> = immersion::mean_curvature_norms(&x, &grid).unwrap();
        assert!(h.iter().all(|v| (v - 2.0 / 3.0).abs() < 1e-10));
        let y = examples::cylinder(&x);
        let product = examples::circle_decomposition(&y, &basis, &Grid::for_immersion(&y, 2)).unwrap();
        assert!(product.radius_sum_deviation() < 1e-12);
    }
}

#[test]
fn cylinder_over_great_circle_is_minimal() {
    let circle = ParametricImmersion::new("great circle", 1, 1, |p: &[Jet<f64>]| {
        let z = p[0].zero_like();
        vec![p[0].cos(), p[0].sin(), z.clone(), z]
    });
    let y = examples::cylinder(&circle);
    let grid = Grid::cell(&[vec![6.0, 0.0], vec![0.0, 6.0]], 3);
    assert!(immersion::mean_curvature_norms(&y, &grid).unwrap().iter().all(|h| h.abs() < 1e-12));
    assert!(immersion::bitension_sup(&y, &grid, BitensionMode::Biharmonic).unwrap() < 1e-12);
    let torus = examples::cylinder(&examples::corollary_c1(&standard()));
    let g = Grid::for_immersion(&torus, 2);
    assert!(immersion::mean_curvature_norms(&torus, &g).unwrap().iter().all(|h| (h - 0.5).abs() < 1e-10));
}

#[test]
fn halved_generator_breaks_periodicity() {
    let x = examples::corollary_c1(&standard());
    let grid = Grid::for_immersion(&x, 3);
    let mut lattice = examples::corollary_lattice::<f64>();
    assert!(examples::lattice_check(&x, &lattice, &grid).unwrap().pass);
    lattice[0].iter_mut().for_each(|v| *v /= 2.0);
    assert!(!examples::lattice_check(&x, &lattice, &grid).unwrap().pass);
}

#[test]
fn nonconstant_modulus_is_reported() {
    let x = examples::s5_surface::<f64>();
    let grid = Grid::for_immersion(&x, 3);
    let err = examples::circle_decomposition(&x, &UnitaryBasis::standard(3), &grid).unwrap_err();
    assert!(matches!(err, biharmonic::Error::ModulusNotConstant { .. }));
}

#[test]
fn coordinate_curves_of_every_flat_torus_are_helices() {
    let basis = standard();
    let tuples = [vec![examples::corollary_tuple()], examples::minus4_tuples().to_vec()].concat();
    for t in tuples {
        let torus = examples::FlatTorus::from_tuple(&t).unwrap().immersion("torus", &basis);
        for (axis, table) in biharmonic::classifier::curvature_tables(&t).iter().enumerate() {
            let curve = torus.coordinate_curve(axis, vec![0.2, -0.1, 0.4]);
            let a = frenet::frenet(&curve, &frenet::arc_grid(6.0, 6), 4).unwrap();
            assert!(a.frame_residual < 1e-7);
            let kappas = a.constant_curvatures().unwrap();
            assert_eq!(kappas.len(), table.curvatures.len());
            for (k, e) in kappas.iter().zip(&table.curvatures) {
                assert!((k - e.abs()).abs() < 1e-8, "{}: {k} vs {e}", table.curve);
            }
        }
    }
}

#[test]
fn helix_alignment_lies_strictly_inside_unit_interval() {
    for kappa1 in [0.2f64, 0.5, 0.9] {
        let (a, _) = examples::helix_constants(kappa1);
        for sigma in [1.0, -1.0] {
            let frame = examples::helix_frame_s5(kappa1, (2.0 * kappa1).sqrt() / a * 0.6, sigma).unwrap();
            let helix = examples::legendre_helix(kappa1, frame).unwrap();
            let app = frenet::frenet(&helix, &frenet::arc_grid(5.0, 6), 4).unwrap();
            let g: f64 = frenet::phi_alignment(&app, &SasakianSphere::canonical(2)).unwrap();
            assert!(g.abs() < 1.0 && g.abs() > 0.0);
            let grid = Grid::from_points(frenet::arc_grid(5.0, 6).into_iter().map(|s| vec![s]).collect());
            assert!(immersion::bitension_sup(&helix, &grid, BitensionMode::Biharmonic).unwrap() < 1e-8);
        }
    }
}
