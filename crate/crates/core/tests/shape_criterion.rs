//! The expanded biharmonic system against the matrix eigen-criterion.

use biharmonic::shape_algebra::{AdaptedShapeOperators, Criterion};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = ([f64; 3], f64, f64, f64, f64)> {
    (
        prop::array::uniform3(-3.0f64..3.0),
        -3.0f64..3.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn expanded_system_equals_matrix_form(p in params(), c in -1.0f64 / 3.0..5.0) {
        let (lambda, alpha, beta, gamma, delta) = p;
        let a = AdaptedShapeOperators::new(lambda, alpha, beta, gamma, delta);
        for criterion in [Criterion::Biharmonic { c, n: 3 }, Criterion::Minus4] {
            let matrix = a.criterion(criterion).residual;
            let expanded = a.expanded_residual(criterion);
            for i in 0..3 {
                prop_assert!((matrix[i] - expanded[i]).abs() < 1e-10 * matrix[i].abs().max(1.0));
            }
        }
    }

    #[test]
    fn residual_is_linear_in_the_trace(p in params(), c in -1.0f64 / 3.0..5.0, s in prop_oneof![-10.0f64..-0.1, 0.1f64..10.0]) {
        let (lambda, alpha, beta, gamma, delta) = p;
        let a = AdaptedShapeOperators::new(lambda, alpha, beta, gamma, delta);
        let k = Criterion::Biharmonic { c, n: 3 }.k();
        let m = a.matrices();
        let t = a.traces();
        let scaled: Vec<f64> = t.iter().map(|x| s * x).collect();
        let r = a.criterion_with_k(k);
        for i in 0..3 {
            let row: f64 = (0..3)
                .map(|j| (0..3).map(|l| (0..3).map(|n| m[l][i][n] * m[l][n][j]).sum::<f64>()).sum::<f64>() * scaled[j])
                .sum();
            let rs = row - k * scaled[i];
            prop_assert!((rs - s * r.residual[i]).abs() < 1e-9 * rs.abs().max(1.0));
        }
    }
}

#[test]
fn traceless_parameters_are_minimal() {
    // λ₁ + λ₂ + λ₃ = 0, α + γ = 0, β + δ = 0
    let a = AdaptedShapeOperators::new([1.0, -0.4, -0.6], 0.3, 0.2, -0.3, -0.2);
    let r = a.criterion(Criterion::Biharmonic { c: 1.0, n: 3 });
    assert!(r.is_minimal());
    assert!(r.is_solution());
    assert!(!r.is_proper());
}
