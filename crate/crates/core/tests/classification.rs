//! Solver determinism, rejection bookkeeping and robustness near the threshold.

use biharmonic::classifier::{self, RootStatus, SolverOptions};

fn quick() -> SolverOptions {
    SolverOptions {
        fallback_starts: 0,
        ..SolverOptions::default()
    }
}

#[test]
fn verdicts_do_not_depend_on_order_or_seed() {
    let base = classifier::solve_flat_with(1.0, &quick()).unwrap();
    for options in [
        SolverOptions { reverse_roots: true, ..quick() },
        SolverOptions { fallback_starts: 500, seed: 1, ..SolverOptions::default() },
        SolverOptions { fallback_starts: 500, seed: 99, reverse_roots: true },
    ] {
        let other = classifier::solve_flat_with(1.0, &options).unwrap();
        assert_eq!(other.tuples.len(), base.tuples.len());
        for (a, b) in other.tuples.iter().zip(&base.tuples) {
            assert_eq!(a.components().map(f64::to_bits), b.components().map(f64::to_bits));
        }
        assert_eq!(other.traces, base.traces);
    }
}

#[test]
fn every_tuple_resubstitutes() {
    for c in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let sol = classifier::solve_flat_with(c, &quick()).unwrap();
        for t in &sol.tuples {
            assert!(t.residual() < 1e-10, "c = {c}: residual {}", t.residual());
            assert!(t.lam < 0.0 && t.alpha > 0.0 && t.alpha >= t.delta && t.alpha > 2.0 * t.gamma);
        }
    }
    let m4 = classifier::solve_minus4_flat_with(&quick()).unwrap();
    assert!(m4.tuples.iter().all(|t| t.residual() < 1e-10));
}

#[test]
fn rejected_roots_carry_a_reason() {
    for c in [0.2, 1.0, 3.0] {
        let sol = classifier::solve_flat_with(c, &quick()).unwrap();
        for trace in &sol.traces {
            for root in &trace.roots {
                if let RootStatus::Rejected(why) = root.status {
                    assert!(!format!("{why:?}").is_empty());
                }
            }
            assert_eq!(trace.accepted().count() + trace.rejected().count()
                + trace.roots.iter().filter(|r| r.status == RootStatus::Boundary).count(), trace.roots.len());
        }
    }
}

#[test]
fn just_above_threshold_never_crashes() {
    for eps in [1e-9, 1e-6, 1e-3, 1e-2] {
        let c = -1.0 / 3.0 + eps;
        assert!(classifier::solve_flat_with(c, &quick()).is_ok());
        let _ = classifier::solve_caseii(c);
    }
    assert!(classifier::solve_flat(-1.0 / 3.0).unwrap().tuples.is_empty());
}
