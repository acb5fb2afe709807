//! Jet derivatives against closed forms and finite differences.

use biharmonic::examples::{corollary_c1, UnitaryBasis};
use biharmonic::jets::{self, Jet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn phase_derivatives_match_powers_of_frequency() {
    for omega in [1.0, 2f64.sqrt(), 5f64.sqrt(), 3.0 * 2f64.sqrt() / 2.0] {
        let t0 = 0.37;
        let t = Jet::lift(t0, 0, 1, 5).unwrap();
        let (c, s) = (t.scale(omega).cos(), t.scale(omega).sin());
        for k in 0..=5 {
            let idx = [k];
            // d^k/dt^k cos(ωt) = ω^k cos(ωt + kπ/2)
            let phase = omega * t0 + k as f64 * std::f64::consts::FRAC_PI_2;
            let scale = omega.powi(k as i32);
            assert!((c.partial(&idx).unwrap() - scale * phase.cos()).abs() < 1e-13 * scale.max(1.0));
            assert!((s.partial(&idx).unwrap() - scale * phase.sin()).abs() < 1e-13 * scale.max(1.0));
        }
    }
}

fn central(f: impl Fn(f64) -> Vec<f64>, h: f64) -> Vec<f64> {
    let (a, b, c, d) = (f(-2.0 * h), f(-h), f(h), f(2.0 * h));
    (0..a.len()).map(|i| (a[i] - 8.0 * b[i] + 8.0 * c[i] - d[i]) / (12.0 * h)).collect()
}

#[test]
fn first_and_second_derivatives_match_finite_differences() {
    let x = corollary_c1(&UnitaryBasis::<f64>::standard(4));
    let mut rng = StdRng::seed_from_u64(11);
    let h = 1e-4;
    for _ in 0..20 {
        let p: Vec<f64> = (0..3).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let j = x.jets(&p, 2).unwrap();
        for axis in 0..3 {
            let shifted = |t: f64| {
                let mut q = p.clone();
                q[axis] += t;
                x.eval(&q).unwrap().into_coords()
            };
            let fd = central(shifted, h);
            let d = jets::values(&jets::diff_vec(&j, axis));
            assert!(fd.iter().zip(&d).all(|(a, b)| (a - b).abs() < 1e-6));
            let first = |t: f64| {
                let mut q = p.clone();
                q[axis] += t;
                jets::values(&jets::diff_vec(&x.jets(&q, 1).unwrap(), axis))
            };
            let fd2 = central(first, h);
            let d2 = jets::values(&jets::diff_vec(&jets::diff_vec(&j, axis), axis));
            assert!(fd2.iter().zip(&d2).all(|(a, b)| (a - b).abs() < 1e-6));
        }
    }
}
