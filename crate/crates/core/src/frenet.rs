//! Frenet apparatus of arc-length curves in the unit sphere.
//!
//! Covariant derivatives along the curve are `∇_T V = V′ + ⟨T, V⟩Γ`. The
//! iterated derivatives `∇ᵏT` are orthonormalized in jet arithmetic, so the
//! frame vectors carry their own derivatives and the last Frenet equation can
//! be checked directly.

use crate::ambient::{AmbientVector, SasakianSphere};
use crate::error::{Error, Result};
use crate::immersion::ParametricImmersion;
use crate::jets::{self, Jet};
use crate::scalar::Scalar;

pub const FRENET_JET_ORDER: usize = 5;
pub const SPEED_TOLERANCE: f64 = 1e-10;
pub const DEPENDENCE_TOLERANCE: f64 = 1e-8;
pub const INDETERMINATE_CEILING: f64 = 1e-6;
pub const CONSTANCY_TOLERANCE: f64 = 1e-8;
pub const FRAME_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct FrenetApparatus<T> {
    /// Osculating order `r`.
    pub order: usize,
    /// `curvatures[i][j]` is `κ_{i+1}` at the `j`-th sample.
    pub curvatures: Vec<Vec<T>>,
    /// `frames[j]` is `E₁..E_r` at the `j`-th sample.
    pub frames: Vec<Vec<AmbientVector<T>>>,
    pub positions: Vec<AmbientVector<T>>,
    /// Max over samples of `|∇_T E_r + κ_{r−1}E_{r−1}|`.
    pub frame_residual: T,
    /// Max over samples of `|⟨Eᵢ, Eⱼ⟩ − δᵢⱼ|`.
    pub orthonormality: T,
}

impl<T: Scalar> FrenetApparatus<T> {
    pub fn spread(&self, index: usize) -> T {
        let k = &self.curvatures[index];
        let (lo, hi) = k
            .iter()
            .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &x| (lo.min(x), hi.max(x)));
        hi - lo
    }

    pub fn mean(&self, index: usize) -> T {
        let k = &self.curvatures[index];
        k.iter().copied().sum::<T>() / T::lit(k.len() as f64)
    }

    pub fn max_spread(&self) -> T {
        (0..self.curvatures.len()).fold(T::zero(), |m, i| m.max(self.spread(i)))
    }

    pub fn is_helix(&self) -> bool {
        self.max_spread() < T::lit(CONSTANCY_TOLERANCE)
    }

    /// Mean curvatures after the constancy verdict.
    pub fn constant_curvatures(&self) -> Result<Vec<T>> {
        let spread = self.max_spread();
        if !(spread < T::lit(CONSTANCY_TOLERANCE)) {
            return Err(Error::NotConstant {
                spread: spread.to_f64_lossy(),
            });
        }
        Ok((0..self.curvatures.len()).map(|i| self.mean(i)).collect())
    }
}

fn covariant<T: Scalar>(v: &[Jet<T>], tangent: &[Jet<T>], position: &[Jet<T>]) -> Vec<Jet<T>> {
    let derivative = jets::diff_vec(v, 0);
    jets::axpy(&derivative, &jets::dot(tangent, v), position)
}

fn norm<T: Scalar>(v: &[T]) -> T {
    v.iter().map(|&x| x * x).sum::<T>().sqrt()
}

struct Sample<T> {
    order: usize,
    residuals: Vec<T>,
    frame: Vec<Vec<Jet<T>>>,
    tangent: Vec<Jet<T>>,
    position: Vec<Jet<T>>,
}

fn sample<T: Scalar>(curve: &ParametricImmersion<T>, s: T, max_order: usize) -> Result<Sample<T>> {
    let position = curve.jets(&[s], FRENET_JET_ORDER)?;
    let tangent = jets::diff_vec(&position, 0);
    let speed = norm(&jets::values(&tangent));
    if !((speed - T::one()).abs() < T::lit(SPEED_TOLERANCE)) {
        return Err(Error::NonUnitSpeed {
            deviation: (speed - T::one()).abs().to_f64_lossy(),
        });
    }
    let mut frame = vec![tangent.clone()];
    let mut residuals = vec![T::one()];
    let mut derivative = tangent.clone();
    for _ in 1..=max_order {
        derivative = covariant(&derivative, &tangent, &position);
        let mut r = derivative.clone();
        for e in &frame {
            let c = jets::dot(&r, e);
            r = jets::sub_vec(&r, &jets::scale_vec(e, &c));
        }
        let size = norm(&jets::values(&r));
        if size < T::lit(DEPENDENCE_TOLERANCE) {
            return Ok(Sample {
                order: frame.len(),
                residuals,
                frame,
                tangent,
                position,
            });
        }
        if size < T::lit(INDETERMINATE_CEILING) {
            return Err(Error::IndeterminateOrder {
                residual: size.to_f64_lossy(),
            });
        }
        if frame.len() == max_order {
            break;
        }
        let inv = jets::dot(&r, &r).sqrt().recip();
        frame.push(jets::scale_vec(&r, &inv));
        residuals.push(size);
    }
    Err(Error::OrderAboveMaximum { max: max_order })
}

/// Frenet apparatus on the sample points `s_grid`, for osculating order at
/// most `max_order` (at most 4).
pub fn frenet<T: Scalar>(curve: &ParametricImmersion<T>, s_grid: &[T], max_order: usize) -> Result<FrenetApparatus<T>> {
    if curve.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            actual: curve.dim(),
        });
    }
    if max_order == 0 || max_order > 4 {
        return Err(Error::InvalidParameter(format!("max_order must lie in 1..=4, got {max_order}")));
    }
    let mut order = None;
    let mut curvatures: Vec<Vec<T>> = Vec::new();
    let mut frames = Vec::new();
    let mut positions = Vec::new();
    let mut frame_residual = T::zero();
    let mut orthonormality = T::zero();
    for &s in s_grid {
        let sample = sample(curve, s, max_order)?;
        match order {
            None => {
                order = Some(sample.order);
                curvatures = vec![Vec::new(); sample.order - 1];
            }
            Some(r) if r != sample.order => {
                return Err(Error::IndeterminateOrder {
                    residual: DEPENDENCE_TOLERANCE,
                })
            }
            _ => {}
        }
        let r = sample.order;
        // ∇ᵏT = (κ₁⋯κ_k) E_{k+1} + lower terms
        for k in 1..r {
            curvatures[k - 1].push(sample.residuals[k] / sample.residuals[k - 1]);
        }
        let last = &sample.frame[r - 1];
        let mut defect = covariant(last, &sample.tangent, &sample.position);
        if r > 1 {
            let kappa = sample.residuals[r - 1] / sample.residuals[r - 2];
            defect = jets::add_vec(&defect, &jets::scale_vec(&sample.frame[r - 2], &defect[0].constant_like(kappa)));
        }
        frame_residual = frame_residual.max(norm(&jets::values(&defect)));
        let values: Vec<AmbientVector<T>> = sample
            .frame
            .iter()
            .map(|e| AmbientVector::new(jets::values(e)))
            .collect();
        for (i, a) in values.iter().enumerate() {
            for (j, b) in values.iter().enumerate() {
                let target = if i == j { T::one() } else { T::zero() };
                orthonormality = orthonormality.max((a.dot(b) - target).abs());
            }
        }
        frames.push(values);
        positions.push(AmbientVector::new(jets::values(&sample.position)));
    }
    let order = order.ok_or_else(|| Error::InvalidParameter("empty sample grid".into()))?;
    Ok(FrenetApparatus {
        order,
        curvatures,
        frames,
        positions,
        frame_residual,
        orthonormality,
    })
}

/// `g(E₂, φT)` on every sample, which must be constant.
pub fn phi_alignment<T: Scalar>(apparatus: &FrenetApparatus<T>, space: &SasakianSphere<T>) -> Result<T> {
    if apparatus.order < 2 {
        return Err(Error::OrderTooLow { order: apparatus.order });
    }
    let values = apparatus
        .frames
        .iter()
        .zip(&apparatus.positions)
        .map(|(frame, z)| {
            let phi_t = space.phi(z, &frame[0])?;
            space.metric(z, &frame[1], &phi_t)
        })
        .collect::<Result<Vec<T>>>()?;
    let (lo, hi) = values
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    if !(hi - lo < T::lit(CONSTANCY_TOLERANCE)) {
        return Err(Error::NotConstant {
            spread: (hi - lo).to_f64_lossy(),
        });
    }
    Ok(values.iter().copied().sum::<T>() / T::lit(values.len() as f64))
}

/// Evenly spaced arc-length samples on `[0, length)`.
pub fn arc_grid<T: Scalar>(length: T, count: usize) -> Vec<T> {
    (0..count)
        .map(|i| length * T::lit(i as f64) / T::lit(count as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use approx::assert_abs_diff_eq;

    #[test]
    fn great_circle_is_a_geodesic() {
        let circle = ParametricImmersion::new("great circle", 1, 1, |p: &[Jet<f64>]| {
            let z = p[0].zero_like();
            vec![p[0].cos(), p[0].sin(), z.clone(), z]
        });
        let a = frenet(&circle, &arc_grid(6.0, 7), 4).unwrap();
        assert_eq!(a.order, 1);
        assert!(a.curvatures.is_empty());
        assert!(a.frame_residual < 1e-12);
        assert!(matches!(
            phi_alignment(&a, &SasakianSphere::canonical(1)),
            Err(Error::OrderTooLow { order: 1 })
        ));
    }

    #[test]
    fn legendre_circle_has_unit_curvature() {
        let a = frenet(&examples::standard_legendre_circle::<f64>(), &arc_grid(4.0, 9), 4).unwrap();
        assert_eq!(a.order, 2);
        assert_abs_diff_eq!(a.constant_curvatures().unwrap()[0], 1.0, epsilon = 1e-12);
        assert!(a.frame_residual < 1e-7);
        assert!(a.orthonormality < 1e-9);
        let g = phi_alignment(&a, &SasakianSphere::canonical(3)).unwrap();
        assert_abs_diff_eq!(g, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn helix_builder_alignment_is_b() {
        let k = 0.5;
        let (_, b) = examples::helix_constants(k);
        for (sigma, expected) in [(-1.0, b), (1.0, -b)] {
            let frame = examples::helix_frame_s5(k, 0.2, sigma).unwrap();
            let helix = examples::legendre_helix(k, frame).unwrap();
            let a = frenet(&helix, &arc_grid(5.0, 9), 4).unwrap();
            assert_eq!(a.order, 3);
            let kappa = a.constant_curvatures().unwrap();
            assert_abs_diff_eq!(kappa[0], k, epsilon = 1e-10);
            assert_abs_diff_eq!(kappa[0] * kappa[0] + kappa[1] * kappa[1], 1.0, epsilon = 1e-10);
            let g = phi_alignment(&a, &SasakianSphere::canonical(2)).unwrap();
            assert_abs_diff_eq!(g, expected, epsilon = 1e-10);
        }
    }

    #[test]
    fn non_unit_speed_rejected() {
        let fast = ParametricImmersion::new("fast", 1, 1, |p: &[Jet<f64>]| {
            let t = p[0].scale(2.0);
            let z = p[0].zero_like();
            vec![t.cos(), t.sin(), z.clone(), z]
        });
        assert!(matches!(frenet(&fast, &[0.0], 4), Err(Error::NonUnitSpeed { .. })));
    }
}
