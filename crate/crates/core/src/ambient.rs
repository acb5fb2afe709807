//! Sasakian structure of the sphere `S^{2n+1} ⊂ C^{n+1}`.
//!
//! Points and tangent vectors are real vectors of length `2n+2` in the
//! ordering `(x¹..x^{n+1}, y¹..y^{n+1})`, `z_k = x^k + i y^k`. The canonical
//! tensors `ξ₀ = -𝒥z`, `η₀ = <·, ξ₀>`, `φ₀ = s∘𝒥` are implemented once; the
//! deformed structure with parameter `a > 0` wraps them:
//! `ξ = ξ₀/a`, `η = aη₀`, `φ = φ₀`, `g = a g₀ + a(a-1) η₀⊗η₀`, and has
//! constant φ-sectional curvature `c = 4/a - 3`.

use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const SPHERE_TOLERANCE: f64 = 1e-12;
pub const TANGENCY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct AmbientVector<T>(Vec<T>);

impl<T: Scalar> AmbientVector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![T::zero(); len])
    }

    /// Unit vector along coordinate `index`.
    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = T::one();
        v
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).sum()
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: T) -> Self {
        Self(self.0.iter().map(|&x| x * s).collect())
    }

    /// `self + s * other`
    pub fn axpy(&self, s: T, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a + s * b).collect())
    }

    pub fn max_abs(&self) -> T {
        crate::scalar::max_abs(self.0.iter().copied())
    }
}

impl<T> Index<usize> for AmbientVector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Scalar> Add for &AmbientVector<T> {
    type Output = AmbientVector<T>;
    fn add(self, rhs: Self) -> AmbientVector<T> {
        AmbientVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl<T: Scalar> Sub for &AmbientVector<T> {
    type Output = AmbientVector<T>;
    fn sub(self, rhs: Self) -> AmbientVector<T> {
        AmbientVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl<T: Scalar> Mul<T> for &AmbientVector<T> {
    type Output = AmbientVector<T>;
    fn mul(self, rhs: T) -> AmbientVector<T> {
        self.scale(rhs)
    }
}

impl<T: Scalar> Neg for &AmbientVector<T> {
    type Output = AmbientVector<T>;
    fn neg(self) -> AmbientVector<T> {
        self.scale(-T::one())
    }
}

/// Splits real and imaginary parts into the `(x..., y...)` coordinate order.
///
/// This is the single place that fixes how `C^{n+1}` sits inside `R^{2n+2}`.
pub fn real_coordinates<U>(re: Vec<U>, im: Vec<U>) -> Vec<U> {
    assert_eq!(re.len(), im.len(), "real and imaginary parts differ in length");
    let mut out = re;
    out.extend(im);
    out
}

/// Inverse of [`real_coordinates`].
pub fn split_coordinates<U: Clone>(coords: &[U]) -> (Vec<U>, Vec<U>) {
    assert!(coords.len().is_multiple_of(2), "odd real dimension");
    let half = coords.len() / 2;
    (coords[..half].to_vec(), coords[half..].to_vec())
}

pub fn from_complex<T: Scalar>(z: &[Complex<T>]) -> AmbientVector<T> {
    AmbientVector(real_coordinates(
        z.iter().map(|c| c.re).collect(),
        z.iter().map(|c| c.im).collect(),
    ))
}

pub fn to_complex<T: Scalar>(v: &AmbientVector<T>) -> Vec<Complex<T>> {
    let (re, im) = split_coordinates(&v.0);
    re.into_iter().zip(im).map(|(r, i)| Complex::new(r, i)).collect()
}

/// The usual complex structure `𝒥(x, y) = (-y, x)`, i.e. multiplication by `i`.
pub fn complex_structure<T: Scalar>(v: &AmbientVector<T>) -> Result<AmbientVector<T>> {
    if !v.len().is_multiple_of(2) || v.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: v.len() + 1,
            actual: v.len(),
        });
    }
    let (x, y) = split_coordinates(&v.0);
    Ok(AmbientVector(real_coordinates(
        y.into_iter().map(|c| -c).collect(),
        x,
    )))
}

/// `S^{2n+1}` with the Tanno-deformed Sasakian structure of parameter `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SasakianSphere<T> {
    n: usize,
    a: T,
}

impl<T: Scalar> SasakianSphere<T> {
    pub fn new(n: usize, a: T) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if !(a > T::zero()) || !a.is_finite() {
            return Err(Error::InvalidParameter(format!("a = {a} must be positive")));
        }
        Ok(Self { n, a })
    }

    pub fn canonical(n: usize) -> Self {
        Self::new(n, T::one()).expect("n > 0")
    }

    /// Structure with φ-sectional curvature `c > -3`, i.e. `a = 4/(c+3)`.
    pub fn with_curvature(n: usize, c: T) -> Result<Self> {
        if !(c > T::lit(-3.0)) {
            return Err(Error::InvalidParameter(format!("c = {c} must exceed -3")));
        }
        Self::new(n, T::lit(4.0) / (c + T::lit(3.0)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> T {
        self.a
    }

    /// φ-sectional curvature, always derived from `a`.
    pub fn c(&self) -> T {
        T::lit(4.0) / self.a - T::lit(3.0)
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.n + 2
    }

    fn check_len(&self, v: &AmbientVector<T>) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                actual: v.len(),
            });
        }
        Ok(())
    }

    fn check_point(&self, z: &AmbientVector<T>) -> Result<()> {
        self.check_len(z)?;
        let deviation = (z.norm() - T::one()).abs();
        if !(deviation <= T::lit(SPHERE_TOLERANCE)) {
            return Err(Error::NotOnSphere {
                deviation: deviation.to_f64_lossy(),
            });
        }
        Ok(())
    }

    fn check_tangent(&self, z: &AmbientVector<T>, v: &AmbientVector<T>) -> Result<()> {
        self.check_len(v)?;
        let inner = z.dot(v);
        if !(inner.abs() <= T::lit(TANGENCY_TOLERANCE)) {
            return Err(Error::NotTangent {
                inner: inner.to_f64_lossy(),
            });
        }
        Ok(())
    }

    fn xi0(z: &AmbientVector<T>) -> AmbientVector<T> {
        -&complex_structure(z).expect("even dimension checked")
    }

    fn eta0(z: &AmbientVector<T>, v: &AmbientVector<T>) -> T {
        v.dot(&Self::xi0(z))
    }

    fn phi0(z: &AmbientVector<T>, v: &AmbientVector<T>) -> AmbientVector<T> {
        let jv = complex_structure(v).expect("even dimension checked");
        let radial = jv.dot(z);
        jv.axpy(-radial, z)
    }

    pub fn xi(&self, z: &AmbientVector<T>) -> Result<AmbientVector<T>> {
        self.check_point(z)?;
        Ok(Self::xi0(z).scale(self.a.recip()))
    }

    pub fn phi(&self, z: &AmbientVector<T>, v: &AmbientVector<T>) -> Result<AmbientVector<T>> {
        self.check_point(z)?;
        self.check_tangent(z, v)?;
        Ok(Self::phi0(z, v))
    }

    pub fn eta(&self, z: &AmbientVector<T>, v: &AmbientVector<T>) -> Result<T> {
        self.check_point(z)?;
        self.check_tangent(z, v)?;
        Ok(self.a * Self::eta0(z, v))
    }

    pub fn metric(&self, z: &AmbientVector<T>, u: &AmbientVector<T>, v: &AmbientVector<T>) -> Result<T> {
        self.check_point(z)?;
        self.check_tangent(z, u)?;
        self.check_tangent(z, v)?;
        Ok(self.metric_unchecked(z, u, v))
    }

    fn metric_unchecked(&self, z: &AmbientVector<T>, u: &AmbientVector<T>, v: &AmbientVector<T>) -> T {
        self.a * u.dot(v) + self.a * (self.a - T::one()) * Self::eta0(z, u) * Self::eta0(z, v)
    }

    /// Curvature tensor `R(u, v)w` of the Sasakian space form `N(c)`.
    pub fn curvature(
        &self,
        z: &AmbientVector<T>,
        u: &AmbientVector<T>,
        v: &AmbientVector<T>,
        w: &AmbientVector<T>,
    ) -> Result<AmbientVector<T>> {
        self.check_point(z)?;
        for x in [u, v, w] {
            self.check_tangent(z, x)?;
        }
        let c = self.c();
        let g = |x: &AmbientVector<T>, y: &AmbientVector<T>| self.metric_unchecked(z, x, y);
        let eta = |x: &AmbientVector<T>| self.a * Self::eta0(z, x);
        let xi = Self::xi0(z).scale(self.a.recip());
        let (phi_u, phi_v, phi_w) = (Self::phi0(z, u), Self::phi0(z, v), Self::phi0(z, w));

        let constant = u.scale(g(w, v)).axpy(-g(w, u), v);
        let contact = v
            .scale(eta(w) * eta(u))
            .axpy(-eta(w) * eta(v), u)
            .axpy(g(w, u) * eta(v), &xi)
            .axpy(-g(w, v) * eta(u), &xi)
            .axpy(g(w, &phi_v), &phi_u)
            .axpy(-g(w, &phi_u), &phi_v)
            .axpy(T::lit(2.0) * g(u, &phi_v), &phi_w);
        let four = T::lit(4.0);
        Ok(constant
            .scale((c + T::lit(3.0)) / four)
            .axpy((c - T::one()) / four, &contact))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(c: &[f64]) -> AmbientVector<f64> {
        AmbientVector::new(c.to_vec())
    }

    #[test]
    fn complex_structure_examples() {
        assert_eq!(complex_structure(&v(&[1.0, 0.0, 0.0, 0.0])).unwrap(), v(&[0.0, 0.0, 1.0, 0.0]));
        let x = v(&[1.0, 2.0, 3.0, 4.0]);
        let jj = complex_structure(&complex_structure(&x).unwrap()).unwrap();
        assert_eq!(jj, -&x);
        assert!(complex_structure(&v(&[1.0, 2.0, 3.0])).is_err());
    }

    #[test]
    fn reeb_field_examples() {
        let z = v(&[1.0, 0.0, 0.0, 0.0]);
        let canonical = SasakianSphere::<f64>::canonical(1);
        assert_eq!(canonical.xi(&z).unwrap(), v(&[0.0, 0.0, -1.0, 0.0]));
        let deformed = SasakianSphere::new(1, 4.0).unwrap();
        assert_abs_diff_eq!(deformed.c(), -2.0);
        assert_eq!(deformed.xi(&z).unwrap(), v(&[0.0, 0.0, -0.25, 0.0]));
        assert!(matches!(canonical.xi(&v(&[2.0, 0.0, 0.0, 0.0])), Err(Error::NotOnSphere { .. })));
    }

    #[test]
    fn phi_and_eta_examples() {
        let s = SasakianSphere::<f64>::canonical(1);
        let z = v(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(s.phi(&z, &v(&[0.0, 1.0, 0.0, 0.0])).unwrap(), v(&[0.0, 0.0, 0.0, 1.0]));
        assert_abs_diff_eq!(s.eta(&z, &v(&[0.0, 0.0, -1.0, 0.0])).unwrap(), 1.0);
        assert!(matches!(s.phi(&z, &v(&[1.0, 0.0, 0.0, 0.0])), Err(Error::NotTangent { .. })));
        let xi = s.xi(&z).unwrap();
        assert_abs_diff_eq!(s.phi(&z, &xi).unwrap().norm(), 0.0);
    }

    #[test]
    fn unit_reeb_in_deformed_metric() {
        let s = SasakianSphere::new(2, 9.0_f64).unwrap();
        let mut z = v(&[0.3, -0.2, 0.5, 0.1, 0.7, -0.2]);
        z = z.scale(z.norm().recip());
        let xi = s.xi(&z).unwrap();
        assert_abs_diff_eq!(s.metric(&z, &xi, &xi).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn flat_curvature_block_vanishes_at_c_one() {
        let s = SasakianSphere::<f64>::canonical(1);
        let z = v(&[1.0, 0.0, 0.0, 0.0]);
        let (e1, e2, e3) = (v(&[0.0, 1.0, 0.0, 0.0]), v(&[0.0, 0.0, 1.0, 0.0]), v(&[0.0, 0.0, 0.0, 1.0]));
        // R(e1, e2)e2 = e1 on the unit sphere
        assert_eq!(s.curvature(&z, &e1, &e2, &e2).unwrap(), e1);
        assert_eq!(s.curvature(&z, &e1, &e2, &e3).unwrap(), v(&[0.0; 4]));
    }
}
