//! Truncated multivariate Taylor arithmetic.
//!
//! A [`Jet`] stores every Taylor coefficient `f^(α)(p) / α!` of total degree
//! at most `order` in up to [`MAX_VARS`] variables. Monomials are laid out in
//! graded order, so the coefficient vector of a lower-order jet is a prefix of
//! the higher-order one; binary operations truncate to the smaller order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_VARS: usize = 4;
pub const MAX_ORDER: usize = 5;

type Exponents = [u8; MAX_VARS];

/// Monomial layout and product table for one `(vars, order)` pair.
pub struct JetShape {
    vars: usize,
    order: usize,
    monomials: Vec<Exponents>,
    lookup: HashMap<Exponents, usize>,
    // (lhs, rhs, out) index triples with deg(lhs) + deg(rhs) <= order
    products: Vec<(u16, u16, u16)>,
}

impl JetShape {
    fn build(vars: usize, order: usize) -> Self {
        let mut monomials = Vec::new();
        for degree in 0..=order {
            let mut current = [0u8; MAX_VARS];
            push_degree(&mut monomials, &mut current, 0, vars, degree);
        }
        let lookup: HashMap<Exponents, usize> =
            monomials.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut products = Vec::new();
        for (i, a) in monomials.iter().enumerate() {
            for (j, b) in monomials.iter().enumerate() {
                if degree(a) + degree(b) > order {
                    continue;
                }
                let mut sum = [0u8; MAX_VARS];
                for v in 0..MAX_VARS {
                    sum[v] = a[v] + b[v];
                }
                products.push((i as u16, j as u16, lookup[&sum] as u16));
            }
        }
        Self {
            vars,
            order,
            monomials,
            lookup,
            products,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

fn push_degree(out: &mut Vec<Exponents>, current: &mut Exponents, var: usize, vars: usize, left: usize) {
    if var + 1 == vars {
        current[var] = left as u8;
        out.push(*current);
        current[var] = 0;
        return;
    }
    for k in (0..=left).rev() {
        current[var] = k as u8;
        push_degree(out, current, var + 1, vars, left - k);
    }
    current[var] = 0;
}

fn degree(e: &Exponents) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

fn shape(vars: usize, order: usize) -> Result<&'static JetShape> {
    if vars == 0 || vars > MAX_VARS || order > MAX_ORDER {
        return Err(Error::UnsupportedJetShape { vars, order });
    }
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), &'static JetShape>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("jet shape cache poisoned");
    Ok(*guard
        .entry((vars, order))
        .or_insert_with(|| Box::leak(Box::new(JetShape::build(vars, order)))))
}

fn factorial<T: Scalar>(k: usize) -> T {
    (1..=k).fold(T::one(), |acc, i| acc * T::lit(i as f64))
}

#[derive(Clone)]
pub struct Jet<T> {
    shape: &'static JetShape,
    coeffs: Vec<T>,
}

impl<T: Scalar> fmt::Debug for Jet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Jet")
            .field("vars", &self.shape.vars)
            .field("order", &self.shape.order)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<T: Scalar> Jet<T> {
    pub fn constant(value: T, vars: usize, order: usize) -> Result<Self> {
        let shape = shape(vars, order)?;
        let mut coeffs = vec![T::zero(); shape.len()];
        coeffs[0] = value;
        Ok(Self { shape, coeffs })
    }

    /// Coordinate function `x_var` expanded around `value`.
    pub fn lift(value: T, var: usize, vars: usize, order: usize) -> Result<Self> {
        if var >= vars {
            return Err(Error::VarIndexOutOfRange { index: var, vars });
        }
        let mut jet = Self::constant(value, vars, order)?;
        if order > 0 {
            let mut e = [0u8; MAX_VARS];
            e[var] = 1;
            let idx = jet.shape.lookup[&e];
            jet.coeffs[idx] = T::one();
        }
        Ok(jet)
    }

    /// Seeds all coordinates of the point `p`.
    pub fn seed(p: &[T], order: usize) -> Result<Vec<Self>> {
        (0..p.len()).map(|i| Self::lift(p[i], i, p.len(), order)).collect()
    }

    /// A constant with the same shape as `self`.
    pub fn constant_like(&self, value: T) -> Self {
        let mut coeffs = vec![T::zero(); self.coeffs.len()];
        coeffs[0] = value;
        Self {
            shape: self.shape,
            coeffs,
        }
    }

    pub fn zero_like(&self) -> Self {
        self.constant_like(T::zero())
    }

    pub fn vars(&self) -> usize {
        self.shape.vars
    }

    pub fn order(&self) -> usize {
        self.shape.order
    }

    pub fn value(&self) -> T {
        self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Mixed partial derivative `∂^α f(p)`; `multi_index[v]` is the number of
    /// derivatives taken in variable `v`.
    pub fn partial(&self, multi_index: &[usize]) -> Result<T> {
        if multi_index.len() != self.shape.vars {
            return Err(Error::DimensionMismatch {
                expected: self.shape.vars,
                actual: multi_index.len(),
            });
        }
        let total: usize = multi_index.iter().sum();
        if total > self.shape.order {
            return Err(Error::OrderExceeded {
                requested: total,
                order: self.shape.order,
            });
        }
        let mut e = [0u8; MAX_VARS];
        let mut scale = T::one();
        for (v, &k) in multi_index.iter().enumerate() {
            e[v] = k as u8;
            scale = scale * factorial::<T>(k);
        }
        Ok(self.coeffs[self.shape.lookup[&e]] * scale)
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.shape.order {
            return self.clone();
        }
        let shape = shape(self.shape.vars, order).expect("valid smaller shape");
        Self {
            shape,
            coeffs: self.coeffs[..shape.len()].to_vec(),
        }
    }

    /// Partial derivative as a jet of one order less.
    ///
    /// Panics on an order-0 jet; callers size their seeds so this cannot happen.
    pub fn diff(&self, var: usize) -> Self {
        assert!(self.shape.order > 0, "cannot differentiate an order-0 jet");
        assert!(var < self.shape.vars, "variable index out of range");
        let lower = shape(self.shape.vars, self.shape.order - 1).expect("valid smaller shape");
        let mut coeffs = vec![T::zero(); lower.len()];
        for (idx, e) in self.shape.monomials.iter().enumerate() {
            if e[var] == 0 || degree(e) == 0 {
                continue;
            }
            let mut reduced = *e;
            reduced[var] -= 1;
            let target = lower.lookup[&reduced];
            coeffs[target] = coeffs[target] + self.coeffs[idx] * T::lit(e[var] as f64);
        }
        Self {
            shape: lower,
            coeffs,
        }
    }

    pub fn scale(&self, factor: T) -> Self {
        Self {
            shape: self.shape,
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    pub fn add_scalar(&self, value: T) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0] + value;
        out
    }

    /// Applies a scalar function given its derivatives `f^(k)(x0)`, `k = 0..=order`.
    pub fn compose(&self, derivatives: &[T]) -> Self {
        let order = self.shape.order;
        assert!(derivatives.len() > order, "need one derivative per order");
        let mut h = self.clone();
        h.coeffs[0] = T::zero();
        let mut out = self.constant_like(derivatives[order] / factorial::<T>(order));
        for k in (0..order).rev() {
            out = (&out * &h).add_scalar(derivatives[k] / factorial::<T>(k));
        }
        out
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        let cycle = [s, c, -s, -c];
        let d: Vec<T> = (0..=self.order()).map(|k| cycle[k % 4]).collect();
        self.compose(&d)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        let cycle = [c, -s, -c, s];
        let d: Vec<T> = (0..=self.order()).map(|k| cycle[k % 4]).collect();
        self.compose(&d)
    }

    /// `(cos self, sin self)`, the real and imaginary parts of `exp(i self)`.
    pub fn cis(&self) -> (Self, Self) {
        (self.cos(), self.sin())
    }

    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        let d = vec![e; self.order() + 1];
        self.compose(&d)
    }

    /// Real power `self^p`; the value must be positive unless `p` is an integer.
    pub fn powf(&self, p: T) -> Self {
        let x = self.value();
        let mut d = Vec::with_capacity(self.order() + 1);
        let mut falling = T::one();
        for k in 0..=self.order() {
            let kk = T::lit(k as f64);
            d.push(falling * x.powf(p - kk));
            falling = falling * (p - kk);
        }
        self.compose(&d)
    }

    pub fn sqrt(&self) -> Self {
        self.powf(T::lit(0.5))
    }

    pub fn recip(&self) -> Self {
        let x = self.value();
        let inv = x.recip();
        let mut d = Vec::with_capacity(self.order() + 1);
        let mut term = inv;
        for k in 0..=self.order() {
            d.push(term);
            term = -term * T::lit((k + 1) as f64) * inv;
        }
        self.compose(&d)
    }
}

fn binary<T: Scalar>(a: &Jet<T>, b: &Jet<T>, op: impl Fn(T, T) -> T) -> Jet<T> {
    assert_eq!(a.shape.vars, b.shape.vars, "jets over different variable sets");
    let shape = if a.shape.order <= b.shape.order { a.shape } else { b.shape };
    let coeffs = (0..shape.len()).map(|i| op(a.coeffs[i], b.coeffs[i])).collect();
    Jet { shape, coeffs }
}

fn product<T: Scalar>(a: &Jet<T>, b: &Jet<T>) -> Jet<T> {
    assert_eq!(a.shape.vars, b.shape.vars, "jets over different variable sets");
    let shape = if a.shape.order <= b.shape.order { a.shape } else { b.shape };
    let mut coeffs = vec![T::zero(); shape.len()];
    for &(i, j, k) in &shape.products {
        let (i, j, k) = (i as usize, j as usize, k as usize);
        coeffs[k] = coeffs[k] + a.coeffs[i] * b.coeffs[j];
    }
    Jet { shape, coeffs }
}

impl<'a, T: Scalar> Add<&'a Jet<T>> for &'a Jet<T> {
    type Output = Jet<T>;
    fn add(self, rhs: &'a Jet<T>) -> Jet<T> {
        binary(self, rhs, |x, y| x + y)
    }
}

impl<'a, T: Scalar> Sub<&'a Jet<T>> for &'a Jet<T> {
    type Output = Jet<T>;
    fn sub(self, rhs: &'a Jet<T>) -> Jet<T> {
        binary(self, rhs, |x, y| x - y)
    }
}

impl<'a, T: Scalar> Mul<&'a Jet<T>> for &'a Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: &'a Jet<T>) -> Jet<T> {
        product(self, rhs)
    }
}

impl<T: Scalar> Add for Jet<T> {
    type Output = Jet<T>;
    fn add(self, rhs: Jet<T>) -> Jet<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Jet<T> {
    type Output = Jet<T>;
    fn sub(self, rhs: Jet<T>) -> Jet<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: Jet<T>) -> Jet<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Mul<T> for Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: T) -> Jet<T> {
        self.scale(rhs)
    }
}

impl<T: Scalar> Mul<T> for &Jet<T> {
    type Output = Jet<T>;
    fn mul(self, rhs: T) -> Jet<T> {
        self.scale(rhs)
    }
}

impl<T: Scalar> Neg for Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Neg for &Jet<T> {
    type Output = Jet<T>;
    fn neg(self) -> Jet<T> {
        self.scale(-T::one())
    }
}

/// Mixed partial of every component of a vector-valued jet.
pub fn partial<T: Scalar>(components: &[Jet<T>], multi_index: &[usize]) -> Result<Vec<T>> {
    components.iter().map(|j| j.partial(multi_index)).collect()
}

/// Euclidean inner product of two jet vectors.
pub fn dot<T: Scalar>(a: &[Jet<T>], b: &[Jet<T>]) -> Jet<T> {
    assert_eq!(a.len(), b.len());
    let mut acc = &a[0] * &b[0];
    for (x, y) in a.iter().zip(b).skip(1) {
        acc = &acc + &(x * y);
    }
    acc
}

/// `a + s * b` componentwise, with a jet-valued factor `s`.
pub fn axpy<T: Scalar>(a: &[Jet<T>], s: &Jet<T>, b: &[Jet<T>]) -> Vec<Jet<T>> {
    a.iter().zip(b).map(|(x, y)| x + &(s * y)).collect()
}

pub fn sub_vec<T: Scalar>(a: &[Jet<T>], b: &[Jet<T>]) -> Vec<Jet<T>> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec<T: Scalar>(a: &[Jet<T>], b: &[Jet<T>]) -> Vec<Jet<T>> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vec<T: Scalar>(a: &[Jet<T>], s: &Jet<T>) -> Vec<Jet<T>> {
    a.iter().map(|x| x * s).collect()
}

pub fn diff_vec<T: Scalar>(a: &[Jet<T>], var: usize) -> Vec<Jet<T>> {
    a.iter().map(|x| x.diff(var)).collect()
}

pub fn values<T: Scalar>(a: &[Jet<T>]) -> Vec<T> {
    a.iter().map(Jet::value).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lift_value_and_seed_derivative() {
        let u = Jet::lift(2.0_f64, 0, 1, 3).unwrap();
        assert_eq!(u.partial(&[0]).unwrap(), 2.0);
        assert_eq!(u.partial(&[1]).unwrap(), 1.0);
        assert_eq!(u.partial(&[2]).unwrap(), 0.0);
    }

    #[test]
    fn second_derivative_of_sine_at_zero() {
        let u = Jet::lift(0.0_f64, 0, 1, 4).unwrap();
        assert_abs_diff_eq!(u.sin().partial(&[2]).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn lift_rejects_bad_index() {
        assert_eq!(
            Jet::lift(1.0_f64, 2, 2, 3).unwrap_err(),
            Error::VarIndexOutOfRange { index: 2, vars: 2 }
        );
        assert!(matches!(
            Jet::<f64>::constant(0.0, 5, 1),
            Err(Error::UnsupportedJetShape { .. })
        ));
    }

    #[test]
    fn circle_first_derivative() {
        let s = std::f64::consts::FRAC_PI_3;
        let u = Jet::lift(s, 0, 1, 2).unwrap();
        let d = partial(&[u.cos(), u.sin()], &[1]).unwrap();
        assert_abs_diff_eq!(d[0], -s.sin(), epsilon = 1e-15);
        assert_abs_diff_eq!(d[1], s.cos(), epsilon = 1e-15);
    }

    #[test]
    fn mixed_partial_of_cos_sum() {
        let p = Jet::seed(&[0.0_f64, 0.0], 3).unwrap();
        let arg = &p[0] + &(&p[1] * 2.0);
        assert_abs_diff_eq!(arg.cos().partial(&[1, 1]).unwrap(), -2.0, epsilon = 1e-14);
    }

    #[test]
    fn fourth_derivative_of_cos_sqrt2() {
        let s = Jet::lift(0.0_f64, 0, 1, 5).unwrap();
        let f = (&s * 2f64.sqrt()).cos();
        assert_abs_diff_eq!(f.partial(&[4]).unwrap(), 4.0, epsilon = 1e-13);
    }

    #[test]
    fn order_exceeded_is_reported() {
        let s = Jet::lift(0.0_f64, 0, 1, 2).unwrap();
        assert_eq!(
            s.partial(&[3]).unwrap_err(),
            Error::OrderExceeded { requested: 3, order: 2 }
        );
    }

    #[test]
    fn products_are_exact_on_polynomials() {
        // (1 + x + y)^3 has ∂x∂y^2 = 6 and ∂x^3 = 6
        let p = Jet::seed(&[0.0_f64, 0.0], 5).unwrap();
        let base = (&p[0] + &p[1]).add_scalar(1.0);
        let cube = &(&base * &base) * &base;
        assert_abs_diff_eq!(cube.partial(&[1, 2]).unwrap(), 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(cube.partial(&[3, 0]).unwrap(), 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(cube.partial(&[2, 2]).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn reciprocal_and_sqrt() {
        let x = Jet::lift(2.0_f64, 0, 1, 4).unwrap();
        let r = x.recip();
        // d^3/dx^3 1/x = -6/x^4
        assert_abs_diff_eq!(r.partial(&[3]).unwrap(), -6.0 / 16.0, epsilon = 1e-14);
        let s = x.sqrt();
        let sq = &s * &s;
        for k in 0..=4 {
            let expected = if k == 0 { 2.0 } else if k == 1 { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(sq.partial(&[k]).unwrap(), expected, epsilon = 1e-13);
        }
    }

    #[test]
    fn diff_matches_partial() {
        let p = Jet::seed(&[0.3_f64, -0.7, 1.1], 5).unwrap();
        let f = (&(&p[0] * &p[1]) + &p[2].sin()).exp();
        let fy = f.diff(1);
        let direct = f.partial(&[1, 2, 1]).unwrap();
        let via = fy.partial(&[1, 1, 1]).unwrap();
        assert_abs_diff_eq!(direct, via, epsilon = 1e-12);
        assert_eq!(fy.order(), 4);
    }

    #[test]
    fn truncation_to_min_order() {
        let a = Jet::lift(1.0_f64, 0, 2, 5).unwrap();
        let b = Jet::lift(1.0_f64, 1, 2, 2).unwrap();
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }
}
