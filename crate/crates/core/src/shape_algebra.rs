//! Adapted shape operators of 3-dimensional integral C-parallel submanifolds
//! and the eigen-criterion `(Σ Aᵢ²) t = k t` for biharmonicity.

use crate::scalar::Scalar;

/// Residual threshold on `|r| / max(1, |t|)` for the biharmonic verdict.
pub const VERDICT_THRESHOLD: f64 = 1e-10;

/// The seven constants `λ₁, λ₂, λ₃, α, β, γ, δ` of the adapted frame.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AdaptedShapeOperators<T> {
    pub lambda1: T,
    pub lambda2: T,
    pub lambda3: T,
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub delta: T,
}

pub type Matrix3<T> = [[T; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisCase {
    /// `λ₂ ≠ λ₃`
    Distinct,
    /// `λ₂ = λ₃` with `α = β = γ = δ = 0`
    EqualZero,
    /// `λ₂ = λ₃` with `α > 0`, `β = 0`, `α ≥ 2γ`
    EqualMax,
}

/// Which eigenvalue `k` the criterion uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Criterion<T> {
    /// Proper-biharmonic in a space form of φ-sectional curvature `c`, dimension `n`.
    Biharmonic { c: T, n: usize },
    /// `τ₂ + 4τ = 0` in the unit sphere.
    Minus4,
}

/// `(c(n+3) + 3n − 7) / 4`.
pub fn eigen_constant<T: Scalar>(c: T, n: usize) -> T {
    let n = T::lit(n as f64);
    (c * (n + T::lit(3.0)) + T::lit(3.0) * n - T::lit(7.0)) / T::lit(4.0)
}

/// Whether a non-minimal solution can exist: requires `k > 0`.
pub fn admits_proper<T: Scalar>(c: T, n: usize) -> bool {
    eigen_constant(c, n) > T::zero()
}

impl<T: Scalar> Criterion<T> {
    pub fn k(&self) -> T {
        match *self {
            Criterion::Biharmonic { c, n } => eigen_constant(c, n),
            Criterion::Minus4 => T::lit(6.0),
        }
    }

    /// `(c + 3) / 4`, the constant in the Gauss equation for the flat case.
    pub fn q(&self) -> T {
        match *self {
            Criterion::Biharmonic { c, .. } => (c + T::lit(3.0)) / T::lit(4.0),
            Criterion::Minus4 => T::one(),
        }
    }
}

fn matmul<T: Scalar>(a: &Matrix3<T>, b: &Matrix3<T>) -> Matrix3<T> {
    let mut out = [[T::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn norm3<T: Scalar>(v: &[T; 3]) -> T {
    v.iter().map(|&x| x * x).sum::<T>().sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionResult<T> {
    pub residual: [T; 3],
    pub trace: [T; 3],
}

impl<T: Scalar> CriterionResult<T> {
    pub fn residual_norm(&self) -> T {
        norm3(&self.residual)
    }

    pub fn trace_norm(&self) -> T {
        norm3(&self.trace)
    }

    /// `|r| / max(1, |t|)`.
    pub fn normalized(&self) -> T {
        self.residual_norm() / self.trace_norm().max(T::one())
    }

    pub fn is_solution(&self) -> bool {
        self.normalized() < T::lit(VERDICT_THRESHOLD)
    }

    pub fn is_minimal(&self) -> bool {
        self.trace_norm() < T::lit(VERDICT_THRESHOLD)
    }

    pub fn is_proper(&self) -> bool {
        self.is_solution() && !self.is_minimal()
    }
}

impl<T: Scalar> AdaptedShapeOperators<T> {
    pub fn new(lambda: [T; 3], alpha: T, beta: T, gamma: T, delta: T) -> Self {
        Self {
            lambda1: lambda[0],
            lambda2: lambda[1],
            lambda3: lambda[2],
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    /// Flat case: `λ₂ = λ₃ = λ`, `λ₁ = (λ² − q)/λ`, `β = 0`.
    pub fn flat(lambda: T, alpha: T, gamma: T, delta: T, q: T) -> Self {
        Self::new([(lambda * lambda - q) / lambda, lambda, lambda], alpha, T::zero(), gamma, delta)
    }

    /// `λ₂ = λ₃ = λ`, `λ₁ = (λ² − q)/λ`, all off-diagonal constants zero.
    pub fn product(lambda: T, q: T) -> Self {
        Self::flat(lambda, T::zero(), T::zero(), T::zero(), q)
    }

    pub fn matrices(&self) -> [Matrix3<T>; 3] {
        let z = T::zero();
        let Self {
            lambda1: l1,
            lambda2: l2,
            lambda3: l3,
            alpha: a,
            beta: b,
            gamma: g,
            delta: d,
        } = *self;
        [
            [[l1, z, z], [z, l2, z], [z, z, l3]],
            [[z, l2, z], [l2, a, b], [z, b, g]],
            [[z, z, l3], [z, b, g], [l3, g, d]],
        ]
    }

    pub fn traces(&self) -> [T; 3] {
        self.matrices().map(|m| m[0][0] + m[1][1] + m[2][2])
    }

    /// `r = (Σ Aᵢ²) t − k t` via matrix arithmetic.
    pub fn criterion(&self, criterion: Criterion<T>) -> CriterionResult<T> {
        self.criterion_with_k(criterion.k())
    }

    pub fn criterion_with_k(&self, k: T) -> CriterionResult<T> {
        let ms = self.matrices();
        let mut sum = [[T::zero(); 3]; 3];
        for m in &ms {
            let sq = matmul(m, m);
            for i in 0..3 {
                for j in 0..3 {
                    sum[i][j] = sum[i][j] + sq[i][j];
                }
            }
        }
        let trace = self.traces();
        let mut residual = [T::zero(); 3];
        for i in 0..3 {
            residual[i] = (0..3).map(|j| sum[i][j] * trace[j]).sum::<T>() - k * trace[i];
        }
        CriterionResult { residual, trace }
    }

    /// The same three equations written out as scalar polynomials.
    pub fn expanded_residual(&self, criterion: Criterion<T>) -> [T; 3] {
        let k = criterion.k();
        let Self {
            lambda1: l1,
            lambda2: l2,
            lambda3: l3,
            alpha: a,
            beta: b,
            gamma: g,
            delta: d,
        } = *self;
        let two = T::lit(2.0);
        let three = T::lit(3.0);
        let sum = l1 + l2 + l3;
        let squares = l1 * l1 + l2 * l2 + l3 * l3;
        let ag = a + g;
        let bd = b + d;
        [
            sum * (squares - k) + ag * (a * l2 + g * l3) + bd * (b * l2 + d * l3),
            sum * (a * l2 + g * l3) + ag * (two * l2 * l2 + a * a + three * b * b + g * g + b * d - k) + g * bd * bd,
            sum * (b * l2 + d * l3) + b * ag * ag + bd * (two * l3 * l3 + d * d + three * g * g + b * b + a * g - k),
        ]
    }

    /// Violated inequalities for the declared case (empty when admissible).
    pub fn constraint_violations(&self, case: BasisCase, tol: T) -> Vec<&'static str> {
        let mut out = Vec::new();
        let Self {
            lambda1: l1,
            lambda2: l2,
            lambda3: l3,
            alpha: a,
            beta: b,
            gamma: g,
            delta: d,
        } = *self;
        let two = T::lit(2.0);
        if !(l1 > T::zero()) {
            out.push("lambda1 > 0");
        }
        if !(l1 + tol >= a.abs()) {
            out.push("lambda1 >= |alpha|");
        }
        if !(l1 + tol >= d.abs()) {
            out.push("lambda1 >= |delta|");
        }
        if !(l1 + tol >= two * l2) {
            out.push("lambda1 >= 2 lambda2");
        }
        if !(l1 + tol >= two * l3) {
            out.push("lambda1 >= 2 lambda3");
        }
        match case {
            BasisCase::Distinct => {
                if !(a + tol >= T::zero()) {
                    out.push("alpha >= 0");
                }
                if !(d + tol >= T::zero()) {
                    out.push("delta >= 0");
                }
                if !(a + tol >= d) {
                    out.push("alpha >= delta");
                }
            }
            BasisCase::EqualZero => {
                if (l2 - l3).abs() > tol {
                    out.push("lambda2 = lambda3");
                }
                for (value, name) in [(a, "alpha = 0"), (b, "beta = 0"), (g, "gamma = 0"), (d, "delta = 0")] {
                    if value.abs() > tol {
                        out.push(name);
                    }
                }
            }
            BasisCase::EqualMax => {
                if (l2 - l3).abs() > tol {
                    out.push("lambda2 = lambda3");
                }
                if !(a > T::zero()) {
                    out.push("alpha > 0");
                }
                if b.abs() > tol {
                    out.push("beta = 0");
                }
                if !(d + tol >= T::zero()) {
                    out.push("delta >= 0");
                }
                if !(a + tol >= d) {
                    out.push("alpha >= delta");
                }
                if !(a + tol >= two * g) {
                    out.push("alpha >= 2 gamma");
                }
            }
        }
        out
    }

    pub fn satisfies(&self, case: BasisCase) -> bool {
        self.constraint_violations(case, T::lit(1e-12)).is_empty()
    }
}

/// Residuals of the four scalar equations of the flat case in the unknowns
/// `L = λ², α, γ, δ` (with `λ₁ = (L − q)/λ`, `β = 0`).
pub fn flat_system_residual<T: Scalar>(lambda: T, alpha: T, gamma: T, delta: T, criterion: Criterion<T>) -> [T; 4] {
    let q = criterion.q();
    let k = criterion.k();
    let s = q + k;
    let b = (q + q + k) / T::lit(2.0);
    let l = lambda * lambda;
    let three = T::lit(3.0);
    let five = T::lit(5.0);
    let (a, g, d) = (alpha, gamma, delta);
    [
        (three * l - q) * (three * l * l - T::lit(2.0) * b * l + q * q) + l * l * ((a + g) * (a + g) + d * d),
        (a + g) * (five * l + a * a + g * g - s) + g * d * d,
        d * (five * l + d * d + three * g * g + a * g - s),
        q + l + a * g - g * g,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn corollary() -> AdaptedShapeOperators<f64> {
        let lambda = -1.0 / 5f64.sqrt();
        AdaptedShapeOperators::flat(
            lambda,
            3.0 * 3f64.sqrt() / 10f64.sqrt(),
            -(3f64.sqrt()) / 10f64.sqrt(),
            2f64.sqrt(),
            1.0,
        )
    }

    const C1: Criterion<f64> = Criterion::Biharmonic { c: 1.0, n: 3 };

    #[test]
    fn zero_params_give_zero_matrices() {
        let p = AdaptedShapeOperators::<f64>::default();
        assert_eq!(p.matrices(), [[[0.0; 3]; 3]; 3]);
        let e = AdaptedShapeOperators::new([1.0, 0.0, 0.0], 0.0, 0.0, 0.0, 0.0);
        let m = e.matrices();
        assert_eq!(m[0], [[1.0, 0.0, 0.0], [0.0; 3], [0.0; 3]]);
        assert_eq!(m[1], [[0.0; 3]; 3]);
        assert_eq!(m[2], [[0.0; 3]; 3]);
    }

    #[test]
    fn corollary_entries_and_verdict() {
        let p = corollary();
        assert_abs_diff_eq!(p.lambda1, 4.0 * 5f64.sqrt() / 5.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.matrices()[1][1][1], 3.0 * 3f64.sqrt() / 10f64.sqrt(), epsilon = 0.0);
        let r = p.criterion(C1);
        assert!(r.residual_norm() < 1e-12);
        assert!(r.is_proper());
        assert!(p.satisfies(BasisCase::EqualMax));
        for x in p.expanded_residual(C1) {
            assert!(x.abs() < 1e-12);
        }
    }

    #[test]
    fn eigen_constant_values() {
        assert_eq!(eigen_constant(1.0, 3), 2.0);
        assert!(!admits_proper(-1.0 / 3.0, 3));
        assert!(admits_proper(-0.3, 3));
    }

    #[test]
    fn constraints_reject_bad_params() {
        let mut p = corollary();
        p.lambda1 = -1.0;
        assert!(!p.satisfies(BasisCase::EqualMax));
        let mut p = corollary();
        p.beta = 0.1;
        assert!(p.constraint_violations(BasisCase::EqualMax, 1e-12).contains(&"beta = 0"));
    }

    #[test]
    fn minus4_product_params() {
        let lambda = -((4.0 - 13f64.sqrt()) / 3.0).sqrt();
        let p = AdaptedShapeOperators::product(lambda, 1.0);
        assert!(p.criterion(Criterion::Minus4).residual_norm() < 1e-12);
        assert!(AdaptedShapeOperators::<f64>::default().criterion(Criterion::Minus4).residual_norm() == 0.0);
        // oracle: direct arithmetic, k = 2 differs from 6 and t ≠ 0
        let c = corollary();
        let direct = c.criterion_with_k(2.0);
        let m4 = c.criterion(Criterion::Minus4);
        for i in 0..3 {
            assert_abs_diff_eq!(m4.residual[i], direct.residual[i] - 4.0 * direct.trace[i], epsilon = 1e-12);
        }
        assert!(m4.residual_norm() > 1e-3);
    }

    #[test]
    fn minimal_params_have_zero_residual() {
        let p = AdaptedShapeOperators::new([1.0, -0.25, -0.75], 0.3, 0.2, -0.3, -0.2);
        let r = p.criterion(C1);
        assert_eq!(r.trace, [0.0, 0.0, 0.0]);
        assert_eq!(r.residual, [0.0, 0.0, 0.0]);
        assert!(r.is_minimal() && !r.is_proper());
    }

    #[test]
    fn flat_system_vanishes_on_corollary() {
        let r = flat_system_residual(
            -1.0 / 5f64.sqrt(),
            3.0 * 3f64.sqrt() / 10f64.sqrt(),
            -(3f64.sqrt()) / 10f64.sqrt(),
            2f64.sqrt(),
            C1,
        );
        for x in r {
            assert!(x.abs() < 1e-13, "{r:?}");
        }
    }
}
