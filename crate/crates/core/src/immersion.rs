//! Parametric immersions into the unit sphere and their induced geometry.
//!
//! All covariant quantities use the canonical structure, where the sphere
//! connection along `F` is `∇_X V = D_X V + <X, V> F`. Operations that
//! differentiate the second fundamental form require a flat-orthonormal chart
//! (`G ≡ I` as a jet identity at each sample), so Christoffel symbols vanish.

use std::f64::consts::TAU;
use std::sync::Arc;

use num_complex::Complex;

use crate::ambient::{self, AmbientVector, SasakianSphere};
use crate::error::{Error, Result};
use crate::jets::{self, Jet};
use crate::report::Check;
use crate::scalar::{max_abs, Scalar};

pub const FLAT_CHART_TOLERANCE: f64 = 1e-9;
pub const INTEGRAL_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_GRID: usize = 5;

pub type JetMap<T> = Arc<dyn Fn(&[Jet<T>]) -> Vec<Jet<T>> + Send + Sync>;

/// Smooth map from an `m`-dimensional parameter domain into `R^{2n+2}`,
/// evaluable on jets.
#[derive(Clone)]
pub struct ParametricImmersion<T> {
    name: String,
    dim: usize,
    n: usize,
    map: JetMap<T>,
    lattice: Option<Vec<Vec<T>>>,
}

impl<T: Scalar> std::fmt::Debug for ParametricImmersion<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParametricImmersion")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("n", &self.n)
            .field("lattice", &self.lattice)
            .finish()
    }
}

impl<T: Scalar> ParametricImmersion<T> {
    pub fn new<F>(name: impl Into<String>, dim: usize, n: usize, map: F) -> Self
    where
        F: Fn(&[Jet<T>]) -> Vec<Jet<T>> + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            dim,
            n,
            map: Arc::new(map),
            lattice: None,
        }
    }

    pub fn with_lattice(mut self, lattice: Vec<Vec<T>>) -> Self {
        self.lattice = Some(lattice);
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.n + 2
    }

    pub fn lattice(&self) -> Option<&[Vec<T>]> {
        self.lattice.as_deref()
    }

    pub fn map(&self) -> JetMap<T> {
        Arc::clone(&self.map)
    }

    /// Applies the map to already-seeded parameter jets.
    pub fn apply(&self, params: &[Jet<T>]) -> Vec<Jet<T>> {
        (self.map)(params)
    }

    pub fn jets(&self, p: &[T], order: usize) -> Result<Vec<Jet<T>>> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: p.len(),
            });
        }
        let seeds = Jet::seed(p, order)?;
        let out = (self.map)(&seeds);
        if out.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                actual: out.len(),
            });
        }
        Ok(out)
    }

    pub fn eval(&self, p: &[T]) -> Result<AmbientVector<T>> {
        Ok(AmbientVector::new(jets::values(&self.jets(p, 0)?)))
    }

    /// The curve `s ↦ F(base + s e_axis)`.
    pub fn coordinate_curve(&self, axis: usize, base: Vec<T>) -> Self {
        assert!(axis < self.dim && base.len() == self.dim);
        let map = Arc::clone(&self.map);
        let dim = self.dim;
        Self::new(format!("{}[axis {axis}]", self.name), 1, self.n, move |s: &[Jet<T>]| {
            let params: Vec<Jet<T>> = (0..dim)
                .map(|j| {
                    if j == axis {
                        s[0].add_scalar(base[j])
                    } else {
                        s[0].constant_like(base[j])
                    }
                })
                .collect();
            map(&params)
        })
    }

    /// The map `q ↦ F(M q)` for a square matrix `M` (rows indexed by the old
    /// parameters).
    pub fn reparametrize(&self, name: impl Into<String>, matrix: Vec<Vec<T>>) -> Self {
        assert_eq!(matrix.len(), self.dim);
        let map = Arc::clone(&self.map);
        Self::new(name, self.dim, self.n, move |q: &[Jet<T>]| {
            let params: Vec<Jet<T>> = matrix
                .iter()
                .map(|row| {
                    let mut acc = q[0].scale(row[0]);
                    for (x, &m) in q.iter().zip(row).skip(1) {
                        acc = &acc + &x.scale(m);
                    }
                    acc
                })
                .collect();
            map(&params)
        })
    }
}

/// Sample points of a parameter domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    points: Vec<Vec<T>>,
    per_axis: usize,
}

impl<T: Scalar> Grid<T> {
    /// `per_axis^m` points `Σ (i_k / per_axis) v_k` of the cell spanned by `vectors`.
    pub fn cell(vectors: &[Vec<T>], per_axis: usize) -> Self {
        let m = vectors.len();
        let per_axis = per_axis.max(1);
        let total = per_axis.pow(m as u32);
        let points = (0..total)
            .map(|mut idx| {
                let mut p = vec![T::zero(); vectors[0].len()];
                for v in vectors {
                    let t = T::lit((idx % per_axis) as f64) / T::lit(per_axis as f64);
                    idx /= per_axis;
                    for (pi, &vi) in p.iter_mut().zip(v) {
                        *pi = *pi + t * vi;
                    }
                }
                p
            })
            .collect();
        Self { points, per_axis }
    }

    /// Grid over one period cell: the lattice when present, else `[0, 2π)^m`.
    pub fn for_immersion(f: &ParametricImmersion<T>, per_axis: usize) -> Self {
        match f.lattice() {
            Some(lattice) => Self::cell(lattice, per_axis),
            None => {
                let vectors: Vec<Vec<T>> = (0..f.dim())
                    .map(|i| {
                        let mut v = vec![T::zero(); f.dim()];
                        v[i] = T::lit(TAU);
                        v
                    })
                    .collect();
                Self::cell(&vectors, per_axis)
            }
        }
    }

    pub fn from_points(points: Vec<Vec<T>>) -> Self {
        Self { points, per_axis: 0 }
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn per_axis(&self) -> usize {
        self.per_axis
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Induced geometry at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometrySample<T> {
    pub point: Vec<T>,
    pub position: AmbientVector<T>,
    pub tangents: Vec<AmbientVector<T>>,
    pub metric: Vec<Vec<T>>,
    pub second_fundamental: Vec<Vec<AmbientVector<T>>>,
    pub mean_curvature: AmbientVector<T>,
    pub mean_curvature_norm: T,
}

fn invert<T: Scalar>(matrix: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let m = matrix.len();
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut inv: Vec<Vec<T>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let scale = max_abs(matrix.iter().flatten().copied()).max(T::min_positive_value());
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if !(a[pivot][col].abs() > T::lit(1e-12) * scale) {
            return Err(Error::SingularMetric);
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].recip();
        for j in 0..m {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for i in 0..m {
            if i != col {
                let f = a[i][col];
                for j in 0..m {
                    a[i][j] = a[i][j] - f * a[col][j];
                    inv[i][j] = inv[i][j] - f * inv[col][j];
                }
            }
        }
    }
    Ok(inv)
}

/// First and second order geometry at `p`, for any chart with nonsingular `G`.
pub fn sample_geometry<T: Scalar>(f: &ParametricImmersion<T>, p: &[T]) -> Result<GeometrySample<T>> {
    let m = f.dim();
    let position_jets = f.jets(p, 2)?;
    let position = AmbientVector::new(jets::values(&position_jets));
    let first: Vec<Vec<Jet<T>>> = (0..m).map(|i| jets::diff_vec(&position_jets, i)).collect();
    let tangents: Vec<AmbientVector<T>> = first.iter().map(|d| AmbientVector::new(jets::values(d))).collect();
    let metric: Vec<Vec<T>> = (0..m)
        .map(|i| (0..m).map(|j| tangents[i].dot(&tangents[j])).collect())
        .collect();
    let inverse = invert(&metric)?;

    let mut second = vec![vec![AmbientVector::zeros(f.ambient_dim()); m]; m];
    for i in 0..m {
        for j in i..m {
            let fij = AmbientVector::new(jets::values(&jets::diff_vec(&first[i], j)));
            // sphere connection: D_i F_j + <F_i, F_j> F
            let mut b = fij.axpy(metric[i][j], &position);
            let coeffs: Vec<T> = tangents.iter().map(|t| fij.dot(t)).collect();
            for k in 0..m {
                for l in 0..m {
                    b = b.axpy(-inverse[k][l] * coeffs[k], &tangents[l]);
                }
            }
            second[i][j] = b.clone();
            second[j][i] = b;
        }
    }
    let mut mean = AmbientVector::zeros(f.ambient_dim());
    for i in 0..m {
        for j in 0..m {
            mean = mean.axpy(inverse[i][j], &second[i][j]);
        }
    }
    let mean = mean.scale(T::lit(m as f64).recip());
    let mean_curvature_norm = mean.norm();
    Ok(GeometrySample {
        point: p.to_vec(),
        position,
        tangents,
        metric,
        second_fundamental: second,
        mean_curvature: mean,
        mean_curvature_norm,
    })
}

/// Jet-valued geometry in a flat-orthonormal chart.
struct FlatFrame<T> {
    position: Vec<Jet<T>>,
    tangents: Vec<Vec<Jet<T>>>,
    second: Vec<Vec<Vec<Jet<T>>>>,
    mean: Vec<Jet<T>>,
}

impl<T: Scalar> FlatFrame<T> {
    fn at(f: &ParametricImmersion<T>, p: &[T], order: usize) -> Result<Self> {
        let m = f.dim();
        let position = f.jets(p, order)?;
        let tangents: Vec<Vec<Jet<T>>> = (0..m).map(|i| jets::diff_vec(&position, i)).collect();
        let mut deviation = T::zero();
        for i in 0..m {
            for j in 0..m {
                let g = jets::dot(&tangents[i], &tangents[j]);
                let target = if i == j { T::one() } else { T::zero() };
                for (k, &c) in g.coeffs().iter().enumerate() {
                    let expected = if k == 0 { target } else { T::zero() };
                    deviation = deviation.max((c - expected).abs());
                }
            }
        }
        if !(deviation <= T::lit(FLAT_CHART_TOLERANCE)) {
            return Err(Error::NonFlatChart {
                deviation: deviation.to_f64_lossy(),
            });
        }
        let mut frame = Self {
            position,
            tangents,
            second: Vec::new(),
            mean: Vec::new(),
        };
        let mut second = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in i..m {
                let mut d = jets::diff_vec(&frame.tangents[i], j);
                if i == j {
                    d = jets::add_vec(&d, &frame.position);
                }
                let b = frame.normal_part(&d);
                second[i][j] = b.clone();
                second[j][i] = b;
            }
        }
        let mut mean = second[0][0].clone();
        for row in second.iter().enumerate().skip(1) {
            mean = jets::add_vec(&mean, &row.1[row.0]);
        }
        let inv_m = mean[0].constant_like(T::lit(m as f64).recip());
        frame.mean = jets::scale_vec(&mean, &inv_m);
        frame.second = second;
        Ok(frame)
    }

    /// Component orthogonal to `F` and to every `∂ᵢF`.
    fn normal_part(&self, v: &[Jet<T>]) -> Vec<Jet<T>> {
        let radial = jets::dot(v, &self.position);
        let mut out = jets::axpy(v, &-radial, &self.position);
        for t in &self.tangents {
            let c = jets::dot(v, t);
            out = jets::axpy(&out, &-c, t);
        }
        out
    }

    /// Sphere connection `∇_i V = ∂_i V + <∂_i F, V> F`.
    fn sphere_derivative(&self, v: &[Jet<T>], i: usize) -> Vec<Jet<T>> {
        let d = jets::diff_vec(v, i);
        let c = jets::dot(&self.tangents[i], v);
        jets::axpy(&d, &c, &self.position)
    }

    fn normal_derivative(&self, v: &[Jet<T>], i: usize) -> Vec<Jet<T>> {
        self.normal_part(&jets::diff_vec(v, i))
    }

    fn position_value(&self) -> AmbientVector<T> {
        AmbientVector::new(jets::values(&self.position))
    }

    fn tangent_value(&self, i: usize) -> AmbientVector<T> {
        AmbientVector::new(jets::values(&self.tangents[i]))
    }

    fn second_value(&self, i: usize, j: usize) -> AmbientVector<T> {
        AmbientVector::new(jets::values(&self.second[i][j]))
    }

    fn mean_value(&self) -> AmbientVector<T> {
        AmbientVector::new(jets::values(&self.mean))
    }
}

/// Largest deviation of `G` from the identity (as a jet identity) over the grid.
pub fn flat_chart_deviation<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>) -> Result<T> {
    let mut worst = T::zero();
    for p in grid.points() {
        let position = f.jets(p, 3)?;
        let tangents: Vec<Vec<Jet<T>>> = (0..f.dim()).map(|i| jets::diff_vec(&position, i)).collect();
        for i in 0..f.dim() {
            for j in 0..f.dim() {
                let g = jets::dot(&tangents[i], &tangents[j]);
                let target = if i == j { T::one() } else { T::zero() };
                for (k, &c) in g.coeffs().iter().enumerate() {
                    let expected = if k == 0 { target } else { T::zero() };
                    worst = worst.max((c - expected).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Largest `||F(p)| - 1|` over the grid.
pub fn unit_norm_deviation<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>) -> Result<T> {
    let mut worst = T::zero();
    for p in grid.points() {
        worst = worst.max((f.eval(p)?.norm() - T::one()).abs());
    }
    Ok(worst)
}

fn xi0<T: Scalar>(z: &AmbientVector<T>) -> AmbientVector<T> {
    -&ambient::complex_structure(z).expect("even ambient dimension")
}

fn j<T: Scalar>(v: &AmbientVector<T>) -> AmbientVector<T> {
    ambient::complex_structure(v).expect("even ambient dimension")
}

/// Max `|η₀(∂ᵢF)|` over the grid; integral iff below `1e-10`.
pub fn check_integral<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>) -> Result<Check> {
    let mut worst = T::zero();
    for p in grid.points() {
        let position = f.jets(p, 1)?;
        let z = AmbientVector::new(jets::values(&position));
        let xi = xi0(&z);
        for i in 0..f.dim() {
            let t = AmbientVector::new(jets::values(&jets::diff_vec(&position, i)));
            worst = worst.max(t.dot(&xi).abs());
        }
    }
    Ok(Check::new("integral", worst.to_f64_lossy(), INTEGRAL_TOLERANCE))
}

/// Max `|<φ∂ᵢF, ∂ⱼF>|` together with the tangency of `ξ₀`; zero on
/// anti-invariant submanifolds tangent to the Reeb field.
pub fn check_anti_invariant<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>, tol: T) -> Result<Check> {
    let mut worst = T::zero();
    for p in grid.points() {
        let sample = sample_geometry(f, p)?;
        let xi = xi0(&sample.position);
        for ti in &sample.tangents {
            let jt = j(ti);
            for tj in &sample.tangents {
                worst = worst.max(jt.dot(tj).abs());
            }
        }
        // ξ₀ lies in the tangent space: its normal component vanishes
        let inverse = invert(&sample.metric)?;
        let coeffs: Vec<T> = sample.tangents.iter().map(|t| t.dot(&xi)).collect();
        let mut residual = xi.clone();
        for k in 0..f.dim() {
            for l in 0..f.dim() {
                residual = residual.axpy(-inverse[k][l] * coeffs[k], &sample.tangents[l]);
            }
        }
        worst = worst.max(residual.norm());
    }
    Ok(Check::new("anti_invariant", worst.to_f64_lossy(), tol.to_f64_lossy()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CParallelReport {
    pub c_parallel: Check,
    pub symmetry: Check,
}

/// Checks `(∇⊥B)(X,Y,Z) = g(φX, B(Y,Z)) ξ` and total symmetry of `S`.
pub fn check_c_parallel<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>, tol: T) -> Result<CParallelReport> {
    let m = f.dim();
    let mut worst = T::zero();
    let mut asym = T::zero();
    for p in grid.points() {
        let frame = FlatFrame::at(f, p, 3)?;
        let z = frame.position_value();
        let xi = xi0(&z);
        let phi_t: Vec<AmbientVector<T>> = (0..m).map(|i| j(&frame.tangent_value(i))).collect();
        let mut s = vec![vec![vec![T::zero(); m]; m]; m];
        for i in 0..m {
            for jj in 0..m {
                for k in 0..m {
                    let b = frame.second_value(jj, k);
                    s[i][jj][k] = phi_t[i].dot(&b);
                    let nabla = AmbientVector::new(jets::values(&frame.normal_derivative(&frame.second[jj][k], i)));
                    let expected = xi.scale(s[i][jj][k]);
                    worst = worst.max((&nabla - &expected).max_abs());
                }
            }
        }
        for i in 0..m {
            for jj in 0..m {
                for k in 0..m {
                    asym = asym
                        .max((s[i][jj][k] - s[jj][i][k]).abs())
                        .max((s[i][jj][k] - s[k][jj][i]).abs());
                }
            }
        }
    }
    Ok(CParallelReport {
        c_parallel: Check::new("c_parallel", worst.to_f64_lossy(), tol.to_f64_lossy()),
        symmetry: Check::new("s_symmetry", asym.to_f64_lossy(), tol.to_f64_lossy()),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalLaplacianReport<T> {
    pub residual: Check,
    pub mean_curvature_spread: Check,
    pub mean_curvature: T,
}

/// Checks `Δ⊥H = H` with `Δ⊥ = -Σ ∇⊥ᵢ∇⊥ᵢ`, and constancy of `|H|`.
pub fn check_normal_laplacian<T: Scalar>(
    f: &ParametricImmersion<T>,
    grid: &Grid<T>,
    tol: T,
) -> Result<NormalLaplacianReport<T>> {
    let mut worst = T::zero();
    let mut norms = Vec::with_capacity(grid.len());
    for p in grid.points() {
        let frame = FlatFrame::at(f, p, 4)?;
        let mut laplacian = AmbientVector::zeros(f.ambient_dim());
        for i in 0..f.dim() {
            let once = frame.normal_derivative(&frame.mean, i);
            let twice = frame.normal_derivative(&once, i);
            laplacian = &laplacian - &AmbientVector::new(jets::values(&twice));
        }
        let h = frame.mean_value();
        worst = worst.max((&laplacian - &h).max_abs());
        norms.push(h.norm());
    }
    let count = T::lit(norms.len() as f64);
    let mean = norms.iter().copied().sum::<T>() / count;
    let variance = norms.iter().map(|&x| (x - mean) * (x - mean)).sum::<T>() / count;
    Ok(NormalLaplacianReport {
        residual: Check::new("normal_laplacian", worst.to_f64_lossy(), tol.to_f64_lossy()),
        mean_curvature_spread: Check::new("mean_curvature_variance", variance.to_f64_lossy(), 1e-16),
        mean_curvature: mean,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BitensionMode {
    /// `τ₂`
    Biharmonic,
    /// `τ₂ + 4τ`
    Minus4,
}

/// Bitension field `τ₂ = -Δτ - trace R(dF, τ)dF` (plus `4τ` in `Minus4` mode)
/// of `F` into the canonical unit sphere.
pub fn bitension<T: Scalar>(f: &ParametricImmersion<T>, p: &[T], mode: BitensionMode) -> Result<AmbientVector<T>> {
    let frame = FlatFrame::at(f, p, 4)?;
    let m = f.dim();
    let tau_scale = frame.mean[0].constant_like(T::lit(m as f64));
    let tau = jets::scale_vec(&frame.mean, &tau_scale);
    let z = frame.position_value();
    let tau_value = AmbientVector::new(jets::values(&tau));
    let sphere = SasakianSphere::<T>::canonical(f.n());

    let mut out = AmbientVector::zeros(f.ambient_dim());
    for i in 0..m {
        let once = frame.sphere_derivative(&tau, i);
        let twice = frame.sphere_derivative(&once, i);
        out = &out + &AmbientVector::new(jets::values(&twice));
        let t = frame.tangent_value(i);
        out = &out - &sphere.curvature(&z, &t, &tau_value, &t)?;
    }
    if mode == BitensionMode::Minus4 {
        out = out.axpy(T::lit(4.0), &tau_value);
    }
    Ok(out)
}

/// Sup-norm of the bitension over the grid.
pub fn bitension_sup<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>, mode: BitensionMode) -> Result<T> {
    let mut worst = T::zero();
    for p in grid.points() {
        worst = worst.max(bitension(f, p, mode)?.max_abs());
    }
    Ok(worst)
}

/// `trace B(·, A_H ·) = Σ <B_ij, H> B_ij` in a flat chart, returned with `H`.
pub fn trace_b_ah<T: Scalar>(f: &ParametricImmersion<T>, p: &[T]) -> Result<(AmbientVector<T>, AmbientVector<T>)> {
    let frame = FlatFrame::at(f, p, 2)?;
    let h = frame.mean_value();
    let mut out = AmbientVector::zeros(f.ambient_dim());
    for i in 0..f.dim() {
        for jj in 0..f.dim() {
            let b = frame.second_value(i, jj);
            out = out.axpy(b.dot(&h), &b);
        }
    }
    Ok((out, h))
}

/// Max over the grid of `|trace B(·, A_H ·) - k H|`.
pub fn trace_b_ah_residual<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>, k: T) -> Result<T> {
    let mut worst = T::zero();
    for p in grid.points() {
        let (trace, h) = trace_b_ah(f, p)?;
        worst = worst.max(trace.axpy(-k, &h).max_abs());
    }
    Ok(worst)
}

/// Largest `|<B_ij, ∂ₖF>|` and `|<B_ij, ξ₀>|` over the grid.
pub fn second_fundamental_orthogonality<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>) -> Result<(T, T)> {
    let mut tangential = T::zero();
    let mut reeb = T::zero();
    for p in grid.points() {
        let s = sample_geometry(f, p)?;
        let xi = xi0(&s.position);
        for row in &s.second_fundamental {
            for b in row {
                for t in &s.tangents {
                    tangential = tangential.max(b.dot(t).abs());
                }
                reeb = reeb.max(b.dot(&xi).abs());
            }
        }
    }
    Ok((tangential, reeb))
}

/// Mean-curvature norms over the grid.
pub fn mean_curvature_norms<T: Scalar>(f: &ParametricImmersion<T>, grid: &Grid<T>) -> Result<Vec<T>> {
    grid.points()
        .iter()
        .map(|p| sample_geometry(f, p).map(|s| s.mean_curvature_norm))
        .collect()
}

/// Groups of unitary basis vectors whose spans split the position vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateSplit<T> {
    pub basis: Vec<Vec<Complex<T>>>,
    pub groups: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenReport<T> {
    pub eigenvalues: Vec<T>,
    pub residual: T,
}

fn project<T: Scalar>(v: &AmbientVector<T>, basis: &[Vec<Complex<T>>], group: &[usize]) -> AmbientVector<T> {
    let z = ambient::to_complex(v);
    let mut out = vec![Complex::new(T::zero(), T::zero()); z.len()];
    for &k in group {
        let e = &basis[k];
        let coeff: Complex<T> = z.iter().zip(e).map(|(a, b)| a * b.conj()).fold(Complex::new(T::zero(), T::zero()), |s, x| s + x);
        for (o, b) in out.iter_mut().zip(e) {
            *o = *o + coeff * b;
        }
    }
    ambient::from_complex(&out)
}

/// Verifies `Δx_g = μ_g x_g` for each group `g`, with `Δ = -Σ ∂ᵢ∂ᵢ`.
pub fn coordinate_laplacian_eigencheck<T: Scalar>(
    f: &ParametricImmersion<T>,
    split: &CoordinateSplit<T>,
    grid: &Grid<T>,
    tol: T,
) -> Result<EigenReport<T>> {
    let mut samples: Vec<Vec<(AmbientVector<T>, AmbientVector<T>)>> = vec![Vec::new(); split.groups.len()];
    for p in grid.points() {
        let position = f.jets(p, 2)?;
        let z = AmbientVector::new(jets::values(&position));
        let mut lap = AmbientVector::zeros(f.ambient_dim());
        for i in 0..f.dim() {
            let d2 = jets::diff_vec(&jets::diff_vec(&position, i), i);
            lap = &lap - &AmbientVector::new(jets::values(&d2));
        }
        for (g, group) in split.groups.iter().enumerate() {
            samples[g].push((project(&z, &split.basis, group), project(&lap, &split.basis, group)));
        }
    }
    let mut eigenvalues = Vec::new();
    let mut residual = T::zero();
    for group in &samples {
        let mut num = T::zero();
        let mut den = T::zero();
        for (x, lx) in group {
            num = num + lx.dot(x);
            den = den + x.dot(x);
        }
        if !(den > T::zero()) {
            return Err(Error::NotDiagonalized { residual: f64::INFINITY });
        }
        let mu = num / den;
        for (x, lx) in group {
            residual = residual.max(lx.axpy(-mu, x).max_abs());
        }
        eigenvalues.push(mu);
    }
    if !(residual < tol) {
        return Err(Error::NotDiagonalized {
            residual: residual.to_f64_lossy(),
        });
    }
    Ok(EigenReport { eigenvalues, residual })
}

/// Max over the grid and generators of `|F(p + a) - F(p)|`.
pub fn lattice_residual<T: Scalar>(f: &ParametricImmersion<T>, vectors: &[Vec<T>], grid: &Grid<T>) -> Result<T> {
    let mut worst = T::zero();
    for p in grid.points() {
        let base = f.eval(p)?;
        for a in vectors {
            let shifted: Vec<T> = p.iter().zip(a).map(|(&x, &y)| x + y).collect();
            worst = worst.max((&f.eval(&shifted)? - &base).max_abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn great_circle() -> ParametricImmersion<f64> {
        ParametricImmersion::new("great circle", 1, 1, |s: &[Jet<f64>]| {
            let zero = s[0].zero_like();
            vec![s[0].cos(), s[0].sin(), zero.clone(), zero]
        })
    }

    fn small_circle(radius: f64) -> ParametricImmersion<f64> {
        let h = (1.0 - radius * radius).sqrt();
        ParametricImmersion::new("small circle", 1, 1, move |s: &[Jet<f64>]| {
            let arg = s[0].scale(radius.recip());
            vec![arg.cos().scale(radius), arg.sin().scale(radius), s[0].constant_like(h), s[0].zero_like()]
        })
    }

    #[test]
    fn geodesic_has_vanishing_geometry() {
        let f = great_circle();
        let grid = Grid::for_immersion(&f, 7);
        let s = sample_geometry(&f, &[0.4]).unwrap();
        assert_abs_diff_eq!(s.mean_curvature_norm, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bitension_sup(&f, &grid, BitensionMode::Biharmonic).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn small_circle_of_radius_inverse_sqrt2_is_biharmonic() {
        // circles of radius 1/√2 in S^n are the basic proper-biharmonic curves
        let f = small_circle(0.5f64.sqrt());
        let grid = Grid::from_points(vec![vec![0.0], vec![1.3], vec![2.9]]);
        assert!(bitension_sup(&f, &grid, BitensionMode::Biharmonic).unwrap() < 1e-12);
        let s = sample_geometry(&f, &[0.7]).unwrap();
        assert_abs_diff_eq!(s.mean_curvature_norm, 1.0, epsilon = 1e-13);
        let other = small_circle(0.6);
        assert!(bitension_sup(&other, &grid, BitensionMode::Biharmonic).unwrap() > 1e-3);
    }

    #[test]
    fn non_flat_chart_is_rejected() {
        let f = ParametricImmersion::new("slow circle", 1, 1, |s: &[Jet<f64>]| {
            let arg = s[0].scale(2.0);
            let zero = s[0].zero_like();
            vec![arg.cos(), arg.sin(), zero.clone(), zero]
        });
        assert!(matches!(
            bitension(&f, &[0.1], BitensionMode::Biharmonic),
            Err(Error::NonFlatChart { .. })
        ));
        // the general sample still works
        assert!(sample_geometry(&f, &[0.1]).is_ok());
    }

    #[test]
    fn singular_metric_is_reported() {
        let f = ParametricImmersion::new("constant", 1, 1, |s: &[Jet<f64>]| {
            let zero = s[0].zero_like();
            vec![s[0].constant_like(1.0), zero.clone(), zero.clone(), zero]
        });
        assert_eq!(sample_geometry(&f, &[0.0]).unwrap_err(), Error::SingularMetric);
    }

    #[test]
    fn cell_grid_layout() {
        let g = Grid::cell(&[vec![1.0, 0.0], vec![0.0, 2.0]], 2);
        assert_eq!(g.points(), &[vec![0.0, 0.0], vec![0.5, 0.0], vec![0.0, 1.0], vec![0.5, 1.0]]);
    }
}
