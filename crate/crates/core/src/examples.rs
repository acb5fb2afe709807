//! Explicit immersions: flat 3-tori, Legendre curves, the integral surface
//! in `S⁵`, cylinders along the Reeb flow, and their circle decompositions.

use std::f64::consts::{PI, TAU};

use num_complex::Complex;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::ambient::{self, AmbientVector};
use crate::classifier::{Mode, SolutionTuple};
use crate::error::{Error, Result};
use crate::immersion::{Grid, ParametricImmersion};
use crate::jets::{self, Jet};
use crate::report::Check;
use crate::scalar::{max_abs, Scalar};

pub const UNITARY_TOLERANCE: f64 = 1e-14;
pub const MODULUS_TOLERANCE: f64 = 1e-10;
pub const LATTICE_TOLERANCE: f64 = 1e-10;

fn hermitian<T: Scalar>(z: &[Complex<T>], w: &[Complex<T>]) -> Complex<T> {
    z.iter()
        .zip(w)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a * b.conj())
}

/// Orthonormal basis of `C^{n+1}` for the Hermitian product.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryBasis<T> {
    vectors: Vec<Vec<Complex<T>>>,
}

impl<T: Scalar> UnitaryBasis<T> {
    pub fn standard(dim: usize) -> Self {
        let vectors = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| Complex::new(if i == j { T::one() } else { T::zero() }, T::zero()))
                    .collect()
            })
            .collect();
        Self { vectors }
    }

    pub fn from_vectors(vectors: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let basis = Self { vectors };
        let dim = basis.vectors.len();
        if basis.vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: basis.vectors.iter().map(Vec::len).find(|&l| l != dim).unwrap_or(0),
            });
        }
        let deviation = basis.gram_deviation();
        if !(deviation <= T::lit(UNITARY_TOLERANCE)) {
            return Err(Error::NotUnitary {
                deviation: deviation.to_f64_lossy(),
            });
        }
        Ok(basis)
    }

    /// Gram-Schmidt on Gaussian random vectors, reproducible from `seed`.
    pub fn random(dim: usize, seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut vectors: Vec<Vec<Complex<f64>>> = Vec::with_capacity(dim);
        while vectors.len() < dim {
            let mut v: Vec<Complex<f64>> = (0..dim)
                .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            for _ in 0..2 {
                for e in &vectors {
                    let c = hermitian(&v, e);
                    for (x, y) in v.iter_mut().zip(e) {
                        *x -= c * y;
                    }
                }
            }
            let norm = hermitian(&v, &v).re.sqrt();
            if norm > 1e-3 {
                vectors.push(v.into_iter().map(|x| x / norm).collect());
            }
        }
        Self {
            vectors: vectors
                .into_iter()
                .map(|v| v.into_iter().map(|x| Complex::new(T::lit(x.re), T::lit(x.im))).collect())
                .collect(),
        }
    }

    pub fn vectors(&self) -> &[Vec<Complex<T>>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn gram_deviation(&self) -> T {
        let mut worst = T::zero();
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate() {
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((hermitian(a, b) - Complex::new(target, T::zero())).norm());
            }
        }
        worst
    }

    /// Hermitian coordinates `⟨z, E_k⟩` of an ambient vector.
    pub fn coordinates(&self, v: &AmbientVector<T>) -> Vec<Complex<T>> {
        let z = ambient::to_complex(v);
        self.vectors.iter().map(|e| hermitian(&z, e)).collect()
    }
}

/// `cos θ · a + sin θ · b` with `θ = ⟨f, p⟩ + φ`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigTerm<T> {
    pub frequencies: Vec<T>,
    pub phase: T,
    pub cos_part: Vec<T>,
    pub sin_part: Vec<T>,
}

impl<T: Scalar> TrigTerm<T> {
    /// Real form of `r e^{iθ} E` for a complex vector `E`.
    pub fn exponential(coefficient: T, frequencies: Vec<T>, e: &[Complex<T>]) -> Self {
        let scaled: Vec<Complex<T>> = e.iter().map(|z| z * coefficient).collect();
        let cos_part = ambient::from_complex(&scaled);
        let sin_part = ambient::complex_structure(&cos_part).expect("even dimension");
        Self {
            frequencies,
            phase: T::zero(),
            cos_part: cos_part.into_coords(),
            sin_part: sin_part.into_coords(),
        }
    }

    /// Real form of `cos(θ) a + sin(θ) b` for real ambient vectors.
    pub fn real(frequencies: Vec<T>, a: Vec<T>, b: Vec<T>) -> Self {
        Self {
            frequencies,
            phase: T::zero(),
            cos_part: a,
            sin_part: b,
        }
    }
}

/// Immersion given by a finite trigonometric sum.
pub fn trig_immersion<T: Scalar>(name: impl Into<String>, dim: usize, n: usize, terms: Vec<TrigTerm<T>>) -> ParametricImmersion<T> {
    ParametricImmersion::new(name, dim, n, move |p: &[Jet<T>]| {
        let zero = p[0].zero_like();
        let mut out = vec![zero.clone(); 2 * n + 2];
        for term in &terms {
            let mut theta = zero.add_scalar(term.phase);
            for (x, &f) in p.iter().zip(&term.frequencies) {
                if f != T::zero() {
                    theta = &theta + &x.scale(f);
                }
            }
            let (c, s) = (theta.cos(), theta.sin());
            for (k, o) in out.iter_mut().enumerate() {
                let (a, b) = (term.cos_part[k], term.sin_part[k]);
                if a != T::zero() {
                    *o = &*o + &c.scale(a);
                }
                if b != T::zero() {
                    *o = &*o + &s.scale(b);
                }
            }
        }
        out
    })
}

/// Data of the flat torus of a solution tuple: `x = Σ r_k e^{i⟨f_k, p⟩} E_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatTorus<T> {
    pub a: T,
    pub rho: (T, T),
    pub coefficients: [T; 4],
    pub frequencies: [[T; 3]; 4],
}

fn checked_sqrt<T: Scalar>(x: T, what: &'static str) -> Result<T> {
    if x > T::zero() {
        Ok(x.sqrt())
    } else {
        Err(Error::NegativeRadicand(what))
    }
}

impl<T: Scalar> FlatTorus<T> {
    /// Coefficients and frequencies for `a = 4/(c+3)`.
    pub fn new(c: T, lam: T, alpha: T, gamma: T, delta: T) -> Result<Self> {
        if !(c > T::lit(-3.0)) {
            return Err(Error::InvalidParameter(format!("c = {c} must exceed -3")));
        }
        let a = T::lit(4.0) / (c + T::lit(3.0));
        let two = T::lit(2.0);
        let root = checked_sqrt(T::lit(4.0) * gamma * (two * gamma - alpha) + delta * delta, "4γ(2γ−α)+δ²")?;
        let rho1 = (root + delta) / two;
        let rho2 = (root - delta) / two;
        let c1 = lam / checked_sqrt(lam * lam + a.recip(), "λ²+1/a")?;
        let c2 = checked_sqrt(a * (gamma - alpha) * (two * gamma - alpha), "a(γ−α)(2γ−α)")?.recip();
        let c3 = checked_sqrt(a * rho1 * (rho1 + rho2), "aρ₁(ρ₁+ρ₂)")?.recip();
        let c4 = checked_sqrt(a * rho2 * (rho1 + rho2), "aρ₂(ρ₁+ρ₂)")?.recip();
        let z = T::zero();
        Ok(Self {
            a,
            rho: (rho1, rho2),
            coefficients: [c1, c2, c3, c4],
            frequencies: [
                [(a * lam).recip(), z, z],
                [-lam, gamma - alpha, z],
                [-lam, -gamma, -rho1],
                [-lam, -gamma, rho2],
            ],
        })
    }

    pub fn from_tuple(tuple: &SolutionTuple<T>) -> Result<Self> {
        Self::new(tuple.c, tuple.lam, tuple.alpha, tuple.gamma, tuple.delta)
    }

    pub fn immersion(&self, name: impl Into<String>, basis: &UnitaryBasis<T>) -> ParametricImmersion<T> {
        let terms = (0..4)
            .map(|k| TrigTerm::exponential(self.coefficients[k], self.frequencies[k].to_vec(), &basis.vectors()[k]))
            .collect();
        trig_immersion(name, 3, 3, terms)
    }

    pub fn circle_product(&self) -> CircleProduct<T> {
        CircleProduct {
            radii: self.coefficients.iter().map(|c| c.abs()).collect(),
            frequencies: self.frequencies.iter().map(|f| f.to_vec()).collect(),
        }
    }
}

/// Flat torus of an admissible tuple in `S⁷` with the structure of curvature `c`.
pub fn flat_torus<T: Scalar>(c: T, tuple: &SolutionTuple<T>, basis: &UnitaryBasis<T>) -> Result<ParametricImmersion<T>> {
    let mut t = *tuple;
    t.c = c;
    Ok(FlatTorus::from_tuple(&t)?.immersion("flat torus", basis))
}

/// The unique flat proper-biharmonic tuple for `c = 1`.
pub fn corollary_tuple<T: Scalar>() -> SolutionTuple<T> {
    let s = |x: f64| T::lit(x).sqrt();
    SolutionTuple::flat(
        -s(5.0).recip(),
        T::lit(3.0) * s(3.0) / s(10.0),
        -s(3.0) / s(10.0),
        s(2.0),
        T::one(),
        Mode::Biharmonic,
    )
}

/// The three flat (−4)-biharmonic tuples, ordered by `λ`.
pub fn minus4_tuples<T: Scalar>() -> [SolutionTuple<T>; 3] {
    let s = |x: T| x.sqrt();
    let l = T::lit;
    let r13 = s(l(13.0));
    let r3 = s(l(3.0));
    let t = |lam, alpha, gamma, delta| SolutionTuple::flat(lam, alpha, gamma, delta, T::one(), Mode::Minus4);
    [
        t(
            -s((l(4.0) - r13) / l(3.0)),
            s((l(7.0) - r13) / l(6.0)),
            -s((l(7.0) - r13) / l(6.0)),
            T::zero(),
        ),
        t(
            -s(l(5.0) + l(2.0) * r3).recip(),
            s((l(45.0) + l(21.0) * r3) / l(13.0)),
            -s(l(6.0) / (l(21.0) + l(11.0) * r3)),
            T::zero(),
        ),
        t(
            -s(l(6.0) + r13).recip(),
            s((l(523.0) + l(139.0) * r13) / l(138.0)),
            -s((l(79.0) - l(17.0) * r13) / l(138.0)),
            s((l(14.0) + l(2.0) * r13) / l(3.0)),
        ),
    ]
}

/// Lattice of the `c = 1` torus.
pub fn corollary_lattice<T: Scalar>() -> Vec<Vec<T>> {
    let s = |x: f64| x.sqrt();
    [
        [6.0 * PI / s(5.0), s(3.0) * PI / s(10.0), PI / s(2.0)],
        [0.0, -3.0 * s(5.0) * PI / s(6.0), -PI / s(2.0)],
        [0.0, 0.0, -4.0 * PI / s(2.0)],
    ]
    .iter()
    .map(|v| v.iter().map(|&x| T::lit(x)).collect())
    .collect()
}

/// The flat proper-biharmonic torus for `c = 1`, written out term by term.
pub fn corollary_c1<T: Scalar>(basis: &UnitaryBasis<T>) -> ParametricImmersion<T> {
    let s = |x: f64| T::lit(x).sqrt();
    let (l, z) = (T::lit, T::zero());
    let e = basis.vectors();
    let terms = vec![
        TrigTerm::exponential(-s(6.0).recip(), vec![-s(5.0), z, z], &e[0]),
        TrigTerm::exponential(s(6.0).recip(), vec![s(5.0).recip(), -l(4.0) * s(3.0) / s(10.0), z], &e[1]),
        TrigTerm::exponential(
            s(6.0).recip(),
            vec![s(5.0).recip(), s(3.0) / s(10.0), -l(3.0) * s(2.0) / l(2.0)],
            &e[2],
        ),
        TrigTerm::exponential(s(2.0).recip(), vec![s(5.0).recip(), s(3.0) / s(10.0), s(2.0) / l(2.0)], &e[3]),
    ];
    trig_immersion("corollary-c1", 3, 3, terms).with_lattice(corollary_lattice())
}

/// The (−4)-biharmonic flat torus of `minus4_tuples()[index]`.
pub fn minus4_immersion<T: Scalar>(index: usize, basis: &UnitaryBasis<T>) -> Result<ParametricImmersion<T>> {
    let tuples = minus4_tuples::<T>();
    let tuple = tuples
        .get(index)
        .ok_or_else(|| Error::InvalidParameter(format!("no (-4) tuple with index {index}")))?;
    Ok(FlatTorus::from_tuple(tuple)?.immersion(format!("minus4-{}", index + 1), basis))
}

/// `(1/√2)(e^{iu}, i e^{−iu} sin √2v, i e^{−iu} cos √2v)`.
pub fn s5_surface<T: Scalar>() -> ParametricImmersion<T> {
    let r = T::lit(0.5).sqrt();
    let z = T::zero();
    let s2 = T::lit(2.0).sqrt();
    ParametricImmersion::new("s5-surface", 2, 2, move |p: &[Jet<T>]| {
        let (cu, su) = (p[0].cos(), p[0].sin());
        let w = p[1].scale(s2);
        let (cw, sw) = (w.cos(), w.sin());
        // i e^{-iu} = sin u + i cos u
        let (re2, im2) = ((&su * &sw).scale(r), (&cu * &sw).scale(r));
        let (re3, im3) = ((&su * &cw).scale(r), (&cu * &cw).scale(r));
        ambient::real_coordinates(vec![cu.scale(r), re2, re3], vec![su.scale(r), im2, im3])
    })
    .with_lattice(vec![vec![T::lit(TAU), z], vec![z, s2 * T::PI()]])
}

/// Unitary basis in which the cylinder over the `S⁵` surface is a product of circles.
pub fn s5_circle_basis<T: Scalar>() -> UnitaryBasis<T> {
    let (o, z) = (T::one(), T::zero());
    let r = T::lit(0.5).sqrt();
    UnitaryBasis {
        vectors: vec![
            vec![Complex::new(o, z), Complex::new(z, z), Complex::new(z, z)],
            vec![Complex::new(z, z), Complex::new(z, r), Complex::new(r, z)],
            vec![Complex::new(z, z), Complex::new(z, -r), Complex::new(r, z)],
        ],
    }
}

/// `y(t, p) = e^{−it} F(p)`, the orbit of `F` under the Reeb flow.
pub fn cylinder<T: Scalar>(f: &ParametricImmersion<T>) -> ParametricImmersion<T> {
    let map = f.map();
    let n = f.n();
    let name = format!("cylinder over {}", f.name());
    let cyl = ParametricImmersion::new(name, f.dim() + 1, n, move |p: &[Jet<T>]| {
        let inner = map(&p[1..]);
        let (x, y) = ambient::split_coordinates(&inner);
        let (c, s) = (p[0].cos(), p[0].sin());
        let re: Vec<Jet<T>> = x.iter().zip(&y).map(|(a, b)| &(a * &c) + &(b * &s)).collect();
        let im: Vec<Jet<T>> = x.iter().zip(&y).map(|(a, b)| &(b * &c) - &(a * &s)).collect();
        ambient::real_coordinates(re, im)
    });
    match f.lattice() {
        Some(lattice) => {
            let dim = f.dim() + 1;
            let mut vectors = vec![{
                let mut v = vec![T::zero(); dim];
                v[0] = T::lit(TAU);
                v
            }];
            for a in lattice {
                let mut v = vec![T::zero()];
                v.extend(a.iter().copied());
                vectors.push(v);
            }
            cyl.with_lattice(vectors)
        }
        None => cyl,
    }
}

/// The two orthogonal changes of variables taking the cylinder over the
/// `c = 1` torus to a product of four circles, composed as `M₂ M₁`.
pub fn torus4_transform<T: Scalar>() -> [[T; 4]; 4] {
    let s = |x: f64| x.sqrt();
    let m1 = [
        [1.0 / s(2.0), 1.0 / s(10.0), s(3.0) / (2.0 * s(5.0)), 0.5],
        [0.0, 2.0 / s(5.0), -s(6.0) / (4.0 * s(5.0)), -s(2.0) / 4.0],
        [0.0, 0.0, s(5.0) / (2.0 * s(2.0)), -s(3.0) / (2.0 * s(2.0))],
        [1.0 / s(2.0), -1.0 / s(10.0), -s(3.0) / (2.0 * s(5.0)), -0.5],
    ];
    let m2 = [
        [s(2.0) / s(6.0), 2.0 / s(6.0), 0.0, 0.0],
        [-s(2.0) / s(6.0), 1.0 / s(6.0), -s(3.0) / s(6.0), 0.0],
        [-s(2.0) / s(6.0), 1.0 / s(6.0), s(3.0) / s(6.0), 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ];
    let mut out = [[T::zero(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = T::lit((0..4).map(|k| m2[i][k] * m1[k][j]).sum());
        }
    }
    out
}

/// Lattice generators of the four-circle product in its own coordinates.
pub fn torus4_lattice_transformed<T: Scalar>() -> Vec<Vec<T>> {
    let a = T::lit(TAU) / T::lit(6.0).sqrt();
    let b = T::lit(TAU) / T::lit(2.0).sqrt();
    let z = T::zero();
    vec![vec![a, z, z, z], vec![z, a, z, z], vec![z, z, a, z], vec![z, z, z, b]]
}

/// The same generators pulled back to `(t, u, v, w)`: `Mᵀ ã`.
pub fn torus4_lattice<T: Scalar>() -> Vec<Vec<T>> {
    let m = torus4_transform::<T>();
    torus4_lattice_transformed::<T>()
        .iter()
        .map(|a| (0..4).map(|j| (0..4).map(|i| m[i][j] * a[i]).sum()).collect())
        .collect()
}

/// The cylinder in the transformed coordinates: `ỹ(p̃) = y(Mᵀ p̃)`.
pub fn torus4_reparametrized<T: Scalar>(y: &ParametricImmersion<T>) -> ParametricImmersion<T> {
    let m = torus4_transform::<T>();
    let transpose: Vec<Vec<T>> = (0..4).map(|i| (0..4).map(|j| m[j][i]).collect()).collect();
    y.reparametrize(format!("{} (product coordinates)", y.name()), transpose)
        .with_lattice(torus4_lattice_transformed())
}

fn validate_legendre<T: Scalar>(vectors: &[Vec<T>], pairs: &[(usize, usize)]) -> Vec<String> {
    let mut failures = Vec::new();
    let tol = T::lit(1e-12);
    let vs: Vec<AmbientVector<T>> = vectors.iter().map(|v| AmbientVector::new(v.clone())).collect();
    for (i, a) in vs.iter().enumerate() {
        for (j, b) in vs.iter().enumerate().skip(i) {
            let target = if i == j { T::one() } else { T::zero() };
            if (a.dot(b) - target).abs() > tol {
                failures.push(format!("<e{},e{}> = {}", i + 1, j + 1, target));
            }
        }
    }
    for &(i, j) in pairs {
        let jb = ambient::complex_structure(&vs[j]).expect("even dimension");
        if vs[i].dot(&jb).abs() > tol {
            failures.push(format!("<e{},Je{}> = 0", i + 1, j + 1));
        }
    }
    failures
}

/// `(1/√2)(cos √2s e₁ + sin √2s e₂ + e₃)`, with `⟨eᵢ, 𝒥eⱼ⟩ = 0`.
pub fn legendre_circle<T: Scalar>(vectors: [Vec<T>; 3]) -> Result<ParametricImmersion<T>> {
    let dim = vectors[0].len();
    if !dim.is_multiple_of(2) || vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim + dim % 2,
            actual: dim,
        });
    }
    let failures = validate_legendre(&vectors, &[(0, 1), (0, 2), (1, 2)]);
    if !failures.is_empty() {
        return Err(Error::VectorConditions(failures));
    }
    let r = T::lit(0.5).sqrt();
    let s2 = T::lit(2.0).sqrt();
    let [e1, e2, e3] = vectors;
    let sc = |v: Vec<T>| v.into_iter().map(|x| x * r).collect::<Vec<T>>();
    let terms = vec![
        TrigTerm::real(vec![s2], sc(e1), sc(e2)),
        TrigTerm::real(vec![T::zero()], sc(e3), vec![T::zero(); dim]),
    ];
    Ok(trig_immersion("legendre-circle", 1, dim / 2 - 1, terms))
}

/// The circle with the standard frame `x¹, x², x³` of `S⁷`.
pub fn standard_legendre_circle<T: Scalar>() -> ParametricImmersion<T> {
    let e = |i| AmbientVector::<T>::basis(8, i).into_coords();
    legendre_circle([e(0), e(1), e(2)]).expect("standard frame is Legendre")
}

/// `A = √(1+κ₁)`, `B = √(1−κ₁)`.
pub fn helix_constants<T: Scalar>(kappa1: T) -> (T, T) {
    ((T::one() + kappa1).sqrt(), (T::one() - kappa1).sqrt())
}

/// `(1/√2)(cos As e₁ + sin As e₂ + cos Bs e₃ + sin Bs e₄)`.
pub fn legendre_helix<T: Scalar>(kappa1: T, vectors: [Vec<T>; 4]) -> Result<ParametricImmersion<T>> {
    if !(kappa1 > T::zero() && kappa1 < T::one()) {
        return Err(Error::InvalidParameter(format!("helix needs 0 < kappa1 < 1, got {kappa1}")));
    }
    let dim = vectors[0].len();
    if !dim.is_multiple_of(2) || vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim + dim % 2,
            actual: dim,
        });
    }
    let (a, b) = helix_constants(kappa1);
    let mut failures = validate_legendre(&vectors, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    let j = |v: &Vec<T>| ambient::complex_structure(&AmbientVector::new(v.clone())).expect("even dimension");
    let mixed = a * AmbientVector::new(vectors[0].clone()).dot(&j(&vectors[1]))
        + b * AmbientVector::new(vectors[2].clone()).dot(&j(&vectors[3]));
    if mixed.abs() > T::lit(1e-12) {
        failures.push("A<e1,Je2> + B<e3,Je4> = 0".to_string());
    }
    if !failures.is_empty() {
        return Err(Error::VectorConditions(failures));
    }
    let r = T::lit(0.5).sqrt();
    let [e1, e2, e3, e4] = vectors;
    let sc = |v: Vec<T>| v.into_iter().map(|x| x * r).collect::<Vec<T>>();
    let terms = vec![TrigTerm::real(vec![a], sc(e1), sc(e2)), TrigTerm::real(vec![b], sc(e3), sc(e4))];
    Ok(trig_immersion(format!("legendre-helix:{kappa1}"), 1, dim / 2 - 1, terms))
}

/// Frame in `R⁶ = C³`: `e₁ = x¹`, `e₂ = (0, α₁, 0, −σB/A, α₂, 0)`, `e₃ = x³`,
/// `e₄ = σ𝒥e₃`, with `σ = ±1` and `α₁² + α₂² = 2κ₁/A²`.
pub fn helix_frame_s5<T: Scalar>(kappa1: T, alpha1: T, sigma: T) -> Result<[Vec<T>; 4]> {
    let (a, b) = helix_constants(kappa1);
    let rest = T::lit(2.0) * kappa1 / (a * a) - alpha1 * alpha1;
    if rest < -T::lit(1e-15) {
        return Err(Error::NegativeRadicand("2κ₁/A² − α₁²"));
    }
    let alpha2 = rest.max(T::zero()).sqrt();
    let z = T::zero();
    let o = T::one();
    Ok([
        vec![o, z, z, z, z, z],
        vec![z, alpha1, z, -sigma * b / a, alpha2, z],
        vec![z, z, o, z, z, z],
        vec![z, z, z, z, z, sigma],
    ])
}

/// Radii and angular frequencies of a product of circles.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleProduct<T> {
    pub radii: Vec<T>,
    pub frequencies: Vec<Vec<T>>,
}

impl<T: Scalar> CircleProduct<T> {
    /// `|Σ r² − 1|`
    pub fn radius_sum_deviation(&self) -> T {
        (self.radii.iter().map(|&r| r * r).sum::<T>() - T::one()).abs()
    }

    pub fn sorted_radii(&self) -> Vec<T> {
        let mut r = self.radii.clone();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        r
    }
}

/// Reads `F` in the Hermitian coordinates of `basis` and checks each nonzero
/// coordinate is a circle: constant modulus and constant phase gradient
/// `Im(w̄ ∂w)/|w|²` over the grid.
pub fn circle_decomposition<T: Scalar>(
    f: &ParametricImmersion<T>,
    basis: &UnitaryBasis<T>,
    grid: &Grid<T>,
) -> Result<CircleProduct<T>> {
    let k = basis.dim();
    let mut moduli: Vec<Vec<T>> = vec![Vec::new(); k];
    let mut gradients: Vec<Vec<Vec<T>>> = vec![Vec::new(); k];
    for p in grid.points() {
        let position = f.jets(p, 1)?;
        let z = AmbientVector::new(jets::values(&position));
        let w = basis.coordinates(&z);
        let derivs: Vec<Vec<Complex<T>>> = (0..f.dim())
            .map(|i| basis.coordinates(&AmbientVector::new(jets::values(&jets::diff_vec(&position, i)))))
            .collect();
        for idx in 0..k {
            let m = w[idx].norm();
            moduli[idx].push(m);
            let grad = derivs
                .iter()
                .map(|d| if m > T::lit(MODULUS_TOLERANCE) { (w[idx].conj() * d[idx]).im / (m * m) } else { T::zero() })
                .collect();
            gradients[idx].push(grad);
        }
    }
    let mut radii = Vec::new();
    let mut frequencies = Vec::new();
    for idx in 0..k {
        let (lo, hi) = moduli[idx]
            .iter()
            .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &m| (lo.min(m), hi.max(m)));
        let spread = hi - lo;
        if !(spread < T::lit(MODULUS_TOLERANCE)) {
            return Err(Error::ModulusNotConstant {
                index: idx,
                spread: spread.to_f64_lossy(),
            });
        }
        if hi <= T::lit(MODULUS_TOLERANCE) {
            continue;
        }
        let first = &gradients[idx][0];
        let phase_spread = max_abs(
            gradients[idx]
                .iter()
                .flat_map(|g| g.iter().zip(first).map(|(&a, &b)| a - b)),
        );
        if !(phase_spread < T::lit(MODULUS_TOLERANCE)) {
            return Err(Error::NotConstant {
                spread: phase_spread.to_f64_lossy(),
            });
        }
        radii.push(hi);
        frequencies.push(first.clone());
    }
    let product = CircleProduct { radii, frequencies };
    let deviation = product.radius_sum_deviation();
    if !(deviation < T::lit(1e-12)) {
        return Err(Error::NotConstant {
            spread: deviation.to_f64_lossy(),
        });
    }
    Ok(product)
}

/// Max over the grid of `|F(p + aᵢ) − F(p)|` against `1e-10`.
pub fn lattice_check<T: Scalar>(f: &ParametricImmersion<T>, vectors: &[Vec<T>], grid: &Grid<T>) -> Result<Check> {
    let residual = crate::immersion::lattice_residual(f, vectors, grid)?;
    Ok(Check::new("lattice", residual.to_f64_lossy(), LATTICE_TOLERANCE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn corollary_torus_matches_displayed_coefficients() {
        let t = FlatTorus::from_tuple(&corollary_tuple::<f64>()).unwrap();
        let r6 = 6f64.sqrt().recip();
        let expected = [-r6, r6, r6, 0.5f64.sqrt()];
        for (c, e) in t.coefficients.iter().zip(expected) {
            assert_abs_diff_eq!(*c, e, epsilon = 1e-15);
        }
        let (s3, s10, s2) = (3f64.sqrt(), 10f64.sqrt(), 2f64.sqrt());
        let freq = [
            [-5f64.sqrt(), 0.0, 0.0],
            [1.0 / 5f64.sqrt(), -4.0 * s3 / s10, 0.0],
            [1.0 / 5f64.sqrt(), s3 / s10, -3.0 * s2 / 2.0],
            [1.0 / 5f64.sqrt(), s3 / s10, s2 / 2.0],
        ];
        for (row, want) in t.frequencies.iter().zip(freq) {
            for (x, y) in row.iter().zip(want) {
                assert_abs_diff_eq!(*x, y, epsilon = 1e-14);
            }
        }
        // oracle: direct radical arithmetic for ρ₁ρ₂ and ρ₁ − ρ₂
        let tuple = corollary_tuple::<f64>();
        assert_abs_diff_eq!(t.rho.0 * t.rho.1, tuple.gamma * (2.0 * tuple.gamma - tuple.alpha), epsilon = 1e-14);
        assert_abs_diff_eq!(t.rho.0 - t.rho.1, tuple.delta, epsilon = 1e-14);
    }

    #[test]
    fn general_torus_agrees_with_written_out_form() {
        let basis = UnitaryBasis::<f64>::standard(4);
        let general = flat_torus(1.0, &corollary_tuple(), &basis).unwrap();
        let written = corollary_c1(&basis);
        for p in [[0.1, 0.2, 0.3], [1.7, -0.4, 2.2]] {
            let d = &general.eval(&p).unwrap() - &written.eval(&p).unwrap();
            assert!(d.max_abs() < 1e-14);
        }
    }

    #[test]
    fn inadmissible_tuple_has_negative_radicand() {
        let bad = SolutionTuple::flat(-0.4, 2.0, 0.5, 0.0, 1.0, Mode::Biharmonic);
        assert!(matches!(FlatTorus::from_tuple(&bad), Err(Error::NegativeRadicand(_))));
    }

    #[test]
    fn random_basis_is_unitary() {
        let b = UnitaryBasis::<f64>::random(4, 7);
        assert!(b.gram_deviation() < 1e-14);
        assert!(UnitaryBasis::from_vectors(b.vectors().to_vec()).is_ok());
        let mut v = b.vectors().to_vec();
        v[0][0] *= 2.0;
        assert!(matches!(UnitaryBasis::from_vectors(v), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn helix_frame_conditions() {
        let k = 0.5;
        let (a, b) = helix_constants(k);
        assert_abs_diff_eq!(a, 1.5f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(b, 0.5f64.sqrt(), epsilon = 1e-15);
        for sigma in [1.0, -1.0] {
            let frame = helix_frame_s5(k, 0.3, sigma).unwrap();
            assert!(legendre_helix(k, frame).is_ok());
        }
        let mut frame = helix_frame_s5(k, 0.3, 1.0).unwrap();
        frame[3][5] = -1.0;
        match legendre_helix(k, frame) {
            Err(Error::VectorConditions(v)) => assert_eq!(v, vec!["A<e1,Je2> + B<e3,Je4> = 0".to_string()]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn torus4_transform_is_orthogonal() {
        let m = torus4_transform::<f64>();
        for i in 0..4 {
            for j in 0..4 {
                let dot: f64 = (0..4).map(|k| m[i][k] * m[j][k]).sum();
                assert_abs_diff_eq!(dot, if i == j { 1.0 } else { 0.0 }, epsilon = 1e-15);
            }
        }
    }
}
