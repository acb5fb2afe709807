//! Solutions of the classification systems for 3-dimensional proper-biharmonic
//! (and (−4)-biharmonic) integral C-parallel submanifolds.
//!
//! The flat case reduces, with `α = ωγ`, to one univariate polynomial in `ω`
//! per branch (`δ = 0`, `δ > 0`). Polynomials are built with exact rational
//! coefficients, made square-free, and their real roots isolated by Sturm
//! sequences before reconstruction and re-substitution.

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::Result;
use crate::jets::Jet;
use crate::poly::{rational, Poly};
use crate::scalar::Scalar;
use crate::shape_algebra::{admits_proper, flat_system_residual, AdaptedShapeOperators, Criterion};

pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
pub const BOUNDARY_TOLERANCE: f64 = 1e-12;
/// Boundary and deduplication tolerance of the random Newton cross-check.
pub const FALLBACK_TOLERANCE: f64 = 1e-5;
pub const ISOLATION_WIDTH: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TupleCase {
    FlatI,
    #[serde(rename = "CaseII_1")]
    CaseII1,
    #[serde(rename = "CaseII_2")]
    CaseII2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Biharmonic,
    Minus4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Reduction,
    Fallback,
}

/// Constants `λ, α, γ, δ` of a flat solution; `λ₂ = λ₃ = λ`,
/// `λ₁ = (λ² − (c+3)/4)/λ`, `β = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolutionTuple<T> {
    pub lam: T,
    pub alpha: T,
    pub gamma: T,
    pub delta: T,
    pub case: TupleCase,
    pub c: T,
    pub mode: Mode,
    pub origin: Origin,
}

impl<T: Scalar> SolutionTuple<T> {
    pub fn flat(lam: T, alpha: T, gamma: T, delta: T, c: T, mode: Mode) -> Self {
        Self {
            lam,
            alpha,
            gamma,
            delta,
            case: TupleCase::FlatI,
            c,
            mode,
            origin: Origin::Reduction,
        }
    }

    pub fn criterion(&self) -> Criterion<T> {
        match self.mode {
            Mode::Biharmonic => Criterion::Biharmonic { c: self.c, n: 3 },
            Mode::Minus4 => Criterion::Minus4,
        }
    }

    /// `(c + 3) / 4`.
    pub fn q(&self) -> T {
        (self.c + T::lit(3.0)) / T::lit(4.0)
    }

    pub fn lambda1(&self) -> T {
        (self.lam * self.lam - self.q()) / self.lam
    }

    pub fn shape_operators(&self) -> AdaptedShapeOperators<T> {
        AdaptedShapeOperators::flat(self.lam, self.alpha, self.gamma, self.delta, self.q())
    }

    /// Largest residual of the four flat equations and the eigen-criterion.
    pub fn residual(&self) -> T {
        let flat = flat_system_residual(self.lam, self.alpha, self.gamma, self.delta, self.criterion());
        let eigen = self.shape_operators().criterion(self.criterion());
        flat.iter().fold(eigen.normalized(), |m, x| m.max(x.abs()))
    }

    pub fn components(&self) -> [T; 4] {
        [self.lam, self.alpha, self.gamma, self.delta]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaBranch {
    DeltaZero,
    DeltaPos,
}

/// Why a candidate root was not accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    /// Denominator of the branch formulas vanishes.
    Pole,
    /// `ω ≥ 0` is incompatible with `γ < 0 < α`.
    OmegaNotNegative,
    /// `γ²`, `λ²` or (branch `δ > 0`) `δ²` is not positive.
    NegativeSquare,
    /// `λ² ≥ (c+3)/4`, so `λ₁ ≤ 0`.
    LambdaOutOfRange,
    /// `α > λ₁`.
    AlphaExceedsLambda1,
    /// `δ > α`.
    DeltaExceedsAlpha,
    /// `α ≤ 2γ`.
    AlphaNotAboveTwoGamma,
    /// `λ² = (c+3)/12`: the mean curvature vanishes.
    MinimalLambda,
    /// Re-substitution residual above tolerance.
    ResidualTooLarge,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "reason")]
pub enum RootStatus {
    Accepted,
    Boundary,
    Rejected(Rejection),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootOutcome {
    pub omega: f64,
    /// `λ²` when it comes from the `α = −γ` sub-case rather than the `ω` formulas.
    pub lambda_sq: Option<f64>,
    pub status: RootStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionTrace {
    pub omega_branch: OmegaBranch,
    /// Coefficients of the cleared polynomial in `ω`, lowest degree first.
    pub polynomial: Vec<f64>,
    pub square_free_degree: usize,
    pub roots: Vec<RootOutcome>,
}

impl ReductionTrace {
    pub fn accepted(&self) -> impl Iterator<Item = &RootOutcome> {
        self.roots.iter().filter(|r| r.status == RootStatus::Accepted)
    }

    pub fn rejected(&self) -> impl Iterator<Item = (&RootOutcome, Rejection)> {
        self.roots.iter().filter_map(|r| match r.status {
            RootStatus::Rejected(why) => Some((r, why)),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlatSolution {
    pub tuples: Vec<SolutionTuple<f64>>,
    pub boundary: Vec<SolutionTuple<f64>>,
    pub traces: Vec<ReductionTrace>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Random starts for the 4-variable Newton sweep; zero disables it.
    pub fallback_starts: usize,
    pub seed: u64,
    /// Process isolated roots in descending order (the output must not change).
    pub reverse_roots: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            fallback_starts: 10_000,
            seed: 0x5eed,
            reverse_roots: false,
        }
    }
}

/// Branch constants `q`, `k` and derived `s = q + k`, `b = (2q + k)/2`,
/// `P = s + 5q`, kept exactly.
#[derive(Debug, Clone)]
struct Constants {
    c: f64,
    mode: Mode,
    q: BigRational,
    b: BigRational,
    s: BigRational,
    p: BigRational,
}

impl Constants {
    fn new(c: f64, mode: Mode) -> Self {
        let int = |v: i64| BigRational::from_integer(v.into());
        let (q, k) = match mode {
            Mode::Biharmonic => {
                let c = rational(c);
                ((&c + int(3)) / int(4), (int(3) * &c + int(1)) / int(2))
            }
            Mode::Minus4 => (int(1), int(6)),
        };
        let s = &q + &k;
        let b = (int(2) * &q + &k) / int(2);
        let p = &s + int(5) * &q;
        Self { c, mode, q, b, s, p }
    }

    fn f(x: &BigRational) -> f64 {
        num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
    }
}

type P = Poly<BigRational>;

fn cpoly(x: &BigRational) -> P {
    Poly::constant(x.clone())
}

/// `(3N_L − qD)(3N_L² − 2bN_LD + q²D²) + N_L²·rest`, the first equation
/// multiplied by `D³` where `L = N_L / D`.
fn cleared_first_equation(k: &Constants, n_l: &P, d: &P, rest: &P) -> P {
    let three = cpoly(&BigRational::from_integer(3.into()));
    let two_b = cpoly(&(&k.b * BigRational::from_integer(2.into())));
    let q = cpoly(&k.q);
    let qd = &q * d;
    let first = &(&three * n_l) - &qd;
    let second = &(&(&three * &(n_l * n_l)) - &(&two_b * &(n_l * d))) + &(&qd * &qd);
    &(&first * &second) + &(&(n_l * n_l) * rest)
}

fn branch_polynomial(k: &Constants, branch: OmegaBranch) -> P {
    let int = |v: i64| BigRational::from_integer(v.into());
    let w = P::x();
    let one_minus_w = &cpoly(&int(1)) - &w;
    let w_plus_1 = P::linear_root(int(-1));
    let pc = cpoly(&k.p);
    let q = cpoly(&k.q);
    match branch {
        OmegaBranch::DeltaZero => {
            let d = &P::linear_root(int(2)) * &P::linear_root(int(3));
            let n_l = &(&one_minus_w * &pc) - &(&q * &d);
            let rest = &w_plus_1.pow(2) * &pc;
            cleared_first_equation(k, &n_l, &d, &rest)
        }
        OmegaBranch::DeltaPos => {
            let d = &P::linear_root(int(1)).pow(2) * &P::linear_root(int(2));
            let n_g = &w * &pc;
            let n_l = &(&one_minus_w * &n_g) - &(&q * &d);
            let n_d = &(&(&cpoly(&k.s) * &d) - &(&cpoly(&int(5)) * &n_l)) - &(&P::linear_root(int(-3)) * &n_g);
            let rest = &(&w_plus_1.pow(2) * &n_g) + &n_d;
            cleared_first_equation(k, &n_l, &d, &rest)
        }
    }
}

/// Values `(D, G = γ², L = λ², δ²)` of the branch formulas at `ω`.
fn branch_values(k: &Constants, branch: OmegaBranch, w: f64) -> (f64, f64, f64, f64) {
    let (q, s, p) = (Constants::f(&k.q), Constants::f(&k.s), Constants::f(&k.p));
    match branch {
        OmegaBranch::DeltaZero => {
            let d = (w - 2.0) * (w - 3.0);
            let g = p / d;
            let l = (1.0 - w) * g - q;
            (d, g, l, 0.0)
        }
        OmegaBranch::DeltaPos => {
            let d = (w - 1.0) * (w - 1.0) * (w - 2.0);
            let g = w * p / d;
            let l = (1.0 - w) * g - q;
            (d, g, l, s - 5.0 * l - (3.0 + w) * g)
        }
    }
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b) / 1f64.max(a.abs()).max(b.abs())
}

/// Sign-corrected tuple from `(G, L, δ²)` and `ω`, or the first violated constraint.
fn reconstruct(
    k: &Constants,
    w: f64,
    g: f64,
    l: f64,
    delta_sq: f64,
    branch: OmegaBranch,
) -> std::result::Result<(SolutionTuple<f64>, bool), Rejection> {
    let q = Constants::f(&k.q);
    if !(w < 0.0) {
        return Err(Rejection::OmegaNotNegative);
    }
    let positive_delta = branch == OmegaBranch::DeltaPos;
    if !(g > 0.0) || !(l > 0.0) || (positive_delta && !(delta_sq > BOUNDARY_TOLERANCE)) {
        return Err(Rejection::NegativeSquare);
    }
    if !(relative(q, l) > BOUNDARY_TOLERANCE) {
        return Err(Rejection::LambdaOutOfRange);
    }
    if relative(3.0 * l, q).abs() <= BOUNDARY_TOLERANCE {
        return Err(Rejection::MinimalLambda);
    }
    let lam = -l.sqrt();
    let gamma = -g.sqrt();
    let alpha = w * gamma;
    let delta = if positive_delta { delta_sq.sqrt() } else { 0.0 };
    let tuple = SolutionTuple::flat(lam, alpha, gamma, delta, k.c, k.mode);
    if relative(alpha, tuple.lambda1()) > BOUNDARY_TOLERANCE {
        return Err(Rejection::AlphaExceedsLambda1);
    }
    let alpha_delta = relative(alpha, delta);
    if alpha_delta < -BOUNDARY_TOLERANCE {
        return Err(Rejection::DeltaExceedsAlpha);
    }
    if !(alpha > 2.0 * gamma) {
        return Err(Rejection::AlphaNotAboveTwoGamma);
    }
    if !(tuple.residual() < RESIDUAL_TOLERANCE) {
        return Err(Rejection::ResidualTooLarge);
    }
    Ok((tuple, alpha_delta.abs() <= BOUNDARY_TOLERANCE))
}

fn record(
    outcome: std::result::Result<(SolutionTuple<f64>, bool), Rejection>,
    omega: f64,
    lambda_sq: Option<f64>,
    accepted: &mut Vec<SolutionTuple<f64>>,
    boundary: &mut Vec<SolutionTuple<f64>>,
) -> RootOutcome {
    let status = match outcome {
        Ok((t, false)) => {
            accepted.push(t);
            RootStatus::Accepted
        }
        Ok((t, true)) => {
            boundary.push(t);
            RootStatus::Boundary
        }
        Err(why) => RootStatus::Rejected(why),
    };
    RootOutcome { omega, lambda_sq, status }
}

fn run_branch(
    k: &Constants,
    branch: OmegaBranch,
    options: &SolverOptions,
    accepted: &mut Vec<SolutionTuple<f64>>,
    boundary: &mut Vec<SolutionTuple<f64>>,
) -> Result<ReductionTrace> {
    let poly = branch_polynomial(k, branch);
    let square_free = poly.square_free();
    let mut roots = square_free.real_roots(ISOLATION_WIDTH)?;
    if options.reverse_roots {
        roots.reverse();
    }
    let mut outcomes = Vec::new();
    for w in roots {
        let (d, g, l, delta_sq) = branch_values(k, branch, w);
        let outcome = if d.abs() <= BOUNDARY_TOLERANCE {
            Err(Rejection::Pole)
        } else {
            reconstruct(k, w, g, l, delta_sq, branch)
        };
        outcomes.push(record(outcome, w, None, accepted, boundary));
    }
    if branch == OmegaBranch::DeltaZero {
        // α = −γ: the second equation holds identically and the first one
        // factors as (3L − q)(3L² − 2bL + q²) = 0 with γ² = (q + L)/2.
        let (q, b) = (Constants::f(&k.q), Constants::f(&k.b));
        let mut candidates = vec![q / 3.0];
        let disc = b * b - 3.0 * q * q;
        if disc >= 0.0 {
            for l in [(b - disc.sqrt()) / 3.0, (b + disc.sqrt()) / 3.0] {
                if !candidates.iter().any(|x| (x - l).abs() < 1e-14) {
                    candidates.push(l);
                }
            }
        }
        if options.reverse_roots {
            candidates.reverse();
        }
        for l in candidates {
            let outcome = reconstruct(k, -1.0, (q + l) / 2.0, l, 0.0, branch);
            outcomes.push(record(outcome, -1.0, Some(l), accepted, boundary));
        }
    }
    outcomes.sort_by(|a, b| {
        a.omega
            .total_cmp(&b.omega)
            .then(a.lambda_sq.unwrap_or(f64::NAN).total_cmp(&b.lambda_sq.unwrap_or(f64::NAN)))
    });
    Ok(ReductionTrace {
        omega_branch: branch,
        polynomial: poly.to_f64(),
        square_free_degree: square_free.degree().unwrap_or(0),
        roots: outcomes,
    })
}

fn same_tuple(a: &SolutionTuple<f64>, b: &SolutionTuple<f64>, tol: f64) -> bool {
    a.case == b.case && a.components().iter().zip(b.components()).all(|(x, y)| (x - y).abs() < tol)
}

fn sort_tuples(tuples: &mut Vec<SolutionTuple<f64>>) {
    tuples.sort_by(|a, b| {
        a.case
            .cmp(&b.case)
            .then(a.lam.total_cmp(&b.lam))
            .then(a.alpha.total_cmp(&b.alpha))
    });
    tuples.dedup_by(|a, b| same_tuple(a, b, 1e-9));
}

/// Four flat equations evaluated on jets in `(λ, α, γ, δ)`.
fn flat_system_jets(x: &[Jet<f64>], q: f64, k: f64) -> [Jet<f64>; 4] {
    let s = q + k;
    let b = (2.0 * q + k) / 2.0;
    let (lam, a, g, d) = (&x[0], &x[1], &x[2], &x[3]);
    let l = lam * lam;
    let ag = a + g;
    let dd = d * d;
    let gg = g * g;
    let first = (l.scale(3.0).add_scalar(-q)) * ((&l * &l).scale(3.0) - l.scale(2.0 * b)).add_scalar(q * q)
        + (&l * &l) * (&ag * &ag + dd.clone());
    let second = &ag * &(l.scale(5.0) + a * a + gg.clone()).add_scalar(-s) + g * &dd;
    let third = d * &(l.scale(5.0) + dd.clone() + gg.scale(3.0) + a * g).add_scalar(-s);
    let fourth = (l.clone() + a * g - gg).add_scalar(q);
    [first, second, third, fourth]
}

fn solve4(mut m: [[f64; 4]; 4], mut rhs: [f64; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let pivot = (col..4).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for i in col + 1..4 {
            let f = m[i][col] / m[col][col];
            for j in col..4 {
                m[i][j] -= f * m[col][j];
            }
            rhs[i] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 4];
    for i in (0..4).rev() {
        let tail: f64 = (i + 1..4).map(|j| m[i][j] * x[j]).sum();
        x[i] = (rhs[i] - tail) / m[i][i];
    }
    Some(x)
}

fn newton(start: [f64; 4], q: f64, k: f64) -> Option<[f64; 4]> {
    let mut x = start;
    for _ in 0..60 {
        let jets = Jet::seed(&x, 1).ok()?;
        let f = flat_system_jets(&jets, q, k);
        let values = f.clone().map(|e| e.value());
        if values.iter().all(|v| v.abs() < 1e-14) {
            return Some(x);
        }
        let mut jac = [[0.0; 4]; 4];
        for (row, e) in jac.iter_mut().zip(&f) {
            for (var, entry) in row.iter_mut().enumerate() {
                let mut idx = [0usize; 4];
                idx[var] = 1;
                *entry = e.partial(&idx).ok()?;
            }
        }
        let step = solve4(jac, values.map(|v| -v))?;
        for (xi, si) in x.iter_mut().zip(step) {
            *xi += si;
        }
        if !x.iter().all(|v| v.is_finite() && v.abs() < 1e6) {
            return None;
        }
    }
    let jets = Jet::seed(&x, 0).ok()?;
    flat_system_jets(&jets, q, k)
        .iter()
        .all(|e| e.value().abs() < 1e-12)
        .then_some(x)
}

/// Random-start Newton sweep on the full 4-variable flat system. Solutions
/// are normalized with the symmetries `λ ↦ −λ`, `(α,γ,δ) ↦ −(α,γ,δ)`, `δ ↦ −δ`
/// and kept only if admissible.
fn fallback_sweep(k: &Constants, options: &SolverOptions) -> Vec<SolutionTuple<f64>> {
    let q = Constants::f(&k.q);
    let kk = Constants::f(&k.s) - q;
    let radius = 2.0 * Constants::f(&k.s).abs().sqrt().max(1.0);
    let mut rng = StdRng::seed_from_u64(options.seed);
    let mut found: Vec<SolutionTuple<f64>> = Vec::new();
    for _ in 0..options.fallback_starts {
        let start = [
            -rng.gen_range(0.0..q.sqrt()),
            rng.gen_range(-radius..radius),
            rng.gen_range(-radius..radius),
            rng.gen_range(-radius..radius),
        ];
        let Some([lam, mut a, mut g, d]) = newton(start, q, kk) else {
            continue;
        };
        if a < 0.0 {
            a = -a;
            g = -g;
        }
        let mut tuple = SolutionTuple::flat(-lam.abs(), a, g, d.abs(), k.c, k.mode);
        tuple.origin = Origin::Fallback;
        let l = lam * lam;
        // Newton creeps slowly into the multiple roots on the excluded
        // boundary, so the guards here are much looser than the exact path's.
        let admissible = relative(q, l) > FALLBACK_TOLERANCE
            && relative(3.0 * l, q).abs() > FALLBACK_TOLERANCE
            && tuple.alpha > 0.0
            && relative(tuple.alpha, tuple.lambda1()) <= FALLBACK_TOLERANCE
            && relative(tuple.alpha, tuple.delta) >= -FALLBACK_TOLERANCE
            && tuple.alpha > 2.0 * tuple.gamma
            && tuple.residual() < RESIDUAL_TOLERANCE;
        if admissible && !found.iter().any(|f| same_tuple(f, &tuple, FALLBACK_TOLERANCE)) {
            found.push(tuple);
        }
    }
    found
}

fn solve(k: Constants, options: &SolverOptions) -> Result<FlatSolution> {
    let mut tuples = Vec::new();
    let mut boundary = Vec::new();
    let mut traces = Vec::new();
    let branches = if options.reverse_roots {
        [OmegaBranch::DeltaPos, OmegaBranch::DeltaZero]
    } else {
        [OmegaBranch::DeltaZero, OmegaBranch::DeltaPos]
    };
    for branch in branches {
        traces.push(run_branch(&k, branch, options, &mut tuples, &mut boundary)?);
    }
    traces.sort_by_key(|t| t.omega_branch == OmegaBranch::DeltaPos);
    sort_tuples(&mut tuples);
    sort_tuples(&mut boundary);
    if options.fallback_starts > 0 {
        for extra in fallback_sweep(&k, options) {
            let known = tuples.iter().chain(&boundary).any(|t| same_tuple(t, &extra, FALLBACK_TOLERANCE));
            if !known {
                tuples.push(extra);
            }
        }
        sort_tuples(&mut tuples);
    }
    Ok(FlatSolution { tuples, boundary, traces })
}

/// Flat proper-biharmonic solutions in the space form of φ-sectional curvature `c`.
/// Empty for `c ≤ −1/3`.
pub fn solve_flat(c: f64) -> Result<FlatSolution> {
    solve_flat_with(c, &SolverOptions::default())
}

pub fn solve_flat_with(c: f64, options: &SolverOptions) -> Result<FlatSolution> {
    if !c.is_finite() || !admits_proper(c, 3) {
        return Ok(FlatSolution {
            tuples: Vec::new(),
            boundary: Vec::new(),
            traces: Vec::new(),
        });
    }
    solve(Constants::new(c, Mode::Biharmonic), options)
}

/// Flat (−4)-biharmonic solutions in the unit 7-sphere.
pub fn solve_minus4_flat() -> Result<FlatSolution> {
    solve_minus4_flat_with(&SolverOptions::default())
}

pub fn solve_minus4_flat_with(options: &SolverOptions) -> Result<FlatSolution> {
    solve(Constants::new(1.0, Mode::Minus4), options)
}

/// Product `Γ × M̄²` data: helix curvatures and the radius of the sphere factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseIIEntry {
    pub case: TupleCase,
    pub c: f64,
    pub mode: Mode,
    pub lambda: Option<f64>,
    pub lambda_sq: Option<f64>,
    pub kappa1: f64,
    pub kappa2: f64,
    pub radius: f64,
}

fn case_ii_2(c: f64, mode: Mode, q: f64, b: f64) -> Vec<CaseIIEntry> {
    let disc = b * b - 3.0 * q * q;
    if disc < 0.0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for l in [(b - disc.sqrt()) / 3.0, (b + disc.sqrt()) / 3.0] {
        let admissible = l > 0.0 && relative(q, l) > BOUNDARY_TOLERANCE && relative(3.0 * l, q).abs() > BOUNDARY_TOLERANCE;
        if !admissible || out.iter().any(|e: &CaseIIEntry| e.lambda_sq.is_some_and(|x| (x - l).abs() < 1e-14)) {
            continue;
        }
        let lambda = -l.sqrt();
        out.push(CaseIIEntry {
            case: TupleCase::CaseII2,
            c,
            mode,
            lambda: Some(lambda),
            lambda_sq: Some(l),
            kappa1: (l - q) / lambda,
            kappa2: 1.0,
            radius: 2.0 / (4.0 * l + 4.0 * q).sqrt(),
        });
    }
    out
}

/// Product solutions: Case II(1) at `c = 5/9`, Case II(2) from
/// `3λ⁴ − 2(c+1)λ² + (c+3)²/16 = 0` with `0 < λ² < (c+3)/4`, `λ² ≠ (c+3)/12`.
pub fn solve_caseii(c: f64) -> Vec<CaseIIEntry> {
    if !c.is_finite() || !admits_proper(c, 3) {
        return Vec::new();
    }
    let mut out = Vec::new();
    if (c - 5.0 / 9.0).abs() < BOUNDARY_TOLERANCE {
        out.push(CaseIIEntry {
            case: TupleCase::CaseII1,
            c,
            mode: Mode::Biharmonic,
            lambda: None,
            lambda_sq: None,
            kappa1: 0.5f64.sqrt(),
            kappa2: 1.0,
            radius: (8.0 / (3.0 * (c + 3.0))).sqrt(),
        });
    }
    let q = (c + 3.0) / 4.0;
    out.extend(case_ii_2(c, Mode::Biharmonic, q, c + 1.0));
    out.sort_by(|a, b| a.case.cmp(&b.case).then(a.lambda.unwrap_or(0.0).total_cmp(&b.lambda.unwrap_or(0.0))));
    out
}

/// Product (−4)-biharmonic solution: `λ² = (4 − √13)/3`.
pub fn solve_minus4_caseii() -> Vec<CaseIIEntry> {
    case_ii_2(1.0, Mode::Minus4, 1.0, 4.0)
}

/// Curvatures of one coordinate curve; a single entry means a circle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveCurvatures {
    pub curve: &'static str,
    pub curvatures: Vec<f64>,
}

/// Curvatures of the three coordinate curves of the flat torus of a tuple.
pub fn curvature_tables(tuple: &SolutionTuple<f64>) -> [CurveCurvatures; 3] {
    let l = tuple.lam * tuple.lam;
    let (a, g, d) = (tuple.alpha, tuple.gamma, tuple.delta);
    let x1 = vec![tuple.lambda1(), 1.0];
    let x2 = if a == 0.0 {
        vec![tuple.lam.abs()]
    } else {
        let k1 = (l + a * a).sqrt();
        vec![k1, a / k1 * (l + 1.0).sqrt(), -tuple.lam * (l + 1.0).sqrt() / k1]
    };
    let x3 = if d == 0.0 {
        vec![(l + g * g).sqrt()]
    } else {
        let k1 = (l + g * g + d * d).sqrt();
        let k2 = d / k1 * (l + g * g + 1.0).sqrt();
        vec![k1, k2, k2 * (l + g * g).sqrt() / d]
    };
    [
        CurveCurvatures { curve: "X1", curvatures: x1 },
        CurveCurvatures { curve: "X2", curvatures: x2 },
        CurveCurvatures { curve: "X3", curvatures: x3 },
    ]
}
