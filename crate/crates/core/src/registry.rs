//! Named verification suites and classification reports.
//!
//! Every report records the grid size and tolerance override it was run with
//! under `computed.grid` and `computed.tolerance`.

use serde_json::{json, Value};

use crate::ambient::SasakianSphere;
use crate::classifier::{self, FlatSolution, SolutionTuple, SolverOptions};
use crate::error::{Error, Result};
use crate::examples::{self, CircleProduct, UnitaryBasis};
use crate::frenet::{self, FrenetApparatus};
use crate::immersion::{self, BitensionMode, CoordinateSplit, Grid, ParametricImmersion};
use crate::report::{Check, VerificationReport};

pub const DEFAULT_TOLERANCE: f64 = immersion::DEFAULT_TOLERANCE;
pub const DEFAULT_GRID: usize = immersion::DEFAULT_GRID;
pub const VALUE_TOLERANCE: f64 = 1e-10;
pub const RADIUS_TOLERANCE: f64 = 1e-10;
pub const CURVE_SAMPLES: usize = 7;

/// Names accepted by [`verify`]. `legendre-helix:κ₁` takes any `κ₁ ∈ (0, 1)`.
pub const EXAMPLES: &[&str] = &[
    "corollary-c1",
    "cylinder-c1",
    "s5-surface",
    "cylinder-s5",
    "legendre-circle",
    "legendre-helix:0.5",
    "minus4-1",
    "minus4-2",
    "minus4-3",
    "cylinder-minus4-1",
    "cylinder-minus4-2",
    "cylinder-minus4-3",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Samples per lattice axis.
    pub grid: usize,
    /// Replaces every per-check tolerance when set.
    pub tolerance: Option<f64>,
    /// Seed of a random unitary frame; `None` uses the standard basis.
    pub basis_seed: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            grid: DEFAULT_GRID,
            tolerance: None,
            basis_seed: None,
        }
    }
}

struct Suite {
    report: VerificationReport,
    options: VerifyOptions,
}

impl Suite {
    fn new(subject: &str, options: VerifyOptions) -> Self {
        let mut report = VerificationReport::new(subject);
        report.set("grid", json!(options.grid));
        report.set("tolerance", options.tolerance.map_or(Value::Null, |t| json!(t)));
        Self { report, options }
    }

    fn check(&mut self, name: &str, residual: f64, default: f64) {
        let tol = self.options.tolerance.unwrap_or(default);
        self.report.push(Check::new(name, residual, tol));
    }

    /// Records an error as a failed check instead of aborting the suite.
    fn attempt<V>(&mut self, name: &str, result: Result<V>) -> Option<V> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                self.report.push(Check::new(name, f64::INFINITY, self.options.tolerance.unwrap_or(0.0)));
                self.report.set(format!("{name}_error"), json!(e.to_string()));
                None
            }
        }
    }

    fn basis(&self, dim: usize) -> UnitaryBasis<f64> {
        match self.options.basis_seed {
            Some(seed) => UnitaryBasis::random(dim, seed),
            None => UnitaryBasis::standard(dim),
        }
    }

    /// Unit norm, integrality, and for maximal-dimensional examples the
    /// C-parallel and `Δ⊥H = H` identities.
    fn integral_suite(&mut self, f: &ParametricImmersion<f64>, grid: &Grid<f64>, c_parallel: bool) {
        if let Some(d) = self.attempt("unit_norm", immersion::unit_norm_deviation(f, grid)) {
            self.check("unit_norm", d, 1e-13);
        }
        if let Some(c) = self.attempt("integral", immersion::check_integral(f, grid)) {
            self.check("integral", c.residual, immersion::INTEGRAL_TOLERANCE);
        }
        let tol = self.options.tolerance.unwrap_or(DEFAULT_TOLERANCE);
        if !c_parallel {
            return;
        }
        if let Some(r) = self.attempt("c_parallel", immersion::check_c_parallel(f, grid, tol)) {
            self.check("c_parallel", r.c_parallel.residual, DEFAULT_TOLERANCE);
            self.check("s_symmetry", r.symmetry.residual, DEFAULT_TOLERANCE);
        }
        if f.dim() != f.n() {
            return;
        }
        if let Some(r) = self.attempt("normal_laplacian", immersion::check_normal_laplacian(f, grid, tol)) {
            self.check("normal_laplacian", r.residual.residual, DEFAULT_TOLERANCE);
        }
    }

    fn cylinder_suite(&mut self, y: &ParametricImmersion<f64>, grid: &Grid<f64>) {
        if let Some(d) = self.attempt("unit_norm", immersion::unit_norm_deviation(y, grid)) {
            self.check("unit_norm", d, 1e-13);
        }
        let tol = self.options.tolerance.unwrap_or(DEFAULT_TOLERANCE);
        if let Some(c) = self.attempt("anti_invariant", immersion::check_anti_invariant(y, grid, tol)) {
            self.check("anti_invariant", c.residual, DEFAULT_TOLERANCE);
        }
    }

    fn bitension(&mut self, f: &ParametricImmersion<f64>, grid: &Grid<f64>, mode: BitensionMode) {
        let name = match mode {
            BitensionMode::Biharmonic => "bitension",
            BitensionMode::Minus4 => "bitension_minus4",
        };
        if let Some(t) = self.attempt(name, immersion::bitension_sup(f, grid, mode)) {
            self.check(name, t, DEFAULT_TOLERANCE);
        }
    }

    /// Constant `|H|`, compared with `expected` when a closed form is known.
    fn mean_curvature(&mut self, f: &ParametricImmersion<f64>, grid: &Grid<f64>, key: &str, expected: Option<(f64, &str)>) {
        let Some(norms) = self.attempt(key, immersion::mean_curvature_norms(f, grid)) else {
            return;
        };
        let (lo, hi) = norms.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
        let mean = norms.iter().sum::<f64>() / norms.len() as f64;
        self.check(&format!("{key}_constant"), hi - lo, VALUE_TOLERANCE);
        match expected {
            Some((value, symbolic)) => {
                self.check(key, (mean - value).abs(), VALUE_TOLERANCE);
                self.report.set_scalar(key, mean, Some(symbolic));
            }
            None => {
                // proper: the mean curvature stays away from zero
                self.check(&format!("{key}_nonzero"), if mean > 1e-6 { 0.0 } else { 1.0 }, 0.5);
                self.report.set_scalar(key, mean, None);
            }
        }
    }

    fn lattice(&mut self, name: &str, f: &ParametricImmersion<f64>, vectors: &[Vec<f64>], grid: &Grid<f64>) {
        if let Some(r) = self.attempt(name, immersion::lattice_residual(f, vectors, grid)) {
            self.check(name, r, examples::LATTICE_TOLERANCE);
        }
    }

    fn frenet_curve(
        &mut self,
        label: &str,
        curve: &ParametricImmersion<f64>,
        expected: &[(f64, &str)],
    ) -> Option<FrenetApparatus<f64>> {
        let grid = frenet::arc_grid(std::f64::consts::TAU, CURVE_SAMPLES);
        let a = self.attempt(&format!("{label}_frenet"), frenet::frenet(curve, &grid, 4))?;
        self.check(&format!("{label}_order"), (a.order as f64 - (expected.len() + 1) as f64).abs(), 0.5);
        self.check(&format!("{label}_constancy"), a.max_spread(), frenet::CONSTANCY_TOLERANCE);
        self.check(&format!("{label}_frame"), a.frame_residual, frenet::FRAME_TOLERANCE);
        let kappas: Vec<f64> = (0..a.curvatures.len()).map(|i| a.mean(i)).collect();
        for (i, (&(value, symbolic), &k)) in expected.iter().zip(&kappas).enumerate() {
            let key = format!("{label}_kappa{}", i + 1);
            self.check(&key, (k - value).abs(), frenet::CONSTANCY_TOLERANCE);
            self.report.set_scalar(key, k, (!symbolic.is_empty()).then_some(symbolic));
        }
        Some(a)
    }

    fn circles(
        &mut self,
        f: &ParametricImmersion<f64>,
        basis: &UnitaryBasis<f64>,
        grid: &Grid<f64>,
        expected: &[f64],
        symbolic: &str,
    ) -> Option<CircleProduct<f64>> {
        let product = self.attempt("circle_decomposition", examples::circle_decomposition(f, basis, grid))?;
        let radii = product.sorted_radii();
        let mut want = expected.to_vec();
        want.sort_by(f64::total_cmp);
        let residual = if radii.len() == want.len() {
            radii.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
        } else {
            f64::INFINITY
        };
        self.check("circle_radii", residual, RADIUS_TOLERANCE);
        self.check("circle_radius_sum", product.radius_sum_deviation(), RADIUS_TOLERANCE);
        self.report.set_list("radii", &radii);
        self.report.set("radii_symbolic", json!(symbolic));
        Some(product)
    }

    fn eigen(&mut self, f: &ParametricImmersion<f64>, split: &CoordinateSplit<f64>, grid: &Grid<f64>, expected: &[f64]) {
        let tol = self.options.tolerance.unwrap_or(VALUE_TOLERANCE);
        if let Some(r) = self.attempt("laplacian_split", immersion::coordinate_laplacian_eigencheck(f, split, grid, tol)) {
            self.check("laplacian_split", r.residual, VALUE_TOLERANCE);
            let dev = r.eigenvalues.iter().zip(expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            self.check("laplacian_eigenvalues", dev, VALUE_TOLERANCE);
            self.report.set_list("laplacian_eigenvalues", &r.eigenvalues);
        }
    }

    fn finish(self) -> VerificationReport {
        self.report
    }
}

fn corollary_split(basis: &UnitaryBasis<f64>) -> CoordinateSplit<f64> {
    CoordinateSplit {
        basis: basis.vectors().to_vec(),
        groups: vec![vec![3], vec![0, 1, 2]],
    }
}

fn s(x: f64) -> f64 {
    x.sqrt()
}

fn corollary_curves() -> [Vec<(f64, &'static str)>; 3] {
    [
        vec![(4.0 * s(5.0) / 5.0, "4√5/5"), (1.0, "1")],
        vec![
            (s(29.0) / s(10.0), "√29/√10"),
            (9.0 * s(2.0) / s(145.0), "9√2/√145"),
            (2.0 * s(3.0) / s(145.0), "2√3/√145"),
        ],
        vec![
            (s(5.0) / s(2.0), "√5/√2"),
            (2.0 * s(3.0) / s(10.0), "2√3/√10"),
            (s(3.0) / s(10.0), "√3/√10"),
        ],
    ]
}

const CURVE_BASE: [f64; 3] = [0.3, 0.1, 0.2];

fn verify_corollary(options: VerifyOptions) -> VerificationReport {
    let mut suite = Suite::new("corollary-c1", options);
    let basis = suite.basis(4);
    let x = examples::corollary_c1(&basis);
    let grid = Grid::for_immersion(&x, options.grid);
    suite.integral_suite(&x, &grid, true);
    suite.bitension(&x, &grid, BitensionMode::Biharmonic);
    suite.mean_curvature(&x, &grid, "mean_curvature", Some((2.0 / 3.0, "2/3")));
    for (axis, expected) in corollary_curves().iter().enumerate() {
        let curve = x.coordinate_curve(axis, CURVE_BASE.to_vec());
        suite.frenet_curve(&format!("X{}", axis + 1), &curve, expected);
    }
    suite.lattice("lattice", &x, &examples::corollary_lattice(), &grid);
    suite.eigen(&x, &corollary_split(&basis), &grid, &[1.0, 5.0]);
    suite.finish()
}

fn verify_cylinder_c1(options: VerifyOptions) -> VerificationReport {
    let mut suite = Suite::new("cylinder-c1", options);
    let basis = suite.basis(4);
    let y = examples::cylinder(&examples::corollary_c1(&basis));
    let grid = Grid::for_immersion(&y, options.grid);
    suite.cylinder_suite(&y, &grid);
    suite.bitension(&y, &grid, BitensionMode::Biharmonic);
    suite.mean_curvature(&y, &grid, "mean_curvature", Some((0.5, "1/2")));
    suite.lattice("lattice", &y, y.lattice().unwrap_or(&[]), &grid);
    suite.lattice("lattice_product", &y, &examples::torus4_lattice(), &grid);
    let r6 = 1.0 / s(6.0);
    suite.circles(&y, &basis, &grid, &[r6, r6, r6, 1.0 / s(2.0)], "{1/√2, 1/√6, 1/√6, 1/√6}");
    let product = examples::torus4_reparametrized(&y);
    let pgrid = Grid::for_immersion(&product, options.grid);
    if let Some(p) = suite.attempt("product_coordinates", examples::circle_decomposition(&product, &basis, &pgrid)) {
        // each circle depends on its own coordinate only, with |frequency| √6 or √2
        let mut worst = 0.0f64;
        for (k, f) in p.frequencies.iter().enumerate() {
            let target = if k < 3 { s(6.0) } else { s(2.0) };
            for (i, &x) in f.iter().enumerate() {
                worst = worst.max(if i == k { (x.abs() - target).abs() } else { x.abs() });
            }
        }
        suite.check("product_coordinates", worst, VALUE_TOLERANCE);
        let diagonal: Vec<f64> = p.frequencies.iter().enumerate().map(|(k, f)| f[k]).collect();
        suite.report.set_list("product_frequencies", &diagonal);
    }
    suite.eigen(&y, &corollary_split(&basis), &grid, &[2.0, 6.0]);
    suite.finish()
}

fn verify_s5(options: VerifyOptions) -> VerificationReport {
    let mut suite = Suite::new("s5-surface", options);
    let x = examples::s5_surface();
    let grid = Grid::for_immersion(&x, options.grid);
    suite.integral_suite(&x, &grid, true);
    suite.bitension(&x, &grid, BitensionMode::Biharmonic);
    suite.mean_curvature(&x, &grid, "mean_curvature", Some((0.5, "1/2")));
    suite.lattice("lattice", &x, x.lattice().unwrap_or(&[]), &grid);
    suite.finish()
}

fn verify_cylinder_s5(options: VerifyOptions) -> VerificationReport {
    let mut suite = Suite::new("cylinder-s5", options);
    let y = examples::cylinder(&examples::s5_surface());
    let grid = Grid::for_immersion(&y, options.grid);
    suite.cylinder_suite(&y, &grid);
    suite.bitension(&y, &grid, BitensionMode::Biharmonic);
    suite.mean_curvature(&y, &grid, "mean_curvature", Some((1.0 / 3.0, "1/3")));
    suite.lattice("lattice", &y, y.lattice().unwrap_or(&[]), &grid);
    suite.circles(&y, &examples::s5_circle_basis(), &grid, &[1.0 / s(2.0), 0.5, 0.5], "{1/√2, 1/2, 1/2}");
    suite.finish()
}

fn curve_suite(suite: &mut Suite, curve: &ParametricImmersion<f64>, expected: &[(f64, &str)], n: usize) {
    // circles are C-parallel, helices of order 3 are not
    let c_parallel = expected.len() == 1;
    let grid = Grid::from_points(frenet::arc_grid(std::f64::consts::TAU, suite.options.grid.max(2)).into_iter().map(|s| vec![s]).collect());
    suite.integral_suite(curve, &grid, c_parallel);
    suite.bitension(curve, &grid, BitensionMode::Biharmonic);
    if let Some(a) = suite.frenet_curve("curve", curve, expected) {
        if let Some(g) = suite.attempt("phi_alignment", frenet::phi_alignment(&a, &SasakianSphere::canonical(n))) {
            suite.report.set_scalar("phi_alignment", g, None);
        }
    }
}

fn verify_legendre_circle(options: VerifyOptions) -> VerificationReport {
    let mut suite = Suite::new("legendre-circle", options);
    let curve = examples::standard_legendre_circle();
    curve_suite(&mut suite, &curve, &[(1.0, "1")], 3);
    suite.finish()
}

fn verify_legendre_helix(kappa1: f64, options: VerifyOptions) -> Result<VerificationReport> {
    let mut suite = Suite::new(&format!("legendre-helix:{kappa1}"), options);
    let (a, b) = examples::helix_constants(kappa1);
    let frame = examples::helix_frame_s5(kappa1, (2.0 * kappa1).sqrt() / a, -1.0)?;
    let curve = examples::legendre_helix(kappa1, frame)?;
    let kappa2 = (1.0 - kappa1 * kappa1).sqrt();
    curve_suite(&mut suite, &curve, &[(kappa1, ""), (kappa2, "√(1−κ₁²)")], 2);
    if let Some(g) = suite.report.scalar("phi_alignment") {
        suite.check("phi_alignment_value", (g - b).abs(), VALUE_TOLERANCE);
    }
    suite.report.set_scalar("A", a, Some("√(1+κ₁)"));
    suite.report.set_scalar("B", b, Some("√(1−κ₁)"));
    Ok(suite.finish())
}

fn minus4_radii(index: usize) -> (Vec<f64>, &'static str) {
    let r13 = s(13.0);
    let r3 = s(3.0);
    match index {
        0 => {
            let small = s((5.0 - r13) / 12.0);
            let big = s((7.0 + r13) / 36.0);
            (vec![small, big, big, big], "{√((5−√13)/12), √((7+√13)/36)×3}")
        }
        1 => {
            let p = s((3.0 + r3) / 12.0);
            let m = s((3.0 - r3) / 12.0);
            (vec![p, p, m, m], "{√((3+√3)/12)×2, √((3−√3)/12)×2}")
        }
        _ => {
            let big = s((5.0 + r13) / 12.0);
            let small = s((7.0 - r13) / 36.0);
            (vec![big, small, small, small], "{√((5+√13)/12), √((7−√13)/36)×3}")
        }
    }
}

fn verify_minus4(index: usize, options: VerifyOptions) -> Result<VerificationReport> {
    let mut suite = Suite::new(&format!("minus4-{}", index + 1), options);
    let basis = suite.basis(4);
    let x = examples::minus4_immersion(index, &basis)?;
    let grid = Grid::for_immersion(&x, options.grid);
    suite.integral_suite(&x, &grid, true);
    suite.bitension(&x, &grid, BitensionMode::Minus4);
    suite.mean_curvature(&x, &grid, "mean_curvature", None);
    let tuple = examples::minus4_tuples::<f64>()[index];
    for (axis, table) in classifier::curvature_tables(&tuple).iter().enumerate() {
        let expected: Vec<(f64, &str)> = table.curvatures.iter().map(|&k| (k.abs(), "")).collect();
        let curve = x.coordinate_curve(axis, CURVE_BASE.to_vec());
        suite.frenet_curve(table.curve, &curve, &expected);
    }
    suite.report.set("tuple", tuple_json(&tuple));
    Ok(suite.finish())
}

fn verify_cylinder_minus4(index: usize, options: VerifyOptions) -> Result<VerificationReport> {
    let mut suite = Suite::new(&format!("cylinder-minus4-{}", index + 1), options);
    let basis = suite.basis(4);
    let y = examples::cylinder(&examples::minus4_immersion(index, &basis)?);
    let grid = Grid::for_immersion(&y, options.grid);
    suite.cylinder_suite(&y, &grid);
    suite.bitension(&y, &grid, BitensionMode::Minus4);
    let (radii, symbolic) = minus4_radii(index);
    suite.circles(&y, &basis, &grid, &radii, symbolic);
    Ok(suite.finish())
}

/// Runs the suite registered under `name`.
pub fn verify(name: &str, options: VerifyOptions) -> Result<VerificationReport> {
    if options.grid == 0 {
        return Err(Error::InvalidParameter("grid must be positive".into()));
    }
    let minus4_index = |rest: &str| match rest {
        "1" => Some(0),
        "2" => Some(1),
        "3" => Some(2),
        _ => None,
    };
    match name {
        "corollary-c1" => Ok(verify_corollary(options)),
        "cylinder-c1" => Ok(verify_cylinder_c1(options)),
        "s5-surface" => Ok(verify_s5(options)),
        "cylinder-s5" => Ok(verify_cylinder_s5(options)),
        "legendre-circle" => Ok(verify_legendre_circle(options)),
        _ => {
            if let Some(k) = name.strip_prefix("legendre-helix:") {
                let kappa1: f64 = k.parse().map_err(|_| Error::UnknownExample(name.to_string()))?;
                return verify_legendre_helix(kappa1, options);
            }
            if let Some(i) = name.strip_prefix("cylinder-minus4-").and_then(minus4_index) {
                return verify_cylinder_minus4(i, options);
            }
            if let Some(i) = name.strip_prefix("minus4-").and_then(minus4_index) {
                return verify_minus4(i, options);
            }
            Err(Error::UnknownExample(name.to_string()))
        }
    }
}

fn tuple_json(t: &SolutionTuple<f64>) -> Value {
    json!({
        "lambda": t.lam,
        "alpha": t.alpha,
        "gamma": t.gamma,
        "delta": t.delta,
        "lambda1": t.lambda1(),
        "case": t.case,
        "origin": t.origin,
        "residual": t.residual(),
        "curvatures": classifier::curvature_tables(t),
    })
}

fn flat_section(report: &mut VerificationReport, prefix: &str, solution: &FlatSolution) -> Value {
    for (i, t) in solution.tuples.iter().enumerate() {
        report.push(Check::new(
            format!("{prefix}tuple{}_residual", i + 1),
            t.residual(),
            classifier::RESIDUAL_TOLERANCE,
        ));
    }
    json!({
        "tuples": solution.tuples.iter().map(tuple_json).collect::<Vec<_>>(),
        "boundary": solution.boundary.iter().map(tuple_json).collect::<Vec<_>>(),
        "traces": solution.traces,
    })
}

fn classify_one(report: &mut VerificationReport, prefix: &str, c: f64, options: &SolverOptions) -> Result<Value> {
    let solution = classifier::solve_flat_with(c, options)?;
    let mut section = flat_section(report, prefix, &solution);
    section["c"] = json!(c);
    section["case_ii"] = json!(classifier::solve_caseii(c));
    Ok(section)
}

/// Flat and product solutions of the biharmonic system for one `c`.
pub fn classify(c: f64, options: &SolverOptions) -> Result<VerificationReport> {
    if !c.is_finite() {
        return Err(Error::InvalidParameter(format!("c = {c}")));
    }
    let mut report = VerificationReport::new(format!("classify c={c}"));
    let section = classify_one(&mut report, "", c, options)?;
    report.set("mode", json!("biharmonic"));
    if let Value::Object(map) = section {
        for (k, v) in map {
            report.set(k, v);
        }
    }
    Ok(report)
}

/// The (−4)-biharmonic classification, which lives at `c = 1` only.
pub fn classify_minus4(options: &SolverOptions) -> Result<VerificationReport> {
    let solution = classifier::solve_minus4_flat_with(options)?;
    let mut report = VerificationReport::new("classify minus4");
    let section = flat_section(&mut report, "", &solution);
    report.set("mode", json!("minus4"));
    report.set("c", json!(1.0));
    if let Value::Object(map) = section {
        for (k, v) in map {
            report.set(k, v);
        }
    }
    report.set("case_ii", json!(classifier::solve_minus4_caseii()));
    Ok(report)
}

/// Sample values `lo, lo + step, …` up to `hi` inclusive.
pub fn sweep_values(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && step.is_finite()) || step <= 0.0 || lo > hi {
        return Err(Error::InvalidParameter(format!("invalid sweep {lo}:{hi}:{step}")));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(Error::InvalidParameter(format!("sweep has {count} values")));
    }
    Ok((0..count).map(|i| lo + step * i as f64).collect())
}

/// Biharmonic classification over a range of `c`.
pub fn classify_sweep(lo: f64, hi: f64, step: f64, options: &SolverOptions) -> Result<VerificationReport> {
    let values = sweep_values(lo, hi, step)?;
    let mut report = VerificationReport::new(format!("classify sweep {lo}:{hi}:{step}"));
    let mut sections = Vec::with_capacity(values.len());
    for c in values {
        sections.push(classify_one(&mut report, &format!("c={c}/"), c, options)?);
    }
    report.set("mode", json!("biharmonic"));
    report.set("results", Value::Array(sections));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_values_inclusive() {
        assert_eq!(sweep_values(0.0, 1.0, 0.5).unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(sweep_values(1.0, 0.0, 0.5).is_err());
        assert!(sweep_values(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn unknown_names_rejected() {
        for name in ["nope", "minus4-4", "cylinder-minus4-0", "legendre-helix:x"] {
            assert!(matches!(verify(name, VerifyOptions::default()), Err(Error::UnknownExample(_))));
        }
    }
}
