//! Numerical toolkit for biharmonic integral C-parallel submanifolds of
//! Sasakian space forms.
//!
//! The crate is generic over the floating scalar ([`Scalar`], implemented
//! for `f32` and `f64`). Polynomial root isolation in [`classifier`] runs in
//! exact rational arithmetic before polishing in the chosen scalar.
//!
//! Module map:
//! - [`ambient`]: structure tensors and curvature of the (deformed) sphere.
//! - [`jets`]: truncated multivariate Taylor arithmetic.
//! - [`immersion`]: induced geometry of parametric immersions into the sphere.
//! - [`shape_algebra`]: adapted shape operators and the eigen-criterion.
//! - [`classifier`]: solution of the flat and product classification systems.
//! - [`examples`]: explicit immersions (tori, Legendre curves, cylinders).
//! - [`frenet`]: Frenet apparatus of curves in the unit sphere.
//! - [`report`] and [`registry`]: verification reports and named suites.

pub mod ambient;
pub mod classifier;
pub mod error;
pub mod examples;
pub mod frenet;
pub mod immersion;
pub mod jets;
pub mod poly;
pub mod registry;
pub mod report;
pub mod scalar;
pub mod shape_algebra;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Double precision aliases used by the CLI and the acceptance suite.
pub type Sphere = ambient::SasakianSphere<f64>;
pub type Vector = ambient::AmbientVector<f64>;
pub type Jet = jets::Jet<f64>;
pub type Immersion = immersion::ParametricImmersion<f64>;
pub type Grid = immersion::Grid<f64>;
pub type ShapeOperators = shape_algebra::AdaptedShapeOperators<f64>;
pub type Tuple = classifier::SolutionTuple<f64>;
pub type Basis = examples::UnitaryBasis<f64>;
pub type Frenet = frenet::FrenetApparatus<f64>;
