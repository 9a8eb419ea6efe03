//! Discrete generating curves and surface-of-revolution geometry.
//!
//! A generating curve `γ = (x, y)` with `y ≥ 0` is rotated about the x-axis;
//! all curvature quantities of the resulting surface reduce to one-dimensional
//! formulas in the tangent angle φ:
//!
//! ```text
//! κ₁ = −φ′/|γ′|,   κ₂ = cos φ / y,   H = κ₁ + κ₂,   K = κ₁ κ₂,
//! dμ = 2π |γ′| y dt.
//! ```
//!
//! Curves are stored on uniform parameter grids with constant speed; the
//! discretisation is second order (centered differences, trapezoid rule).

mod components;
mod curvature;
mod curve;
mod integrals;
pub mod psi;
pub mod shapes;

pub use components::{components, ComponentDecomposition};
pub use curvature::{curvatures, curvatures_of_component, CurvatureField};
pub use curve::{resample_constant_speed, GeneratingCurve, SPEED_TOL};
pub use integrals::{
    area, curvature_integrals, enclosed_volume, gauss_bonnet, length, length_bound_report,
    CurvatureIntegrals, LengthBoundReport,
};

/// Relative factor for the axis-contact tolerance: `y_tol = 1e-8 · max y`.
pub const Y_TOL_FACTOR: f64 = 1e-8;

/// Axis-contact tolerance for a given curve: separates genuine contact from
/// roundoff.
pub fn y_tol_for(y: &[f64]) -> f64 {
    let max_y = y.iter().cloned().fold(0.0_f64, f64::max);
    Y_TOL_FACTOR * max_y.max(f64::MIN_POSITIVE)
}
