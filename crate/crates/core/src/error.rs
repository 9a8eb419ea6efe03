//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero-length curve")]
    ZeroLengthCurve,

    #[error("degenerate polyline: {0}")]
    DegeneratePolyline(String),

    #[error("axis contact inside open interval at node {index} (y = {y:.3e})")]
    AxisContactInterior { index: usize, y: f64 },

    #[error("curve invariant violated: {0}")]
    CurveInvariant(String),

    #[error("range crossing a zero of y at node {0}")]
    RangeCrossesAxis(usize),

    #[error("invalid well: {0}")]
    InvalidWell(String),

    #[error("invalid material: {0}")]
    InvalidMaterial(String),

    #[error("kg-assumption fails at u = {u:.6}: k(u) = {k:.6} <= -ktilde_G(u)/2 = {bound:.6}")]
    KgAssumption { u: f64, k: f64, bound: f64 },

    #[error("phase field violates |u| <= C0: |u[{index}]| = {value:.6} > {c0}")]
    C0Violation { index: usize, value: f64, c0: f64 },

    #[error("interface on axis at t = {t:.6} (y = {y:.3e})")]
    InterfaceOnAxis { t: f64, y: f64 },

    #[error("invalid sharp membrane: {0}")]
    InvalidSharpMembrane(String),

    #[error("constraint unrecoverable at this δ (delta = {0:.3e})")]
    ConstraintUnrecoverable(f64),

    #[error("shrink ε or widen window: transition width {width:.3e} exceeds window {window:.3e}")]
    WindowTooSmall { width: f64, window: f64 },

    #[error("β must lie in (0, 3/4), got {0}")]
    BetaRange(f64),

    #[error("δ too large: t_δ = {t_delta:.3e} >= t₀ = {t0:.3e}")]
    DeltaTooLarge { t_delta: f64, t0: f64 },

    #[error("recovery failed: {0}")]
    Recovery(String),

    #[error("solver: {0}")]
    Solver(String),

    #[error("invalid constraints: {0}")]
    InvalidConstraints(String),

    #[error("csv row {row}: {message}")]
    CsvRow { row: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
