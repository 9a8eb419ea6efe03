//! Energies of rotationally symmetric two-phase vesicle membranes.
//!
//! A membrane is the surface of revolution of a planar generating curve
//! `γ = (x, y)` together with a lipid-phase order parameter `u`. The crate
//! evaluates the diffuse-interface bending energy
//!
//! ```text
//! E_ε(γ, u) = ∫ k(u) (H − H_s(u))² + k_G(u) K dμ
//!           + ∫ ε |∇u|² + W(u)/ε dμ,
//! ```
//!
//! its sharp-interface counterpart with a line-tension term `σ H¹`, builds
//! curve/phase-field sequences whose energies approach the sharp limit from
//! above, and minimises `E_ε` under area and phase constraints.
//!
//! Modules follow the problem structure:
//!
//! * [`geometry`] — generating curves, principal curvatures, quadrature of
//!   curvature integrals, Gauss-Bonnet checks, component decomposition;
//! * [`material`] — double-well potential, rigidity extensions `k(u)`,
//!   `k_G(u)`, `H_s(u)`, the line-tension constant σ and the optimal
//!   transition profile;
//! * [`energy`] — assembly of the diffuse and sharp energies, constraint
//!   residuals and lower-bound certificates;
//! * [`recovery`] — circle/catenoid surgeries near the axis of revolution
//!   and full approximating-sequence construction;
//! * [`solver`] — constrained gradient descent on the discrete energy.

pub mod energy;
pub mod error;
pub mod geometry;
pub mod material;
pub mod numerics;
pub mod recovery;
pub mod solver;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
