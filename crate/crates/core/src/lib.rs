//! Self-similar profiles of Fradkov's kinetic mean-field model for
//! two-dimensional grain growth.
//!
//! The model tracks number densities `g_n(ξ)` of grains with `n` neighbours
//! and rescaled area `ξ`. Steady states of an upwind semi-discretization in
//! self-similar variables are computed by positivity-preserving explicit
//! Euler relaxation, with a self-consistent coupling weight `Γ` that keeps
//! the discrete area and the discrete polyhedral defect constant.
//!
//! Layout:
//!
//! - [`model`]: parameters, grid, state, the collision operator `J`,
//!   moments and the coupling weight.
//! - [`dynamics`]: right-hand side, Euler steps, projection of initial
//!   data, and the relaxation driver.
//! - [`diagnostics`]: identities, decay, singularity and convergence checks
//!   for converged profiles.
//! - [`io`]: CSV/JSON exports, run configuration and the command driver used
//!   by the `fradkov` binary.

pub mod diagnostics;
pub mod dynamics;
pub mod error;
pub mod io;
pub mod model;
mod sum;

pub use dynamics::{InitKind, SolveOptions, SteadyStateReport};
pub use error::{Error, Result};
pub use model::{CouplingWeight, Grid, Model, Moments, Parameters, State};
