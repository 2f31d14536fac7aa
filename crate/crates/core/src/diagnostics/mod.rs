//! Checks of a converged profile against the identities, the tail decay
//! law and the singularity structure of self-similar solutions, plus
//! empirical convergence studies in `ε` and `N`.

mod convergence;
mod decay;
mod identities;
mod ode;
mod singularity;

pub use convergence::{epsilon_convergence, n_convergence, EpsilonRow, NRow};
pub use decay::{decay_diagnostics, decay_from_moments, default_window, nbar, phi, DecayDiagnostics};
pub use identities::{verify_steady_identities, IdentityResiduals};
pub use ode::{integrate_stationary, ode_oracle};
pub use singularity::{classify_singularities, predicted_ratio, Regime, SingularityEntry, SingularityReport};
