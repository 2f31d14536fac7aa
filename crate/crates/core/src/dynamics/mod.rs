//! Semi-discrete dynamics: upwind right-hand side, positivity-preserving
//! explicit Euler steps, projection of raw data onto the admissible set, and
//! relaxation to a steady state.

mod init;
mod rhs;
mod solver;
mod step;

pub use init::InitKind;
pub use rhs::RhsEvaluation;
pub use solver::{HistorySample, SolveOptions, SteadyStateReport};
pub use step::StepWeight;
