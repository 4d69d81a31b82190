//! Svetlichny and CHSH nonlocality of three- and two-qubit states.

mod bound;
mod chsh;
mod objective;
mod optimizer;
mod settings;
pub mod simplex;

pub use bound::{upper_bound, upper_bound_tensor, Matricization};
pub use chsh::chsh_max;
pub use objective::{lambda_vectors, optimal_alice, svetlichny_objective, t_slice, Mat3, UNIT_TOL};
pub use optimizer::{
    svetlichny_max, svetlichny_max_tensor, OptimizerConfig, SeedingStrategy, SvetlichnyResult,
    GRID_REFINEMENTS, MAX_GRID_POINTS,
};
pub use settings::{unit_vector, MeasurementSettings, Vec3};
