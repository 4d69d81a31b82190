//! Genuine tripartite nonlocality and entanglement for three-qubit states.
//!
//! The crate quantifies
//!
//! * the maximal Svetlichny-inequality value `S(ρ)` of an arbitrary three-qubit
//!   density matrix, found by seeded multistart optimization over measurement
//!   settings ([`nonlocality::svetlichny_max`]), together with the `4λ₁`
//!   singular-value upper bound ([`nonlocality::upper_bound`]);
//! * the bipartite CHSH maximum of any two-qubit marginal ([`nonlocality::chsh_max`]);
//! * the π-tangle built from partial-transpose negativities ([`entanglement::pi_tangle`]);
//!
//! and simulates a W state decaying into a Lorentzian reservoir, with and
//! without frequent Zeno measurements ([`dynamics`]).
//!
//! ```
//! use triloc::{make_state, StateFamily, nonlocality::{svetlichny_max, OptimizerConfig}};
//!
//! let rho = make_state(&StateFamily::W).unwrap();
//! let result = svetlichny_max(&rho, &OptimizerConfig::default()).unwrap();
//! assert!((result.value - 4.3546).abs() < 1e-3);
//! ```

pub mod cli;
pub mod dynamics;
pub mod entanglement;
mod error;
pub mod nonlocality;
pub mod qcore;

pub use error::{Error, Result};
pub use qcore::{
    correlation_tensor, hermitian_eigenvalues, make_state, partial_trace, partial_transpose,
    partial_transpose_matrix, reconstruct, CMatrix, ComplexScalar, CorrelationTensor, DensityMatrix, StateFamily,
};
