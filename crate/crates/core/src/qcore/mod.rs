//! Dense complex linear algebra and three-qubit state algebra.

mod eigen;
mod matrix;
mod ops;
pub(crate) mod pauli;
pub mod random;
mod state;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen, HERMITIAN_TOL};
pub(crate) use eigen::symmetric3_eigenvalues;
pub use matrix::{CMatrix, ComplexScalar};
pub use ops::{
    partial_trace, partial_transpose, partial_transpose_matrix, reduce, QUBIT_A, QUBIT_B, QUBIT_C,
};
pub use pauli::{
    correlation_tensor, pauli, pauli_string, reconstruct, two_qubit_correlations,
    CorrelationTensor,
};
pub use state::{
    load_density_matrix, make_state, parse_density_matrix, DensityMatrix, DensityMatrixFile,
    StateFamily, PSD_REPAIR_TOL, PSD_TOL, TRACE_TOL,
};
