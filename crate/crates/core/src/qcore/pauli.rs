//! Pauli-basis expansion of two- and three-qubit states.
//!
//! Conventions: `σ₀ = I`, `σ₁ = X`, `σ₂ = Y`, `σ₃ = Z` with `Z|0⟩ = |0⟩`, and
//! qubit `a` is the most significant bit of a basis index.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::{CMatrix, ONE, ZERO};
use super::state::DensityMatrix;
use crate::{Error, Result};

/// Imaginary residue tolerated when reading `tr(ρ σ⊗σ⊗σ)`.
const IMAG_TOL: f64 = 1e-10;

/// Single-qubit Pauli matrix `σ_index`, `index ∈ 0..4`.
pub fn pauli(index: usize) -> CMatrix {
    let i = Complex64::i();
    let data = match index {
        0 => [ONE, ZERO, ZERO, ONE],
        1 => [ZERO, ONE, ONE, ZERO],
        2 => [ZERO, -i, i, ZERO],
        3 => [ONE, ZERO, ZERO, -ONE],
        _ => panic!("Pauli index {index} out of range"),
    };
    CMatrix::new(2, 2, data.to_vec()).expect("static Pauli data")
}

/// Tensor product `σ_{i₀} ⊗ σ_{i₁} ⊗ …` over the given indices.
pub fn pauli_string(indices: &[usize]) -> CMatrix {
    indices
        .iter()
        .fold(CMatrix::identity(1), |acc, &i| acc.kron(&pauli(i)))
}

/// `σ_index |bit⟩ = phase · |bit ⊕ flip⟩`.
fn pauli_action(index: usize, bit: usize) -> (bool, Complex64) {
    match (index, bit) {
        (0, _) => (false, ONE),
        (1, _) => (true, ONE),
        (2, 0) => (true, Complex64::i()),
        (2, _) => (true, -Complex64::i()),
        (3, 0) => (false, ONE),
        (3, _) => (false, -ONE),
        _ => unreachable!(),
    }
}

/// `tr(M · σ_{i₀} ⊗ σ_{i₁} ⊗ …)` without materializing the Pauli string.
pub(crate) fn pauli_trace(m: &CMatrix, indices: &[usize]) -> Complex64 {
    let nq = indices.len();
    debug_assert_eq!(m.rows(), 1 << nq);
    let mut total = ZERO;
    for col in 0..m.rows() {
        // (M P)_{col,col} = M[col][row] · P[row][col] where P|col⟩ = φ|row⟩.
        let mut row = col;
        let mut phase = ONE;
        for (q, &idx) in indices.iter().enumerate() {
            let shift = nq - 1 - q;
            let (flip, ph) = pauli_action(idx, (col >> shift) & 1);
            if flip {
                row ^= 1 << shift;
            }
            phase *= ph;
        }
        total += m[(col, row)] * phase;
    }
    total
}

/// Real coefficients `t_ijk = tr(ρ σ_i ⊗ σ_j ⊗ σ_k)` of a three-qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationTensor {
    pub t: [[[f64; 4]; 4]; 4],
}

impl CorrelationTensor {
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.t[i][j][k]
    }

    /// The purely three-body block `t_ijk`, `i, j, k ∈ 1..=3`, re-indexed from 0.
    pub fn correlation_cube(&self) -> [[[f64; 3]; 3]; 3] {
        let mut cube = [[[0.0; 3]; 3]; 3];
        for (i, plane) in cube.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                for (k, v) in row.iter_mut().enumerate() {
                    *v = self.t[i + 1][j + 1][k + 1];
                }
            }
        }
        cube
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = *self;
        out.t.iter_mut().flatten().flatten().for_each(|v| *v *= factor);
        out
    }
}

/// Pauli-basis coefficients of a three-qubit density matrix.
pub fn correlation_tensor(rho: &DensityMatrix) -> Result<CorrelationTensor> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            actual: rho.dim(),
        });
    }
    let m = rho.matrix();
    let mut t = [[[0.0; 4]; 4]; 4];
    for (i, plane) in t.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, v) in row.iter_mut().enumerate() {
                let z = pauli_trace(m, &[i, j, k]);
                if z.im.abs() > IMAG_TOL {
                    return Err(Error::InvariantViolation(format!(
                        "tr(ρ σ{i}σ{j}σ{k}) has imaginary part {:.3e}",
                        z.im
                    )));
                }
                *v = z.re;
            }
        }
    }
    Ok(CorrelationTensor { t })
}

/// Inverse expansion `ρ = ⅛ Σ t_ijk σ_i ⊗ σ_j ⊗ σ_k`.
pub fn reconstruct(tensor: &CorrelationTensor) -> Result<DensityMatrix> {
    let t000 = tensor.t[0][0][0];
    if (t000 - 1.0).abs() > IMAG_TOL {
        return Err(Error::InvalidTensor(format!("t_000 = {t000}, expected 1")));
    }
    let mut acc = CMatrix::zeros(8, 8);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let coeff = tensor.t[i][j][k];
                if coeff == 0.0 {
                    continue;
                }
                acc = &acc + &pauli_string(&[i, j, k]).scale(coeff / 8.0);
            }
        }
    }
    DensityMatrix::new(acc)
}

/// Two-qubit correlation matrix `T_ij = tr(ρ σ_i ⊗ σ_j)`, `i, j ∈ 1..=3`.
pub fn two_qubit_correlations(rho: &DensityMatrix) -> Result<[[f64; 3]; 3]> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    let mut t = [[0.0; 3]; 3];
    for (i, row) in t.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = pauli_trace(rho.matrix(), &[i + 1, j + 1]).re;
        }
    }
    Ok(t)
}
