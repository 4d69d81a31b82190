//! Maximal CHSH value of a two-qubit state from its correlation matrix.

use crate::qcore::{symmetric3_eigenvalues, two_qubit_correlations, DensityMatrix};
use crate::Result;

/// `2√(u₁ + u₂)` where `u₁ ≥ u₂` are the two largest eigenvalues of `TᵀT`
/// and `T_ij = tr(ρ σ_i ⊗ σ_j)`.
pub fn chsh_max(rho_ab: &DensityMatrix) -> Result<f64> {
    let t = two_qubit_correlations(rho_ab)?;
    let mut ttt = [[0.0; 3]; 3];
    for (i, row) in ttt.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..3).map(|k| t[k][i] * t[k][j]).sum();
        }
    }
    let u = symmetric3_eigenvalues(&ttt);
    Ok(2.0 * (u[2] + u[1]).max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{make_state, partial_trace, StateFamily};
    use crate::Error;
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

    #[test]
    fn bell_state_reaches_tsirelson() {
        let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        let bell = DensityMatrix::from_pure(&[a, z, z, a]).unwrap();
        assert!((chsh_max(&bell).unwrap() - 2.0 * SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn product_state_is_classical() {
        assert!((chsh_max(&DensityMatrix::basis(4, 0)).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn w_marginal() {
        let ab = partial_trace(&make_state(&StateFamily::W).unwrap(), (0, 1)).unwrap();
        assert!((chsh_max(&ab).unwrap() - 4.0 * SQRT_2 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn wrong_dimension() {
        assert!(matches!(
            chsh_max(&DensityMatrix::maximally_mixed(8)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
