//! Trace norm, negativity and π-tangle.
//!
//! Negativity is `N = ‖ρ^{T_x}‖₁ − 1`, twice the sum of the moduli of the
//! negative partial-transpose eigenvalues.

use serde::{Deserialize, Serialize};

use crate::qcore::{
    hermitian_eigenvalues, partial_trace, partial_transpose_matrix, CMatrix, DensityMatrix,
    QUBIT_A, QUBIT_B, QUBIT_C,
};
use crate::{Error, Result};

/// Eigenvalues in `(-ROUNDING_TOL, 0)` are treated as exact zeros.
pub const ROUNDING_TOL: f64 = 1e-10;

/// `Σ|λ_i|` over the eigenvalues of a Hermitian matrix.
pub fn trace_norm(m: &CMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?
        .into_iter()
        .map(|v| if v < 0.0 && v > -ROUNDING_TOL { 0.0 } else { v.abs() })
        .sum())
}

/// Negativity of `ρ` across `qubit | rest`.
pub fn negativity(rho: &DensityMatrix, qubit: usize) -> Result<f64> {
    let pt = partial_transpose_matrix(rho.matrix(), qubit)?;
    Ok((trace_norm(&pt)? - 1.0).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PiTangleBreakdown {
    pub pi_a: f64,
    pub pi_b: f64,
    pub pi_c: f64,
    /// `(N_a(bc), N_b(ac), N_c(ab))`.
    pub n_one_vs_two: [f64; 3],
    /// `(N_ab, N_ac, N_ba, N_bc, N_ca, N_cb)`; `N_xy` transposes `x` in `ρ_xy`.
    pub n_pairwise: [f64; 6],
    pub pi_abc: f64,
}

/// π-tangle of a three-qubit state with all nine negativities.
///
/// The residuals `π_x` are reported unclamped and may be slightly negative
/// for some mixed states.
pub fn pi_tangle(rho: &DensityMatrix) -> Result<PiTangleBreakdown> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            actual: rho.dim(),
        });
    }
    let n_one_vs_two = [
        negativity(rho, QUBIT_A)?,
        negativity(rho, QUBIT_B)?,
        negativity(rho, QUBIT_C)?,
    ];

    // Marginals in canonical order; the transposed qubit is the first or second slot.
    let ab = partial_trace(rho, (QUBIT_A, QUBIT_B))?;
    let ac = partial_trace(rho, (QUBIT_A, QUBIT_C))?;
    let bc = partial_trace(rho, (QUBIT_B, QUBIT_C))?;
    let n_pairwise = [
        negativity(&ab, 0)?,
        negativity(&ac, 0)?,
        negativity(&ab, 1)?,
        negativity(&bc, 0)?,
        negativity(&ac, 1)?,
        negativity(&bc, 1)?,
    ];

    let sq = |x: f64| x * x;
    let [nab, nac, nba, nbc, nca, ncb] = n_pairwise;
    let pi_a = sq(n_one_vs_two[0]) - sq(nab) - sq(nac);
    let pi_b = sq(n_one_vs_two[1]) - sq(nba) - sq(nbc);
    let pi_c = sq(n_one_vs_two[2]) - sq(nca) - sq(ncb);
    Ok(PiTangleBreakdown {
        pi_a,
        pi_b,
        pi_c,
        n_one_vs_two,
        n_pairwise,
        pi_abc: (pi_a + pi_b + pi_c) / 3.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{make_state, partial_transpose, pauli, StateFamily};
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    fn bell() -> DensityMatrix {
        let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        DensityMatrix::from_pure(&[a, z, z, a]).unwrap()
    }

    #[test]
    fn trace_norm_examples() {
        let w = make_state(&StateFamily::W).unwrap();
        assert!((trace_norm(w.matrix()).unwrap() - 1.0).abs() < 1e-12);
        assert!((trace_norm(&pauli(3)).unwrap() - 2.0).abs() < 1e-14);
        let pt = partial_transpose(&bell(), 0).unwrap();
        assert!((trace_norm(&pt).unwrap() - 2.0).abs() < 1e-13);
        assert!(matches!(
            trace_norm(&CMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap()),
            Err(Error::NonHermitianInput { .. })
        ));
    }

    #[test]
    fn negativity_examples() {
        let w = make_state(&StateFamily::W).unwrap();
        assert!((negativity(&w, QUBIT_A).unwrap() - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-12);
        let ab = partial_trace(&w, (0, 1)).unwrap();
        assert!((negativity(&ab, 0).unwrap() - (5f64.sqrt() - 1.0) / 3.0).abs() < 1e-12);
        assert_eq!(negativity(&DensityMatrix::maximally_mixed(4), 0).unwrap(), 0.0);
        assert!(matches!(
            negativity(&DensityMatrix::maximally_mixed(4), 2),
            Err(Error::BadSubsystem(_))
        ));
    }

    #[test]
    fn pi_tangle_examples() {
        let ground = pi_tangle(&DensityMatrix::basis(8, 0)).unwrap();
        assert_eq!(ground.pi_abc, 0.0);

        let w = pi_tangle(&make_state(&StateFamily::W).unwrap()).unwrap();
        assert!((w.pi_abc - 4.0 * (5f64.sqrt() - 1.0) / 9.0).abs() < 1e-12);
        assert!((w.pi_a - w.pi_b).abs() < 1e-12 && (w.pi_b - w.pi_c).abs() < 1e-12);

        let ghz = make_state(&StateFamily::GhzClass {
            p: 1.0,
            theta: FRAC_PI_4,
            theta3: FRAC_PI_2,
        })
        .unwrap();
        let g = pi_tangle(&ghz).unwrap();
        assert!((g.pi_abc - 1.0).abs() < 1e-12);
        assert!(g.n_pairwise.iter().all(|&n| n == 0.0));
    }
}
