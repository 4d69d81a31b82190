//! Partial trace and partial transpose on qubit registers.
//!
//! Qubit 0 is the most significant bit of a basis index; for three-qubit
//! states qubits 0, 1, 2 are parties a, b, c.

use super::matrix::CMatrix;
use super::state::DensityMatrix;
use crate::{Error, Result};

pub const QUBIT_A: usize = 0;
pub const QUBIT_B: usize = 1;
pub const QUBIT_C: usize = 2;

fn bit(index: usize, qubit: usize, nq: usize) -> usize {
    (index >> (nq - 1 - qubit)) & 1
}

/// Reduced state of an ordered pair of qubits of a three-qubit state.
///
/// `keep.0` becomes the most significant qubit of the result, so
/// `partial_trace(ρ, (1, 0))` is the swapped `ρ_ab`.
pub fn partial_trace(rho: &DensityMatrix, keep: (usize, usize)) -> Result<DensityMatrix> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            actual: rho.dim(),
        });
    }
    reduce(rho, &[keep.0, keep.1])
}

/// Reduced state on an ordered list of kept qubits.
pub fn reduce(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let nq = rho.num_qubits();
    validate_qubits(keep, nq)?;
    let traced: Vec<usize> = (0..nq).filter(|q| !keep.contains(q)).collect();
    let kd = 1 << keep.len();
    let m = rho.matrix();

    let full_index = |kept: usize, env: usize| -> usize {
        let mut idx = 0;
        for (pos, &q) in keep.iter().enumerate() {
            idx |= ((kept >> (keep.len() - 1 - pos)) & 1) << (nq - 1 - q);
        }
        for (pos, &q) in traced.iter().enumerate() {
            idx |= ((env >> (traced.len() - 1 - pos)) & 1) << (nq - 1 - q);
        }
        idx
    };

    let out = CMatrix::from_fn(kd, kd, |r, c| {
        (0..1usize << traced.len())
            .map(|e| m[(full_index(r, e), full_index(c, e))])
            .sum()
    });
    Ok(DensityMatrix::from_trusted(out))
}

/// Partial transpose on one qubit; the result is Hermitian but may have
/// negative eigenvalues.
pub fn partial_transpose(rho: &DensityMatrix, qubit: usize) -> Result<CMatrix> {
    partial_transpose_matrix(rho.matrix(), qubit)
}

/// Partial transpose of any qubit-register matrix, e.g. to undo [`partial_transpose`].
pub fn partial_transpose_matrix(m: &CMatrix, qubit: usize) -> Result<CMatrix> {
    let n = m.rows();
    if !m.is_square() || !n.is_power_of_two() || n < 2 {
        return Err(Error::BadSubsystem(format!(
            "partial transpose needs a square qubit-register matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let nq = n.trailing_zeros() as usize;
    validate_qubits(&[qubit], nq)?;
    let mask = 1 << (nq - 1 - qubit);
    Ok(CMatrix::from_fn(n, n, |r, c| {
        // Swap the chosen qubit's bit between row and column indices.
        if bit(r, qubit, nq) == bit(c, qubit, nq) {
            m[(r, c)]
        } else {
            m[(r ^ mask, c ^ mask)]
        }
    }))
}

fn validate_qubits(qubits: &[usize], nq: usize) -> Result<()> {
    if qubits.is_empty() {
        return Err(Error::BadSubsystem("no qubits selected".into()));
    }
    for (i, &q) in qubits.iter().enumerate() {
        if q >= nq {
            return Err(Error::BadSubsystem(format!(
                "qubit {q} out of range for a {nq}-qubit state"
            )));
        }
        if qubits[..i].contains(&q) {
            return Err(Error::BadSubsystem(format!("qubit {q} repeated")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::eigen::hermitian_eigenvalues;
    use crate::qcore::state::{make_state, StateFamily};
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    fn bell_phi_plus() -> DensityMatrix {
        let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        DensityMatrix::from_pure(&[a, z, z, a]).unwrap()
    }

    #[test]
    fn product_state_marginal() {
        let ab = partial_trace(&DensityMatrix::basis(8, 0), (0, 1)).unwrap();
        assert_eq!(ab, DensityMatrix::basis(4, 0));
    }

    #[test]
    fn w_marginal_by_hand() {
        let ab = partial_trace(&make_state(&StateFamily::W).unwrap(), (0, 1)).unwrap();
        let m = ab.matrix();
        let third = 1.0 / 3.0;
        // (1/3)|00⟩⟨00| + (2/3)|ψ+⟩⟨ψ+|
        let expected = [
            [third, 0.0, 0.0, 0.0],
            [0.0, third, third, 0.0],
            [0.0, third, third, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ];
        for r in 0..4 {
            for c in 0..4 {
                assert!((m[(r, c)] - Complex64::new(expected[r][c], 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn ghz_marginal_is_classical() {
        let ghz = make_state(&StateFamily::GhzClass {
            p: 1.0,
            theta: FRAC_PI_4,
            theta3: FRAC_PI_2,
        })
        .unwrap();
        let ab = partial_trace(&ghz, (0, 1)).unwrap();
        let expected = CMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5]);
        assert!(ab.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn swapped_order() {
        let rho = make_state(&StateFamily::GhzClass {
            p: 0.9,
            theta: 0.3,
            theta3: 0.7,
        })
        .unwrap();
        let ab = partial_trace(&rho, (0, 1)).unwrap();
        let ba = partial_trace(&rho, (1, 0)).unwrap();
        // SWAP conjugation maps |01⟩ ↔ |10⟩.
        let perm = [0, 2, 1, 3];
        for r in 0..4 {
            for c in 0..4 {
                assert!((ab.matrix()[(r, c)] - ba.matrix()[(perm[r], perm[c])]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn bad_subsystems() {
        let rho = DensityMatrix::maximally_mixed(8);
        assert!(matches!(partial_trace(&rho, (1, 1)), Err(Error::BadSubsystem(_))));
        assert!(matches!(partial_trace(&rho, (0, 3)), Err(Error::BadSubsystem(_))));
        assert!(matches!(
            partial_transpose(&DensityMatrix::maximally_mixed(4), 2),
            Err(Error::BadSubsystem(_))
        ));
        assert!(matches!(
            partial_trace(&DensityMatrix::maximally_mixed(4), (0, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn diagonal_state_unchanged_by_partial_transpose() {
        let rho = DensityMatrix::new(CMatrix::diagonal(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        for q in 0..2 {
            assert_eq!(&partial_transpose(&rho, q).unwrap(), rho.matrix());
        }
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let pt = partial_transpose(&bell_phi_plus(), QUBIT_A).unwrap();
        let vals = hermitian_eigenvalues(&pt).unwrap();
        assert!((vals[0] + 0.5).abs() < 1e-14);
        assert!(vals[1..].iter().all(|v| (v - 0.5).abs() < 1e-14));
    }

    #[test]
    fn w_marginal_partial_transpose_minimum() {
        let ab = partial_trace(&make_state(&StateFamily::W).unwrap(), (0, 1)).unwrap();
        let vals = hermitian_eigenvalues(&partial_transpose(&ab, QUBIT_A).unwrap()).unwrap();
        assert!((vals[0] - (1.0 - 5f64.sqrt()) / 6.0).abs() < 1e-14);
    }
}
