//! Singular-value upper bound `4λ₁` on the Svetlichny value.

use serde::{Deserialize, Serialize};

use crate::qcore::{correlation_tensor, symmetric3_eigenvalues, CorrelationTensor, DensityMatrix};
use crate::Result;

/// Which party indexes the rows of the 3x9 matricization of `t_ijk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Matricization {
    /// Rows `i` (Alice), columns `(j, k)`. This is the bound that reproduces
    /// the published GHZ-class table.
    #[default]
    FirstParty,
    /// Rows `k` (Charlie), columns `(i, j)`. Kept as a negative control.
    ThirdParty,
}

/// `4λ₁` with `λ₁` the largest singular value of the first-party matricization.
pub fn upper_bound(rho: &DensityMatrix) -> Result<f64> {
    Ok(upper_bound_tensor(&correlation_tensor(rho)?, Matricization::FirstParty))
}

pub fn upper_bound_tensor(tensor: &CorrelationTensor, layout: Matricization) -> f64 {
    let cube = tensor.correlation_cube();
    let entry = |row: usize, col: usize| -> f64 {
        let (a, b) = (col / 3, col % 3);
        match layout {
            Matricization::FirstParty => cube[row][a][b],
            Matricization::ThirdParty => cube[a][b][row],
        }
    };
    // λ₁² is the top eigenvalue of the 3x3 Gram matrix M Mᵀ.
    let mut gram = [[0.0; 3]; 3];
    for (r, row) in gram.iter_mut().enumerate() {
        for (s, v) in row.iter_mut().enumerate() {
            *v = (0..9).map(|c| entry(r, c) * entry(s, c)).sum();
        }
    }
    let top = symmetric3_eigenvalues(&gram)[2].max(0.0);
    4.0 * top.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{make_state, StateFamily};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn ghz(p: f64, theta: f64, theta3: f64) -> DensityMatrix {
        make_state(&StateFamily::GhzClass { p, theta, theta3 }).unwrap()
    }

    #[test]
    fn maximally_mixed() {
        assert_eq!(upper_bound(&DensityMatrix::maximally_mixed(8)).unwrap(), 0.0);
    }

    #[test]
    fn published_rows() {
        assert!((upper_bound(&ghz(1.0, FRAC_PI_3, FRAC_PI_2)).unwrap() - 4.8990).abs() < 1e-3);
        assert!((upper_bound(&ghz(0.998, FRAC_PI_3, 0.6216)).unwrap() - 4.0006).abs() < 1e-3);
    }

    /// Regression for the frozen matricization choice: only rows indexed by
    /// the first party reproduce 4.0006 on the asymmetric GHZ-class row.
    #[test]
    fn third_party_layout_disagrees_on_asymmetric_state() {
        let t = correlation_tensor(&ghz(0.998, FRAC_PI_3, 0.6216)).unwrap();
        let third = upper_bound_tensor(&t, Matricization::ThirdParty);
        assert!((third - 4.0006).abs() > 0.5, "{third}");
    }
}
