//! Reference implementations used to check `triloc` from the outside.
//!
//! Everything here goes through nalgebra or explicit index loops and shares
//! no numerical code with the library beyond its public types.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use triloc::nonlocality::{MeasurementSettings, Vec3};
use triloc::{CMatrix, CorrelationTensor, DensityMatrix};

pub type Matrix = DMatrix<Complex64>;

pub fn to_nalgebra(m: &CMatrix) -> Matrix {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.data())
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn eigenvalues(m: &Matrix) -> Vec<f64> {
    let mut v: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Partial transpose of qubit `q` (0 = most significant) by explicit index swap.
pub fn partial_transpose(m: &Matrix, n_qubits: usize, q: usize) -> Matrix {
    let bit = 1 << (n_qubits - 1 - q);
    let dim = m.nrows();
    Matrix::from_fn(dim, dim, |r, c| {
        let (rb, cb) = (r & bit, c & bit);
        m[((r & !bit) | cb, (c & !bit) | rb)]
    })
}

/// Reduced state on the qubits in `keep` (sorted), by summing matrix elements.
pub fn reduce(m: &Matrix, n_qubits: usize, keep: &[usize]) -> Matrix {
    let traced: Vec<usize> = (0..n_qubits).filter(|q| !keep.contains(q)).collect();
    let k = keep.len();
    let compose = |kept: usize, env: usize| -> usize {
        let mut idx = 0;
        for (pos, &q) in keep.iter().enumerate() {
            if kept >> (k - 1 - pos) & 1 == 1 {
                idx |= 1 << (n_qubits - 1 - q);
            }
        }
        for (pos, &q) in traced.iter().enumerate() {
            if env >> (traced.len() - 1 - pos) & 1 == 1 {
                idx |= 1 << (n_qubits - 1 - q);
            }
        }
        idx
    };
    Matrix::from_fn(1 << k, 1 << k, |r, c| {
        (0..1usize << traced.len())
            .map(|e| m[(compose(r, e), compose(c, e))])
            .sum()
    })
}

/// `‖ρ^{T_q}‖₁ − 1` from nalgebra eigenvalues.
pub fn negativity(m: &Matrix, n_qubits: usize, q: usize) -> f64 {
    eigenvalues(&partial_transpose(m, n_qubits, q))
        .iter()
        .map(|v| v.abs())
        .sum::<f64>()
        - 1.0
}

/// Negativity of a pure three-qubit state across `a | bc` as `2 s₁ s₂`, with
/// `s₁, s₂` the singular values of the 2×4 amplitude matrix.
pub fn schmidt_negativity(amplitudes: &[Complex64]) -> f64 {
    let m = DMatrix::from_row_slice(2, 4, amplitudes);
    let s = m.singular_values();
    2.0 * s[0] * s[1]
}

/// π-tangle with every negativity from nalgebra.
pub fn pi_tangle(rho: &Matrix) -> f64 {
    let sq = |x: f64| x * x;
    let pairs = [[0, 1], [0, 2], [1, 2]];
    let marginal: Vec<Matrix> = pairs.iter().map(|p| reduce(rho, 3, p)).collect();
    // N_xy with x transposed inside the marginal holding x and y.
    let pair_neg = |x: usize, y: usize| -> f64 {
        let idx = pairs.iter().position(|p| p.contains(&x) && p.contains(&y)).unwrap();
        let slot = if pairs[idx][0] == x { 0 } else { 1 };
        negativity(&marginal[idx], 2, slot)
    };
    let residual = |a: usize, b: usize, c: usize| {
        sq(negativity(rho, 3, a)) - sq(pair_neg(a, b)) - sq(pair_neg(a, c))
    };
    (residual(0, 1, 2) + residual(1, 0, 2) + residual(2, 0, 1)) / 3.0
}

fn pauli(i: usize) -> Matrix {
    let (o, z, im) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
    match i {
        0 => Matrix::from_row_slice(2, 2, &[o, z, z, o]),
        1 => Matrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => Matrix::from_row_slice(2, 2, &[z, -im, im, z]),
        _ => Matrix::from_row_slice(2, 2, &[o, z, z, -o]),
    }
}

/// `v·σ`.
pub fn spin(v: Vec3) -> Matrix {
    (1..=3).fold(Matrix::zeros(2, 2), |acc, i| acc + pauli(i) * Complex64::new(v[i - 1], 0.0))
}

/// `tr(Sρ)` with `S = X(YZ + YZ′ + Y′Z − Y′Z′) + X′(YZ′ − YZ + Y′Z + Y′Z′)`.
pub fn svetlichny_expectation(rho: &Matrix, x: Vec3, x_prime: Vec3, s: &MeasurementSettings) -> f64 {
    let (y, yp, z, zp) = (spin(s.y()), spin(s.y_prime()), spin(s.z()), spin(s.z_prime()));
    let k3 = |a: &Matrix, b: &Matrix, c: &Matrix| a.kronecker(b).kronecker(c);
    let (x, xp) = (spin(x), spin(x_prime));
    let op = k3(&x, &y, &z) + k3(&x, &y, &zp) + k3(&x, &yp, &z) - k3(&x, &yp, &zp)
        + k3(&xp, &y, &zp)
        - k3(&xp, &y, &z)
        + k3(&xp, &yp, &z)
        + k3(&xp, &yp, &zp);
    (rho * op).trace().re
}

/// `2√F` with `F = ½[(‖λ₀‖² + ‖λ₁‖²) + √((‖λ₀‖² + ‖λ₁‖²)² − 4⟨λ₀, λ₁⟩²)]`,
/// `λ`'s assembled from the tensor by explicit sums.
pub fn radical_objective(t: &CorrelationTensor, s: &MeasurementSettings) -> f64 {
    let apply = |dir: Vec3, v: Vec3| -> DVector<f64> {
        DVector::from_fn(3, |i, _| {
            let mut acc = 0.0;
            for j in 0..3 {
                for k in 0..3 {
                    acc += t.get(i + 1, j + 1, k + 1) * v[j] * dir[k];
                }
            }
            acc
        })
    };
    let l0 = apply(s.z_prime(), s.y()) + apply(s.z(), s.y_prime());
    let l1 = apply(s.z(), s.y()) - apply(s.z_prime(), s.y_prime());
    let sum = l0.norm_squared() + l1.norm_squared();
    let disc = (sum * sum - 4.0 * l0.dot(&l1).powi(2)).max(0.0);
    2.0 * (0.5 * (sum + disc.sqrt())).sqrt()
}

pub fn density(rho: &DensityMatrix) -> Matrix {
    to_nalgebra(rho.matrix())
}

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed,
            detail: detail.into(),
        }
    }

    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("[{tag}] {}: {}", self.name, self.detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_and_transpose_agree_with_hand_results() {
        let h = 1.0 / 3f64.sqrt();
        let mut w = vec![Complex64::new(0.0, 0.0); 8];
        for i in [1, 2, 4] {
            w[i] = Complex64::new(h, 0.0);
        }
        let v = DVector::from_vec(w.clone());
        let rho = &v * v.adjoint();
        let ab = reduce(&rho, 3, &[0, 1]);
        assert!((ab[(0, 0)].re - 1.0 / 3.0).abs() < 1e-15);
        assert!((ab[(1, 2)].re - 1.0 / 3.0).abs() < 1e-15);
        assert!((negativity(&ab, 2, 0) - (5f64.sqrt() - 1.0) / 3.0).abs() < 1e-12);
        assert!((schmidt_negativity(&w) - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-12);
        assert!((pi_tangle(&rho) - 4.0 * (5f64.sqrt() - 1.0) / 9.0).abs() < 1e-12);
    }
}
