//! Random states and local unitaries for sampling-based checks.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::matrix::CMatrix;
use super::state::DensityMatrix;

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state vector of length `dim`.
pub fn random_pure_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_pure_state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DensityMatrix {
    DensityMatrix::from_pure(&random_pure_vector(rng, dim)).expect("Haar vector is normalized")
}

/// Induced-measure mixed state `G G† / tr(G G†)` with `G` a `dim x rank` Ginibre matrix.
pub fn random_density_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> DensityMatrix {
    let g = CMatrix::from_fn(dim, rank.max(1), |_, _| complex_gaussian(rng));
    let p = &g * &g.adjoint();
    let tr = p.trace().re;
    let n = dim;
    let scaled = p.scale(1.0 / tr);
    let herm = CMatrix::from_fn(n, n, |r, c| 0.5 * (scaled[(r, c)] + scaled[(c, r)].conj()));
    DensityMatrix::new(herm).expect("Ginibre product is a valid state")
}

/// Haar-random element of SU(2).
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> CMatrix {
    let v = random_pure_vector(rng, 2);
    let (a, b) = (v[0], v[1]);
    CMatrix::new(2, 2, vec![a, -b.conj(), b, a.conj()]).expect("2x2 data")
}

/// `U₁ ⊗ U₂ ⊗ U₃` with independent Haar-random single-qubit factors.
pub fn random_local_unitary<R: Rng + ?Sized>(rng: &mut R) -> CMatrix {
    random_su2(rng).kron(&random_su2(rng)).kron(&random_su2(rng))
}
