//! π-tangle of the W and GHZ states, checked against hand derivations.
//!
//! For a pure three-qubit state the one-vs-two negativity is `2 s₁ s₂`,
//! where `s₁, s₂` are the Schmidt coefficients of the `a | bc` cut.
//!
//! W state: the reduced state of qubit `a` is `diag(2/3, 1/3)`, so
//! `s₁ s₂ = √2/3` and `N_a(bc) = 2√2/3`. The two-qubit marginal is
//! `(1/3)(|00⟩⟨00| + |01⟩⟨01| + |10⟩⟨10| + |01⟩⟨10| + |10⟩⟨01|)`; its partial
//! transpose has eigenvalues `1/3, 1/3, (1 ± √5)/6`, so
//! `N_ab = (√5 − 1)/3`. Then `π = 8/9 − 2(√5 − 1)²/9 = 4(√5 − 1)/9`.
//!
//! GHZ state: `s₁ = s₂ = 1/√2` gives `N_a(bc) = 1`; every marginal is
//! separable, so `π = 1`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use triloc::entanglement::pi_tangle;
use triloc::DensityMatrix;

fn schmidt_negativity(amps: &[Complex64]) -> f64 {
    let s = DMatrix::from_row_slice(2, 4, amps).singular_values();
    2.0 * s[0] * s[1]
}

fn report(name: &str, amps: &[Complex64], exact_n: f64, exact_pi: f64) -> triloc::Result<()> {
    let rho = DensityMatrix::from_pure(amps)?;
    let b = pi_tangle(&rho)?;
    println!("{name}");
    println!("  N_a(bc) library {:.12}  Schmidt {:.12}  exact {exact_n:.12}", b.n_one_vs_two[0], schmidt_negativity(amps));
    println!("  N_ab            {:.12}", b.n_pairwise[0]);
    println!("  pi_a, pi_b, pi_c {:.12} {:.12} {:.12}", b.pi_a, b.pi_b, b.pi_c);
    println!("  pi_abc          {:.12}  exact {exact_pi:.12}", b.pi_abc);
    Ok(())
}

fn main() -> triloc::Result<()> {
    let c = |x: f64| Complex64::new(x, 0.0);
    let h = 1.0 / 3f64.sqrt();
    let w = [c(0.0), c(h), c(h), c(0.0), c(h), c(0.0), c(0.0), c(0.0)];
    let g = 0.5f64.sqrt();
    let ghz = [c(g), c(0.0), c(0.0), c(0.0), c(0.0), c(0.0), c(0.0), c(g)];

    report("W", &w, 2.0 * 2f64.sqrt() / 3.0, 4.0 * (5f64.sqrt() - 1.0) / 9.0)?;
    report("GHZ", &ghz, 1.0, 1.0)
}
