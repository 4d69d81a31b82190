//! Correlation tensor, reconstruction, partial traces and partial transposes.

use triloc::qcore::{hermitian_eigen, QUBIT_A};
use triloc::{
    correlation_tensor, hermitian_eigenvalues, make_state, partial_trace, partial_transpose,
    reconstruct, StateFamily,
};

fn main() -> triloc::Result<()> {
    let w = make_state(&StateFamily::W)?;
    let t = correlation_tensor(&w)?;

    println!("nonzero correlations t_ijk of |W>:");
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let v = t.get(i, j, k);
                if v.abs() > 1e-12 {
                    println!("  t[{i}{j}{k}] = {v:+.4}");
                }
            }
        }
    }

    let back = reconstruct(&t)?;
    println!("round-trip error {:.1e}", back.matrix().max_abs_diff(w.matrix()));

    let ab = partial_trace(&w, (0, 1))?;
    println!("rho_ab eigenvalues {:?}", hermitian_eigenvalues(ab.matrix())?);
    println!(
        "rho_ab^T_a eigenvalues {:?}",
        hermitian_eigenvalues(&partial_transpose(&ab, QUBIT_A)?)?
    );

    let eig = hermitian_eigen(w.matrix())?;
    println!("rank of |W><W|: {}", eig.values.iter().filter(|v| **v > 1e-12).count());
    Ok(())
}
