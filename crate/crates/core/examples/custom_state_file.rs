//! Load a density matrix from a JSON file and compute every metric.
//!
//! The file holds `dim` and row-major `re` / `im` arrays. Here a noisy GHZ
//! state is written to a temporary file first; pass a path to use your own.

use std::path::PathBuf;

use triloc::cli::compute;
use triloc::nonlocality::OptimizerConfig;
use triloc::qcore::DensityMatrixFile;
use triloc::{make_state, StateFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = match std::env::args().nth(1) {
        Some(p) => PathBuf::from(p),
        None => {
            let rho = make_state(&StateFamily::GhzClass {
                p: 0.9,
                theta: std::f64::consts::FRAC_PI_4,
                theta3: std::f64::consts::FRAC_PI_2,
            })?;
            let path = std::env::temp_dir().join("triloc_example_state.json");
            std::fs::write(&path, serde_json::to_string_pretty(&DensityMatrixFile::from_matrix(&rho))?)?;
            path
        }
    };
    println!("state file: {}", path.display());

    let report = compute(&StateFamily::Custom { file: path }, &OptimizerConfig::default())?;
    println!("S       = {:.6}", report.s_svetlichny);
    println!("4 l1    = {:.6}", report.s_bound);
    println!("CHSH    = {:.6} {:.6} {:.6}", report.chsh.ab, report.chsh.ac, report.chsh.bc);
    println!("pi_abc  = {:.6}", report.pi_tangle.pi_abc);
    Ok(())
}
