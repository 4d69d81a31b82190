//! Maximal Svetlichny value of the W state, with the optimal settings.
//!
//! ```bash
//! cargo run --release --example svetlichny_w_state
//! ```

use triloc::nonlocality::{svetlichny_max, upper_bound, OptimizerConfig};
use triloc::{make_state, StateFamily};

fn main() -> triloc::Result<()> {
    let w = make_state(&StateFamily::W)?;
    let result = svetlichny_max(&w, &OptimizerConfig::default())?;

    println!("S(W)          = {:.6}", result.value);
    println!("4 lambda_1    = {:.6}", upper_bound(&w)?);
    println!("hybrid bound  = 4");
    println!("violates      = {}", result.value > 4.0);

    let s = &result.best_settings;
    let fmt = |v: [f64; 3]| format!("({:+.4}, {:+.4}, {:+.4})", v[0], v[1], v[2]);
    println!("x  = {}", fmt(result.optimal_x));
    println!("x' = {}", fmt(result.optimal_x_prime));
    println!("y  = {}", fmt(s.y()));
    println!("y' = {}", fmt(s.y_prime()));
    println!("z  = {}", fmt(s.z()));
    println!("z' = {}", fmt(s.z_prime()));
    Ok(())
}
