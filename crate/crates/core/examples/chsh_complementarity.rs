//! Pairwise CHSH along the decaying W-state trajectory stays at or below 2
//! while the three-party Svetlichny value starts above 4.

use triloc::dynamics::{rho_w, tau_grid, ReservoirParams, ZenoSchedule};
use triloc::nonlocality::{chsh_max, svetlichny_max, OptimizerConfig};
use triloc::partial_trace;

fn main() -> triloc::Result<()> {
    let cfg = OptimizerConfig::default();
    for (r, tau_max) in [(20.0, 2.0), (0.1, 30.0)] {
        let params = ReservoirParams::from_ratio(r, 0.0)?;
        println!("R = {r}");
        println!("{:>8} {:>10} {:>10} {:>10}", "tau", "survival", "S_abc", "CHSH_ab");
        for tau in tau_grid(tau_max, 10)? {
            let point = rho_w(tau, &params, &ZenoSchedule::free())?;
            let chsh = chsh_max(&partial_trace(&point.rho, (0, 1))?)?;
            let s = svetlichny_max(&point.rho, &cfg)?.value;
            println!("{tau:>8.3} {:>10.6} {s:>10.6} {chsh:>10.6}", point.survival);
        }
    }
    Ok(())
}
