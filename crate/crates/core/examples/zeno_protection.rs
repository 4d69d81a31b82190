//! Repeated nonselective measurements slow the decay of the W state.

use triloc::dynamics::{rho_w, zeno_rate, ReservoirParams, ZenoSchedule};
use triloc::entanglement::pi_tangle;

fn main() -> triloc::Result<()> {
    let cases = [(20.0, [0.01, 0.005, 0.001], 1.0), (0.1, [5.0, 1.0, 0.1], 20.0)];
    for (r, intervals, tau) in cases {
        let p = ReservoirParams::from_ratio(r, 0.0)?;
        println!("R = {r}, tau = {tau}");
        let free = rho_w(tau, &p, &ZenoSchedule::free())?;
        println!(
            "  free          survival {:.6}  pi {:.6}",
            free.survival,
            pi_tangle(&free.rho)?.pi_abc
        );
        for t in intervals {
            let point = rho_w(tau, &p, &ZenoSchedule::every(t)?)?;
            println!(
                "  lambda T={t:<6} survival {:.6}  pi {:.6}  Gamma_z {:.5}",
                point.survival,
                pi_tangle(&point.rho)?.pi_abc,
                zeno_rate(t, &p)?
            );
        }
    }

    // Short intervals: Gamma_z(T) ≈ R² T.
    let unit = ReservoirParams::from_ratio(1.0, 0.0)?;
    for t in [1e-2, 1e-3, 1e-4] {
        println!("R = 1, T = {t:e}: Gamma_z / (R^2 T) = {:.6}", zeno_rate(t, &unit)? / t);
    }
    Ok(())
}
