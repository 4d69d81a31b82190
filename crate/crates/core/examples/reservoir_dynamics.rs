//! Survival probability in a Lorentzian reservoir for weak and strong
//! coupling, and a full metric sweep written as CSV to stdout.

use triloc::dynamics::{
    survival_probability, sweep, tau_grid, write_csv, MetricSet, ReservoirParams, SweepSpec,
    ZenoSchedule,
};
use triloc::nonlocality::OptimizerConfig;

fn main() -> triloc::Result<()> {
    for r in [0.1, 0.2, 10.0, 20.0] {
        let p = ReservoirParams::from_ratio(r, 0.0)?;
        let samples: Vec<String> = [0.0, 0.1, 0.2, 0.5, 1.0, 2.0, 10.0]
            .iter()
            .map(|&t| format!("{:.4}", survival_probability(t, &p)))
            .collect();
        println!("R = {r:>4}: |E|^2 at tau = 0, .1, .2, .5, 1, 2, 10 -> {}", samples.join(" "));
    }
    println!();

    let spec = SweepSpec {
        r_values: vec![0.1, 20.0],
        taus: tau_grid(1.0, 5)?,
        delta: 0.0,
        schedule: ZenoSchedule::free(),
        metrics: MetricSet::all(),
        optimizer: OptimizerConfig::default(),
    };
    write_csv(&sweep(&spec)?, std::io::stdout())
}
