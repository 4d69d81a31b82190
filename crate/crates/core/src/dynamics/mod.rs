//! W state coupled to a common Lorentzian reservoir, with optional Zeno
//! measurements.
//!
//! Time is the dimensionless `τ = λt` throughout. The three-qubit state at
//! any time depends on the dynamics only through the survival probability
//! `s`: weight `s` on `|W⟩⟨W|` and `1 − s` on `|000⟩⟨000|`.

mod sweep;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::qcore::{CMatrix, DensityMatrix};
use crate::{Error, Result};

pub use sweep::{
    format_number, sweep, tau_grid, write_csv, write_csv_rows, MetricSet, SweepResult, SweepSpec,
    CSV_HEADER,
};

/// Below this `|Ωt|` the amplitude uses its Taylor expansion around `Ω = 0`.
pub const SMALL_OMEGA_T: f64 = 1e-6;

/// Lorentzian reservoir: width `λ`, vacuum Rabi frequency `𝓡` and detuning
/// `δ`, all in the same inverse-time unit.
///
/// `λ = 0` is accepted as the closed-cavity limit; `τ` is then read in the
/// units of `𝓡` and `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReservoirParams {
    pub lambda: f64,
    pub rabi: f64,
    pub delta: f64,
}

impl ReservoirParams {
    pub fn new(lambda: f64, rabi: f64, delta: f64) -> Result<Self> {
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidConfig(format!("lambda must be >= 0, got {lambda}")));
        }
        if !(rabi >= 0.0 && rabi.is_finite()) {
            return Err(Error::InvalidConfig(format!("Rabi frequency must be >= 0, got {rabi}")));
        }
        if !delta.is_finite() {
            return Err(Error::InvalidConfig("detuning must be finite".into()));
        }
        Ok(Self { lambda, rabi, delta })
    }

    /// `λ = 1` units: `R = 𝓡/λ` and `δ/λ`.
    pub fn from_ratio(r: f64, delta: f64) -> Result<Self> {
        Self::new(1.0, r, delta)
    }

    /// `R = 𝓡/λ`.
    pub fn coupling_ratio(&self) -> f64 {
        self.rabi / self.lambda
    }

    /// `Ω_R = √(4𝓡² + δ²)`.
    pub fn omega_r(&self) -> f64 {
        (4.0 * self.rabi * self.rabi + self.delta * self.delta).sqrt()
    }

    /// `Ω = √(λ² − Ω_R² − 2iδλ)`, principal branch.
    pub fn omega(&self) -> Complex64 {
        let omega_r = self.omega_r();
        Complex64::new(
            self.lambda * self.lambda - omega_r * omega_r,
            -2.0 * self.delta * self.lambda,
        )
        .sqrt()
    }

    fn time(&self, tau: f64) -> f64 {
        if self.lambda > 0.0 {
            tau / self.lambda
        } else {
            tau
        }
    }
}

/// Survival amplitude `𝓔(τ)` of the single-excitation manifold.
pub fn survival_amplitude(tau: f64, params: &ReservoirParams) -> Complex64 {
    amplitude_with_omega(tau, params, params.omega())
}

/// Same as [`survival_amplitude`] with an explicit branch of `Ω`; the result
/// does not depend on the sign of `Ω`.
pub fn amplitude_with_omega(tau: f64, params: &ReservoirParams, omega: Complex64) -> Complex64 {
    assert!(tau >= 0.0, "tau must be non-negative, got {tau}");
    let t = params.time(tau);
    let a = Complex64::new(params.lambda, -params.delta);
    let w = omega * t / 2.0;
    let damping = (-a * t / 2.0).exp();

    if w.re.abs() > 40.0 {
        // Split into exponentials so cosh/sinh cannot overflow before damping.
        let ratio = a / omega;
        let grow = ((omega - a) * t / 2.0).exp();
        let decay = ((-omega - a) * t / 2.0).exp();
        return 0.5 * (1.0 + ratio) * grow + 0.5 * (1.0 - ratio) * decay;
    }
    // sinh(w)/w with a series near zero avoids 0/0 at critical damping.
    let (cosh, sinhc) = if (omega * t).norm() < SMALL_OMEGA_T {
        let w2 = w * w;
        (1.0 + w2 / 2.0, 1.0 + w2 / 6.0)
    } else {
        (w.cosh(), w.sinh() / w)
    };
    damping * (cosh + a * t / 2.0 * sinhc)
}

/// `|𝓔(τ)|²`.
pub fn survival_probability(tau: f64, params: &ReservoirParams) -> f64 {
    survival_amplitude(tau, params).norm_sqr()
}

/// Measurement schedule: nonselective projections every `interval` (in τ units).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZenoSchedule {
    pub interval: f64,
    pub enabled: bool,
}

impl ZenoSchedule {
    pub fn free() -> Self {
        Self {
            interval: 0.0,
            enabled: false,
        }
    }

    pub fn every(interval: f64) -> Result<Self> {
        if !(interval > 0.0 && interval.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "measurement interval must be > 0, got {interval}"
            )));
        }
        Ok(Self {
            interval,
            enabled: true,
        })
    }

    pub fn label(&self) -> String {
        if self.enabled {
            format!("t{}", self.interval)
        } else {
            "free".to_string()
        }
    }
}

/// Effective decay rate `Γ_z(T) = −ln|𝓔(T)|² / T`.
pub fn zeno_rate(interval: f64, params: &ReservoirParams) -> Result<f64> {
    if !(interval > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "measurement interval must be > 0, got {interval}"
        )));
    }
    let s = survival_probability(interval, params);
    if !(s > f64::MIN_POSITIVE) {
        return Err(Error::ZeroSurvival { interval });
    }
    Ok((-s.ln() / interval).max(0.0))
}

/// Survival under repeated measurement, `exp(−Γ_z(T) τ)`.
pub fn zeno_survival(tau: f64, interval: f64, params: &ReservoirParams) -> Result<f64> {
    Ok((-zeno_rate(interval, params)? * tau).exp())
}

/// State along the trajectory at one instant.
#[derive(Debug, Clone)]
pub struct TrajectoryPoint {
    pub tau: f64,
    pub survival: f64,
    pub rho: DensityMatrix,
}

/// `s|W⟩⟨W| + (1 − s)|000⟩⟨000|` for a survival probability `s ∈ [0, 1]`.
pub fn w_trajectory_state(survival: f64) -> DensityMatrix {
    let s = survival.clamp(0.0, 1.0);
    let mut m = CMatrix::zeros(8, 8);
    let excited = [0b100, 0b010, 0b001];
    for &r in &excited {
        for &c in &excited {
            m[(r, c)] = Complex64::new(s / 3.0, 0.0);
        }
    }
    m[(0, 0)] = Complex64::new(1.0 - s, 0.0);
    DensityMatrix::new(m).expect("convex mixture of two pure states")
}

/// Three-qubit state at `τ`, free or under the given measurement schedule.
pub fn rho_w(tau: f64, params: &ReservoirParams, schedule: &ZenoSchedule) -> Result<TrajectoryPoint> {
    if !(tau >= 0.0) {
        return Err(Error::InvalidConfig(format!("tau must be >= 0, got {tau}")));
    }
    let survival = if schedule.enabled {
        zeno_survival(tau, schedule.interval, params)?
    } else {
        survival_probability(tau, params)
    };
    Ok(TrajectoryPoint {
        tau,
        survival,
        rho: w_trajectory_state(survival),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{make_state, StateFamily};

    #[test]
    fn amplitude_starts_at_one() {
        for (l, r, d) in [(1.0, 0.1, 0.0), (1.0, 20.0, 3.0), (0.0, 2.0, 0.0), (2.0, 1.0, -1.0)] {
            let p = ReservoirParams::new(l, r, d).unwrap();
            assert!((survival_amplitude(0.0, &p) - 1.0).norm() < 1e-15);
        }
    }

    #[test]
    fn closed_cavity_is_rabi_oscillation() {
        let rabi = 1.7;
        let p = ReservoirParams::new(0.0, rabi, 0.0).unwrap();
        for i in 0..50 {
            let t = i as f64 * 0.13;
            let expected = (rabi * t).cos().powi(2);
            assert!((survival_probability(t, &p) - expected).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn critical_damping() {
        let p = ReservoirParams::from_ratio(0.5, 0.0).unwrap();
        assert!(p.omega().norm() < 1e-15);
        for i in 0..40 {
            let t = i as f64 * 0.25;
            let expected = (-t / 2.0).exp() * (1.0 + t / 2.0);
            assert!((survival_amplitude(t, &p).re - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn branch_invariance() {
        let p = ReservoirParams::new(1.0, 3.0, 0.7).unwrap();
        let om = p.omega();
        for i in 1..30 {
            let t = i as f64 * 0.21;
            let a = amplitude_with_omega(t, &p, om);
            let b = amplitude_with_omega(t, &p, -om);
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn large_times_do_not_overflow() {
        let p = ReservoirParams::from_ratio(0.1, 0.0).unwrap();
        let s = survival_probability(5000.0, &p);
        assert!(s.is_finite() && (0.0..1e-10).contains(&s));
    }

    #[test]
    fn trajectory_endpoints() {
        let p = ReservoirParams::from_ratio(20.0, 0.0).unwrap();
        let start = rho_w(0.0, &p, &ZenoSchedule::free()).unwrap();
        let w = make_state(&StateFamily::W).unwrap();
        assert!(start.rho.matrix().max_abs_diff(w.matrix()) < 1e-15);
        assert_eq!(w_trajectory_state(0.0), DensityMatrix::basis(8, 0));
    }

    #[test]
    fn single_measurement_matches_free_evolution() {
        let p = ReservoirParams::from_ratio(20.0, 0.0).unwrap();
        let t = 0.01;
        let zeno = rho_w(t, &p, &ZenoSchedule::every(t).unwrap()).unwrap();
        assert!((zeno.survival - survival_probability(t, &p)).abs() < 1e-15);
    }

    #[test]
    fn zeno_rate_definition_and_limits() {
        let p = ReservoirParams::from_ratio(2.0, 0.5).unwrap();
        let t = 0.3;
        let s = survival_probability(t, &p);
        assert!((zeno_rate(t, &p).unwrap() - (-s.ln() / t)).abs() < 1e-14);

        let unit = ReservoirParams::from_ratio(1.0, 0.0).unwrap();
        let ratio = zeno_rate(1e-4, &unit).unwrap() / 1e-4;
        assert!((ratio - 1.0).abs() < 0.01, "{ratio}");

        let strong = ReservoirParams::from_ratio(20.0, 0.0).unwrap();
        assert!(zeno_rate(0.001, &strong).unwrap() < zeno_rate(0.01, &strong).unwrap());
    }

    #[test]
    fn zero_survival_is_reported() {
        let weak = ReservoirParams::from_ratio(0.1, 0.0).unwrap();
        assert!(matches!(
            zeno_rate(1e5, &weak),
            Err(Error::ZeroSurvival { interval }) if interval == 1e5
        ));
        let uncoupled = ReservoirParams::new(0.0, 0.0, 0.0).unwrap();
        assert_eq!(zeno_rate(1.0, &uncoupled).unwrap(), 0.0);
        assert!(zeno_rate(0.0, &weak).is_err());
    }

    #[test]
    fn invalid_params() {
        assert!(ReservoirParams::new(-1.0, 1.0, 0.0).is_err());
        assert!(ReservoirParams::new(1.0, -1.0, 0.0).is_err());
        assert!(ZenoSchedule::every(0.0).is_err());
    }
}
