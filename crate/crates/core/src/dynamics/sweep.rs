use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{rho_w, ReservoirParams, ZenoSchedule};
use crate::entanglement::pi_tangle;
use crate::nonlocality::{
    svetlichny_max_tensor, upper_bound_tensor, chsh_max, Matricization, OptimizerConfig,
    SeedingStrategy,
};
use crate::qcore::{correlation_tensor, partial_trace};
use crate::{Error, Result};

pub const CSV_HEADER: [&str; 9] = [
    "tau",
    "r",
    "delta",
    "s_svetlichny",
    "s_bound",
    "chsh_ab",
    "pi_tangle",
    "survival",
    "error",
];

/// Which metric columns a sweep fills in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricSet {
    /// Also fills `s_bound`.
    pub svetlichny: bool,
    pub chsh: bool,
    pub pi_tangle: bool,
    pub survival: bool,
}

impl MetricSet {
    pub fn all() -> Self {
        Self {
            svetlichny: true,
            chsh: true,
            pi_tangle: true,
            survival: true,
        }
    }

    pub fn none() -> Self {
        Self {
            svetlichny: false,
            chsh: false,
            pi_tangle: false,
            survival: false,
        }
    }
}

impl FromStr for MetricSet {
    type Err = Error;

    /// Comma-separated subset of `svetlichny, chsh, pi_tangle, survival`, or `all`.
    fn from_str(s: &str) -> Result<Self> {
        let mut set = Self::none();
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            match name {
                "all" => set = Self::all(),
                "svetlichny" => set.svetlichny = true,
                "chsh" => set.chsh = true,
                "pi_tangle" | "pi-tangle" | "pi" => set.pi_tangle = true,
                "survival" => set.survival = true,
                other => return Err(Error::InvalidConfig(format!("unknown metric '{other}'"))),
            }
        }
        if set == Self::none() {
            return Err(Error::InvalidConfig("no metrics selected".into()));
        }
        Ok(set)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Coupling ratios `R = 𝓡/λ`, strictly increasing.
    pub r_values: Vec<f64>,
    /// Dimensionless times, strictly increasing.
    pub taus: Vec<f64>,
    /// `δ/λ`.
    pub delta: f64,
    pub schedule: ZenoSchedule,
    pub metrics: MetricSet,
    pub optimizer: OptimizerConfig,
}

/// One `(τ, R)` row of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub tau: f64,
    pub r: f64,
    pub delta: f64,
    pub s_svetlichny: Option<f64>,
    pub s_bound: Option<f64>,
    pub chsh_ab: Option<f64>,
    pub pi_tangle: Option<f64>,
    pub survival: Option<f64>,
    pub error: Option<String>,
}

/// `steps + 1` evenly spaced points on `[0, tau_max]`.
pub fn tau_grid(tau_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(tau_max > 0.0 && tau_max.is_finite()) || steps == 0 {
        return Err(Error::InvalidConfig(format!(
            "tau grid needs tau_max > 0 and steps > 0, got {tau_max} and {steps}"
        )));
    }
    Ok((0..=steps)
        .map(|i| tau_max * i as f64 / steps as f64)
        .collect())
}

fn check_grid(name: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidConfig(format!("{name} grid is empty")));
    }
    if grid.iter().any(|v| !v.is_finite()) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidConfig(format!(
            "{name} grid must be finite and strictly increasing"
        )));
    }
    Ok(())
}

/// Evaluates the requested metrics on every `(R, τ)` pair, `R`-major.
///
/// A failing row carries its error message instead of aborting the sweep.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepResult>> {
    check_grid("R", &spec.r_values)?;
    check_grid("tau", &spec.taus)?;
    if spec.taus[0] < 0.0 {
        return Err(Error::InvalidConfig("tau grid must be non-negative".into()));
    }
    spec.optimizer.validate()?;

    let pairs: Vec<(f64, f64)> = spec
        .r_values
        .iter()
        .flat_map(|&r| spec.taus.iter().map(move |&tau| (r, tau)))
        .collect();
    Ok(pairs
        .par_iter()
        .map(|&(r, tau)| {
            let blank = SweepResult {
                tau,
                r,
                delta: spec.delta,
                s_svetlichny: None,
                s_bound: None,
                chsh_ab: None,
                pi_tangle: None,
                survival: None,
                error: None,
            };
            match evaluate_row(spec, r, tau, blank.clone()) {
                Ok(row) => row,
                Err(e) => SweepResult {
                    error: Some(e.to_string()),
                    ..blank
                },
            }
        })
        .collect())
}

fn evaluate_row(spec: &SweepSpec, r: f64, tau: f64, mut row: SweepResult) -> Result<SweepResult> {
    let params = ReservoirParams::from_ratio(r, spec.delta)?;
    let point = rho_w(tau, &params, &spec.schedule)?;
    let m = spec.metrics;
    if m.survival {
        row.survival = Some(point.survival);
    }
    if m.svetlichny {
        let t = correlation_tensor(&point.rho)?;
        let result = svetlichny_max_tensor(&t, &spec.optimizer, SeedingStrategy::GridAndRandom)?;
        row.s_svetlichny = Some(result.value);
        row.s_bound = Some(upper_bound_tensor(&t, Matricization::FirstParty));
    }
    if m.chsh {
        row.chsh_ab = Some(chsh_max(&partial_trace(&point.rho, (0, 1))?)?);
    }
    if m.pi_tangle {
        row.pi_tangle = Some(pi_tangle(&point.rho)?.pi_abc);
    }
    Ok(row)
}

/// `%.12g`-style rendering: 12 significant digits, `.` separator, no locale.
pub fn format_number(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if (-5..DIGITS).contains(&exp) {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn cell(v: Option<f64>) -> String {
    v.map(format_number).unwrap_or_default()
}

/// Writes a purely numeric table with the sweep number formatting.
pub fn write_csv_rows<W: Write, const N: usize>(
    header: &[&str; N],
    rows: &[[f64; N]],
    out: W,
) -> Result<()> {
    let mut w = csv::WriterBuilder::new().from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.iter().map(|&v| format_number(v)))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes rows under the fixed nine-column header.
pub fn write_csv<W: Write>(rows: &[SweepResult], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record([
            format_number(row.tau),
            format_number(row.r),
            format_number(row.delta),
            cell(row.s_svetlichny),
            cell(row.s_bound),
            cell(row.chsh_ab),
            cell(row.pi_tangle),
            cell(row.survival),
            row.error.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
