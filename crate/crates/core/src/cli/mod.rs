//! Library side of the `triloc` command-line tool.
//!
//! The binary only parses flags and maps errors to exit codes; everything it
//! runs lives here so the examples and tests can drive the same code paths.

mod figures;
mod validate;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::dynamics::{self, SweepResult, SweepSpec};
use crate::entanglement::{pi_tangle, PiTangleBreakdown};
use crate::nonlocality::{chsh_max, svetlichny_max, upper_bound, OptimizerConfig, SvetlichnyResult};
use crate::qcore::{make_state, partial_trace, StateFamily};
use crate::{Error, Result};

pub use figures::{run_figure, table1, FigurePreset, Table1Row, TABLE1_PARAMS};
pub use validate::{validate, Check, ValidateOptions, ValidationSummary};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit codes of the binary.
pub mod exit_code {
    pub const OK: i32 = 0;
    pub const VALIDATION_FAILED: i32 = 1;
    pub const BAD_INPUT: i32 = 2;
    pub const UNKNOWN_PRESET: i32 = 3;
}

/// Maps a library error onto the binary's exit code.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::UnknownPreset(_) => exit_code::UNKNOWN_PRESET,
        _ => exit_code::BAD_INPUT,
    }
}

/// Parses an angle in radians: plain numbers or rational multiples of π such
/// as `pi/3`, `2pi/3`, `-3*pi/4`, `pi`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let bad = || Error::InvalidConfig(format!("cannot parse angle '{text}'"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = s.to_ascii_lowercase();
    let Some(pos) = lower.find("pi") else {
        return lower.parse::<f64>().map_err(|_| bad());
    };
    let coeff_part = lower[..pos].trim_end_matches('*');
    let coeff = match coeff_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = &lower[pos + 2..];
    let denom = match rest {
        "" => 1.0,
        r => r
            .strip_prefix('/')
            .ok_or_else(bad)?
            .parse::<f64>()
            .map_err(|_| bad())?,
    };
    if denom == 0.0 {
        return Err(bad());
    }
    Ok(coeff * std::f64::consts::PI / denom)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChshMarginals {
    pub ab: f64,
    pub ac: f64,
    pub bc: f64,
}

/// Every metric for a single state, as printed by `triloc compute`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComputeReport {
    pub tool_version: String,
    pub state: StateFamily,
    pub optimizer: OptimizerConfig,
    pub s_svetlichny: f64,
    pub s_bound: f64,
    pub svetlichny: SvetlichnyResult,
    pub chsh: ChshMarginals,
    pub pi_tangle: PiTangleBreakdown,
}

pub fn compute(state: &StateFamily, cfg: &OptimizerConfig) -> Result<ComputeReport> {
    let rho = make_state(state)?;
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            expected: 8,
            actual: rho.dim(),
        });
    }
    let svetlichny = svetlichny_max(&rho, cfg)?;
    let chsh = ChshMarginals {
        ab: chsh_max(&partial_trace(&rho, (0, 1))?)?,
        ac: chsh_max(&partial_trace(&rho, (0, 2))?)?,
        bc: chsh_max(&partial_trace(&rho, (1, 2))?)?,
    };
    Ok(ComputeReport {
        tool_version: TOOL_VERSION.to_string(),
        state: state.clone(),
        optimizer: *cfg,
        s_svetlichny: svetlichny.value,
        s_bound: upper_bound(&rho)?,
        svetlichny,
        chsh,
        pi_tangle: pi_tangle(&rho)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Sidecar written next to every sweep output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepMetadata {
    pub tool_version: String,
    pub name: String,
    pub config: SweepSpec,
    pub seed: u64,
    pub wall_clock_seconds: f64,
    pub rows: usize,
    pub error_rows: usize,
}

/// Runs a sweep and writes `<name>.csv|json` plus `<name>.meta.json` under `dir`.
pub fn run_sweep_to_dir(
    name: &str,
    spec: &SweepSpec,
    dir: &Path,
    format: OutputFormat,
) -> Result<(Vec<SweepResult>, Vec<PathBuf>)> {
    fs::create_dir_all(dir)?;
    let started = Instant::now();
    let rows = dynamics::sweep(spec)?;
    let elapsed = started.elapsed().as_secs_f64();

    let data_path = match format {
        OutputFormat::Csv => {
            let path = dir.join(format!("{name}.csv"));
            dynamics::write_csv(&rows, fs::File::create(&path)?)?;
            path
        }
        OutputFormat::Json => {
            let path = dir.join(format!("{name}.json"));
            fs::write(&path, serde_json::to_string_pretty(&rows)?)?;
            path
        }
    };
    let meta = SweepMetadata {
        tool_version: TOOL_VERSION.to_string(),
        name: name.to_string(),
        config: spec.clone(),
        seed: spec.optimizer.seed,
        wall_clock_seconds: elapsed,
        rows: rows.len(),
        error_rows: rows.iter().filter(|r| r.error.is_some()).count(),
    };
    let meta_path = dir.join(format!("{name}.meta.json"));
    fs::write(&meta_path, serde_json::to_string_pretty(&meta)?)?;
    Ok((rows, vec![data_path, meta_path]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles() {
        let cases = [
            ("pi/3", PI / 3.0),
            ("2pi/3", 2.0 * PI / 3.0),
            ("-3*pi/4", -0.75 * PI),
            ("pi", PI),
            ("PI/2", PI / 2.0),
            ("0.6216", 0.6216),
            ("-1e-3", -1e-3),
        ];
        for (text, want) in cases {
            assert!((parse_angle(text).unwrap() - want).abs() < 1e-15, "{text}");
        }
        for bad in ["", "pi/0", "pi/x", "xpi", "pi3", "abc"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code_for(&Error::UnknownPreset("x".into())), 3);
        assert_eq!(exit_code_for(&Error::InvariantViolation("x".into())), 2);
    }

    #[test]
    fn ground_state_report() {
        let cfg = OptimizerConfig {
            starts: 8,
            ..OptimizerConfig::default()
        };
        let r = compute(&StateFamily::Ground, &cfg).unwrap();
        assert!(r.pi_tangle.pi_abc.abs() < 1e-10);
        assert!((r.s_svetlichny - 4.0).abs() < 1e-6);
        assert!((r.chsh.ab - 2.0).abs() < 1e-12);
    }
}
