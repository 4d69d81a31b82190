use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{run_sweep_to_dir, OutputFormat, TOOL_VERSION};
use crate::dynamics::{tau_grid, write_csv_rows, MetricSet, SweepSpec, ZenoSchedule};
use crate::nonlocality::{svetlichny_max, upper_bound, OptimizerConfig};
use crate::qcore::{make_state, StateFamily};
use crate::{Error, Result};

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

/// One GHZ-class parameter set with its reference values `(S, 4λ₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Table1Reference {
    pub p: f64,
    pub theta: f64,
    pub theta3: f64,
    pub s: f64,
    pub bound: f64,
}

const fn reference(p: f64, theta: f64, theta3: f64, s: f64, bound: f64) -> Table1Reference {
    Table1Reference {
        p,
        theta,
        theta3,
        s,
        bound,
    }
}

pub const TABLE1_PARAMS: [Table1Reference; 6] = [
    reference(1.0, FRAC_PI_3, FRAC_PI_2, 4.8990, 4.8990),
    reference(0.8, FRAC_PI_3, FRAC_PI_2, 3.9192, 3.9192),
    reference(0.998, FRAC_PI_3, 0.6216, 3.8610, 4.0006),
    reference(0.99, FRAC_PI_3, 0.6215, 3.8298, 3.9684),
    reference(1.0, FRAC_PI_4, FRAC_PI_2, 5.6569, 5.6569),
    reference(0.8, FRAC_PI_4, FRAC_PI_2, 4.5255, 4.5255),
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub p: f64,
    pub theta: f64,
    pub theta3: f64,
    pub s_svetlichny: f64,
    pub s_bound: f64,
}

/// Svetlichny maximum and bound for every GHZ-class parameter set.
pub fn table1(cfg: &OptimizerConfig) -> Result<Vec<Table1Row>> {
    TABLE1_PARAMS
        .iter()
        .map(|r| {
            let rho = make_state(&StateFamily::GhzClass {
                p: r.p,
                theta: r.theta,
                theta3: r.theta3,
            })?;
            Ok(Table1Row {
                p: r.p,
                theta: r.theta,
                theta3: r.theta3,
                s_svetlichny: svetlichny_max(&rho, cfg)?.value,
                s_bound: upper_bound(&rho)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigurePreset {
    /// `S` over `(τ, R)` plus strong and weak coupling cuts.
    Fig1,
    /// `S` and pairwise CHSH for `R = 20` and `R = 0.1`.
    Fig2,
    /// π-tangle over `(τ, R)` plus strong and weak coupling cuts.
    Fig3,
    /// `S` with and without repeated measurement.
    Fig4,
    /// π-tangle with and without repeated measurement.
    Fig5,
    /// GHZ-class maxima and bounds.
    Table1,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 6] = [
        Self::Fig1,
        Self::Fig2,
        Self::Fig3,
        Self::Fig4,
        Self::Fig5,
        Self::Table1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Fig1 => "fig1",
            Self::Fig2 => "fig2",
            Self::Fig3 => "fig3",
            Self::Fig4 => "fig4",
            Self::Fig5 => "fig5",
            Self::Table1 => "table1",
        }
    }

    /// Named sweeps making up the preset; empty for `table1`.
    pub fn sweeps(self, optimizer: &OptimizerConfig) -> Result<Vec<(String, SweepSpec)>> {
        let metrics = |names: &str| names.parse::<MetricSet>();
        let spec = |r_values: Vec<f64>, taus: Vec<f64>, schedule, metrics| SweepSpec {
            r_values,
            taus,
            delta: 0.0,
            schedule,
            metrics,
            optimizer: *optimizer,
        };
        let strong = || tau_grid(2.0, 200);
        let weak = || tau_grid(30.0, 300);
        let free = ZenoSchedule::free();

        let coupling_cuts = |prefix: &str, m: MetricSet| -> Result<Vec<(String, SweepSpec)>> {
            let surface_r: Vec<f64> = std::iter::once(0.1)
                .chain((1..=20).map(f64::from))
                .collect();
            Ok(vec![
                (
                    format!("{prefix}_surface"),
                    spec(surface_r, tau_grid(5.0, 100)?, free, m),
                ),
                (format!("{prefix}_strong"), spec(vec![10.0, 20.0], strong()?, free, m)),
                (format!("{prefix}_weak"), spec(vec![0.1, 0.2], weak()?, free, m)),
            ])
        };

        let zeno = |prefix: &str, m: MetricSet| -> Result<Vec<(String, SweepSpec)>> {
            let mut out = Vec::new();
            for (r, intervals, taus) in [
                (20.0, [0.01, 0.005, 0.001], strong()?),
                (0.1, [5.0, 1.0, 0.1], weak()?),
            ] {
                let mut schedules = vec![free];
                for t in intervals {
                    schedules.push(ZenoSchedule::every(t)?);
                }
                for s in schedules {
                    out.push((
                        format!("{prefix}_r{r}_{}", s.label()),
                        spec(vec![r], taus.clone(), s, m),
                    ));
                }
            }
            Ok(out)
        };

        match self {
            Self::Fig1 => coupling_cuts("fig1", metrics("svetlichny,survival")?),
            Self::Fig2 => {
                let m = metrics("svetlichny,chsh,survival")?;
                Ok(vec![
                    ("fig2_r20".to_string(), spec(vec![20.0], strong()?, free, m)),
                    ("fig2_r0.1".to_string(), spec(vec![0.1], weak()?, free, m)),
                ])
            }
            Self::Fig3 => coupling_cuts("fig3", metrics("pi_tangle,survival")?),
            Self::Fig4 => zeno("fig4", metrics("svetlichny,survival")?),
            Self::Fig5 => zeno("fig5", metrics("pi_tangle,survival")?),
            Self::Table1 => Ok(Vec::new()),
        }
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigurePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

#[derive(Debug, Serialize)]
struct Table1Metadata<'a> {
    tool_version: &'a str,
    name: &'a str,
    config: &'a OptimizerConfig,
    seed: u64,
    wall_clock_seconds: f64,
    rows: usize,
    error_rows: usize,
}

/// Writes every file of a preset under `dir`; returns the paths written.
pub fn run_figure(
    preset: FigurePreset,
    dir: &Path,
    format: OutputFormat,
    optimizer: &OptimizerConfig,
) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    if preset != FigurePreset::Table1 {
        let mut written = Vec::new();
        for (name, spec) in preset.sweeps(optimizer)? {
            log::info!("{preset}: sweeping {name}");
            written.extend(run_sweep_to_dir(&name, &spec, dir, format)?.1);
        }
        return Ok(written);
    }

    let started = Instant::now();
    let rows = table1(optimizer)?;
    let data = match format {
        OutputFormat::Csv => {
            let path = dir.join("table1.csv");
            let header = ["p", "theta", "theta3", "s_svetlichny", "s_bound"];
            let cells: Vec<[f64; 5]> = rows
                .iter()
                .map(|r| [r.p, r.theta, r.theta3, r.s_svetlichny, r.s_bound])
                .collect();
            write_csv_rows(&header, &cells, fs::File::create(&path)?)?;
            path
        }
        OutputFormat::Json => {
            let path = dir.join("table1.json");
            fs::write(&path, serde_json::to_string_pretty(&rows)?)?;
            path
        }
    };
    let meta = Table1Metadata {
        tool_version: TOOL_VERSION,
        name: "table1",
        config: optimizer,
        seed: optimizer.seed,
        wall_clock_seconds: started.elapsed().as_secs_f64(),
        rows: rows.len(),
        error_rows: 0,
    };
    let meta_path = dir.join("table1.meta.json");
    fs::write(&meta_path, serde_json::to_string_pretty(&meta)?)?;
    Ok(vec![data, meta_path])
}
