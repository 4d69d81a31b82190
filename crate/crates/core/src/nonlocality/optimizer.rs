//! Seeded multistart maximization of the Svetlichny value.
//!
//! Stage one evaluates the closed-form objective on a coarse product grid of
//! Charlie's angles (Bob's angles are drawn from the same grid at random) and
//! keeps the best [`GRID_REFINEMENTS`] points. Stage two runs Nelder–Mead on
//! the 8-torus from those points and from `starts` uniformly random settings.
//! Every refinement owns a ChaCha stream keyed by `(seed, refinement index)`
//! and the reduction breaks ties by lowest index, so the result does not
//! depend on how rayon schedules the work.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::objective::{evaluate, lambdas, optimal_alice, Cube};
use super::settings::{MeasurementSettings, Vec3};
use super::simplex::NelderMead;
use crate::qcore::{correlation_tensor, CorrelationTensor, DensityMatrix};
use crate::{Error, Result};

/// Grid seeds handed to the local refinement stage.
pub const GRID_REFINEMENTS: usize = 8;
/// Upper limit on evaluated grid points per call.
pub const MAX_GRID_POINTS: usize = 1296;

const GRID_STREAM: u64 = u64::MAX;
const MAX_RESTARTS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Independent random starts refined by Nelder–Mead.
    pub starts: usize,
    /// Grid points per angle for the seeding sweep.
    pub coarse_grid: usize,
    /// Iteration cap of a single simplex run.
    pub max_iters: usize,
    /// Relative improvement below which refinement stops.
    pub tol: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            starts: 64,
            coarse_grid: 6,
            max_iters: 400,
            tol: 1e-9,
            seed: 42,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.starts == 0 || self.coarse_grid == 0 || self.max_iters == 0 {
            return Err(Error::InvalidConfig(
                "starts, coarse_grid and max_iters must be positive".into(),
            ));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// How starting points for the local refinement are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SeedingStrategy {
    /// Coarse-grid seeds plus random starts.
    #[default]
    GridAndRandom,
    /// Random starts only.
    RandomOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvetlichnyResult {
    pub value: f64,
    pub best_settings: MeasurementSettings,
    pub optimal_x: Vec3,
    pub optimal_x_prime: Vec3,
    pub starts_used: usize,
    pub seed: u64,
}

/// Maximal Svetlichny value of a three-qubit state.
pub fn svetlichny_max(rho: &DensityMatrix, cfg: &OptimizerConfig) -> Result<SvetlichnyResult> {
    let tensor = correlation_tensor(rho)?;
    svetlichny_max_tensor(&tensor, cfg, SeedingStrategy::GridAndRandom)
}

pub fn svetlichny_max_tensor(
    tensor: &CorrelationTensor,
    cfg: &OptimizerConfig,
    strategy: SeedingStrategy,
) -> Result<SvetlichnyResult> {
    cfg.validate()?;
    let cube = tensor.correlation_cube();

    let mut seeds: Vec<[f64; 8]> = (0..cfg.starts as u64)
        .map(|i| random_angles(&mut stream(cfg.seed, i)))
        .collect();
    if strategy == SeedingStrategy::GridAndRandom {
        seeds.extend(grid_seeds(&cube, cfg));
    }

    let nm = NelderMead {
        max_iters: cfg.max_iters,
        tol: cfg.tol,
        initial_step: 0.5,
    };
    let refined: Vec<(f64, [f64; 8])> = seeds
        .par_iter()
        .map(|seed| refine(&cube, seed, &nm, cfg.tol))
        .collect();

    // Ordered reduction: ties resolve to the lowest refinement index.
    let (value, angles) = refined
        .iter()
        .fold((f64::NEG_INFINITY, [0.0; 8]), |best, cand| {
            if cand.0 > best.0 {
                *cand
            } else {
                best
            }
        });

    let best_settings = MeasurementSettings::from_angles(&angles).normalized();
    let (l0, l1) = lambdas(&cube, &best_settings);
    let (optimal_x, optimal_x_prime) = optimal_alice(l0, l1);
    Ok(SvetlichnyResult {
        value,
        best_settings,
        optimal_x,
        optimal_x_prime,
        starts_used: seeds.len(),
        seed: cfg.seed,
    })
}

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_angles(rng: &mut impl Rng) -> [f64; 8] {
    let mut a = [0.0; 8];
    for (i, v) in a.iter_mut().enumerate() {
        // Even slots are polar angles, odd slots azimuths.
        *v = if i % 2 == 0 {
            // Uniform on the sphere: cos(polar) uniform in [-1, 1].
            (rng.random_range(-1.0f64..=1.0)).acos()
        } else {
            rng.random_range(0.0..TAU)
        };
    }
    a
}

fn grid_angle(i: usize, n: usize, polar: bool) -> f64 {
    if polar {
        (i as f64 + 0.5) * PI / n as f64
    } else {
        i as f64 * TAU / n as f64
    }
}

/// Best coarse-grid points, highest objective first.
fn grid_seeds(cube: &Cube, cfg: &OptimizerConfig) -> Vec<[f64; 8]> {
    let g = cfg.coarse_grid;
    let mut rng = stream(cfg.seed, GRID_STREAM);
    let full = g.checked_pow(4).unwrap_or(usize::MAX);

    let charlie: Vec<[usize; 4]> = if full <= MAX_GRID_POINTS {
        (0..full)
            .map(|n| [n % g, (n / g) % g, (n / (g * g)) % g, n / (g * g * g)])
            .collect()
    } else {
        (0..MAX_GRID_POINTS)
            .map(|_| std::array::from_fn(|_| rng.random_range(0..g)))
            .collect()
    };

    let mut scored: Vec<(f64, [f64; 8])> = charlie
        .iter()
        .map(|&[a1, a2, b1, b2]| {
            let bob: [usize; 4] = std::array::from_fn(|_| rng.random_range(0..g));
            let angles = [
                grid_angle(a1, g, true),
                grid_angle(a2, g, false),
                grid_angle(bob[0], g, true),
                grid_angle(bob[1], g, false),
                grid_angle(b1, g, true),
                grid_angle(b2, g, false),
                grid_angle(bob[2], g, true),
                grid_angle(bob[3], g, false),
            ];
            (evaluate(cube, &MeasurementSettings::from_angles(&angles)), angles)
        })
        .collect();
    // Stable sort keeps generation order among equal values.
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    scored
        .into_iter()
        .take(GRID_REFINEMENTS)
        .map(|(_, a)| a)
        .collect()
}

/// Nelder–Mead with restarts from the incumbent until a restart stops paying off.
fn refine(cube: &Cube, start: &[f64; 8], nm: &NelderMead, tol: f64) -> (f64, [f64; 8]) {
    let neg = |x: &[f64]| -evaluate(cube, &MeasurementSettings::from_angles(x));
    let mut best_x = *start;
    let mut best = -neg(start);
    let mut step = nm.initial_step;
    for _ in 0..MAX_RESTARTS {
        let run = NelderMead {
            initial_step: step,
            ..*nm
        };
        let m = run.minimize(neg, &best_x);
        let value = -m.value;
        let gain = value - best;
        if gain > 0.0 {
            best = value;
            best_x.copy_from_slice(&m.x);
        }
        if gain <= tol * (best.abs() + tol) {
            break;
        }
        step = (step * 0.5).max(1e-3);
    }
    (best, best_x)
}
