use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::figures::TABLE1_PARAMS;
use crate::entanglement::pi_tangle;
use crate::nonlocality::{
    chsh_max, svetlichny_max, svetlichny_max_tensor, upper_bound_tensor, Matricization,
    OptimizerConfig, SeedingStrategy,
};
use crate::qcore::random::random_density_matrix;
use crate::qcore::{correlation_tensor, make_state, partial_trace, DensityMatrix, StateFamily};
use crate::Result;

/// Random states in the bound-dominance check.
const DOMINANCE_SAMPLES: usize = 50;
const DOMINANCE_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidateOptions {
    pub optimizer: OptimizerConfig,
    /// Layout of the bound; anything but `FirstParty` is a negative control.
    pub matricization: Matricization,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        Self {
            optimizer: OptimizerConfig::default(),
            matricization: Matricization::FirstParty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn near(name: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            expected,
            actual,
            tolerance,
            passed: (actual - expected).abs() <= tolerance,
            note: None,
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationSummary {
    pub passed: bool,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl ValidationSummary {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Golden suite: GHZ-class table, W state, trivial states and bound dominance.
///
/// On the GHZ-class table the maximum is compared with the bound column. Where
/// the reference S value sits below the bound, it is kept as a note only:
/// a converged maximizer attains the bound on those rows.
pub fn validate(opts: &ValidateOptions) -> Result<ValidationSummary> {
    let cfg = &opts.optimizer;
    let bound_of = |rho: &DensityMatrix| -> Result<f64> {
        Ok(upper_bound_tensor(&correlation_tensor(rho)?, opts.matricization))
    };
    let mut checks = Vec::new();

    for (i, r) in TABLE1_PARAMS.iter().enumerate() {
        let rho = make_state(&StateFamily::GhzClass {
            p: r.p,
            theta: r.theta,
            theta3: r.theta3,
        })?;
        let s = svetlichny_max(&rho, cfg)?.value;
        let mut check = Check::near(format!("table1[{}].s", i + 1), r.bound, s, 5e-3);
        if (r.s - r.bound).abs() > 5e-3 {
            check = check.with_note(format!("reference S {:.4} is below the bound", r.s));
        }
        checks.push(check);
        checks.push(Check::near(
            format!("table1[{}].bound", i + 1),
            r.bound,
            bound_of(&rho)?,
            1e-3,
        ));
    }

    let w = make_state(&StateFamily::W)?;
    checks.push(Check::near("w.s", 4.35, svetlichny_max(&w, cfg)?.value, 0.01));

    let mixed = DensityMatrix::maximally_mixed(8);
    checks.push(Check::near("mixed.s", 0.0, svetlichny_max(&mixed, cfg)?.value, 1e-9));
    checks.push(Check::near("mixed.bound", 0.0, bound_of(&mixed)?, 1e-12));
    let ground = make_state(&StateFamily::Ground)?;
    checks.push(Check::near("ground.pi_tangle", 0.0, pi_tangle(&ground)?.pi_abc, 1e-10));
    checks.push(Check::near(
        "ground.chsh_ab",
        2.0,
        chsh_max(&partial_trace(&ground, (0, 1))?)?,
        1e-12,
    ));

    // Smallest bound − S margin over random mixed states of every rank.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let quick = OptimizerConfig {
        starts: cfg.starts.min(16),
        ..*cfg
    };
    let mut margin = f64::INFINITY;
    for n in 0..DOMINANCE_SAMPLES {
        let rho = random_density_matrix(&mut rng, 8, 1 + n % 8);
        let t = correlation_tensor(&rho)?;
        let s = svetlichny_max_tensor(&t, &quick, SeedingStrategy::GridAndRandom)?.value;
        margin = margin.min(upper_bound_tensor(&t, opts.matricization) - s);
    }
    checks.push(Check {
        name: "bound_dominance".into(),
        expected: 0.0,
        actual: margin,
        tolerance: DOMINANCE_SLACK,
        passed: margin >= -DOMINANCE_SLACK,
        note: Some(format!("min(bound - S) over {DOMINANCE_SAMPLES} random states")),
    });

    Ok(ValidationSummary {
        passed: checks.iter().all(|c| c.passed),
        seed: cfg.seed,
        checks,
    })
}
