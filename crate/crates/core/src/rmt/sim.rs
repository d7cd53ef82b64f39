use std::time::Instant;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::sample::{
    build_graph_matrix_z2, diagonal, normalized_traces, sample_haar_orthogonal,
    sample_zm_spectrum_proxy,
};
use super::spec::{ChainHead, DistributionSpec};
use crate::error::{Error, Result};
use crate::freeprob::{op_r, rational_to_f64, MomentSequence};

/// Which random matrix model to sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "scenario", rename_all = "kebab-case")]
pub enum Scenario {
    /// `M = D_s R_s ... D_1 R_1 M_0` with `M_0` the head.
    DrdChain {
        head: ChainHead,
        tail: Vec<DistributionSpec>,
    },
    /// `n^(-m/2) G_1 ... G_m`.
    MatrixProduct { m: usize },
    /// Z-shape graph matrix, `m = 2`.
    GraphZ2,
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DrdChain { .. } => "drd-chain",
            Self::MatrixProduct { .. } => "matrix-product",
            Self::GraphZ2 => "graph-z2",
        }
    }

    /// Limiting even moments the estimates are compared with.
    pub fn exact_moments(&self, k_max: usize) -> Result<MomentSequence> {
        match self {
            Self::DrdChain { head, tail } => {
                let mut acc = head.even_moments(k_max);
                for d in tail {
                    acc = op_r(&acc, &d.even_moments(k_max), k_max)?;
                }
                Ok(acc)
            }
            Self::MatrixProduct { m } => Ok(MomentSequence::fuss_catalan(*m, k_max)),
            Self::GraphZ2 => Ok(MomentSequence::fuss_catalan(2, k_max)),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            Self::DrdChain { tail, .. } => {
                if let Some(d) = tail.iter().find(|d| !d.is_symmetric()) {
                    return Err(Error::UnknownDistribution(format!(
                        "{d}: chain tail laws must be symmetric"
                    )));
                }
            }
            Self::MatrixProduct { m } if *m == 0 => {
                return Err(Error::OutOfRange("matrix-product needs m >= 1".into()));
            }
            Self::GraphZ2 if n > super::MAX_GRAPH_N => {
                return Err(Error::SizeGuard(format!(
                    "graph-z2 needs n <= {}, got {n}",
                    super::MAX_GRAPH_N
                )));
            }
            _ => {}
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationConfig {
    pub n: usize,
    pub trials: usize,
    pub k_max: usize,
    pub seed: u64,
    pub rel_tol: f64,
    #[serde(flatten)]
    pub scenario: Scenario,
}

impl SimulationConfig {
    /// Tolerances used when none is given: 5% for chains, 10% for the
    /// product proxy and 20% for the graph matrix.
    pub fn default_rel_tol(scenario: &Scenario) -> f64 {
        match scenario {
            Scenario::DrdChain { .. } => 0.05,
            Scenario::MatrixProduct { .. } => 0.10,
            Scenario::GraphZ2 => 0.20,
        }
    }

    pub fn new(scenario: Scenario, n: usize, trials: usize, k_max: usize, seed: u64) -> Self {
        let rel_tol = Self::default_rel_tol(&scenario);
        Self {
            n,
            trials,
            k_max,
            seed,
            rel_tol,
            scenario,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::OutOfRange(format!("n must be >= 2, got {}", self.n)));
        }
        if self.trials == 0 || self.k_max == 0 {
            return Err(Error::OutOfRange("trials and k must be positive".into()));
        }
        self.scenario.validate(self.n)
    }
}

/// One row of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub k: usize,
    pub estimate: f64,
    pub se: f64,
    pub exact: f64,
    pub rel_err: f64,
    pub z: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub config: SimulationConfig,
    pub rows: Vec<MomentRow>,
    /// Normalized traces `[trial][k - 1]`.
    pub per_trial: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_s: Option<f64>,
}

impl SimulationReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// `k,estimate,se,exact,rel_err,z,verdict` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,estimate,se,exact,rel_err,z,verdict\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.k,
                r.estimate,
                r.se,
                r.exact,
                r.rel_err,
                r.z,
                if r.pass { "pass" } else { "fail" }
            ));
        }
        out
    }
}

/// Mean and standard error (`sample sd / sqrt(trials)`) of each column.
pub fn summarize(per_trial: &[Vec<f64>], k_max: usize) -> Vec<(f64, f64)> {
    let t = per_trial.len() as f64;
    (0..k_max)
        .map(|k| {
            let mean = per_trial.iter().map(|row| row[k]).sum::<f64>() / t;
            let se = if per_trial.len() < 2 {
                0.0
            } else {
                let var = per_trial.iter().map(|row| (row[k] - mean).powi(2)).sum::<f64>() / (t - 1.0);
                (var / t).sqrt()
            };
            (mean, se)
        })
        .collect()
}

/// Pass iff `|estimate - exact| <= max(3 se, rel_tol |exact|)`.
pub fn verdict(estimate: f64, se: f64, exact: f64, rel_tol: f64) -> bool {
    (estimate - exact).abs() <= f64::max(3.0 * se, rel_tol * exact.abs())
}

/// Re-judges every row of `report` against `exact`.
pub fn compare(report: &SimulationReport, exact: &MomentSequence, rel_tol: f64) -> Result<Vec<MomentRow>> {
    exact.require(report.rows.len())?;
    Ok(report
        .rows
        .iter()
        .map(|r| build_row(r.k, r.estimate, r.se, rational_to_f64(&exact.even_moments()[r.k - 1]), rel_tol))
        .collect())
}

fn build_row(k: usize, estimate: f64, se: f64, exact: f64, rel_tol: f64) -> MomentRow {
    MomentRow {
        k,
        estimate,
        se,
        exact,
        rel_err: (estimate - exact) / exact,
        z: (estimate - exact) / se,
        pass: verdict(estimate, se, exact, rel_tol),
    }
}

/// Independent generator for one trial: the seed picks the key, the trial
/// index picks the stream.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn chain_matrix(head: &ChainHead, tail: &[DistributionSpec], n: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let mut current: Option<DMatrix<f64>> = None;
    let mut head_diag: Option<Vec<f64>> = None;
    match head {
        ChainHead::Diagonal(d) => head_diag = Some(diagonal(n, &d.sampler(), rng)),
        ChainHead::Product { m } => current = Some(sample_zm_spectrum_proxy(*m, n, rng)),
    }
    for d in tail {
        let r = sample_haar_orthogonal(n, rng);
        let mut next = match (current.take(), head_diag.take()) {
            (Some(m), _) => r * m,
            (None, Some(h)) => {
                let mut r = r;
                for (j, hj) in h.iter().enumerate() {
                    r.column_mut(j).scale_mut(*hj);
                }
                r
            }
            (None, None) => unreachable!("head always initialises the chain"),
        };
        let diag = diagonal(n, &d.sampler(), rng);
        for (i, di) in diag.iter().enumerate() {
            next.row_mut(i).scale_mut(*di);
        }
        current = Some(next);
    }
    match (current, head_diag) {
        (Some(m), _) => m,
        (None, Some(h)) => DMatrix::from_diagonal(&nalgebra::DVector::from_vec(h)),
        (None, None) => unreachable!("head always initialises the chain"),
    }
}

/// Normalized traces `tr((M M^T)^k) / r(n)` of one sample of the scenario.
pub fn trial_traces(config: &SimulationConfig, trial: usize) -> Result<Vec<f64>> {
    let n = config.n;
    let mut rng = trial_rng(config.seed, trial);
    let (m, norm) = match &config.scenario {
        Scenario::DrdChain { head, tail } => (chain_matrix(head, tail, n, &mut rng), n as f64),
        Scenario::MatrixProduct { m } => (sample_zm_spectrum_proxy(*m, n, &mut rng), n as f64),
        Scenario::GraphZ2 => (build_graph_matrix_z2(n, &mut rng)?, (n * (n - 1)) as f64),
    };
    Ok(normalized_traces(&m, config.k_max, norm))
}

#[cfg(feature = "parallel")]
fn run_trials(config: &SimulationConfig) -> Result<Vec<Vec<f64>>> {
    use rayon::prelude::*;
    (0..config.trials)
        .into_par_iter()
        .map(|t| trial_traces(config, t))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn run_trials(config: &SimulationConfig) -> Result<Vec<Vec<f64>>> {
    (0..config.trials).map(|t| trial_traces(config, t)).collect()
}

/// Runs every trial (in parallel when enabled) and compares the averaged
/// traces with the exact limits. Per-trial values do not depend on the
/// thread count.
pub fn simulate(config: &SimulationConfig) -> Result<SimulationReport> {
    config.validate()?;
    let exact = config.scenario.exact_moments(config.k_max)?;
    let start = Instant::now();
    let per_trial = run_trials(config)?;
    let rows = summarize(&per_trial, config.k_max)
        .into_iter()
        .enumerate()
        .map(|(i, (mean, se))| {
            build_row(i + 1, mean, se, rational_to_f64(&exact.even_moments()[i]), config.rel_tol)
        })
        .collect();
    Ok(SimulationReport {
        config: config.clone(),
        rows,
        per_trial,
        wall_time_s: Some(start.elapsed().as_secs_f64()),
    })
}

pub fn estimate_drd_chain(
    head: ChainHead,
    tail: Vec<DistributionSpec>,
    n: usize,
    trials: usize,
    k_max: usize,
    seed: u64,
) -> Result<SimulationReport> {
    simulate(&SimulationConfig::new(Scenario::DrdChain { head, tail }, n, trials, k_max, seed))
}
