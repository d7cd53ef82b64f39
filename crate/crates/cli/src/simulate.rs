use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use freemix::rmt::{simulate, ChainHead, DistributionSpec, Scenario, SimulationConfig};

use crate::error::{CliError, CliResult};
use crate::output::{Rendered, Table};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScenarioKind {
    DrdChain,
    MatrixProduct,
    GraphZ2,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    scenario: ScenarioKind,

    /// Chain head: a diagonal law or `zm:M` (product of M random sign matrices).
    #[arg(long, default_value = "rademacher")]
    head: String,

    /// Comma-separated symmetric diagonal laws applied after the head.
    #[arg(long, value_delimiter = ',')]
    tail: Vec<String>,

    /// Number of factors for matrix-product.
    #[arg(long, default_value_t = 1)]
    m: usize,

    /// Matrix dimension (vertex count for graph-z2).
    #[arg(long, default_value_t = 400)]
    n: usize,

    #[arg(long, default_value_t = 32)]
    trials: usize,

    /// Largest trace power.
    #[arg(long, default_value_t = 3)]
    k: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Relative tolerance; defaults to 0.05, 0.10 or 0.20 by scenario.
    #[arg(long)]
    rel_tol: Option<f64>,
}

fn scenario(args: &SimulateArgs) -> CliResult<Scenario> {
    Ok(match args.scenario {
        ScenarioKind::DrdChain => Scenario::DrdChain {
            head: args.head.parse::<ChainHead>()?,
            tail: args
                .tail
                .iter()
                .map(|t| t.parse::<DistributionSpec>())
                .collect::<Result<_, _>>()?,
        },
        ScenarioKind::MatrixProduct => Scenario::MatrixProduct { m: args.m },
        ScenarioKind::GraphZ2 => Scenario::GraphZ2,
    })
}

pub fn run(args: &SimulateArgs, timestamp: bool) -> CliResult<Rendered> {
    let scenario = scenario(args)?;
    let mut config = SimulationConfig::new(scenario, args.n, args.trials, args.k, args.seed);
    if let Some(t) = args.rel_tol {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(CliError::Usage(format!("--rel-tol must be >= 0, got {t}")));
        }
        config.rel_tol = t;
    }
    let mut report = simulate(&config)?;
    if !timestamp {
        report.wall_time_s = None;
    }
    let mut json: Value = serde_json::to_value(&report).expect("report serializes");
    if timestamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        json["timestamp_unix"] = json!(secs);
    }

    let mut table = Table::new(&["k", "estimate", "se", "exact", "rel_err", "z", "verdict"]);
    for r in &report.rows {
        table.push(vec![
            r.k.to_string(),
            format!("{:.6}", r.estimate),
            format!("{:.6}", r.se),
            r.exact.to_string(),
            format!("{:+.4}", r.rel_err),
            if r.z.is_finite() { format!("{:+.2}", r.z) } else { "-".into() },
            if r.pass { "pass" } else { "FAIL" }.into(),
        ]);
    }
    let mut header = format!(
        "# {} n={} trials={} seed={} rel_tol={}",
        config.scenario.name(),
        config.n,
        config.trials,
        config.seed,
        config.rel_tol
    );
    if let Scenario::DrdChain { head, tail } = &config.scenario {
        let tail: Vec<String> = tail.iter().map(ToString::to_string).collect();
        header.push_str(&format!(" head={head} tail=[{}]", tail.join(",")));
    }
    if let Some(w) = report.wall_time_s {
        header.push_str(&format!(" wall={w:.2}s"));
    }
    Ok(Rendered {
        json,
        csv: report.to_csv(),
        table: format!("{header}\n{}", table.aligned()),
        passed: report.all_pass(),
    })
}
