use clap::Args;
use serde_json::json;

use freemix::verify::{run_suite, Suite, VerifyOptions};

use crate::error::{CliError, CliResult};
use crate::output::Rendered;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// identities, partitions, freeprob or all.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Replace the main size bound of every check.
    #[arg(long)]
    kmax: Option<usize>,

    /// Perturb every closed form; each check must then report a counterexample.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

pub fn run(args: &VerifyArgs) -> CliResult<Rendered> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: freemix::Error| CliError::Usage(e.to_string()))?;
    if args.kmax == Some(0) {
        return Err(CliError::Usage("--kmax must be at least 1".into()));
    }
    let opts = VerifyOptions {
        k_max: args.kmax,
        inject_fault: args.inject_fault,
    };
    let reports = run_suite(suite, &opts, |_| {});
    let passed = reports.iter().all(|r| r.passed());
    let mut table = String::new();
    let mut csv = String::from("check,cases,passed,counterexample\n");
    for r in &reports {
        match &r.counterexample {
            None => table.push_str(&format!("PASS {} ({} cases)\n", r.name, r.cases)),
            Some(c) => table.push_str(&format!("FAIL {} after {} cases\n  {c}\n", r.name, r.cases)),
        }
        csv.push_str(&format!(
            "{},{},{},\"{}\"\n",
            r.name,
            r.cases,
            r.passed(),
            r.counterexample.as_deref().unwrap_or("").replace('"', "\"\"")
        ));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    table.push_str(&format!(
        "{} of {} checks passed\n",
        reports.len() - failed,
        reports.len()
    ));
    Ok(Rendered {
        json: json!({
            "command": "verify",
            "suite": suite,
            "k_max": args.kmax,
            "checks": reports,
            "all_passed": passed,
        }),
        csv,
        table,
        passed,
    })
}
