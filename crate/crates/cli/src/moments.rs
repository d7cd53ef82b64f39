use std::path::Path;

use clap::Args;
use serde_json::json;

use freemix::freeprob::{
    chain_moments_closed, chain_moments_inductive, format_rational, op_r, variance_warning,
    zm_moments, ChainSpec, MomentSequence,
};
use freemix::rmt::DistributionSpec;

use crate::error::{CliError, CliResult};
use crate::output::{Rendered, Table};

#[derive(Debug, Args)]
pub struct MomentsArgs {
    /// Combine two laws with the mixing operation. Each is a moment file or a
    /// named law (rademacher, gaussian[:SIGMA], atoms:V@P;..., zm:M, file:PATH).
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with = "chain")]
    op_r: Option<Vec<String>>,

    /// Comma-separated chain, head first: `zm:M,LAW,LAW,...`. A `zm:M` or
    /// `rademacher` head also gets the closed form and an agreement column.
    #[arg(long, value_delimiter = ',', required_unless_present = "op_r")]
    chain: Option<Vec<String>>,

    /// Number of even moments to print.
    #[arg(long)]
    k: usize,

    /// Skip the closed form (needed when the tail is longer than m).
    #[arg(long)]
    inductive_only: bool,
}

fn read_sequence(path: &Path) -> CliResult<MomentSequence> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut seq: MomentSequence = serde_json::from_str(&text).map_err(|e| {
        CliError::Usage(format!("{}: malformed moment file: {e}", path.display()))
    })?;
    if seq.label.is_empty() {
        seq.label = path.display().to_string();
    }
    Ok(seq)
}

/// Resolves a named law or moment file into its first `k` even moments.
pub fn resolve(spec: &str, k: usize) -> CliResult<MomentSequence> {
    if let Some(path) = spec.strip_prefix("file:") {
        return read_sequence(Path::new(path));
    }
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        return read_sequence(Path::new(spec));
    }
    if let Some(m) = spec.strip_prefix("zm:") {
        let m: usize = m
            .parse()
            .map_err(|_| CliError::Usage(format!("bad Fuss-Catalan order in '{spec}'")))?;
        return Ok(zm_moments(m, k));
    }
    let law: DistributionSpec = spec.parse()?;
    Ok(law.even_moments(k))
}

fn warn(inputs: &[&MomentSequence]) -> Option<String> {
    let w = variance_warning(inputs);
    if let Some(text) = &w {
        eprintln!("warning: {text}");
    }
    w
}

fn run_op_r(specs: &[String], k: usize) -> CliResult<Rendered> {
    let a = resolve(&specs[0], k)?;
    let b = resolve(&specs[1], k)?;
    let warning = warn(&[&a, &b]);
    let out = op_r(&a, &b, k)?;
    let mut table = Table::new(&["k", "value"]);
    let mut rows = Vec::new();
    for (i, v) in out.even_moments().iter().enumerate() {
        table.push(vec![(i + 1).to_string(), format_rational(v)]);
        rows.push(json!({ "k": i + 1, "value": format_rational(v) }));
    }
    Ok(Rendered {
        json: json!({
            "command": "moments",
            "mode": "op-r",
            "label": out.label,
            "k_max": k,
            "rows": rows,
            "warning": warning,
        }),
        csv: table.csv(),
        table: format!("# {}\n{}", out.label, table.aligned()),
        passed: true,
    })
}

/// Fuss-Catalan order of a head that has a closed form.
fn head_order(head: &str) -> Option<usize> {
    match head.trim() {
        "rademacher" => Some(0),
        h => h.strip_prefix("zm:").and_then(|m| m.parse().ok()),
    }
}

fn run_chain(specs: &[String], k: usize, inductive_only: bool) -> CliResult<Rendered> {
    let (head, tail_specs) = specs
        .split_first()
        .ok_or_else(|| CliError::Usage("--chain needs at least a head".into()))?;
    let head_seq = resolve(head, k)?;
    let tail = tail_specs
        .iter()
        .map(|s| resolve(s, k))
        .collect::<CliResult<Vec<_>>>()?;
    let mut all: Vec<&MomentSequence> = vec![&head_seq];
    all.extend(tail.iter());
    let warning = warn(&all);

    let order = head_order(head);
    let (inductive, closed) = match order {
        Some(m) => {
            let chain = ChainSpec::new(m, tail.clone());
            let inductive = chain_moments_inductive(&chain, k)?;
            let closed = if inductive_only {
                None
            } else {
                Some(chain_moments_closed(&chain, k)?)
            };
            (inductive, closed)
        }
        None => {
            let mut acc = head_seq.truncated(k)?;
            for t in &tail {
                acc = op_r(&acc, t, k)?;
            }
            (acc, None)
        }
    };

    let mut table = Table::new(&["k", "inductive", "closed", "agree"]);
    let mut rows = Vec::new();
    let mut all_agree = true;
    for i in 0..k {
        let ind = format_rational(&inductive.even_moments()[i]);
        let cl = closed.as_ref().map(|c| c.even_moments()[i].clone());
        let agree = cl.as_ref().map(|c| *c == inductive.even_moments()[i]);
        all_agree &= agree.unwrap_or(true);
        let cl_text = cl.as_ref().map(format_rational);
        table.push(vec![
            (i + 1).to_string(),
            ind.clone(),
            cl_text.clone().unwrap_or_else(|| "-".into()),
            match agree {
                Some(true) => "yes".into(),
                Some(false) => "NO".into(),
                None => "-".into(),
            },
        ]);
        rows.push(json!({ "k": i + 1, "inductive": ind, "closed": cl_text, "agree": agree }));
    }
    let label = specs.join(" o ");
    Ok(Rendered {
        json: json!({
            "command": "moments",
            "mode": "chain",
            "label": label,
            "k_max": k,
            "rows": rows,
            "all_agree": all_agree,
            "warning": warning,
        }),
        csv: table.csv(),
        table: format!("# {label}\n{}", table.aligned()),
        passed: all_agree,
    })
}

pub fn run(args: &MomentsArgs) -> CliResult<Rendered> {
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    match (&args.op_r, &args.chain) {
        (Some(specs), _) => run_op_r(specs, args.k),
        (None, Some(specs)) => run_chain(specs, args.k, args.inductive_only),
        (None, None) => Err(CliError::Usage("give --op-r A B or --chain SPEC,...".into())),
    }
}
