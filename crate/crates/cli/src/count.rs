use clap::Args;
use serde_json::json;

use freemix::ncp::oracle::{
    count_nc_by_type_brute, count_np_general_brute, count_np_general_cgon_brute,
    nc_type_region_counts, pair_region_counts,
};
use freemix::ncp::{
    count_nc_by_type, count_nc_scaled, count_np_general, count_np_general_cgon, labeled_count_ax,
    labeled_count_ax_pair, unlabel_count, CycleSizeMultiset, PartitionTypeVector,
};
use num_bigint::BigInt;

use crate::error::{CliError, CliResult};
use crate::output::{Rendered, Table};

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Type vector `alpha_1,...,alpha_k` (alpha_i blocks of size i).
    #[arg(long, conflicts_with = "alphas")]
    alpha: Option<String>,

    /// Several type vectors separated by `;`, e.g. "2,0;2,0".
    #[arg(long, required_unless_present = "alpha")]
    alphas: Option<String>,

    /// Scale of the family (blocks of size m*i); defaults to the number of
    /// type vectors.
    #[arg(long)]
    m: Option<usize>,

    /// Size of the anchored extra block.
    #[arg(long)]
    c: Option<usize>,

    /// Region multiset X (comma list); counts the partitions whose quotient
    /// regions have these sizes. Needs one or two type vectors and no m or c.
    #[arg(long, conflicts_with_all = ["m", "c"])]
    regions: Option<String>,

    /// Also enumerate the family and compare.
    #[arg(long)]
    brute: bool,
}

fn parse_list(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad integer '{t}' in '{text}'")))
        })
        .collect()
}

fn show_types(alphas: &[PartitionTypeVector]) -> String {
    let parts: Vec<String> = alphas.iter().map(ToString::to_string).collect();
    parts.join(", ")
}

struct Count {
    family: String,
    closed: BigInt,
    brute: Option<BigInt>,
}

fn compute(args: &CountArgs) -> CliResult<Count> {
    let alphas: Vec<PartitionTypeVector> = match (&args.alpha, &args.alphas) {
        (Some(a), _) => vec![PartitionTypeVector::parse(a)?],
        (None, Some(list)) => list
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(PartitionTypeVector::parse)
            .collect::<Result<_, _>>()?,
        (None, None) => return Err(CliError::Usage("give --alpha or --alphas".into())),
    };
    if alphas.is_empty() {
        return Err(CliError::Usage("no type vectors given".into()));
    }

    if let Some(x) = &args.regions {
        let x = CycleSizeMultiset::new(parse_list(x)?)?;
        return match alphas.as_slice() {
            [alpha] => {
                let labeled = labeled_count_ax(alpha, &x)?;
                let closed = unlabel_count(&labeled, &x, &[alpha])?;
                let brute = if args.brute {
                    let counts = nc_type_region_counts(alpha.k())?;
                    Some(counts.get(&(alpha.clone(), x.clone())).copied().unwrap_or(0).into())
                } else {
                    None
                };
                Ok(Count {
                    family: format!("NP({alpha}; X={x})"),
                    closed,
                    brute,
                })
            }
            [alpha, beta] => {
                let labeled = labeled_count_ax_pair(alpha, beta, &x)?;
                let closed = unlabel_count(&labeled, &x, &[alpha, beta])?;
                let brute = if args.brute {
                    Some(pair_region_counts(alpha, beta)?.get(&x).copied().unwrap_or(0).into())
                } else {
                    None
                };
                Ok(Count {
                    family: format!("NP({alpha}, {beta}; X={x})"),
                    closed,
                    brute,
                })
            }
            _ => Err(CliError::Usage("--regions takes one or two type vectors".into())),
        };
    }

    let s = alphas.len();
    let m = args.m.unwrap_or(s);
    if let Some(c) = args.c {
        let closed = count_np_general_cgon(&alphas, m, c)?;
        let brute = if args.brute {
            Some(count_np_general_cgon_brute(&alphas, m, c)?.into())
        } else {
            None
        };
        return Ok(Count {
            family: format!("NP_{m}({}; c={c})", show_types(&alphas)),
            closed,
            brute,
        });
    }
    if let ([alpha], 1) = (alphas.as_slice(), m) {
        let brute = if args.brute {
            Some(count_nc_by_type_brute(alpha)?.into())
        } else {
            None
        };
        return Ok(Count {
            family: format!("NP{alpha}"),
            closed: count_nc_by_type(alpha),
            brute,
        });
    }
    let closed = if s == 1 {
        count_nc_scaled(&alphas[0], m)?
    } else {
        count_np_general(&alphas, m)?
    };
    let brute = if args.brute {
        Some(count_np_general_brute(&alphas, m)?.into())
    } else {
        None
    };
    Ok(Count {
        family: format!("NP_{m}({})", show_types(&alphas)),
        closed,
        brute,
    })
}

pub fn run(args: &CountArgs) -> CliResult<Rendered> {
    let c = compute(args)?;
    let agree = c.brute.as_ref().map(|b| *b == c.closed);
    let mut table = Table::new(&["family", "closed", "brute", "agree"]);
    table.push(vec![
        c.family.clone(),
        c.closed.to_string(),
        c.brute.as_ref().map(ToString::to_string).unwrap_or_default(),
        agree.map(|a| a.to_string()).unwrap_or_default(),
    ]);
    let text = match (&c.brute, agree) {
        (Some(b), Some(true)) => format!("{}: {} = {b}\n", c.family, c.closed),
        (Some(b), _) => format!("{}: {} != {b} (closed form vs enumeration)\n", c.family, c.closed),
        (None, _) => format!("{}: {}\n", c.family, c.closed),
    };
    Ok(Rendered {
        json: json!({
            "command": "count",
            "family": c.family,
            "closed": c.closed.to_string(),
            "brute": c.brute.as_ref().map(ToString::to_string),
            "agree": agree,
        }),
        csv: table.csv(),
        table: text,
        passed: agree.unwrap_or(true),
    })
}
