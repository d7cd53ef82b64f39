//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; the page renders it.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use freemix::freeprob::{
    chain_moments_closed, chain_moments_inductive, format_rational, op_r, parse_rational,
    zm_moments, ChainSpec, MomentSequence,
};
use freemix::ncp::{enumerate_nc, kreweras_complement, quotient_cycle_sizes};
use freemix::rmt::DistributionSpec;

/// Largest `k` the page will tabulate or draw.
pub const MAX_K: usize = 12;

/// A named law (`rademacher`, `gaussian:2`, `atoms:...`, `zm:3`) or a
/// comma-separated list of even moments such as `1, 3, 15`.
fn law(text: &str, k: usize) -> Result<MomentSequence, String> {
    let t = text.trim();
    if let Some(m) = t.strip_prefix("zm:") {
        let m: usize = m.trim().parse().map_err(|_| format!("bad order in '{t}'"))?;
        return Ok(zm_moments(m, k));
    }
    if t.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
        let values = t
            .split(',')
            .map(|v| parse_rational(v.trim()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        return Ok(MomentSequence::new(t, values));
    }
    let spec: DistributionSpec = t.parse().map_err(|e: freemix::Error| e.to_string())?;
    Ok(spec.even_moments(k))
}

fn check_k(k: usize) -> Result<(), String> {
    if k == 0 || k > MAX_K {
        return Err(format!("k must be between 1 and {MAX_K}"));
    }
    Ok(())
}

pub fn op_r_json(a: &str, b: &str, k: usize) -> Result<String, String> {
    check_k(k)?;
    let (x, y) = (law(a, k)?, law(b, k)?);
    let out = op_r(&x, &y, k).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = out
        .even_moments()
        .iter()
        .enumerate()
        .map(|(i, v)| json!({ "k": i + 1, "value": format_rational(v) }))
        .collect();
    Ok(json!({ "label": out.label, "rows": rows }).to_string())
}

pub fn chain_json(m: usize, tail: &str, k: usize) -> Result<String, String> {
    check_k(k)?;
    let tail = tail
        .split('|')
        .filter(|s| !s.trim().is_empty())
        .map(|s| law(s, k))
        .collect::<Result<Vec<_>, _>>()?;
    let chain = ChainSpec::new(m, tail);
    let inductive = chain_moments_inductive(&chain, k).map_err(|e| e.to_string())?;
    let closed = if chain.s() <= m {
        Some(chain_moments_closed(&chain, k).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let rows: Vec<Value> = (0..k)
        .map(|i| {
            let ind = &inductive.even_moments()[i];
            let cl = closed.as_ref().map(|c| &c.even_moments()[i]);
            json!({
                "k": i + 1,
                "inductive": format_rational(ind),
                "closed": cl.map(format_rational),
                "agree": cl.map(|c| c == ind),
            })
        })
        .collect();
    Ok(json!({ "label": chain.label(), "rows": rows }).to_string())
}

pub fn partition_json(k: usize, index: usize) -> Result<String, String> {
    if k == 0 || k > 10 {
        return Err("k must be between 1 and 10".into());
    }
    let all = enumerate_nc(k).map_err(|e| e.to_string())?;
    let p = &all[index % all.len()];
    let kp = kreweras_complement(p).map_err(|e| e.to_string())?;
    let x = quotient_cycle_sizes(p).map_err(|e| e.to_string())?;
    Ok(json!({
        "k": k,
        "count": all.len(),
        "index": index % all.len(),
        "partition": p,
        "text": p.to_string(),
        "type": p.type_vector().to_string(),
        "kreweras": kp,
        "kreweras_text": kp.to_string(),
        "regions": x.sizes(),
    })
    .to_string())
}

/// `(Omega o Omega')_{2k}` for `k = 1..=k`.
#[wasm_bindgen(js_name = opR)]
pub fn op_r_js(a: &str, b: &str, k: usize) -> Result<String, JsError> {
    op_r_json(a, b, k).map_err(|e| JsError::new(&e))
}

/// Chain `zm:m o tail_1 o ...` with `|`-separated tail laws.
#[wasm_bindgen(js_name = chainMoments)]
pub fn chain_js(m: usize, tail: &str, k: usize) -> Result<String, JsError> {
    chain_json(m, tail, k).map_err(|e| JsError::new(&e))
}

/// The `index`-th non-crossing partition of `[k]` with its Kreweras complement.
#[wasm_bindgen(js_name = ncPartition)]
pub fn partition_js(k: usize, index: usize) -> Result<String, JsError> {
    partition_json(k, index).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn op_r_rows() {
        let v = parse(op_r_json("rademacher", "gaussian", 3).unwrap());
        let vals: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
        assert_eq!(vals, ["1", "3", "15"]);
        let v = parse(op_r_json("1, 5", "1,3", 2).unwrap());
        assert_eq!(v["rows"][1]["value"], "7");
        assert!(op_r_json("1", "1", 2).is_err());
        assert!(op_r_json("cauchy", "1", 1).is_err());
    }

    #[test]
    fn chain_rows() {
        let v = parse(chain_json(2, "zm:1", 4).unwrap());
        assert_eq!(v["rows"][3]["closed"], "140");
        assert_eq!(v["rows"][3]["agree"], true);
        let v = parse(chain_json(0, "gaussian", 2).unwrap());
        assert!(v["rows"][0]["closed"].is_null());
    }

    #[test]
    fn partitions() {
        let v = parse(partition_json(4, 0).unwrap());
        assert_eq!(v["count"], 14);
        let v = parse(partition_json(3, 17).unwrap());
        assert_eq!(v["index"], 2);
        assert!(partition_json(11, 0).is_err());
    }
}
