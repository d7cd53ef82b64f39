//! Brute-force counterparts of the closed-form counts, by direct enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::enumerate::{for_each_constrained, Constraints};
use super::{
    enumerate_nc, enumerate_pairs, pair_region_sizes, quotient_cycle_sizes, type_vector,
    CycleSizeMultiset, PartitionTypeVector,
};
use crate::error::{Error, Result};

/// Largest ground set the generalized-family enumerations will walk.
pub const MAX_FAMILY_GROUND: usize = 24;

/// Number of partitions of each type in `NC(k)`.
pub fn nc_type_counts(k: usize) -> Result<BTreeMap<PartitionTypeVector, u64>> {
    let mut counts = BTreeMap::new();
    super::for_each_nc(k, |p| *counts.entry(type_vector(p)).or_insert(0) += 1)?;
    Ok(counts)
}

pub fn count_nc_by_type_brute(alpha: &PartitionTypeVector) -> Result<u64> {
    Ok(nc_type_counts(alpha.k())?.get(alpha).copied().unwrap_or(0))
}

/// Number of partitions of each `(type, S_pi)` in `NC(k)`.
pub fn nc_type_region_counts(
    k: usize,
) -> Result<BTreeMap<(PartitionTypeVector, CycleSizeMultiset), u64>> {
    let mut counts = BTreeMap::new();
    let mut failure = None;
    super::for_each_nc(k, |p| match quotient_cycle_sizes(p) {
        Ok(x) => *counts.entry((type_vector(p), x)).or_insert(0) += 1,
        Err(e) => failure = Some(e),
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(counts),
    }
}

/// Number of pairs in `NP(alpha, beta)` for each region multiset.
pub fn pair_region_counts(
    alpha: &PartitionTypeVector,
    beta: &PartitionTypeVector,
) -> Result<BTreeMap<CycleSizeMultiset, u64>> {
    let mut counts = BTreeMap::new();
    for (pi, sigma) in enumerate_pairs(alpha, beta)? {
        *counts.entry(pair_region_sizes(&pi, &sigma)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `sum_{pi in NP(alpha)} prod_{x in S_pi} C_{x-1}` by enumeration.
pub fn single_catalan_sum_brute(alpha: &PartitionTypeVector) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for p in enumerate_nc(alpha.k())? {
        if type_vector(&p) == *alpha {
            total += super::count::catalan_weight(&quotient_cycle_sizes(&p)?);
        }
    }
    Ok(total)
}

/// `sum_{(pi, sigma) in NP(alpha, beta)} prod_{x} C_{x-1}` over the halved
/// regions of the interleaving.
pub fn pair_catalan_sum_brute(
    alpha: &PartitionTypeVector,
    beta: &PartitionTypeVector,
) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for (x, n) in pair_region_counts(alpha, beta)? {
        total += super::count::catalan_weight(&x) * n;
    }
    Ok(total)
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_FAMILY_GROUND {
        return Err(Error::SizeGuard(format!(
            "ground set {n} exceeds {MAX_FAMILY_GROUND}"
        )));
    }
    Ok(())
}

/// Group of 0-based position `q` on `[m k]` for the family with `s` type
/// vectors: the first `m - s + 1` slots of every length-`m` stretch belong to
/// group 0, each remaining slot to its own group.
fn residue_groups(k: usize, m: usize, s: usize) -> Vec<usize> {
    let m1 = m - s + 1;
    (0..m * k)
        .map(|q| {
            let r = q % m;
            if r < m1 {
                0
            } else {
                r - m1 + 1
            }
        })
        .collect()
}

fn family_types(
    blocks: &[Vec<usize>],
    group_of: &[usize],
    scale: &[usize],
    k: usize,
) -> Vec<PartitionTypeVector> {
    let mut counts = vec![vec![0usize; k]; scale.len()];
    for b in blocks {
        let g = group_of[b[0]];
        counts[g][b.len() / scale[g] - 1] += 1;
    }
    counts
        .into_iter()
        .map(|c| PartitionTypeVector::new(c).expect("group types are valid"))
        .collect()
}

/// Counts of `NP_m(alpha_1, ..., alpha_s)` for every `s`-tuple of types, by
/// walking the residue-class construction on `[mk]`.
pub fn np_general_counts(
    k: usize,
    m: usize,
    s: usize,
) -> Result<BTreeMap<Vec<PartitionTypeVector>, u64>> {
    if s == 0 || s > m {
        return Err(Error::ChainTooLong { s, m });
    }
    guard(m * k)?;
    let m1 = m - s + 1;
    let group_of = residue_groups(k, m, s);
    let mut modulus = vec![1; s];
    modulus[0] = m1;
    let accept = |_: usize, _: &[usize]| true;
    let c = Constraints {
        group_of,
        max_block: vec![m * k; s],
        modulus: modulus.clone(),
        accept: &accept,
    };
    let mut counts = BTreeMap::new();
    for_each_constrained(m * k, &c, &mut |blocks| {
        *counts
            .entry(family_types(blocks, &c.group_of, &modulus, k))
            .or_insert(0) += 1;
    });
    Ok(counts)
}

pub fn count_np_general_brute(alphas: &[PartitionTypeVector], m: usize) -> Result<u64> {
    let k = super::count::common_k(alphas)?;
    let counts = np_general_counts(k, m, alphas.len())?;
    Ok(counts.get(alphas).copied().unwrap_or(0))
}

/// Counts of the anchored `c`-gon family for every `s`-tuple of types.
///
/// The extra variable occupies its own residue class of `NP_{m+1}` on
/// `[(m+1)k]`: `k - c` singletons plus one block of size `c` that must contain
/// the last position.
pub fn np_general_cgon_counts(
    k: usize,
    m: usize,
    s: usize,
    c: usize,
) -> Result<BTreeMap<Vec<PartitionTypeVector>, u64>> {
    if s == 0 || s > m {
        return Err(Error::ChainTooLong { s, m });
    }
    if c == 0 || c > k {
        return Err(Error::OutOfRange(format!("c = {c} not in 1..={k}")));
    }
    let n = (m + 1) * k;
    guard(n)?;
    let group_of = residue_groups(k, m + 1, s + 1);
    let mut modulus = vec![1; s + 1];
    modulus[0] = m - s + 1;
    let mut max_block = vec![n; s + 1];
    max_block[s] = c;
    let anchor = n - 1;
    let accept = move |g: usize, b: &[usize]| {
        g != s || (b.len() == 1 && *b.last().unwrap() != anchor) || (b.len() == c && b.last() == Some(&anchor))
    };
    let cons = Constraints {
        group_of,
        modulus: modulus.clone(),
        max_block,
        accept: &accept,
    };
    let mut counts = BTreeMap::new();
    for_each_constrained(n, &cons, &mut |blocks| {
        let mut types = family_types(blocks, &cons.group_of, &modulus, k);
        types.pop();
        *counts.entry(types).or_insert(0) += 1;
    });
    Ok(counts)
}

pub fn count_np_general_cgon_brute(
    alphas: &[PartitionTypeVector],
    m: usize,
    c: usize,
) -> Result<u64> {
    let k = super::count::common_k(alphas)?;
    let counts = np_general_cgon_counts(k, m, alphas.len(), c)?;
    Ok(counts.get(alphas).copied().unwrap_or(0))
}
