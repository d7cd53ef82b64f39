//! Exhaustive checks of every closed form against an independent route.
//!
//! Each check walks a finite parameter range and stops at the first
//! counterexample. Ranges default to the library's acceptance ranges; a
//! `k_max` override replaces the main size parameter of every check, clipped
//! to what the brute-force side can enumerate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{
    catalan, catalan_composition_sum, catalan_composition_sum_brute, fuss_catalan_composition_sum,
    fuss_catalan_composition_sum_brute, product_shift_sum, product_shift_sum_brute,
    verify_alt_binomial_1, verify_alt_binomial_2, verify_key_identity,
};
use crate::error::{Error, Result};
use crate::freeprob::{
    b_convolution, chain_moments_closed, chain_moments_inductive, cumulant_oracle_product_moments,
    format_rational, free_product_moments, op_r, pair_catalan_sum, single_catalan_sum,
    zm_compose, zm_convolve_closed, zm_moments, ChainSpec, GeneralMomentSequence, MomentSequence,
    MAX_ORACLE_K,
};
use crate::ncp::count::catalan_weight;
use crate::ncp::oracle::{
    nc_type_counts, nc_type_region_counts, np_general_cgon_counts, np_general_counts,
    pair_region_counts, MAX_FAMILY_GROUND,
};
use crate::ncp::{
    count_nc_by_type, count_np_general, count_np_general_cgon, for_each_nc, kreweras_complement,
    labeled_count_ax, labeled_count_ax_pair, quotient_cycle_sizes, unlabel_count,
    CycleSizeMultiset, PartitionTypeVector, MAX_PAIR_K,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Partitions,
    Freeprob,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(Self::Identities),
            "partitions" => Ok(Self::Partitions),
            "freeprob" => Ok(Self::Freeprob),
            "all" => Ok(Self::All),
            _ => Err(Error::Parse(format!("unknown suite '{s}'"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Identities => "identities",
            Self::Partitions => "partitions",
            Self::Freeprob => "freeprob",
            Self::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub k_max: Option<usize>,
    /// Adds one to every closed-form value, so that every check must fail.
    /// Used to confirm that the harness reports counterexamples.
    pub inject_fault: bool,
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

trait Bump {
    fn bump(self) -> Self;
}

impl Bump for BigInt {
    fn bump(self) -> Self {
        self + 1
    }
}

impl Bump for BigRational {
    fn bump(self) -> Self {
        self + BigRational::one()
    }
}

struct Tally {
    name: &'static str,
    cases: u64,
    counterexample: Option<String>,
    fault: bool,
}

impl Tally {
    fn new(name: &'static str, opts: &VerifyOptions) -> Self {
        Self {
            name,
            cases: 0,
            counterexample: None,
            fault: opts.inject_fault,
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Records `closed == route`; `false` once a counterexample is known.
    fn eq<T: PartialEq + fmt::Display + Bump>(
        &mut self,
        case: impl FnOnce() -> String,
        closed: T,
        route: T,
    ) -> bool {
        if self.failed() {
            return false;
        }
        self.cases += 1;
        let closed = if self.fault { closed.bump() } else { closed };
        if closed != route {
            self.counterexample = Some(format!("{}: closed form {closed} != {route}", case()));
            return false;
        }
        true
    }

    fn error(&mut self, case: impl FnOnce() -> String, e: Error) -> bool {
        if !self.failed() {
            self.counterexample = Some(format!("{}: {e}", case()));
        }
        false
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

macro_rules! attempt {
    ($tally:expr, $case:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => {
                $tally.error($case, err);
                return $tally.finish();
            }
        }
    };
}

fn bound(opts: &VerifyOptions, default: usize, cap: usize) -> usize {
    opts.k_max.unwrap_or(default).min(cap)
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// Seeded random sequence of `len` rationals `p/q` with `|p/q| <= 3`.
pub fn random_rationals(seed: u64, len: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| {
            let q: i64 = rng.random_range(1..=4);
            let p: i64 = rng.random_range(-3 * q..=3 * q);
            BigRational::new(p.into(), q.into())
        })
        .collect()
}

fn random_even(seed: u64, len: usize) -> MomentSequence {
    MomentSequence::new(format!("random#{seed}"), random_rationals(seed, len))
}

fn random_general(seed: u64, len: usize) -> GeneralMomentSequence {
    GeneralMomentSequence::new(format!("random#{seed}"), random_rationals(seed, len))
}

fn show(values: &[BigRational]) -> String {
    let parts: Vec<String> = values.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

/// Compares two sequences entry by entry.
fn seq_eq(
    t: &mut Tally,
    case: &dyn Fn() -> String,
    closed: &[BigRational],
    route: &[BigRational],
) -> bool {
    for (i, (c, r)) in closed.iter().zip(route).enumerate() {
        if !t.eq(|| format!("{} at k = {}", case(), i + 1), c.clone(), r.clone()) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------- identities

pub fn check_alt_binomial_1(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("alternating binomial sum 1", opts);
    let n_max = bound(opts, 12, 60);
    for n in 1..=n_max {
        for m in 0..n {
            for k in 0..=m {
                let case = || format!("n={n} m={m} k={k}");
                let (lhs, rhs) = attempt!(t, case, verify_alt_binomial_1(n, m, k));
                if !t.eq(case, rhs, lhs) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

pub fn check_alt_binomial_2(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("alternating binomial sum 2", opts);
    let top = bound(opts, 10, 40);
    for n in 0..=top {
        for m in 0..=top {
            for k in 0..=top {
                let (lhs, rhs) = verify_alt_binomial_2(n, m, k);
                if !t.eq(|| format!("n={n} m={m} k={k}"), rhs, lhs) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

pub fn check_catalan_composition(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("Catalan composition sum", opts);
    for n in 0..=bound(opts, 8, 12) {
        for k in 1..=6 {
            let case = || format!("n={n} k={k}");
            let closed = attempt!(t, case, catalan_composition_sum(n, k));
            if !t.eq(case, closed, catalan_composition_sum_brute(n, k)) {
                return t.finish();
            }
        }
    }
    t.finish()
}

pub fn check_fuss_catalan_composition(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("Fuss-Catalan composition sum", opts);
    for k in 1..=bound(opts, 6, 10) {
        for m in 0..=3 {
            for s in 1..=k {
                let case = || format!("k={k} m={m} t={s}");
                let closed = attempt!(t, case, fuss_catalan_composition_sum(k, m, s));
                let brute = BigRational::from_integer(fuss_catalan_composition_sum_brute(k, m, s));
                if !t.eq(case, closed, brute) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

pub fn check_key_identity(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("key alternating identity", opts);
    let k_max = bound(opts, 5, 30);
    for m in 1..=4 {
        for s in 1..m {
            for k in 1..=k_max {
                for a_sum in s..=s * k {
                    for b in 1..=k {
                        let case = || format!("m={m} s={s} k={k} A={a_sum} b={b}");
                        let (lhs, rhs) = attempt!(t, case, verify_key_identity(m, s, k, a_sum, b));
                        if !t.eq(case, rhs, lhs) {
                            return t.finish();
                        }
                    }
                }
            }
        }
    }
    t.finish()
}

pub fn check_product_shift(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("product shift sum", opts);
    for k in 1..=bound(opts, 7, 10) {
        for alpha in PartitionTypeVector::all(k) {
            let sizes = alpha.parts();
            for s in 0..=3 {
                let closed = product_shift_sum(&sizes, s);
                let brute = product_shift_sum_brute(&sizes, s);
                if !t.eq(|| format!("sizes={sizes:?} s={s}"), closed, brute) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

// ---------------------------------------------------------------- partitions

pub fn check_nc_type_counts(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("non-crossing counts by type", opts);
    for k in 1..=bound(opts, 9, 12) {
        let counts = attempt!(t, || format!("k={k}"), nc_type_counts(k));
        for alpha in PartitionTypeVector::all(k) {
            let n = counts.get(&alpha).copied().unwrap_or(0);
            if !t.eq(|| format!("alpha={alpha}"), count_nc_by_type(&alpha), big(n)) {
                return t.finish();
            }
        }
        let total: u64 = counts.values().sum();
        if !t.eq(|| format!("total over P_{k}"), catalan(k), big(total)) {
            return t.finish();
        }
    }
    t.finish()
}

pub fn check_kreweras_duality(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("quotient cycles = Kreweras blocks", opts);
    for k in 1..=bound(opts, 9, 12) {
        let mut failure: Option<String> = None;
        let mut cases = 0u64;
        let walk = for_each_nc(k, |p| {
            if failure.is_some() {
                return;
            }
            cases += 1;
            let outcome = quotient_cycle_sizes(p).and_then(|x| Ok((x, kreweras_complement(p)?)));
            match outcome {
                Ok((x, kp)) => {
                    let sizes = kp.block_sizes();
                    let expected_len = k - p.num_blocks() + 1;
                    if x.sizes() != sizes.as_slice() || x.len() != expected_len || x.total() != k {
                        failure = Some(format!(
                            "pi={p}: quotient sizes {x}, Kreweras block sizes {sizes:?}, expected {expected_len} parts"
                        ));
                    }
                }
                Err(e) => failure = Some(format!("pi={p}: {e}")),
            }
        });
        attempt!(t, || format!("k={k}"), walk);
        t.cases += cases;
        let closed_ok = failure.is_none() != t.fault;
        if !closed_ok {
            t.counterexample = Some(failure.unwrap_or_else(|| format!("k={k}: injected fault")));
            return t.finish();
        }
    }
    t.finish()
}

pub fn check_single_catalan_sum(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("single-partition Catalan sum", opts);
    for k in 1..=bound(opts, 9, 12) {
        let regions = attempt!(t, || format!("k={k}"), nc_type_region_counts(k));
        for alpha in PartitionTypeVector::all(k) {
            let brute: BigInt = regions
                .iter()
                .filter(|((a, _), _)| *a == alpha)
                .map(|((_, x), n)| catalan_weight(x) * n)
                .sum();
            let closed = single_catalan_sum(&alpha);
            if !t.eq(|| format!("alpha={alpha}"), closed, BigRational::from_integer(brute)) {
                return t.finish();
            }
        }
    }
    t.finish()
}

pub fn check_pair_catalan_sum(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("pair Catalan sum", opts);
    for k in 1..=bound(opts, 7, MAX_PAIR_K) {
        let types = PartitionTypeVector::all(k);
        for alpha in &types {
            for beta in &types {
                let case = || format!("alpha={alpha} beta={beta}");
                let regions = attempt!(t, case, pair_region_counts(alpha, beta));
                let brute: BigInt = regions.iter().map(|(x, n)| catalan_weight(x) * n).sum();
                let closed = attempt!(t, case, pair_catalan_sum(alpha, beta));
                if !t.eq(case, closed, BigRational::from_integer(brute)) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

fn tuples(types: &[PartitionTypeVector], s: usize) -> Vec<Vec<PartitionTypeVector>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                types.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn show_types(alphas: &[PartitionTypeVector]) -> String {
    let parts: Vec<String> = alphas.iter().map(ToString::to_string).collect();
    parts.join(" ")
}

/// `(k, m, s)` with `m k <= ground`, `1 <= s <= min(m, 3)`.
fn family_params(ground: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=ground {
        for k in 1..=ground / m {
            for s in 1..=m.min(3) {
                out.push((k, m, s));
            }
        }
    }
    out
}

pub fn check_general_counts(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("generalized family counts", opts);
    for (k, m, s) in family_params(bound(opts, 12, MAX_FAMILY_GROUND)) {
        let case = || format!("k={k} m={m} s={s}");
        let counts = attempt!(t, case, np_general_counts(k, m, s));
        for alphas in tuples(&PartitionTypeVector::all(k), s) {
            let case = || format!("m={m} alphas={}", show_types(&alphas));
            let closed = attempt!(t, case, count_np_general(&alphas, m));
            let n = counts.get(&alphas).copied().unwrap_or(0);
            if !t.eq(case, closed, big(n)) {
                return t.finish();
            }
        }
    }
    t.finish()
}

pub fn check_cgon_counts(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("anchored c-gon family counts", opts);
    let ground = bound(opts, 12, MAX_FAMILY_GROUND);
    for (k, m, s) in family_params(ground) {
        if (m + 1) * k > MAX_FAMILY_GROUND {
            continue;
        }
        for c in 1..=k {
            let case = || format!("k={k} m={m} s={s} c={c}");
            let counts = attempt!(t, case, np_general_cgon_counts(k, m, s, c));
            for alphas in tuples(&PartitionTypeVector::all(k), s) {
                let case = || format!("m={m} c={c} alphas={}", show_types(&alphas));
                let closed = attempt!(t, case, count_np_general_cgon(&alphas, m, c));
                let n = counts.get(&alphas).copied().unwrap_or(0);
                if !t.eq(case, closed, big(n)) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

/// Partitions of `k` into exactly `p` parts, as multisets.
fn multisets(k: usize, p: usize) -> Vec<CycleSizeMultiset> {
    PartitionTypeVector::all(k)
        .into_iter()
        .filter(|a| a.blocks() == p)
        .map(|a| CycleSizeMultiset::new(a.parts()).expect("positive parts"))
        .collect()
}

pub fn check_labeled_counts(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("labeled count consistency", opts);
    for k in 1..=bound(opts, 7, MAX_PAIR_K) {
        let single = attempt!(t, || format!("k={k}"), nc_type_region_counts(k));
        let types = PartitionTypeVector::all(k);
        for alpha in &types {
            for x in multisets(k, k + 1 - alpha.blocks()) {
                let case = || format!("alpha={alpha} X={x}");
                let labeled = attempt!(t, case, labeled_count_ax(alpha, &x));
                let closed = attempt!(t, case, unlabel_count(&labeled, &x, &[alpha]));
                let n = single.get(&(alpha.clone(), x.clone())).copied().unwrap_or(0);
                if !t.eq(case, closed, big(n)) {
                    return t.finish();
                }
            }
        }
        for alpha in &types {
            for beta in &types {
                let Some(p) = (2 * k + 1).checked_sub(alpha.blocks() + beta.blocks()) else {
                    continue;
                };
                if p == 0 || p > k {
                    continue;
                }
                let case = || format!("alpha={alpha} beta={beta}");
                let regions = attempt!(t, case, pair_region_counts(alpha, beta));
                for x in multisets(k, p) {
                    let case = || format!("alpha={alpha} beta={beta} X={x}");
                    let labeled = attempt!(t, case, labeled_count_ax_pair(alpha, beta, &x));
                    let closed = attempt!(t, case, unlabel_count(&labeled, &x, &[alpha, beta]));
                    let n = regions.get(&x).copied().unwrap_or(0);
                    if !t.eq(case, closed, big(n)) {
                        return t.finish();
                    }
                }
            }
        }
    }
    t.finish()
}

// ------------------------------------------------------------------ freeprob

pub const RANDOM_SEQUENCES: u64 = 50;

pub fn check_free_product_oracle(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("free product vs cumulant oracle", opts);
    let k_max = bound(opts, 7, MAX_ORACLE_K);
    for seed in 0..RANDOM_SEQUENCES {
        let a = random_general(2 * seed, k_max);
        let b = random_general(2 * seed + 1, k_max);
        let case = || format!("a={} b={}", show(a.moments()), show(b.moments()));
        let closed = attempt!(t, case, free_product_moments(&a, &b, k_max));
        let oracle = attempt!(t, case, cumulant_oracle_product_moments(&a, &b, k_max));
        if !seq_eq(&mut t, &case, &closed, &oracle) {
            return t.finish();
        }
    }
    t.finish()
}

pub fn check_op_r_algebra(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("mixing operation commutative and associative", opts);
    let k_comm = bound(opts, 6, 8);
    let k_assoc = bound(opts, 5, 7);
    for seed in 0..20u64 {
        let a = random_even(1000 + 3 * seed, k_comm);
        let b = random_even(1001 + 3 * seed, k_comm);
        let c = random_even(1002 + 3 * seed, k_comm);
        let case = || format!("commutativity a={} b={}", show(a.even_moments()), show(b.even_moments()));
        let ab = attempt!(t, case, op_r(&a, &b, k_comm));
        let ba = attempt!(t, case, op_r(&b, &a, k_comm));
        if !seq_eq(&mut t, &case, ab.even_moments(), ba.even_moments()) {
            return t.finish();
        }
        let case = || {
            format!(
                "associativity a={} b={} c={}",
                show(a.even_moments()),
                show(b.even_moments()),
                show(c.even_moments())
            )
        };
        let left = attempt!(
            t,
            case,
            op_r(&a, &b, k_assoc).and_then(|ab| op_r(&ab, &c, k_assoc))
        );
        let right = attempt!(
            t,
            case,
            op_r(&b, &c, k_assoc).and_then(|bc| op_r(&a, &bc, k_assoc))
        );
        if !seq_eq(&mut t, &case, left.even_moments(), right.even_moments()) {
            return t.finish();
        }
    }
    t.finish()
}

pub fn check_zm_closed_forms(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("Fuss-Catalan closed forms", opts);
    let k_max = bound(opts, 8, 10);
    for seed in 0..5u64 {
        let omega = random_even(2000 + seed, k_max);
        for m in 0..=4 {
            let case = || format!("zm:{m} o {}", show(omega.even_moments()));
            let closed = attempt!(t, case, zm_convolve_closed(m, &omega, k_max));
            let direct = attempt!(t, case, op_r(&zm_moments(m, k_max), &omega, k_max));
            if !seq_eq(&mut t, &case, closed.even_moments(), direct.even_moments()) {
                return t.finish();
            }
        }
    }
    for total in 0..=6 {
        for m in 0..=total {
            let mp = total - m;
            let case = || format!("zm:{m} o zm:{mp}");
            let composed = attempt!(t, case, zm_compose(m, mp, k_max));
            let target = zm_moments(total, k_max);
            if !seq_eq(&mut t, &case, target.even_moments(), composed.even_moments()) {
                return t.finish();
            }
        }
    }
    t.finish()
}

pub fn check_chain_routes(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("chain inductive vs closed", opts);
    let k_max = bound(opts, 6, 8);
    for m in 0..=4usize {
        for s in 0..=m {
            let tail: Vec<MomentSequence> = (0..s as u64)
                .map(|i| random_even(3000 + 10 * m as u64 + i, k_max))
                .collect();
            let chain = ChainSpec::new(m, tail);
            let case = || chain.label();
            let closed = attempt!(t, case, chain_moments_closed(&chain, k_max));
            let inductive = attempt!(t, case, chain_moments_inductive(&chain, k_max));
            if !seq_eq(&mut t, &case, closed.even_moments(), inductive.even_moments()) {
                return t.finish();
            }
        }
    }
    t.finish()
}

pub fn check_b_convolution(opts: &VerifyOptions) -> CheckReport {
    let mut t = Tally::new("chain product-convolution identity", opts);
    let k_max = bound(opts, 5, 7);
    for m in 1..=3usize {
        for s in 0..=m.min(2) {
            let tail: Vec<MomentSequence> = (0..s as u64)
                .map(|i| random_even(4000 + 10 * m as u64 + i, k_max))
                .collect();
            let chain = ChainSpec::new(m, tail);
            for k in 1..=k_max {
                for c in 1..=k.min(3) {
                    let case = || format!("{} k={k} c={c}", chain.label());
                    let (lhs, rhs) = attempt!(t, case, b_convolution(&chain, k, c));
                    if !t.eq(case, rhs, lhs) {
                        return t.finish();
                    }
                }
            }
        }
    }
    t.finish()
}

type CheckFn = fn(&VerifyOptions) -> CheckReport;

pub fn checks(suite: Suite) -> Vec<CheckFn> {
    let identities: [CheckFn; 6] = [
        check_alt_binomial_1,
        check_alt_binomial_2,
        check_catalan_composition,
        check_fuss_catalan_composition,
        check_key_identity,
        check_product_shift,
    ];
    let partitions: [CheckFn; 7] = [
        check_nc_type_counts,
        check_kreweras_duality,
        check_single_catalan_sum,
        check_pair_catalan_sum,
        check_general_counts,
        check_cgon_counts,
        check_labeled_counts,
    ];
    let freeprob: [CheckFn; 5] = [
        check_free_product_oracle,
        check_op_r_algebra,
        check_zm_closed_forms,
        check_chain_routes,
        check_b_convolution,
    ];
    match suite {
        Suite::Identities => identities.to_vec(),
        Suite::Partitions => partitions.to_vec(),
        Suite::Freeprob => freeprob.to_vec(),
        Suite::All => identities
            .into_iter()
            .chain(partitions)
            .chain(freeprob)
            .collect(),
    }
}

/// Runs every check of `suite`, calling `progress` after each one.
pub fn run_suite(
    suite: Suite,
    opts: &VerifyOptions,
    mut progress: impl FnMut(&CheckReport),
) -> Vec<CheckReport> {
    checks(suite)
        .into_iter()
        .map(|check| {
            let report = check(opts);
            progress(&report);
            report
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyOptions {
        VerifyOptions {
            k_max: Some(4),
            inject_fault: false,
        }
    }

    #[test]
    fn small_ranges_pass() {
        for report in run_suite(Suite::All, &small(), |_| {}) {
            assert!(report.passed(), "{report:?}");
            assert!(report.cases > 0, "{}", report.name);
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let opts = VerifyOptions {
            inject_fault: true,
            ..small()
        };
        for report in run_suite(Suite::All, &opts, |_| {}) {
            assert!(!report.passed(), "{}", report.name);
        }
    }

    #[test]
    fn random_rationals_are_bounded_and_seeded() {
        let a = random_rationals(9, 30);
        assert_eq!(a, random_rationals(9, 30));
        let three = BigRational::from_integer(3.into());
        assert!(a.iter().all(|v| v.clone() <= three && v.clone() >= -three.clone()));
    }

    #[test]
    fn suite_names() {
        for s in ["identities", "partitions", "freeprob", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
