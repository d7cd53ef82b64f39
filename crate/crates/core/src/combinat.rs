//! Exact combinatorial kernel: factorials, binomials, Catalan and Fuss–Catalan
//! numbers, and the standalone binomial/Catalan identities that the moment
//! formulas rest on.
//!
//! Every identity verifier returns both sides of the identity evaluated exactly,
//! so callers can report the full values when a check fails.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default number of factorials kept in the shared table.
pub const DEFAULT_FACTORIAL_CAP: usize = 512;

/// Memoized factorials `0!..=cap!`. Requests beyond the cap are computed on
/// demand from the last stored entry.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    values: Vec<BigInt>,
}

impl FactorialTable {
    pub fn with_cap(cap: usize) -> Self {
        let mut values = Vec::with_capacity(cap + 1);
        let mut acc = BigInt::one();
        values.push(acc.clone());
        for i in 1..=cap {
            acc *= i;
            values.push(acc.clone());
        }
        Self { values }
    }

    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> BigInt {
        if let Some(v) = self.values.get(n) {
            return v.clone();
        }
        let mut acc = self.values[self.cap()].clone();
        for i in self.cap() + 1..=n {
            acc *= i;
        }
        acc
    }
}

fn shared_factorials() -> &'static FactorialTable {
    static TABLE: OnceLock<FactorialTable> = OnceLock::new();
    TABLE.get_or_init(|| FactorialTable::with_cap(DEFAULT_FACTORIAL_CAP))
}

/// `n!` from the shared table.
pub fn factorial(n: usize) -> BigInt {
    shared_factorials().get(n)
}

/// `n` choose `r`, with the convention that out-of-range `r` gives 0.
pub fn binomial(n: usize, r: i64) -> BigInt {
    if r < 0 || r as u64 > n as u64 {
        return BigInt::zero();
    }
    let r = r as usize;
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient whose top argument may be negative; returns 0 there.
/// Paper-style sums routinely produce such indices at their boundaries.
pub(crate) fn binomial_signed(n: i64, r: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n as usize, r)
    }
}

/// `(-1)^exponent` as a small integer.
pub fn alternating_sign(exponent: i64) -> i32 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n as i64) / (n + 1)
}

/// Fuss–Catalan number `C(k, m) = binom((m+1)k, k) / (mk + 1)`.
pub fn fuss_catalan(k: usize, m: usize) -> BigInt {
    binomial((m + 1) * k, k as i64) / (m * k + 1)
}

/// Number of distinct orderings of a multiset: `p! / prod(multiplicity!)`.
pub fn multiset_permutations(sizes: &[usize]) -> BigInt {
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    let mut denom = BigInt::one();
    let mut run = 0usize;
    for (i, v) in sorted.iter().enumerate() {
        if i > 0 && sorted[i - 1] == *v {
            run += 1;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    denom *= factorial(run);
    factorial(sorted.len()) / denom
}

fn signed(sign: i32, v: BigInt) -> BigInt {
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// `sum_{i=0}^{m-k} (-1)^{i+m-k} binom(m-i, k) binom(n, i)` against
/// `binom(n-k-1, m-k)`. Requires `k <= m < n`.
pub fn verify_alt_binomial_1(n: usize, m: usize, k: usize) -> Result<(BigInt, BigInt)> {
    if !(k <= m && m < n) {
        return Err(Error::OutOfRange(format!(
            "alternating binomial sum needs k <= m < n, got n={n}, m={m}, k={k}"
        )));
    }
    let lhs = (0..=m - k)
        .map(|i| {
            let term = binomial(m - i, k as i64) * binomial(n, i as i64);
            signed(alternating_sign((i + m - k) as i64), term)
        })
        .sum();
    let rhs = binomial(n - k - 1, (m - k) as i64);
    Ok((lhs, rhs))
}

/// `sum_{i=0}^{n} (-1)^{n-i} binom(m+i, k) binom(n, i)` against `binom(m, k-n)`.
pub fn verify_alt_binomial_2(n: usize, m: usize, k: usize) -> (BigInt, BigInt) {
    let lhs = (0..=n)
        .map(|i| {
            let term = binomial(m + i, k as i64) * binomial(n, i as i64);
            signed(alternating_sign((n - i) as i64), term)
        })
        .sum();
    let rhs = binomial(m, k as i64 - n as i64);
    (lhs, rhs)
}

/// Closed form of `sum over (i_1..i_k) >= 0 with sum n of C_{i_1}...C_{i_k}`,
/// namely `k (2n+k-1)! / (n! (n+k)!)`.
pub fn catalan_composition_sum(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::OutOfRange("composition count k must be positive".into()));
    }
    Ok(BigInt::from(k) * factorial(2 * n + k - 1) / (factorial(n) * factorial(n + k)))
}

/// Closed form of `sum over (i_1..i_t) >= 1 with sum k of C(i_1,m)...C(i_t,m)`,
/// namely `(t/k) binom((m+1)k, k-t)`.
pub fn fuss_catalan_composition_sum(k: usize, m: usize, t: usize) -> Result<BigRational> {
    if t == 0 || k == 0 || t > k {
        return Err(Error::OutOfRange(format!(
            "Fuss–Catalan composition sum needs 1 <= t <= k, got k={k}, t={t}"
        )));
    }
    Ok(BigRational::new(
        BigInt::from(t) * binomial((m + 1) * k, (k - t) as i64),
        BigInt::from(k),
    ))
}

/// The alternating identity that carries the induction on the number of
/// mixed-in distributions:
///
/// `sum_{c=1}^{k} (-1)^{c+b-k-1} binom(b+c-2, k-1) binom((m-s+1)k, A-(s-1)k-c)`
/// `= binom((m-s)k, mk-(A+b)+1)` with `A = a_1 + ... + a_s`.
pub fn verify_key_identity(
    m: usize,
    s: usize,
    k: usize,
    a_sum: usize,
    b: usize,
) -> Result<(BigInt, BigInt)> {
    if s > m || b == 0 || b > k {
        return Err(Error::OutOfRange(format!(
            "key identity needs m >= s and 1 <= b <= k, got m={m}, s={s}, k={k}, b={b}"
        )));
    }
    let (m_i, s_i, k_i, a_i, b_i) = (m as i64, s as i64, k as i64, a_sum as i64, b as i64);
    let top = ((m - s + 1) * k) as i64;
    let lhs = (1..=k_i)
        .map(|c| {
            let term = binomial_signed(b_i + c - 2, k_i - 1)
                * binomial_signed(top, a_i - (s_i - 1) * k_i - c);
            signed(alternating_sign(c + b_i - k_i - 1), term)
        })
        .sum();
    let rhs = binomial_signed((m_i - s_i) * k_i, m_i * k_i - (a_i + b_i) + 1);
    Ok((lhs, rhs))
}

/// Falling factorial `(k-p)(k-p-1)...(k-p-s+1)` where `k = sum(sizes)` and
/// `p = |sizes|`. This is the closed form of the tuple sum computed by
/// [`product_shift_sum_brute`].
pub fn product_shift_sum(sizes: &[usize], s: usize) -> BigInt {
    let k: usize = sizes.iter().sum();
    let base = k as i64 - sizes.len() as i64;
    (0..s as i64).map(|j| BigInt::from(base - j)).product()
}

/// Direct evaluation of `sum over (i_1..i_s) in [p]^s of prod_j (x_{i_j} - n_j)`
/// where `n_j` counts the positions `l <= j` with `i_l = i_j`.
pub fn product_shift_sum_brute(sizes: &[usize], s: usize) -> BigInt {
    fn walk(sizes: &[usize], remaining: usize, used: &mut [usize]) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for i in 0..sizes.len() {
            used[i] += 1;
            let factor = sizes[i] as i64 - used[i] as i64;
            if factor != 0 {
                total += walk(sizes, remaining - 1, used) * factor;
            }
            used[i] -= 1;
        }
        total
    }
    let mut used = vec![0usize; sizes.len()];
    walk(sizes, s, &mut used)
}

/// Calls `visit` on every composition of `total` into `parts` integers each at
/// least `min_part`, in lexicographic order.
pub fn for_each_composition(
    total: usize,
    parts: usize,
    min_part: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn rec(
        remaining: usize,
        parts_left: usize,
        min_part: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if parts_left == 0 {
            if remaining == 0 {
                visit(cur);
            }
            return;
        }
        let reserve = min_part * (parts_left - 1);
        if remaining < reserve + min_part {
            return;
        }
        for v in min_part..=remaining - reserve {
            cur.push(v);
            rec(remaining - v, parts_left - 1, min_part, cur, visit);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(parts);
    rec(total, parts, min_part, &mut cur, visit);
}

/// Brute-force `sum over compositions of n into k nonnegative parts of prod C_{i_j}`.
pub fn catalan_composition_sum_brute(n: usize, k: usize) -> BigInt {
    let cats: Vec<BigInt> = (0..=n).map(catalan).collect();
    let mut total = BigInt::zero();
    for_each_composition(n, k, 0, &mut |parts| {
        total += parts.iter().map(|&i| cats[i].clone()).product::<BigInt>();
    });
    total
}

/// Brute-force `sum over compositions of k into t positive parts of prod C(i_j, m)`.
pub fn fuss_catalan_composition_sum_brute(k: usize, m: usize, t: usize) -> BigInt {
    let fc: Vec<BigInt> = (0..=k).map(|i| fuss_catalan(i, m)).collect();
    let mut total = BigInt::zero();
    for_each_composition(k, t, 1, &mut |parts| {
        total += parts.iter().map(|&i| fc[i].clone()).product::<BigInt>();
    });
    total
}
