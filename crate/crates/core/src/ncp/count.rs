//! Closed-form counts of non-crossing partition families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CycleSizeMultiset, PartitionTypeVector};
use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};

/// `(a - 1)! / (alpha_1! ... alpha_k!)`; not an integer in general.
pub(crate) fn block_multinomial(alpha: &PartitionTypeVector) -> BigRational {
    BigRational::new(factorial(alpha.blocks() - 1), alpha.factorial_product())
}

/// Counts are integers even though their factors need not be.
fn integral(value: BigRational) -> BigInt {
    assert!(value.is_integer(), "count {value} is not an integer");
    value.to_integer()
}

pub(crate) fn common_k(alphas: &[PartitionTypeVector]) -> Result<usize> {
    let k = alphas
        .first()
        .ok_or_else(|| Error::OutOfRange("need at least one type vector".into()))?
        .k();
    if let Some(other) = alphas.iter().find(|a| a.k() != k) {
        return Err(Error::MismatchedK(k, other.k()));
    }
    Ok(k)
}

/// `|NP(alpha)| = binom(k, a-1) (a-1)! / prod alpha_i!`
pub fn count_nc_by_type(alpha: &PartitionTypeVector) -> BigInt {
    count_nc_scaled(alpha, 1).expect("m = 1 is valid")
}

/// Non-crossing partitions of `[mk]` with `alpha_i` blocks of size `m i`:
/// `binom(mk, a-1) (a-1)! / prod alpha_i!`.
pub fn count_nc_scaled(alpha: &PartitionTypeVector, m: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::OutOfRange("scale m must be positive".into()));
    }
    let a = alpha.blocks();
    Ok(integral(
        BigRational::from_integer(binomial(m * alpha.k(), a as i64 - 1)) * block_multinomial(alpha),
    ))
}

/// `|NP_m(alpha_1, ..., alpha_s)|`:
/// `binom((m-s+1)k, mk - sum a_i + 1) k^(s-1) prod (a_i-1)!/prod alpha_ij!`.
pub fn count_np_general(alphas: &[PartitionTypeVector], m: usize) -> Result<BigInt> {
    count_np_general_cgon(alphas, m, 1)
}

/// Same family with one extra `c`-gon anchored at a fixed position:
/// `c binom((m-s+1)k, mk - sum a_i + c) k^(s-1) prod (a_i-1)!/prod alpha_ij!`.
pub fn count_np_general_cgon(alphas: &[PartitionTypeVector], m: usize, c: usize) -> Result<BigInt> {
    let k = common_k(alphas)?;
    let s = alphas.len();
    if s > m {
        return Err(Error::ChainTooLong { s, m });
    }
    if c == 0 || c > k {
        return Err(Error::OutOfRange(format!("c = {c} not in 1..={k}")));
    }
    let a_sum: usize = alphas.iter().map(PartitionTypeVector::blocks).sum();
    let top = (m - s + 1) * k;
    let r = (m * k + c) as i64 - a_sum as i64;
    let mut value = BigRational::from_integer(
        BigInt::from(c) * binomial(top, r) * BigInt::from(k).pow(s as u32 - 1),
    );
    for alpha in alphas {
        value *= block_multinomial(alpha);
    }
    Ok(integral(value))
}

fn check_regions(p: Option<usize>, k: usize, x: &CycleSizeMultiset) -> Result<usize> {
    match p {
        Some(p) if p >= 1 && x.len() == p && x.total() == k => Ok(p),
        Some(p) => Err(Error::InvalidCycleSizes(format!(
            "expected {p} sizes summing to {k}, got {x}"
        ))),
        None => Err(Error::InvalidCycleSizes("too many blocks for any region".into())),
    }
}

/// `|NPL_{A,X}(alpha, X)| = k (p-1)! (a-1)!` with `p = k - a + 1 = |X|`.
pub fn labeled_count_ax(alpha: &PartitionTypeVector, x: &CycleSizeMultiset) -> Result<BigInt> {
    let k = alpha.k();
    let a = alpha.blocks();
    let p = check_regions((k + 1).checked_sub(a), k, x)?;
    Ok(BigInt::from(k) * factorial(p - 1) * factorial(a - 1))
}

/// `k^2 (p-1)! (a-1)! (b-1)!` with `p = 2k - a - b + 1 = |X|`.
pub fn labeled_count_ax_pair(
    alpha: &PartitionTypeVector,
    beta: &PartitionTypeVector,
    x: &CycleSizeMultiset,
) -> Result<BigInt> {
    let k = common_k(&[alpha.clone(), beta.clone()])?;
    let (a, b) = (alpha.blocks(), beta.blocks());
    let p = check_regions((2 * k + 1).checked_sub(a + b), k, x)?;
    Ok(BigInt::from(k * k) * factorial(p - 1) * factorial(a - 1) * factorial(b - 1))
}

/// Unlabels a labeled count: `labeled * perm(X) / (p! prod alpha_i!)`.
pub fn unlabel_count(
    labeled: &BigInt,
    x: &CycleSizeMultiset,
    alphas: &[&PartitionTypeVector],
) -> Result<BigInt> {
    let mut denom = factorial(x.len());
    for a in alphas {
        denom *= a.factorial_product();
    }
    let num = labeled * crate::combinat::multiset_permutations(x.sizes());
    let (q, r) = num.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Mismatch(format!(
            "labeled count {labeled} does not unlabel evenly for X = {x}"
        )));
    }
    Ok(q)
}

/// `prod (x - 1)`-Catalan weight `prod C_{x-1}` of a region multiset.
pub(crate) fn catalan_weight(x: &CycleSizeMultiset) -> BigInt {
    x.sizes()
        .iter()
        .fold(BigInt::one(), |acc, &s| acc * crate::combinat::catalan(s - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{catalan, fuss_catalan};

    fn tv(c: &[usize]) -> PartitionTypeVector {
        PartitionTypeVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn type_counts() {
        assert_eq!(count_nc_by_type(&tv(&[2, 1, 0, 0])), 6.into());
        for k in 1..=8 {
            assert_eq!(count_nc_by_type(&PartitionTypeVector::all_singletons(k)), BigInt::one());
            assert_eq!(count_nc_by_type(&PartitionTypeVector::single_block(k)), BigInt::one());
            let total: BigInt = PartitionTypeVector::all(k).iter().map(count_nc_by_type).sum();
            assert_eq!(total, catalan(k));
        }
    }

    #[test]
    fn scaled_counts() {
        for k in 1..=6 {
            for m in 1..=4 {
                let ones = PartitionTypeVector::all_singletons(k);
                assert_eq!(count_nc_scaled(&ones, m + 1).unwrap(), fuss_catalan(k, m));
            }
        }
        assert!(count_nc_scaled(&tv(&[1]), 0).is_err());
    }

    #[test]
    fn general_counts_reduce() {
        let alpha = tv(&[1, 1, 0]);
        for m in 1..=4 {
            assert_eq!(
                count_np_general(std::slice::from_ref(&alpha), m).unwrap(),
                count_nc_scaled(&alpha, m).unwrap()
            );
        }
        assert!(count_np_general(&[alpha.clone(), alpha.clone()], 1).is_err());
        assert!(count_np_general(&[alpha.clone(), tv(&[2, 0])], 3).is_err());
        let ones = PartitionTypeVector::all_singletons(3);
        assert!(count_np_general_cgon(std::slice::from_ref(&ones), 2, 4).is_err());
        // a-sum too small: binomial vanishes
        let full = PartitionTypeVector::single_block(4);
        assert_eq!(
            count_np_general_cgon(&[full.clone(), full.clone()], 2, 1).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn labeled_examples() {
        let k = 5;
        let ones = PartitionTypeVector::all_singletons(k);
        let x = CycleSizeMultiset::new(vec![k]).unwrap();
        assert_eq!(labeled_count_ax(&ones, &x).unwrap(), factorial(k));
        let full = PartitionTypeVector::single_block(k);
        let x1 = CycleSizeMultiset::new(vec![1; k]).unwrap();
        assert_eq!(labeled_count_ax(&full, &x1).unwrap(), factorial(k));
        let alpha = tv(&[1, 2, 0, 0, 0]);
        let x = CycleSizeMultiset::new(vec![1, 1, 3]).unwrap();
        let labeled = labeled_count_ax(&alpha, &x).unwrap();
        assert_eq!(labeled, 20.into());
        assert_eq!(unlabel_count(&labeled, &x, &[&alpha]).unwrap(), 5.into());
        assert!(labeled_count_ax(&alpha, &CycleSizeMultiset::new(vec![2, 3]).unwrap()).is_err());
    }

    #[test]
    fn labeled_pair_examples() {
        let two = tv(&[2, 0]);
        let x = CycleSizeMultiset::new(vec![2]).unwrap();
        assert_eq!(labeled_count_ax_pair(&two, &two, &x).unwrap(), 4.into());
        let one = tv(&[1]);
        let x1 = CycleSizeMultiset::new(vec![1]).unwrap();
        assert_eq!(labeled_count_ax_pair(&one, &one, &x1).unwrap(), BigInt::one());
        assert!(labeled_count_ax_pair(&two, &two, &x1).is_err());
    }
}
