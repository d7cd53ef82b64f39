use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{monomial, GeneralMomentSequence};
use crate::combinat::{alternating_sign, binomial};
use crate::error::{Error, Result};
use crate::ncp::count::block_multinomial;
use crate::ncp::PartitionTypeVector;

/// `C(alpha, beta)`, the weight of `phi_a^alpha phi_b^beta` in `phi((ab)^k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coefficient {
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&super::format_rational(r))
}

fn same_k(alpha: &PartitionTypeVector, beta: &PartitionTypeVector) -> Result<usize> {
    if alpha.k() != beta.k() {
        return Err(Error::MismatchedK(alpha.k(), beta.k()));
    }
    Ok(alpha.k())
}

/// `k binom(a+b-2, k-1) (a-1)!/prod alpha_i! (b-1)!/prod beta_i!`
fn unsigned_pair_weight(alpha: &PartitionTypeVector, beta: &PartitionTypeVector, k: usize) -> BigRational {
    let (a, b) = (alpha.blocks(), beta.blocks());
    BigRational::from_integer(BigInt::from(k) * binomial(a + b - 2, k as i64 - 1))
        * block_multinomial(alpha)
        * block_multinomial(beta)
}

/// `(-1)^(a+b-k-1) k binom(a+b-2, k-1) (a-1)!/prod alpha_i! (b-1)!/prod beta_i!`;
/// zero whenever `a + b <= k`.
pub fn coefficient(alpha: &PartitionTypeVector, beta: &PartitionTypeVector) -> Result<Coefficient> {
    let k = same_k(alpha, beta)?;
    let exp = (alpha.blocks() + beta.blocks()) as i64 - k as i64 - 1;
    let value = unsigned_pair_weight(alpha, beta, k) * BigRational::from_integer(alternating_sign(exp).into());
    Ok(Coefficient { value })
}

/// Closed form of `sum_{(pi, sigma) in NP(alpha, beta)} prod_x C_{x-1}`.
pub fn pair_catalan_sum(alpha: &PartitionTypeVector, beta: &PartitionTypeVector) -> Result<BigRational> {
    let k = same_k(alpha, beta)?;
    Ok(unsigned_pair_weight(alpha, beta, k))
}

/// Closed form of `sum_{pi in NP(alpha)} prod_{x in S_pi} C_{x-1}`:
/// `binom(a+k-2, k-1) (a-1)!/prod alpha_i!`.
pub fn single_catalan_sum(alpha: &PartitionTypeVector) -> BigRational {
    let (k, a) = (alpha.k(), alpha.blocks());
    BigRational::from_integer(binomial(a + k - 2, k as i64 - 1)) * block_multinomial(alpha)
}

/// `phi((ab)^k) = sum_{alpha, beta in P_k} C(alpha, beta) phi_a^alpha phi_b^beta`
/// for `k = 1..=k_max`.
pub fn free_product_moments(
    a: &GeneralMomentSequence,
    b: &GeneralMomentSequence,
    k_max: usize,
) -> Result<Vec<BigRational>> {
    a.require(k_max)?;
    b.require(k_max)?;
    (1..=k_max)
        .map(|k| mixed_moment(a.moments(), b.moments(), k))
        .collect()
}

pub(crate) fn mixed_moment(a: &[BigRational], b: &[BigRational], k: usize) -> Result<BigRational> {
    let types = PartitionTypeVector::all(k);
    let mono_b: Vec<BigRational> = types.iter().map(|beta| monomial(b, beta)).collect();
    let mut total = BigRational::zero();
    for alpha in &types {
        let mono_a = monomial(a, alpha);
        if mono_a.is_zero() {
            continue;
        }
        for (beta, mb) in types.iter().zip(&mono_b) {
            if alpha.blocks() + beta.blocks() <= k || mb.is_zero() {
                continue;
            }
            total += coefficient(alpha, beta)?.value * &mono_a * mb;
        }
    }
    Ok(total)
}
