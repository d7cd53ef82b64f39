//! The mixing operation on even-moment sequences and chains headed by the
//! Fuss-Catalan sequence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::coefficient::mixed_moment;
use super::{monomial, MomentSequence};
use crate::combinat::{binomial, for_each_composition};
use crate::error::{Error, Result};
use crate::ncp::count::block_multinomial;
use crate::ncp::PartitionTypeVector;

/// `(Omega o Omega')_{2k} = sum_{alpha, beta in P_k} C(alpha, beta) Omega^alpha Omega'^beta`.
///
/// This is the product formula applied to the squared variables, whose
/// `i`-th moment is `Omega_{2i}`.
pub fn op_r(omega: &MomentSequence, omega_prime: &MomentSequence, k_max: usize) -> Result<MomentSequence> {
    omega.require(k_max)?;
    omega_prime.require(k_max)?;
    let values = (1..=k_max)
        .map(|k| mixed_moment(omega.even_moments(), omega_prime.even_moments(), k))
        .collect::<Result<Vec<_>>>()?;
    Ok(MomentSequence::new(
        format!("{} o {}", omega.label, omega_prime.label),
        values,
    ))
}

/// Fuss-Catalan moments `C(k, m)`; `m = 0` gives all ones.
pub fn zm_moments(m: usize, k_max: usize) -> MomentSequence {
    MomentSequence::fuss_catalan(m, k_max)
}

/// `sum_{alpha in P_k} binom(mk, a-1) (a-1)!/prod alpha_i! Omega^alpha`.
pub fn zm_convolve_closed(m: usize, omega: &MomentSequence, k_max: usize) -> Result<MomentSequence> {
    omega.require(k_max)?;
    let values = (1..=k_max)
        .map(|k| {
            PartitionTypeVector::all(k)
                .iter()
                .map(|alpha| {
                    BigRational::from_integer(binomial(m * k, alpha.blocks() as i64 - 1))
                        * block_multinomial(alpha)
                        * monomial(omega.even_moments(), alpha)
                })
                .sum()
        })
        .collect();
    Ok(MomentSequence::new(format!("zm:{m} o {}", omega.label), values))
}

/// Applies the single-step closed form to the `m'` Fuss-Catalan sequence and
/// checks the result against the `m + m'` sequence.
pub fn zm_compose(m: usize, m_prime: usize, k_max: usize) -> Result<MomentSequence> {
    let composed = zm_convolve_closed(m, &zm_moments(m_prime, k_max), k_max)?;
    let target = zm_moments(m + m_prime, k_max);
    if let Some(k) = (0..k_max).find(|&i| composed.even_moments()[i] != target.even_moments()[i]) {
        return Err(Error::Mismatch(format!(
            "zm:{m} o zm:{m_prime} at k = {}: {} vs {}",
            k + 1,
            composed.even_moments()[k],
            target.even_moments()[k]
        )));
    }
    Ok(composed)
}

/// `Omega_Z(m) o Omega^(1) o ... o Omega^(s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub m: usize,
    pub tail: Vec<MomentSequence>,
}

impl ChainSpec {
    pub fn new(m: usize, tail: Vec<MomentSequence>) -> Self {
        Self { m, tail }
    }

    pub fn s(&self) -> usize {
        self.tail.len()
    }

    pub fn label(&self) -> String {
        let mut parts = vec![format!("zm:{}", self.m)];
        parts.extend(self.tail.iter().map(|t| t.label.clone()));
        parts.join(" o ")
    }

    fn require(&self, k_max: usize) -> Result<()> {
        self.tail.iter().try_for_each(|t| t.require(k_max))
    }

    /// For each tail entry, `w[a] = sum_{alpha in P_k, |alpha| = a} (a-1)!/prod alpha! Omega^alpha`,
    /// then the convolution over `a_1 + ... + a_s`.
    fn block_sum_weights(&self, k: usize) -> Vec<BigRational> {
        let types = PartitionTypeVector::all(k);
        let mut total = vec![BigRational::zero(); self.s() * k + 1];
        total[0] = BigRational::one();
        for omega in &self.tail {
            let mut w = vec![BigRational::zero(); k + 1];
            for alpha in &types {
                w[alpha.blocks()] += block_multinomial(alpha) * monomial(omega.even_moments(), alpha);
            }
            let mut next = vec![BigRational::zero(); total.len()];
            for (i, t) in total.iter().enumerate().filter(|(_, t)| !t.is_zero()) {
                for (a, wa) in w.iter().enumerate().skip(1) {
                    if i + a < next.len() {
                        next[i + a] += t * wa;
                    }
                }
            }
            total = next;
        }
        total
    }

    /// `c sum binom((m-s+1)k, mk - sum a_i + c) k^(s-1) prod (a_i-1)!/prod alpha_ij! Omega-monomials`;
    /// `c = 1` is the chain moment itself.
    fn closed_entry(&self, k: usize, c: usize) -> BigRational {
        let (m, s) = (self.m, self.s());
        let top = (m - s + 1) * k;
        let scale = if s == 0 {
            BigRational::new(BigInt::one(), BigInt::from(k))
        } else {
            BigRational::from_integer(BigInt::from(k).pow(s as u32 - 1))
        };
        let weights = self.block_sum_weights(k);
        let mut total = BigRational::zero();
        for (a_sum, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let r = (m * k + c) as i64 - a_sum as i64;
            total += BigRational::from_integer(binomial(top, r)) * w;
        }
        total * scale * BigRational::from_integer(c.into())
    }
}

/// Entry `k` is `A_m^(s)(k)`: start from `C(k, m)` and apply [`op_r`] once per
/// tail sequence.
pub fn chain_moments_inductive(chain: &ChainSpec, k_max: usize) -> Result<MomentSequence> {
    chain.require(k_max)?;
    let mut acc = zm_moments(chain.m, k_max);
    for omega in &chain.tail {
        acc = op_r(&acc, omega, k_max)?;
    }
    acc.label = chain.label();
    Ok(acc)
}

/// Entry `k` is `sum C_m(alpha_1, ..., alpha_s) prod Omega^(i)^alpha_i`; needs `s <= m`.
pub fn chain_moments_closed(chain: &ChainSpec, k_max: usize) -> Result<MomentSequence> {
    if chain.s() > chain.m {
        return Err(Error::ChainTooLong {
            s: chain.s(),
            m: chain.m,
        });
    }
    chain.require(k_max)?;
    let values = (1..=k_max).map(|k| chain.closed_entry(k, 1)).collect();
    Ok(MomentSequence::new(chain.label(), values))
}

/// Both sides of the product-convolution identity for closed chain moments `B`:
/// `sum_{k_1 + ... + k_c = k} prod B(k_j)` against the anchored `c`-gon sum.
pub fn b_convolution(chain: &ChainSpec, k: usize, c: usize) -> Result<(BigRational, BigRational)> {
    if c == 0 || c > k {
        return Err(Error::OutOfRange(format!("c = {c} not in 1..={k}")));
    }
    let closed = chain_moments_closed(chain, k)?;
    let b = closed.even_moments();
    let mut lhs = BigRational::zero();
    for_each_composition(k, c, 1, &mut |parts| {
        lhs += parts
            .iter()
            .fold(BigRational::one(), |acc, &p| acc * &b[p - 1]);
    });
    Ok((lhs, chain.closed_entry(k, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::fuss_catalan;

    fn ints(label: &str, v: &[i64]) -> MomentSequence {
        MomentSequence::from_integers(label, v)
    }

    #[test]
    fn rademacher_is_absorbing_pair() {
        let r = MomentSequence::rademacher(6);
        assert_eq!(op_r(&r, &r, 6).unwrap().even_moments(), r.even_moments());
    }

    #[test]
    fn fourth_moment_rule() {
        let a = ints("a", &[1, 5]);
        let b = ints("b", &[1, 3]);
        assert_eq!(op_r(&a, &b, 2).unwrap().to_f64(), vec![1.0, 7.0]);
    }

    #[test]
    fn zm_examples() {
        assert_eq!(zm_moments(0, 4).to_f64(), vec![1.0; 4]);
        assert_eq!(zm_moments(2, 2).to_f64()[1], 3.0);
        let omega = ints("w", &[1, 4, 20, 7]);
        assert_eq!(
            zm_convolve_closed(0, &omega, 4).unwrap().even_moments(),
            omega.even_moments()
        );
        for m in 0..4 {
            let r = zm_convolve_closed(m, &MomentSequence::rademacher(6), 6).unwrap();
            let expect: Vec<f64> = (1..=6)
                .map(|k| fuss_catalan(k, m).to_string().parse().unwrap())
                .collect();
            assert_eq!(r.to_f64(), expect);
        }
        assert_eq!(zm_compose(1, 1, 6).unwrap().even_moments(), zm_moments(2, 6).even_moments());
        assert_eq!(zm_compose(2, 0, 6).unwrap().even_moments(), zm_moments(2, 6).even_moments());
        assert_eq!(zm_compose(2, 3, 8).unwrap().even_moments(), zm_moments(5, 8).even_moments());
    }

    #[test]
    fn chain_routes_agree() {
        let t1 = ints("t1", &[1, 2, -3, 11, 4, 0]);
        let t2 = ints("t2", &[2, 7, 1, -5, 13, 3]);
        let t3 = ints("t3", &[1, 1, 4, 2, -2, 9]);
        for m in 0..=4 {
            let tails = [t1.clone(), t2.clone(), t3.clone()];
            for s in 0..=m.min(3) {
                let chain = ChainSpec::new(m, tails[..s].to_vec());
                assert_eq!(
                    chain_moments_inductive(&chain, 6).unwrap().even_moments(),
                    chain_moments_closed(&chain, 6).unwrap().even_moments(),
                    "m={m} s={s}"
                );
            }
        }
        let long = ChainSpec::new(1, vec![t1.clone(), t2.clone()]);
        assert!(matches!(chain_moments_closed(&long, 3), Err(Error::ChainTooLong { .. })));
        assert!(chain_moments_inductive(&long, 3).is_ok());
    }

    #[test]
    fn chain_base_cases() {
        let t = ints("t", &[1, 3, 15, 105]);
        let single = ChainSpec::new(3, vec![t.clone()]);
        assert_eq!(
            chain_moments_closed(&single, 4).unwrap().even_moments(),
            zm_convolve_closed(3, &t, 4).unwrap().even_moments()
        );
        let empty = ChainSpec::new(3, vec![]);
        assert_eq!(
            chain_moments_closed(&empty, 5).unwrap().even_moments(),
            zm_moments(3, 5).even_moments()
        );
    }

    #[test]
    fn b_convolution_small() {
        let t = ints("t", &[1, 2, 7, 3, 5]);
        for m in 1..=3 {
            for s in 0..=m.min(2) {
                let chain = ChainSpec::new(m, vec![t.clone(); s]);
                for k in 1..=5 {
                    for c in 1..=k.min(3) {
                        let (lhs, rhs) = b_convolution(&chain, k, c).unwrap();
                        assert_eq!(lhs, rhs, "m={m} s={s} k={k} c={c}");
                    }
                }
            }
        }
    }
}
