//! Free cumulants and the Kreweras expansion of alternating products, used as
//! an oracle independent of the coefficient formula.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GeneralMomentSequence;
use crate::error::{Error, Result};
use crate::ncp::{for_each_nc, kreweras_complement, SetPartition};

pub const MAX_ORACLE_K: usize = 9;

fn block_product(values: &[BigRational], p: &SetPartition) -> BigRational {
    p.blocks()
        .iter()
        .fold(BigRational::one(), |acc, b| acc * &values[b.len() - 1])
}

fn check_k(k_max: usize) -> Result<()> {
    if k_max > MAX_ORACLE_K {
        return Err(Error::SizeGuard(format!(
            "cumulant oracle limited to k <= {MAX_ORACLE_K}, got {k_max}"
        )));
    }
    Ok(())
}

/// `kappa_1..kappa_n` from `m_1..m_n` by solving
/// `m_n = sum_{pi in NC(n)} prod_{B in pi} kappa_|B|` one order at a time.
pub fn free_cumulants(a: &GeneralMomentSequence, n_max: usize) -> Result<Vec<BigRational>> {
    check_k(n_max)?;
    a.require(n_max)?;
    let mut kappa: Vec<BigRational> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        // kappa_n itself enters only through the one-block partition
        kappa.push(BigRational::zero());
        let mut rest = BigRational::zero();
        for_each_nc(n, |p| {
            if p.num_blocks() > 1 {
                rest += block_product(&kappa, p);
            }
        })?;
        kappa[n - 1] = a.moments()[n - 1].clone() - rest;
    }
    Ok(kappa)
}

/// `m_1..m_n` from free cumulants.
pub fn moments_from_cumulants(kappa: &[BigRational]) -> Result<Vec<BigRational>> {
    check_k(kappa.len())?;
    (1..=kappa.len())
        .map(|n| {
            let mut total = BigRational::zero();
            for_each_nc(n, |p| total += block_product(kappa, p))?;
            Ok(total)
        })
        .collect()
}

/// `phi((ab)^k) = sum_{pi in NC(k)} kappa_pi[a] phi_{K(pi)}[b]`.
pub fn cumulant_oracle_product_moments(
    a: &GeneralMomentSequence,
    b: &GeneralMomentSequence,
    k_max: usize,
) -> Result<Vec<BigRational>> {
    check_k(k_max)?;
    b.require(k_max)?;
    let kappa = free_cumulants(a, k_max)?;
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut total = BigRational::zero();
        let mut failure = None;
        for_each_nc(k, |pi| {
            let weight = block_product(&kappa, pi);
            if weight.is_zero() {
                return;
            }
            match kreweras_complement(pi) {
                Ok(kp) => total += weight * block_product(b.moments(), &kp),
                Err(e) => failure = Some(e),
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        out.push(total);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::catalan;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn semicircle_has_only_variance() {
        let moments: Vec<BigRational> = (1..=8)
            .map(|n| {
                if n % 2 == 1 {
                    BigRational::zero()
                } else {
                    BigRational::from_integer(catalan(n / 2))
                }
            })
            .collect();
        let s = GeneralMomentSequence::new("semicircle", moments.clone());
        let kappa = free_cumulants(&s, 8).unwrap();
        assert_eq!(kappa, ints(&[0, 1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(moments_from_cumulants(&kappa).unwrap(), moments);
    }

    #[test]
    fn free_poisson_cumulants_are_one() {
        // Marchenko-Pastur with rate 1: moments are Catalan numbers
        let moments: Vec<BigRational> = (1..=7).map(|n| BigRational::from_integer(catalan(n))).collect();
        let mp = GeneralMomentSequence::new("mp", moments);
        assert_eq!(free_cumulants(&mp, 7).unwrap(), ints(&[1; 7]));
    }

    #[test]
    fn unit_element_returns_other_moments() {
        let one = GeneralMomentSequence::from_integers("1", &[1; 6]);
        let b = GeneralMomentSequence::from_integers("b", &[2, -1, 5, 0, 3, 9]);
        assert_eq!(cumulant_oracle_product_moments(&one, &b, 6).unwrap(), b.moments().to_vec());
    }

    #[test]
    fn cap() {
        let one = GeneralMomentSequence::from_integers("1", &[1; 10]);
        assert!(free_cumulants(&one, 10).is_err());
    }
}
