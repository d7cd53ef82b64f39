//! Exact moment computations.
//!
//! A [`MomentSequence`] lists the even moments `Omega_2, Omega_4, ...` of a
//! symmetric law; a [`GeneralMomentSequence`] lists every moment
//! `phi(a), phi(a^2), ...` of an element of a noncommutative probability
//! space.

mod chain;
mod coefficient;
mod cumulant;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, fuss_catalan};
use crate::error::{Error, Result};
use crate::ncp::PartitionTypeVector;

pub use chain::{
    b_convolution, chain_moments_closed, chain_moments_inductive, op_r, zm_compose,
    zm_convolve_closed, zm_moments, ChainSpec,
};
pub use coefficient::{
    coefficient, free_product_moments, pair_catalan_sum, single_catalan_sum, Coefficient,
};
pub use cumulant::{cumulant_oracle_product_moments, free_cumulants, moments_from_cumulants, MAX_ORACLE_K};

/// Parses `"7"`, `"-3"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = |e: &dyn fmt::Display| Error::Parse(format!("rational literal '{t}': {e}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| bad(&e))?;
            let q: BigInt = q.trim().parse().map_err(|e| bad(&e))?;
            if q.is_zero() {
                return Err(bad(&"zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|e| bad(&e))?)),
    }
}

/// Inverse of [`parse_rational`]: integers print without a denominator.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `prod_i values[i-1]^alpha_i`.
pub(crate) fn monomial(values: &[BigRational], alpha: &PartitionTypeVector) -> BigRational {
    let mut out = BigRational::one();
    for (i, &c) in alpha.counts().iter().enumerate() {
        if c > 0 {
            out *= num_traits::pow(values[i].clone(), c);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MomentSequenceRepr", into = "MomentSequenceRepr")]
pub struct MomentSequence {
    pub label: String,
    even_moments: Vec<BigRational>,
}

/// Moment files may give entries as JSON integers or as `"p/q"` strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn parse(&self) -> Result<BigRational> {
        match self {
            Self::Int(v) => Ok(BigRational::from_integer((*v).into())),
            Self::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MomentSequenceRepr {
    #[serde(default)]
    label: String,
    even_moments: Vec<Entry>,
}

impl TryFrom<MomentSequenceRepr> for MomentSequence {
    type Error = Error;
    fn try_from(r: MomentSequenceRepr) -> Result<Self> {
        let values = r
            .even_moments
            .iter()
            .map(Entry::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(r.label, values))
    }
}

impl From<MomentSequence> for MomentSequenceRepr {
    fn from(m: MomentSequence) -> Self {
        Self {
            label: m.label,
            even_moments: m.even_moments.iter().map(|v| Entry::Text(format_rational(v))).collect(),
        }
    }
}

impl MomentSequence {
    pub fn new(label: impl Into<String>, even_moments: Vec<BigRational>) -> Self {
        Self {
            label: label.into(),
            even_moments,
        }
    }

    pub fn from_integers(label: impl Into<String>, values: &[i64]) -> Self {
        Self::new(
            label,
            values.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        )
    }

    /// All even moments 1: the law of a uniform random sign.
    pub fn rademacher(k_max: usize) -> Self {
        Self::new("rademacher", vec![BigRational::one(); k_max])
    }

    /// Centered Gaussian with variance `sigma2`: `Omega_2i = (2i-1)!! sigma2^i`.
    pub fn gaussian(k_max: usize, sigma2: &BigRational) -> Self {
        let values = (1..=k_max)
            .map(|i| {
                let dfact = factorial(2 * i) / (factorial(i) * BigInt::from(2).pow(i as u32));
                BigRational::from_integer(dfact) * num_traits::pow(sigma2.clone(), i)
            })
            .collect();
        Self::new(format!("gaussian:{}", format_rational(sigma2)), values)
    }

    /// Even moments of a symmetric finite law given as `(value, probability)`.
    pub fn from_atoms(label: impl Into<String>, atoms: &[(BigRational, BigRational)], k_max: usize) -> Self {
        let values = (1..=k_max)
            .map(|i| {
                atoms
                    .iter()
                    .map(|(v, p)| num_traits::pow(v.clone(), 2 * i) * p)
                    .sum()
            })
            .collect();
        Self::new(label, values)
    }

    /// Fuss-Catalan sequence `C(k, m)`, `k = 1..=k_max`.
    pub fn fuss_catalan(m: usize, k_max: usize) -> Self {
        Self::new(
            format!("zm:{m}"),
            (1..=k_max)
                .map(|k| BigRational::from_integer(fuss_catalan(k, m)))
                .collect(),
        )
    }

    pub fn max_k(&self) -> usize {
        self.even_moments.len()
    }

    pub fn even_moments(&self) -> &[BigRational] {
        &self.even_moments
    }

    /// `Omega_{2i}` for `i >= 1`.
    pub fn get(&self, i: usize) -> Option<&BigRational> {
        i.checked_sub(1).and_then(|j| self.even_moments.get(j))
    }

    pub fn require(&self, k: usize) -> Result<()> {
        if self.even_moments.len() < k {
            return Err(Error::InsufficientMoments {
                label: self.label.clone(),
                needed: k,
                available: self.even_moments.len(),
            });
        }
        Ok(())
    }

    pub fn truncated(&self, k: usize) -> Result<Self> {
        self.require(k)?;
        Ok(Self::new(self.label.clone(), self.even_moments[..k].to_vec()))
    }

    pub fn has_unit_variance(&self) -> bool {
        self.get(1).is_some_and(|v| v.is_one())
    }

    /// The squared variable: entry `i` is `Omega_{2i}`. This is the form the
    /// mixing operation acts on.
    pub fn squared(&self) -> GeneralMomentSequence {
        GeneralMomentSequence::new(format!("({})^2", self.label), self.even_moments.clone())
    }

    /// The symmetric law itself: odd moments 0, moment `2i` is `Omega_{2i}`.
    pub fn symmetric(&self) -> GeneralMomentSequence {
        let mut moments = Vec::with_capacity(2 * self.even_moments.len());
        for v in &self.even_moments {
            moments.push(BigRational::zero());
            moments.push(v.clone());
        }
        GeneralMomentSequence::new(self.label.clone(), moments)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.even_moments.iter().map(rational_to_f64).collect()
    }
}

impl fmt::Display for MomentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.even_moments.iter().map(format_rational).collect();
        write!(f, "{}: [{}]", self.label, parts.join(", "))
    }
}

/// Warning text when any input lacks `Omega_2 = 1`.
pub fn variance_warning(inputs: &[&MomentSequence]) -> Option<String> {
    let off: Vec<&str> = inputs
        .iter()
        .filter(|m| !m.has_unit_variance())
        .map(|m| m.label.as_str())
        .collect();
    if off.is_empty() {
        None
    } else {
        Some(format!("second moment differs from 1 for: {}", off.join(", ")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GeneralRepr", into = "GeneralRepr")]
pub struct GeneralMomentSequence {
    pub label: String,
    moments: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct GeneralRepr {
    #[serde(default)]
    label: String,
    moments: Vec<Entry>,
}

impl TryFrom<GeneralRepr> for GeneralMomentSequence {
    type Error = Error;
    fn try_from(r: GeneralRepr) -> Result<Self> {
        let values = r
            .moments
            .iter()
            .map(Entry::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(r.label, values))
    }
}

impl From<GeneralMomentSequence> for GeneralRepr {
    fn from(m: GeneralMomentSequence) -> Self {
        Self {
            label: m.label,
            moments: m.moments.iter().map(|v| Entry::Text(format_rational(v))).collect(),
        }
    }
}

impl GeneralMomentSequence {
    pub fn new(label: impl Into<String>, moments: Vec<BigRational>) -> Self {
        Self {
            label: label.into(),
            moments,
        }
    }

    pub fn from_integers(label: impl Into<String>, values: &[i64]) -> Self {
        Self::new(
            label,
            values.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    pub fn moments(&self) -> &[BigRational] {
        &self.moments
    }

    /// `phi(a^n)` for `n >= 1`; `phi(1) = 1` at `n = 0`.
    pub fn get(&self, n: usize) -> Option<BigRational> {
        if n == 0 {
            Some(BigRational::one())
        } else {
            self.moments.get(n - 1).cloned()
        }
    }

    pub fn require(&self, k: usize) -> Result<()> {
        if self.moments.len() < k {
            return Err(Error::InsufficientMoments {
                label: self.label.clone(),
                needed: k,
                available: self.moments.len(),
            });
        }
        Ok(())
    }
}
