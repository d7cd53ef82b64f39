//! Samplable laws and the text grammar used to name them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::freeprob::{format_rational, parse_rational, rational_to_f64, MomentSequence};

/// Accepts integer, `p/q` or plain decimal (`1.25`) literals exactly.
pub fn parse_exact_number(text: &str) -> Result<BigRational> {
    let t = text.trim();
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let numer: BigInt = digits
            .parse()
            .map_err(|e| Error::Parse(format!("number '{t}': {e}")))?;
        let denom = BigInt::from(10).pow(frac.len() as u32);
        let r = BigRational::new(numer, denom);
        Ok(if neg { -r } else { r })
    } else {
        parse_rational(t)
    }
}

/// A law for diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistributionSpec {
    Rademacher,
    Gaussian { sigma: BigRational },
    Atoms(Vec<(BigRational, BigRational)>),
}

impl DistributionSpec {
    pub fn gaussian(sigma: BigRational) -> Result<Self> {
        if !sigma.is_positive() {
            return Err(Error::UnknownDistribution(format!(
                "gaussian:{}",
                format_rational(&sigma)
            )));
        }
        Ok(Self::Gaussian { sigma })
    }

    /// Finite law; probabilities must be positive and sum to exactly 1.
    pub fn atoms(atoms: Vec<(BigRational, BigRational)>) -> Result<Self> {
        if atoms.is_empty() || atoms.iter().any(|(_, p)| !p.is_positive()) {
            return Err(Error::UnknownDistribution(
                "atoms need positive probabilities".into(),
            ));
        }
        let total: BigRational = atoms.iter().map(|(_, p)| p.clone()).sum();
        if !total.is_one() {
            return Err(Error::UnknownDistribution(format!(
                "atom probabilities sum to {}",
                format_rational(&total)
            )));
        }
        Ok(Self::Atoms(atoms))
    }

    /// Odd moments vanish.
    pub fn is_symmetric(&self) -> bool {
        match self {
            Self::Rademacher | Self::Gaussian { .. } => true,
            Self::Atoms(atoms) => {
                let mass = |v: &BigRational| -> BigRational {
                    atoms.iter().filter(|(x, _)| x == v).map(|(_, p)| p.clone()).sum()
                };
                atoms.iter().all(|(v, _)| mass(v) == mass(&-v.clone()))
            }
        }
    }

    pub fn even_moments(&self, k_max: usize) -> MomentSequence {
        let label = self.to_string();
        match self {
            Self::Rademacher => MomentSequence::new(label, vec![BigRational::one(); k_max]),
            Self::Gaussian { sigma } => {
                let mut m = MomentSequence::gaussian(k_max, &(sigma * sigma));
                m.label = label;
                m
            }
            Self::Atoms(atoms) => MomentSequence::from_atoms(label, atoms, k_max),
        }
    }

    pub fn sampler(&self) -> Sampler {
        match self {
            Self::Rademacher => Sampler::Sign,
            Self::Gaussian { sigma } => Sampler::Normal(rational_to_f64(sigma)),
            Self::Atoms(atoms) => Sampler::Table {
                values: atoms.iter().map(|(v, _)| rational_to_f64(v)).collect(),
                index: WeightedIndex::new(atoms.iter().map(|(_, p)| rational_to_f64(p)))
                    .expect("validated probabilities"),
            },
        }
    }
}

/// Float sampler built once per law.
#[derive(Debug, Clone)]
pub enum Sampler {
    Sign,
    Normal(f64),
    Table {
        values: Vec<f64>,
        index: WeightedIndex<f64>,
    },
}

impl Sampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Self::Sign => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            Self::Normal(sigma) => {
                let z: f64 = rng.sample(StandardNormal);
                sigma * z
            }
            Self::Table { values, index } => values[index.sample(rng)],
        }
    }
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rademacher => write!(f, "rademacher"),
            Self::Gaussian { sigma } => write!(f, "gaussian:{}", format_rational(sigma)),
            Self::Atoms(atoms) => {
                let parts: Vec<String> = atoms
                    .iter()
                    .map(|(v, p)| format!("{}@{}", format_rational(v), format_rational(p)))
                    .collect();
                write!(f, "atoms:{}", parts.join(";"))
            }
        }
    }
}

impl FromStr for DistributionSpec {
    type Err = Error;

    /// `rademacher`, `gaussian`, `gaussian:SIGMA`, or `atoms:V@P;V@P;...`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let unknown = || Error::UnknownDistribution(t.to_string());
        match t.split_once(':') {
            None if t == "rademacher" => Ok(Self::Rademacher),
            None if t == "gaussian" => Ok(Self::Gaussian {
                sigma: BigRational::one(),
            }),
            Some(("gaussian", sigma)) => {
                Self::gaussian(parse_exact_number(sigma).map_err(|_| unknown())?)
            }
            Some(("atoms", body)) => {
                let atoms = body
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|pair| {
                        let (v, p) = pair.split_once('@').ok_or_else(unknown)?;
                        Ok((parse_exact_number(v)?, parse_exact_number(p)?))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map_err(|_| unknown())?;
                Self::atoms(atoms)
            }
            _ => Err(unknown()),
        }
    }
}

impl Serialize for DistributionSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DistributionSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// First factor of a chain: a random diagonal or the `m`-fold product proxy
/// for the Fuss-Catalan law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainHead {
    Diagonal(DistributionSpec),
    Product { m: usize },
}

impl ChainHead {
    pub fn even_moments(&self, k_max: usize) -> MomentSequence {
        match self {
            Self::Diagonal(d) => d.even_moments(k_max),
            Self::Product { m } => MomentSequence::fuss_catalan(*m, k_max),
        }
    }
}

impl fmt::Display for ChainHead {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Diagonal(d) => d.fmt(f),
            Self::Product { m } => write!(f, "zm:{m}"),
        }
    }
}

impl FromStr for ChainHead {
    type Err = Error;

    /// `zm:0` is the all-ones law, realised by a Rademacher diagonal.
    fn from_str(text: &str) -> Result<Self> {
        match text.trim().split_once(':') {
            Some(("zm", m)) => {
                let m: usize = m
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnknownDistribution(text.to_string()))?;
                Ok(if m == 0 {
                    Self::Diagonal(DistributionSpec::Rademacher)
                } else {
                    Self::Product { m }
                })
            }
            _ => Ok(Self::Diagonal(text.parse()?)),
        }
    }
}

impl Serialize for ChainHead {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ChainHead {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn grammar_round_trip() {
        for text in ["rademacher", "gaussian:1", "gaussian:3/2", "atoms:-1@1/2;1@1/2"] {
            let d: DistributionSpec = text.parse().unwrap();
            assert_eq!(d.to_string(), text);
        }
        assert_eq!(
            "gaussian".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::Gaussian { sigma: q(1, 1) }
        );
        assert_eq!(
            "gaussian:0.5".parse::<DistributionSpec>().unwrap(),
            DistributionSpec::Gaussian { sigma: q(1, 2) }
        );
        for bad in ["cauchy", "gaussian:-1", "atoms:1@1/3;-1@1/3", "atoms:1", "file:x.json"] {
            assert!(bad.parse::<DistributionSpec>().is_err(), "{bad}");
        }
        assert_eq!("zm:2".parse::<ChainHead>().unwrap(), ChainHead::Product { m: 2 });
        assert_eq!(
            "zm:0".parse::<ChainHead>().unwrap(),
            ChainHead::Diagonal(DistributionSpec::Rademacher)
        );
    }

    #[test]
    fn exact_moments() {
        let g: DistributionSpec = "gaussian:2".parse().unwrap();
        assert_eq!(g.even_moments(3).to_f64(), vec![4.0, 48.0, 960.0]);
        let a: DistributionSpec = "atoms:-2@1/4;0@1/2;2@1/4".parse().unwrap();
        assert!(a.is_symmetric());
        assert_eq!(a.even_moments(2).to_f64(), vec![2.0, 8.0]);
        let skew: DistributionSpec = "atoms:1@1/2;-1@1/4;0@1/4".parse().unwrap();
        assert!(!skew.is_symmetric());
    }

    #[test]
    fn sampling_matches_moments() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a: DistributionSpec = "atoms:-2@1/4;0@1/2;2@1/4".parse().unwrap();
        let s = a.sampler();
        let n = 200_000;
        let m2: f64 = (0..n).map(|_| s.sample(&mut rng).powi(2)).sum::<f64>() / n as f64;
        assert!((m2 - 2.0).abs() < 0.05, "{m2}");
        let g = DistributionSpec::Gaussian { sigma: q(1, 1) }.sampler();
        let m4: f64 = (0..n).map(|_| g.sample(&mut rng).powi(4)).sum::<f64>() / n as f64;
        assert!((m4 - 3.0).abs() < 0.1, "{m4}");
    }
}
