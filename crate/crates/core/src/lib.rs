//! Exact moments of products of free variables and of orthogonally mixed
//! diagonal distributions.
//!
//! * [`combinat`]: big-integer binomials, Catalan and Fuss-Catalan numbers,
//!   and checkers for the supporting binomial identities.
//! * [`ncp`]: non-crossing partitions, Kreweras complements, region sizes,
//!   closed-form family counts and their brute-force oracles.
//! * [`freeprob`]: the coefficient formula, the mixing operation on moment
//!   sequences, Fuss-Catalan chains and a free-cumulant oracle.
//! * [`rmt`]: Monte Carlo estimates of normalized trace powers of random
//!   matrix models.
//! * [`verify`]: the exhaustive self-check suites behind `freemix verify`.

pub mod combinat;
pub mod error;
pub mod freeprob;
pub mod ncp;
pub mod rmt;
pub mod verify;

pub use error::{Error, Result};
