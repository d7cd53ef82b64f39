use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use super::spec::Sampler;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`build_graph_matrix_z2`].
pub const MAX_GRAPH_N: usize = 32;

fn sign<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    if rng.random::<bool>() {
        1.0
    } else {
        -1.0
    }
}

/// Haar-distributed `n x n` orthogonal matrix: QR of a Gaussian matrix with
/// each column of `Q` multiplied by the sign of the matching diagonal entry
/// of `R`.
pub fn sample_haar_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    loop {
        let g = DMatrix::<f64>::from_fn(n, n, |_, _| rng.sample(StandardNormal));
        let qr = g.qr();
        let r = qr.r();
        if (0..n).any(|i| r[(i, i)].abs() < 1e-300) {
            continue;
        }
        let mut q = qr.q();
        for j in 0..n {
            if r[(j, j)] < 0.0 {
                q.column_mut(j).neg_mut();
            }
        }
        return q;
    }
}

/// `n^(-m/2) G_1 ... G_m` with independent Rademacher `G_i`.
pub fn sample_zm_spectrum_proxy<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> DMatrix<f64> {
    assert!(m >= 1, "product proxy needs m >= 1");
    let scale = 1.0 / (n as f64).sqrt();
    let mut out = DMatrix::<f64>::from_fn(n, n, |_, _| sign(rng) * scale);
    for _ in 1..m {
        let g = DMatrix::<f64>::from_fn(n, n, |_, _| sign(rng) * scale);
        out *= g;
    }
    out
}

/// Ordered pairs of distinct indices in `0..n`, in the row order used by
/// [`build_graph_matrix_z2`].
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Z-shape graph matrix for `m = 2`, scaled by `1/n`: the entry at row
/// `(i1, i2)`, column `(j1, j2)` is `x[i1, j1] x[i2, j1] x[i2, j2] / n` for one
/// `n x n` array `x` of independent signs.
pub fn build_graph_matrix_z2<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<DMatrix<f64>> {
    if !(2..=MAX_GRAPH_N).contains(&n) {
        return Err(Error::SizeGuard(format!(
            "graph matrix needs 2 <= n <= {MAX_GRAPH_N}, got {n}"
        )));
    }
    let x = DMatrix::<f64>::from_fn(n, n, |_, _| sign(rng));
    let pairs = ordered_pairs(n);
    let r = pairs.len();
    let scale = 1.0 / n as f64;
    Ok(DMatrix::from_fn(r, r, |row, col| {
        let (i1, i2) = pairs[row];
        let (j1, j2) = pairs[col];
        x[(i1, j1)] * x[(i2, j1)] * x[(i2, j2)] * scale
    }))
}

pub(crate) fn diagonal<R: Rng + ?Sized>(n: usize, sampler: &Sampler, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| sampler.sample(rng)).collect()
}

/// `tr((M M^T)^k) / norm` for `k = 1..=k_max`.
///
/// With `W = M M^T` symmetric, `tr(W^(a+b)) = sum_ij (W^a)_ij (W^b)_ij`, so
/// only powers up to `ceil(k_max / 2)` are formed.
pub fn normalized_traces(m: &DMatrix<f64>, k_max: usize, norm: f64) -> Vec<f64> {
    let w = m * m.transpose();
    let half = k_max.div_ceil(2);
    let mut powers = vec![w.clone()];
    for _ in 1..half {
        let next = powers.last().unwrap() * &w;
        powers.push(next);
    }
    (1..=k_max)
        .map(|k| {
            let a = k.div_ceil(2);
            let b = k - a;
            let t = if b == 0 {
                powers[a - 1].trace()
            } else {
                powers[a - 1].component_mul(&powers[b - 1]).sum()
            };
            t / norm
        })
        .collect()
}
