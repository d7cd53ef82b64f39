//! Recursive first-block generation of non-crossing partitions, with optional
//! constraints used by the generalized families.
//!
//! The open region is a stack of intervals. The first element of the topmost
//! interval starts a new block; the remaining elements of that block are
//! chosen inside the interval, and the gaps between them become new intervals.
//! Because blocks never reach outside their interval, only non-crossing
//! partitions are produced, each exactly once.

use super::{type_vector, PartitionTypeVector, SetPartition};
use crate::error::{Error, Result};

pub const MAX_ENUMERATE_K: usize = 14;
pub const MAX_PAIR_K: usize = 7;

/// Restrictions on the blocks of a generated partition.
///
/// Every position carries a group. A block may only join positions of the
/// same group, its length must be a multiple of the group's modulus and at
/// most the group's `max_block`, and `accept` gets the last word.
pub(crate) struct Constraints<'a> {
    pub group_of: Vec<usize>,
    pub modulus: Vec<usize>,
    pub max_block: Vec<usize>,
    pub accept: &'a dyn Fn(usize, &[usize]) -> bool,
}

impl<'a> Constraints<'a> {
    pub fn unconstrained(n: usize, accept: &'a dyn Fn(usize, &[usize]) -> bool) -> Self {
        Self {
            group_of: vec![0; n],
            modulus: vec![1],
            max_block: vec![n],
            accept,
        }
    }
}

struct Search<'c, 'v> {
    c: &'c Constraints<'c>,
    // prefix[t][i] = number of positions of group t among 0..i
    prefix: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    pending: Vec<(usize, usize)>,
    visit: &'v mut dyn FnMut(&[Vec<usize>]),
}

impl Search<'_, '_> {
    fn gap_ok(&self, lo: usize, hi: usize) -> bool {
        self.prefix
            .iter()
            .zip(&self.c.modulus)
            .all(|(p, &m)| (p[hi] - p[lo]) % m == 0)
    }

    fn run(&mut self) {
        let Some((lo, hi)) = self.pending.pop() else {
            (self.visit)(&self.blocks);
            return;
        };
        if lo == hi {
            self.run();
        } else {
            let mut block = vec![lo];
            self.extend(&mut block, hi);
        }
        self.pending.push((lo, hi));
    }

    fn extend(&mut self, block: &mut Vec<usize>, hi: usize) {
        let g = self.c.group_of[block[0]];
        let last = *block.last().unwrap();

        if block.len().is_multiple_of(self.c.modulus[g])
            && self.gap_ok(last + 1, hi)
            && (self.c.accept)(g, block)
        {
            let mark = self.pending.len();
            self.pending.push((last + 1, hi));
            for w in block.windows(2).rev() {
                self.pending.push((w[0] + 1, w[1]));
            }
            self.blocks.push(block.clone());
            self.run();
            self.blocks.pop();
            self.pending.truncate(mark);
        }

        if block.len() >= self.c.max_block[g] {
            return;
        }
        for j in last + 1..hi {
            if self.c.group_of[j] == g && self.gap_ok(last + 1, j) {
                block.push(j);
                self.extend(block, hi);
                block.pop();
            }
        }
    }
}

/// Calls `visit` with the 0-based blocks of every non-crossing partition of
/// `0..n` satisfying `c`. Blocks are in generation order, not canonical order.
pub(crate) fn for_each_constrained(
    n: usize,
    c: &Constraints<'_>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let groups = c.modulus.len();
    let mut prefix = vec![vec![0usize; n + 1]; groups];
    for (i, &g) in c.group_of.iter().enumerate() {
        for (t, p) in prefix.iter_mut().enumerate() {
            p[i + 1] = p[i] + usize::from(t == g);
        }
    }
    let mut search = Search {
        c,
        prefix,
        blocks: Vec::new(),
        pending: vec![(0, n)],
        visit,
    };
    search.run();
}

/// Visits every non-crossing partition of `[k]` in a fixed order.
pub fn for_each_nc(k: usize, mut visit: impl FnMut(&SetPartition)) -> Result<()> {
    check_cap(k, MAX_ENUMERATE_K)?;
    let accept = |_: usize, _: &[usize]| true;
    let c = Constraints::unconstrained(k, &accept);
    for_each_constrained(k, &c, &mut |blocks| {
        visit(&SetPartition::from_zero_based(k, blocks));
    });
    Ok(())
}

/// All non-crossing partitions of `[k]`, in the order of [`for_each_nc`].
pub fn enumerate_nc(k: usize) -> Result<Vec<SetPartition>> {
    let mut out = Vec::new();
    for_each_nc(k, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Pairs `(pi, sigma)` of partitions of `[k]` with the given types whose
/// interleaving on `[2k]` is non-crossing.
pub fn enumerate_pairs(
    alpha: &PartitionTypeVector,
    beta: &PartitionTypeVector,
) -> Result<Vec<(SetPartition, SetPartition)>> {
    let k = alpha.k();
    if beta.k() != k {
        return Err(Error::MismatchedK(k, beta.k()));
    }
    check_cap(k, MAX_PAIR_K)?;
    let nc = enumerate_nc(k)?;
    let pis: Vec<&SetPartition> = nc.iter().filter(|p| type_vector(p) == *alpha).collect();
    let sigmas: Vec<&SetPartition> = nc.iter().filter(|p| type_vector(p) == *beta).collect();
    let mut out = Vec::new();
    for pi in &pis {
        for sigma in &sigmas {
            if super::interleave_pair(pi, sigma)?.is_noncrossing() {
                out.push(((*pi).clone(), (*sigma).clone()));
            }
        }
    }
    Ok(out)
}

fn check_cap(k: usize, cap: usize) -> Result<()> {
    if k == 0 || k > cap {
        return Err(Error::SizeGuard(format!("k = {k} outside 1..={cap}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::catalan;
    use std::collections::BTreeSet;

    #[test]
    fn counts_are_catalan() {
        for k in 1..=10 {
            let mut count = 0u64;
            let mut seen = BTreeSet::new();
            for_each_nc(k, |p| {
                assert!(p.is_noncrossing());
                count += 1;
                if k <= 7 {
                    seen.insert(p.clone());
                }
            })
            .unwrap();
            assert_eq!(catalan(k), count.into(), "k = {k}");
            if k <= 7 {
                assert_eq!(seen.len() as u64, count, "duplicates at k = {k}");
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_nc(1).unwrap(), vec![SetPartition::singletons(1)]);
        let nc4 = enumerate_nc(4).unwrap();
        let t = PartitionTypeVector::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(nc4.iter().filter(|p| p.type_vector() == t).count(), 6);
        assert!(enumerate_nc(0).is_err());
        assert!(enumerate_nc(15).is_err());
    }

    #[test]
    fn order_is_stable() {
        assert_eq!(enumerate_nc(6).unwrap(), enumerate_nc(6).unwrap());
    }

    #[test]
    fn pair_examples() {
        let full = PartitionTypeVector::single_block(2);
        let single = PartitionTypeVector::all_singletons(2);
        assert!(enumerate_pairs(&full, &full).unwrap().is_empty());
        assert_eq!(enumerate_pairs(&full, &single).unwrap().len(), 1);
        let one = PartitionTypeVector::all_singletons(1);
        assert_eq!(enumerate_pairs(&one, &one).unwrap().len(), 1);
        assert!(enumerate_pairs(&one, &full).is_err());
    }

    #[test]
    fn modulus_constraint_gives_fuss_catalan() {
        // blocks of size divisible by 3 on [3k] number binom(3k, k)/(2k+1)
        for k in 1..=4 {
            let accept = |_: usize, _: &[usize]| true;
            let c = Constraints {
                group_of: vec![0; 3 * k],
                modulus: vec![3],
                max_block: vec![3 * k],
                accept: &accept,
            };
            let mut all = 0u64;
            for_each_constrained(3 * k, &c, &mut |_| all += 1);
            let accept3 = |_: usize, b: &[usize]| b.len() == 3;
            let c3 = Constraints {
                accept: &accept3,
                ..c
            };
            let mut exact3 = 0u64;
            for_each_constrained(3 * k, &c3, &mut |_| exact3 += 1);
            assert_eq!(crate::combinat::fuss_catalan(k, 2), exact3.into());
            assert!(all >= exact3);
        }
    }
}
