use super::{CycleSizeMultiset, SetPartition};
use crate::error::{Error, Result};

fn require_noncrossing(p: &SetPartition) -> Result<()> {
    if p.is_noncrossing() {
        Ok(())
    } else {
        Err(Error::Crossing(p.to_string()))
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Kreweras complement `K(p)` of a non-crossing partition of `[k]`.
///
/// The point `i'` sits between `i` and `i + 1`. Two points `i' < j'` share a
/// block iff the elements `i + 1, ..., j` form a union of blocks of `p`; the
/// point `i'` is reported as `i`.
pub fn kreweras_complement(p: &SetPartition) -> Result<SetPartition> {
    require_noncrossing(p)?;
    let k = p.ground_size();
    let labels = p.block_labels();
    let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
    let mut parent: Vec<usize> = (0..k).collect();
    let mut seen = vec![0usize; sizes.len()];

    for i in 0..k {
        seen.iter_mut().for_each(|s| *s = 0);
        let mut open = 0usize;
        // element e (0-based) ranges over i+1 ..= j
        for j in i + 1..k {
            let b = labels[j];
            if seen[b] == 0 {
                open += 1;
            }
            seen[b] += 1;
            if seen[b] == sizes[b] {
                open -= 1;
            }
            if open == 0 {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[rj] = ri;
            }
        }
    }

    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        let r = find(&mut parent, i);
        groups[r].push(i);
    }
    groups.retain(|g| !g.is_empty());
    Ok(SetPartition::from_zero_based(k, &groups))
}

/// Cycles left after contracting each block of `p` on the `k`-cycle.
///
/// Edge `i` joins `i` and `i + 1 (mod k)`. Walking around a face of the
/// polygon picture, the edge after `i` starts at the block predecessor of
/// `i + 1`, so each returned cycle is a list of edge indices (1-based, edge
/// `i` reported as `i`).
pub fn quotient_cycles(p: &SetPartition) -> Result<Vec<Vec<usize>>> {
    require_noncrossing(p)?;
    let k = p.ground_size();
    let mut prev = vec![0usize; k];
    for block in p.blocks() {
        let n = block.len();
        for (t, &e) in block.iter().enumerate() {
            prev[e - 1] = block[(t + n - 1) % n] - 1;
        }
    }
    let mut visited = vec![false; k];
    let mut cycles = Vec::new();
    for start in 0..k {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut e = start;
        while !visited[e] {
            visited[e] = true;
            cycle.push(e + 1);
            e = prev[(e + 1) % k];
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// `S_p`: sizes of the cycles of [`quotient_cycles`].
pub fn quotient_cycle_sizes(p: &SetPartition) -> Result<CycleSizeMultiset> {
    let sizes = quotient_cycles(p)?.iter().map(Vec::len).collect();
    CycleSizeMultiset::new(sizes)
}

/// Places `pi` on the odd positions and `sigma` on the even positions of
/// `[2k]`.
pub fn interleave_pair(pi: &SetPartition, sigma: &SetPartition) -> Result<SetPartition> {
    let k = pi.ground_size();
    if sigma.ground_size() != k {
        return Err(Error::MismatchedK(k, sigma.ground_size()));
    }
    let mut blocks: Vec<Vec<usize>> = pi
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&i| 2 * i - 1).collect())
        .collect();
    blocks.extend(
        sigma
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&i| 2 * i).collect()),
    );
    SetPartition::new(2 * k, blocks)
}

/// Quotient sizes of the interleaved pair, each halved.
pub fn pair_region_sizes(pi: &SetPartition, sigma: &SetPartition) -> Result<CycleSizeMultiset> {
    let joined = interleave_pair(pi, sigma)?;
    let sizes = quotient_cycle_sizes(&joined)?;
    let mut halves = Vec::with_capacity(sizes.len());
    for &s in sizes.sizes() {
        if s % 2 == 1 {
            return Err(Error::OddRegion {
                size: s,
                partition: joined.to_string(),
            });
        }
        halves.push(s / 2);
    }
    CycleSizeMultiset::new(halves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncp::enumerate_nc;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    /// Coarsest partition `q` of `[k]` such that the interleaving of `p` (odd)
    /// and `q` (even, shifted to sit after each element) is non-crossing.
    fn kreweras_by_search(p: &SetPartition) -> SetPartition {
        let k = p.ground_size();
        let mut best: Option<SetPartition> = None;
        for q in enumerate_nc(k).unwrap() {
            let joined = interleave_pair(p, &q).unwrap();
            if joined.is_noncrossing()
                && best.as_ref().is_none_or(|b| q.num_blocks() < b.num_blocks())
            {
                best = Some(q);
            }
        }
        best.unwrap()
    }

    #[test]
    fn examples() {
        let p = sp(4, &[&[1, 3], &[2], &[4]]);
        assert_eq!(kreweras_complement(&p).unwrap(), sp(4, &[&[1, 2], &[3, 4]]));
        for k in 1..=6 {
            assert_eq!(
                kreweras_complement(&SetPartition::singletons(k)).unwrap(),
                SetPartition::full(k)
            );
            assert_eq!(
                kreweras_complement(&SetPartition::full(k)).unwrap(),
                SetPartition::singletons(k)
            );
        }
        assert!(kreweras_complement(&sp(4, &[&[1, 3], &[2, 4]])).is_err());
    }

    #[test]
    fn matches_coarsest_compatible_search() {
        for k in 1..=7 {
            for p in enumerate_nc(k).unwrap() {
                assert_eq!(kreweras_complement(&p).unwrap(), kreweras_by_search(&p), "{p}");
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let fig = sp(8, &[&[2], &[4], &[6], &[1, 3], &[5, 7, 8]]);
        assert_eq!(quotient_cycle_sizes(&fig).unwrap().sizes(), &[1, 2, 2, 3]);
        assert_eq!(
            quotient_cycle_sizes(&SetPartition::singletons(5)).unwrap().sizes(),
            &[5]
        );
        assert_eq!(
            quotient_cycle_sizes(&SetPartition::full(5)).unwrap().sizes(),
            &[1; 5]
        );
    }

    #[test]
    fn quotient_cycles_are_kreweras_blocks() {
        for k in 1..=8 {
            for p in enumerate_nc(k).unwrap() {
                let cycles = quotient_cycles(&p).unwrap();
                let as_partition = SetPartition::new(k, cycles).unwrap();
                assert_eq!(as_partition, kreweras_complement(&p).unwrap());
            }
        }
    }

    #[test]
    fn interleave_examples() {
        let pair = sp(2, &[&[1, 2]]);
        let ones = SetPartition::singletons(2);
        let j = interleave_pair(&pair, &ones).unwrap();
        assert_eq!(j, sp(4, &[&[1, 3], &[2], &[4]]));
        assert!(j.is_noncrossing());
        assert!(!interleave_pair(&pair, &pair).unwrap().is_noncrossing());
        assert_eq!(
            interleave_pair(&SetPartition::singletons(3), &SetPartition::singletons(3)).unwrap(),
            SetPartition::singletons(6)
        );
    }

    #[test]
    fn region_examples() {
        let pair = sp(2, &[&[1, 2]]);
        let ones = SetPartition::singletons(2);
        assert_eq!(pair_region_sizes(&pair, &ones).unwrap().sizes(), &[1, 1]);
        assert_eq!(pair_region_sizes(&ones, &ones).unwrap().sizes(), &[2]);
        let one = SetPartition::singletons(1);
        assert_eq!(pair_region_sizes(&one, &one).unwrap().sizes(), &[1]);
    }
}
