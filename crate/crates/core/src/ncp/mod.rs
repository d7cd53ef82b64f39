//! Non-crossing partition engine.
//!
//! Partitions are stored 1-based with sorted blocks ordered by their minimum,
//! which is also the JSON form: `[[1,3],[2],[4]]`.

pub(crate) mod count;
mod enumerate;
mod kreweras;
pub mod oracle;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;

pub use count::{
    count_nc_by_type, count_nc_scaled, count_np_general, count_np_general_cgon,
    labeled_count_ax, labeled_count_ax_pair, unlabel_count,
};
pub use enumerate::{enumerate_nc, enumerate_pairs, for_each_nc, MAX_ENUMERATE_K, MAX_PAIR_K};
pub use kreweras::{
    interleave_pair, kreweras_complement, pair_region_sizes, quotient_cycle_sizes, quotient_cycles,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that `blocks` cover `1..=ground` disjointly and puts them in
    /// canonical order.
    pub fn new(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if ground == 0 {
            return Err(Error::InvalidPartition("ground set must be nonempty".into()));
        }
        let mut seen = vec![false; ground + 1];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > ground {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} outside 1..={ground}"
                    )));
                }
                if seen[e] {
                    return Err(Error::InvalidPartition(format!("element {e} repeated")));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = (1..=ground).find(|&e| !seen[e]) {
            return Err(Error::InvalidPartition(format!("element {missing} not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { ground, blocks })
    }

    /// Builds from 0-based blocks already known to be a valid partition.
    pub(crate) fn from_zero_based(ground: usize, blocks: &[Vec<usize>]) -> Self {
        let mut blocks: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let mut b: Vec<usize> = b.iter().map(|&e| e + 1).collect();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { ground, blocks }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            ground: n,
            blocks: (1..=n).map(|e| vec![e]).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            ground: n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// 0-based block index of each element, indexed by `element - 1`.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.ground];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e - 1] = bi;
            }
        }
        labels
    }

    pub fn is_noncrossing(&self) -> bool {
        is_noncrossing(self)
    }

    pub fn type_vector(&self) -> PartitionTypeVector {
        type_vector(self)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let ground = blocks.iter().map(Vec::len).sum();
        SetPartition::new(ground, blocks).map_err(serde::de::Error::custom)
    }
}

/// True iff there are no `a < b < c < d` with `a, c` in one block and `b, d`
/// in another.
pub fn is_noncrossing(p: &SetPartition) -> bool {
    let labels = p.block_labels();
    let last: Vec<usize> = p.blocks.iter().map(|b| *b.last().unwrap()).collect();
    let mut opened = vec![false; p.blocks.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (idx, &b) in labels.iter().enumerate() {
        let e = idx + 1;
        if opened[b] {
            if stack.last() != Some(&b) {
                return false;
            }
            if last[b] == e {
                stack.pop();
            }
        } else {
            opened[b] = true;
            if last[b] != e {
                stack.push(b);
            }
        }
    }
    true
}

/// Block-size profile `(alpha_1, ..., alpha_k)` of a partition of `[k]`.
pub fn type_vector(p: &SetPartition) -> PartitionTypeVector {
    let mut counts = vec![0usize; p.ground];
    for b in &p.blocks {
        counts[b.len() - 1] += 1;
    }
    PartitionTypeVector { counts }
}

/// `alpha = (alpha_1, ..., alpha_k)` with `sum i * alpha_i = k`; `alpha_i` is
/// the number of blocks of size `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartitionTypeVector {
    counts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for PartitionTypeVector {
    type Error = Error;
    fn try_from(counts: Vec<usize>) -> Result<Self> {
        Self::new(counts)
    }
}

impl From<PartitionTypeVector> for Vec<usize> {
    fn from(v: PartitionTypeVector) -> Self {
        v.counts
    }
}

impl PartitionTypeVector {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        let k = counts.len();
        if k == 0 {
            return Err(Error::InvalidTypeVector("k must be positive".into()));
        }
        let weight: usize = counts.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
        if weight != k {
            return Err(Error::InvalidTypeVector(format!(
                "sum of i*alpha_i is {weight}, expected k = {k}"
            )));
        }
        Ok(Self { counts })
    }

    /// Type vector of the integer partition with the given parts.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let k: usize = parts.iter().sum();
        if k == 0 || parts.contains(&0) {
            return Err(Error::InvalidTypeVector(format!("bad parts {parts:?}")));
        }
        let mut counts = vec![0; k];
        for &p in parts {
            counts[p - 1] += 1;
        }
        Ok(Self { counts })
    }

    /// `(k, 0, ..., 0)`: all blocks singletons.
    pub fn all_singletons(k: usize) -> Self {
        let mut counts = vec![0; k];
        counts[0] = k;
        Self { counts }
    }

    /// `(0, ..., 0, 1)`: one block.
    pub fn single_block(k: usize) -> Self {
        let mut counts = vec![0; k];
        counts[k - 1] = 1;
        Self { counts }
    }

    /// One block of size `c` and `k - c` singletons.
    pub fn one_block_of(k: usize, c: usize) -> Result<Self> {
        if c == 0 || c > k {
            return Err(Error::OutOfRange(format!("block size {c} not in 1..={k}")));
        }
        let mut parts = vec![c];
        parts.extend(std::iter::repeat_n(1, k - c));
        Self::from_parts(&parts)
    }

    /// Every element of `P_k`, ordered lexicographically on the parts written
    /// in descending order, largest first: `[k], [k-1,1], [k-2,2], ...`.
    pub fn all(k: usize) -> Vec<Self> {
        fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        if k == 0 {
            return Vec::new();
        }
        let mut parts = Vec::new();
        rec(k, k, &mut Vec::new(), &mut parts);
        parts
            .iter()
            .map(|p| Self::from_parts(p).expect("parts of k"))
            .collect()
    }

    pub fn k(&self) -> usize {
        self.counts.len()
    }

    /// Number of blocks `a = sum alpha_i`.
    pub fn blocks(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `alpha_i` for block size `i` (1-based); 0 outside `1..=k`.
    pub fn count(&self, size: usize) -> usize {
        if size == 0 {
            0
        } else {
            self.counts.get(size - 1).copied().unwrap_or(0)
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Block sizes in descending order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.blocks());
        for (i, &c) in self.counts.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, c));
        }
        parts
    }

    /// `alpha_1! * ... * alpha_k!`
    pub fn factorial_product(&self) -> BigInt {
        self.counts
            .iter()
            .fold(BigInt::one(), |acc, &c| acc * factorial(c))
    }

    /// Parses a comma-separated list such as `2,1,0,0`.
    pub fn parse(text: &str) -> Result<Self> {
        let counts = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("type vector entry '{t}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(counts)
    }
}

impl fmt::Display for PartitionTypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Unordered multiset of positive sizes, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleSizeMultiset {
    sizes: Vec<usize>,
}

impl CycleSizeMultiset {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidCycleSizes(format!(
                "sizes must be a nonempty list of positive integers, got {sizes:?}"
            )));
        }
        sizes.sort_unstable();
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl fmt::Display for CycleSizeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation_and_canonical_order() {
        let p = sp(4, &[&[4], &[3, 1], &[2]]);
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2], vec![4]]);
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn crossing_detection() {
        assert!(!sp(4, &[&[1, 3], &[2, 4]]).is_noncrossing());
        assert!(sp(8, &[&[2], &[4], &[6], &[1, 3], &[5, 7, 8]]).is_noncrossing());
        assert!(sp(8, &[&[1, 2, 7, 8], &[3, 4], &[5, 6]]).is_noncrossing());
        assert!(SetPartition::singletons(6).is_noncrossing());
        assert!(SetPartition::full(6).is_noncrossing());
        assert!(!sp(6, &[&[1, 4], &[2, 5, 6], &[3]]).is_noncrossing());
        assert!(sp(6, &[&[1, 6], &[2, 5], &[3, 4]]).is_noncrossing());
    }

    #[test]
    fn crossing_matches_quadruple_definition() {
        // compare against the a<b<c<d definition on every partition of [6]
        fn all_partitions(n: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            fn rec(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
                if i == n {
                    out.push(cur.clone());
                    return;
                }
                for l in 0..=max {
                    cur.push(l);
                    rec(i + 1, n, cur, max.max(l + 1), out);
                    cur.pop();
                }
            }
            rec(0, n, &mut Vec::new(), 0, &mut out);
            out
        }
        for rgs in all_partitions(6) {
            let nb = rgs.iter().max().unwrap() + 1;
            let mut blocks = vec![Vec::new(); nb];
            for (i, &l) in rgs.iter().enumerate() {
                blocks[l].push(i + 1);
            }
            let p = SetPartition::new(6, blocks).unwrap();
            let mut crossing = false;
            for a in 0..6 {
                for b in a + 1..6 {
                    for c in b + 1..6 {
                        for d in c + 1..6 {
                            if rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b] {
                                crossing = true;
                            }
                        }
                    }
                }
            }
            assert_eq!(p.is_noncrossing(), !crossing, "{p}");
        }
    }

    #[test]
    fn type_vectors() {
        assert_eq!(sp(4, &[&[1, 3], &[2], &[4]]).type_vector().counts(), &[2, 1, 0, 0]);
        assert_eq!(SetPartition::full(5).type_vector().counts(), &[0, 0, 0, 0, 1]);
        let fig = sp(8, &[&[2], &[4], &[6], &[1, 3], &[5, 7, 8]]);
        assert_eq!(fig.type_vector().counts(), &[3, 1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn type_vector_family() {
        let p4 = PartitionTypeVector::all(4);
        let parts: Vec<Vec<usize>> = p4.iter().map(|t| t.parts()).collect();
        assert_eq!(
            parts,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(PartitionTypeVector::all(7).len(), 15);
        assert!(PartitionTypeVector::new(vec![1, 1, 0]).is_ok());
        assert!(PartitionTypeVector::new(vec![1, 1, 1]).is_err());
        assert_eq!(PartitionTypeVector::parse("2,1,0,0").unwrap().blocks(), 3);
        assert!(PartitionTypeVector::parse("2,x").is_err());
        let t = PartitionTypeVector::one_block_of(5, 3).unwrap();
        assert_eq!(t.counts(), &[2, 0, 1, 0, 0]);
    }

    #[test]
    fn json_shape() {
        let p = sp(4, &[&[2], &[1, 3], &[4]]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "[[1,3],[2],[4]]");
        let back: SetPartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SetPartition>("[[1,2],[2]]").is_err());
    }
}
