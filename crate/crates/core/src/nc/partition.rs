use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{guard, Error, Result};

/// Largest ground set supported by the bitmask representation.
pub const MAX_GROUND: usize = 32;

/// A set partition of `{1..n}`, blocks sorted and ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionJson {
            n: self.n,
            blocks: self.blocks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PartitionJson::deserialize(d)?;
        SetPartition::new(j.n, j.blocks).map_err(serde::de::Error::custom)
    }
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        guard("ground set", n, MAX_GROUND)?;
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} out of range or repeated"
                    )));
                }
                seen[x - 1] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition("blocks do not cover the ground set".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Partition from bitmasks (bit `i-1` stands for `i`).
    pub fn from_masks(n: usize, masks: &[u32]) -> Result<Self> {
        let blocks = masks.iter().map(|&m| mask_elements(m)).collect();
        SetPartition::new(n, blocks)
    }

    /// Partition from a block label for each element (labels arbitrary).
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut order: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match order.iter().position(|&x| x == l) {
                Some(p) => blocks[p].push(i + 1),
                None => {
                    order.push(l);
                    blocks.push(vec![i + 1]);
                }
            }
        }
        SetPartition { n, blocks }
    }

    pub fn one_block(n: usize) -> Self {
        SetPartition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(1..=n).collect()] },
        }
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `block_index()[i-1]` is the position of the block holding `i`.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                idx[x - 1] = b;
            }
        }
        idx
    }

    pub fn block_of(&self, i: usize) -> &[usize] {
        self.blocks
            .iter()
            .find(|b| b.contains(&i))
            .expect("element in ground set")
    }

    pub fn masks(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| elements_mask(b)).collect()
    }

    /// True when every block of `finer` lies inside a block of `self`.
    pub fn is_refined_by(&self, finer: &SetPartition) -> bool {
        if self.n != finer.n {
            return false;
        }
        let idx = self.block_index();
        finer
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| idx[x - 1] == idx[b[0] - 1]))
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_witness().is_none()
    }

    /// Some `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn crossing_witness(&self) -> Option<(usize, usize, usize, usize)> {
        let idx = self.block_index();
        for block in &self.blocks {
            for w in block.windows(2) {
                let (a, c) = (w[0], w[1]);
                for b in a + 1..c {
                    let other = &self.blocks[idx[b - 1]];
                    if let Some(&d) = other.iter().find(|&&d| d > c) {
                        return Some((a, b, c, d));
                    }
                    if let Some(&d) = other.iter().find(|&&d| d < a) {
                        return Some((d, a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Image of the partition under a permutation of the ground set.
    pub fn relabel(&self, sigma: &Permutation) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| sigma.apply(x)).collect())
            .collect();
        SetPartition::new(self.n, blocks).expect("relabelling preserves validity")
    }

    /// All set partitions of `{1..n}` via restricted growth strings.
    pub fn all(n: usize) -> Result<Vec<SetPartition>> {
        guard("set partition enumeration", n, 10)?;
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
            if i == rgs.len() {
                out.push(SetPartition::from_labels(rgs));
                return;
            }
            for v in 0..=max + 1 {
                rgs[i] = v;
                rec(i + 1, max.max(v), rgs, out);
            }
        }
        if n == 0 {
            return Ok(vec![SetPartition::one_block(0)]);
        }
        rec(1, 0, &mut rgs, &mut out);
        Ok(out)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                s.join(",")
            })
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

pub fn elements_mask(elems: &[usize]) -> u32 {
    elems.iter().fold(0u32, |m, &x| m | (1 << (x - 1)))
}

pub fn mask_elements(mut m: u32) -> Vec<usize> {
    let mut v = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let t = m.trailing_zeros() as usize;
        v.push(t + 1);
        m &= m - 1;
    }
    v
}

/// A noncrossing set partition.
///
/// Ordered by reverse refinement: the one-block partition is the minimum
/// and the partition into singletons is the maximum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SetPartition", into = "SetPartition")]
pub struct NoncrossingPartition(SetPartition);

impl TryFrom<SetPartition> for NoncrossingPartition {
    type Error = Error;
    fn try_from(p: SetPartition) -> Result<Self> {
        NoncrossingPartition::from_partition(p)
    }
}

impl From<NoncrossingPartition> for SetPartition {
    fn from(p: NoncrossingPartition) -> SetPartition {
        p.0
    }
}

impl Deref for NoncrossingPartition {
    type Target = SetPartition;
    fn deref(&self) -> &SetPartition {
        &self.0
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl NoncrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_partition(SetPartition::new(n, blocks)?)
    }

    pub fn from_partition(p: SetPartition) -> Result<Self> {
        match p.crossing_witness() {
            None => Ok(NoncrossingPartition(p)),
            Some(w) => Err(Error::Crossing(format!("{p} crosses at {w:?}"))),
        }
    }

    pub fn from_masks(n: usize, masks: &[u32]) -> Result<Self> {
        Self::from_partition(SetPartition::from_masks(n, masks)?)
    }

    /// The one-block partition, bottom of the lattice.
    pub fn bottom(n: usize) -> Self {
        NoncrossingPartition(SetPartition::one_block(n))
    }

    /// The partition into singletons, top of the lattice.
    pub fn top(n: usize) -> Self {
        NoncrossingPartition(SetPartition::singletons(n))
    }

    pub fn as_partition(&self) -> &SetPartition {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.num_blocks() - 1
    }

    /// `self ≤ other`, i.e. `other` refines `self`.
    pub fn is_below(&self, other: &NoncrossingPartition) -> bool {
        self.is_refined_by(other)
    }

    /// Cycle permutation sending each element to the next one in its block.
    pub fn bar(&self) -> Permutation {
        let mut w: Vec<usize> = (1..=self.n()).collect();
        for b in self.blocks() {
            for (i, &x) in b.iter().enumerate() {
                w[x - 1] = b[(i + 1) % b.len()];
            }
        }
        Permutation::new(w).expect("block cycles form a permutation")
    }

    /// Inverse of [`bar`](Self::bar): accepts only permutations whose cycles
    /// are increasing and form a noncrossing partition.
    pub fn from_permutation(perm: &Permutation) -> Result<Self> {
        let cycles = perm.cycles();
        let p = NoncrossingPartition::from_partition(SetPartition::new(perm.n(), cycles)?)?;
        if &p.bar() != perm {
            return Err(Error::Precondition(format!(
                "permutation {perm} does not come from a noncrossing partition"
            )));
        }
        Ok(p)
    }

    /// Kreweras complement, with permutation `bar(bottom) ∘ bar(self)⁻¹`.
    pub fn kreweras(&self) -> NoncrossingPartition {
        let c = Permutation::long_cycle(self.n());
        NoncrossingPartition::from_permutation(&c.compose(&self.bar().inverse()))
            .expect("Kreweras complement is noncrossing")
    }

    /// Relative complement of `self ≤ finer`: permutation `bar(self) ∘ bar(finer)⁻¹`.
    pub fn relative_kreweras(&self, finer: &NoncrossingPartition) -> Result<NoncrossingPartition> {
        if self.n() != finer.n() {
            return Err(Error::SizeMismatch(self.n(), finer.n()));
        }
        if !self.is_below(finer) {
            return Err(Error::Precondition(format!("{self} is not below {finer}")));
        }
        NoncrossingPartition::from_permutation(&self.bar().compose(&finer.bar().inverse()))
    }

    /// Partitions covered by `self`: merge two blocks without creating a crossing.
    pub fn lower_covers(&self) -> Vec<NoncrossingPartition> {
        let masks = self.masks();
        let mut out = Vec::new();
        for i in 0..masks.len() {
            for j in i + 1..masks.len() {
                let mut m: Vec<u32> = masks.clone();
                m[i] |= m[j];
                m.remove(j);
                if let Ok(p) = NoncrossingPartition::from_masks(self.n(), &m) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// Partitions covering `self`: split one block into two noncrossing pieces.
    pub fn upper_covers(&self) -> Vec<NoncrossingPartition> {
        let masks = self.masks();
        let mut out = Vec::new();
        for (i, &m) in masks.iter().enumerate() {
            let elems = mask_elements(m);
            if elems.len() < 2 {
                continue;
            }
            // piece containing the minimum, enumerated as a proper subset
            let rest = &elems[1..];
            for sub in 0u32..(1 << rest.len()) - 1 {
                let mut a = 1u32 << (elems[0] - 1);
                for (t, &x) in rest.iter().enumerate() {
                    if sub >> t & 1 == 1 {
                        a |= 1 << (x - 1);
                    }
                }
                let mut mm = masks.clone();
                mm[i] = a;
                mm.push(m & !a);
                if let Ok(p) = NoncrossingPartition::from_masks(self.n(), &mm) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// Restriction to an interval `[lo, hi]` that is a union of blocks.
    pub fn restrict_interval(&self, lo: usize, hi: usize) -> Vec<Vec<usize>> {
        self.blocks()
            .iter()
            .filter(|b| b[0] >= lo && b[0] <= hi)
            .cloned()
            .collect()
    }

    /// Whether every block is a set of consecutive integers.
    pub fn is_interval_partition(&self) -> bool {
        self.blocks()
            .iter()
            .all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }
}

/// `p ≤ q` in the noncrossing partition lattice.
pub fn nc_leq(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(p.n(), q.n()));
    }
    Ok(p.is_below(q))
}

/// All noncrossing partitions of `{1..n}`, sorted.
pub fn enumerate_noncrossing(n: usize) -> Result<Vec<NoncrossingPartition>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    guard("noncrossing enumeration", n, 12)?;
    let mut out: Vec<NoncrossingPartition> = interval_partitions(1, n)
        .into_iter()
        .map(|blocks| NoncrossingPartition(SetPartition::new(n, blocks).expect("valid")))
        .collect();
    out.sort();
    Ok(out)
}

// noncrossing partitions of the integer interval [lo, hi]
fn interval_partitions(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let rest: Vec<usize> = (lo + 1..=hi).collect();
    for sub in 0u32..(1 << rest.len()) {
        let mut block = vec![lo];
        block.extend(
            rest.iter()
                .enumerate()
                .filter(|(t, _)| sub >> t & 1 == 1)
                .map(|(_, &x)| x),
        );
        // gaps between consecutive block elements, then the tail
        let mut gaps: Vec<(usize, usize)> = block.windows(2).map(|w| (w[0] + 1, w[1] - 1)).collect();
        gaps.push((block[block.len() - 1] + 1, hi));
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![block.clone()]];
        for (a, b) in gaps {
            let fills = interval_partitions(a, b);
            let mut next = Vec::with_capacity(partial.len() * fills.len());
            for p in &partial {
                for f in &fills {
                    let mut q = p.clone();
                    q.extend(f.iter().cloned());
                    next.push(q);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out
}

/// A sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakComposition(pub Vec<usize>);

/// Block sizes placed at block minima.
pub fn lukasiewicz_encode(p: &NoncrossingPartition) -> WeakComposition {
    let mut a = vec![0; p.n()];
    for b in p.blocks() {
        a[b[0] - 1] = b.len();
    }
    WeakComposition(a)
}

/// Inverse of [`lukasiewicz_encode`]; each nonzero entry opens a block that
/// absorbs the next zero entries not claimed by a more recent open block.
pub fn lukasiewicz_decode(a: &WeakComposition) -> Result<NoncrossingPartition> {
    let n = a.0.len();
    let bad = |why: &str| Error::InvalidObject {
        kind: "Łukasiewicz word",
        reason: format!("{:?}: {why}", a.0),
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut open: Vec<(usize, usize)> = Vec::new(); // (block index, remaining)
    for (i, &v) in a.0.iter().enumerate() {
        if v > 0 {
            blocks.push(vec![i + 1]);
            if v > 1 {
                open.push((blocks.len() - 1, v - 1));
            }
        } else {
            let Some(top) = open.last_mut() else {
                return Err(bad("prefix sums fall below the position"));
            };
            blocks[top.0].push(i + 1);
            top.1 -= 1;
            if top.1 == 0 {
                open.pop();
            }
        }
    }
    if !open.is_empty() {
        return Err(bad("entries do not sum to the length"));
    }
    Ok(NoncrossingPartition(SetPartition::new(n, blocks)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        NoncrossingPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn kreweras_example() {
        let p = nc(6, &[&[1, 2], &[3], &[4, 5, 6]]);
        assert_eq!(p.kreweras(), nc(6, &[&[1, 3, 4], &[2], &[5], &[6]]));
    }

    #[test]
    fn kreweras_extremes() {
        for n in 1..6 {
            assert_eq!(NoncrossingPartition::bottom(n).kreweras(), NoncrossingPartition::top(n));
            assert_eq!(NoncrossingPartition::top(n).kreweras(), NoncrossingPartition::bottom(n));
        }
    }

    #[test]
    fn lukasiewicz_example() {
        let p = nc(
            15,
            &[&[1, 2, 15], &[3, 6, 10, 11], &[4, 5], &[7, 8, 9], &[12, 13, 14]],
        );
        let a = lukasiewicz_encode(&p);
        assert_eq!(a.0, vec![3, 0, 4, 2, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 0]);
        assert_eq!(lukasiewicz_decode(&a).unwrap(), p);
    }

    #[test]
    fn lukasiewicz_rejects() {
        assert!(lukasiewicz_decode(&WeakComposition(vec![0, 2, 1])).is_err());
        assert!(lukasiewicz_decode(&WeakComposition(vec![2, 1, 1])).is_err());
        assert!(lukasiewicz_decode(&WeakComposition(vec![1, 1])).is_ok());
    }

    #[test]
    fn crossing_detection() {
        assert!(NoncrossingPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
        assert!(NoncrossingPartition::new(4, vec![vec![1, 4], vec![2, 3]]).is_ok());
        assert!(SetPartition::new(3, vec![vec![1], vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_noncrossing(3).unwrap().len(), 5);
        assert_eq!(enumerate_noncrossing(6).unwrap().len(), 132);
        assert!(enumerate_noncrossing(13).is_err());
    }

    #[test]
    fn relative_kreweras_ends() {
        let p = nc(4, &[&[1, 4], &[2, 3]]);
        assert_eq!(
            NoncrossingPartition::bottom(4).relative_kreweras(&p).unwrap(),
            p.kreweras()
        );
        assert_eq!(p.relative_kreweras(&p).unwrap(), NoncrossingPartition::top(4));
        assert!(NoncrossingPartition::top(4)
            .relative_kreweras(&NoncrossingPartition::bottom(4))
            .is_err());
    }
}
