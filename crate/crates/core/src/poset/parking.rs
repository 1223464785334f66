use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::FinitePoset;
use crate::error::{guard, Error, Result};
use crate::nc::{enumerate_noncrossing, NoncrossingPartition, Permutation};
use crate::parking::{all_pairs, ParkingPair, ParkingWord, PlaneTree};

/// An element of the poset with a maximum adjoined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HatElement {
    Elem(ParkingPair),
    Top,
}

impl HatElement {
    pub fn as_pair(&self) -> Option<&ParkingPair> {
        match self {
            HatElement::Elem(p) => Some(p),
            HatElement::Top => None,
        }
    }
}

impl fmt::Display for HatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HatElement::Elem(p) => write!(f, "{}", ParkingWord(p.to_word())),
            HatElement::Top => write!(f, "top"),
        }
    }
}

/// `a ≤ b` on eta vectors: every eta set of `b` sits inside that of `a`.
#[inline]
pub fn eta_leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| y & !x == 0)
}

/// Order of 2-partitions, decided through eta vectors.
pub fn pp_leq(a: &ParkingPair, b: &ParkingPair) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    Ok(eta_leq(&a.eta(), &b.eta()))
}

/// Order of 2-partitions from the definition: both partitions of `b` refine
/// those of `a`, and each block of `a` is sent onto the union of the images
/// of the blocks of `b` it contains.
pub fn pp_leq_by_definition(a: &ParkingPair, b: &ParkingPair) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    if !a.pi().is_below(b.pi()) || !a.rho().is_refined_by(&b.rho()) {
        return Ok(false);
    }
    let b_idx = b.pi().block_index();
    let b_images = b.images();
    for (block, image) in a.pi().blocks().iter().zip(a.images()) {
        let mut union: BTreeSet<usize> = BTreeSet::new();
        let inner: BTreeSet<usize> = block.iter().map(|&x| b_idx[x - 1]).collect();
        for i in inner {
            union.extend(b_images[i].iter().copied());
        }
        if union.into_iter().collect::<Vec<_>>() != image {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Trees obtained by splitting one node `A = A1 ⊔ A2`: the children of `A`
/// are cut into `L1 L2 L3` with `L1` nonempty and `|L2| = |A2|`, and a new
/// node `A2` with children `L2` replaces the rightmost leaf of `L1`.
pub fn tree_surgeries(t: &PlaneTree) -> Vec<PlaneTree> {
    let mut out = Vec::new();
    if t.is_leaf() {
        return out;
    }
    let m = t.label.len();
    for sub in 1u32..(1 << m) - 1 {
        let (a2, a1): (Vec<usize>, Vec<usize>) = (0..m)
            .map(|i| (sub >> i & 1 == 1, t.label[i]))
            .fold((vec![], vec![]), |(mut x, mut y), (take, v)| {
                if take {
                    x.push(v)
                } else {
                    y.push(v)
                }
                (x, y)
            });
        for cut in 1..=a1.len() {
            let l1 = &t.children[..cut];
            let l2 = &t.children[cut..cut + a2.len()];
            let l3 = &t.children[cut + a2.len()..];
            let mut forest: Vec<PlaneTree> = l1.to_vec();
            forest
                .last_mut()
                .expect("L1 is nonempty")
                .graft_rightmost_leaf(PlaneTree::node(a2.clone(), l2.to_vec()));
            forest.extend(l3.iter().cloned());
            out.push(PlaneTree::node(a1.clone(), forest));
        }
    }
    for (i, c) in t.children.iter().enumerate() {
        for s in tree_surgeries(c) {
            let mut copy = t.clone();
            copy.children[i] = s;
            out.push(copy);
        }
    }
    out
}

/// Upper covers in the poset with a maximum adjoined, generated by tree
/// surgery and checked against the order and the rank.
pub fn pp_upper_covers(a: &ParkingPair) -> Result<Vec<HatElement>> {
    let n = a.n();
    if a.rank() + 1 == n {
        return Ok(vec![HatElement::Top]);
    }
    let ea = a.eta();
    let mut out = BTreeSet::new();
    for t in tree_surgeries(&a.to_tree()) {
        let b = ParkingPair::from_tree(&t)?;
        if b.rank() != a.rank() + 1 || !eta_leq(&ea, &b.eta()) {
            return Err(Error::NotACover(format!("surgery gave {b} above {a}")));
        }
        out.insert(b);
    }
    Ok(out.into_iter().map(HatElement::Elem).collect())
}

/// Upper covers by splitting a block of the partition and its image.
pub fn pp_upper_covers_by_splitting(a: &ParkingPair) -> Vec<ParkingPair> {
    let mut out = BTreeSet::new();
    let images = a.images();
    for up in a.pi().upper_covers() {
        // the split block is the unique block of `a` not in `up`
        let (bi, block) = a
            .pi()
            .blocks()
            .iter()
            .enumerate()
            .find(|(_, b)| !up.blocks().contains(b))
            .expect("a block was split");
        let piece = up.block_of(block[0]).to_vec();
        let img = &images[bi];
        // choose the image of the piece holding the minimum
        for sub in 0u32..(1 << img.len()) {
            if sub.count_ones() as usize != piece.len() {
                continue;
            }
            let chosen: Vec<usize> = (0..img.len()).filter(|&i| sub >> i & 1 == 1).map(|i| img[i]).collect();
            let rest: Vec<usize> = img.iter().copied().filter(|y| !chosen.contains(y)).collect();
            let new_images: Vec<Vec<usize>> = up
                .blocks()
                .iter()
                .map(|b| {
                    if *b == piece {
                        chosen.clone()
                    } else if let Some(j) = a.pi().blocks().iter().position(|x| x == b) {
                        images[j].clone()
                    } else {
                        rest.clone()
                    }
                })
                .collect();
            out.insert(ParkingPair::from_images(up.clone(), &new_images).expect("valid split"));
        }
    }
    out.into_iter().collect()
}

/// Lower covers: merge two blocks whose union keeps the partition noncrossing.
pub fn pp_lower_covers(a: &ParkingPair) -> Vec<ParkingPair> {
    a.pi()
        .lower_covers()
        .iter()
        .map(|p| a.descend(p).expect("coarser partition"))
        .collect()
}

/// Every element below `a`, one for each partition below that of `a`.
pub fn pp_ideal(a: &ParkingPair) -> Result<Vec<ParkingPair>> {
    Ok(enumerate_noncrossing(a.n())?
        .iter()
        .filter(|p| p.is_below(a.pi()))
        .map(|p| a.descend(p).expect("below"))
        .collect())
}

/// Join in the poset with a maximum adjoined, by intersecting eta vectors.
pub fn pp_join(a: &HatElement, b: &HatElement) -> Result<HatElement> {
    let (HatElement::Elem(x), HatElement::Elem(y)) = (a, b) else {
        return Ok(HatElement::Top);
    };
    if x.n() != y.n() {
        return Err(Error::SizeMismatch(x.n(), y.n()));
    }
    let chi: Vec<u32> = x.eta().iter().zip(y.eta()).map(|(p, q)| p & q).collect();
    if chi.contains(&0) {
        return Ok(HatElement::Top);
    }
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &c in &chi {
        *counts.entry(c).or_default() += 1;
    }
    if counts.iter().any(|(m, &c)| c > m.count_ones()) {
        return Ok(HatElement::Top);
    }
    Ok(HatElement::Elem(ParkingPair::from_eta(x.n(), &chi)?))
}

/// Meet as the join of all common lower bounds.
pub fn pp_meet(a: &HatElement, b: &HatElement) -> Result<HatElement> {
    let (x, y) = match (a, b) {
        (HatElement::Top, _) => return Ok(b.clone()),
        (_, HatElement::Top) => return Ok(a.clone()),
        (HatElement::Elem(x), HatElement::Elem(y)) => (x, y),
    };
    if x.n() != y.n() {
        return Err(Error::SizeMismatch(x.n(), y.n()));
    }
    let mut acc = HatElement::Elem(ParkingPair::bottom(x.n()));
    for z in pp_ideal(x)? {
        if pp_leq(&z, y)? {
            acc = pp_join(&acc, &HatElement::Elem(z))?;
        }
    }
    Ok(acc)
}

/// The poset of noncrossing 2-partitions of `{1..n}` as an explicit poset.
#[derive(Clone, Debug)]
pub struct ParkingPoset {
    n: usize,
    elements: Vec<ParkingPair>,
    etas: Vec<Vec<u32>>,
    index: HashMap<ParkingPair, usize>,
    poset: FinitePoset,
}

pub const MAX_POSET_N: usize = 5;

/// Builds the poset for `n <= 5`; elements are sorted by rank, then word.
pub fn build_pp_poset(n: usize) -> Result<ParkingPoset> {
    ParkingPoset::build(n)
}

impl ParkingPoset {
    pub fn build(n: usize) -> Result<Self> {
        guard("2-partition poset", n, MAX_POSET_N)?;
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let mut elements = all_pairs(n)?;
        elements.sort_by_cached_key(|p| (p.rank(), p.to_word()));
        Self::from_elements(n, elements)
    }

    /// Induced poset on a chosen list of elements.
    pub fn from_elements(n: usize, elements: Vec<ParkingPair>) -> Result<Self> {
        let etas: Vec<Vec<u32>> = elements.iter().map(ParkingPair::eta).collect();
        let labels = elements
            .iter()
            .map(|p| ParkingWord(p.to_word()).to_string())
            .collect();
        let poset = FinitePoset::from_leq(labels, |i, j| eta_leq(&etas[i], &etas[j]))?;
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(ParkingPoset {
            n,
            elements,
            etas,
            index,
            poset,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ParkingPair] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ParkingPair {
        &self.elements[i]
    }

    pub fn eta(&self, i: usize) -> &[u32] {
        &self.etas[i]
    }

    pub fn index_of(&self, p: &ParkingPair) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Permutation of element indices induced by `s`.
    pub fn action(&self, s: &Permutation) -> Vec<usize> {
        self.elements
            .iter()
            .map(|p| self.index[&p.act(s)])
            .collect()
    }

    /// The poset with a maximum adjoined (index `len()`).
    pub fn hat(&self) -> Result<FinitePoset> {
        self.poset.with_top("top")
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.poset.to_json()
    }

    pub fn to_dot(&self) -> String {
        self.poset.to_dot(&format!("PP{}", self.n))
    }
}

/// Noncrossing partitions of `{1..n}` ordered by reverse refinement.
pub fn nc_poset(n: usize) -> Result<(Vec<NoncrossingPartition>, FinitePoset)> {
    guard("noncrossing poset", n, 8)?;
    let mut ncs = enumerate_noncrossing(n)?;
    ncs.sort_by_key(|p| p.rank());
    let labels = ncs.iter().map(|p| p.to_string()).collect();
    let poset = FinitePoset::from_leq(labels, |i, j| ncs[i].is_below(&ncs[j]))?;
    Ok((ncs, poset))
}
