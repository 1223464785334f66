use std::fmt;

use serde::{Deserialize, Serialize};

use super::tree::PlaneTree;
use crate::error::{invalid, Error, Result};
use crate::nc::{elements_mask, NoncrossingPartition, Permutation, SetPartition};

/// A noncrossing 2-partition stored as a noncrossing partition together with
/// the permutation that is increasing on each block and sends each block to
/// its image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingPair {
    pi: NoncrossingPartition,
    sigma: Permutation,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
    sigma: Vec<usize>,
}

impl Serialize for ParkingPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairJson {
            n: self.n(),
            blocks: self.pi.blocks().to_vec(),
            sigma: self.sigma.as_slice().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParkingPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PairJson::deserialize(d)?;
        let build = || -> Result<ParkingPair> {
            ParkingPair::new(
                NoncrossingPartition::new(j.n, j.blocks)?,
                Permutation::new(j.sigma)?,
            )
        };
        build().map_err(serde::de::Error::custom)
    }
}

impl ParkingPair {
    pub fn new(pi: NoncrossingPartition, sigma: Permutation) -> Result<Self> {
        if pi.n() != sigma.n() {
            return Err(Error::SizeMismatch(pi.n(), sigma.n()));
        }
        for b in pi.blocks() {
            if b.windows(2).any(|w| sigma.apply(w[0]) > sigma.apply(w[1])) {
                return Err(invalid(
                    "pair",
                    format!("σ = {sigma} is not increasing on block {b:?}"),
                ));
            }
        }
        Ok(ParkingPair { pi, sigma })
    }

    /// Builds the pair sending the `i`-th block of `pi` onto `images[i]`.
    pub fn from_images(pi: NoncrossingPartition, images: &[Vec<usize>]) -> Result<Self> {
        let n = pi.n();
        if images.len() != pi.num_blocks() {
            return Err(invalid("pair", "one image per block is required"));
        }
        let mut w = vec![0; n];
        for (b, img) in pi.blocks().iter().zip(images) {
            if b.len() != img.len() {
                return Err(invalid(
                    "pair",
                    format!("block {b:?} and image {img:?} differ in size"),
                ));
            }
            let mut img = img.clone();
            img.sort_unstable();
            for (&x, &y) in b.iter().zip(&img) {
                w[x - 1] = y;
            }
        }
        let sigma = Permutation::new(w).map_err(|_| invalid("pair", "images are not disjoint"))?;
        Ok(ParkingPair { pi, sigma })
    }

    /// The minimum `(0_n, id)`.
    pub fn bottom(n: usize) -> Self {
        ParkingPair {
            pi: NoncrossingPartition::bottom(n),
            sigma: Permutation::identity(n),
        }
    }

    /// The maximal element of the singletons partition with permutation `sigma`.
    pub fn maximal(sigma: Permutation) -> Self {
        ParkingPair {
            pi: NoncrossingPartition::top(sigma.n()),
            sigma,
        }
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn pi(&self) -> &NoncrossingPartition {
        &self.pi
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn rank(&self) -> usize {
        self.pi.rank()
    }

    pub fn code(&self) -> Vec<usize> {
        self.sigma.code()
    }

    /// Image of each block, aligned with `pi().blocks()`.
    pub fn images(&self) -> Vec<Vec<usize>> {
        self.pi
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| self.sigma.apply(x)).collect())
            .collect()
    }

    /// The image partition.
    pub fn rho(&self) -> SetPartition {
        SetPartition::new(self.n(), self.images()).expect("images partition the ground set")
    }

    /// `eta()[j-1]` is the bitmask of the block whose image contains `j`.
    pub fn eta(&self) -> Vec<u32> {
        let inv = self.sigma.inverse();
        let masks = self.pi.masks();
        let idx = self.pi.block_index();
        (1..=self.n()).map(|j| masks[idx[inv.apply(j) - 1]]).collect()
    }

    /// Inverse of [`eta`](Self::eta).
    pub fn from_eta(n: usize, eta: &[u32]) -> Result<Self> {
        if eta.len() != n {
            return Err(Error::SizeMismatch(n, eta.len()));
        }
        let mut blocks: Vec<u32> = eta.to_vec();
        blocks.sort_unstable();
        blocks.dedup();
        let pi = NoncrossingPartition::from_masks(n, &blocks)?;
        let images: Vec<Vec<usize>> = pi
            .masks()
            .iter()
            .map(|&m| (1..=n).filter(|&j| eta[j - 1] == m).collect())
            .collect();
        ParkingPair::from_images(pi, &images)
    }

    /// Left action: images are pushed forward by `s`.
    pub fn act(&self, s: &Permutation) -> Self {
        let images: Vec<Vec<usize>> = self
            .images()
            .iter()
            .map(|img| img.iter().map(|&y| s.apply(y)).collect())
            .collect();
        ParkingPair::from_images(self.pi.clone(), &images).expect("action preserves validity")
    }

    /// The unique element below `self` whose partition is `coarser`.
    pub fn descend(&self, coarser: &NoncrossingPartition) -> Result<Self> {
        if !coarser.is_below(&self.pi) {
            return Err(Error::Precondition(format!(
                "{coarser} is not below {}",
                self.pi
            )));
        }
        let images: Vec<Vec<usize>> = coarser
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&x| self.sigma.apply(x)).collect())
            .collect();
        ParkingPair::from_images(coarser.clone(), &images)
    }

    /// Parking word: letter `j` is the minimum of the block whose image holds `j`.
    pub fn to_word(&self) -> Vec<usize> {
        let inv = self.sigma.inverse();
        let idx = self.pi.block_index();
        (1..=self.n())
            .map(|j| self.pi.blocks()[idx[inv.apply(j) - 1]][0])
            .collect()
    }

    /// Parking tree by decomposition along the arches of the block holding 1.
    pub fn to_tree(&self) -> PlaneTree {
        self.interval_tree(1, self.n())
    }

    /// Tree of the restriction to `[lo, hi]`, which must be a union of blocks.
    pub fn interval_tree(&self, lo: usize, hi: usize) -> PlaneTree {
        if lo > hi {
            return PlaneTree::leaf();
        }
        let block = self.pi.block_of(lo);
        let mut children: Vec<PlaneTree> = block
            .windows(2)
            .map(|w| self.interval_tree(w[0] + 1, w[1] - 1))
            .collect();
        children.push(self.interval_tree(block[block.len() - 1] + 1, hi));
        PlaneTree::node(block.iter().map(|&x| self.sigma.apply(x)).collect(), children)
    }

    /// Inverse of [`to_tree`](Self::to_tree).
    pub fn from_tree(tree: &PlaneTree) -> Result<Self> {
        let n = tree.ground_size();
        tree.validate(n, 1)?;
        let mut blocks = Vec::new();
        let mut sigma = vec![0; n];
        fn place(t: &PlaneTree, lo: usize, blocks: &mut Vec<Vec<usize>>, sigma: &mut [usize]) -> usize {
            if t.is_leaf() {
                return lo;
            }
            let mut block = Vec::with_capacity(t.label.len());
            let mut pos = lo;
            for (j, child) in t.children.iter().enumerate() {
                block.push(pos);
                sigma[pos - 1] = t.label[j];
                pos = place(child, pos + 1, blocks, sigma);
            }
            blocks.push(block);
            pos
        }
        place(tree, 1, &mut blocks, &mut sigma);
        let pi = NoncrossingPartition::new(n, blocks)?;
        ParkingPair::new(pi, Permutation::new(sigma)?)
    }

    /// 1 and `n` lie in the same block.
    pub fn is_prime(&self) -> bool {
        let n = self.n();
        n == 1 || self.pi.block_of(1).contains(&n)
    }

    pub fn block_mask_of(&self, i: usize) -> u32 {
        elements_mask(self.pi.block_of(i))
    }
}

impl fmt::Display for ParkingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.pi, self.sigma)
    }
}
