use serde::{Deserialize, Serialize};

use super::pair::ParkingPair;
use crate::error::{invalid, Error, Result};
use crate::nc::{
    lukasiewicz_decode, NoncrossingPartition, Permutation, SetPartition, WeakComposition,
};

/// A noncrossing partition, a set partition and a size-preserving bijection
/// between their blocks.
///
/// `images[i]` is the image of `pi.blocks()[i]`; `rho` is the partition the
/// images form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParkingTriple {
    pub pi: NoncrossingPartition,
    pub rho: SetPartition,
    pub images: Vec<Vec<usize>>,
}

impl ParkingTriple {
    pub fn new(pi: NoncrossingPartition, images: Vec<Vec<usize>>) -> Result<Self> {
        let mut images = images;
        for img in &mut images {
            img.sort_unstable();
        }
        let rho = SetPartition::new(pi.n(), images.clone())?;
        let t = ParkingTriple { pi, rho, images };
        t.check()?;
        Ok(t)
    }

    pub fn check(&self) -> Result<()> {
        let n = self.pi.n();
        if self.rho.n() != n {
            return Err(Error::SizeMismatch(n, self.rho.n()));
        }
        if self.images.len() != self.pi.num_blocks() {
            return Err(invalid("triple", "one image per block is required"));
        }
        for (b, img) in self.pi.blocks().iter().zip(&self.images) {
            if b.len() != img.len() {
                return Err(invalid(
                    "triple",
                    format!("block {b:?} is sent to {img:?} of another size"),
                ));
            }
        }
        let from_images = SetPartition::new(n, self.images.clone())
            .map_err(|e| invalid("triple", format!("images: {e}")))?;
        if from_images != self.rho {
            return Err(invalid("triple", "rho differs from the partition of images"));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn to_pair(&self) -> Result<ParkingPair> {
        self.check()?;
        ParkingPair::from_images(self.pi.clone(), &self.images)
    }

    pub fn from_pair(p: &ParkingPair) -> Self {
        ParkingTriple {
            pi: p.pi().clone(),
            rho: p.rho(),
            images: p.images(),
        }
    }

    /// Letter `j` is the minimum of the block whose image holds `j`.
    pub fn to_word(&self) -> Vec<usize> {
        let mut w = vec![0; self.n()];
        for (b, img) in self.pi.blocks().iter().zip(&self.images) {
            for &j in img {
                w[j - 1] = b[0];
            }
        }
        w
    }

    /// Positions of each letter give the block sizes at block minima.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &l) in word.iter().enumerate() {
            if l == 0 || l > n {
                return Err(invalid("word", format!("letter {l} outside 1..{n}")));
            }
            positions[l - 1].push(i + 1);
        }
        let comp = WeakComposition(positions.iter().map(Vec::len).collect());
        let pi = lukasiewicz_decode(&comp).map_err(|_| {
            invalid("word", format!("{word:?} is not a parking word"))
        })?;
        let images = pi.blocks().iter().map(|b| positions[b[0] - 1].clone()).collect();
        ParkingTriple::new(pi, images)
    }

    pub fn act(&self, s: &Permutation) -> Self {
        let images = self
            .images
            .iter()
            .map(|img| img.iter().map(|&y| s.apply(y)).collect())
            .collect();
        ParkingTriple::new(self.pi.clone(), images).expect("action preserves validity")
    }
}
