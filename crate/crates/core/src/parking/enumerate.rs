//! Independent enumerations of each representation.

use std::collections::HashMap;

use super::{ParkingPair, ParkingTriple, ParkingWord, PlaneTree};
use crate::error::{guard, Result};
use crate::nc::{enumerate_noncrossing, mask_elements, SetPartition};

const MAX_N: usize = 7;

/// Number of words in `{1..n}^n` that are parking, by brute force.
pub fn parking_word_count(n: usize) -> Result<usize> {
    Ok(all_parking_words(n)?.len())
}

/// All parking words of length `n`, filtered from all words.
pub fn all_parking_words(n: usize) -> Result<Vec<ParkingWord>> {
    guard("parking word enumeration", n, MAX_N)?;
    let mut out = Vec::new();
    let mut w = vec![1usize; n];
    loop {
        let pw = ParkingWord(w.clone());
        if pw.is_k_parking(1) {
            out.push(pw);
        }
        // odometer
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if w[i] < n {
                w[i] += 1;
                break;
            }
            w[i] = 1;
        }
    }
}

/// All pairs: noncrossing partitions with block images chosen in turn.
pub fn all_pairs(n: usize) -> Result<Vec<ParkingPair>> {
    guard("pair enumeration", n, MAX_N)?;
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for pi in enumerate_noncrossing(n)? {
        let sizes: Vec<usize> = pi.blocks().iter().map(Vec::len).collect();
        let mut chosen: Vec<u32> = Vec::new();
        fn rec(
            sizes: &[usize],
            free: u32,
            chosen: &mut Vec<u32>,
            emit: &mut dyn FnMut(&[u32]),
        ) {
            if chosen.len() == sizes.len() {
                emit(chosen);
                return;
            }
            let want = sizes[chosen.len()] as u32;
            let mut sub = free;
            loop {
                if sub.count_ones() == want {
                    chosen.push(sub);
                    rec(sizes, free & !sub, chosen, emit);
                    chosen.pop();
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        rec(&sizes, full, &mut chosen, &mut |imgs| {
            let images: Vec<Vec<usize>> = imgs.iter().map(|&m| mask_elements(m)).collect();
            out.push(ParkingPair::from_images(pi.clone(), &images).expect("valid images"));
        });
    }
    out.sort();
    Ok(out)
}

/// All triples: a noncrossing partition, any set partition, and every
/// size-preserving bijection between their blocks.
pub fn all_triples(n: usize) -> Result<Vec<ParkingTriple>> {
    guard("triple enumeration", n, MAX_N)?;
    let ncs = enumerate_noncrossing(n)?;
    let rhos = SetPartition::all(n)?;
    let mut out = Vec::new();
    for pi in &ncs {
        let mut sizes: Vec<usize> = pi.blocks().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        for rho in &rhos {
            let mut rs: Vec<usize> = rho.blocks().iter().map(Vec::len).collect();
            rs.sort_unstable();
            if rs != sizes {
                continue;
            }
            let mut used = vec![false; rho.num_blocks()];
            let mut pick: Vec<usize> = Vec::new();
            fn rec(
                pi: &crate::nc::NoncrossingPartition,
                rho: &SetPartition,
                used: &mut Vec<bool>,
                pick: &mut Vec<usize>,
                out: &mut Vec<ParkingTriple>,
            ) {
                let i = pick.len();
                if i == pi.num_blocks() {
                    let images = pick.iter().map(|&r| rho.blocks()[r].clone()).collect();
                    out.push(ParkingTriple::new(pi.clone(), images).expect("valid triple"));
                    return;
                }
                for r in 0..rho.num_blocks() {
                    if !used[r] && rho.blocks()[r].len() == pi.blocks()[i].len() {
                        used[r] = true;
                        pick.push(r);
                        rec(pi, rho, used, pick, out);
                        pick.pop();
                        used[r] = false;
                    }
                }
            }
            rec(pi, rho, &mut used, &mut pick, &mut out);
        }
    }
    Ok(out)
}

/// All parking trees on `{1..n}`.
pub fn all_parking_trees(n: usize) -> Result<Vec<PlaneTree>> {
    k_trees(n, 1)
}

/// All `k`-trees on `{1..n}`, built recursively from the root label.
pub fn k_trees(n: usize, k: usize) -> Result<Vec<PlaneTree>> {
    guard("tree enumeration", n * k.max(1), 12)?;
    guard("tree enumeration", n, MAX_N)?;
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut gen = TreeGen {
        k,
        trees: HashMap::new(),
        forests: HashMap::new(),
    };
    let mut out = gen.trees(full);
    out.sort();
    Ok(out)
}

struct TreeGen {
    k: usize,
    trees: HashMap<u32, Vec<PlaneTree>>,
    forests: HashMap<(u32, usize), Vec<Vec<PlaneTree>>>,
}

impl TreeGen {
    fn trees(&mut self, mask: u32) -> Vec<PlaneTree> {
        if mask == 0 {
            return vec![PlaneTree::leaf()];
        }
        if let Some(t) = self.trees.get(&mask) {
            return t.clone();
        }
        let mut out = Vec::new();
        let mut root = mask;
        while root != 0 {
            let label = mask_elements(root);
            for forest in self.forests(mask & !root, self.k * label.len()) {
                out.push(PlaneTree::node(label.clone(), forest));
            }
            root = (root - 1) & mask;
        }
        self.trees.insert(mask, out.clone());
        out
    }

    // ordered sequences of `slots` trees whose labels partition `mask`
    fn forests(&mut self, mask: u32, slots: usize) -> Vec<Vec<PlaneTree>> {
        if slots == 0 {
            return if mask == 0 { vec![vec![]] } else { vec![] };
        }
        if let Some(f) = self.forests.get(&(mask, slots)) {
            return f.clone();
        }
        let mut out = Vec::new();
        let mut first = mask;
        loop {
            let heads = self.trees(first);
            let tails = self.forests(mask & !first, slots - 1);
            for h in &heads {
                for t in &tails {
                    let mut f = Vec::with_capacity(slots);
                    f.push(h.clone());
                    f.extend(t.iter().cloned());
                    out.push(f);
                }
            }
            if first == 0 {
                break;
            }
            first = (first - 1) & mask;
        }
        self.forests.insert((mask, slots), out.clone());
        out
    }
}
