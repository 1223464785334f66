use serde::Serialize;

use super::{alternating_forests, AlternatingForest, SimplicialComplex};
use crate::error::{guard, invalid, Result};
use crate::parking::ParkingPair;
use crate::poset::{pp_leq, FinitePoset, ParkingPoset};

pub const MAX_CLUSTER_N: usize = 4;

/// Pairs `(f, φ)` with `K(f̲) = π_φ`, ordered componentwise.
pub struct ClusterComplex {
    pub n: usize,
    pub elements: Vec<(AlternatingForest, ParkingPair)>,
    pub poset: FinitePoset,
    /// For each element, the indices of the rank-one elements below it.
    pub supports: Vec<Vec<usize>>,
    pub complex: SimplicialComplex,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub n: usize,
    pub size: usize,
    pub whitney: Vec<usize>,
    pub boolean_ideals: bool,
    pub supports_injective: bool,
    pub homology: Vec<usize>,
}

pub fn cluster_complex(n: usize) -> Result<ClusterComplex> {
    guard("cluster complex", n, MAX_CLUSTER_N)?;
    let (_, forests, _) = alternating_forests(n)?;
    let pp = ParkingPoset::build(n)?;
    let mut elements = Vec::new();
    for f in &forests {
        let k = f.underline().kreweras();
        for phi in pp.elements() {
            if *phi.pi() == k {
                elements.push((f.clone(), phi.clone()));
            }
        }
    }
    elements.sort_by_key(|(f, phi)| (f.edges.len(), f.clone(), phi.to_word()));
    let labels = elements
        .iter()
        .map(|(f, phi)| {
            let e: Vec<String> = f.edges.iter().map(|(i, j)| format!("{i}{j}")).collect();
            format!("{{{}}};{}", e.join(","), crate::parking::ParkingWord(phi.to_word()))
        })
        .collect();
    let leq = |a: usize, b: usize| {
        let (fa, pa) = &elements[a];
        let (fb, pb) = &elements[b];
        fa.edges.iter().all(|e| fb.edges.contains(e)) && pp_leq(pa, pb).expect("same n")
    };
    let poset = FinitePoset::from_leq(labels, leq)?;
    let atoms: Vec<usize> = (0..poset.len()).filter(|&i| poset.rank(i) == 1).collect();
    let supports: Vec<Vec<usize>> = (0..poset.len())
        .map(|i| {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, &a)| poset.leq(a, i))
                .map(|(x, _)| x)
                .collect()
        })
        .collect();
    let complex = SimplicialComplex::new(supports.clone())
        .map_err(|e| invalid("cluster complex", format!("supports do not form a complex: {e}")))?;
    Ok(ClusterComplex {
        n,
        elements,
        poset,
        supports,
        complex,
    })
}

impl ClusterComplex {
    /// Every principal ideal is a boolean lattice of the right rank.
    pub fn boolean_ideals(&self) -> bool {
        (0..self.poset.len()).all(|i| {
            let r = self.poset.rank(i);
            self.supports[i].len() == r && self.poset.down_set(i).count_ones(..) == 1 << r
        })
    }

    pub fn supports_injective(&self) -> bool {
        let mut s = self.supports.clone();
        s.sort();
        s.dedup();
        s.len() == self.supports.len()
    }

    pub fn report(&self) -> ClusterReport {
        ClusterReport {
            n: self.n,
            size: self.poset.len(),
            whitney: self.poset.rank_counts(),
            boolean_ideals: self.boolean_ideals(),
            supports_injective: self.supports_injective(),
            homology: self.complex.chain_complex().homology_ranks(),
        }
    }
}
