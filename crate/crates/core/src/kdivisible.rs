//! `k`-divisible noncrossing partitions and 2-partitions.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{guard, Error, Result};
use crate::enumeration::{chain_to_ktree, k_parking_words};
use crate::nc::{enumerate_noncrossing, integer_partitions, permutation_of_type, NoncrossingPartition, Permutation};
use crate::parking::{all_pairs, ParkingPair, ParkingWord};
use crate::poset::{nc_poset, pp_leq, FinitePoset, ParkingPoset};
use crate::topology::{character_table, cycle_type_label, signed_power, CharacterRow};

/// A multichain `π_1 ≤ ... ≤ π_k` of noncrossing partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KChainNC(pub Vec<NoncrossingPartition>);

impl KChainNC {
    /// `K(π_{i-1}, π_i)` for each `i`, with `π_0` the one-block partition.
    pub fn relative_complements(&self) -> Vec<NoncrossingPartition> {
        let n = self.0[0].n();
        let mut prev = NoncrossingPartition::bottom(n);
        self.0
            .iter()
            .map(|p| {
                let r = prev.relative_kreweras(p).expect("multichain");
                prev = p.clone();
                r
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.0.last().expect("nonempty").rank()
    }

    /// Prime when its coarsest partition has `1` and `n` in one block.
    pub fn is_prime(&self) -> bool {
        let p = &self.0[0];
        p.block_of(1).contains(&p.n())
    }
}

impl std::fmt::Display for KChainNC {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" <= "))
    }
}

/// A multichain `φ_1 ≤ ... ≤ φ_k` of parking pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KChainPP(pub Vec<ParkingPair>);

impl KChainPP {
    pub fn partitions(&self) -> KChainNC {
        KChainNC(self.0.iter().map(|p| p.pi().clone()).collect())
    }

    pub fn top(&self) -> &ParkingPair {
        self.0.last().expect("nonempty")
    }

    pub fn rank_of_top(&self) -> usize {
        self.top().rank()
    }

    /// `(π_1, ..., π_k)` and the top pair, which determine the chain.
    pub fn compact(&self) -> (Vec<NoncrossingPartition>, ParkingPair) {
        (self.partitions().0, self.top().clone())
    }

    /// Rebuilds the chain from its compact form by descending from the top.
    pub fn from_compact(pis: &[NoncrossingPartition], top: &ParkingPair) -> Result<Self> {
        pis.iter()
            .map(|p| top.descend(p))
            .collect::<Result<Vec<_>>>()
            .map(KChainPP)
    }

    pub fn act(&self, s: &Permutation) -> Self {
        KChainPP(self.0.iter().map(|p| p.act(s)).collect())
    }

    /// Prime when its smallest element is prime.
    pub fn is_prime(&self) -> bool {
        self.0[0].is_prime()
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    guard("k-divisible size", n, 4)?;
    guard("k-divisible multiplicity", k, 3)?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    Ok(())
}

fn nc_multichains(ncs: &[NoncrossingPartition], k: usize) -> Vec<KChainNC> {
    let mut out = Vec::new();
    fn rec(ncs: &[NoncrossingPartition], k: usize, cur: &mut Vec<NoncrossingPartition>, out: &mut Vec<KChainNC>) {
        if cur.len() == k {
            out.push(KChainNC(cur.clone()));
            return;
        }
        for p in ncs {
            if cur.last().is_none_or(|l| l.is_below(p)) {
                cur.push(p.clone());
                rec(ncs, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(ncs, k, &mut Vec::new(), &mut out);
    out
}

/// `π ≤ τ` iff `K(π_{i-1}, π_i)` refines `K(τ_{i-1}, τ_i)` for all `i`.
fn complements_leq(a: &[NoncrossingPartition], b: &[NoncrossingPartition]) -> bool {
    a.iter().zip(b).all(|(x, y)| y.is_below(x))
}

/// The poset `NC_n^(k)`.
pub fn build_nc_k(n: usize, k: usize) -> Result<(Vec<KChainNC>, FinitePoset)> {
    check_nk(n, k)?;
    let ncs = enumerate_noncrossing(n)?;
    let mut chains = nc_multichains(&ncs, k);
    chains.sort_by_key(|c| c.rank());
    let comps: Vec<Vec<NoncrossingPartition>> = chains.iter().map(|c| c.relative_complements()).collect();
    let labels = chains.iter().map(|c| c.to_string()).collect();
    let p = FinitePoset::from_leq(labels, |i, j| complements_leq(&comps[i], &comps[j]))?;
    Ok((chains, p))
}

/// The poset of `k`-multichains of parking pairs.
pub struct PPk {
    pub n: usize,
    pub k: usize,
    pub elements: Vec<KChainPP>,
    pub index: HashMap<KChainPP, usize>,
    pub poset: FinitePoset,
}

pub fn build_pp_k(n: usize, k: usize) -> Result<PPk> {
    check_nk(n, k)?;
    let base = ParkingPoset::build(n)?;
    let mut elements: Vec<KChainPP> = crate::enumeration::multichains(base.poset(), k)
        .into_iter()
        .map(|c| KChainPP(c.into_iter().map(|i| base.element(i).clone()).collect()))
        .collect();
    elements.sort_by_key(|c| (c.top().rank(), c.clone()));
    let comps: Vec<Vec<NoncrossingPartition>> =
        elements.iter().map(|c| c.partitions().relative_complements()).collect();
    let tops: Vec<usize> = elements
        .iter()
        .map(|c| base.index_of(c.top()).expect("element"))
        .collect();
    let labels = elements
        .iter()
        .map(|c| {
            c.0.iter()
                .map(|p| ParkingWord(p.to_word()).to_string())
                .collect::<Vec<_>>()
                .join("<=")
        })
        .collect();
    let poset = FinitePoset::from_leq(labels, |i, j| {
        complements_leq(&comps[i], &comps[j]) && base.poset().leq(tops[i], tops[j])
    })?;
    let index = elements.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    Ok(PPk {
        n,
        k,
        elements,
        index,
        poset,
    })
}

impl PPk {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn action(&self, s: &Permutation) -> Vec<usize> {
        self.elements.iter().map(|c| self.index[&c.act(s)]).collect()
    }

    pub fn primes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.elements[i].is_prime()).collect()
    }

    /// Number of `σ`-fixed prime elements.
    pub fn fixed_primes(&self, s: &Permutation) -> usize {
        let img = self.action(s);
        self.primes().into_iter().filter(|&i| img[i] == i).count()
    }

    /// Character table of the top homology of the proper part.
    pub fn character_table(&self) -> Result<Vec<CharacterRow>> {
        character_table(
            self.n,
            &self.poset,
            (self.k * self.n) as i64 - 1,
            |s| self.action(s),
            |s| Ok(self.fixed_primes(s) as i64),
        )
    }
}

/// Which ambient poset a divisibility subposet lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ambient {
    Nc,
    Pp,
}

fn divisible(p: &NoncrossingPartition, k: usize) -> bool {
    p.blocks().iter().all(|b| b.len() % k == 0)
}

/// Elements of `NC_{kn}` (or of the 2-partitions of size `kn`) whose blocks
/// all have size divisible by `k`, with the induced order.
pub fn edelman_divisible(n: usize, k: usize, which: Ambient) -> Result<(Vec<String>, FinitePoset)> {
    match which {
        Ambient::Nc => {
            guard("divisible subposet of NC", n * k, 8)?;
            let (ncs, p) = nc_poset(n * k)?;
            let keep: Vec<usize> = (0..ncs.len()).filter(|&i| divisible(&ncs[i], k)).collect();
            let sub = p.subposet(&keep)?;
            Ok((keep.iter().map(|&i| ncs[i].to_string()).collect(), sub))
        }
        Ambient::Pp => {
            guard("divisible subposet of 2-partitions", n * k, 6)?;
            let pairs: Vec<ParkingPair> = all_pairs(n * k)?
                .into_iter()
                .filter(|p| divisible(p.pi(), k))
                .collect();
            let labels: Vec<String> = pairs.iter().map(|p| ParkingWord(p.to_word()).to_string()).collect();
            let sub = FinitePoset::from_leq(labels.clone(), |i, j| {
                pp_leq(&pairs[i], &pairs[j]).expect("same size")
            })?;
            Ok((labels, sub))
        }
    }
}

/// Fixed-point counts of the prime filter for one cycle type.
#[derive(Clone, Debug, Serialize)]
pub struct KPrimeRow {
    pub cycle_type: String,
    pub fixed_primes: usize,
    pub fixed_prime_words: usize,
    pub fixed_prime_tops: usize,
    pub formula: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KPrimeReport {
    pub n: usize,
    pub k: usize,
    pub primes: usize,
    pub prime_tops: usize,
    /// Chains with a prime top are exactly those whose word has a prime top.
    pub top_criteria_agree: bool,
    pub rows: Vec<KPrimeRow>,
}

impl KPrimeReport {
    pub fn holds(&self) -> bool {
        self.top_criteria_agree && self.rows.iter().all(|r| r.matches)
    }
}

/// Primes of `Π²ₙ^(k)` (smallest element prime) with fixed-point counts,
/// compared against `(kn-1)^(z-1)` and against prime words.
pub fn k_prime_filter(pk: &PPk) -> Result<KPrimeReport> {
    let (n, k) = (pk.n, pk.k);
    let primes = pk.primes();
    let tops: Vec<usize> = (0..pk.len()).filter(|&i| pk.elements[i].top().is_prime()).collect();
    let mut top_criteria_agree = true;
    for c in &pk.elements {
        let w = ParkingWord(chain_to_ktree(&c.0)?.to_word());
        top_criteria_agree &= c.top().is_prime() == w.has_prime_top(k);
    }
    let words: Vec<ParkingWord> = k_parking_words(n, k)?
        .into_iter()
        .filter(|w| w.is_k_prime(k))
        .collect();
    let mut rows = Vec::new();
    for parts in integer_partitions(n) {
        let s = permutation_of_type(&parts);
        let img = pk.action(&s);
        let fixed_primes = primes.iter().filter(|&&i| img[i] == i).count();
        let fixed_prime_tops = tops.iter().filter(|&&i| img[i] == i).count();
        let fixed_prime_words = words.iter().filter(|w| w.act(&s) == **w).count();
        let formula = signed_power(n, parts.len(), (k * n) as i64 - 1).unsigned_abs() as usize;
        rows.push(KPrimeRow {
            cycle_type: cycle_type_label(&parts),
            fixed_primes,
            fixed_prime_words,
            fixed_prime_tops,
            formula,
            matches: fixed_primes == formula && fixed_prime_words == formula,
        });
    }
    Ok(KPrimeReport {
        n,
        k,
        primes: primes.len(),
        prime_tops: tops.len(),
        top_criteria_agree,
        rows,
    })
}
