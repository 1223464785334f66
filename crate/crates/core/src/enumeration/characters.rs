//! Character values of the parking representations and their fixed-point
//! oracles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{guard, invalid, Error, Result};
use crate::nc::Permutation;
use crate::poset::{FinitePoset, ParkingPoset};

use super::k_parking_words;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CharacterKind {
    /// `k`-multichains of parking pairs, or `k`-parking words
    ParkK,
    /// prime parking pairs
    ParkPrime,
    /// `k`-multichains whose smallest element is prime
    ParkPrimeK,
}

impl FromStr for CharacterKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "park_k" => Ok(CharacterKind::ParkK),
            "park_prime" => Ok(CharacterKind::ParkPrime),
            "park_prime_k" => Ok(CharacterKind::ParkPrimeK),
            _ => Err(invalid("character kind", format!("unknown kind {s:?}"))),
        }
    }
}

impl fmt::Display for CharacterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharacterKind::ParkK => "park_k",
            CharacterKind::ParkPrime => "park_prime",
            CharacterKind::ParkPrimeK => "park_prime_k",
        })
    }
}

/// `(kn+1)^(z-1)`, `(n-1)^(z-1)` or `(kn-1)^(z-1)` with `z` the number of cycles.
pub fn character_closed(kind: CharacterKind, n: usize, k: usize, sigma: &Permutation) -> i128 {
    let z = sigma.cycle_count() as u32;
    let base = match kind {
        CharacterKind::ParkK => (k * n + 1) as i128,
        CharacterKind::ParkPrime => n as i128 - 1,
        CharacterKind::ParkPrimeK => (k * n) as i128 - 1,
    };
    base.pow(z - 1)
}

/// Counts `σ`-fixed multichains in the poset; the fixed points form a subposet.
pub fn character_oracle(
    kind: CharacterKind,
    pp: &ParkingPoset,
    k: usize,
    sigma: &Permutation,
) -> Result<i128> {
    guard("character oracle", pp.n(), 5)?;
    let img = pp.action(sigma);
    let fixed: Vec<usize> = (0..pp.len()).filter(|&i| img[i] == i).collect();
    let sub = pp.poset().subposet(&fixed)?;
    let (k, prime_only) = match kind {
        CharacterKind::ParkK => (k, false),
        CharacterKind::ParkPrime => (1, true),
        CharacterKind::ParkPrimeK => (k, true),
    };
    let starts = multichains_starting_at(&sub, k);
    Ok(fixed
        .iter()
        .zip(starts)
        .filter(|(&i, _)| !prime_only || pp.element(i).is_prime())
        .map(|(_, c)| c as i128)
        .sum())
}

/// For each `x`, the number of multichains `x = x_1 ≤ ... ≤ x_k`.
pub fn multichains_starting_at(p: &FinitePoset, k: usize) -> Vec<u128> {
    if k == 0 {
        return vec![0; p.len()];
    }
    let mut c = vec![1u128; p.len()];
    for _ in 1..k {
        c = (0..p.len()).map(|x| p.up_set(x).ones().map(|y| c[y]).sum()).collect();
    }
    c
}

/// `σ`-fixed `k`-multichains whose largest element is prime.
pub fn prime_top_oracle(pp: &ParkingPoset, k: usize, sigma: &Permutation) -> Result<i128> {
    let img = pp.action(sigma);
    let fixed: Vec<usize> = (0..pp.len()).filter(|&i| img[i] == i).collect();
    let sub = pp.poset().subposet(&fixed)?;
    Ok(fixed
        .iter()
        .zip(sub.multichains_ending_at(k))
        .filter(|(&i, _)| pp.element(i).is_prime())
        .map(|(_, c)| c as i128)
        .sum())
}

/// Counts `σ`-fixed `k`-parking words (prime ones for the prime kinds).
pub fn character_word_oracle(
    kind: CharacterKind,
    n: usize,
    k: usize,
    sigma: &Permutation,
) -> Result<i128> {
    let k = if kind == CharacterKind::ParkPrime { 1 } else { k };
    let prime = kind != CharacterKind::ParkK;
    Ok(k_parking_words(n, k)?
        .iter()
        .filter(|w| (!prime || w.is_k_prime(k)) && w.act(sigma) == **w)
        .count() as i128)
}
