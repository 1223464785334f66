//! Chain counts, generating series, `k`-parking objects and characters.

mod characters;
mod ktree;
mod prufer;
mod series;

pub use characters::*;
pub use ktree::*;
pub use prufer::*;
pub use series::*;

use serde::Serialize;

use crate::error::{guard, invalid, Result};
use crate::nc::{binomial, enumerate_noncrossing, factorial, fuss_catalan, stirling2};
use crate::parking::ParkingWord;
use crate::poset::FinitePoset;

/// `l! C(kn, l) S2(n, l+1)`: `k`-multichains whose top has rank `l`.
/// Negative `k` is allowed; `k = -1` gives Whitney numbers of the first kind.
pub fn chain_count_closed(n: usize, k: i64, l: usize) -> Result<i128> {
    if n == 0 || l >= n {
        return Err(invalid("rank", format!("l = {l} is outside 0..{n}")));
    }
    Ok(factorial(l as u32)
        * binomial(k as i128 * n as i128, l as u32)
        * stirling2(n as u32, l as u32 + 1))
}

/// `(-1)^l l! C(n+l-1, l) S2(n, l+1)`.
pub fn whitney_first_closed(n: usize, l: usize) -> Result<i128> {
    chain_count_closed(n, -1, l)
}

/// `(nk+1)^(n-1)`.
pub fn zeta_closed(n: usize, k: usize) -> i128 {
    ((n * k + 1) as i128).pow(n.saturating_sub(1) as u32)
}

/// All weakly increasing `k`-tuples of elements.
pub fn multichains(p: &FinitePoset, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(p: &FinitePoset, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let next: Vec<usize> = match cur.last() {
            None => (0..p.len()).collect(),
            Some(&x) => p.up_set(x).ones().collect(),
        };
        for y in next {
            cur.push(y);
            rec(p, k, cur, out);
            cur.pop();
        }
    }
    rec(p, k, &mut Vec::new(), &mut out);
    out
}

/// `k`-parking words of length `n`.
pub fn k_parking_words(n: usize, k: usize) -> Result<Vec<ParkingWord>> {
    guard("k-parking words", n * k.max(1), 12)?;
    guard("k-parking words", n, 7)?;
    let max = k * n.saturating_sub(1) + 1;
    let mut out = Vec::new();
    let mut w = vec![1usize; n];
    loop {
        let pw = ParkingWord(w.clone());
        if pw.is_k_parking(k) {
            out.push(pw);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if w[i] < max {
                w[i] += 1;
                break;
            }
            w[i] = 1;
        }
    }
}

/// Both sides of `Σ_π Π_{b ∈ K(π)} C^(k)_{|b|} · n!/Π_{b ∈ π} |b|! = (kn+1)^(n-1)`.
pub fn dimension_identity(n: usize, k: usize) -> Result<(i128, i128)> {
    let mut lhs = 0i128;
    for pi in enumerate_noncrossing(n)? {
        let weight: i128 = pi
            .kreweras()
            .blocks()
            .iter()
            .map(|b| fuss_catalan(b.len() as u32, k as i64))
            .product();
        let orbit = factorial(n as u32)
            / pi.blocks().iter().map(|b| factorial(b.len() as u32)).product::<i128>();
        lhs += weight * orbit;
    }
    Ok((lhs, zeta_closed(n, k)))
}

pub fn dimension_identity_check(n: usize, k: usize) -> Result<bool> {
    let (a, b) = dimension_identity(n, k)?;
    Ok(a == b)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCountRow {
    pub n: usize,
    pub k: i64,
    pub l: usize,
    pub closed: i128,
    pub oracle: Option<i128>,
    pub series: Option<i128>,
}
