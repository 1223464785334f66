use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
///
/// Products are read right to left: `a.compose(&b)` applies `b` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The cyclic shift `1 -> 2 -> ... -> n -> 1`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation((1..=n).map(|i| i % n + 1).collect())
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(i - 1, j - 1);
        Permutation(w)
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut w: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for (idx, &a) in c.iter().enumerate() {
                if a == 0 || a > n || seen[a - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?}")));
                }
                seen[a - 1] = true;
                w[a - 1] = c[(idx + 1) % c.len()];
            }
        }
        Ok(Permutation(w))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&v| self.0[v - 1]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Cycles listed from their minimum, sorted by minimum. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut c = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Number of transpositions needed to write the permutation.
    pub fn absolute_length(&self) -> usize {
        self.n() - self.cycle_count()
    }

    /// The code read from the top: entry `n - i` is the number of `j < i`
    /// with `σ⁻¹(j) > σ⁻¹(i)`.
    pub fn code(&self) -> Vec<usize> {
        let n = self.n();
        let inv = self.inverse();
        let mut c = vec![0; n];
        for i in 1..=n {
            c[n - i] = (1..i).filter(|&j| inv.apply(j) > inv.apply(i)).count();
        }
        c
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { " " } else { "" };
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

/// Integer partitions of `n` as weakly decreasing part lists.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation with the given cycle type, cycles on consecutive integers.
pub fn permutation_of_type(cycle_type: &[usize]) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut cycles = Vec::new();
    let mut next = 1;
    for &len in cycle_type {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    Permutation::from_cycles(n, &cycles).expect("consecutive cycles")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn code_example() {
        assert_eq!(p(&[1, 5, 3, 2, 4]).code(), vec![3, 0, 1, 0, 0]);
        assert_eq!(Permutation::identity(4).code(), vec![0; 4]);
    }

    #[test]
    fn right_to_left_product() {
        // (123456)(12)(654) = (134)
        let c = Permutation::long_cycle(6);
        let t = Permutation::from_cycles(6, &[vec![1, 2]]).unwrap();
        let u = Permutation::from_cycles(6, &[vec![6, 5, 4]]).unwrap();
        let prod = c.compose(&t).compose(&u);
        assert_eq!(prod, Permutation::from_cycles(6, &[vec![1, 3, 4]]).unwrap());
    }

    #[test]
    fn all_and_inverse() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        for s in &all {
            assert!(s.compose(&s.inverse()).is_identity());
        }
        assert_eq!(integer_partitions(4).len(), 5);
        assert_eq!(permutation_of_type(&[2, 1]).cycle_type(), vec![2, 1]);
    }

    #[test]
    fn rejects_bad_words() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }
}
