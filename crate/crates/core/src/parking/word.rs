use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::nc::Permutation;

/// A word over positive integers, meant to be a (`k`-)parking word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParkingWord(pub Vec<usize>);

impl ParkingWord {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Sorted word bounded entrywise by `1, k+1, 2k+1, ...`.
    pub fn is_k_parking(&self, k: usize) -> bool {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.iter()
            .enumerate()
            .all(|(i, &v)| v >= 1 && v <= k * i + 1)
    }

    pub fn check(&self, k: usize) -> Result<()> {
        if self.is_k_parking(k) {
            Ok(())
        } else {
            Err(invalid("word", format!("{:?} is not {k}-parking", self.0)))
        }
    }

    /// `s · w` has letter `w[s⁻¹(j)]` at position `j`.
    pub fn act(&self, s: &Permutation) -> Self {
        let inv = s.inverse();
        ParkingWord((1..=self.n()).map(|j| self.0[inv.apply(j) - 1]).collect())
    }

    /// Prime words: more than `j` letters at most `kj`, for `0 < j < n`.
    /// There are `(kn-1)^(n-1)` of them; for `k = 1` this is the usual notion.
    pub fn is_k_prime(&self, k: usize) -> bool {
        let n = self.n();
        (1..n).all(|j| self.0.iter().filter(|&&v| v <= k * j).count() > j)
    }

    /// More than `j` letters at most `k(j-1)+1`, for `0 < j < n`. Under the
    /// tree bijection these are the words whose chain has a prime top.
    pub fn has_prime_top(&self, k: usize) -> bool {
        let n = self.n();
        (1..n).all(|j| self.0.iter().filter(|&&v| v <= k * (j - 1) + 1).count() > j)
    }

    /// Parses `"1325271"` (single digits) or a JSON array.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: Vec<usize> = serde_json::from_str(t)
                .map_err(|e| invalid("word", format!("bad JSON: {e}")))?;
            return Ok(ParkingWord(v));
        }
        t.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| invalid("word", format!("unexpected character {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ParkingWord)
    }
}

impl std::fmt::Display for ParkingWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.0.iter().any(|&v| v > 9) { " " } else { "" };
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_examples() {
        let s = Permutation::transposition(3, 1, 2);
        assert_eq!(ParkingWord(vec![1, 1, 2]).act(&s).0, vec![1, 1, 2]);
        assert_eq!(ParkingWord(vec![1, 2, 1]).act(&s).0, vec![2, 1, 1]);
    }

    #[test]
    fn parking_tests() {
        assert!(ParkingWord(vec![4, 1, 1, 1, 2, 7, 1, 2]).is_k_parking(1));
        assert!(!ParkingWord(vec![2, 2]).is_k_parking(1));
        assert!(ParkingWord(vec![1, 3, 5]).is_k_parking(2));
        assert!(!ParkingWord(vec![1, 3, 6]).is_k_parking(2));
        assert_eq!(ParkingWord::parse("1325271").unwrap().0, vec![1, 3, 2, 5, 2, 7, 1]);
        assert_eq!(ParkingWord::parse("[10, 1]").unwrap().0, vec![10, 1]);
    }
}
