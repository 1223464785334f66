use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite ranked poset with precomputed reachability and covers.
///
/// Elements are indices `0..len()`; `labels` is only used for export.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

#[derive(Serialize)]
struct PosetJson<'a> {
    n: usize,
    elements: &'a [String],
    ranks: &'a [usize],
    covers: Vec<[usize; 2]>,
}

impl FinitePoset {
    /// Builds the poset of `labels.len()` elements ordered by `leq`.
    pub fn from_leq(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let m = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..m {
                if leq(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// Builds the poset from its up-sets, checking the axioms.
    pub fn from_up_sets(labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Self> {
        let m = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            if !up[i].contains(i) {
                return Err(Error::NotAPartialOrder(format!("{} is not reflexive", labels[i])));
            }
            for j in up[i].ones() {
                down[j].insert(i);
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "{} and {} are mutually below each other",
                        labels[i], labels[j]
                    )));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "transitivity fails above {} and {}",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let mut upper = vec![Vec::new(); m];
        let mut lower = vec![Vec::new(); m];
        for i in 0..m {
            for j in up[i].ones() {
                if j == i {
                    continue;
                }
                if between_count(&up[i], &down[j]) == 2 {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        // linear extension by size of the down-set
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| down[i].count_ones(..));
        let mut rank = vec![0usize; m];
        for &j in &order {
            rank[j] = lower[j].iter().map(|&i| rank[i] + 1).max().unwrap_or(0);
        }
        for j in 0..m {
            if let Some(&i) = lower[j].iter().find(|&&i| rank[i] + 1 != rank[j]) {
                return Err(Error::NotRanked(format!(
                    "cover {} < {} skips a rank",
                    labels[i], labels[j]
                )));
            }
        }
        let min_ranks: Vec<usize> = (0..m).filter(|&i| lower[i].is_empty()).collect();
        if let Some(&i) = min_ranks.iter().find(|&&i| rank[i] != 0) {
            return Err(Error::NotRanked(format!("minimal {} has positive rank", labels[i])));
        }
        Ok(FinitePoset {
            labels,
            up,
            down,
            upper,
            lower,
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up[i].contains(j)
    }

    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn covers(&self) -> Vec<[usize; 2]> {
        (0..self.len())
            .flat_map(|i| self.upper[i].iter().map(move |&j| [i, j]))
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lower[i].is_empty()).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper[i].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal()[..] {
            [b] => Some(b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal()[..] {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Number of elements of each rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.max_rank() + 1];
        for &r in &self.rank {
            c[r] += 1;
        }
        c
    }

    /// Indices sorted by rank, a linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.rank[i], i));
        order
    }

    /// `μ(x, y)` for every `y`, zero when `y` is not above `x`.
    pub fn mobius_from(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        for y in self.linear_extension() {
            if !self.leq(x, y) {
                continue;
            }
            if y == x {
                mu[y] = 1;
                continue;
            }
            let mut s = 0;
            for z in self.down[y].ones() {
                if z != y && self.leq(x, z) {
                    s += mu[z];
                }
            }
            mu[y] = -s;
        }
        mu
    }

    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        self.mobius_from(x)[y]
    }

    /// For each `y`, the number of multichains `x_1 ≤ ... ≤ x_k = y`.
    pub fn multichains_ending_at(&self, k: usize) -> Vec<u128> {
        let mut c = vec![1u128; self.len()];
        for _ in 1..k {
            let next: Vec<u128> = (0..self.len())
                .map(|y| self.down[y].ones().map(|x| c[x]).sum())
                .collect();
            c = next;
        }
        if k == 0 {
            return vec![0; self.len()];
        }
        c
    }

    /// Number of multichains `x_1 ≤ ... ≤ x_k`.
    pub fn zeta_count(&self, k: usize) -> u128 {
        if k == 0 {
            return 1;
        }
        self.multichains_ending_at(k).iter().sum()
    }

    /// Number of `k`-multichains whose top element has rank `l`.
    pub fn multichains_by_top_rank(&self, k: usize) -> Vec<u128> {
        let mut by = vec![0u128; self.max_rank() + 1];
        for (y, c) in self.multichains_ending_at(k).into_iter().enumerate() {
            by[self.rank[y]] += c;
        }
        by
    }

    pub fn whitney_second(&self, l: usize) -> usize {
        self.rank.iter().filter(|&&r| r == l).count()
    }

    /// Sum of `μ(0̂, x)` over elements of rank `l`.
    pub fn whitney_first(&self, l: usize) -> Result<i64> {
        let b = self
            .bottom()
            .ok_or_else(|| Error::Precondition("poset has no minimum".into()))?;
        let mu = self.mobius_from(b);
        Ok((0..self.len()).filter(|&i| self.rank[i] == l).map(|i| mu[i]).sum())
    }

    /// All maximal chains, each listed upward.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(p: &FinitePoset, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *cur.last().expect("nonempty");
            if p.upper[last].is_empty() {
                out.push(cur.clone());
                return;
            }
            for &j in &p.upper[last] {
                cur.push(j);
                rec(p, cur, out);
                cur.pop();
            }
        }
        for m in self.minimal() {
            cur.push(m);
            rec(self, &mut cur, &mut out);
            cur.pop();
        }
        out
    }

    /// Induced subposet on `keep`, in the given order.
    pub fn subposet(&self, keep: &[usize]) -> Result<FinitePoset> {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        FinitePoset::from_leq(labels, |a, b| self.leq(keep[a], keep[b]))
    }

    /// Closed interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> Result<(FinitePoset, Vec<usize>)> {
        let keep: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        Ok((self.subposet(&keep)?, keep))
    }

    /// Copy with a new maximum adjoined as the last element.
    pub fn with_top(&self, label: &str) -> Result<FinitePoset> {
        let m = self.len();
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        FinitePoset::from_leq(labels, |a, b| b == m || (a < m && self.leq(a, b)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PosetJson {
            n: self.len(),
            elements: &self.labels,
            ranks: &self.rank,
            covers: self.covers(),
        })
        .expect("serializable")
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", l.replace('"', "\\\"")));
        }
        for [i, j] in self.covers() {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

// size of the closed interval, stopping early past 2
fn between_count(a: &FixedBitSet, b: &FixedBitSet) -> u32 {
    let mut c = 0;
    for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
        c += (x & y).count_ones();
        if c > 2 {
            break;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(k: usize) -> FinitePoset {
        let m = 1usize << k;
        FinitePoset::from_leq((0..m).map(|i| i.to_string()).collect(), |a, b| a & b == a).unwrap()
    }

    #[test]
    fn boolean_lattice() {
        let b = boolean(3);
        assert_eq!(b.rank_counts(), vec![1, 3, 3, 1]);
        assert_eq!(b.mobius(0, 7), -1);
        assert_eq!(b.maximal_chains().len(), 6);
        assert_eq!(b.zeta_count(2), 27);
        assert_eq!(b.whitney_first(2).unwrap(), 3);
    }

    #[test]
    fn rejects_cycles_and_unranked() {
        let r = FinitePoset::from_leq(vec!["a".into(), "b".into()], |_, _| true);
        assert!(r.is_err());
        // a < c, a < b < d, c < d: not graded
        let labels: Vec<String> = ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
        let rel = [(0, 1), (1, 3), (0, 3), (3, 4), (0, 2), (2, 4), (0, 4), (1, 4)];
        let r = FinitePoset::from_leq(labels, |a, b| a == b || rel.contains(&(a, b)));
        assert!(matches!(r, Err(Error::NotRanked(_))));
    }
}
