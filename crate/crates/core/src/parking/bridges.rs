//! Side views of parking trees: nilpotent partial functions, right combs,
//! orbit representatives and right-branch lengths.

use serde::{Deserialize, Serialize};

use super::{ParkingPair, ParkingWord, PlaneTree};
use crate::error::{invalid, Result};
use crate::nc::NoncrossingPartition;

/// A partial function on `{1..n}`; `None` marks undefined points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentFunction(pub Vec<Option<usize>>);

/// An ordered sequence of nonempty disjoint sets covering `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedSetComposition(pub Vec<Vec<usize>>);

impl OrderedSetComposition {
    pub fn n(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }
}

/// Each element of a non-root node maps to the element of its parent that
/// owns the edge it hangs from (the `j`-th child edge belongs to the `j`-th
/// smallest label).
pub fn nilpotent_function_view(tree: &PlaneTree) -> Result<NilpotentFunction> {
    let n = tree.ground_size();
    tree.validate(n, 1)?;
    let mut f = vec![None; n];
    fn rec(t: &PlaneTree, f: &mut [Option<usize>]) {
        for (a, child) in t.label.iter().zip(&t.children) {
            for &x in &child.label {
                f[x - 1] = Some(*a);
            }
            rec(child, f);
        }
    }
    rec(tree, &mut f);
    Ok(NilpotentFunction(f))
}

/// Inverse of [`nilpotent_function_view`]; fails on non-nilpotent input.
pub fn tree_from_nilpotent(f: &NilpotentFunction) -> Result<PlaneTree> {
    let n = f.0.len();
    let pre = |a: Option<usize>| -> Vec<usize> {
        (1..=n).filter(|&x| f.0[x - 1] == a).collect()
    };
    if let Some(&Some(bad)) = f.0.iter().find(|v| matches!(v, Some(y) if *y == 0 || *y > n)) {
        return Err(invalid("partial function", format!("value {bad} out of range")));
    }
    let root = pre(None);
    if root.is_empty() {
        return Err(invalid("partial function", "defined everywhere, hence not nilpotent"));
    }
    let mut reached = 0;
    fn build(label: Vec<usize>, pre: &dyn Fn(Option<usize>) -> Vec<usize>, reached: &mut usize) -> PlaneTree {
        *reached += label.len();
        let children = label
            .iter()
            .map(|&a| {
                let p = pre(Some(a));
                if p.is_empty() {
                    PlaneTree::leaf()
                } else {
                    build(p, pre, reached)
                }
            })
            .collect();
        PlaneTree::node(label, children)
    }
    let t = build(root, &pre, &mut reached);
    if reached != n {
        return Err(invalid("partial function", "has a cycle, hence not nilpotent"));
    }
    Ok(t)
}

/// Right comb to the labels read down its right branch.
pub fn right_comb_bridge(tree: &PlaneTree) -> Result<OrderedSetComposition> {
    if !tree.is_right_comb() {
        return Err(invalid("tree", format!("{tree} is not a right comb")));
    }
    Ok(OrderedSetComposition(tree.right_branch_labels()))
}

pub fn composition_from_right_comb(tree: &PlaneTree) -> Result<OrderedSetComposition> {
    right_comb_bridge(tree)
}

/// Inverse of [`right_comb_bridge`], built through the interval partition
/// whose `i`-th block is sent onto the `i`-th set.
pub fn right_comb_from_composition(c: &OrderedSetComposition) -> Result<PlaneTree> {
    let n = c.n();
    let mut blocks = Vec::new();
    let mut next = 1;
    for part in &c.0 {
        if part.is_empty() {
            return Err(invalid("composition", "empty part"));
        }
        blocks.push((next..next + part.len()).collect::<Vec<_>>());
        next += part.len();
    }
    let pi = NoncrossingPartition::new(n, blocks)?;
    Ok(ParkingPair::from_images(pi, &c.0)?.to_tree())
}

/// A word is a chosen orbit representative when `w_i <= i` for all `i` and
/// it is lexicographically largest among such rearrangements.
pub fn orbit_representative_check(w: &ParkingWord) -> bool {
    let ok = |v: &[usize]| v.iter().enumerate().all(|(i, &x)| x >= 1 && x <= i + 1);
    if !ok(&w.0) {
        return false;
    }
    let mut cur = w.0.clone();
    cur.sort_unstable();
    loop {
        if ok(&cur) && cur > w.0 {
            return false;
        }
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return true;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// For each Kreweras block `b`, the tree of the part under `b` has a right
/// branch of `|b| - 1` nodes.
pub fn right_branch_check(p: &ParkingPair) -> bool {
    p.pi().kreweras().blocks().iter().all(|b| {
        let t = p.interval_tree(b[0], b[b.len() - 1] - 1);
        t.right_branch_len() + 1 == b.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_example() {
        let t = PlaneTree::from_word(&[1, 1, 2], 1).unwrap();
        let f = nilpotent_function_view(&t).unwrap();
        assert_eq!(f.0, vec![None, None, Some(1)]);
        assert_eq!(tree_from_nilpotent(&f).unwrap(), t);
        assert!(tree_from_nilpotent(&NilpotentFunction(vec![Some(2), Some(1)])).is_err());
    }

    #[test]
    fn right_comb_round_trip() {
        let c = OrderedSetComposition(vec![vec![2, 3], vec![1]]);
        let t = right_comb_from_composition(&c).unwrap();
        assert!(t.is_right_comb());
        assert_eq!(right_comb_bridge(&t).unwrap(), c);
    }
}
