use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::nc::Permutation;

/// A plane tree whose internal nodes carry sets of integers.
///
/// Leaves have an empty label and no children. In a `k`-tree every internal
/// node with label `L` has exactly `k|L|` children, read as `|L|` broods of
/// `k` consecutive children. Parking trees are the case `k = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlaneTree {
    pub label: Vec<usize>,
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree {
            label: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn node(mut label: Vec<usize>, children: Vec<PlaneTree>) -> Self {
        label.sort_unstable();
        PlaneTree { label, children }
    }

    pub fn is_leaf(&self) -> bool {
        self.label.is_empty()
    }

    /// Sorted union of all labels.
    pub fn ground(&self) -> Vec<usize> {
        let mut g = Vec::new();
        self.walk(&mut |t| g.extend_from_slice(&t.label));
        g.sort_unstable();
        g
    }

    pub fn ground_size(&self) -> usize {
        let mut s = 0;
        self.walk(&mut |t| s += t.label.len());
        s
    }

    /// Number of internal (nonempty) nodes.
    pub fn internal_count(&self) -> usize {
        let mut s = 0;
        self.walk(&mut |t| s += usize::from(!t.is_leaf()));
        s
    }

    /// Prefix-order visit, leaves included.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a PlaneTree)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn validate(&self, n: usize, k: usize) -> Result<()> {
        if n > 0 && self.is_leaf() {
            return Err(invalid("tree", "root must be a nonempty node"));
        }
        let mut err = None;
        self.walk(&mut |t| {
            if err.is_some() {
                return;
            }
            if t.label.windows(2).any(|w| w[0] >= w[1]) {
                err = Some(format!("label {:?} is not strictly increasing", t.label));
            } else if t.children.len() != k * t.label.len() {
                err = Some(format!(
                    "node {:?} has {} children, expected {}",
                    t.label,
                    t.children.len(),
                    k * t.label.len()
                ));
            }
        });
        if let Some(e) = err {
            return Err(invalid("tree", e));
        }
        if self.ground() != (1..=n).collect::<Vec<_>>() {
            return Err(invalid("tree", format!("labels do not partition 1..{n}")));
        }
        Ok(())
    }

    /// Labels of all nodes in prefix order, leaves included.
    pub fn prefix_composition(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.walk(&mut |t| out.push(t.label.clone()));
        out
    }

    /// Rebuilds a `k`-tree from its prefix-order labels.
    ///
    /// Each new node becomes the next child of the deepest node on the
    /// current path that still has a free slot.
    pub fn from_composition(comp: &[Vec<usize>], k: usize) -> Result<PlaneTree> {
        let bad = |why: String| invalid("composition", why);
        if comp.is_empty() {
            return Err(bad("empty".into()));
        }
        let mut labels: Vec<Vec<usize>> = Vec::with_capacity(comp.len());
        let mut kids: Vec<Vec<usize>> = vec![Vec::new(); comp.len()];
        let mut open: Vec<(usize, usize)> = Vec::new();
        for (i, set) in comp.iter().enumerate() {
            let mut set = set.clone();
            set.sort_unstable();
            if i > 0 {
                let Some(top) = open.last_mut() else {
                    return Err(bad(format!("no free slot for entry {}", i + 1)));
                };
                kids[top.0].push(i);
                top.1 -= 1;
                if top.1 == 0 {
                    open.pop();
                }
            }
            if !set.is_empty() {
                open.push((i, k * set.len()));
            }
            labels.push(set);
            if i > 0 && open.is_empty() && i + 1 < comp.len() {
                return Err(bad(format!("tree closes before entry {}", i + 2)));
            }
        }
        if !open.is_empty() {
            return Err(bad("composition too short to fill every slot".into()));
        }
        fn build(i: usize, labels: &[Vec<usize>], kids: &[Vec<usize>]) -> PlaneTree {
            PlaneTree {
                label: labels[i].clone(),
                children: kids[i].iter().map(|&c| build(c, labels, kids)).collect(),
            }
        }
        Ok(build(0, &labels, &kids))
    }

    /// Word whose `j`-th letter is the prefix position of the node holding `j`.
    pub fn to_word(&self) -> Vec<usize> {
        let n = self.ground_size();
        let mut w = vec![0; n];
        for (pos, set) in self.prefix_composition().iter().enumerate() {
            for &x in set {
                w[x - 1] = pos + 1;
            }
        }
        w
    }

    pub fn from_word(word: &[usize], k: usize) -> Result<PlaneTree> {
        let n = word.len();
        let len = k * n + 1;
        let mut comp = vec![Vec::new(); len];
        for (i, &l) in word.iter().enumerate() {
            if l == 0 || l > len {
                return Err(invalid("word", format!("letter {l} outside 1..{len}")));
            }
            comp[l - 1].push(i + 1);
        }
        let t = PlaneTree::from_composition(&comp, k)?;
        t.validate(n, k)?;
        Ok(t)
    }

    pub fn relabel(&self, sigma: &Permutation) -> PlaneTree {
        PlaneTree::node(
            self.label.iter().map(|&x| sigma.apply(x)).collect(),
            self.children.iter().map(|c| c.relabel(sigma)).collect(),
        )
    }

    /// Replaces the rightmost leaf by `t` (or the tree itself if it is a leaf).
    pub fn graft_rightmost_leaf(&mut self, t: PlaneTree) {
        match self.children.last_mut() {
            Some(last) => last.graft_rightmost_leaf(t),
            None => *self = t,
        }
    }

    /// Internal nodes on the path following last children from the root.
    pub fn right_branch_len(&self) -> usize {
        let mut len = 0;
        let mut cur = self;
        while !cur.is_leaf() {
            len += 1;
            cur = cur.children.last().expect("internal node has children");
        }
        len
    }

    /// Every child other than a last child is a leaf.
    pub fn is_right_comb(&self) -> bool {
        if self.is_leaf() {
            return true;
        }
        let (last, rest) = self.children.split_last().expect("internal node");
        rest.iter().all(PlaneTree::is_leaf) && last.is_right_comb()
    }

    /// Labels along the right branch, from the root down.
    pub fn right_branch_labels(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = self;
        while !cur.is_leaf() {
            out.push(cur.label.clone());
            cur = cur.children.last().expect("internal node");
        }
        out
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            return write!(f, "·");
        }
        let l: Vec<String> = self.label.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", l.join(","))?;
        write!(f, "(")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_to_tree_example() {
        let t = PlaneTree::from_word(&[1, 3, 2, 5, 2, 7, 1], 1).unwrap();
        let comp: Vec<Vec<usize>> = t.prefix_composition();
        assert_eq!(
            comp,
            vec![
                vec![1, 7],
                vec![3, 5],
                vec![2],
                vec![],
                vec![4],
                vec![],
                vec![6],
                vec![]
            ]
        );
        assert_eq!(t.label, vec![1, 7]);
        assert_eq!(t.children[0].label, vec![3, 5]);
        assert_eq!(t.children[1].label, vec![6]);
        assert_eq!(t.children[0].children[0].label, vec![2]);
        assert_eq!(t.children[0].children[1].label, vec![4]);
        assert_eq!(t.to_word(), vec![1, 3, 2, 5, 2, 7, 1]);
    }

    #[test]
    fn non_parking_words_fail() {
        assert!(PlaneTree::from_word(&[2, 2], 1).is_err());
        assert!(PlaneTree::from_word(&[1, 3, 3], 1).is_err());
        assert!(PlaneTree::from_word(&[1, 3, 3], 2).is_ok());
    }
}
