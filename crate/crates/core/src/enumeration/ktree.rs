//! Bijection between `k`-trees and `k`-element multichains of parking pairs.

use crate::error::{invalid, Result};
use crate::parking::{ParkingPair, PlaneTree};
use crate::poset::pp_leq;

/// Number of internal nodes minus one.
pub fn nonempty_nodes(t: &PlaneTree) -> usize {
    t.internal_count()
}

/// The `i`-th parking tree of the chain of a `k`-tree: children of index
/// above `i` merge into their parent, the others in a brood are chained by
/// grafting onto rightmost leaves.
pub fn project(t: &PlaneTree, k: usize, i: usize) -> PlaneTree {
    if t.is_leaf() {
        return PlaneTree::leaf();
    }
    let mut label = t.label.clone();
    let mut children = Vec::new();
    expand(t, k, i, &mut label, &mut children);
    PlaneTree::node(label, children)
}

fn expand(t: &PlaneTree, k: usize, i: usize, label: &mut Vec<usize>, children: &mut Vec<PlaneTree>) {
    for brood in t.children.chunks(k) {
        let mut composite: Option<PlaneTree> = None;
        let mut merged = Vec::new();
        for (idx, c) in brood.iter().enumerate() {
            if c.is_leaf() {
                continue;
            }
            if idx < i {
                let p = project(c, k, i);
                match composite.as_mut() {
                    None => composite = Some(p),
                    Some(comp) => comp.graft_rightmost_leaf(p),
                }
            } else {
                merged.push(c);
            }
        }
        children.push(composite.unwrap_or_else(PlaneTree::leaf));
        for m in merged {
            label.extend_from_slice(&m.label);
            expand(m, k, i, label, children);
        }
    }
}

/// Φ: the multichain `φ_1 ≤ ... ≤ φ_k` of a `k`-tree on `{1..n}`.
pub fn ktree_to_chain(t: &PlaneTree, n: usize, k: usize) -> Result<Vec<ParkingPair>> {
    t.validate(n, k)?;
    (1..=k)
        .map(|i| ParkingPair::from_tree(&project(t, k, i)))
        .collect()
}

/// Arena copy of a parking tree, internal nodes only.
struct Arena {
    label: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    /// for each node, its children slots (internal node id or a leaf)
    slots: Vec<Vec<Option<usize>>>,
}

impl Arena {
    fn new(t: &PlaneTree) -> Self {
        let mut a = Arena {
            label: Vec::new(),
            parent: Vec::new(),
            slots: Vec::new(),
        };
        a.add(t, None);
        a
    }

    fn add(&mut self, t: &PlaneTree, parent: Option<usize>) -> Option<usize> {
        if t.is_leaf() {
            return None;
        }
        let id = self.label.len();
        self.label.push(t.label.clone());
        self.parent.push(parent);
        self.slots.push(Vec::new());
        let s: Vec<Option<usize>> = t.children.iter().map(|c| self.add(c, Some(id))).collect();
        self.slots[id] = s;
        Some(id)
    }

    fn ancestors(&self, mut d: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while let Some(p) = self.parent[d] {
            out.push(p);
            d = p;
        }
        out
    }

    /// Slot of `anc` whose subtree contains `d`.
    fn slot_towards(&self, anc: usize, d: usize) -> usize {
        let mut cur = d;
        loop {
            let p = self.parent[cur].expect("descendant");
            if p == anc {
                return self.slots[p].iter().position(|&s| s == Some(cur)).expect("child");
            }
            cur = p;
        }
    }
}

/// Ψ: the `k`-tree of a multichain `φ_1 ≤ ... ≤ φ_k`.
pub fn chain_to_ktree(chain: &[ParkingPair]) -> Result<PlaneTree> {
    let k = chain.len();
    if k == 0 {
        return Err(invalid("chain", "empty chain"));
    }
    let n = chain[0].n();
    for w in chain.windows(2) {
        if !pp_leq(&w[0], &w[1])? {
            return Err(invalid("chain", format!("{} is not below {}", w[0], w[1])));
        }
    }
    let top = Arena::new(&chain[k - 1].to_tree());
    // tree labels are images of blocks: record which vertex holds each value
    let vertex_of: Vec<Vec<usize>> = chain
        .iter()
        .map(|p| {
            let mut v = vec![0; n + 1];
            for (b, img) in p.images().iter().enumerate() {
                img.iter().for_each(|&j| v[j] = b);
            }
            v
        })
        .collect();
    let together = |t: usize, a: usize, b: usize| {
        vertex_of[t][top.label[a][0]] == vertex_of[t][top.label[b][0]]
    };
    // T-parent, brood and index of every non-root node
    let nodes = top.label.len();
    let mut placed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
    for d in 1..nodes {
        let mut best: Option<(usize, usize)> = None;
        for a in top.ancestors(d) {
            let last = (0..k - 1).rev().find(|&t| together(t, a, d)).map_or(0, |t| t + 1);
            // ancestors come deepest first, so keep the first maximum
            if best.is_none_or(|(_, l)| last > l) {
                best = Some((a, last));
            }
        }
        let (p, last) = best.expect("non-root node has an ancestor");
        let brood = top.slot_towards(p, d);
        placed[p].push((brood * k + last, d));
    }
    fn build(id: usize, top: &Arena, placed: &[Vec<(usize, usize)>], k: usize) -> PlaneTree {
        let mut children = vec![PlaneTree::leaf(); k * top.label[id].len()];
        for &(pos, d) in &placed[id] {
            children[pos] = build(d, top, placed, k);
        }
        PlaneTree::node(top.label[id].clone(), children)
    }
    let t = build(0, &top, &placed, k);
    t.validate(n, k)?;
    Ok(t)
}
