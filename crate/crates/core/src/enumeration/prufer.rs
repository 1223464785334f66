//! Prüfer-type codes of `k`-trees: a vertex partition, the set of used
//! half-edges and a permutation of their numbers.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::parking::PlaneTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PruferCode {
    pub k: usize,
    /// Labels of the nonempty nodes, sorted by their minimum.
    pub vertices: Vec<Vec<usize>>,
    /// Global ids (from 1) of the half-edges carrying a nonempty child.
    /// Half-edges are numbered vertex by vertex, then slot by slot.
    pub used: Vec<usize>,
    /// A permutation of `1..=used.len()`; letters refer to positions in `used`.
    pub word: Vec<usize>,
}

fn offsets(vertices: &[Vec<usize>], k: usize) -> Vec<usize> {
    let mut off = Vec::with_capacity(vertices.len());
    let mut acc = 0;
    for v in vertices {
        off.push(acc);
        acc += k * v.len();
    }
    off
}

/// Deletes the smallest leaf repeatedly, recording the number of the
/// half-edge it hung from.
pub fn ktree_code(t: &PlaneTree, k: usize) -> Result<PruferCode> {
    if t.is_leaf() {
        return Err(invalid("tree", "empty tree"));
    }
    let mut nodes: Vec<&PlaneTree> = Vec::new();
    t.walk(&mut |s| {
        if !s.is_leaf() {
            nodes.push(s);
        }
    });
    nodes.sort_by_key(|s| s.label[0]);
    let vertices: Vec<Vec<usize>> = nodes.iter().map(|s| s.label.clone()).collect();
    let id_of = |s: &PlaneTree| vertices.iter().position(|v| *v == s.label).expect("node");
    let off = offsets(&vertices, k);
    let m = vertices.len();
    let mut parent_edge = vec![None; m];
    let mut live_children = vec![0usize; m];
    for (v, s) in nodes.iter().enumerate() {
        if s.children.len() != k * s.label.len() {
            return Err(invalid("tree", format!("node {:?} has the wrong arity", s.label)));
        }
        for (slot, c) in s.children.iter().enumerate() {
            if !c.is_leaf() {
                parent_edge[id_of(c)] = Some((v, off[v] + slot + 1));
                live_children[v] += 1;
            }
        }
    }
    let mut used: Vec<usize> = parent_edge.iter().flatten().map(|&(_, h)| h).collect();
    used.sort_unstable();
    let number = |h: usize| used.binary_search(&h).expect("used") + 1;
    let mut alive = vec![true; m];
    let mut word = Vec::with_capacity(m.saturating_sub(1));
    for _ in 1..m {
        let leaf = (0..m)
            .find(|&v| alive[v] && live_children[v] == 0 && parent_edge[v].is_some())
            .expect("a tree with two nodes has a non-root leaf");
        let (p, h) = parent_edge[leaf].expect("non-root");
        word.push(number(h));
        alive[leaf] = false;
        live_children[p] -= 1;
    }
    Ok(PruferCode {
        k,
        vertices,
        used,
        word,
    })
}

/// Rebuilds the tree by grafting the available tree with the smallest root
/// onto the half-edge named by the next letter.
pub fn code_to_ktree(code: &PruferCode) -> Result<PlaneTree> {
    let k = code.k;
    let vs = &code.vertices;
    let bad = |r: String| invalid("code", r);
    if vs.is_empty() || vs.iter().any(|v| v.is_empty()) {
        return Err(bad("vertices must be nonempty".into()));
    }
    if vs.windows(2).any(|w| w[0][0] >= w[1][0]) {
        return Err(bad("vertices must be sorted by minimum".into()));
    }
    let m = vs.len();
    let ell = m - 1;
    let total: usize = vs.iter().map(|v| k * v.len()).sum();
    if code.used.len() != ell || code.word.len() != ell {
        return Err(bad(format!("expected {ell} used half-edges and letters")));
    }
    if code.used.windows(2).any(|w| w[0] >= w[1]) || code.used.iter().any(|&h| h == 0 || h > total) {
        return Err(bad("used half-edges must be increasing ids in range".into()));
    }
    let mut seen = vec![false; ell + 1];
    for &x in &code.word {
        if x == 0 || x > ell || std::mem::replace(&mut seen[x], true) {
            return Err(bad("word is not a permutation".into()));
        }
    }
    let off = offsets(vs, k);
    let owner = |h: usize| {
        let v = off.iter().rposition(|&o| o < h).expect("in range");
        (v, h - 1 - off[v])
    };
    // position in the word of each numbered half-edge
    let mut pending = vec![0usize; m];
    for &x in &code.word {
        pending[owner(code.used[x - 1]).0] += 1;
    }
    let mut parent: Vec<Option<usize>> = vec![None; m];
    let mut slots: Vec<Vec<Option<usize>>> = vs.iter().map(|v| vec![None; k * v.len()]).collect();
    let root_of = |parent: &[Option<usize>], mut v: usize| {
        while let Some(p) = parent[v] {
            v = p;
        }
        v
    };
    let comp_pending = |parent: &[Option<usize>], pending: &[usize], r: usize| {
        (0..m).filter(|&v| root_of(parent, v) == r).map(|v| pending[v]).sum::<usize>()
    };
    let mut available: Vec<usize> = (0..m).filter(|&v| pending[v] == 0).collect();
    for &x in &code.word {
        available.sort_unstable();
        if available.is_empty() {
            return Err(bad("no tree available to graft".into()));
        }
        let t0 = available.remove(0);
        let (v, slot) = owner(code.used[x - 1]);
        if root_of(&parent, v) == t0 {
            return Err(bad("grafting would close a cycle".into()));
        }
        slots[v][slot] = Some(t0);
        parent[t0] = Some(v);
        pending[v] -= 1;
        let r = root_of(&parent, v);
        if comp_pending(&parent, &pending, r) == 0 {
            available.push(r);
        }
    }
    let roots: Vec<usize> = (0..m).filter(|&v| parent[v].is_none()).collect();
    if roots.len() != 1 {
        return Err(bad("code does not describe a connected tree".into()));
    }
    fn build(v: usize, vs: &[Vec<usize>], slots: &[Vec<Option<usize>>]) -> PlaneTree {
        let children = slots[v]
            .iter()
            .map(|s| s.map_or_else(PlaneTree::leaf, |c| build(c, vs, slots)))
            .collect();
        PlaneTree::node(vs[v].clone(), children)
    }
    Ok(build(roots[0], vs, &slots))
}

/// Every code with `l + 1` vertices on `{1..n}`.
pub fn all_codes(n: usize, k: usize, l: usize) -> Result<Vec<PruferCode>> {
    crate::error::guard("code enumeration", n, 6)?;
    let parts: Vec<Vec<Vec<usize>>> = crate::nc::SetPartition::all(n)?
        .into_iter()
        .filter(|p| p.num_blocks() == l + 1)
        .map(|p| {
            let mut b = p.blocks().to_vec();
            b.sort_by_key(|x| x[0]);
            b
        })
        .collect();
    let total = k * n;
    let mut out = Vec::new();
    let subsets = subsets_of_size(total, l);
    let perms: Vec<Vec<usize>> = crate::nc::Permutation::all(l)
        .into_iter()
        .map(|p| (1..=l).map(|i| p.apply(i)).collect())
        .collect();
    for vs in &parts {
        for used in &subsets {
            for w in &perms {
                out.push(PruferCode {
                    k,
                    vertices: vs.clone(),
                    used: used.clone(),
                    word: w.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn subsets_of_size(total: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, total: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for h in start..=total {
            cur.push(h);
            rec(h + 1, total, size, cur, out);
            cur.pop();
        }
    }
    rec(1, total, size, &mut Vec::new(), &mut out);
    out
}
