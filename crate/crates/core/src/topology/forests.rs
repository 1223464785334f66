use serde::{Deserialize, Serialize};

use super::ChainComplex;
use crate::error::{guard, invalid, Result};
use crate::nc::NoncrossingPartition;

pub const MAX_FOREST_N: usize = 7;

/// Edge `{i, j}` with `i < j`.
pub type Edge = (usize, usize);

/// Whether two edges may coexist: no `i < k ≤ j < l` in either order.
pub fn compatible(a: Edge, b: Edge) -> bool {
    let bad = |(i, j): Edge, (k, l): Edge| i < k && k <= j && j < l;
    !bad(a, b) && !bad(b, a)
}

/// A noncrossing alternating forest on `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlternatingForest {
    pub n: usize,
    pub edges: Vec<Edge>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl AlternatingForest {
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        for &(i, j) in &edges {
            if !(1 <= i && i < j && j <= n) {
                return Err(invalid("forest", format!("bad edge ({i},{j})")));
            }
        }
        for (x, &a) in edges.iter().enumerate() {
            if let Some(&b) = edges[x + 1..].iter().find(|&&b| !compatible(a, b)) {
                return Err(invalid("forest", format!("edges {a:?} and {b:?} are not allowed together")));
            }
        }
        let mut parent: Vec<usize> = (0..=n).collect();
        for &(i, j) in &edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a == b {
                return Err(invalid("forest", "edges contain a cycle"));
            }
            parent[a] = b;
        }
        Ok(AlternatingForest { n, edges })
    }

    /// Connected components as a noncrossing partition.
    pub fn underline(&self) -> NoncrossingPartition {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        for &(i, j) in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
        let labels: Vec<usize> = (1..=self.n).map(|i| find(&mut parent, i)).collect();
        let blocks = group_by_label(&labels);
        NoncrossingPartition::new(self.n, blocks).expect("components of a noncrossing forest")
    }
}

fn group_by_label(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        match blocks.iter_mut().find(|(x, _)| *x == l) {
            Some((_, b)) => b.push(i + 1),
            None => blocks.push((l, vec![i + 1])),
        }
    }
    blocks.into_iter().map(|(_, b)| b).collect()
}

/// A simplicial complex given by all of its faces, each a sorted vertex list.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    pub faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(mut faces: Vec<Vec<usize>>) -> Result<Self> {
        faces.iter_mut().for_each(|f| f.sort_unstable());
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces.dedup();
        let set: std::collections::HashSet<&Vec<usize>> = faces.iter().collect();
        for f in &faces {
            for i in 0..f.len() {
                let mut g = f.clone();
                g.remove(i);
                if !set.contains(&g) {
                    return Err(invalid("complex", format!("face {f:?} misses its face {g:?}")));
                }
            }
        }
        if !faces.first().is_some_and(|f| f.is_empty()) {
            return Err(invalid("complex", "the empty face is missing"));
        }
        Ok(SimplicialComplex { faces })
    }

    pub fn facets(&self) -> Vec<&Vec<usize>> {
        let set: std::collections::HashSet<&Vec<usize>> = self.faces.iter().collect();
        let vertices: std::collections::BTreeSet<usize> = self.faces.iter().flatten().copied().collect();
        self.faces
            .iter()
            .filter(|f| {
                !vertices.iter().any(|v| {
                    if f.contains(v) {
                        return false;
                    }
                    let mut g = (*f).clone();
                    g.push(*v);
                    g.sort_unstable();
                    set.contains(&g)
                })
            })
            .collect()
    }

    /// Faces by dimension, starting at the empty face.
    pub fn by_dimension(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); top + 1];
        for f in &self.faces {
            out[f.len()].push(f.clone());
        }
        out
    }

    pub fn chain_complex(&self) -> ChainComplex {
        ChainComplex::from_simplices(&self.by_dimension())
    }

    pub fn subcomplex(&self, keep: impl Fn(&[usize]) -> bool) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.faces.iter().filter(|f| keep(f)).cloned().collect())
    }
}

/// The complex of noncrossing alternating forests. Vertices index the
/// returned edge list.
pub fn alternating_forests(n: usize) -> Result<(Vec<Edge>, Vec<AlternatingForest>, SimplicialComplex)> {
    guard("alternating forests", n, MAX_FOREST_N)?;
    let edges: Vec<Edge> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut faces = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(edges: &[Edge], n: usize, start: usize, cur: &mut Vec<usize>, faces: &mut Vec<Vec<usize>>) {
        faces.push(cur.clone());
        for e in start..edges.len() {
            if cur.iter().all(|&c| compatible(edges[c], edges[e])) {
                cur.push(e);
                let chosen: Vec<Edge> = cur.iter().map(|&c| edges[c]).collect();
                if AlternatingForest::new(n, chosen).is_ok() {
                    rec(edges, n, e + 1, cur, faces);
                }
                cur.pop();
            }
        }
    }
    rec(&edges, n, 0, &mut cur, &mut faces);
    let complex = SimplicialComplex::new(faces)?;
    let forests = complex
        .faces
        .iter()
        .map(|f| AlternatingForest::new(n, f.iter().map(|&e| edges[e]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok((edges, forests, complex))
}

/// Faces not containing the edge `{1, n}`.
pub fn alternating_forests_boundary(n: usize) -> Result<SimplicialComplex> {
    let (edges, _, complex) = alternating_forests(n)?;
    let apex = edges.iter().position(|&e| e == (1, n));
    complex.subcomplex(|f| apex.is_none_or(|a| !f.contains(&a)))
}
