use serde::Serialize;

use super::{FinitePoset, ParkingPoset};
use crate::error::{guard, Error, Result};
use crate::parking::{right_comb_bridge, OrderedSetComposition};

/// All ordered set compositions of `{1..n}`.
pub fn ordered_set_compositions(n: usize) -> Vec<OrderedSetComposition> {
    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let mut out = Vec::new();
    fn rec(rest: u32, cur: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedSetComposition>) {
        if rest == 0 {
            out.push(OrderedSetComposition(cur.clone()));
            return;
        }
        let mut sub = rest;
        while sub != 0 {
            cur.push(crate::nc::mask_elements(sub));
            rec(rest & !sub, cur, out);
            cur.pop();
            sub = (sub - 1) & rest;
        }
    }
    rec(full, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `a ≤ b` when `a` is obtained from `b` by merging runs of consecutive sets.
pub fn composition_leq(a: &OrderedSetComposition, b: &OrderedSetComposition) -> bool {
    let mut it = b.0.iter();
    for part in &a.0 {
        let mut acc: Vec<usize> = Vec::new();
        while acc.len() < part.len() {
            match it.next() {
                Some(p) => acc.extend_from_slice(p),
                None => return false,
            }
        }
        acc.sort_unstable();
        if acc != *part {
            return false;
        }
    }
    it.next().is_none()
}

/// Face poset of the permutahedron as ordered set compositions.
pub fn permutahedron_faces(n: usize) -> Result<(Vec<OrderedSetComposition>, FinitePoset)> {
    guard("permutahedron", n, 5)?;
    let mut comps = ordered_set_compositions(n);
    comps.sort_by_key(|c| c.0.len());
    let labels = comps
        .iter()
        .map(|c| {
            let parts: Vec<String> = c
                .0
                .iter()
                .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                .collect();
            parts.join("|")
        })
        .collect();
    let poset = FinitePoset::from_leq(labels, |i, j| composition_leq(&comps[i], &comps[j]))?;
    Ok((comps, poset))
}

/// An explicit isomorphism between the right-comb elements of the
/// 2-partition poset and the face poset of the permutahedron.
#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismWitness {
    pub n: usize,
    /// (parking word of the element, image composition)
    pub map: Vec<(Vec<usize>, OrderedSetComposition)>,
    pub size: usize,
    pub bijective: bool,
    pub order_preserving: bool,
    pub order_reflecting: bool,
    pub rank_preserving: bool,
}

impl IsomorphismWitness {
    pub fn holds(&self) -> bool {
        self.bijective && self.order_preserving && self.order_reflecting && self.rank_preserving
    }
}

/// Indices of right-comb elements (interval partitions) of `pp`.
pub fn right_comb_elements(pp: &ParkingPoset) -> Vec<usize> {
    (0..pp.len())
        .filter(|&i| pp.element(i).pi().is_interval_partition())
        .collect()
}

pub fn permutahedron_isomorphism(pp: &ParkingPoset) -> Result<IsomorphismWitness> {
    let n = pp.n();
    let keep = right_comb_elements(pp);
    let (comps, faces) = permutahedron_faces(n)?;
    let mut image = Vec::with_capacity(keep.len());
    for &i in &keep {
        let c = right_comb_bridge(&pp.element(i).to_tree())?;
        let j = comps
            .iter()
            .position(|x| *x == c)
            .ok_or_else(|| Error::Precondition(format!("{c:?} is not a face")))?;
        image.push(j);
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = sorted.len() == image.len() && image.len() == comps.len();
    let mut preserving = true;
    let mut reflecting = true;
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            let lhs = pp.poset().leq(i, j);
            let rhs = faces.leq(image[a], image[b]);
            preserving &= !lhs || rhs;
            reflecting &= !rhs || lhs;
        }
    }
    let rank_preserving = keep
        .iter()
        .zip(&image)
        .all(|(&i, &j)| pp.poset().rank(i) == faces.rank(j));
    Ok(IsomorphismWitness {
        n,
        map: keep
            .iter()
            .zip(&image)
            .map(|(&i, &j)| (pp.element(i).to_word(), comps[j].clone()))
            .collect(),
        size: keep.len(),
        bijective,
        order_preserving: preserving,
        order_reflecting: reflecting,
        rank_preserving,
    })
}
