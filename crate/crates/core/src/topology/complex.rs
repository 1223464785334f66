use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sparse integer matrix stored by rows.
pub type SparseRows = Vec<Vec<(usize, i64)>>;

/// Augmented chain complex: degree `m` is stored at index `m + 1`, so the
/// empty simplex sits in degree `-1`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `boundary[m + 1]` maps degree `m` to degree `m - 1`, one row per
    /// simplex of degree `m`; the entry for degree `-1` is empty.
    boundary: Vec<SparseRows>,
}

impl ChainComplex {
    /// Builds the complex of oriented simplices. `simplices[m + 1]` lists the
    /// simplices of dimension `m` as vertex sequences in their orientation
    /// order; every face must be listed.
    pub fn from_simplices(simplices: &[Vec<Vec<usize>>]) -> Self {
        let dims: Vec<usize> = simplices.iter().map(|s| s.len()).collect();
        let mut boundary = vec![Vec::new(); simplices.len()];
        for d in 1..simplices.len() {
            let index: HashMap<&[usize], usize> = simplices[d - 1]
                .iter()
                .enumerate()
                .map(|(i, s)| (s.as_slice(), i))
                .collect();
            boundary[d] = simplices[d]
                .iter()
                .map(|s| {
                    let mut row: Vec<(usize, i64)> = (0..s.len())
                        .map(|i| {
                            let mut f = s.clone();
                            f.remove(i);
                            let sign = if i % 2 == 0 { 1 } else { -1 };
                            (*index.get(f.as_slice()).expect("face is listed"), sign)
                        })
                        .collect();
                    row.sort_unstable();
                    row
                })
                .collect();
        }
        ChainComplex { dims, boundary }
    }

    /// Dimensions of the chain spaces from degree `-1` upward.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Highest degree with a nonzero chain space.
    pub fn top_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }

    pub fn boundary(&self, m: i64) -> &SparseRows {
        &self.boundary[(m + 1) as usize]
    }

    /// Whether every composite `∂∂` vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        for d in 2..self.boundary.len() {
            let upper = &self.boundary[d];
            let lower = &self.boundary[d - 1];
            for row in upper {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(c, v) in row {
                    for &(c2, v2) in &lower[c] {
                        *acc.entry(c2).or_default() += v * v2;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced Betti numbers over the rationals, from degree `-1` upward.
    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundary.iter().map(matrix_rank).collect();
        (0..self.dims.len())
            .map(|d| {
                let out = ranks[d];
                let inc = ranks.get(d + 1).copied().unwrap_or(0);
                self.dims[d] - out - inc
            })
            .collect()
    }

    /// `Σ (-1)^m dim C_m`, counting the empty simplex.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

fn normalize(row: &mut [(usize, BigInt)]) {
    let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if g > BigInt::from(1) {
        row.iter_mut().for_each(|(_, v)| *v /= &g);
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        row.iter_mut().for_each(|(_, v)| *v = -&*v);
    }
}

/// `a·r - b·p` on sorted sparse rows.
fn combine(r: &[(usize, BigInt)], a: &BigInt, p: &[(usize, BigInt)], b: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take = match (r.get(i), p.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        let (c, v) = match take {
            std::cmp::Ordering::Less => {
                i += 1;
                (r[i - 1].0, a * &r[i - 1].1)
            }
            std::cmp::Ordering::Greater => {
                j += 1;
                (p[j - 1].0, -(b * &p[j - 1].1))
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
                (r[i - 1].0, a * &r[i - 1].1 - b * &p[j - 1].1)
            }
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Exact rank over the rationals by fraction-free sparse elimination.
pub fn matrix_rank(rows: &SparseRows) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    let mut order: Vec<&Vec<(usize, i64)>> = rows.iter().collect();
    order.sort_by_key(|r| r.len());
    for row in order {
        let mut r: Vec<(usize, BigInt)> = row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect();
        normalize(&mut r);
        while let Some((lead, lv)) = r.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let pv = p[0].1.clone();
                    let g = pv.gcd(&lv);
                    r = combine(&r, &(&pv / &g), p, &(&lv / &g));
                    normalize(&mut r);
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}
