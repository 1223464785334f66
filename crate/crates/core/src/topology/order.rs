use serde::Serialize;

use super::ChainComplex;
use crate::error::{guard, Error, Result};
use crate::nc::{catalan, enumerate_noncrossing, factorial, integer_partitions, permutation_of_type};
use crate::poset::{FinitePoset, ParkingPoset};

pub const MAX_ORDER_COMPLEX: usize = 1500;

/// Order complex of the proper part of a poset: the bottom is removed, and
/// the top too when there is one.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    /// Indices (in the original poset) of the proper part.
    pub elements: Vec<usize>,
    /// `simplices[m + 1]`: strict chains with `m + 1` elements, listed upward.
    pub simplices: Vec<Vec<Vec<usize>>>,
    pub complex: ChainComplex,
}

pub fn order_complex(p: &FinitePoset) -> Result<OrderComplex> {
    guard("order complex", p.len(), MAX_ORDER_COMPLEX)?;
    let bottom = p
        .bottom()
        .ok_or_else(|| Error::Precondition("poset has no minimum to remove".into()))?;
    let top = if p.len() > 1 { p.top() } else { None };
    let elements: Vec<usize> = (0..p.len())
        .filter(|&i| i != bottom && Some(i) != top)
        .collect();
    let mut keep = vec![false; p.len()];
    elements.iter().for_each(|&i| keep[i] = true);
    let mut simplices: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    fn rec(p: &FinitePoset, keep: &[bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if out.len() <= cur.len() {
            out.push(Vec::new());
        }
        out[cur.len()].push(cur.clone());
        let last = *cur.last().expect("nonempty");
        for y in p.up_set(last).ones() {
            if y != last && keep[y] {
                cur.push(y);
                rec(p, keep, cur, out);
                cur.pop();
            }
        }
    }
    for &e in &elements {
        rec(p, &keep, &mut vec![e], &mut simplices);
    }
    for level in simplices.iter_mut() {
        level.sort();
    }
    let complex = ChainComplex::from_simplices(&simplices);
    Ok(OrderComplex {
        elements,
        simplices,
        complex,
    })
}

impl OrderComplex {
    pub fn homology_ranks(&self) -> Vec<usize> {
        self.complex.homology_ranks()
    }

    /// `Σ_m (-1)^m #{fixed m-simplices}` for an order automorphism given
    /// as an image table on the poset's indices.
    pub fn lefschetz_number(&self, image: &[usize]) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, level)| {
                let fixed = level.iter().filter(|s| s.iter().all(|&x| image[x] == x)).count() as i64;
                if d % 2 == 1 {
                    fixed
                } else {
                    -fixed
                }
            })
            .sum()
    }
}

/// The degree in which the homology lives, when it is concentrated.
pub fn concentrated_degree(ranks: &[usize]) -> Result<i64> {
    let nonzero: Vec<usize> = (0..ranks.len()).filter(|&d| ranks[d] != 0).collect();
    match nonzero[..] {
        [d] => Ok(d as i64 - 1),
        _ => Err(Error::NotConcentrated(ranks.to_vec())),
    }
}

/// Character of the only nonzero homology group at the given automorphism,
/// read off the Hopf trace formula.
pub fn lefschetz_character(oc: &OrderComplex, ranks: &[usize], image: &[usize]) -> Result<i64> {
    let d = concentrated_degree(ranks)?;
    let l = oc.lefschetz_number(image);
    Ok(if d % 2 == 0 { l } else { -l })
}

/// Cycle type written as `2.1`.
pub fn cycle_type_label(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(".")
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterRow {
    pub cycle_type: String,
    pub value: i64,
    pub formula: i64,
    /// `Sign(σ)` times the number of fixed prime elements.
    pub sign_times_prime: i64,
    pub matches: bool,
}

/// `(-1)^(n-z) (base)^(z-1)`.
pub fn signed_power(n: usize, z: usize, base: i64) -> i64 {
    let sign = if (n - z).is_multiple_of(2) { 1 } else { -1 };
    sign * base.pow(z as u32 - 1)
}

/// Character table of the top homology of the proper part of the poset.
/// `base` is the expected `(n-1)` (or `kn-1`), `image_of` gives the action
/// of a permutation on indices and `prime_fixed` counts fixed primes.
pub fn character_table(
    n: usize,
    p: &FinitePoset,
    base: i64,
    image_of: impl Fn(&crate::nc::Permutation) -> Vec<usize>,
    prime_fixed: impl Fn(&crate::nc::Permutation) -> Result<i64>,
) -> Result<Vec<CharacterRow>> {
    let oc = order_complex(p)?;
    let ranks = oc.homology_ranks();
    let mut rows = Vec::new();
    for parts in integer_partitions(n) {
        let s = permutation_of_type(&parts);
        let img = image_of(&s);
        let value = lefschetz_character(&oc, &ranks, &img)?;
        let z = parts.len();
        let formula = signed_power(n, z, base);
        let sign = if (n - z).is_multiple_of(2) { 1 } else { -1 };
        let sign_times_prime = sign * prime_fixed(&s)?;
        rows.push(CharacterRow {
            cycle_type: cycle_type_label(&parts),
            value,
            formula,
            sign_times_prime,
            matches: value == formula && value == sign_times_prime,
        });
    }
    Ok(rows)
}

/// Character table of the proper part of the 2-partition poset.
pub fn pp_character_table(pp: &ParkingPoset) -> Result<Vec<CharacterRow>> {
    let n = pp.n();
    character_table(
        n,
        pp.poset(),
        n as i64 - 1,
        |s| pp.action(s),
        |s| {
            let img = pp.action(s);
            Ok((0..pp.len())
                .filter(|&i| img[i] == i && pp.element(i).is_prime())
                .count() as i64)
        },
    )
}

/// `dim W_l = Σ_{rk π = l} Π_{b ∈ K(π)} C_{|b|-1} · n!/Π_{b ∈ π} |b|!`.
pub fn whitney_module_dims(n: usize) -> Result<Vec<i128>> {
    guard("Whitney modules", n, 8)?;
    let mut dims = vec![0i128; n];
    for pi in enumerate_noncrossing(n)? {
        let mobius: i128 = pi
            .kreweras()
            .blocks()
            .iter()
            .map(|b| catalan(b.len() as u32 - 1))
            .product();
        let orbit = factorial(n as u32)
            / pi.blocks().iter().map(|b| factorial(b.len() as u32)).product::<i128>();
        dims[pi.rank()] += mobius * orbit;
    }
    Ok(dims)
}

/// `(-1)^(n-1) Σ (-1)^l dim W_l`.
pub fn whitney_alternating_sum(n: usize) -> Result<i128> {
    let dims = whitney_module_dims(n)?;
    let s: i128 = dims
        .iter()
        .enumerate()
        .map(|(l, d)| if l % 2 == 0 { *d } else { -d })
        .sum();
    Ok(if (n - 1).is_multiple_of(2) { s } else { -s })
}
