//! Cover orders, the lexicographic order on maximal chains and checks of
//! the shellability argument and its supporting lemmas.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nc::{NoncrossingPartition, Permutation};
use crate::parking::{ParkingPair, ParkingWord};
use crate::poset::{
    eta_leq, nc_poset, pp_join, pp_lower_covers, pp_upper_covers, HatElement, ParkingPoset,
};

/// Edge label `(i, j)`, `i < j`, of a cover in the noncrossing partition lattice.
pub type EdgeLabel = (usize, usize);

/// The transposition `bar(lower)⁻¹ bar(upper)`, multiplied left to right.
pub fn el_label(lower: &NoncrossingPartition, upper: &NoncrossingPartition) -> Result<EdgeLabel> {
    let t = upper.bar().compose(&lower.bar().inverse());
    let moved: Vec<usize> = (1..=t.n()).filter(|&i| t.apply(i) != i).collect();
    match moved[..] {
        [i, j] if upper.rank() == lower.rank() + 1 && lower.is_below(upper) => Ok((i, j)),
        _ => Err(Error::NotACover(format!("{lower} -> {upper}"))),
    }
}

/// Sort key of a cover: the code of the upper element, then the edge label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CoverKey {
    pub code: Vec<usize>,
    pub label: EdgeLabel,
}

pub fn cover_key(lower: &ParkingPair, upper: &ParkingPair) -> Result<CoverKey> {
    if upper.rank() != lower.rank() + 1 || !eta_leq(&lower.eta(), &upper.eta()) {
        return Err(Error::NotACover(format!("{lower} -> {upper}")));
    }
    Ok(CoverKey {
        code: upper.code(),
        label: el_label(lower.pi(), upper.pi())?,
    })
}

/// Upper covers of `phi` in the hat poset, sorted by [`CoverKey`].
pub fn cover_order(phi: &ParkingPair) -> Result<Vec<HatElement>> {
    let ups = pp_upper_covers(phi)?;
    if ups == [HatElement::Top] {
        return Ok(ups);
    }
    let mut keyed: Vec<(CoverKey, HatElement)> = ups
        .into_iter()
        .map(|h| {
            let p = h.as_pair().expect("not top").clone();
            cover_key(phi, &p).map(|k| (k, h))
        })
        .collect::<Result<_>>()?;
    keyed.sort();
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::NotTotal(phi.to_string()));
    }
    Ok(keyed.into_iter().map(|(_, h)| h).collect())
}

/// `p0`: the number of leading zeros of the code.
pub fn p0(phi: &ParkingPair) -> usize {
    phi.code().iter().take_while(|&&c| c == 0).count()
}

/// `p0` read from eta: the largest `k` with `i` in its own eta set for all
/// `i > n - k`.
pub fn p0_via_eta(phi: &ParkingPair) -> usize {
    let eta = phi.eta();
    let n = phi.n();
    (1..=n)
        .rev()
        .take_while(|&i| eta[i - 1] >> (i - 1) & 1 == 1)
        .count()
}

/// The largest `i` where the code entry `c_i` grows, 0 when the permutations agree.
pub fn m_statistic(lower: &ParkingPair, upper: &ParkingPair) -> usize {
    if lower.sigma() == upper.sigma() {
        return 0;
    }
    let (a, b) = (lower.code(), upper.code());
    let n = a.len();
    (1..=n).rev().find(|&i| a[n - i] < b[n - i]).unwrap_or(0)
}

/// The block of `lower` that is split in the cover.
pub fn split_block(lower: &ParkingPair, upper: &ParkingPair) -> Result<Vec<usize>> {
    lower
        .pi()
        .blocks()
        .iter()
        .find(|b| !upper.pi().blocks().contains(b))
        .cloned()
        .ok_or_else(|| Error::NotACover(format!("{lower} -> {upper}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverStats {
    pub split_block: Vec<usize>,
    pub m: usize,
    pub p0_lower: usize,
    pub p0_upper: usize,
}

pub fn cover_stats(lower: &ParkingPair, upper: &ParkingPair) -> Result<CoverStats> {
    cover_key(lower, upper)?;
    Ok(CoverStats {
        split_block: split_block(lower, upper)?,
        m: m_statistic(lower, upper),
        p0_lower: p0(lower),
        p0_upper: p0(upper),
    })
}

/// Precomputed cover orders on the whole poset.
pub struct ShellingContext {
    pp: ParkingPoset,
    ordered_ups: Vec<Vec<usize>>,
    position: HashMap<(usize, usize), usize>,
}

impl ShellingContext {
    pub fn build(n: usize) -> Result<Self> {
        let pp = ParkingPoset::build(n)?;
        let mut ordered_ups = Vec::with_capacity(pp.len());
        let mut position = HashMap::new();
        for i in 0..pp.len() {
            let a = pp.element(i);
            let mut ups: Vec<(CoverKey, usize)> = pp
                .poset()
                .upper_covers(i)
                .iter()
                .map(|&j| cover_key(a, pp.element(j)).map(|k| (k, j)))
                .collect::<Result<_>>()?;
            ups.sort();
            if ups.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::NotTotal(a.to_string()));
            }
            for (pos, (_, j)) in ups.iter().enumerate() {
                position.insert((i, *j), pos);
            }
            ordered_ups.push(ups.into_iter().map(|(_, j)| j).collect());
        }
        Ok(ShellingContext {
            pp,
            ordered_ups,
            position,
        })
    }

    pub fn poset(&self) -> &ParkingPoset {
        &self.pp
    }

    pub fn n(&self) -> usize {
        self.pp.n()
    }

    /// Upper covers of element `i` inside the poset, in cover order.
    pub fn ordered_ups(&self, i: usize) -> &[usize] {
        &self.ordered_ups[i]
    }

    /// Whether `a` precedes `b` in the cover order of `x`.
    pub fn precedes(&self, x: usize, a: usize, b: usize) -> bool {
        self.position[&(x, a)] < self.position[&(x, b)]
    }

    /// Lexicographic comparison of maximal chains (listed without the top).
    pub fn lex_compare(&self, c1: &[usize], c2: &[usize]) -> Ordering {
        for j in 0..c1.len().min(c2.len()) {
            if c1[j] != c2[j] {
                let x = c1[j - 1];
                return self.position[&(x, c1[j])].cmp(&self.position[&(x, c2[j])]);
            }
        }
        Ordering::Equal
    }

    /// Maximal chains in lexicographic order.
    pub fn sorted_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = self.pp.poset().maximal_chains();
        chains.sort_by(|a, b| self.lex_compare(a, b));
        chains
    }
}

/// Outcome of the shelling check.
#[derive(Clone, Debug, Serialize)]
pub struct ShellingReport {
    pub n: usize,
    pub chains: usize,
    pub pairs_checked: u64,
    pub failures: Vec<(usize, usize)>,
    /// For each chain `p` (by sorted position), an earlier chain that differs
    /// from it in exactly one element, when one exists.
    pub witnesses: Vec<Option<usize>>,
    pub holds: bool,
}

/// Checks that for every `p' < p` there is `p'' < p` sharing all but one
/// element with `p` and containing `p' ∩ p`.
pub fn verify_shelling(n: usize) -> Result<ShellingReport> {
    let ctx = ShellingContext::build(n)?;
    Ok(verify_shelling_with(&ctx))
}

pub fn verify_shelling_with(ctx: &ShellingContext) -> ShellingReport {
    let n = ctx.n();
    let chains = ctx.sorted_chains();
    // chains as p_0..p_{n-1}; the top p_n is shared
    let mut groups: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for (t, c) in chains.iter().enumerate() {
        for r in 1..n {
            let mut key = c.clone();
            key[r] = usize::MAX;
            groups.entry((r, key)).or_default().push(t);
        }
    }
    // for each chain and position, an earlier chain differing only there
    let swaps: Vec<Vec<(usize, usize)>> = chains
        .par_iter()
        .enumerate()
        .map(|(t, c)| {
            let mut out = Vec::new();
            for r in 1..n {
                let mut key = c.clone();
                key[r] = usize::MAX;
                if let Some(&s) = groups[&(r, key)].iter().find(|&&s| s < t) {
                    out.push((r, s));
                }
            }
            out
        })
        .collect();
    let results: Vec<(u64, Vec<(usize, usize)>)> = (0..chains.len())
        .into_par_iter()
        .map(|t| {
            let p = &chains[t];
            let mut fails = Vec::new();
            for (s, q) in chains[..t].iter().enumerate() {
                let ok = swaps[t].iter().any(|&(r, w)| {
                    let shared = shared_count(&chains[w], p) + 1;
                    // `q ∩ p ⊆ w`: w only misses p_r, so q must miss it too
                    shared == n && q[r] != p[r]
                });
                if !ok {
                    fails.push((s, t));
                }
            }
            (t as u64, fails)
        })
        .collect();
    let pairs_checked = (chains.len() as u64) * (chains.len() as u64).saturating_sub(1) / 2;
    let failures: Vec<(usize, usize)> = results.into_iter().flat_map(|(_, f)| f).collect();
    ShellingReport {
        n,
        chains: chains.len(),
        pairs_checked,
        holds: failures.is_empty(),
        failures,
        witnesses: swaps.iter().map(|v| v.first().map(|&(_, s)| s)).collect(),
    }
}

fn shared_count(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x == y).count()
}

/// One quantified statement checked exhaustively.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl LemmaCheck {
    fn new(name: &str) -> Self {
        LemmaCheck {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KeyLemmaReport {
    pub n: usize,
    pub configurations: u64,
    pub via_lower_swap: u64,
    pub via_upper_swap: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl KeyLemmaReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// For `x ⋖ y ⋖ z` and `x ⋖ y'` with `y'` before `y`, finds either `y''`
/// before `y` with `x ⋖ y'' ⋖ z`, or `z'` before `z` with `y ⋖ z' ≤ y' ∨ z`.
pub fn verify_key_lemma(n: usize) -> Result<KeyLemmaReport> {
    let ctx = ShellingContext::build(n)?;
    Ok(verify_key_lemma_with(&ctx))
}

pub fn verify_key_lemma_with(ctx: &ShellingContext) -> KeyLemmaReport {
    let pp = ctx.poset();
    let p = pp.poset();
    let mut rep = KeyLemmaReport {
        n: ctx.n(),
        configurations: 0,
        via_lower_swap: 0,
        via_upper_swap: 0,
        failures: 0,
        first_failure: None,
    };
    let elem = |i: usize| HatElement::Elem(pp.element(i).clone());
    for x in 0..pp.len() {
        let ups = ctx.ordered_ups(x);
        for (yi, &y) in ups.iter().enumerate() {
            for &z in p.upper_covers(y) {
                for &y1 in &ups[..yi] {
                    rep.configurations += 1;
                    let lower = ups[..yi].iter().any(|&y2| p.lower_covers(z).contains(&y2));
                    if lower {
                        rep.via_lower_swap += 1;
                        continue;
                    }
                    let join = pp_join(&elem(y1), &elem(z)).expect("same n");
                    let upper = ctx.ordered_ups(y).iter().take_while(|&&z1| z1 != z).any(|&z1| {
                        match &join {
                            HatElement::Top => true,
                            HatElement::Elem(j) => eta_leq(pp.eta(z1), &j.eta()),
                        }
                    });
                    if upper {
                        rep.via_upper_swap += 1;
                    } else {
                        rep.failures += 1;
                        if rep.first_failure.is_none() {
                            rep.first_failure = Some(format!(
                                "x={} y={} z={} y'={}",
                                p.label(x),
                                p.label(y),
                                p.label(z),
                                p.label(y1)
                            ));
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Exhaustive checks of the lemmas the shelling argument relies on.
pub fn verify_support_lemmas(n: usize) -> Result<Vec<LemmaCheck>> {
    let ctx = ShellingContext::build(n)?;
    Ok(verify_support_lemmas_with(&ctx))
}

pub fn verify_support_lemmas_with(ctx: &ShellingContext) -> Vec<LemmaCheck> {
    let pp = ctx.poset();
    let p = pp.poset();
    let len = pp.len();
    let e = |i: usize| pp.element(i);
    let hat = |i: usize| HatElement::Elem(pp.element(i).clone());
    let word = |x: &ParkingPair| ParkingWord(x.to_word()).to_string();
    let codes: Vec<Vec<usize>> = (0..len).map(|i| e(i).code()).collect();
    let p0s: Vec<usize> = (0..len).map(|i| p0(e(i))).collect();

    let mut monotone = LemmaCheck::new("code is order preserving");
    let mut equal_code = LemmaCheck::new("equal codes join below the top with the same code");
    let mut p0_join = LemmaCheck::new("p0 of a join is the smaller p0");
    let mut p0_eta = LemmaCheck::new("p0 agrees with its eta description");
    for a in 0..len {
        p0_eta.record(p0s[a] == p0_via_eta(e(a)), || word(e(a)));
        for b in 0..len {
            if p.leq(a, b) {
                monotone.record(codes[a] <= codes[b], || format!("{} <= {}", word(e(a)), word(e(b))));
            }
            if b < a {
                continue;
            }
            let j = pp_join(&hat(a), &hat(b)).expect("same n");
            if codes[a] == codes[b] {
                let ok = matches!(&j, HatElement::Elem(c) if c.code() == codes[a]);
                equal_code.record(ok, || format!("{} v {}", word(e(a)), word(e(b))));
            }
            if let HatElement::Elem(c) = &j {
                p0_join.record(p0(c) == p0s[a].min(p0s[b]), || {
                    format!("{} v {}", word(e(a)), word(e(b)))
                });
            }
        }
    }

    let mut diamond = LemmaCheck::new("covers splitting different blocks span a square");
    let mut same_block = LemmaCheck::new("covers splitting one block bound m on their join");
    let mut m_code = LemmaCheck::new("smaller m gives a smaller code");
    for x in 0..len {
        let ups = p.upper_covers(x);
        for &y1 in ups {
            for &y2 in ups {
                let m1 = m_statistic(e(x), e(y1));
                let m2 = m_statistic(e(x), e(y2));
                if m1 < m2 {
                    m_code.record(codes[y1] < codes[y2], || {
                        format!("{} -> {}, {}", word(e(x)), word(e(y1)), word(e(y2)))
                    });
                }
                if y2 <= y1 {
                    continue;
                }
                let j = pp_join(&hat(y1), &hat(y2)).expect("same n");
                let n1 = split_block(e(x), e(y1)).expect("cover");
                let n2 = split_block(e(x), e(y2)).expect("cover");
                let what = || format!("{} -> {}, {}", word(e(x)), word(e(y1)), word(e(y2)));
                if n1 != n2 {
                    let ok = match &j {
                        HatElement::Top => false,
                        HatElement::Elem(c) => {
                            let ci = pp.index_of(c).expect("element");
                            let open: Vec<usize> = (0..len)
                                .filter(|&z| z != x && z != ci && p.leq(x, z) && p.leq(z, ci))
                                .collect();
                            let mut pair = vec![y1, y2];
                            pair.sort_unstable();
                            c.rank() == e(x).rank() + 2
                                && open == pair
                                && m1 == m_statistic(e(y2), c)
                                && m2 == m_statistic(e(y1), c)
                                && (m1 != m2 || m1 == 0)
                        }
                    };
                    diamond.record(ok, what);
                } else if let HatElement::Elem(c) = &j {
                    let ci = pp.index_of(c).expect("element");
                    let bound = m1.max(m2);
                    let inside: Vec<usize> =
                        (0..len).filter(|&z| p.leq(x, z) && p.leq(z, ci)).collect();
                    let ok = inside.iter().all(|&u| {
                        p.upper_covers(u)
                            .iter()
                            .filter(|&&v| p.leq(v, ci))
                            .all(|&v| m_statistic(e(u), e(v)) <= bound)
                    });
                    same_block.record(ok, what);
                }
            }
        }
    }

    let mut increasing = LemmaCheck::new("first cover towards an element has non-decreasing m");
    for phi in 0..len {
        for &chi in ctx.ordered_ups(phi) {
            for &psi in p.upper_covers(chi) {
                let earlier = ctx
                    .ordered_ups(phi)
                    .iter()
                    .take_while(|&&c| c != chi)
                    .any(|&c| p.upper_covers(c).contains(&psi));
                if !earlier {
                    increasing.record(
                        m_statistic(e(phi), e(chi)) <= m_statistic(e(chi), e(psi)),
                        || format!("{} -> {} -> {}", word(e(phi)), word(e(chi)), word(e(psi))),
                    );
                }
            }
        }
    }
    vec![
        monotone,
        equal_code,
        p0_join,
        p0_eta,
        diamond,
        same_block,
        increasing,
        m_code,
    ]
}

/// Each interval of the noncrossing partition lattice has exactly one
/// maximal chain with increasing edge labels, and it is the first one.
pub fn verify_el_labeling(n: usize) -> Result<LemmaCheck> {
    let (ncs, p) = nc_poset(n)?;
    let mut check = LemmaCheck::new("edge labelling of noncrossing partitions");
    for x in 0..p.len() {
        for y in 0..p.len() {
            if !p.leq(x, y) || x == y {
                continue;
            }
            let (sub, keep) = p.interval(x, y)?;
            let mut seqs: Vec<Vec<EdgeLabel>> = Vec::new();
            for c in sub.maximal_chains() {
                let labels: Vec<EdgeLabel> = c
                    .windows(2)
                    .map(|w| el_label(&ncs[keep[w[0]]], &ncs[keep[w[1]]]))
                    .collect::<Result<_>>()?;
                seqs.push(labels);
            }
            let increasing: Vec<&Vec<EdgeLabel>> =
                seqs.iter().filter(|s| s.windows(2).all(|w| w[0] < w[1])).collect();
            let first = seqs.iter().min().expect("nonempty interval");
            check.record(increasing.len() == 1 && increasing[0] == first, || {
                format!("[{}, {}]", ncs[x], ncs[y])
            });
        }
    }
    Ok(check)
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub checks: Vec<(String, bool)>,
}

impl CounterexampleReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn pair6(blocks: &[&[usize]], sigma: [usize; 6]) -> Result<ParkingPair> {
    let pi = NoncrossingPartition::new(6, blocks.iter().map(|b| b.to_vec()).collect())?;
    ParkingPair::new(pi, Permutation::new(sigma.to_vec())?)
}

/// The four elements above the minimum for `n = 6` showing that the cover
/// orders do not give a recursive atom ordering.
pub fn recursive_atom_counterexample() -> Result<CounterexampleReport> {
    let x = ParkingPair::bottom(6);
    let y = pair6(&[&[1, 2, 3], &[4, 5, 6]], [1, 2, 4, 3, 5, 6])?;
    let z = pair6(&[&[1, 3], &[2], &[4, 5, 6]], [1, 4, 2, 3, 5, 6])?;
    let y1 = pair6(&[&[1, 4, 5, 6], &[2, 3]], [3, 1, 2, 4, 5, 6])?;
    let z1 = pair6(&[&[1], &[2, 3], &[4, 5, 6]], [4, 1, 2, 3, 5, 6])?;
    let key = |a: &ParkingPair, b: &ParkingPair| cover_key(a, b);
    let mut checks = Vec::new();
    let covers = |a: &ParkingPair, b: &ParkingPair| key(a, b).is_ok();
    checks.push(("x covered by y, y', and y by z, z'".to_string(),
        covers(&x, &y) && covers(&x, &y1) && covers(&y, &z) && covers(&y, &z1)));
    let lower_z = pp_lower_covers(&z);
    let min_lower = lower_z
        .iter()
        .map(|w| key(&x, w).map(|k| (k, w.clone())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .map(|(_, w)| w);
    checks.push(("z has exactly two lower covers".into(), lower_z.len() == 2));
    checks.push(("y is the first lower cover of z".into(), min_lower.as_ref() == Some(&y)));
    checks.push(("z precedes z' among covers of y".into(), key(&y, &z)? < key(&y, &z1)?));
    checks.push(("z' covers y'".into(), covers(&y1, &z1)));
    checks.push(("y' precedes y among covers of x".into(), key(&x, &y1)? < key(&x, &y)?));
    let ups_x = cover_order(&x)?;
    let pos = |t: &ParkingPair| ups_x.iter().position(|h| h.as_pair() == Some(t));
    checks.push(("cover order of x agrees".into(), pos(&y1) < pos(&y)));
    Ok(CounterexampleReport { checks })
}
