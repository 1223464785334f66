//! The acceptance sweep: twelve numbered checks, each scaled by an optional
//! cap on `n` so that quick runs stay quick.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::time::Instant;

use serde::Serialize;

use crate::enumeration::{
    all_codes, chain_count_closed, chain_series, chain_series_by_inverse, chain_to_ktree,
    character_closed, character_oracle, check_intermediate_equation, code_to_ktree, ktree_code,
    ktree_to_chain, multichains, series_chain_count, whitney_first_closed, zeta_closed,
    CharacterKind,
};
use crate::error::Result;
use crate::kdivisible::{build_nc_k, build_pp_k, edelman_divisible, Ambient};
use crate::nc::{catalan, enumerate_noncrossing, integer_partitions, permutation_of_type, Permutation};
use crate::parking::{
    all_pairs, all_parking_trees, all_parking_words, all_triples, k_trees, ParkingObject, ParkingPair,
};
use crate::poset::{build_pp_poset, permutahedron_isomorphism};
use crate::shelling::{
    recursive_atom_counterexample, verify_key_lemma_with, verify_shelling_with,
    verify_support_lemmas_with, ShellingContext,
};
use crate::topology::{alternating_forests, cluster_complex, order_complex, pp_character_table};

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "cardinality in four models"),
    (2, "rank census"),
    (3, "multichain counts"),
    (4, "first-kind Whitney numbers and Mobius"),
    (5, "shelling"),
    (6, "homology of the proper part"),
    (7, "characters"),
    (8, "generating series"),
    (9, "k-trees, codes and chains"),
    (10, "forests and the cluster complex"),
    (11, "k-divisible posets"),
    (12, "permutahedron"),
];

/// How far each check goes. `cap = None` runs every check at full size.
#[derive(Clone, Copy, Debug, Default)]
pub struct Scale {
    pub cap: Option<usize>,
    /// Adds the `n = 5` shelling sweep.
    pub long: bool,
}

impl Scale {
    pub fn full() -> Self {
        Scale { cap: None, long: false }
    }

    pub fn capped(n: usize) -> Self {
        Scale { cap: Some(n), long: false }
    }

    fn upto(&self, max: usize) -> usize {
        self.cap.map_or(max, |c| c.min(max))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    /// First failure, or the error that stopped the check.
    pub first_failure: Option<String>,
    #[serde(skip)]
    pub seconds: f64,
}

impl Outcome {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {:>2} {} ({} checks)", self.id, self.name, self.checks);
        if let Some(f) = &self.first_failure {
            s.push_str(&format!(": {f}"));
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn eq<T: PartialEq + Debug>(&mut self, what: impl FnOnce() -> String, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, expected {want:?}", what()));
        }
    }

    fn ok(&mut self, what: impl FnOnce() -> String, cond: bool) {
        self.checks += 1;
        if !cond {
            self.failures.push(what());
        }
    }
}

pub fn run(id: u8, scale: Scale) -> Outcome {
    let name = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map_or("unknown", |c| c.1);
    let start = Instant::now();
    let mut t = Tally::default();
    let res = match id {
        1 => cardinality(&mut t, scale),
        2 => rank_census(&mut t, scale),
        3 => chain_counts(&mut t, scale),
        4 => whitney_first(&mut t, scale),
        5 => shelling(&mut t, scale),
        6 => homology(&mut t, scale),
        7 => characters(&mut t, scale),
        8 => series(&mut t, scale),
        9 => trees(&mut t, scale),
        10 => forests(&mut t, scale),
        11 => kdivisible(&mut t, scale),
        12 => permutahedron(&mut t, scale),
        _ => {
            t.failures.push(format!("no criterion {id}"));
            Ok(())
        }
    };
    if let Err(e) = res {
        t.failures.insert(0, format!("error: {e}"));
    }
    Outcome {
        id,
        name,
        passed: t.failures.is_empty(),
        checks: t.checks,
        first_failure: t.failures.into_iter().next(),
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_all(scale: Scale) -> Vec<Outcome> {
    CRITERIA.iter().map(|&(id, _)| run(id, scale)).collect()
}

fn cardinality(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 2..=s.upto(6) {
        let want = (n + 1).pow(n as u32 - 1);
        let pairs: BTreeSet<ParkingPair> = all_pairs(n)?.into_iter().collect();
        let words = all_parking_words(n)?;
        let triples = all_triples(n)?;
        let trees = all_parking_trees(n)?;
        t.eq(|| format!("pairs n={n}"), pairs.len(), want);
        t.eq(|| format!("words n={n}"), words.len(), want);
        t.eq(|| format!("triples n={n}"), triples.len(), want);
        t.eq(|| format!("trees n={n}"), trees.len(), want);
        let from_words = words
            .into_iter()
            .map(|w| ParkingObject::Word(w).to_pair())
            .collect::<Result<BTreeSet<_>>>()?;
        let from_triples = triples.iter().map(|x| x.to_pair()).collect::<Result<BTreeSet<_>>>()?;
        let from_trees = trees
            .iter()
            .map(ParkingPair::from_tree)
            .collect::<Result<BTreeSet<_>>>()?;
        t.ok(|| format!("words and pairs differ at n={n}"), from_words == pairs);
        t.ok(|| format!("triples and pairs differ at n={n}"), from_triples == pairs);
        t.ok(|| format!("trees and pairs differ at n={n}"), from_trees == pairs);
    }
    Ok(())
}

fn rank_census(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 1..=s.upto(5) {
        let pp = build_pp_poset(n)?;
        let counts = pp.poset().rank_counts();
        for (l, &c) in counts.iter().enumerate() {
            t.eq(|| format!("n={n} l={l}"), c as i128, chain_count_closed(n, 1, l)?);
        }
    }
    Ok(())
}

fn chain_counts(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 1..=s.upto(4) {
        let pp = build_pp_poset(n)?;
        for k in 1..=3usize {
            let mut by = vec![0i128; n];
            for c in multichains(pp.poset(), k) {
                by[pp.element(c[k - 1]).rank()] += 1;
            }
            for (l, &c) in by.iter().enumerate() {
                t.eq(|| format!("n={n} k={k} l={l}"), c, chain_count_closed(n, k as i64, l)?);
            }
            t.eq(|| format!("total n={n} k={k}"), by.iter().sum(), zeta_closed(n, k));
        }
    }
    Ok(())
}

fn whitney_first(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 1..=s.upto(5) {
        let pp = build_pp_poset(n)?;
        for l in 0..n {
            t.eq(
                || format!("n={n} l={l}"),
                pp.poset().whitney_first(l)? as i128,
                whitney_first_closed(n, l)?,
            );
        }
        if n >= 2 {
            let hat = pp.hat()?;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            t.eq(
                || format!("mobius n={n}"),
                hat.mobius(0, hat.len() - 1) as i128,
                sign * (n as i128 - 1).pow(n as u32 - 1),
            );
        }
    }
    Ok(())
}

fn shelling(t: &mut Tally, s: Scale) -> Result<()> {
    let top = if s.long { 5 } else { s.upto(4) };
    for n in 1..=top {
        let ctx = ShellingContext::build(n)?;
        let r = verify_shelling_with(&ctx);
        t.ok(|| format!("shelling fails at n={n}: chains {:?}", r.failures.first()), r.holds);
        match n {
            3 => t.eq(|| "maximal chains n=3".into(), r.chains, 18),
            4 => t.eq(|| "maximal chains n=4".into(), r.chains, 384),
            _ => {}
        }
        let k = verify_key_lemma_with(&ctx);
        t.ok(|| format!("key lemma n={n}: {:?}", k.first_failure), k.holds());
        for l in verify_support_lemmas_with(&ctx) {
            t.ok(|| format!("{} n={n}: {:?}", l.name, l.first_failure), l.holds());
        }
    }
    let c = recursive_atom_counterexample()?;
    t.ok(|| format!("counterexample: {:?}", c.checks), c.holds());
    Ok(())
}

fn homology(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 3..=s.upto(4) {
        let pp = build_pp_poset(n)?;
        let ranks = order_complex(pp.poset())?.homology_ranks();
        let mut want = vec![0; n];
        want[n - 1] = (n - 1).pow(n as u32 - 1);
        t.eq(|| format!("reduced ranks n={n}"), ranks, want);
    }
    Ok(())
}

fn cycle_types(n: usize) -> Vec<Permutation> {
    integer_partitions(n).iter().map(|p| permutation_of_type(p)).collect()
}

fn characters(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 3..=s.upto(4) {
        let pp = build_pp_poset(n)?;
        for r in pp_character_table(&pp)? {
            t.ok(|| format!("homology character n={n}: {r:?}"), r.matches);
        }
    }
    for n in 1..=s.upto(4) {
        let pp = build_pp_poset(n)?;
        for sigma in cycle_types(n) {
            for k in 1..=3 {
                let kind = CharacterKind::ParkK;
                t.eq(
                    || format!("{kind} n={n} k={k} {sigma}"),
                    character_oracle(kind, &pp, k, &sigma)?,
                    character_closed(kind, n, k, &sigma),
                );
            }
            if n >= 2 {
                let kind = CharacterKind::ParkPrime;
                t.eq(
                    || format!("{kind} n={n} {sigma}"),
                    character_oracle(kind, &pp, 1, &sigma)?,
                    character_closed(kind, n, 1, &sigma),
                );
            }
        }
    }
    if s.upto(3) == 3 {
        let pp = build_pp_poset(3)?;
        for sigma in cycle_types(3) {
            for k in 1..=3 {
                let kind = CharacterKind::ParkPrimeK;
                t.eq(
                    || format!("{kind} k={k} {sigma}"),
                    character_oracle(kind, &pp, k, &sigma)?,
                    character_closed(kind, 3, k, &sigma),
                );
            }
        }
    }
    Ok(())
}

fn series(t: &mut Tally, s: Scale) -> Result<()> {
    const ORDER: usize = 6;
    for k in 1..=3i64 {
        let c = chain_series(k, ORDER, ORDER)?;
        for n in 1..=s.upto(6) {
            for l in 0..n {
                t.eq(
                    || format!("k={k} n={n} l={l}"),
                    series_chain_count(&c, n, l)?,
                    chain_count_closed(n, k, l)?,
                );
            }
        }
        t.ok(
            || format!("inverse characterization k={k}"),
            chain_series_by_inverse(k, ORDER, ORDER)? == c,
        );
        t.ok(
            || format!("intermediate equation k={k}"),
            check_intermediate_equation(k, ORDER, ORDER)?,
        );
    }
    Ok(())
}

fn trees(t: &mut Tally, s: Scale) -> Result<()> {
    let (n, k) = (s.upto(3), 2);
    let all = k_trees(n, k)?;
    t.eq(|| format!("k-trees n={n}"), all.len() as i128, zeta_closed(n, k));
    let mut codes = BTreeSet::new();
    for tree in &all {
        let c = ktree_code(tree, k)?;
        t.eq(|| format!("code round trip {tree}"), &code_to_ktree(&c)?, tree);
        codes.insert(c);
    }
    t.eq(|| "distinct codes".into(), codes.len(), all.len());
    let listed: usize = (0..n).map(|l| all_codes(n, k, l).map(|v| v.len())).sum::<Result<_>>()?;
    t.eq(|| "listed codes".into(), listed, all.len());

    let pp = build_pp_poset(n)?;
    let chains = multichains(pp.poset(), k);
    let mut images = BTreeSet::new();
    for c in &chains {
        let pairs: Vec<ParkingPair> = c.iter().map(|&i| pp.element(i).clone()).collect();
        let tree = chain_to_ktree(&pairs)?;
        t.eq(|| format!("chain round trip {tree}"), ktree_to_chain(&tree, n, k)?, pairs.clone());
        for sigma in Permutation::all(n) {
            let moved: Vec<ParkingPair> = pairs.iter().map(|p| p.act(&sigma)).collect();
            t.eq(
                || format!("equivariance {tree} {sigma}"),
                chain_to_ktree(&moved)?,
                tree.relabel(&sigma),
            );
        }
        images.insert(tree);
    }
    t.eq(|| "chain images".into(), images.len(), chains.len());
    Ok(())
}

fn forests(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 1..=s.upto(7) {
        let (_, forests, cx) = alternating_forests(n)?;
        t.eq(|| format!("facets n={n}"), cx.facets().len() as i128, catalan(n as u32 - 1));
        if n <= 5 {
            for pi in enumerate_noncrossing(n)? {
                let fiber = forests.iter().filter(|f| f.underline() == pi).count() as i128;
                let want: i128 = pi.blocks().iter().map(|b| catalan(b.len() as u32 - 1)).product();
                t.eq(|| format!("fiber over {pi}"), fiber, want);
            }
        }
    }
    for n in 3..=s.upto(4) {
        let r = cluster_complex(n)?.report();
        let pp = build_pp_poset(n)?;
        for (l, &w) in r.whitney.iter().enumerate() {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            t.eq(|| format!("cluster Whitney n={n} l={l}"), w as i64, sign * pp.poset().whitney_first(l)?);
        }
        let oc = order_complex(pp.poset())?.homology_ranks();
        t.eq(|| format!("top homology n={n}"), r.homology[n - 1], oc[n - 1]);
        t.eq(|| format!("top homology value n={n}"), oc[n - 1], (n - 1).pow(n as u32 - 1));
    }
    Ok(())
}

fn kdivisible(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 1..=s.upto(4) {
        for k in 1..=3 {
            let pk = build_pp_k(n, k)?;
            t.eq(|| format!("size n={n} k={k}"), pk.len(), (n * k + 1).pow(n as u32 - 1));
        }
    }
    for (n, k) in [(2, 2), (3, 2), (2, 3)] {
        if n > s.upto(3) {
            continue;
        }
        let (_, e) = edelman_divisible(n, k, Ambient::Nc)?;
        let (_, p) = build_nc_k(n, k)?;
        t.eq(|| format!("divisible size n={n} k={k}"), e.len(), p.len());
        t.eq(|| format!("divisible ranks n={n} k={k}"), e.rank_counts(), p.rank_counts());
    }
    if s.upto(3) == 3 {
        let pk = build_pp_k(3, 2)?;
        let ranks = order_complex(&pk.poset)?.homology_ranks();
        t.eq(|| "homology of the 2-divisible poset".into(), ranks, vec![0, 0, 25]);
    }
    Ok(())
}

fn permutahedron(t: &mut Tally, s: Scale) -> Result<()> {
    for n in 1..=s.upto(4) {
        let w = permutahedron_isomorphism(&build_pp_poset(n)?)?;
        t.ok(|| format!("isomorphism n={n}"), w.holds());
        match n {
            3 => t.eq(|| "faces n=3".into(), w.size, 13),
            4 => t.eq(|| "faces n=4".into(), w.size, 75),
            _ => {}
        }
    }
    Ok(())
}
