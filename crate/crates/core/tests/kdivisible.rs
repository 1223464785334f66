use parkposet::kdivisible::*;
use parkposet::nc::{binomial, Permutation};
use parkposet::poset::{build_pp_poset, nc_poset};

fn fuss_narayana(n: usize, k: usize, blocks: usize) -> usize {
    (binomial(n as i128, blocks as u32) * binomial((k * n) as i128, blocks as u32 - 1) / n as i128) as usize
}

#[test]
fn nc_k_sizes_and_ranks() {
    for (n, k) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
        let (chains, p) = build_nc_k(n, k).unwrap();
        let fc = (binomial(((k + 1) * n) as i128, n as u32) / (k * n + 1) as i128) as usize;
        assert_eq!(chains.len(), fc, "n={n} k={k}");
        for (i, c) in chains.iter().enumerate() {
            assert_eq!(p.rank(i), c.rank(), "{c}");
        }
        for &m in &p.maximal() {
            assert_eq!(chains[m].0.last().unwrap().blocks().len(), n);
        }
        let by_blocks: Vec<usize> = (1..=n).map(|b| fuss_narayana(n, k, b)).collect();
        assert_eq!(p.rank_counts(), by_blocks, "n={n} k={k}");
    }
    assert_eq!(build_nc_k(3, 2).unwrap().0.len(), 12);
}

#[test]
fn nc_k_multichains_are_longer_nc_multichains() {
    for (n, k) in [(3, 2), (4, 2), (3, 3)] {
        let (_, p) = build_nc_k(n, k).unwrap();
        let (_, base) = nc_poset(n).unwrap();
        for j in 1..=3 {
            assert_eq!(p.zeta_count(j), base.zeta_count(j * k), "n={n} k={k} j={j}");
        }
    }
}

#[test]
fn relative_complements_start_at_kreweras() {
    let (chains, _) = build_nc_k(4, 2).unwrap();
    for c in &chains {
        let comps = c.relative_complements();
        assert_eq!(comps[0], c.0[0].kreweras());
    }
}

#[test]
fn pp_k_sizes_and_chains() {
    for (n, k) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let pk = build_pp_k(n, k).unwrap();
        assert_eq!(pk.len(), (n * k + 1).pow(n as u32 - 1), "n={n} k={k}");
        for j in 1..=2 {
            assert_eq!(
                pk.poset.zeta_count(j),
                ((n * j * k + 1) as u128).pow(n as u32 - 1),
                "n={n} k={k} j={j}"
            );
        }
    }
    let pk = build_pp_k(3, 2).unwrap();
    assert_eq!(pk.len(), 49);
    assert_eq!(pk.poset.rank_counts(), vec![1, 18, 30]);
}

#[test]
fn pp_k_projects_onto_nc_k_with_unique_descent() {
    let pk = build_pp_k(3, 2).unwrap();
    let (chains, nck) = build_nc_k(3, 2).unwrap();
    for (i, c) in pk.elements.iter().enumerate() {
        let (pis, top) = c.compact();
        assert_eq!(&KChainPP::from_compact(&pis, &top).unwrap(), c);
        let pi = c.partitions();
        let a = chains.iter().position(|x| *x == pi).unwrap();
        let below: Vec<usize> = pk.poset.down_set(i).ones().collect();
        assert_eq!(below.len(), nck.down_set(a).count_ones(..));
        for b in nck.down_set(a).ones() {
            let hits = below
                .iter()
                .filter(|&&j| pk.elements[j].partitions() == chains[b])
                .count();
            assert_eq!(hits, 1);
        }
    }
}

#[test]
fn pp_k_action_is_an_automorphism() {
    let pk = build_pp_k(3, 2).unwrap();
    for s in Permutation::all(3) {
        let f = pk.action(&s);
        for a in 0..pk.len() {
            assert_eq!(pk.elements[a].rank_of_top(), pk.elements[f[a]].rank_of_top());
            for b in 0..pk.len() {
                assert_eq!(pk.poset.leq(a, b), pk.poset.leq(f[a], f[b]));
            }
        }
    }
}

#[test]
fn pp_k_characters() {
    let pk = build_pp_k(3, 2).unwrap();
    let rows = pk.character_table().unwrap();
    let values: Vec<(String, i64)> = rows.iter().map(|r| (r.cycle_type.clone(), r.value)).collect();
    assert_eq!(
        values,
        vec![("3".into(), 1), ("2.1".into(), -5), ("1.1.1".into(), 25)]
    );
    assert!(rows.iter().all(|r| r.matches));

    let pk = build_pp_k(3, 3).unwrap();
    let rows = pk.character_table().unwrap();
    let values: Vec<i64> = rows.iter().map(|r| r.value).collect();
    assert_eq!(values, vec![1, -8, 64]);
    assert!(rows.iter().all(|r| r.matches));

    let pk = build_pp_k(2, 3).unwrap();
    assert!(pk.character_table().unwrap().iter().all(|r| r.matches));
}

#[test]
fn k_one_recovers_base_posets() {
    let pk = build_pp_k(3, 1).unwrap();
    let base = build_pp_poset(3).unwrap();
    assert_eq!(pk.len(), base.len());
    assert_eq!(pk.poset.rank_counts(), base.poset().rank_counts());
    let (_, nck) = build_nc_k(4, 1).unwrap();
    let (_, nc) = nc_poset(4).unwrap();
    assert_eq!(nck.len(), nc.len());
    assert_eq!(nck.covers().len(), nc.covers().len());
}

#[test]
fn divisible_subposets() {
    let (labels, p) = edelman_divisible(2, 2, Ambient::Nc).unwrap();
    let mut sorted = labels.clone();
    sorted.sort();
    assert_eq!(sorted.len(), 3);
    assert_eq!(p.rank_counts(), vec![1, 2]);
    for (n, k) in [(2, 2), (3, 2), (2, 3), (4, 2)] {
        let (_, e) = edelman_divisible(n, k, Ambient::Nc).unwrap();
        let (_, nck) = build_nc_k(n, k).unwrap();
        assert_eq!(e.len(), nck.len(), "n={n} k={k}");
        assert_eq!(e.rank_counts(), nck.rank_counts(), "n={n} k={k}");
    }
    assert_eq!(edelman_divisible(3, 2, Ambient::Nc).unwrap().0.len(), 12);
    let (_, pp) = edelman_divisible(3, 2, Ambient::Pp).unwrap();
    assert!(!pp.is_empty());
    assert!(edelman_divisible(5, 2, Ambient::Nc).is_err());
}

#[test]
fn prime_counts() {
    let pk = build_pp_k(3, 2).unwrap();
    assert_eq!(pk.primes().len(), 25);
    let id = Permutation::identity(3);
    assert_eq!(pk.fixed_primes(&id), 25);
    for (n, k) in [(3, 1), (3, 2), (3, 3), (2, 3), (4, 2)] {
        let r = k_prime_filter(&build_pp_k(n, k).unwrap()).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.primes, (n * k - 1).pow(n as u32 - 1));
        assert_eq!(r.rows[0].fixed_primes, 1);
    }
    let r = k_prime_filter(&build_pp_k(3, 1).unwrap()).unwrap();
    assert_eq!((r.primes, r.prime_tops), (4, 4));
    let r = k_prime_filter(&build_pp_k(3, 2).unwrap()).unwrap();
    assert_eq!(r.prime_tops, 7);
}

#[test]
fn guards() {
    assert!(build_nc_k(5, 2).is_err());
    assert!(build_pp_k(3, 4).is_err());
    assert!(build_pp_k(3, 0).is_err());
}
