use std::collections::HashSet;

use parkposet::enumeration::*;
use parkposet::nc::{integer_partitions, permutation_of_type, Permutation};
use parkposet::parking::{k_trees, ParkingPair, ParkingWord, PlaneTree};
use parkposet::poset::build_pp_poset;

#[test]
fn closed_forms() {
    let v: Vec<i128> = (0..3).map(|l| chain_count_closed(3, 1, l).unwrap()).collect();
    assert_eq!(v, vec![1, 9, 6]);
    assert_eq!(chain_count_closed(3, 2, 2).unwrap(), 30);
    let w: Vec<i128> = (0..3).map(|l| whitney_first_closed(3, l).unwrap()).collect();
    assert_eq!(w, vec![1, -9, 12]);
    assert!(chain_count_closed(3, 1, 3).is_err());
    for n in 1..=6 {
        for k in 1..=3 {
            let s: i128 = (0..n).map(|l| chain_count_closed(n, k, l).unwrap()).sum();
            assert_eq!(s, zeta_closed(n, k as usize));
            assert_eq!(chain_count_closed(n, k, 0).unwrap(), 1);
        }
    }
}

#[test]
fn closed_forms_match_poset() {
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        for k in 1..=3usize {
            let by = pp.poset().multichains_by_top_rank(k);
            for (l, c) in by.iter().enumerate() {
                assert_eq!(*c as i128, chain_count_closed(n, k as i64, l).unwrap());
            }
        }
        for l in 0..n {
            assert_eq!(
                pp.poset().whitney_first(l).unwrap() as i128,
                whitney_first_closed(n, l).unwrap()
            );
        }
    }
}

#[test]
fn series_matches_chain_counts() {
    for k in 1..=3i64 {
        let s = chain_series(k, 6, 6).unwrap();
        for n in 1..=6 {
            for l in 0..n {
                assert_eq!(
                    series_chain_count(&s, n, l).unwrap(),
                    chain_count_closed(n, k, l).unwrap(),
                    "k={k} n={n} l={l}"
                );
            }
            for l in n..=6 {
                assert_eq!(series_chain_count(&s, n, l).unwrap(), 0);
            }
        }
        assert_eq!(chain_series_by_inverse(k, 6, 6).unwrap(), s, "k={k}");
        assert!(check_intermediate_equation(k, 6, 6).unwrap(), "k={k}");
    }
    assert!(chain_series(1, 9, 9).is_err());
    let j = chain_series(1, 3, 3).unwrap().to_json();
    assert_eq!(j["egf"]["3,1"], "9");
}

#[test]
fn k_words_and_trees() {
    for (n, k) in [(1, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)] {
        let words = k_parking_words(n, k).unwrap();
        assert_eq!(words.len() as i128, zeta_closed(n, k));
        let trees = k_trees(n, k).unwrap();
        assert_eq!(trees.len(), words.len());
        let mut seen = HashSet::new();
        for w in &words {
            let t = PlaneTree::from_word(&w.0, k).unwrap();
            t.validate(n, k).unwrap();
            assert_eq!(t.to_word(), w.0);
            seen.insert(t);
        }
        assert_eq!(seen.len(), trees.len());
    }
    // the arity rule forces each k-tree to have kn+1 nodes
    for t in k_trees(3, 2).unwrap() {
        assert_eq!(t.prefix_composition().len(), 7);
    }
}

#[test]
fn tree_counts_by_nonempty_nodes() {
    for n in 1..=4 {
        for k in 1..=3 {
            let mut by = vec![0i128; n];
            for t in k_trees(n, k).unwrap() {
                by[t.internal_count() - 1] += 1;
            }
            for (l, &c) in by.iter().enumerate() {
                assert_eq!(c, chain_count_closed(n, k as i64, l).unwrap());
            }
        }
    }
}

fn brood_example() -> PlaneTree {
    // a 3-tree where 7 is the child of index 3 of the first brood of {1,2},
    // 6 and 4 are children of index 2 of the first and second broods
    let l = PlaneTree::leaf;
    let n = |lab: Vec<usize>, ch: Vec<PlaneTree>| PlaneTree::node(lab, ch);
    n(
        vec![1, 2],
        vec![
            n(vec![3], vec![l(), l(), l()]),
            n(vec![6], vec![l(), n(vec![5], vec![l(), l(), l()]), l()]),
            n(vec![7], vec![l(), l(), l()]),
            l(),
            n(vec![4], vec![l(), l(), l()]),
            l(),
        ],
    )
}

#[test]
fn chain_bijection_example() {
    let t = brood_example();
    t.validate(7, 3).unwrap();
    let chain = ktree_to_chain(&t, 7, 3).unwrap();
    assert_eq!(chain.len(), 3);
    assert_eq!(chain[2].rank(), t.internal_count() - 1);
    // at index 1 everything of index 2 or 3 is merged into the root
    assert_eq!(chain[0].to_tree().label, vec![1, 2, 4, 5, 6, 7]);
    assert_eq!(chain_to_ktree(&chain).unwrap(), t);
    let constant = vec![ParkingPair::bottom(4); 3];
    let c = chain_to_ktree(&constant).unwrap();
    assert_eq!(c.internal_count(), 1);
}

#[test]
fn chain_bijection_round_trips() {
    for (n, k) in [(2, 2), (3, 1), (3, 2), (3, 3), (4, 2)] {
        let pp = build_pp_poset(n).unwrap();
        let chains = multichains(pp.poset(), k);
        assert_eq!(chains.len() as i128, zeta_closed(n, k));
        let mut trees = HashSet::new();
        for c in &chains {
            let pairs: Vec<ParkingPair> = c.iter().map(|&i| pp.element(i).clone()).collect();
            let t = chain_to_ktree(&pairs).unwrap();
            assert_eq!(t.internal_count() - 1, pairs[k - 1].rank());
            assert_eq!(ktree_to_chain(&t, n, k).unwrap(), pairs, "n={n} k={k} {t}");
            trees.insert(t);
        }
        assert_eq!(trees.len(), chains.len());
        for t in k_trees(n, k).unwrap() {
            let c = ktree_to_chain(&t, n, k).unwrap();
            assert_eq!(chain_to_ktree(&c).unwrap(), t);
        }
    }
}

#[test]
fn chain_bijection_is_equivariant() {
    for n in 1..=3 {
        for k in 1..=2 {
            for t in k_trees(n, k).unwrap() {
                let c = ktree_to_chain(&t, n, k).unwrap();
                for s in Permutation::all(n) {
                    let ct = ktree_to_chain(&t.relabel(&s), n, k).unwrap();
                    let sc: Vec<ParkingPair> = c.iter().map(|p| p.act(&s)).collect();
                    assert_eq!(ct, sc);
                }
            }
        }
    }
}

#[test]
fn prufer_round_trips() {
    for (n, k) in [(1, 2), (2, 1), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] {
        let trees = k_trees(n, k).unwrap();
        let mut codes = HashSet::new();
        for t in &trees {
            let c = ktree_code(t, k).unwrap();
            assert_eq!(c.word.len(), t.internal_count() - 1);
            assert_eq!(code_to_ktree(&c).unwrap(), *t, "n={n} k={k}");
            codes.insert(c);
        }
        assert_eq!(codes.len(), trees.len());
        let mut total = 0;
        for l in 0..n {
            let all = all_codes(n, k, l).unwrap();
            assert_eq!(all.len() as i128, chain_count_closed(n, k as i64, l).unwrap());
            for c in &all {
                let t = code_to_ktree(c).unwrap();
                t.validate(n, k).unwrap();
                assert_eq!(&ktree_code(&t, k).unwrap(), c);
            }
            total += all.len();
        }
        assert_eq!(total, trees.len());
    }
    let single = PlaneTree::node(vec![1, 2], vec![PlaneTree::leaf(); 4]);
    assert!(ktree_code(&single, 2).unwrap().word.is_empty());
    let with_two = k_trees(3, 2)
        .unwrap()
        .into_iter()
        .filter(|t| t.internal_count() == 3)
        .count();
    assert_eq!(with_two, 30);
}

#[test]
fn bad_codes_rejected() {
    let good = all_codes(3, 2, 2).unwrap().remove(0);
    let mut c = good.clone();
    c.word = vec![1, 1];
    assert!(code_to_ktree(&c).is_err());
    let mut c = good.clone();
    c.used = vec![1];
    assert!(code_to_ktree(&c).is_err());
    let mut c = good;
    c.used = vec![0, 99];
    assert!(code_to_ktree(&c).is_err());
}

fn cycle_types(n: usize) -> Vec<Permutation> {
    integer_partitions(n).iter().map(|l| permutation_of_type(l)).collect()
}

#[test]
fn characters() {
    let s12 = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
    assert_eq!(character_closed(CharacterKind::ParkK, 3, 1, &s12), 4);
    let fixed: Vec<String> = k_parking_words(3, 1)
        .unwrap()
        .into_iter()
        .filter(|w| w.act(&s12) == *w)
        .map(|w| w.to_string())
        .collect();
    assert_eq!(fixed.len(), 4);
    assert!(fixed.contains(&"113".to_string()));
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        for s in cycle_types(n) {
            for k in 1..=3 {
                let closed = character_closed(CharacterKind::ParkK, n, k, &s);
                assert_eq!(character_oracle(CharacterKind::ParkK, &pp, k, &s).unwrap(), closed);
                if n * k <= 8 {
                    assert_eq!(character_word_oracle(CharacterKind::ParkK, n, k, &s).unwrap(), closed);
                }
            }
            let closed = character_closed(CharacterKind::ParkPrime, n, 1, &s);
            if n >= 2 {
                assert_eq!(character_oracle(CharacterKind::ParkPrime, &pp, 1, &s).unwrap(), closed);
                assert_eq!(character_word_oracle(CharacterKind::ParkPrime, n, 1, &s).unwrap(), closed);
            }
        }
    }
    let pp = build_pp_poset(3).unwrap();
    for s in cycle_types(3) {
        for k in 1..=3 {
            let closed = character_closed(CharacterKind::ParkPrimeK, 3, k, &s);
            assert_eq!(character_oracle(CharacterKind::ParkPrimeK, &pp, k, &s).unwrap(), closed);
            assert_eq!(character_word_oracle(CharacterKind::ParkPrimeK, 3, k, &s).unwrap(), closed);
        }
    }
    let id = Permutation::identity(3);
    assert_eq!(character_closed(CharacterKind::ParkPrime, 3, 1, &id), 4);
    assert_eq!(character_closed(CharacterKind::ParkPrimeK, 3, 2, &id), 25);
    assert!("nope".parse::<CharacterKind>().is_err());
    assert!(ParkingWord(vec![1, 1, 1]).is_k_prime(1));
}

#[test]
fn dimension_identity_values() {
    assert_eq!(dimension_identity(1, 1).unwrap(), (1, 1));
    assert_eq!(dimension_identity(3, 1).unwrap(), (16, 16));
    assert_eq!(dimension_identity(3, 2).unwrap(), (49, 49));
    for n in 1..=5 {
        for k in 1..=3 {
            assert!(dimension_identity_check(n, k).unwrap());
        }
    }
}

#[test]
fn prime_chain_conventions() {
    // a prime top element matches the (k(j-1)+1)-bound on words exactly,
    // while a prime bottom element has the (kn-1)^(n-1) count
    for (n, k) in [(3, 2), (3, 3), (4, 2)] {
        let mut first = 0;
        for t in k_trees(n, k).unwrap() {
            let c = ktree_to_chain(&t, n, k).unwrap();
            let w = ParkingWord(t.to_word());
            assert_eq!(w.has_prime_top(k), c[k - 1].is_prime());
            first += c[0].is_prime() as i128;
        }
        assert_eq!(first, ((k * n) as i128 - 1).pow(n as u32 - 1));
        let words = k_parking_words(n, k).unwrap();
        assert_eq!(words.iter().filter(|w| w.is_k_prime(k)).count(), first as usize);
    }
    let pp = build_pp_poset(3).unwrap();
    assert_eq!(prime_top_oracle(&pp, 2, &Permutation::identity(3)).unwrap(), 7);
}
