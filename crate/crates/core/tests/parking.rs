use std::collections::BTreeSet;

use parkposet::nc::{enumerate_noncrossing, Permutation, SetPartition};
use parkposet::parking::*;
use proptest::prelude::*;

fn pow(b: usize, e: usize) -> usize {
    b.pow(e as u32)
}

#[test]
fn noncrossing_matches_filtered_set_partitions() {
    for n in 1..=8 {
        let brute: BTreeSet<SetPartition> = SetPartition::all(n)
            .unwrap()
            .into_iter()
            .filter(|p| p.is_noncrossing())
            .collect();
        let fast: BTreeSet<SetPartition> = enumerate_noncrossing(n)
            .unwrap()
            .into_iter()
            .map(|p| p.as_partition().clone())
            .collect();
        assert_eq!(brute, fast, "n = {n}");
    }
}

#[test]
fn four_models_have_the_same_size_and_match() {
    for n in 1..=5 {
        let expected = pow(n + 1, n - 1);
        let pairs: BTreeSet<ParkingPair> = all_pairs(n).unwrap().into_iter().collect();
        let words = all_parking_words(n).unwrap();
        let triples = all_triples(n).unwrap();
        let trees = all_parking_trees(n).unwrap();
        assert_eq!(pairs.len(), expected);
        assert_eq!(words.len(), expected);
        assert_eq!(triples.len(), expected);
        assert_eq!(trees.len(), expected);
        let from_words: BTreeSet<ParkingPair> = words
            .iter()
            .map(|w| ParkingObject::Word(w.clone()).to_pair().unwrap())
            .collect();
        let from_triples: BTreeSet<ParkingPair> =
            triples.iter().map(|t| t.to_pair().unwrap()).collect();
        let from_trees: BTreeSet<ParkingPair> =
            trees.iter().map(|t| ParkingPair::from_tree(t).unwrap()).collect();
        assert_eq!(from_words, pairs);
        assert_eq!(from_triples, pairs);
        assert_eq!(from_trees, pairs);
    }
}

#[test]
fn all_conversion_paths_agree() {
    for n in 1..=4 {
        for p in all_pairs(n).unwrap() {
            let start = ParkingObject::Pair(p.clone());
            for a in Kind::ALL {
                let xa = start.convert(a).unwrap();
                assert_eq!(xa.to_pair().unwrap(), p);
                for b in Kind::ALL {
                    let xb = xa.convert(b).unwrap();
                    assert_eq!(xb, start.convert(b).unwrap(), "{p}: {a} -> {b}");
                }
            }
        }
    }
}

#[test]
fn action_commutes_with_conversions() {
    for n in 1..=4 {
        let perms = Permutation::all(n);
        for p in all_pairs(n).unwrap() {
            let x = ParkingObject::Pair(p.clone());
            for s in &perms {
                let moved = x.act(s).unwrap();
                for k in Kind::ALL {
                    let lhs = x.convert(k).unwrap().act(s).unwrap();
                    let rhs = moved.convert(k).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn action_is_a_group_action_on_words() {
    let perms = Permutation::all(4);
    for w in all_parking_words(4).unwrap() {
        for s in &perms {
            for t in &perms {
                assert_eq!(w.act(t).act(s), w.act(&s.compose(t)));
            }
        }
    }
}

#[test]
fn fixed_words_under_a_transposition() {
    let s = Permutation::transposition(3, 1, 2);
    let fixed = all_parking_words(3)
        .unwrap()
        .into_iter()
        .filter(|w| w.act(&s) == *w)
        .count();
    assert_eq!(fixed, 4);
}

#[test]
fn prime_criteria_agree() {
    for n in 1..=5 {
        let mut primes = 0;
        for p in all_pairs(n).unwrap() {
            let by_pair = p.is_prime();
            let by_word = ParkingWord(p.to_word()).is_k_prime(1);
            let t = p.to_tree();
            let by_tree = t.children.last().unwrap().is_leaf();
            assert_eq!(by_pair, by_word, "{p}");
            assert_eq!(by_pair, by_tree, "{p}");
            primes += usize::from(by_pair);
        }
        assert_eq!(primes, pow(n - 1, n - 1).max(1));
    }
}

#[test]
fn orbit_representatives_are_the_identity_labellings() {
    for n in 1..=5 {
        let reps: BTreeSet<Vec<usize>> = all_parking_words(n)
            .unwrap()
            .into_iter()
            .filter(orbit_representative_check)
            .map(|w| w.0)
            .collect();
        let expected: BTreeSet<Vec<usize>> = enumerate_noncrossing(n)
            .unwrap()
            .into_iter()
            .map(|pi| {
                let images: Vec<Vec<usize>> = pi.blocks().to_vec();
                ParkingPair::from_images(pi, &images).unwrap().to_word()
            })
            .collect();
        assert_eq!(reps, expected);
        assert_eq!(reps.len() as i128, parkposet::nc::catalan(n as u32));
    }
}

#[test]
fn nilpotent_view_round_trips() {
    for n in 1..=5 {
        for t in all_parking_trees(n).unwrap() {
            let f = nilpotent_function_view(&t).unwrap();
            let image: BTreeSet<usize> = f.0.iter().flatten().copied().collect();
            assert_eq!(image.len() + 1, t.internal_count());
            assert_eq!(tree_from_nilpotent(&f).unwrap(), t);
        }
    }
}

#[test]
fn right_combs_are_interval_partitions() {
    let mut count = 0;
    for p in all_pairs(3).unwrap() {
        let t = p.to_tree();
        assert_eq!(t.is_right_comb(), p.pi().is_interval_partition());
        if t.is_right_comb() {
            count += 1;
            let c = right_comb_bridge(&t).unwrap();
            assert_eq!(right_comb_from_composition(&c).unwrap(), t);
        }
    }
    assert_eq!(count, 13);
}

#[test]
fn right_branch_statistic() {
    for n in 1..=4 {
        for p in all_pairs(n).unwrap() {
            assert!(right_branch_check(&p), "{p}");
        }
    }
}

#[test]
fn eta_determines_the_pair() {
    for p in all_pairs(4).unwrap() {
        let e = ParkingObject::Pair(p.clone()).eta().unwrap();
        let masks: Vec<u32> = e.iter().map(|b| parkposet::nc::elements_mask(b)).collect();
        assert_eq!(ParkingPair::from_eta(4, &masks).unwrap(), p);
    }
}

#[test]
fn invalid_inputs_are_reported() {
    let v = validate(&ParkingObject::Word(ParkingWord(vec![1, 3, 3])));
    assert!(!v.valid);
    assert!(v.diagnostic.is_some());
    assert!(ParkingObject::Word(ParkingWord(vec![2, 2])).convert(Kind::Tree).is_err());
    let bad_tree = PlaneTree::node(vec![1, 2], vec![PlaneTree::leaf()]);
    assert!(!validate(&ParkingObject::Tree(bad_tree)).valid);
}

#[test]
fn json_round_trip() {
    for p in all_pairs(3).unwrap() {
        for k in Kind::ALL {
            let x = ParkingObject::Pair(p.clone()).convert(k).unwrap();
            let s = x.to_json().to_string();
            assert_eq!(ParkingObject::parse(k, &s).unwrap(), x);
        }
    }
}

proptest! {
    #[test]
    fn word_tree_word(seed in proptest::collection::vec(0usize..100, 6)) {
        // build a parking word from arbitrary data by sorting into the staircase
        let n = seed.len();
        let mut w: Vec<usize> = seed.iter().enumerate().map(|(i, s)| s % (i + 1) + 1).collect();
        let perm_key: Vec<usize> = seed.iter().map(|s| s / 7).collect();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (perm_key[i], i));
        w = idx.iter().map(|&i| w[i]).collect();
        let t = PlaneTree::from_word(&w, 1).unwrap();
        prop_assert_eq!(t.to_word(), w.clone());
        let p = ParkingPair::from_tree(&t).unwrap();
        prop_assert_eq!(p.to_word(), w);
    }
}
