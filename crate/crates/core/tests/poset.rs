use parkposet::nc::{binomial, enumerate_noncrossing, factorial, stirling2, Permutation};
use parkposet::parking::ParkingPair;
use parkposet::poset::*;

fn chain_formula(n: usize, k: i64, l: usize) -> i128 {
    factorial(l as u32) * binomial(k as i128 * n as i128, l as u32) * stirling2(n as u32, l as u32 + 1)
}

#[test]
fn rank_counts() {
    assert_eq!(build_pp_poset(3).unwrap().poset().rank_counts(), vec![1, 9, 6]);
    assert_eq!(build_pp_poset(4).unwrap().poset().rank_counts(), vec![1, 28, 72, 24]);
}

#[test]
fn whitney_numbers_and_mobius() {
    for n in 1..=5usize {
        let pp = build_pp_poset(n).unwrap();
        let p = pp.poset();
        assert_eq!(p.len(), (n + 1).pow(n as u32 - 1));
        for l in 0..n {
            assert_eq!(p.whitney_second(l) as i128, chain_formula(n, 1, l), "n={n} l={l}");
            let first = (-1i128).pow(l as u32)
                * factorial(l as u32)
                * binomial((n + l - 1) as i128, l as u32)
                * stirling2(n as u32, l as u32 + 1);
            assert_eq!(p.whitney_first(l).unwrap() as i128, first, "n={n} l={l}");
            assert_eq!(first, chain_formula(n, -1, l));
        }
        let hat = pp.hat().unwrap();
        let mu = hat.mobius(0, hat.len() - 1) as i128;
        let expected = (-1i128).pow(n as u32) * ((n as i128) - 1).pow(n as u32 - 1);
        assert_eq!(mu, expected, "n={n}");
    }
}

#[test]
fn multichain_counts() {
    for n in 1..=4usize {
        let p = build_pp_poset(n).unwrap();
        for k in 1..=3usize {
            let by = p.poset().multichains_by_top_rank(k);
            for (l, &c) in by.iter().enumerate() {
                assert_eq!(c as i128, chain_formula(n, k as i64, l), "n={n} k={k} l={l}");
            }
            let total: u128 = by.iter().sum();
            assert_eq!(total, ((n * k + 1) as u128).pow(n as u32 - 1));
        }
    }
    assert_eq!(build_pp_poset(3).unwrap().poset().zeta_count(2), 49);
}

#[test]
fn eta_order_matches_definition() {
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        for a in pp.elements() {
            for b in pp.elements() {
                assert_eq!(
                    pp_leq(a, b).unwrap(),
                    pp_leq_by_definition(a, b).unwrap(),
                    "{a} {b}"
                );
            }
        }
    }
}

#[test]
fn covers_three_ways() {
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        for i in 0..pp.len() {
            let a = pp.element(i);
            let mut from_poset: Vec<ParkingPair> = pp
                .poset()
                .upper_covers(i)
                .iter()
                .map(|&j| pp.element(j).clone())
                .collect();
            from_poset.sort();
            let surgery = pp_upper_covers(a).unwrap();
            if a.rank() + 1 == n {
                assert_eq!(surgery, vec![HatElement::Top]);
                assert!(from_poset.is_empty());
                continue;
            }
            let surgery: Vec<ParkingPair> =
                surgery.into_iter().map(|h| h.as_pair().unwrap().clone()).collect();
            assert_eq!(surgery, from_poset, "{a}");
            assert_eq!(pp_upper_covers_by_splitting(a), from_poset, "{a}");
            let mut lower: Vec<ParkingPair> = pp
                .poset()
                .lower_covers(i)
                .iter()
                .map(|&j| pp.element(j).clone())
                .collect();
            lower.sort();
            let mut gen = pp_lower_covers(a);
            gen.sort();
            assert_eq!(gen, lower);
        }
    }
}

#[test]
fn surgery_covers_at_five() {
    let pp = build_pp_poset(5).unwrap();
    for i in (0..pp.len()).step_by(7) {
        let a = pp.element(i);
        if a.rank() == 4 {
            continue;
        }
        let surgery: Vec<ParkingPair> = pp_upper_covers(a)
            .unwrap()
            .into_iter()
            .map(|h| h.as_pair().unwrap().clone())
            .collect();
        assert_eq!(surgery.len(), pp.poset().upper_covers(i).len());
    }
}

#[test]
fn join_and_meet_are_lattice_operations() {
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        let hat = pp.hat().unwrap();
        let top = pp.len();
        let as_hat = |i: usize| {
            if i == top {
                HatElement::Top
            } else {
                HatElement::Elem(pp.element(i).clone())
            }
        };
        let index = |h: &HatElement| match h {
            HatElement::Top => top,
            HatElement::Elem(p) => pp.index_of(p).unwrap(),
        };
        for a in 0..=top {
            for b in 0..=top {
                let ups: Vec<usize> = (0..=top).filter(|&c| hat.leq(a, c) && hat.leq(b, c)).collect();
                let least: Vec<usize> = ups
                    .iter()
                    .copied()
                    .filter(|&c| ups.iter().all(|&d| hat.leq(c, d)))
                    .collect();
                assert_eq!(least.len(), 1);
                let j = pp_join(&as_hat(a), &as_hat(b)).unwrap();
                assert_eq!(index(&j), least[0]);
                if n <= 3 || (a + b) % 5 == 0 {
                    let downs: Vec<usize> =
                        (0..=top).filter(|&c| hat.leq(c, a) && hat.leq(c, b)).collect();
                    let greatest: Vec<usize> = downs
                        .iter()
                        .copied()
                        .filter(|&c| downs.iter().all(|&d| hat.leq(d, c)))
                        .collect();
                    assert_eq!(greatest.len(), 1);
                    let m = pp_meet(&as_hat(a), &as_hat(b)).unwrap();
                    assert_eq!(index(&m), greatest[0]);
                }
            }
        }
    }
}

#[test]
fn unique_descent_and_ideals() {
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        let ncs = enumerate_noncrossing(n).unwrap();
        for (i, a) in pp.elements().iter().enumerate() {
            let below = pp.poset().down_set(i).count_ones(..);
            let nc_below = ncs.iter().filter(|p| p.is_below(a.pi())).count();
            assert_eq!(below, nc_below);
            for p in ncs.iter().filter(|p| p.is_below(a.pi())) {
                let hits = pp
                    .poset()
                    .down_set(i)
                    .ones()
                    .filter(|&j| pp.element(j).pi() == p)
                    .count();
                assert_eq!(hits, 1);
                let d = a.descend(p).unwrap();
                assert!(pp_leq(&d, a).unwrap());
            }
        }
    }
}

#[test]
fn action_is_an_automorphism() {
    let pp = build_pp_poset(4).unwrap();
    for s in Permutation::all(4) {
        let f = pp.action(&s);
        for a in 0..pp.len() {
            for b in 0..pp.len() {
                assert_eq!(pp.poset().leq(a, b), pp.poset().leq(f[a], f[b]));
            }
        }
    }
}

#[test]
fn permutahedron() {
    assert_eq!(ordered_set_compositions(3).len(), 13);
    assert_eq!(ordered_set_compositions(4).len(), 75);
    for n in 1..=4 {
        let pp = build_pp_poset(n).unwrap();
        let w = permutahedron_isomorphism(&pp).unwrap();
        assert!(w.holds(), "n={n}");
    }
    let w = permutahedron_isomorphism(&build_pp_poset(3).unwrap()).unwrap();
    assert_eq!(w.size, 13);
}

#[test]
fn nc_lattice_basics() {
    let (ncs, p) = nc_poset(5).unwrap();
    assert_eq!(ncs.len(), 42);
    let b = p.bottom().unwrap();
    for (i, pi) in ncs.iter().enumerate() {
        // |μ(0, π)| is the product of Catalan numbers over the complement
        let expected: i128 = pi
            .kreweras()
            .blocks()
            .iter()
            .map(|blk| parkposet::nc::catalan(blk.len() as u32 - 1))
            .product();
        assert_eq!(p.mobius(b, i).unsigned_abs() as i128, expected);
    }
}

#[test]
fn guards() {
    assert!(build_pp_poset(6).is_err());
    let a = ParkingPair::bottom(3);
    let b = ParkingPair::bottom(4);
    assert!(pp_leq(&a, &b).is_err());
}

#[test]
fn exports() {
    let pp = build_pp_poset(2).unwrap();
    let j = pp.to_json();
    assert_eq!(j["n"], 3);
    assert_eq!(j["covers"].as_array().unwrap().len(), 2);
    let d = pp.to_dot();
    assert!(d.contains("label=\"11\""));
}
