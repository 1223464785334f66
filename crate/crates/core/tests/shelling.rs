use parkposet::parking::ParkingPair;
use parkposet::poset::HatElement;
use parkposet::shelling::*;

#[test]
fn cover_orders_are_total() {
    for n in 1..=4 {
        let ctx = ShellingContext::build(n).unwrap();
        for i in 0..ctx.poset().len() {
            let ups = ctx.ordered_ups(i);
            let gen = cover_order(ctx.poset().element(i)).unwrap();
            if ups.is_empty() {
                assert_eq!(gen, vec![HatElement::Top]);
                continue;
            }
            let gen: Vec<usize> = gen
                .iter()
                .map(|h| ctx.poset().index_of(h.as_pair().unwrap()).unwrap())
                .collect();
            assert_eq!(gen, ups);
        }
    }
}

#[test]
fn chain_counts() {
    for (n, c) in [(2usize, 2usize), (3, 18), (4, 384)] {
        let ctx = ShellingContext::build(n).unwrap();
        assert_eq!(ctx.sorted_chains().len(), c);
    }
}

#[test]
fn shelling_small() {
    for n in 1..=4 {
        let r = verify_shelling(n).unwrap();
        assert!(r.holds, "n={n} {:?}", &r.failures[..r.failures.len().min(3)]);
        // every chain but the first has a swap predecessor
        assert!(r.witnesses[0].is_none());
        assert!(r.witnesses[1..].iter().all(|w| w.is_some()));
    }
}

#[test]
fn key_lemma_small() {
    for n in 1..=4 {
        let r = verify_key_lemma(n).unwrap();
        assert!(r.holds(), "{:?}", r.first_failure);
        assert_eq!(r.configurations, r.via_lower_swap + r.via_upper_swap);
    }
}

#[test]
fn support_lemmas_small() {
    for n in 1..=4 {
        for c in verify_support_lemmas(n).unwrap() {
            assert!(c.holds(), "n={n} {}: {:?}", c.name, c.first_failure);
            if n == 4 {
                assert!(c.checked > 0, "{}", c.name);
            }
        }
    }
}

#[test]
fn el_labeling() {
    for n in 1..=5 {
        let c = verify_el_labeling(n).unwrap();
        assert!(c.holds(), "{:?}", c.first_failure);
    }
}

#[test]
fn counterexample() {
    let r = recursive_atom_counterexample().unwrap();
    assert!(r.holds(), "{:?}", r.checks);
}

#[test]
fn statistics() {
    let x = ParkingPair::bottom(3);
    for h in cover_order(&x).unwrap() {
        let y = h.as_pair().unwrap();
        let s = cover_stats(&x, y).unwrap();
        assert_eq!(s.split_block, vec![1, 2, 3]);
        assert_eq!(s.p0_lower, 3);
        assert!(s.m <= 3);
        assert_eq!(p0(y), p0_via_eta(y));
    }
    assert!(cover_key(&x, &x).is_err());
}

#[test]
fn shelling_five() {
    let ctx = ShellingContext::build(5).unwrap();
    let r = verify_shelling_with(&ctx);
    assert!(r.holds);
    assert!(verify_key_lemma_with(&ctx).holds());
    for c in verify_support_lemmas_with(&ctx) {
        assert!(c.holds(), "{}: {:?}", c.name, c.first_failure);
    }
}
