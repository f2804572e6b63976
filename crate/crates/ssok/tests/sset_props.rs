mod common;

use common::*;
use proptest::prelude::*;
use ssok::properties::{euler, grid_chains, join_counts, product_counts, pushout_universal, sample_spans, simplicial_identities};
use ssok::sset::build::{boundary, horn, spine, standard_simplex};
use ssok::sset::construct::{join, opposite, product};
use ssok::sset::iso::is_isomorphic;
use ssok::sset::{json, op, SimplicialSet};

fn arb_small() -> impl Strategy<Value = SimplicialSet> {
    prop_oneof![
        (0usize..=3).prop_map(|n| standard_simplex(n, None)),
        (1usize..=3).prop_map(boundary),
        (1usize..=3).prop_flat_map(|n| (Just(n), 0..=n)).prop_map(|(n, k)| horn(n, k).unwrap()),
        (0usize..=4).prop_map(spine),
    ]
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn operators_act_associatively((x, a, b, pick) in arb_small().prop_flat_map(|x| {
        let top = x.top_dim().unwrap();
        (Just(x), 0usize..=3).prop_flat_map(move |(x, m)| {
            (Just(x), arb_monotone(m, top), (0usize..=3).prop_flat_map(move |l| arb_monotone(l, m)), any::<usize>())
        })
    })) {
        let simplices = x.all_of_dim(x.top_dim().unwrap());
        let z = &simplices[pick % simplices.len()];
        let za = x.apply_ez(&a, z);
        prop_assert!(op::is_surjection(&za.surj));
        prop_assert_eq!(x.apply_ez(&b, &za), x.apply_ez(&op::compose(&a, &b), z));
    }

    #[test]
    fn identities_hold(x in arb_small()) {
        prop_assert!(simplicial_identities(&x).is_ok());
    }

    #[test]
    fn join_and_product_counts(a in arb_small(), b in arb_small()) {
        prop_assert_eq!(join_counts(&a, &b), Ok(()));
        let p = product(&a, &b).set;
        prop_assert_eq!(euler(&p), euler(&a) * euler(&b));
        let j = join(&a, &b).set;
        prop_assert_eq!(1 - euler(&j), (1 - euler(&a)) * (1 - euler(&b)));
    }

    #[test]
    fn json_round_trip(x in arb_small()) {
        let back = json::from_str(&json::to_string(&x)).unwrap();
        prop_assert!(is_isomorphic(&x, &back).is_iso());
        prop_assert_eq!(back.counts(), x.counts());
    }

    #[test]
    fn opposite_is_an_involution(x in arb_small()) {
        prop_assert!(is_isomorphic(&opposite(&opposite(&x)), &x).is_iso());
    }
}

#[test]
fn grid_and_binomial_oracles() {
    for p in 0..=3 {
        for q in 0..=3 {
            product_counts(p, q).unwrap();
        }
    }
    // Δ¹×Δ¹ is two triangles on a square
    assert_eq!((0..3).map(|k| grid_chains(1, 1, k)).collect::<Vec<_>>(), vec![4, 5, 2]);
}

#[test]
fn pushouts_are_universal() {
    for s in sample_spans() {
        assert!(pushout_universal(&s, 3).unwrap() > 0, "{}", s.name);
    }
}

#[test]
fn simplex_counts() {
    for n in 0..=5 {
        let x = standard_simplex(n, None);
        let want: Vec<usize> = (0..=n).map(|k| (0..=k).fold(1, |a, i| a * (n + 1 - i) / (i + 1))).collect();
        assert_eq!(x.counts(), want);
        x.validate().unwrap();
    }
    assert_eq!(counts_padded(&boundary(3), 3), vec![4, 6, 4]);
}
