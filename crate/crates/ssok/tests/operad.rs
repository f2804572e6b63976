mod common;

use common::*;
use proptest::prelude::*;
use ssok::operad::bo::bo_components;
use ssok::operad::ext::{
    atomic_maps, ext_category, ext_components, ext_ha_category, ext_homs, ext_objects, strict_fiber, unary_orbits,
    standard_atomic, ExtVariant,
};
use ssok::operad::total::{active_category, hom, hom_count, total_category, TotalMorphism};
use ssok::operad::{builtin_operad, json, Builtin, OperadError};

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn word_model_composition(b in prop_oneof![Just(Builtin::Ass), Just(Builtin::AssInv)], pick in any::<(u32, u32, u32)>()) {
        let o = builtin_operad(b, 4);
        let fs: Vec<_> = (1..=4).flat_map(|n| o.ops(n)).collect();
        let f = fs[pick.0 as usize % fs.len()];
        let gs: Vec<_> = (0..=5 - f.arity).flat_map(|m| o.ops(m)).collect();
        let g = gs[pick.1 as usize % gs.len()];
        let i = pick.2 as usize % f.arity;
        let h = o.compose(f, i, g).unwrap();
        let want = substitute(&parse_word(o.op_name(f)), i, &parse_word(o.op_name(g)), g.arity);
        prop_assert_eq!(o.op_name(h), show_word(&want));
    }

    #[test]
    fn word_model_action(f in arb_op(&builtin_operad(Builtin::AssInv, 4), 4), seed in any::<u64>()) {
        let o = builtin_operad(Builtin::AssInv, 4);
        let mut p: Vec<usize> = (0..f.arity).collect();
        let mut s = seed;
        for k in (1..p.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            p.swap(k, (s >> 33) as usize % (k + 1));
        }
        let g = o.act(f, &p);
        prop_assert_eq!(o.op_name(g), show_word(&permute(&parse_word(o.op_name(f)), &p)));
    }
}

#[test]
fn comm_composition_is_arity_only() {
    let o = builtin_operad(Builtin::Comm, 4);
    for n in 1..=4 {
        for m in 0..=5 - n {
            let h = o.compose(o.ops(n)[0], 0, o.ops(m)[0]).unwrap();
            assert_eq!(o.op_name(h), format!("c{}", n + m - 1));
        }
    }
}

#[test]
fn axioms_and_sizes() {
    for b in Builtin::ALL {
        let o = builtin_operad(b, 4);
        o.check_axioms(4).unwrap();
    }
    let o = builtin_operad(Builtin::AssInv, 4);
    assert_eq!((0..=4).map(|n| o.count(n)).collect::<Vec<_>>(), vec![1, 2, 8, 48, 384]);
}

#[test]
fn hom_sets_decompose_over_pointed_maps() {
    for b in [Builtin::Comm, Builtin::Ass, Builtin::AssInv] {
        let o = builtin_operad(b, 3);
        let t = total_category(&o, 2).unwrap();
        let a = active_category(&o, 2).unwrap();
        for m in 0..=2 {
            for n in 0..=2 {
                assert_eq!(t.cat.hom(m, n).len(), hom_count(&o, m, n, false));
                assert_eq!(a.cat.hom(m, n).len(), hom_count(&o, m, n, true));
                assert_eq!(hom(&o, m, n, false).len(), hom_count(&o, m, n, false));
            }
        }
    }
}

#[test]
fn compatible_extensions_are_a_wide_subcategory() {
    for b in [Builtin::Comm, Builtin::Ass, Builtin::AssInv] {
        let o = builtin_operad(b, 3);
        for sigma in [TotalMorphism::identity(&o, 1), TotalMorphism::single(o.ops(2)[0])] {
            if ext_objects(&o, &sigma).unwrap().len() > 100 {
                continue;
            }
            let e = ext_category(&o, &sigma).unwrap();
            let h = ext_ha_category(&o, &sigma).unwrap();
            assert_eq!(e.objects, h.objects);
            for x in &e.objects {
                for y in &e.objects {
                    let c = ext_homs(&o, x, y, ExtVariant::Compatible).unwrap();
                    let f = ext_homs(&o, x, y, ExtVariant::Full).unwrap();
                    assert!(c.iter().all(|m| f.contains(m)));
                }
            }
        }
    }
}

#[test]
fn strict_fiber_does_not_depend_on_the_atomic_map() {
    for b in [Builtin::Comm, Builtin::Ass, Builtin::AssInv] {
        let o = builtin_operad(b, 3);
        for n in 0..=2 {
            for f in o.ops(n) {
                let sizes: Vec<usize> = atomic_maps(&o, n).iter().map(|i| strict_fiber(&o, f, i).unwrap().len()).collect();
                assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{} {}: {sizes:?}", b.name(), o.op_name(f));
            }
        }
    }
}

#[test]
fn orbits_extensions_and_branes_agree() {
    for b in [Builtin::Comm, Builtin::Ass, Builtin::AssInv] {
        let o = builtin_operad(b, 3);
        for n in 0..=2 {
            for f in o.ops(n) {
                let sigma = TotalMorphism::single(f);
                let orbits = unary_orbits(&o, f, &standard_atomic(&o, n).unwrap()).unwrap().orbits.len();
                let ext = ext_components(&o, &sigma, ExtVariant::Compatible).unwrap().count();
                assert_eq!(orbits, ext, "{} {}", b.name(), o.op_name(f));
                assert_eq!(ext, bo_components(&o, &sigma).unwrap());
                if ext_objects(&o, &sigma).unwrap().len() <= 100 {
                    assert_eq!(ext, ext_category(&o, &sigma).unwrap().cat.pi0().len());
                }
            }
        }
    }
}

#[test]
fn trivial_operad_has_no_extensions() {
    let o = builtin_operad(Builtin::Triv, 3);
    let sigma = TotalMorphism::identity(&o, 1);
    assert!(ext_objects(&o, &sigma).unwrap().is_empty());
    assert_eq!(ext_category(&o, &sigma).unwrap().cat.num_objects(), 0);
    assert!(matches!(standard_atomic(&o, 1), Err(OperadError::Unitality(_))));
}

#[test]
fn json_round_trip_and_unitality() {
    for b in Builtin::ALL {
        let o = builtin_operad(b, 3);
        let back = json::from_str(&json::to_string(&o)).unwrap();
        assert_eq!(json::to_json(&back), json::to_json(&o));
    }
    let mut j = json::to_json(&builtin_operad(Builtin::Ass, 2));
    j.units.clear();
    let err = json::from_json(&j).unwrap_err();
    assert!(err.to_string().contains("unitality"), "{err}");
}
