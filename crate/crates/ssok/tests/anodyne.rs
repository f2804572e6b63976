use ssok::anodyne::certificate::verify_certificate;
use ssok::anodyne::filtrations::certify_comparison;
use ssok::anodyne::search::{check_witness, search_decomposition, SearchConfig, SearchOutcome};
use ssok::anodyne::suite::identity_families;
use ssok::anodyne::{Certificate, MarkedMap, TargetClass};
use ssok::cat::shapes::MapKind;
use ssok::sset::build::{boundary, horn, spine, standard_simplex};

fn inclusion(a: &ssok::sset::SimplicialSet, n: usize) -> MarkedMap {
    MarkedMap::inclusion(a, &standard_simplex(n, None)).unwrap()
}

#[test]
fn spine_certificates_survive_serialization() {
    for n in 1..=4 {
        let out = search_decomposition(&inclusion(&spine(n), n), TargetClass::Inner, &SearchConfig::default());
        let cert = out.certificate().expect("spines are inner anodyne");
        let back = Certificate::from_json_str(&cert.to_json_string()).unwrap();
        assert_eq!(verify_certificate(&back).unwrap().steps, cert.steps.len());
    }
}

#[test]
fn tampered_certificates_fail_replay() {
    let out = search_decomposition(&inclusion(&spine(3), 3), TargetClass::Inner, &SearchConfig::default());
    let mut cert = out.certificate().unwrap().clone();
    assert!(cert.steps.len() > 1);
    cert.steps.remove(0);
    assert!(verify_certificate(&cert).is_err());
    let mut cert = out.certificate().unwrap().clone();
    cert.steps.pop();
    assert!(verify_certificate(&cert).is_err());
}

#[test]
fn horns() {
    let cfg = SearchConfig::default();
    let inner = search_decomposition(&inclusion(&horn(2, 1).unwrap(), 2), TargetClass::Inner, &cfg);
    assert_eq!(inner.kind(), "found");
    let outer = search_decomposition(&inclusion(&horn(2, 0).unwrap(), 2), TargetClass::Inner, &cfg);
    assert_ne!(outer.kind(), "found");
}

#[test]
fn boundary_is_rejected_with_a_checked_witness() {
    let incl = inclusion(&boundary(2), 2);
    for class in [TargetClass::Inner, TargetClass::Marked] {
        match search_decomposition(&incl, class, &SearchConfig::default()) {
            SearchOutcome::Rejected { witness, .. } => assert!(check_witness(&incl, class, &witness)),
            other => panic!("{class}: {}", other.kind()),
        }
    }
}

#[test]
fn pushout_join_identities_up_to_dimension_three() {
    let all = identity_families(3);
    assert!(!all.is_empty());
    assert!(all.iter().all(|c| c.iso), "{:?}", all.iter().find(|c| !c.iso));
}

#[test]
fn comparison_maps_at_a_point() {
    let cfg = SearchConfig::default();
    for (kind, class) in [(MapKind::I0, TargetClass::Marked), (MapKind::I1, TargetClass::LeftMarked), (MapKind::I2, TargetClass::RightMarked)] {
        let r = certify_comparison(kind, 0, class, &cfg);
        assert!(r.replay.is_ok(), "{}: {:?}", kind.name(), r.replay);
    }
}
