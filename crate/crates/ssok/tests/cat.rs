use ssok::cat::corpus::corpus;
use ssok::cat::nerve::nerve_truncated;
use ssok::cat::shapes::{figure_simplex, shape};
use ssok::cat::slower::s_lower;
use ssok::cat::tw::{check_canonical_iso, twisted_arrow_cat};
use ssok::cat::{json, ordinal};
use ssok::sset::build::standard_simplex;
use ssok::sset::iso::{is_isomorphic, is_isomorphic_unmarked};
use ssok::suite::figure_counts;

#[test]
fn tw_of_the_arrow_exports_a_span() {
    let dot = json::to_dot(&twisted_arrow_cat(&ordinal(1)).cat);
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(nodes, 3);
    assert_eq!(edges.len(), 2);
    for e in edges {
        let ends: Vec<&str> = e.split('[').next().unwrap().split("->").map(str::trim).collect();
        assert_ne!(ends[0], ends[1]);
    }
}

#[test]
fn corpus_round_trips() {
    let all = corpus();
    assert_eq!(all.len(), 10);
    for (name, c) in all {
        c.validate().unwrap();
        let back = json::from_str(&json::to_string(&c)).unwrap();
        assert_eq!(json::to_json(&back), json::to_json(&c), "{name}");
    }
}

#[test]
fn twisted_arrows_commute_with_nerves() {
    for (name, c) in corpus() {
        check_canonical_iso(&c, 2).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn nerves_of_ordinals_are_simplices() {
    for n in 0..=3 {
        let nv = nerve_truncated(&ordinal(n), n, false).set;
        assert!(is_isomorphic_unmarked(&nv, &standard_simplex(n, None)).is_iso());
    }
}

#[test]
fn edgewise_subdivision_of_simplices() {
    for n in 0..=2 {
        let s = s_lower(&standard_simplex(n, None)).set;
        assert!(is_isomorphic_unmarked(&s, &standard_simplex(2 * n + 1, None)).is_iso());
    }
}

#[test]
fn figure_counts_at_a_point() {
    for (kind, want) in figure_counts(0) {
        assert_eq!(shape(kind, &figure_simplex(0)).counts(), want, "{}", kind.name());
    }
}

#[test]
fn json_import_rejects_bad_tables() {
    let mut j = json::to_json(&ordinal(2));
    j.composition.clear();
    assert!(json::from_json(&j).is_err());
    let x = ssok::sset::json::from_str(&ssok::sset::json::to_string(&standard_simplex(2, None))).unwrap();
    assert!(is_isomorphic(&x, &standard_simplex(2, None)).is_iso());
}
