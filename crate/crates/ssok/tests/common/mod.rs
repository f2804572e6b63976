//! Oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, FileFailurePersistence, RngSeed};
use ssok::operad::{DiscreteOperad, Op};
use ssok::sset::SimplicialSet;

pub const SEED: u64 = 0x5503_2026;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: Some(Box::new(FileFailurePersistence::Off)),
        ..Config::default()
    }
}

/// A word in the inputs, each letter possibly under the involution.
pub type Word = Vec<(usize, bool)>;

pub fn parse_word(name: &str) -> Word {
    let mut out = Vec::new();
    let mut neg = false;
    for ch in name.chars() {
        match ch {
            '~' => neg = true,
            '1' => {}
            c => {
                out.push(((c as u8 - b'a') as usize, neg));
                neg = false;
            }
        }
    }
    out
}

pub fn show_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&(x, n)| format!("{}{}", if n { "~" } else { "" }, (b'a' + x as u8) as char)).collect()
}

/// Substitution of `g` into input `i` of `f`; a negated slot takes the
/// reversed word with every sign flipped.
pub fn substitute(f: &Word, i: usize, g: &Word, g_arity: usize) -> Word {
    let mut out = Vec::new();
    for &(x, n) in f {
        if x < i {
            out.push((x, n));
        } else if x > i {
            out.push((x + g_arity - 1, n));
        } else if n {
            out.extend(g.iter().rev().map(|&(y, m)| (y + i, !m)));
        } else {
            out.extend(g.iter().map(|&(y, m)| (y + i, m)));
        }
    }
    out
}

/// Feeding input `π(x)` into slot `x`.
pub fn permute(f: &Word, p: &[usize]) -> Word {
    f.iter().map(|&(x, n)| (p[x], n)).collect()
}

pub fn arb_op(o: &DiscreteOperad, max_arity: usize) -> impl Strategy<Value = Op> {
    let ops: Vec<Op> = (0..=max_arity.min(o.bound)).flat_map(|n| o.ops(n)).collect();
    proptest::sample::select(ops)
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Monotone `[m] → [n]`.
pub fn arb_monotone(m: usize, n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..=n, m + 1).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

pub fn counts_padded(x: &SimplicialSet, len: usize) -> Vec<usize> {
    let mut c = x.counts();
    c.resize(len, 0);
    c
}
