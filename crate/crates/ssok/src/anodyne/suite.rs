//! Exhaustive checks of the pushout-join identities and of the inclusions
//! `Δ^I♭⋆Δ^{J₀}♯ → Δ^I♭⋆Δ^J♯`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::certificate::verify_certificate;
use super::pushout_join::{boundary_boundary_identity, boundary_horn_identity, horn_boundary_identity};
use super::search::{search_decomposition, SearchConfig};
use super::{MarkedMap, TargetClass};
use crate::sset::build::standard_simplex;
use crate::sset::{vlabel, Id, SimplicialSet};

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub family: &'static str,
    pub params: String,
    pub iso: bool,
}

/// Both sides of every identity with `n + 1 + k ≤ total_max`.
pub fn identity_families(total_max: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for n in 0..total_max {
        for k in 0..total_max - n {
            out.push(IdentityCheck {
                family: "boundary-boundary",
                params: format!("n={n} k={k}"),
                iso: boundary_boundary_identity(n, k).is_iso(),
            });
            if n == 0 {
                continue;
            }
            for j in 0..=n {
                out.push(IdentityCheck {
                    family: "horn-boundary",
                    params: format!("j={j} n={n} k={k}"),
                    iso: horn_boundary_identity(j, n, k).is_iso(),
                });
                out.push(IdentityCheck {
                    family: "boundary-horn",
                    params: format!("k={k} j={j} n={n}"),
                    iso: boundary_horn_identity(k, j, n).is_iso(),
                });
            }
        }
    }
    out
}

const I_NAMES: [&str; 3] = ["a", "b", "c"];
const J_NAMES: [&str; 3] = ["x", "y", "z"];

/// `Δ^I♭ ⋆ Δ^J♯` on vertices `a b c` then `x y z`.
pub fn join_target(i: usize, j: usize) -> SimplicialSet {
    let names: Vec<String> = I_NAMES[..i].iter().chain(&J_NAMES[..j]).map(|s| s.to_string()).collect();
    let mut t = standard_simplex(i + j - 1, Some(&names));
    for p in 0..j {
        for q in p + 1..j {
            t.mark_labels(&[&vlabel(&[J_NAMES[p], J_NAMES[q]])]).unwrap();
        }
    }
    t
}

fn face_of(t: &SimplicialSet, verts: &[&str]) -> Option<Id> {
    if verts.is_empty() {
        return None;
    }
    Some(t.get(&vlabel(verts)).unwrap())
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaInstance {
    /// 1 for `id_I ⋆ j`, 2 for `i ⊠⋆ j`.
    pub case: u8,
    pub i: usize,
    pub j: usize,
    pub j0: Vec<String>,
    pub class: TargetClass,
    pub outcome: String,
    pub steps: usize,
    pub replayed: bool,
}

/// The inclusion of one case of the lemma as a subcomplex of `Δ^I⋆Δ^J`.
pub fn lemma_inclusion(case: u8, i: usize, j: usize, j0: &[usize]) -> MarkedMap {
    let t = join_target(i, j);
    let ij0: Vec<&str> = I_NAMES[..i].iter().copied().chain(j0.iter().map(|&p| J_NAMES[p])).collect();
    let mut gens: Vec<Id> = face_of(&t, &ij0).into_iter().collect();
    if case == 2 {
        gens.extend(face_of(&t, &J_NAMES[..j]));
    }
    let ids: BTreeSet<Id> = t.closure(gens);
    let (s, _) = t.sub(&ids).unwrap();
    MarkedMap::inclusion(&s, &t).unwrap()
}

fn run(case: u8, i: usize, j: usize, j0: &[usize], class: TargetClass, cfg: &SearchConfig) -> LemmaInstance {
    let incl = lemma_inclusion(case, i, j, j0);
    let out = search_decomposition(&incl, class, cfg);
    let (steps, replayed) = match out.certificate() {
        Some(c) => (c.steps.len(), verify_certificate(c).is_ok()),
        None => (0, false),
    };
    LemmaInstance {
        case,
        i,
        j,
        j0: j0.iter().map(|&p| J_NAMES[p].to_string()).collect(),
        class,
        outcome: out.kind().to_string(),
        steps,
        replayed,
    }
}

/// Every instance with `|I| ≤ i_max`, `|J| ≤ j_max` and `∅ ≠ J₀ ⊊ J`, in
/// the marked class. When `J = J₀ ∪ {y}` with `y > J₀`, the second case is
/// also searched in the inner class.
pub fn combinatorial_lemma(i_max: usize, j_max: usize, cfg: &SearchConfig) -> Vec<LemmaInstance> {
    let cfg = SearchConfig { witness: false, ..cfg.clone() };
    let mut out = Vec::new();
    for j in 2..=j_max {
        for mask in 1..(1u32 << j) - 1 {
            let j0: Vec<usize> = (0..j).filter(|&p| mask & (1 << p) != 0).collect();
            let top_added = j0.len() == j - 1 && j0.iter().all(|&p| p < j - 1);
            for i in 0..=i_max {
                out.push(run(1, i, j, &j0, TargetClass::Marked, &cfg));
                if i == 0 {
                    continue;
                }
                out.push(run(2, i, j, &j0, TargetClass::Marked, &cfg));
                if top_added {
                    out.push(run(2, i, j, &j0, TargetClass::Inner, &cfg));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_up_to_three() {
        assert!(identity_families(3).iter().all(|c| c.iso));
    }

    #[test]
    fn one_point_against_an_edge() {
        let r = run(1, 1, 2, &[0], TargetClass::Marked, &SearchConfig::default());
        assert!(r.replayed, "{}", r.outcome);
        let r = run(2, 1, 2, &[0], TargetClass::Inner, &SearchConfig::default());
        assert!(r.replayed, "{}", r.outcome);
    }
}
