//! Certification along explicit filtrations: each stage is reached from the
//! previous one by a bounded search inside the stage, and the moves are
//! concatenated into one certificate for the whole inclusion.

use std::collections::BTreeSet;

use serde::Serialize;

use super::certificate::{verify_certificate, Certificate};
use super::search::{find_lifting_witness, moves_to_steps, search_decomposition, search_moves, stage_names, LiftingWitness, Move, SearchConfig};
use super::{MarkedMap, TargetClass};
use crate::cat::shapes::{comparison_map, figure_simplex, MapKind};
use crate::cat::slower::BAR;
use crate::sset::build::standard_simplex;
use crate::sset::construct::{product, relabel_vertices};
use crate::sset::{vlabel, Id, SimplicialSet};

/// A subcomplex of the target of the inclusion being certified.
#[derive(Clone, Debug)]
pub struct Stage {
    pub name: String,
    pub ids: BTreeSet<Id>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StageResult {
    pub name: String,
    pub simplices: usize,
    pub steps: usize,
    pub nodes: usize,
    pub outcome: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub name: String,
    pub class: TargetClass,
    pub stages: Vec<StageResult>,
    #[serde(skip)]
    pub certificate: Option<Certificate>,
    /// Number of replayed steps, or the replay failure.
    pub replay: Result<usize, String>,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.replay.is_ok()
    }

    /// Name of the first stage that could not be reached.
    pub fn failed_stage(&self) -> Option<&str> {
        self.stages.iter().find(|s| s.outcome != "found").map(|s| s.name.as_str())
    }
}

/// Searches stage by stage from the image of `incl.source` through `stages`
/// to the whole target, then replays the concatenated certificate.
pub fn certify_filtration(name: &str, incl: &MarkedMap, stages: &[Stage], class: TargetClass, cfg: &SearchConfig) -> FiltrationReport {
    let b = &incl.target;
    let mut present: BTreeSet<Id> = incl.map.image_ids();
    let mut marked: BTreeSet<Id> = incl.source.marked().iter().map(|&e| incl.map.images[e].nd).collect();
    let mut all = stages.to_vec();
    all.push(Stage { name: "target".into(), ids: b.ids().collect() });
    let mut results = Vec::new();
    let mut moves: Vec<Move> = Vec::new();
    let mut ok = true;
    for st in &all {
        if !ok {
            break;
        }
        let mut res = StageResult { name: st.name.clone(), simplices: st.ids.len(), steps: 0, nodes: 0, outcome: String::new() };
        if !present.is_subset(&st.ids) {
            res.outcome = "stages do not increase".into();
            results.push(res);
            ok = false;
            continue;
        }
        let (sub, map) = match b.sub(&st.ids) {
            Ok(x) => x,
            Err(e) => {
                res.outcome = format!("not a subcomplex: {e}");
                results.push(res);
                ok = false;
                continue;
            }
        };
        let back = |y: Id| map.images[y].nd;
        let p: BTreeSet<Id> = sub.ids().filter(|&y| present.contains(&back(y))).collect();
        let m: BTreeSet<Id> = sub.ids().filter(|&y| marked.contains(&back(y))).collect();
        let (r, nodes, exhaustive) = search_moves(&sub, &p, &m, class, cfg);
        res.nodes = nodes;
        match r {
            Ok(found) => {
                res.steps = found.len();
                res.outcome = "found".into();
                moves.extend(found.into_iter().map(|mv| match mv {
                    Move::Horn { x, k, class } => Move::Horn { x: back(x), k, class },
                    Move::Triangle { t } => Move::Triangle { t: back(t) },
                }));
                present = st.ids.clone();
                marked.extend(sub.marked().iter().map(|&e| back(e)));
            }
            Err(why) => {
                res.outcome = if exhaustive { format!("none_within_budget: {why}") } else { "budget_exhausted".into() };
                ok = false;
            }
        }
        results.push(res);
    }
    let (certificate, replay) = if ok {
        let names = stage_names(incl, &moves);
        let mut cert = Certificate::new(incl, class);
        cert.steps = moves_to_steps(b, &moves, &|y| names[&y].clone());
        let replay = verify_certificate(&cert).map(|r| r.steps).map_err(|e| e.to_string());
        (Some(cert), replay)
    } else {
        (None, Err("a stage could not be reached".into()))
    };
    FiltrationReport { name: name.to_string(), class, stages: results, certificate, replay }
}

/// Id of the face of `t` spanned by the named vertices.
pub fn face(t: &SimplicialSet, names: &[&str]) -> Id {
    t.get(&vlabel(names)).unwrap_or_else(|_| panic!("no face {}", vlabel(names)))
}

/// Face closure of the listed faces.
pub fn span(t: &SimplicialSet, faces: &[Vec<&str>]) -> BTreeSet<Id> {
    t.closure(faces.iter().map(|f| face(t, f)))
}

fn spine_faces<'a>(names: &[&'a str]) -> Vec<Vec<&'a str>> {
    if names.len() == 1 {
        return vec![names.to_vec()];
    }
    names.windows(2).map(|w| w.to_vec()).collect()
}

fn stage(name: impl Into<String>, ids: BTreeSet<Id>) -> Stage {
    Stage { name: name.into(), ids }
}

// ---------------------------------------------------------------------------
// The prism Δᵐ×Δ¹ inside Δᵐ⋆Δᵐ.

/// Vertex names `0 … m 0̄ … m̄`.
pub fn doubled_names(m: usize) -> Vec<String> {
    let mut v: Vec<String> = (0..=m).map(|i| i.to_string()).collect();
    v.extend((0..=m).map(|i| format!("{i}{BAR}")));
    v
}

/// `Δᵐ⋆Δᵐ` with every edge of the second copy marked.
pub fn doubled_simplex(m: usize) -> SimplicialSet {
    let names = doubled_names(m);
    let mut t = standard_simplex(2 * m + 1, Some(&names));
    let marks: Vec<Id> = (0..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).map(|(i, j)| face(&t, &[&names[m + 1 + i], &names[m + 1 + j]])).collect();
    for e in marks {
        t.mark(e).unwrap();
    }
    t
}

/// `ĩ₀ : Δᵐ×Δ¹ → Δᵐ⋆Δᵐ`, `(i,ε) ↦ i` or `ī`, with `Δᵐ♯×{1}` marked.
pub fn prism_inclusion(m: usize) -> MarkedMap {
    let p = product(&standard_simplex(m, None), &standard_simplex(1, None));
    let mut src = relabel_vertices(&p.set, &|n| {
        let (x, e) = n[1..n.len() - 1].rsplit_once(',').unwrap();
        if e == "1" {
            format!("{x}{BAR}")
        } else {
            x.to_string()
        }
    });
    let top: BTreeSet<Id> = src.of_dim(1).into_iter().filter(|&e| src.label(e).matches(BAR).count() == 2).collect();
    src.set_marked(top);
    MarkedMap::inclusion(&src, &doubled_simplex(m)).expect("the prism sits in the join")
}

/// Ids of `A^m = (Δᵐ×Δ¹) ∪ Δ^{m0̄…m̄}`.
pub fn am_ids(m: usize) -> BTreeSet<Id> {
    let incl = prism_inclusion(m);
    let names = doubled_names(m);
    let mut ids = incl.map.image_ids();
    let tau_bar: Vec<&str> = std::iter::once(names[m].as_str()).chain(names[m + 1..].iter().map(|s| s.as_str())).collect();
    ids.extend(span(&incl.target, &[tau_bar]));
    ids
}

/// `ĩ₀` through `B_{m-1} ⊂ … ⊂ B_0`, i.e. adding `Δ^{m ī…m̄}` for decreasing
/// `i`, which ends at `A^m`, then on to `Δᵐ⋆Δᵐ`.
pub fn tilde_i0_filtration(m: usize, cfg: &SearchConfig) -> FiltrationReport {
    let incl = prism_inclusion(m);
    let names = doubled_names(m);
    let mut ids = incl.map.image_ids();
    let mut stages = Vec::new();
    for i in (0..m).rev() {
        let f: Vec<&str> = std::iter::once(names[m].as_str()).chain(names[m + 1 + i..].iter().map(|s| s.as_str())).collect();
        ids.extend(span(&incl.target, &[f.clone()]));
        stages.push(stage(format!("B_{i}: ∪ Δ^{}", vlabel(&f)), ids.clone()));
    }
    if m == 0 {
        stages.push(stage("A^0", am_ids(0)));
    }
    certify_filtration(&format!("ĩ0 for m={m}"), &incl, &stages, TargetClass::Marked, cfg)
}

/// `S_m ⊂ S_m ∪ τ̄ ⊂ T_m ⊂ … ⊂ T_0`, certified inside `A^m`. Also reports
/// whether `T_0` is all of `A^m`.
pub fn am_spine_filtration(m: usize, cfg: &SearchConfig) -> (FiltrationReport, bool) {
    let full = doubled_simplex(m);
    let (am, _) = full.sub(&am_ids(m)).unwrap();
    let names = doubled_names(m);
    let n: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let spine = span(&am, &spine_faces(&n));
    let (s_m, _) = am.sub(&spine).unwrap();
    let incl = MarkedMap::inclusion(&s_m, &am).unwrap();
    let tau_bar: Vec<&str> = std::iter::once(n[m]).chain(n[m + 1..].iter().copied()).collect();
    let mut ids = spine.clone();
    ids.extend(span(&am, &[tau_bar]));
    let mut stages = vec![stage("S_m ∪ τ̄", ids.clone())];
    for k in (0..=m).rev() {
        let tau: Vec<&str> = n[..=k].iter().chain(n[m + 1 + k..].iter()).copied().collect();
        ids.extend(span(&am, &[tau]));
        stages.push(stage(format!("T_{k}"), ids.clone()));
    }
    let exhausts = ids.len() == am.len();
    (certify_filtration(&format!("S_m ⊂ A^m for m={m}"), &incl, &stages, TargetClass::Marked, cfg), exhausts)
}

// ---------------------------------------------------------------------------
// The inclusion ι into Δ⁷.

/// `Δ⁷` with only `6→7` marked.
pub fn seven_simplex() -> SimplicialSet {
    let mut t = standard_simplex(7, None);
    t.mark_labels(&["67"]).unwrap();
    t
}

fn digits(s: &str) -> Vec<String> {
    s.chars().map(|c| c.to_string()).collect()
}

fn span_str(t: &SimplicialSet, faces: &[&str]) -> BTreeSet<Id> {
    let owned: Vec<Vec<String>> = faces.iter().map(|f| digits(f)).collect();
    let refs: Vec<Vec<&str>> = owned.iter().map(|f| f.iter().map(|s| s.as_str()).collect()).collect();
    span(t, &refs)
}

/// `K̃ = Δ^{013467} ∪ Δ^{023457} ∪ Δ^{0123}`.
pub fn k_tilde_ids(t: &SimplicialSet) -> BTreeSet<Id> {
    span_str(t, &["013467", "023457", "0123"])
}

/// `K̂ = K̃ ∪ Δ^{567}`.
pub fn k_hat_ids(t: &SimplicialSet) -> BTreeSet<Id> {
    span_str(t, &["013467", "023457", "0123", "567"])
}

/// `ι : K̃ ⊂ Δ⁷` through `K̂`.
pub fn iota_filtration(cfg: &SearchConfig) -> FiltrationReport {
    let t = seven_simplex();
    let (kt, _) = t.sub(&k_tilde_ids(&t)).unwrap();
    let incl = MarkedMap::inclusion(&kt, &t).unwrap();
    let stages = vec![stage("K̂ = K̃ ∪ Δ^567", k_hat_ids(&t))];
    certify_filtration("ι", &incl, &stages, TargetClass::RightMarked, cfg)
}

/// `K̂ ⊂ Δ⁷` on its own, in `class`.
pub fn k_hat_filtration(class: TargetClass, cfg: &SearchConfig) -> FiltrationReport {
    let t = seven_simplex();
    let (kh, _) = t.sub(&k_hat_ids(&t)).unwrap();
    let incl = MarkedMap::inclusion(&kh, &t).unwrap();
    certify_filtration("K̂ ⊂ Δ⁷", &incl, &[], class, cfg)
}

/// `Sp⁷ ⊂ Δ⁷` through the stages `∪Δ^{0123}`, `∪Λ₇^{4567}`, `∪Δ^{013467}`,
/// `∪Δ^{023457}`; the last of these is `K̂`, which is also reported.
pub fn iota_spine_filtration(class: TargetClass, cfg: &SearchConfig) -> (FiltrationReport, bool) {
    let t = seven_simplex();
    let mut ids = span_str(&t, &["01", "12", "23", "34", "45", "56", "67"]);
    let (sp, _) = t.sub(&ids).unwrap();
    let incl = MarkedMap::inclusion(&sp, &t).unwrap();
    let mut stages = Vec::new();
    for (name, faces) in [
        ("∪ Δ^0123", vec!["0123"]),
        ("∪ Λ_7^4567", vec!["567", "467", "457"]),
        ("∪ Δ^013467", vec!["013467"]),
        ("∪ Δ^023457", vec!["023457"]),
    ] {
        ids.extend(span_str(&t, &faces));
        stages.push(stage(name, ids.clone()));
    }
    let is_k_hat = ids == k_hat_ids(&t);
    (certify_filtration("Sp⁷ ⊂ Δ⁷", &incl, &stages, class, cfg), is_k_hat)
}

// ---------------------------------------------------------------------------
// The comparison maps.

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonResult {
    pub map: String,
    pub k: usize,
    pub class: TargetClass,
    pub outcome: String,
    pub steps: usize,
    pub replay: Result<usize, String>,
}

fn comparison_inclusion(kind: MapKind, k: usize) -> MarkedMap {
    let c = comparison_map(kind, &figure_simplex(k)).expect("comparison maps exist");
    MarkedMap::new(c.source, c.target, c.map).expect("comparison inclusions are marked monomorphisms")
}

/// Searches a certificate for `i0~`, `i1` or `i2` at `K = Δᵏ`.
pub fn certify_comparison(kind: MapKind, k: usize, class: TargetClass, cfg: &SearchConfig) -> ComparisonResult {
    let incl = comparison_inclusion(kind, k);
    let cfg = SearchConfig { witness: false, ..cfg.clone() };
    let out = search_decomposition(&incl, class, &cfg);
    let (steps, replay) = match out.certificate() {
        Some(c) => (c.steps.len(), verify_certificate(c).map(|r| r.steps).map_err(|e| e.to_string())),
        None => (0, Err(out.kind().to_string())),
    };
    ComparisonResult { map: kind.name().to_string(), k, class, outcome: out.kind().to_string(), steps, replay }
}

/// The marking step `F₀(K) → F̃₀(K)` tested by lifting against the nerves of
/// the builtin corpus with their natural marking. `None` means every tried
/// map extends.
pub fn marking_step_obstruction(k: usize, map_limit: usize) -> Option<LiftingWitness> {
    let f0 = crate::cat::shapes::shape(crate::cat::shapes::ShapeKind::F0, &figure_simplex(k)).set;
    let f0t = crate::cat::shapes::shape(crate::cat::shapes::ShapeKind::F0Tilde, &figure_simplex(k)).set;
    let incl = MarkedMap::inclusion(&f0, &f0t).expect("same simplices");
    find_lifting_witness(&incl, TargetClass::Marked, map_limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prism_for_an_interval() {
        let r = tilde_i0_filtration(1, &SearchConfig::default());
        assert!(r.passed(), "{:?}", r.stages);
    }

    #[test]
    fn am_filtration_exhausts() {
        for m in 0..=2 {
            let (r, exhausts) = am_spine_filtration(m, &SearchConfig::default());
            assert!(exhausts);
            assert!(r.passed(), "m = {m}: {:?}", r.stages);
        }
    }

    #[test]
    fn iota_stages() {
        let cfg = SearchConfig::default();
        let r = iota_filtration(&cfg);
        assert!(r.passed(), "{:?}", r.stages);
        let (sp, is_k_hat) = iota_spine_filtration(TargetClass::RightMarked, &cfg);
        assert!(is_k_hat);
        assert!(sp.passed(), "{:?}", sp.stages);
        let (inner, _) = iota_spine_filtration(TargetClass::Inner, &cfg);
        assert_eq!(inner.failed_stage(), Some("∪ Λ_7^4567"));
    }

    #[test]
    fn comparison_maps_over_a_point() {
        let cfg = SearchConfig::default();
        for kind in [MapKind::I0, MapKind::I1, MapKind::I2] {
            let r = certify_comparison(kind, 0, TargetClass::Marked, &cfg);
            assert!(r.replay.is_ok(), "{kind}: {}", r.outcome);
        }
    }
}
