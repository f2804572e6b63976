//! Bounded search for anodyne decompositions.
//!
//! A stage is a subcomplex of the target with a marking. Moves fill a
//! missing simplex along a horn whose only missing face is itself missing,
//! or mark the long edge of a triangle whose short edges are marked.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::certificate::{horn_step, triangle_step, Certificate, Step};
use super::generator::GeneratorClass;
use super::{MarkedMap, TargetClass};
use crate::cat::corpus::corpus;
use crate::cat::nerve::nerve_truncated;
use crate::sset::maps::enumerate_maps;
use crate::sset::{Ez, Id, SimplicialSet};

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;
pub const DEFAULT_STEP_BUDGET: usize = 10_000;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Backtracking nodes.
    pub node_budget: usize,
    /// Attachments along one branch.
    pub step_budget: usize,
    /// Look for a lifting witness after an exhaustive failure.
    pub witness: bool,
    /// Maps from the source tried per category while looking for a witness.
    pub witness_map_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: DEFAULT_NODE_BUDGET, step_budget: DEFAULT_STEP_BUDGET, witness: true, witness_map_limit: 20_000 }
    }
}

/// A map from the source into the nerve of a finite category that does not
/// extend to the target.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LiftingWitness {
    pub category: String,
    /// Image of each source simplex, as a chain of morphism names.
    pub assignment: BTreeMap<String, String>,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found { certificate: Certificate, nodes: usize },
    Rejected { witness: LiftingWitness, nodes: usize },
    NoneWithinBudget { nodes: usize, node_budget: usize, step_budget: usize, reason: String },
    BudgetExhausted { nodes: usize, node_budget: usize, step_budget: usize },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Found { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SearchOutcome::Found { .. } => "found",
            SearchOutcome::Rejected { .. } => "rejected",
            SearchOutcome::NoneWithinBudget { .. } => "none_within_budget",
            SearchOutcome::BudgetExhausted { .. } => "budget_exhausted",
        }
    }

    pub fn nodes(&self) -> usize {
        match self {
            SearchOutcome::Found { nodes, .. }
            | SearchOutcome::Rejected { nodes, .. }
            | SearchOutcome::NoneWithinBudget { nodes, .. }
            | SearchOutcome::BudgetExhausted { nodes, .. } => *nodes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    Horn { x: Id, k: usize, class: GeneratorClass },
    Triangle { t: Id },
}

#[derive(Debug)]
enum Stop {
    Exhausted(String),
    Budget,
}

#[derive(Clone)]
struct State {
    present: Vec<bool>,
    marked: Vec<bool>,
}

impl State {
    fn key(&self) -> Vec<u64> {
        let mut out = vec![0u64; (2 * self.present.len()).div_ceil(64)];
        for (i, &b) in self.present.iter().chain(self.marked.iter()).enumerate() {
            if b {
                out[i / 64] |= 1 << (i % 64);
            }
        }
        out
    }
}

struct Searcher<'a> {
    b: &'a SimplicialSet,
    class: TargetClass,
    cfg: &'a SearchConfig,
    cof: Vec<Vec<(Id, usize)>>,
    order: Vec<Id>,
    triangles: Vec<Id>,
    want_marked: Vec<bool>,
    nodes: usize,
    failed: HashSet<Vec<u64>>,
    path: Vec<Move>,
}

impl Searcher<'_> {
    fn stage_marked(&self, st: &State, e: &Ez) -> bool {
        !e.is_nondeg() || st.marked[e.nd]
    }

    fn done(&self, st: &State) -> bool {
        st.present.iter().all(|&p| p) && st.marked == self.want_marked
    }

    fn horn_move(&self, st: &State, x: Id) -> Option<Move> {
        let n = self.b.dim(x);
        if n == 0 {
            return None;
        }
        let faces = &self.b.simplex(x).faces;
        let mut missing = (0..=n).filter(|&i| !st.present[faces[i].nd]);
        let k = missing.next()?;
        if missing.next().is_some() || !faces[k].is_nondeg() {
            return None;
        }
        let class = if 0 < k && k < n {
            if self.class == TargetClass::Inner {
                GeneratorClass::InnHorn
            } else {
                GeneratorClass::InnHornFlat
            }
        } else {
            let left = k == 0;
            if (left && !self.class.allows_left()) || (!left && !self.class.allows_right()) {
                return None;
            }
            if n == 1 {
                if !self.want_marked[x] {
                    return None;
                }
            } else {
                let e = if left { self.b.edge_of(x, 0, 1) } else { self.b.edge_of(x, n - 1, n) };
                if !self.stage_marked(st, &e) {
                    return None;
                }
            }
            if left {
                GeneratorClass::LHornSharp
            } else {
                GeneratorClass::RHornSharp
            }
        };
        Some(Move::Horn { x, k, class })
    }

    fn apply(&self, st: &mut State, m: &Move) {
        match *m {
            Move::Horn { x, k, .. } => {
                st.present[x] = true;
                st.present[self.b.face(x, k).nd] = true;
                if self.b.dim(x) == 1 {
                    // a 1-dimensional horn is outer and marks its edge
                    st.marked[x] = true;
                }
            }
            Move::Triangle { t } => st.marked[self.b.face(t, 1).nd] = true,
        }
    }

    /// Marks long edges of triangles until nothing changes.
    fn close_triangles(&mut self, st: &mut State) {
        if !self.class.allows_marking() {
            return;
        }
        loop {
            let mut changed = false;
            for &t in &self.triangles {
                if !st.present[t] {
                    continue;
                }
                let long = self.b.face(t, 1);
                if !long.is_nondeg() || st.marked[long.nd] || !self.want_marked[long.nd] {
                    continue;
                }
                if self.stage_marked(st, self.b.face(t, 2)) && self.stage_marked(st, self.b.face(t, 0)) {
                    st.marked[long.nd] = true;
                    self.path.push(Move::Triangle { t });
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn dead(&self, st: &State) -> bool {
        for z in self.b.ids() {
            if !st.present[z] {
                let faces_in = self.b.simplex(z).faces.iter().all(|f| st.present[f.nd]);
                if faces_in && !self.cof[z].iter().any(|&(y, _)| !st.present[y]) {
                    return true;
                }
            } else if self.want_marked[z] && !st.marked[z] && !self.cof[z].iter().any(|&(_, i)| i == 1) {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, st: &State) -> Result<bool, Stop> {
        self.nodes += 1;
        if self.nodes > self.cfg.node_budget {
            return Err(Stop::Budget);
        }
        if self.done(st) {
            return Ok(true);
        }
        if self.path.len() >= self.cfg.step_budget {
            return Err(Stop::Budget);
        }
        let key = st.key();
        if self.failed.contains(&key) {
            return Ok(false);
        }
        if !self.dead(st) {
            let moves: Vec<Move> = self.order.iter().filter(|&&x| !st.present[x]).filter_map(|&x| self.horn_move(st, x)).collect();
            for m in moves {
                let mark = self.path.len();
                let mut next = st.clone();
                self.apply(&mut next, &m);
                self.path.push(m);
                self.close_triangles(&mut next);
                if self.dfs(&next)? {
                    return Ok(true);
                }
                self.path.truncate(mark);
            }
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// Searches for moves taking the stage `(present, marked)` of `b` to all of `b`.
pub fn search_moves(b: &SimplicialSet, present: &BTreeSet<Id>, marked: &BTreeSet<Id>, class: TargetClass, cfg: &SearchConfig) -> (Result<Vec<Move>, String>, usize, bool) {
    let want_marked: Vec<bool> = b.ids().map(|e| b.is_marked_id(e)).collect();
    let mut order: Vec<Id> = b.ids().collect();
    order.sort_by(|&x, &y| (b.dim(x), b.label(x)).cmp(&(b.dim(y), b.label(y))));
    let mut s = Searcher {
        b,
        class,
        cfg,
        cof: b.cofaces(),
        order,
        triangles: b.of_dim(2),
        want_marked,
        nodes: 0,
        failed: HashSet::new(),
        path: Vec::new(),
    };
    let mut st = State { present: b.ids().map(|x| present.contains(&x)).collect(), marked: b.ids().map(|x| marked.contains(&x)).collect() };
    if class == TargetClass::Inner && st.marked != s.want_marked {
        return (Err("inner anodyne maps add no markings, and the target has more".into()), 0, true);
    }
    // an edge that is already there can only be marked as the long edge of a triangle
    let cof = &s.cof;
    if let Some(e) = b.of_dim(1).into_iter().find(|&e| st.present[e] && !st.marked[e] && s.want_marked[e] && (!class.allows_marking() || !cof[e].iter().any(|&(_, i)| i == 1))) {
        return (Err(format!("edge `{}` is present unmarked and is not the long edge of any triangle", b.label(e))), 0, true);
    }
    s.close_triangles(&mut st);
    let r = match s.dfs(&st) {
        Ok(true) => Ok(std::mem::take(&mut s.path)),
        Ok(false) => Err(Stop::Exhausted("every attachment order dead-ends".into())),
        Err(e) => Err(e),
    };
    match r {
        Ok(p) => (Ok(p), s.nodes, true),
        Err(Stop::Exhausted(why)) => (Err(why), s.nodes, true),
        Err(Stop::Budget) => (Err("budget exhausted".into()), s.nodes, false),
    }
}

/// Converts moves into certificate steps, naming simplices of `b` by `name_of`.
pub fn moves_to_steps(b: &SimplicialSet, moves: &[Move], name_of: &dyn Fn(Id) -> String) -> Vec<Step> {
    moves
        .iter()
        .map(|m| match *m {
            Move::Horn { x, k, class } => horn_step(b, x, k, class, name_of),
            Move::Triangle { t } => triangle_step(b, t, name_of),
        })
        .collect()
}

/// Stage names for target simplices: source names on the image, target
/// labels elsewhere, made unique the same way replay does.
pub(crate) fn stage_names(incl: &MarkedMap, moves: &[Move]) -> HashMap<Id, String> {
    let b = &incl.target;
    let mut names: HashMap<Id, String> = HashMap::new();
    let mut used: HashSet<String> = HashSet::new();
    for s in incl.source.ids() {
        names.insert(incl.map.images[s].nd, incl.source.label(s).to_string());
        used.insert(incl.source.label(s).to_string());
    }
    for m in moves {
        if let Move::Horn { x, k, .. } = *m {
            // the pushout adds the missing face before the top simplex
            for y in [b.face(x, k).nd, x] {
                let base = b.label(y).to_string();
                let name = if used.contains(&base) { (1..).map(|i| format!("{base}#{i}")).find(|l| !used.contains(l)).unwrap() } else { base };
                used.insert(name.clone());
                names.insert(y, name);
            }
        }
    }
    names
}

/// Searches for a certificate that `incl` lies in `class`.
pub fn search_decomposition(incl: &MarkedMap, class: TargetClass, cfg: &SearchConfig) -> SearchOutcome {
    let present: BTreeSet<Id> = incl.map.image_ids();
    let marked: BTreeSet<Id> = incl.source.marked().iter().map(|&e| incl.map.images[e].nd).collect();
    let (r, nodes, exhaustive) = search_moves(&incl.target, &present, &marked, class, cfg);
    match r {
        Ok(moves) => {
            let names = stage_names(incl, &moves);
            let mut certificate = Certificate::new(incl, class);
            certificate.steps = moves_to_steps(&incl.target, &moves, &|y| names[&y].clone());
            SearchOutcome::Found { certificate, nodes }
        }
        Err(reason) if exhaustive => {
            if cfg.witness {
                if let Some(witness) = find_lifting_witness(incl, class, cfg.witness_map_limit) {
                    return SearchOutcome::Rejected { witness, nodes };
                }
            }
            SearchOutcome::NoneWithinBudget { nodes, node_budget: cfg.node_budget, step_budget: cfg.step_budget, reason }
        }
        Err(_) => SearchOutcome::BudgetExhausted { nodes, node_budget: cfg.node_budget, step_budget: cfg.step_budget },
    }
}

/// Looks for a map `A -> N(C)` with no extension along `incl`, for `C` in
/// the builtin corpus. Nerves carry their natural marking except for the
/// inner class, where markings are ignored.
pub fn find_lifting_witness(incl: &MarkedMap, class: TargetClass, map_limit: usize) -> Option<LiftingWitness> {
    let marked = class != TargetClass::Inner;
    let d = incl.target.top_dim().unwrap_or(0).max(1);
    let cats = corpus();
    let found: Vec<Option<LiftingWitness>> = cats
        .par_iter()
        .map(|(name, c)| {
            let n = nerve_truncated(c, d, marked);
            for m in enumerate_maps(&incl.source, &n.set, &HashMap::new(), marked, Some(map_limit)) {
                let fixed: HashMap<Id, Ez> = incl.source.ids().map(|s| (incl.map.images[s].nd, m.images[s].clone())).collect();
                if enumerate_maps(&incl.target, &n.set, &fixed, marked, Some(1)).is_empty() {
                    let assignment = incl.source.ids().map(|s| (incl.source.label(s).to_string(), n.set.describe(&m.images[s]))).collect();
                    return Some(LiftingWitness { category: name.to_string(), assignment });
                }
            }
            None
        })
        .collect();
    found.into_iter().flatten().next()
}

/// Checks a witness independently of the search.
pub fn check_witness(incl: &MarkedMap, class: TargetClass, w: &LiftingWitness) -> bool {
    let marked = class != TargetClass::Inner;
    let Some((_, c)) = corpus().into_iter().find(|(n, _)| *n == w.category) else { return false };
    let d = incl.target.top_dim().unwrap_or(0).max(1);
    let n = nerve_truncated(&c, d, marked);
    for m in enumerate_maps(&incl.source, &n.set, &HashMap::new(), marked, None) {
        let matches = incl.source.ids().all(|s| w.assignment.get(incl.source.label(s)) == Some(&n.set.describe(&m.images[s])));
        if matches {
            let fixed: HashMap<Id, Ez> = incl.source.ids().map(|s| (incl.map.images[s].nd, m.images[s].clone())).collect();
            return enumerate_maps(&incl.target, &n.set, &fixed, marked, Some(1)).is_empty();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anodyne::certificate::verify_certificate;
    use crate::sset::build::{boundary, spine, standard_simplex};

    #[test]
    fn spines_are_inner_anodyne() {
        for n in 2..=5 {
            let incl = MarkedMap::inclusion(&spine(n), &standard_simplex(n, None)).unwrap();
            let out = search_decomposition(&incl, TargetClass::Inner, &SearchConfig::default());
            let cert = out.certificate().unwrap_or_else(|| panic!("n = {n}: {}", out.kind()));
            verify_certificate(cert).unwrap();
        }
    }

    #[test]
    fn boundary_is_rejected() {
        let incl = MarkedMap::inclusion(&boundary(2), &standard_simplex(2, None)).unwrap();
        match search_decomposition(&incl, TargetClass::Inner, &SearchConfig::default()) {
            SearchOutcome::Rejected { witness, .. } => {
                assert!(check_witness(&incl, TargetClass::Inner, &witness));
            }
            other => panic!("{}", other.kind()),
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let incl = MarkedMap::inclusion(&spine(4), &standard_simplex(4, None)).unwrap();
        let cfg = SearchConfig { node_budget: 3, ..Default::default() };
        assert_eq!(search_decomposition(&incl, TargetClass::Inner, &cfg).kind(), "budget_exhausted");
    }
}
