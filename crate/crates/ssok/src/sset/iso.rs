//! Isomorphism search by backtracking over vertices.
//!
//! Simplices are placed in an order where each one follows all of its
//! vertices, so candidates are looked up by the image vertex tuple.

use std::collections::{BTreeMap, HashMap};

use super::{op, Ez, Id, SimplicialMap, SimplicialSet};

pub const DEFAULT_SIZE_BUDGET: usize = 5000;
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    Iso(SimplicialMap),
    NotIsomorphic,
    BudgetExceeded { size: usize, budget: usize },
}

impl IsoOutcome {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso(_))
    }

    pub fn map(self) -> Option<SimplicialMap> {
        match self {
            IsoOutcome::Iso(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsoOptions {
    /// Require markings to correspond.
    pub marked: bool,
    /// Optional colors that must be preserved.
    pub colors_a: Option<Vec<u32>>,
    pub colors_b: Option<Vec<u32>>,
    /// Pairs `(a, b)` forced into the isomorphism.
    pub fixed: HashMap<Id, Id>,
    pub size_budget: usize,
    pub node_budget: usize,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            marked: true,
            colors_a: None,
            colors_b: None,
            fixed: HashMap::new(),
            size_budget: DEFAULT_SIZE_BUDGET,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

type Sig = (usize, u32, bool, Vec<Vec<usize>>, Vec<usize>);

fn signatures(x: &SimplicialSet, colors: Option<&Vec<u32>>, marked: bool) -> Vec<Sig> {
    let cof = x.cofaces();
    x.ids()
        .map(|s| {
            let d = x.dim(s);
            let degs: Vec<Vec<usize>> = x.simplex(s).faces.iter().map(|f| op::deg_word(&f.surj)).collect();
            let mut prof = vec![0usize; d + 2];
            for &(_, i) in &cof[s] {
                prof[i] += 1;
            }
            let c = colors.map_or(0, |c| c[s]);
            (d, c, marked && x.is_marked_id(s), degs, prof)
        })
        .collect()
}

fn histogram(sigs: &[Sig]) -> BTreeMap<&Sig, usize> {
    let mut h = BTreeMap::new();
    for s in sigs {
        *h.entry(s).or_insert(0) += 1;
    }
    h
}

/// Searches for an isomorphism with default options (markings respected).
pub fn is_isomorphic(a: &SimplicialSet, b: &SimplicialSet) -> IsoOutcome {
    find_iso(a, b, &IsoOptions::default())
}

/// Ignores markings.
pub fn is_isomorphic_unmarked(a: &SimplicialSet, b: &SimplicialSet) -> IsoOutcome {
    find_iso(a, b, &IsoOptions { marked: false, ..Default::default() })
}

/// Isomorphism `b -> d` carrying the image of `ia` onto the image of `ic`.
pub fn iso_of_inclusions(
    ia: &SimplicialMap,
    b: &SimplicialSet,
    ic: &SimplicialMap,
    d: &SimplicialSet,
    marked: bool,
) -> IsoOutcome {
    let mut ca = vec![0u32; b.len()];
    for z in &ia.images {
        ca[z.nd] = 1;
    }
    let mut cc = vec![0u32; d.len()];
    for z in &ic.images {
        cc[z.nd] = 1;
    }
    find_iso(b, d, &IsoOptions { marked, colors_a: Some(ca), colors_b: Some(cc), ..Default::default() })
}

pub fn find_iso(a: &SimplicialSet, b: &SimplicialSet, opts: &IsoOptions) -> IsoOutcome {
    let size = a.len().max(b.len());
    if size > opts.size_budget {
        return IsoOutcome::BudgetExceeded { size, budget: opts.size_budget };
    }
    if a.len() != b.len() || a.counts() != b.counts() {
        return IsoOutcome::NotIsomorphic;
    }
    let sa = signatures(a, opts.colors_a.as_ref(), opts.marked);
    let sb = signatures(b, opts.colors_b.as_ref(), opts.marked);
    if histogram(&sa) != histogram(&sb) {
        return IsoOutcome::NotIsomorphic;
    }
    for (&x, &y) in &opts.fixed {
        if x >= a.len() || y >= b.len() || sa[x] != sb[y] {
            return IsoOutcome::NotIsomorphic;
        }
    }

    // placement order: each vertex, then everything it completes
    let mut verts = a.of_dim(0);
    verts.sort_by_key(|&v| (!opts.fixed.contains_key(&v), v));
    let mut placed_v = vec![false; a.len()];
    let mut done = vec![false; a.len()];
    let mut order = Vec::with_capacity(a.len());
    let by_dim: Vec<Id> = {
        let mut v: Vec<Id> = a.ids().filter(|&x| a.dim(x) > 0).collect();
        v.sort_by_key(|&x| (a.dim(x), x));
        v
    };
    for v in verts {
        placed_v[v] = true;
        order.push(v);
        done[v] = true;
        for &x in &by_dim {
            if !done[x] && a.verts(x).iter().all(|&w| placed_v[w]) {
                done[x] = true;
                order.push(x);
            }
        }
    }

    let mut index: HashMap<(usize, Vec<Id>), Vec<Id>> = HashMap::new();
    for y in b.ids() {
        index.entry((b.dim(y), b.verts(y).to_vec())).or_default().push(y);
    }
    let bverts = b.of_dim(0);
    let mut st = State {
        a,
        b,
        sa: &sa,
        sb: &sb,
        fixed: &opts.fixed,
        order: &order,
        index: &index,
        bverts: &bverts,
        fwd: vec![None; a.len()],
        used: vec![false; b.len()],
        nodes: 0,
        node_budget: opts.node_budget,
    };
    match st.rec(0) {
        Some(true) => IsoOutcome::Iso(SimplicialMap::new(
            a.ids().map(|x| Ez::nondeg(st.fwd[x].unwrap(), a.dim(x))).collect(),
        )),
        Some(false) => IsoOutcome::NotIsomorphic,
        None => IsoOutcome::BudgetExceeded { size: st.nodes, budget: opts.node_budget },
    }
}

struct State<'a> {
    a: &'a SimplicialSet,
    b: &'a SimplicialSet,
    sa: &'a [Sig],
    sb: &'a [Sig],
    fixed: &'a HashMap<Id, Id>,
    order: &'a [Id],
    index: &'a HashMap<(usize, Vec<Id>), Vec<Id>>,
    bverts: &'a [Id],
    fwd: Vec<Option<Id>>,
    used: Vec<bool>,
    nodes: usize,
    node_budget: usize,
}

impl State<'_> {
    /// `None` when the node budget runs out.
    fn rec(&mut self, pos: usize) -> Option<bool> {
        if pos == self.order.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return None;
        }
        let x = self.order[pos];
        let d = self.a.dim(x);
        let cands: Vec<Id> = if let Some(&y) = self.fixed.get(&x) {
            vec![y]
        } else if d == 0 {
            self.bverts.to_vec()
        } else {
            let key: Vec<Id> = self.a.verts(x).iter().map(|&v| self.fwd[v].unwrap()).collect();
            self.index.get(&(d, key)).cloned().unwrap_or_default()
        };
        for y in cands {
            if self.used[y] || self.sa[x] != self.sb[y] {
                continue;
            }
            let faces_ok = (0..self.a.simplex(x).faces.len()).all(|i| {
                let f = self.a.face(x, i);
                let g = self.b.face(y, i);
                f.surj == g.surj && self.fwd[f.nd] == Some(g.nd)
            });
            if !faces_ok {
                continue;
            }
            self.fwd[x] = Some(y);
            self.used[y] = true;
            match self.rec(pos + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.fwd[x] = None;
            self.used[y] = false;
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::super::build::*;
    use super::super::construct::*;
    use super::*;

    #[test]
    fn joins_of_simplices() {
        let j = join(&standard_simplex(1, None), &standard_simplex(1, None));
        assert!(is_isomorphic(&j.set, &standard_simplex(3, None)).is_iso());
    }

    #[test]
    fn horns_relabel() {
        // a path and a span: same undirected shape, different orientation
        assert_eq!(is_isomorphic(&horn(2, 1).unwrap(), &horn(2, 0).unwrap()), IsoOutcome::NotIsomorphic);
        let op = super::super::construct::opposite(&horn(2, 0).unwrap());
        assert!(is_isomorphic(&op, &horn(2, 2).unwrap()).is_iso());
        assert_eq!(is_isomorphic(&boundary(2), &spine(2)), IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn budget_is_distinct() {
        let opts = IsoOptions { size_budget: 10, ..Default::default() };
        let s = standard_simplex(4, None);
        assert!(matches!(find_iso(&s, &s, &opts), IsoOutcome::BudgetExceeded { .. }));
    }

    #[test]
    fn markings_matter() {
        let a = standard_simplex(1, None);
        assert_eq!(is_isomorphic(&a, &a.sharp()), IsoOutcome::NotIsomorphic);
        assert!(is_isomorphic_unmarked(&a, &a.sharp()).is_iso());
    }
}
