//! Finite simplicial sets in Eilenberg–Zilber form.
//!
//! Only nondegenerate simplices are stored. Each one records its faces as
//! `(surjection, nondegenerate target)` pairs, and every other simplex is
//! reached through [`SimplicialSet::apply`].

pub mod build;
pub mod construct;
pub mod iso;
pub mod json;
pub mod maps;
pub mod op;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

pub use maps::SimplicialMap;
pub use op::SimplexOp;

pub type Id = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SsetError {
    #[error("unknown simplex `{0}`")]
    Unknown(String),
    #[error("duplicate simplex label `{0}`")]
    Duplicate(String),
    #[error("malformed face {face} of `{label}`: {why}")]
    BadFace { label: String, face: usize, why: String },
    #[error("simplicial identity fails on `{label}` for faces {i} < {j}")]
    Identity { label: String, i: usize, j: usize },
    #[error("`{0}` is not an edge")]
    NotEdge(String),
    #[error("map is not a monomorphism: {0}")]
    NotMono(String),
    #[error("invalid map: {0}")]
    BadMap(String),
    #[error("{0}")]
    Other(String),
}

/// A simplex written as `nd ∘ surj`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ez {
    pub surj: Vec<usize>,
    pub nd: Id,
}

impl Ez {
    pub fn nondeg(nd: Id, dim: usize) -> Ez {
        Ez { surj: op::identity(dim), nd }
    }

    pub fn is_nondeg(&self) -> bool {
        op::is_identity(&self.surj)
    }

    pub fn dim(&self) -> usize {
        self.surj.len() - 1
    }

    /// `self ∘ s` for a monotone `s` landing in `[self.dim()]`.
    pub fn precompose(&self, s: &[usize]) -> Ez {
        Ez { surj: op::compose(&self.surj, s), nd: self.nd }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub dim: usize,
    pub label: String,
    pub faces: Vec<Ez>,
    pub verts: Vec<Id>,
}

#[derive(Clone, Debug, Default)]
pub struct SimplicialSet {
    simplices: Vec<Simplex>,
    by_label: HashMap<String, Id>,
    marked: BTreeSet<Id>,
    dims: usize,
    truncation: Option<usize>,
}

impl SimplicialSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Declared top dimension; a truncation bound for nerves.
    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn set_dims(&mut self, d: usize) {
        self.dims = self.dims.max(d);
    }

    /// `Some(d)` when only the `d`-skeleton of a larger object is stored.
    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn set_truncation(&mut self, d: Option<usize>) {
        self.truncation = d;
    }

    pub fn simplex(&self, x: Id) -> &Simplex {
        &self.simplices[x]
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn dim(&self, x: Id) -> usize {
        self.simplices[x].dim
    }

    pub fn label(&self, x: Id) -> &str {
        &self.simplices[x].label
    }

    pub fn face(&self, x: Id, i: usize) -> &Ez {
        &self.simplices[x].faces[i]
    }

    pub fn verts(&self, x: Id) -> &[Id] {
        &self.simplices[x].verts
    }

    pub fn id(&self, label: &str) -> Option<Id> {
        self.by_label.get(label).copied()
    }

    pub fn get(&self, label: &str) -> Result<Id, SsetError> {
        self.id(label).ok_or_else(|| SsetError::Unknown(label.to_string()))
    }

    pub fn ids(&self) -> std::ops::Range<Id> {
        0..self.simplices.len()
    }

    pub fn of_dim(&self, d: usize) -> Vec<Id> {
        self.ids().filter(|&x| self.dim(x) == d).collect()
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.dim).max()
    }

    /// Nondegenerate counts by dimension.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.top_dim().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            c[s.dim] += 1;
        }
        c
    }

    pub fn vertex(&mut self, label: &str) -> Result<Id, SsetError> {
        self.add(label, Vec::new())
    }

    /// Adds a nondegenerate simplex of dimension `faces.len() - 1`
    /// (a vertex for empty `faces`).
    pub fn add(&mut self, label: &str, faces: Vec<Ez>) -> Result<Id, SsetError> {
        if self.by_label.contains_key(label) {
            return Err(SsetError::Duplicate(label.to_string()));
        }
        let dim = if faces.is_empty() { 0 } else { faces.len() - 1 };
        for (i, f) in faces.iter().enumerate() {
            let bad = |why: &str| SsetError::BadFace { label: label.to_string(), face: i, why: why.to_string() };
            if f.nd >= self.simplices.len() {
                return Err(bad("target does not exist"));
            }
            if f.surj.len() != dim || !op::is_surjection(&f.surj) {
                return Err(bad("degeneracy part is not a surjection of the right length"));
            }
            if op::surj_dim(&f.surj) != self.dim(f.nd) {
                return Err(bad("degeneracy part does not land on the target dimension"));
            }
        }
        let verts = if dim == 0 {
            vec![self.simplices.len()]
        } else {
            let last = &faces[dim];
            let first = &faces[0];
            let mut v: Vec<Id> = (0..dim).map(|j| self.verts(last.nd)[last.surj[j]]).collect();
            v.push(self.verts(first.nd)[first.surj[dim - 1]]);
            v
        };
        let id = self.simplices.len();
        self.simplices.push(Simplex { dim, label: label.to_string(), faces, verts });
        self.by_label.insert(label.to_string(), id);
        self.dims = self.dims.max(dim);
        Ok(id)
    }

    /// Adds a simplex under a label made unique by a numeric suffix.
    pub fn add_fresh(&mut self, label: &str, faces: Vec<Ez>) -> Result<Id, SsetError> {
        let l = self.fresh_label(label);
        self.add(&l, faces)
    }

    pub fn fresh_label(&self, label: &str) -> String {
        if !self.by_label.contains_key(label) {
            return label.to_string();
        }
        (1..).map(|k| format!("{label}#{k}")).find(|l| !self.by_label.contains_key(l)).unwrap()
    }

    /// `x ∘ op` in normal form, for monotone `op : [m] -> [dim x]`.
    pub fn apply(&self, img: &[usize], x: Id) -> Ez {
        let (surj, inj) = op::factor(img);
        let e = self.apply_inj(&inj, x);
        Ez { surj: op::compose(&e.surj, &surj), nd: e.nd }
    }

    /// `z ∘ op` for an arbitrary simplex `z`.
    pub fn apply_ez(&self, img: &[usize], z: &Ez) -> Ez {
        self.apply(&op::compose(&z.surj, img), z.nd)
    }

    fn apply_inj(&self, inj: &[usize], x: Id) -> Ez {
        let d = self.dim(x);
        if inj.len() == d + 1 {
            return Ez::nondeg(x, d);
        }
        let i = (0..=d).find(|v| !inj.contains(v)).unwrap();
        let f = &self.simplices[x].faces[i];
        let shifted: Vec<usize> = inj.iter().map(|&v| if v > i { v - 1 } else { v }).collect();
        self.apply(&op::compose(&f.surj, &shifted), f.nd)
    }

    /// Face `d_i` of an arbitrary simplex.
    pub fn face_ez(&self, z: &Ez, i: usize) -> Ez {
        self.apply_ez(&op::coface(z.dim(), i), z)
    }

    /// The edge between vertex positions `a < b` of `x`.
    pub fn edge_of(&self, x: Id, a: usize, b: usize) -> Ez {
        self.apply(&[a, b], x)
    }

    /// The vertex at position `j` of an arbitrary simplex.
    pub fn vertex_of(&self, z: &Ez, j: usize) -> Id {
        self.verts(z.nd)[z.surj[j]]
    }

    pub fn vertex_list(&self, z: &Ez) -> Vec<Id> {
        z.surj.iter().map(|&j| self.verts(z.nd)[j]).collect()
    }

    // markings

    pub fn marked(&self) -> &BTreeSet<Id> {
        &self.marked
    }

    /// Degenerate edges count as marked.
    pub fn is_marked(&self, e: &Ez) -> bool {
        e.dim() == 1 && (!e.is_nondeg() || self.marked.contains(&e.nd))
    }

    pub fn is_marked_id(&self, e: Id) -> bool {
        self.marked.contains(&e)
    }

    pub fn mark(&mut self, e: Id) -> Result<(), SsetError> {
        if self.dim(e) != 1 {
            return Err(SsetError::NotEdge(self.label(e).to_string()));
        }
        self.marked.insert(e);
        Ok(())
    }

    pub fn mark_labels(&mut self, labels: &[&str]) -> Result<(), SsetError> {
        for l in labels {
            let e = self.get(l)?;
            self.mark(e)?;
        }
        Ok(())
    }

    pub fn with_marked<I: IntoIterator<Item = Id>>(mut self, edges: I) -> Result<Self, SsetError> {
        for e in edges {
            self.mark(e)?;
        }
        Ok(self)
    }

    pub fn flat(&self) -> Self {
        let mut s = self.clone();
        s.marked.clear();
        s
    }

    pub fn sharp(&self) -> Self {
        let mut s = self.clone();
        s.marked = s.of_dim(1).into_iter().collect();
        s
    }

    pub fn set_marked(&mut self, m: BTreeSet<Id>) {
        self.marked = m;
    }

    /// Checks every face assignment against the simplicial identities
    /// `d_i d_j = d_{j-1} d_i` for `i < j`.
    pub fn validate(&self) -> Result<(), SsetError> {
        for x in self.ids() {
            let d = self.dim(x);
            if d < 2 {
                continue;
            }
            for j in 0..=d {
                for i in 0..j {
                    let a = self.face_ez(self.face(x, j), i);
                    let b = self.face_ez(self.face(x, i), j - 1);
                    if a != b {
                        return Err(SsetError::Identity { label: self.label(x).to_string(), i, j });
                    }
                }
            }
        }
        for &e in &self.marked {
            if self.dim(e) != 1 {
                return Err(SsetError::NotEdge(self.label(e).to_string()));
            }
        }
        Ok(())
    }

    /// Subcomplex spanned by `keep`, which must be closed under faces.
    /// Returns it with its inclusion.
    pub fn sub(&self, keep: &BTreeSet<Id>) -> Result<(SimplicialSet, SimplicialMap), SsetError> {
        let mut out = SimplicialSet::new();
        let mut new_id = HashMap::new();
        let mut order: Vec<Id> = keep.iter().copied().collect();
        order.sort_by_key(|&x| (self.dim(x), x));
        let mut images = Vec::new();
        for x in order {
            let mut faces = Vec::new();
            for f in &self.simplices[x].faces {
                let t = *new_id.get(&f.nd).ok_or_else(|| {
                    SsetError::Other(format!("`{}` is in the subcomplex but its face `{}` is not", self.label(x), self.label(f.nd)))
                })?;
                faces.push(Ez { surj: f.surj.clone(), nd: t });
            }
            let id = out.add(self.label(x), faces)?;
            new_id.insert(x, id);
            images.push(Ez::nondeg(x, self.dim(x)));
        }
        for &e in &self.marked {
            if let Some(&t) = new_id.get(&e) {
                out.marked.insert(t);
            }
        }
        out.dims = self.dims;
        out.truncation = self.truncation;
        Ok((out, SimplicialMap::new(images)))
    }

    /// Smallest face-closed set containing `gens`.
    pub fn closure<I: IntoIterator<Item = Id>>(&self, gens: I) -> BTreeSet<Id> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<Id> = gens.into_iter().collect();
        while let Some(x) = stack.pop() {
            if out.insert(x) {
                for f in &self.simplices[x].faces {
                    stack.push(f.nd);
                }
            }
        }
        out
    }

    /// Cofaces: for each simplex, the simplices having it as a direct face.
    pub fn cofaces(&self) -> Vec<Vec<(Id, usize)>> {
        let mut out = vec![Vec::new(); self.len()];
        for x in self.ids() {
            for (i, f) in self.simplices[x].faces.iter().enumerate() {
                if f.is_nondeg() {
                    out[f.nd].push((x, i));
                }
            }
        }
        out
    }

    /// All simplices of dimension `d`, degenerate ones included.
    pub fn all_of_dim(&self, d: usize) -> Vec<Ez> {
        let mut out = Vec::new();
        for x in self.ids() {
            let e = self.dim(x);
            if e <= d {
                for s in op::surjections(d, e) {
                    out.push(Ez { surj: s, nd: x });
                }
            }
        }
        out
    }

    pub fn marked_labels(&self) -> Vec<String> {
        self.marked.iter().map(|&e| self.label(e).to_string()).collect()
    }

    pub fn describe(&self, z: &Ez) -> String {
        if z.is_nondeg() {
            self.label(z.nd).to_string()
        } else {
            format!("{}·s{:?}", self.label(z.nd), op::deg_word(&z.surj))
        }
    }
}

/// Joins vertex names into a simplex label.
pub fn vlabel<S: AsRef<str>>(names: &[S]) -> String {
    let width = |n: &str| n.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count();
    if names.iter().all(|n| width(n.as_ref()) == 1) {
        names.iter().map(|n| n.as_ref()).collect()
    } else {
        names.iter().map(|n| n.as_ref()).collect::<Vec<_>>().join(",")
    }
}
