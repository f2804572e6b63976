//! Finite categories given by explicit composition tables.

pub mod corpus;
pub mod json;
pub mod nerve;
pub mod shapes;
pub mod slower;
pub mod tw;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("composition table: {0}")]
    Composition(String),
    #[error("{0}")]
    Law(String),
    #[error("{0}")]
    Other(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, Default)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    /// `(g, f) -> g ∘ f` for every composable pair.
    comp: HashMap<(usize, usize), usize>,
    homs: HashMap<(usize, usize), Vec<usize>>,
}

impl FiniteCategory {
    /// Builds a category from a composition function on composable pairs.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut c = FiniteCategory { objects, morphisms, identity, comp: HashMap::new(), homs: HashMap::new() };
        c.index_homs();
        let mut comp = HashMap::new();
        for f in 0..c.morphisms.len() {
            for &g in c.out_of(c.morphisms[f].tgt) {
                comp.insert((g, f), compose(g, f));
            }
        }
        c.comp = comp;
        c
    }

    /// Builds a category from a partial table; identities compose implicitly.
    pub fn from_table(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<usize>,
        table: &HashMap<(usize, usize), usize>,
    ) -> Result<Self, CatError> {
        let mut c = FiniteCategory { objects, morphisms, identity, comp: HashMap::new(), homs: HashMap::new() };
        c.index_homs();
        for f in 0..c.morphisms.len() {
            let t = c.morphisms[f].tgt;
            for &g in c.out_of(t).to_vec().iter() {
                let h = if c.is_identity(g) {
                    f
                } else if c.is_identity(f) {
                    g
                } else {
                    *table.get(&(g, f)).ok_or_else(|| {
                        CatError::Composition(format!("missing composite {} ∘ {}", c.morphisms[g].name, c.morphisms[f].name))
                    })?
                };
                c.comp.insert((g, f), h);
            }
        }
        Ok(c)
    }

    fn index_homs(&mut self) {
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut outs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in self.morphisms.iter().enumerate() {
            homs.entry((m.src, m.tgt)).or_default().push(i);
            outs.entry((usize::MAX, m.src)).or_default().push(i);
        }
        homs.extend(outs);
        self.homs = homs;
    }

    /// Morphisms with source `x`.
    pub fn out_of(&self, x: usize) -> &[usize] {
        self.homs.get(&(usize::MAX, x)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        self.homs.get(&(x, y)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.morphisms[f].tgt
    }

    pub fn name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.morphisms[f].src] == f
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g, f)).copied()
    }

    pub fn object(&self, name: &str) -> Result<usize, CatError> {
        self.objects.iter().position(|o| o == name).ok_or_else(|| CatError::UnknownObject(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<usize, CatError> {
        self.morphisms.iter().position(|m| m.name == name).ok_or_else(|| CatError::UnknownMorphism(name.to_string()))
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (x, y) = (self.src(f), self.tgt(f));
        self.hom(y, x).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identity(x)) && self.compose(f, g) == Some(self.identity(y))
        })
    }

    pub fn is_iso(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.num_morphisms()).all(|f| self.is_iso(f))
    }

    /// Checks identities, closure, units and associativity exhaustively.
    pub fn validate(&self) -> Result<(), CatError> {
        for (x, &i) in self.identity.iter().enumerate() {
            if self.src(i) != x || self.tgt(i) != x {
                return Err(CatError::Law(format!("identity of `{}` has wrong endpoints", self.objects[x])));
            }
        }
        for f in 0..self.num_morphisms() {
            let (x, y) = (self.src(f), self.tgt(f));
            if self.compose(f, self.identity(x)) != Some(f) || self.compose(self.identity(y), f) != Some(f) {
                return Err(CatError::Law(format!("unit law fails for `{}`", self.name(f))));
            }
            for &g in self.out_of(y) {
                let gf = self.compose(g, f).ok_or_else(|| CatError::Composition(format!("{} ∘ {} undefined", self.name(g), self.name(f))))?;
                if self.src(gf) != x || self.tgt(gf) != self.tgt(g) {
                    return Err(CatError::Law(format!("{} ∘ {} has wrong endpoints", self.name(g), self.name(f))));
                }
                for &h in self.out_of(self.tgt(g)) {
                    let l = self.compose(h, gf);
                    let r = self.compose(self.compose(h, g).unwrap(), f);
                    if l != r {
                        return Err(CatError::Law(format!(
                            "associativity fails for {}, {}, {}",
                            self.name(h),
                            self.name(g),
                            self.name(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> FiniteCategory {
        let morphisms = self.morphisms.iter().map(|m| Morphism { name: m.name.clone(), src: m.tgt, tgt: m.src }).collect();
        FiniteCategory::from_fn(self.objects.clone(), morphisms, self.identity.clone(), |g, f| self.compose(f, g).unwrap())
    }

    /// Full subcategory on the objects satisfying `keep`, with the object map.
    pub fn full_subcategory(&self, keep: impl Fn(usize) -> bool) -> (FiniteCategory, Vec<usize>) {
        let objs: Vec<usize> = (0..self.num_objects()).filter(|&x| keep(x)).collect();
        let onew: HashMap<usize, usize> = objs.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mors: Vec<usize> =
            (0..self.num_morphisms()).filter(|&f| onew.contains_key(&self.src(f)) && onew.contains_key(&self.tgt(f))).collect();
        let mnew: HashMap<usize, usize> = mors.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let morphisms = mors
            .iter()
            .map(|&f| Morphism { name: self.name(f).to_string(), src: onew[&self.src(f)], tgt: onew[&self.tgt(f)] })
            .collect();
        let identity = objs.iter().map(|&x| mnew[&self.identity(x)]).collect();
        let c = FiniteCategory::from_fn(
            objs.iter().map(|&x| self.objects[x].clone()).collect(),
            morphisms,
            identity,
            |g, f| mnew[&self.compose(mors[g], mors[f]).unwrap()],
        );
        (c, objs)
    }

    /// Connected components of objects.
    pub fn pi0(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_objects());
        for m in &self.morphisms {
            uf.union(m.src, m.tgt);
        }
        uf.classes()
    }

    /// Histogram of hom-set sizes over all ordered pairs of objects.
    pub fn hom_profile(&self) -> BTreeMap<usize, usize> {
        let mut prof = BTreeMap::new();
        for x in 0..self.num_objects() {
            for y in 0..self.num_objects() {
                *prof.entry(self.hom(x, y).len()).or_insert(0) += 1;
            }
        }
        prof
    }
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Classes sorted by least element.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.parent.len() {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        by_root.into_values().collect()
    }
}

/// Builder for small categories given by generators-free tables.
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    table: HashMap<(usize, usize), usize>,
}

impl CategoryBuilder {
    pub fn new<S: AsRef<str>>(objects: &[S]) -> Self {
        let mut b = CategoryBuilder { objects: Vec::new(), morphisms: Vec::new(), identity: Vec::new(), table: HashMap::new() };
        for (i, o) in objects.iter().enumerate() {
            b.objects.push(o.as_ref().to_string());
            b.morphisms.push(Morphism { name: format!("id_{}", o.as_ref()), src: i, tgt: i });
            b.identity.push(i);
        }
        b
    }

    pub fn arrow(mut self, name: &str, src: &str, tgt: &str) -> Self {
        let s = self.objects.iter().position(|o| o == src).expect("known source");
        let t = self.objects.iter().position(|o| o == tgt).expect("known target");
        self.morphisms.push(Morphism { name: name.to_string(), src: s, tgt: t });
        self
    }

    /// Declares `g ∘ f = h`.
    pub fn comp(mut self, g: &str, f: &str, h: &str) -> Self {
        let id = |n: &str| self.morphisms.iter().position(|m| m.name == n).expect("known morphism");
        let key = (id(g), id(f));
        let v = id(h);
        self.table.insert(key, v);
        self
    }

    pub fn build(self) -> Result<FiniteCategory, CatError> {
        let c = FiniteCategory::from_table(self.objects, self.morphisms, self.identity, &self.table)?;
        c.validate()?;
        Ok(c)
    }
}

/// The poset `[n]` as a category.
pub fn ordinal(n: usize) -> FiniteCategory {
    poset(&(0..=n).map(|i| i.to_string()).collect::<Vec<_>>(), |a, b| a <= b)
}

/// A finite poset from a reflexive transitive relation.
pub fn poset<S: AsRef<str>>(names: &[S], le: impl Fn(usize, usize) -> bool) -> FiniteCategory {
    let n = names.len();
    let mut morphisms = Vec::new();
    let mut identity = vec![0; n];
    let mut idx = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            if le(a, b) {
                if a == b {
                    identity[a] = morphisms.len();
                }
                let name = if a == b {
                    format!("id_{}", names[a].as_ref())
                } else {
                    format!("{}{}", names[a].as_ref(), names[b].as_ref())
                };
                idx.insert((a, b), morphisms.len());
                morphisms.push(Morphism { name, src: a, tgt: b });
            }
        }
    }
    let objects = names.iter().map(|s| s.as_ref().to_string()).collect();
    let ms = morphisms.clone();
    FiniteCategory::from_fn(objects, morphisms, identity, |g, f| idx[&(ms[f].src, ms[g].tgt)])
}

/// One-object category of a finite group given by its multiplication table.
pub fn group(names: &[&str], mul: impl Fn(usize, usize) -> usize) -> FiniteCategory {
    let morphisms = names.iter().map(|n| Morphism { name: n.to_string(), src: 0, tgt: 0 }).collect();
    FiniteCategory::from_fn(vec!["*".to_string()], morphisms, vec![0], mul)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinals_are_categories() {
        let c = ordinal(3);
        c.validate().unwrap();
        assert_eq!(c.num_morphisms(), 10);
        assert_eq!(c.pi0().len(), 1);
    }

    #[test]
    fn z2_is_a_groupoid() {
        let c = group(&["e", "t"], |a, b| a ^ b);
        c.validate().unwrap();
        assert!(c.is_groupoid());
    }

    #[test]
    fn builder_rejects_missing_composite() {
        let r = CategoryBuilder::new(&["x", "y", "z"]).arrow("f", "x", "y").arrow("g", "y", "z").build();
        assert!(matches!(r, Err(CatError::Composition(_))));
    }
}
