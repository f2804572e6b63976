//! Simplicial maps and their enumeration.

use std::collections::{BTreeSet, HashMap};

use super::{op, Ez, Id, SimplicialSet, SsetError};

/// Images of the nondegenerate simplices of the source, indexed by source id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    pub images: Vec<Ez>,
}

impl SimplicialMap {
    pub fn new(images: Vec<Ez>) -> Self {
        SimplicialMap { images }
    }

    pub fn identity(a: &SimplicialSet) -> Self {
        SimplicialMap { images: a.ids().map(|x| Ez::nondeg(x, a.dim(x))).collect() }
    }

    /// Image of an arbitrary simplex of the source.
    pub fn image(&self, z: &Ez) -> Ez {
        let f = &self.images[z.nd];
        Ez { surj: op::compose(&f.surj, &z.surj), nd: f.nd }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> SimplicialMap {
        SimplicialMap { images: self.images.iter().map(|z| g.image(z)).collect() }
    }

    /// Checks dimensions, face compatibility and, if `marked`, preservation of markings.
    pub fn validate(&self, a: &SimplicialSet, b: &SimplicialSet, marked: bool) -> Result<(), SsetError> {
        if self.images.len() != a.len() {
            return Err(SsetError::BadMap(format!("{} images for {} simplices", self.images.len(), a.len())));
        }
        for x in a.ids() {
            let fx = &self.images[x];
            if fx.nd >= b.len() || fx.dim() != a.dim(x) || !op::is_surjection(&fx.surj) || op::surj_dim(&fx.surj) != b.dim(fx.nd) {
                return Err(SsetError::BadMap(format!("image of `{}` is malformed", a.label(x))));
            }
            for i in 0..a.simplex(x).faces.len() {
                let lhs = b.face_ez(fx, i);
                let rhs = self.image(a.face(x, i));
                if lhs != rhs {
                    return Err(SsetError::BadMap(format!(
                        "face {i} of `{}` maps to {} but the image has face {}",
                        a.label(x),
                        b.describe(&rhs),
                        b.describe(&lhs)
                    )));
                }
            }
        }
        if marked {
            for &e in a.marked() {
                if !b.is_marked(&self.images[e]) {
                    return Err(SsetError::BadMap(format!("marked edge `{}` lands on an unmarked edge", a.label(e))));
                }
            }
        }
        Ok(())
    }

    /// Injective on simplices: nondegenerate images, pairwise distinct.
    pub fn is_mono(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.images.iter().all(|z| z.is_nondeg() && seen.insert(z.nd))
    }

    pub fn check_mono(&self, a: &SimplicialSet) -> Result<(), SsetError> {
        let mut seen = HashMap::new();
        for x in a.ids() {
            let z = &self.images[x];
            if !z.is_nondeg() {
                return Err(SsetError::NotMono(format!("`{}` is sent to a degenerate simplex", a.label(x))));
            }
            if let Some(y) = seen.insert(z.nd, x) {
                return Err(SsetError::NotMono(format!("`{}` and `{}` have the same image", a.label(y), a.label(x))));
            }
        }
        Ok(())
    }

    /// Ids of the target hit by nondegenerate images.
    pub fn image_ids(&self) -> BTreeSet<Id> {
        self.images.iter().filter(|z| z.is_nondeg()).map(|z| z.nd).collect()
    }

    /// Label-matching inclusion of a subobject.
    pub fn by_labels(a: &SimplicialSet, b: &SimplicialSet) -> Result<SimplicialMap, SsetError> {
        let mut images = Vec::new();
        for x in a.ids() {
            let y = b.get(a.label(x))?;
            images.push(Ez::nondeg(y, b.dim(y)));
        }
        let m = SimplicialMap { images };
        m.validate(a, b, false)?;
        Ok(m)
    }
}

/// Index of all simplices of a target by vertex tuple, built per dimension on demand.
pub struct SimplexIndex<'a> {
    b: &'a SimplicialSet,
    by_dim: HashMap<usize, HashMap<Vec<Id>, Vec<Ez>>>,
}

impl<'a> SimplexIndex<'a> {
    pub fn new(b: &'a SimplicialSet) -> Self {
        SimplexIndex { b, by_dim: HashMap::new() }
    }

    pub fn candidates(&mut self, d: usize, verts: &[Id]) -> &[Ez] {
        let b = self.b;
        let table = self.by_dim.entry(d).or_insert_with(|| {
            let mut t: HashMap<Vec<Id>, Vec<Ez>> = HashMap::new();
            for z in b.all_of_dim(d) {
                t.entry(b.vertex_list(&z)).or_default().push(z);
            }
            t
        });
        table.get(verts).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

/// Enumerates simplicial maps `a -> b` extending the partial assignment `fixed`
/// (indexed by source id). Stops after `limit` maps when given.
pub fn enumerate_maps(
    a: &SimplicialSet,
    b: &SimplicialSet,
    fixed: &HashMap<Id, Ez>,
    marked: bool,
    limit: Option<usize>,
) -> Vec<SimplicialMap> {
    let mut order: Vec<Id> = a.ids().collect();
    order.sort_by_key(|&x| (a.dim(x), x));
    let mut index = SimplexIndex::new(b);
    let mut cur: Vec<Option<Ez>> = vec![None; a.len()];
    let mut out = Vec::new();
    let verts_b = b.of_dim(0);
    enum_rec(a, b, &order, 0, fixed, marked, limit, &mut index, &verts_b, &mut cur, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enum_rec(
    a: &SimplicialSet,
    b: &SimplicialSet,
    order: &[Id],
    pos: usize,
    fixed: &HashMap<Id, Ez>,
    marked: bool,
    limit: Option<usize>,
    index: &mut SimplexIndex,
    verts_b: &[Id],
    cur: &mut Vec<Option<Ez>>,
    out: &mut Vec<SimplicialMap>,
) {
    if limit.is_some_and(|l| out.len() >= l) {
        return;
    }
    if pos == order.len() {
        out.push(SimplicialMap { images: cur.iter().map(|z| z.clone().unwrap()).collect() });
        return;
    }
    let x = order[pos];
    let d = a.dim(x);
    let cands: Vec<Ez> = if let Some(z) = fixed.get(&x) {
        vec![z.clone()]
    } else if d == 0 {
        verts_b.iter().map(|&v| Ez::nondeg(v, 0)).collect()
    } else {
        let image_of = |z: &Ez, cur: &Vec<Option<Ez>>| {
            let f = cur[z.nd].as_ref().unwrap();
            Ez { surj: op::compose(&f.surj, &z.surj), nd: f.nd }
        };
        let vz: Vec<Id> = (0..=d)
            .map(|j| {
                let v = a.apply(&[j], x);
                let img = image_of(&v, cur);
                b.vertex_of(&img, 0)
            })
            .collect();
        index.candidates(d, &vz).to_vec()
    };
    for z in cands {
        if z.dim() != d {
            continue;
        }
        if d > 0 {
            let ok = (0..=d).all(|i| {
                let f = a.face(x, i);
                let fi = cur[f.nd].as_ref().unwrap();
                b.face_ez(&z, i) == Ez { surj: op::compose(&fi.surj, &f.surj), nd: fi.nd }
            });
            if !ok {
                continue;
            }
        }
        if marked && d == 1 && a.is_marked_id(x) && !b.is_marked(&z) {
            continue;
        }
        cur[x] = Some(z);
        enum_rec(a, b, order, pos + 1, fixed, marked, limit, index, verts_b, cur, out);
        cur[x] = None;
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
    }
}
