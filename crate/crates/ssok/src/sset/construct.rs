//! Joins, products, pushouts, coproducts, opposites and cones.

use std::collections::{BTreeSet, HashMap};

use super::build::standard_simplex;
use super::{op, vlabel, Ez, Id, SimplicialMap, SimplicialSet, SsetError};

/// True when every simplex is named after its vertices.
pub fn is_vertex_labelled(x: &SimplicialSet) -> bool {
    x.ids().all(|s| {
        let names: Vec<&str> = x.verts(s).iter().map(|&v| x.label(v)).collect();
        let base = x.label(s).split('#').next().unwrap_or("");
        base == vlabel(&names)
    })
}

fn vertex_names(x: &SimplicialSet, s: Id) -> Vec<String> {
    x.verts(s).iter().map(|&v| x.label(v).to_string()).collect()
}

/// Renames vertices and recomputes the vertex-derived labels of higher simplices.
pub fn relabel_vertices(x: &SimplicialSet, rename: &dyn Fn(&str) -> String) -> SimplicialSet {
    let vl = is_vertex_labelled(x);
    let mut out = SimplicialSet::new();
    for s in x.ids() {
        let label = if x.dim(s) == 0 {
            rename(x.label(s))
        } else if vl {
            let names: Vec<String> = x.verts(s).iter().map(|&v| rename(x.label(v))).collect();
            vlabel(&names)
        } else {
            x.label(s).to_string()
        };
        out.add_fresh(&label, x.simplex(s).faces.clone()).expect("same shape");
    }
    out.set_marked(x.marked().clone());
    out.set_dims(x.dims());
    out
}

/// Appends `tag` to every vertex name.
pub fn tag_vertices(x: &SimplicialSet, tag: &str) -> SimplicialSet {
    if tag.is_empty() {
        return x.clone();
    }
    relabel_vertices(x, &|n| format!("{n}{tag}"))
}

pub struct Join {
    pub set: SimplicialSet,
    pub left: Vec<Id>,
    pub right: Vec<Id>,
    pub pair: HashMap<(Id, Id), Id>,
}

impl Join {
    pub fn left_inclusion(&self, a: &SimplicialSet) -> SimplicialMap {
        SimplicialMap::new(a.ids().map(|x| Ez::nondeg(self.left[x], a.dim(x))).collect())
    }

    pub fn right_inclusion(&self, b: &SimplicialSet) -> SimplicialMap {
        SimplicialMap::new(b.ids().map(|x| Ez::nondeg(self.right[x], b.dim(x))).collect())
    }
}

/// `A ⋆ B`, vertices of `A` first. Vertex names of `B` get `tag_b` appended.
pub fn join_tagged(a: &SimplicialSet, b: &SimplicialSet, tag_a: &str, tag_b: &str) -> Join {
    let a = tag_vertices(a, tag_a);
    let b = tag_vertices(b, tag_b);
    let vl = is_vertex_labelled(&a) && is_vertex_labelled(&b);
    let mut out = SimplicialSet::new();
    let mut left = Vec::new();
    for x in a.ids() {
        left.push(out.add_fresh(a.label(x), a.simplex(x).faces.iter().map(|f| Ez { surj: f.surj.clone(), nd: left[f.nd] }).collect()).unwrap());
    }
    let mut right = Vec::new();
    for y in b.ids() {
        right.push(out.add_fresh(b.label(y), b.simplex(y).faces.iter().map(|f| Ez { surj: f.surj.clone(), nd: right[f.nd] }).collect()).unwrap());
    }
    let mut pairs: Vec<(Id, Id)> = a.ids().flat_map(|x| b.ids().map(move |y| (x, y))).collect();
    pairs.sort_by_key(|&(x, y)| (a.dim(x) + b.dim(y), x, y));
    let mut pair = HashMap::new();
    for (x, y) in pairs {
        let da = a.dim(x);
        let db = b.dim(y);
        let n = da + db + 1;
        let mut faces = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let f = if i <= da {
                if da == 0 {
                    Ez::nondeg(right[y], db)
                } else {
                    let fa = a.face(x, i);
                    let ea = op::surj_dim(&fa.surj);
                    let mut s = fa.surj.clone();
                    s.extend((0..=db).map(|j| ea + 1 + j));
                    Ez { surj: s, nd: pair[&(fa.nd, y)] }
                }
            } else if db == 0 {
                Ez::nondeg(left[x], da)
            } else {
                let fb = b.face(y, i - da - 1);
                let mut s: Vec<usize> = (0..=da).collect();
                s.extend(fb.surj.iter().map(|&t| da + 1 + t));
                Ez { surj: s, nd: pair[&(x, fb.nd)] }
            };
            faces.push(f);
        }
        let label = if vl {
            let mut names = vertex_names(&a, x);
            names.extend(vertex_names(&b, y));
            vlabel(&names)
        } else {
            format!("{}*{}", a.label(x), b.label(y))
        };
        let id = out.add_fresh(&label, faces).unwrap();
        pair.insert((x, y), id);
    }
    let mut marked: BTreeSet<Id> = a.marked().iter().map(|&e| left[e]).collect();
    marked.extend(b.marked().iter().map(|&e| right[e]));
    out.set_marked(marked);
    let top = |s: &SimplicialSet| if s.is_empty() { None } else { Some(s.dims()) };
    let dims = match (top(&a), top(&b)) {
        (Some(p), Some(q)) => p + q + 1,
        (Some(p), None) | (None, Some(p)) => p,
        _ => 0,
    };
    out.set_dims(dims);
    Join { set: out, left, right, pair }
}

pub fn join(a: &SimplicialSet, b: &SimplicialSet) -> Join {
    let na: BTreeSet<&str> = a.of_dim(0).into_iter().map(|v| a.label(v)).collect();
    let clash = b.of_dim(0).into_iter().any(|v| na.contains(b.label(v)));
    join_tagged(a, b, "", if clash { "'" } else { "" })
}

/// `f ⋆ g : A ⋆ B -> A' ⋆ B'`.
pub fn join_map(
    a: &SimplicialSet,
    b: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
    src: &Join,
    dst: &Join,
) -> SimplicialMap {
    let mut images = vec![Ez { surj: vec![0], nd: 0 }; src.set.len()];
    for x in a.ids() {
        let z = &f.images[x];
        images[src.left[x]] = Ez { surj: z.surj.clone(), nd: dst.left[z.nd] };
    }
    for y in b.ids() {
        let z = &g.images[y];
        images[src.right[y]] = Ez { surj: z.surj.clone(), nd: dst.right[z.nd] };
    }
    for (&(x, y), &id) in &src.pair {
        let zx = &f.images[x];
        let zy = &g.images[y];
        let ex = op::surj_dim(&zx.surj);
        let mut s = zx.surj.clone();
        s.extend(zy.surj.iter().map(|&t| ex + 1 + t));
        images[id] = Ez { surj: s, nd: dst.pair[&(zx.nd, zy.nd)] };
    }
    SimplicialMap::new(images)
}

pub fn cone_left(k: &SimplicialSet) -> Join {
    let pt = standard_simplex(0, Some(&["◁".to_string()]));
    join_tagged(&pt, k, "", "")
}

pub fn cone_right(k: &SimplicialSet) -> Join {
    let pt = standard_simplex(0, Some(&["▷".to_string()]));
    join_tagged(k, &pt, "", "")
}

pub struct Product {
    pub set: SimplicialSet,
    /// `(a, s, b, t)` for each nondegenerate simplex `(a∘s, b∘t)`.
    pub parts: Vec<(Id, Vec<usize>, Id, Vec<usize>)>,
    pub index: HashMap<(Id, Vec<usize>, Id, Vec<usize>), Id>,
}

impl Product {
    /// Nondegenerate form of the pair `(z, w)` of simplices of equal dimension.
    pub fn pair(&self, z: &Ez, w: &Ez) -> Ez {
        let p = z.dim();
        let keep: Vec<usize> =
            (0..=p).filter(|&j| j == 0 || !(z.surj[j] == z.surj[j - 1] && w.surj[j] == w.surj[j - 1])).collect();
        let mut u = Vec::with_capacity(p + 1);
        let mut k = 0usize;
        for j in 0..=p {
            if j > 0 && !(z.surj[j] == z.surj[j - 1] && w.surj[j] == w.surj[j - 1]) {
                k += 1;
            }
            u.push(k);
        }
        let s: Vec<usize> = keep.iter().map(|&j| z.surj[j]).collect();
        let t: Vec<usize> = keep.iter().map(|&j| w.surj[j]).collect();
        Ez { surj: u, nd: self.index[&(z.nd, s, w.nd, t)] }
    }

    pub fn first(&self, x: Id) -> Ez {
        let (a, s, _, _) = &self.parts[x];
        Ez { surj: s.clone(), nd: *a }
    }

    pub fn second(&self, x: Id) -> Ez {
        let (_, _, b, t) = &self.parts[x];
        Ez { surj: t.clone(), nd: *b }
    }
}

/// `A × B` via shuffles. Vertices are named `(a,b)`.
pub fn product(a: &SimplicialSet, b: &SimplicialSet) -> Product {
    let mut cells: Vec<(usize, Id, Vec<usize>, Id, Vec<usize>)> = Vec::new();
    for x in a.ids() {
        for y in b.ids() {
            let (da, db) = (a.dim(x), b.dim(y));
            for p in da.max(db)..=da + db {
                for s in op::surjections(p, da) {
                    for t in op::surjections(p, db) {
                        let inj = (1..=p).all(|j| !(s[j] == s[j - 1] && t[j] == t[j - 1]));
                        if inj {
                            cells.push((p, x, s.clone(), y, t));
                        }
                    }
                }
            }
        }
    }
    cells.sort_by(|l, r| (l.0, l.1, l.3, &l.2, &l.4).cmp(&(r.0, r.1, r.3, &r.2, &r.4)));
    let mut prod = Product { set: SimplicialSet::new(), parts: Vec::new(), index: HashMap::new() };
    for (p, x, s, y, t) in cells {
        let mut faces = Vec::new();
        if p > 0 {
            for i in 0..=p {
                let d = op::coface(p, i);
                let z = a.apply(&op::compose(&s, &d), x);
                let w = b.apply(&op::compose(&t, &d), y);
                faces.push(prod.pair(&z, &w));
            }
        }
        let names: Vec<String> = (0..=p)
            .map(|j| format!("({},{})", a.label(a.verts(x)[s[j]]), b.label(b.verts(y)[t[j]])))
            .collect();
        let label = if p == 0 { names[0].clone() } else { vlabel(&names) };
        let id = prod.set.add_fresh(&label, faces).unwrap();
        prod.index.insert((x, s.clone(), y, t.clone()), id);
        prod.parts.push((x, s, y, t));
    }
    let mut marked = BTreeSet::new();
    for e in prod.set.of_dim(1) {
        if a.is_marked(&prod.first(e)) && b.is_marked(&prod.second(e)) {
            marked.insert(e);
        }
    }
    prod.set.set_marked(marked);
    prod.set.set_dims(a.dims() + b.dims());
    prod
}

pub struct Pushout {
    pub set: SimplicialSet,
    /// `B -> P`.
    pub from_b: SimplicialMap,
    /// `C -> P`, the identity on ids.
    pub from_c: SimplicialMap,
}

/// Pushout of `B <-f- A -g-> C` for a monomorphism `f`.
pub fn pushout(
    a: &SimplicialSet,
    b: &SimplicialSet,
    c: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<Pushout, SsetError> {
    f.validate(a, b, false)?;
    g.validate(a, c, false)?;
    f.check_mono(a)?;
    pushout_named(a, b, c, f, g, &HashMap::new())
}

/// As [`pushout`] without validation; new simplices may be given names.
pub fn pushout_named(
    _a: &SimplicialSet,
    b: &SimplicialSet,
    c: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
    names: &HashMap<Id, String>,
) -> Result<Pushout, SsetError> {
    let mut pre: HashMap<Id, Id> = HashMap::new();
    for (w, z) in f.images.iter().enumerate() {
        pre.insert(z.nd, w);
    }
    let mut set = c.clone();
    let mut img: Vec<Option<Ez>> = vec![None; b.len()];
    for (&y, &w) in &pre {
        img[y] = Some(g.images[w].clone());
    }
    for y in b.ids() {
        if img[y].is_some() {
            continue;
        }
        let faces: Vec<Ez> = b
            .simplex(y)
            .faces
            .iter()
            .map(|fz| {
                let t = img[fz.nd].as_ref().expect("faces precede");
                Ez { surj: op::compose(&t.surj, &fz.surj), nd: t.nd }
            })
            .collect();
        let name = names.get(&y).cloned().unwrap_or_else(|| b.label(y).to_string());
        let id = set.add_fresh(&name, faces)?;
        img[y] = Some(Ez::nondeg(id, b.dim(y)));
    }
    let from_b = SimplicialMap::new(img.into_iter().map(|z| z.unwrap()).collect());
    let mut marked = set.marked().clone();
    for &e in b.marked() {
        let z = &from_b.images[e];
        if z.is_nondeg() {
            marked.insert(z.nd);
        }
    }
    set.set_marked(marked);
    set.set_dims(b.dims());
    Ok(Pushout { set, from_b, from_c: SimplicialMap::identity(c) })
}

/// `A ⊔ B`.
pub fn coproduct(a: &SimplicialSet, b: &SimplicialSet) -> (SimplicialSet, SimplicialMap, SimplicialMap) {
    let mut out = a.clone();
    let n = a.len();
    for y in b.ids() {
        out.add_fresh(b.label(y), b.simplex(y).faces.iter().map(|f| Ez { surj: f.surj.clone(), nd: f.nd + n }).collect())
            .unwrap();
    }
    let mut m = a.marked().clone();
    m.extend(b.marked().iter().map(|&e| e + n));
    out.set_marked(m);
    out.set_dims(b.dims());
    let ia = SimplicialMap::identity(a);
    let ib = SimplicialMap::new(b.ids().map(|y| Ez::nondeg(y + n, b.dim(y))).collect());
    (out, ia, ib)
}

/// `A^op`: vertex order reversed, labels kept.
pub fn opposite(a: &SimplicialSet) -> SimplicialSet {
    let mut out = SimplicialSet::new();
    for x in a.ids() {
        let d = a.dim(x);
        let faces = if d == 0 {
            Vec::new()
        } else {
            (0..=d)
                .map(|i| {
                    let f = a.face(x, d - i);
                    let e = op::surj_dim(&f.surj);
                    let s: Vec<usize> = (0..d).map(|j| e - f.surj[d - 1 - j]).collect();
                    Ez { surj: s, nd: f.nd }
                })
                .collect()
        };
        out.add(a.label(x), faces).unwrap();
    }
    out.set_marked(a.marked().clone());
    out.set_dims(a.dims());
    out
}

/// Adds markings by label.
pub fn mark_edges(a: &SimplicialSet, edges: &[&str]) -> Result<SimplicialSet, SsetError> {
    let mut s = a.clone();
    s.mark_labels(edges)?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::super::build::*;
    use super::*;

    #[test]
    fn join_counts() {
        let j = join(&horn(2, 1).unwrap(), &standard_simplex(0, Some(&["x".into()])));
        assert_eq!(j.set.len(), 11);
        j.set.validate().unwrap();
        let j = join(&standard_simplex(1, None), &standard_simplex(0, None));
        assert_eq!(j.set.counts(), vec![3, 3, 1]);
    }

    #[test]
    fn product_counts() {
        let p = product(&standard_simplex(1, None), &standard_simplex(1, None));
        assert_eq!(p.set.counts(), vec![4, 5, 2]);
        p.set.validate().unwrap();
    }

    #[test]
    fn circle_pushout() {
        let a = boundary(1);
        let b = standard_simplex(1, None);
        let c = standard_simplex(0, None);
        let f = inclusion(&a, &b).unwrap();
        let g = SimplicialMap::new(vec![Ez::nondeg(0, 0), Ez::nondeg(0, 0)]);
        let p = pushout(&a, &b, &c, &f, &g).unwrap();
        assert_eq!(p.set.counts(), vec![1, 1]);
        p.set.validate().unwrap();
    }

    #[test]
    fn non_mono_rejected() {
        let a = standard_simplex(1, None);
        let b = standard_simplex(0, None);
        let f = SimplicialMap::new(vec![Ez::nondeg(0, 0), Ez::nondeg(0, 0), Ez { surj: vec![0, 0], nd: 0 }]);
        let g = SimplicialMap::identity(&a);
        assert!(matches!(pushout(&a, &b, &a, &f, &g), Err(SsetError::NotMono(_))));
    }

    #[test]
    fn opposite_faces_validate() {
        let h = horn(3, 0).unwrap();
        opposite(&h).validate().unwrap();
        let p = product(&standard_simplex(2, None), &standard_simplex(1, None));
        opposite(&p.set).validate().unwrap();
    }
}
