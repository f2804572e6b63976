//! The marked shapes `F₀ … F₃, G` of a simplicial set `K` and the zigzag
//! `F₀ → F₁ ← F₂ → F₃ ← G` between them.
//!
//! Vertices of a second copy carry a combining macron, so `x̄` is the copy of
//! `x`. The cone points are `◁` and `▷`; the collapsed copy of `K×{0}` in `G`
//! is `(∗,0)`. Maps are found from their vertex images, which pins them down
//! when `K` is nonsingular (every simplex determined by its vertices); this
//! covers simplices, boundaries and horns.
//!
//! Markings, which are inferred from the drawn figures for `dim K ≤ 1`:
//! `F₀` marks `◁̄ → ȳ` for the vertices `y` of `K`; `F̃₀` marks the whole top
//! fiber; `F₁`, `F₃` mark every edge of the second copy; `F₂` is flat; `G`
//! marks the bars of the vertical edges `(k,0) → (k,1)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::slower::{s_lower, s_lower_map, s_lower_unreversed, SLower, BAR};
use super::UnionFind;
use crate::sset::build::standard_simplex;
use crate::sset::construct::{cone_left, cone_right, product, pushout, relabel_vertices, Product};
use crate::sset::maps::enumerate_maps;
use crate::sset::{Ez, Id, SimplicialMap, SimplicialSet, SsetError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    F0,
    /// `F₀` with the whole top fiber marked.
    F0Tilde,
    F1,
    F2,
    F3,
    G,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 6] =
        [ShapeKind::F0, ShapeKind::F0Tilde, ShapeKind::F1, ShapeKind::F2, ShapeKind::F3, ShapeKind::G];

    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::F0 => "F0",
            ShapeKind::F0Tilde => "F0~",
            ShapeKind::F1 => "F1",
            ShapeKind::F2 => "F2",
            ShapeKind::F3 => "F3",
            ShapeKind::G => "G",
        }
    }

    fn recipe(self) -> &'static str {
        match self {
            ShapeKind::F0 => "K◁ × Δ¹, marking ◁̄→ȳ",
            ShapeKind::F0Tilde => "K◁ × Δ¹, marking the fiber over 1",
            ShapeKind::F1 => "s_* of K◁ with [n]⋆[n], marking the second copy",
            ShapeKind::F2 => "(K◁)▷, flat",
            ShapeKind::F3 => "s_*(K◁), marking the second copy",
            ShapeKind::G => "s_*(K×Δ¹) ⊔ s_*{0} over s_*(K×{0}), marking the bars of (k,0)→(k,1)",
        }
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "F0" | "f0" => Ok(ShapeKind::F0),
            "F0~" | "f0~" | "F0tilde" | "f0tilde" => Ok(ShapeKind::F0Tilde),
            "F1" | "f1" => Ok(ShapeKind::F1),
            "F2" | "f2" => Ok(ShapeKind::F2),
            "F3" | "f3" => Ok(ShapeKind::F3),
            "G" | "g" => Ok(ShapeKind::G),
            _ => Err(format!("unknown shape `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeCounts {
    pub vertices: usize,
    pub edges: usize,
    pub marked: usize,
}

#[derive(Clone, Debug)]
pub struct ShapeDiagram {
    pub kind: ShapeKind,
    pub recipe: &'static str,
    pub k: SimplicialSet,
    pub set: SimplicialSet,
}

impl ShapeDiagram {
    pub fn counts(&self) -> ShapeCounts {
        ShapeCounts {
            vertices: self.set.of_dim(0).len(),
            edges: self.set.of_dim(1).len(),
            marked: self.set.marked().len(),
        }
    }
}

/// `Δⁿ` with vertices `k0 … kn`, as in the figures.
pub fn figure_simplex(n: usize) -> SimplicialSet {
    let names: Vec<String> = (0..=n).map(|i| format!("k{i}")).collect();
    standard_simplex(n, Some(&names))
}

fn bar(name: &str) -> String {
    format!("{name}{BAR}")
}

fn f0(k: &SimplicialSet, tilde: bool) -> SimplicialSet {
    let cone = cone_left(k).set;
    let interval = standard_simplex(1, None);
    let prod = product(&cone, &interval);
    let rename = |n: &str| {
        let inner = &n[1..n.len() - 1];
        let (x, e) = inner.rsplit_once(',').expect("product vertex");
        if e == "1" {
            bar(x)
        } else {
            x.to_string()
        }
    };
    let mut set = relabel_vertices(&prod.set, &rename);
    let top = interval.get("1").unwrap();
    let cone_pt = cone.get("◁").unwrap();
    let mut marked = BTreeSet::new();
    for e in set.of_dim(1) {
        let (a, b) = (prod.first(e), prod.second(e));
        if b.nd == top && a.is_nondeg() && (tilde || cone.verts(a.nd)[0] == cone_pt) {
            marked.insert(e);
        }
    }
    set.set_marked(marked);
    set
}

fn mark_second_copy(sx: &mut SLower) {
    let m: BTreeSet<Id> = sx.set.of_dim(1).into_iter().filter(|&e| sx.parts[e].1.is_empty()).collect();
    sx.set.set_marked(m);
}

struct GParts {
    prod: Product,
    sprod: SLower,
    from_b: SimplicialMap,
    set: SimplicialSet,
}

fn g_parts(k: &SimplicialSet) -> GParts {
    let interval = standard_simplex(1, None);
    let prod = product(k, &interval);
    let bottom = interval.get("0").unwrap();
    let keep: BTreeSet<Id> = prod.set.ids().filter(|&x| prod.second(x).nd == bottom).collect();
    let (k0, incl) = prod.set.sub(&keep).expect("K×{0} is a subcomplex");
    let sk0 = s_lower(&k0);
    let sprod = s_lower(&prod.set);
    let f = s_lower_map(&prod.set, &sk0, &sprod, &incl);
    let pt = standard_simplex(0, Some(&["(∗,0)".to_string()]));
    let spt = s_lower(&pt);
    let collapse = SimplicialMap::new(k0.ids().map(|x| Ez { surj: vec![0; k0.dim(x) + 1], nd: 0 }).collect());
    let g = s_lower_map(&pt, &sk0, &spt, &collapse);
    let po = pushout(&sk0.set, &sprod.set, &spt.set, &f, &g).expect("s_* preserves monomorphisms");
    let mut set = po.set;
    let mut marked = BTreeSet::new();
    for e in prod.set.of_dim(1) {
        let (a, b) = (prod.first(e), prod.second(e));
        if a.dim() == 1 && !a.is_nondeg() && b.is_nondeg() {
            let z = &po.from_b.images[sprod.simplex(&prod.set, e, &[], &[0, 1]).nd];
            marked.insert(z.nd);
        }
    }
    set.set_marked(marked);
    GParts { prod, sprod, from_b: po.from_b, set }
}

/// The shape `kind` evaluated at `K`.
pub fn shape(kind: ShapeKind, k: &SimplicialSet) -> ShapeDiagram {
    let set = match kind {
        ShapeKind::F0 => f0(k, false),
        ShapeKind::F0Tilde => f0(k, true),
        ShapeKind::F1 => {
            let mut s = s_lower_unreversed(&cone_left(k).set);
            mark_second_copy(&mut s);
            s.set
        }
        ShapeKind::F2 => cone_right(&cone_left(k).set).set.flat(),
        ShapeKind::F3 => {
            let mut s = s_lower(&cone_left(k).set);
            mark_second_copy(&mut s);
            s.set
        }
        ShapeKind::G => g_parts(k).set,
    };
    ShapeDiagram { kind, recipe: kind.recipe(), k: k.clone(), set }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// `F₀ → F₁`.
    I0,
    /// `F̃₀ → F₁`.
    I0Tilde,
    /// `F₂ → F₁`.
    I1,
    /// `F₂ → F₃`.
    I2,
    /// `G → F₃`.
    P,
    /// `□ → Δ²♭`, independent of `K`.
    R,
}

impl MapKind {
    pub const ALL: [MapKind; 6] = [MapKind::I0, MapKind::I0Tilde, MapKind::I1, MapKind::I2, MapKind::P, MapKind::R];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::I0 => "i0",
            MapKind::I0Tilde => "i0~",
            MapKind::I1 => "i1",
            MapKind::I2 => "i2",
            MapKind::P => "p",
            MapKind::R => "r",
        }
    }

    pub fn ends(self) -> Option<(ShapeKind, ShapeKind)> {
        match self {
            MapKind::I0 => Some((ShapeKind::F0, ShapeKind::F1)),
            MapKind::I0Tilde => Some((ShapeKind::F0Tilde, ShapeKind::F1)),
            MapKind::I1 => Some((ShapeKind::F2, ShapeKind::F1)),
            MapKind::I2 => Some((ShapeKind::F2, ShapeKind::F3)),
            MapKind::P => Some((ShapeKind::G, ShapeKind::F3)),
            MapKind::R => None,
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "i0" => Ok(MapKind::I0),
            "i0~" | "i0tilde" => Ok(MapKind::I0Tilde),
            "i1" => Ok(MapKind::I1),
            "i2" => Ok(MapKind::I2),
            "p" => Ok(MapKind::P),
            "r" => Ok(MapKind::R),
            _ => Err(format!("unknown comparison map `{s}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComparisonMap {
    pub kind: MapKind,
    pub source: SimplicialSet,
    pub target: SimplicialSet,
    pub map: SimplicialMap,
}

impl ComparisonMap {
    pub fn is_mono(&self) -> bool {
        self.map.check_mono(&self.source).is_ok()
    }

    pub fn is_marked_map(&self) -> bool {
        self.map.validate(&self.source, &self.target, true).is_ok()
    }
}

/// The unique map `a -> b` with the given vertex images.
pub fn map_by_vertices(a: &SimplicialSet, b: &SimplicialSet, vmap: &HashMap<Id, Id>) -> Result<SimplicialMap, SsetError> {
    let fixed: HashMap<Id, Ez> = vmap.iter().map(|(&x, &y)| (x, Ez::nondeg(y, 0))).collect();
    let found = enumerate_maps(a, b, &fixed, false, Some(2));
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        0 => Err(SsetError::BadMap("no simplicial map with these vertex images".into())),
        _ => Err(SsetError::BadMap("vertex images do not determine the map".into())),
    }
}

fn by_label(a: &SimplicialSet, b: &SimplicialSet, rename: &dyn Fn(&str) -> String) -> Result<HashMap<Id, Id>, SsetError> {
    a.of_dim(0).into_iter().map(|v| Ok((v, b.get(&rename(a.label(v)))?))).collect()
}

/// The comparison map `kind` at `K`.
pub fn comparison_map(kind: MapKind, k: &SimplicialSet) -> Result<ComparisonMap, SsetError> {
    if kind == MapKind::R {
        return Ok(r_map(false));
    }
    let (s, t) = kind.ends().unwrap();
    let source = shape(s, k).set;
    let target = shape(t, k).set;
    let vmap = match kind {
        // F₀ and F₁ share vertex names
        MapKind::I0 | MapKind::I0Tilde => by_label(&source, &target, &|n| n.to_string())?,
        MapKind::I1 | MapKind::I2 => {
            by_label(&source, &target, &|n| if n == "▷" { bar("◁") } else { n.to_string() })?
        }
        MapKind::P => by_label(&source, &target, &|n| {
            let plain = n.trim_end_matches(BAR);
            let barred = plain.len() != n.len();
            let inner = &plain[1..plain.len() - 1];
            let (x, e) = inner.rsplit_once(',').unwrap();
            let img = if e == "0" { "◁" } else { x };
            if barred {
                bar(img)
            } else {
                img.to_string()
            }
        })?,
        MapKind::R => unreachable!(),
    };
    let map = map_by_vertices(&source, &target, &vmap)?;
    Ok(ComparisonMap { kind, source, target, map })
}

/// The marked square `□`: `Δ¹×Δ¹` with `(0,1) → (1,1)` marked. Vertices are
/// named `ab` for `(a,b)`.
pub fn marked_square() -> SimplicialSet {
    let prod = product(&standard_simplex(1, None), &standard_simplex(1, None));
    let mut s = relabel_vertices(&prod.set, &|n| n.replace(['(', ')', ','], ""));
    s.mark_labels(&["01,11"]).or_else(|_| s.mark_labels(&["0111"])).expect("square edge");
    s
}

/// The collapse `□ → Δ²♭`. With `as_printed` the vertex assignment
/// `00↦0, 01↦1, 10↦1, 11↦2` is used; otherwise `00↦0, 10↦1, 01↦2, 11↦2`,
/// which restricts to `Λ₀² ≅ Δ¹×{0} ∪ {0}×Δ¹` and kills the marked edge.
pub fn r_map(as_printed: bool) -> ComparisonMap {
    let source = marked_square();
    let target = standard_simplex(2, None);
    let img = |v: &str| -> &str {
        match (v, as_printed) {
            ("00", _) => "0",
            ("10", _) => "1",
            ("01", true) => "1",
            ("01", false) => "2",
            _ => "2",
        }
    };
    let vmap = by_label(&source, &target, &|n| img(n).to_string()).unwrap();
    let map = map_by_vertices(&source, &target, &vmap).expect("monotone on the poset");
    ComparisonMap { kind: MapKind::R, source, target, map }
}

/// The section `e : F₃(Δᵐ) → G(Δᵐ)` of `p`, induced by `◁ ↦ (0,0)`,
/// `i ↦ (i,1)`.
pub fn section_e(m: usize) -> Result<ComparisonMap, SsetError> {
    let k = figure_simplex(m);
    let cone = cone_left(&k).set;
    let mut sf3 = s_lower(&cone);
    mark_second_copy(&mut sf3);
    let gp = g_parts(&k);
    let vmap = by_label(&cone, &gp.prod.set, &|n| if n == "◁" { "(k0,0)".to_string() } else { format!("({n},1)") })?;
    let eps = map_by_vertices(&cone, &gp.prod.set, &vmap)?;
    let map = s_lower_map(&gp.prod.set, &sf3, &gp.sprod, &eps).then(&gp.from_b);
    Ok(ComparisonMap { kind: MapKind::P, source: sf3.set, target: gp.set, map })
}

/// Whether `p ∘ e` is the identity of `F₃(Δᵐ)`.
pub fn section_is_split(m: usize) -> Result<bool, SsetError> {
    let e = section_e(m)?;
    let p = comparison_map(MapKind::P, &figure_simplex(m))?;
    // e is a section of the underlying simplicial sets only
    e.map.validate(&e.source, &e.target, false)?;
    Ok(e.map.then(&p.map) == SimplicialMap::identity(&e.source))
}

/// Connected components, as lists of vertex labels.
pub fn pi0(x: &SimplicialSet) -> Vec<Vec<String>> {
    let verts = x.of_dim(0);
    let pos: HashMap<Id, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(verts.len());
    for e in x.of_dim(1) {
        let vs = x.verts(e);
        uf.union(pos[&vs[0]], pos[&vs[1]]);
    }
    uf.classes().into_iter().map(|c| c.into_iter().map(|i| x.label(verts[i]).to_string()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::boundary;
    use crate::sset::construct::coproduct;
    use crate::sset::iso::is_isomorphic_unmarked;

    fn counts(kind: ShapeKind, n: usize) -> (usize, usize, usize) {
        let c = shape(kind, &figure_simplex(n)).counts();
        (c.vertices, c.edges, c.marked)
    }

    #[test]
    fn first_figure() {
        assert_eq!(counts(ShapeKind::F0, 0), (4, 5, 1));
        assert_eq!(counts(ShapeKind::F1, 0), (4, 6, 1));
        assert_eq!(counts(ShapeKind::F2, 0), (3, 3, 0));
        assert_eq!(counts(ShapeKind::F3, 0), (4, 6, 1));
        assert_eq!(counts(ShapeKind::G, 0), (4, 6, 1));
        let f0 = shape(ShapeKind::F0, &figure_simplex(0)).set;
        assert!(f0.is_marked_id(f0.get(&format!("◁{BAR},k0{BAR}")).unwrap()));
    }

    #[test]
    fn second_figure_markings() {
        assert_eq!(counts(ShapeKind::F0, 1).2, 2);
        assert_eq!(counts(ShapeKind::F0Tilde, 1).2, 3);
        assert_eq!(counts(ShapeKind::F1, 1).2, 3);
        assert_eq!(counts(ShapeKind::F3, 1).2, 3);
        assert_eq!(counts(ShapeKind::G, 1), (6, 19, 2));
    }

    #[test]
    fn shapes_validate() {
        for n in 0..=1 {
            for kind in ShapeKind::ALL {
                shape(kind, &figure_simplex(n)).set.validate().unwrap();
            }
        }
    }

    #[test]
    fn inclusions_are_marked_monos() {
        for n in 0..=1 {
            for kind in [MapKind::I0, MapKind::I0Tilde, MapKind::I1, MapKind::I2] {
                let m = comparison_map(kind, &figure_simplex(n)).unwrap();
                assert!(m.is_marked_map() && m.is_mono(), "{kind} at Δ{n}");
            }
        }
    }

    #[test]
    fn p_is_marked_and_split() {
        for m in 0..=2 {
            let p = comparison_map(MapKind::P, &figure_simplex(m)).unwrap();
            assert!(p.is_marked_map());
            assert!(section_is_split(m).unwrap(), "m = {m}");
        }
        assert!(comparison_map(MapKind::P, &figure_simplex(0)).unwrap().is_mono());
        assert!(!comparison_map(MapKind::P, &figure_simplex(1)).unwrap().is_mono());
    }

    #[test]
    fn printed_r_is_not_marked() {
        assert!(r_map(false).is_marked_map());
        assert!(!r_map(true).is_marked_map());
    }

    #[test]
    fn components() {
        assert_eq!(pi0(&boundary(2)).len(), 1);
        let pt = standard_simplex(0, None);
        let (two, _, _) = coproduct(&pt, &pt);
        assert_eq!(pi0(&two).len(), 2);
    }

    #[test]
    fn f1_and_f3_are_simplices_over_a_point() {
        for kind in [ShapeKind::F1, ShapeKind::F3, ShapeKind::G] {
            let s = shape(kind, &figure_simplex(0)).set;
            assert!(is_isomorphic_unmarked(&s, &standard_simplex(3, None)).is_iso());
        }
    }
}
