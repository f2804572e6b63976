//! The left Kan extension `s_*` of `[n] ↦ [n] ⋆ [n]^op` along Yoneda.
//!
//! A nondegenerate simplex of `s_* X` is a triple `(x, A, B)` with `x`
//! nondegenerate and `A ∪ B = [dim x]`; its vertices are `A` in increasing
//! order followed by the second copy of `B` in decreasing order.

use std::collections::{BTreeSet, HashMap};

use crate::sset::construct::is_vertex_labelled;
use crate::sset::{vlabel, Ez, Id, SimplicialMap, SimplicialSet};

/// Suffix for vertices of the second copy (combining macron).
pub const BAR: &str = "\u{304}";

pub struct SLower {
    pub set: SimplicialSet,
    pub parts: Vec<(Id, Vec<usize>, Vec<usize>)>,
    pub index: HashMap<(Id, Vec<usize>, Vec<usize>), Id>,
    reversed: bool,
}

impl SLower {
    /// The simplex of the copy of `s(Δ^{dim x})` over `x` spanned by `A` and `B`,
    /// in any position (supports need not cover `[dim x]`).
    pub fn simplex(&self, x_set: &SimplicialSet, x: Id, a: &[usize], b: &[usize]) -> Ez {
        let supp: Vec<usize> = a.iter().chain(b.iter()).copied().collect::<BTreeSet<_>>().into_iter().collect();
        let z = x_set.apply(&supp, x);
        let pos = |v: usize| supp.iter().position(|&s| s == v).unwrap();
        let sa: Vec<usize> = a.iter().map(|&v| z.surj[pos(v)]).collect();
        let sb: Vec<usize> = b.iter().map(|&v| z.surj[pos(v)]).collect();
        let ua: Vec<usize> = sa.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let ub: Vec<usize> = sb.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut surj: Vec<usize> = sa.iter().map(|v| ua.iter().position(|u| u == v).unwrap()).collect();
        let off = ua.len();
        let bseq: Vec<usize> = if self.reversed { ub.iter().rev().copied().collect() } else { ub.clone() };
        let mut sb_order = sb.clone();
        if self.reversed {
            sb_order.sort_unstable_by(|p, q| q.cmp(p));
        } else {
            sb_order.sort_unstable();
        }
        surj.extend(sb_order.iter().map(|v| off + bseq.iter().position(|u| u == v).unwrap()));
        Ez { surj, nd: self.index[&(z.nd, ua, ub)] }
    }
}

/// `s_* X`, the second copy reversed.
pub fn s_lower(x: &SimplicialSet) -> SLower {
    build(x, true)
}

/// Same colimit with `[n] ⋆ [n]` in place of `[n] ⋆ [n]^op`.
pub fn s_lower_unreversed(x: &SimplicialSet) -> SLower {
    build(x, false)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n).map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect()).collect()
}

fn build(x: &SimplicialSet, reversed: bool) -> SLower {
    let vl = is_vertex_labelled(x);
    let mut cells: Vec<(usize, Id, Vec<usize>, Vec<usize>)> = Vec::new();
    for s in x.ids() {
        let d = x.dim(s);
        for a in subsets(d + 1) {
            for b in subsets(d + 1) {
                let cover: BTreeSet<usize> = a.iter().chain(b.iter()).copied().collect();
                if cover.len() == d + 1 {
                    cells.push((a.len() + b.len() - 1, s, a.clone(), b));
                }
            }
        }
    }
    cells.sort();
    let mut out = SLower { set: SimplicialSet::new(), parts: Vec::new(), index: HashMap::new(), reversed };
    for (n, s, a, b) in cells {
        let faces: Vec<Ez> = if n == 0 {
            Vec::new()
        } else {
            (0..=n)
                .map(|i| {
                    let (mut a2, mut b2) = (a.clone(), b.clone());
                    if i < a.len() {
                        a2.remove(i);
                    } else {
                        let j = i - a.len();
                        // B is listed in vertex order, which is decreasing when reversed
                        let idx = if reversed { b.len() - 1 - j } else { j };
                        b2.remove(idx);
                    }
                    out.simplex(x, s, &a2, &b2)
                })
                .collect()
        };
        let verts = x.verts(s);
        let mut names: Vec<String> = a.iter().map(|&v| x.label(verts[v]).to_string()).collect();
        let border: Vec<usize> = if reversed { b.iter().rev().copied().collect() } else { b.clone() };
        names.extend(border.iter().map(|&v| format!("{}{BAR}", x.label(verts[v]))));
        let label = if n == 0 || vl {
            vlabel(&names)
        } else {
            format!("{}[{}|{}]", x.label(s), digits(&a), digits(&b))
        };
        let id = out.set.add_fresh(&label, faces).unwrap();
        out.index.insert((s, a.clone(), b.clone()), id);
        out.parts.push((s, a, b));
    }
    out.set.set_dims(2 * x.dims() + 1);
    out
}

fn digits(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect()
}

/// `s_*(f)` for a map `f : X -> Y`.
pub fn s_lower_map(y: &SimplicialSet, sx: &SLower, sy: &SLower, f: &SimplicialMap) -> SimplicialMap {
    let images = sx
        .parts
        .iter()
        .map(|(s, a, b)| {
            let z = &f.images[*s];
            let a2: Vec<usize> = a.iter().map(|&v| z.surj[v]).collect();
            let b2: Vec<usize> = b.iter().map(|&v| z.surj[v]).collect();
            // repeated vertices in the image become degeneracies
            let ua = dedup(&a2);
            let ub = dedup(&b2);
            let img = sy.simplex(y, z.nd, &ua, &ub);
            let mut pos: Vec<usize> = Vec::new();
            for v in &a2 {
                pos.push(ua.iter().position(|u| u == v).unwrap());
            }
            let border: Vec<usize> = if sx.reversed { b2.iter().rev().copied().collect() } else { b2.clone() };
            let uborder: Vec<usize> = if sx.reversed { ub.iter().rev().copied().collect() } else { ub.clone() };
            for v in &border {
                pos.push(ua.len() + uborder.iter().position(|u| u == v).unwrap());
            }
            img.precompose(&pos)
        })
        .collect();
    SimplicialMap::new(images)
}

fn dedup(v: &[usize]) -> Vec<usize> {
    v.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
}

/// Vertex of `s_* X` for a vertex of `X` in the first or second copy.
pub fn vertex(sx: &SLower, v: Id, second: bool) -> Id {
    if second {
        sx.index[&(v, vec![], vec![0])]
    } else {
        sx.index[&(v, vec![0], vec![])]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{boundary, standard_simplex};
    use crate::sset::construct::coproduct;
    use crate::sset::iso::{is_isomorphic, is_isomorphic_unmarked};

    #[test]
    fn simplices_double() {
        for n in 0..=3 {
            let s = s_lower(&standard_simplex(n, None));
            s.set.validate().unwrap();
            assert!(is_isomorphic(&s.set, &standard_simplex(2 * n + 1, None)).is_iso(), "n = {n}");
        }
    }

    #[test]
    fn boundary_of_interval() {
        let s = s_lower(&boundary(1));
        let pt = standard_simplex(1, None);
        let (two, _, _) = coproduct(&pt, &pt);
        assert!(is_isomorphic_unmarked(&s.set, &two).is_iso());
    }

    #[test]
    fn labels_follow_bar_convention() {
        let s = s_lower(&standard_simplex(1, None));
        assert!(s.set.id("011\u{304}0\u{304}").is_some());
    }
}
