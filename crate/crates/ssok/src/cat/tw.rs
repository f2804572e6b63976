//! Twisted arrow categories and their simplicial counterpart.

use std::collections::HashMap;

use super::nerve::Nerve;
use super::{FiniteCategory, Morphism};
use crate::sset::{op, Ez, Id, SimplicialMap, SimplicialSet, SsetError};

pub struct Twisted {
    pub cat: FiniteCategory,
    /// `(a, b)` for each morphism `f ⇝ g`, meaning `f = b ∘ g ∘ a`.
    pub pairs: Vec<(usize, usize)>,
}

/// `Tw(C)`: objects are morphisms of `C`, and a map `f ⇝ g` is a pair
/// `(a, b)` with `f = b ∘ g ∘ a`.
pub fn twisted_arrow_cat(c: &FiniteCategory) -> Twisted {
    let n = c.num_morphisms();
    let mut morphisms = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    let mut identity = vec![0; n];
    for f in 0..n {
        for g in 0..n {
            for &a in c.hom(c.src(f), c.src(g)) {
                for &b in c.hom(c.tgt(g), c.tgt(f)) {
                    let bga = c.compose(b, c.compose(g, a).unwrap()).unwrap();
                    if bga == f {
                        if f == g && c.is_identity(a) && c.is_identity(b) {
                            identity[f] = morphisms.len();
                        }
                        index.insert((f, g, a, b), morphisms.len());
                        let name = if c.is_identity(a) && c.is_identity(b) && f == g {
                            format!("id_{}", c.name(f))
                        } else {
                            format!("({},{})", c.name(a), c.name(b))
                        };
                        morphisms.push(Morphism { name, src: f, tgt: g });
                        pairs.push((a, b));
                    }
                }
            }
        }
    }
    let objects = (0..n).map(|f| c.name(f).to_string()).collect();
    let ms = morphisms.clone();
    let ps = pairs.clone();
    let cat = FiniteCategory::from_fn(objects, morphisms, identity, |second, first| {
        let (a, b) = ps[first];
        let (a2, b2) = ps[second];
        let key = (ms[first].src, ms[second].tgt, c.compose(a2, a).unwrap(), c.compose(b, b2).unwrap());
        index[&key]
    });
    Twisted { cat, pairs }
}

pub struct TwSimplicial {
    pub set: SimplicialSet,
    /// `(x, t)` with `t : [2k+1] -> [dim x]` for each simplex.
    pub parts: Vec<(Id, Vec<usize>)>,
    pub index: HashMap<(Id, Vec<usize>), Id>,
}

fn tw_degenerate_at(t: &[usize], j: usize) -> bool {
    let n = t.len() - 1;
    t[j] == t[j + 1] && t[n - 1 - j] == t[n - j]
}

impl TwSimplicial {
    /// Normal form of the simplex of `Tw X` given by the `(2k+1)`-simplex `y` of `X`.
    pub fn normalize(&self, y: &Ez) -> Ez {
        let n = y.dim();
        let k = (n - 1) / 2;
        let mut u = vec![0usize];
        let mut keep = vec![0usize];
        for p in 1..=k {
            let step = if tw_degenerate_at(&y.surj, p - 1) { 0 } else { 1 };
            u.push(u[p - 1] + step);
            if step == 1 {
                keep.push(p);
            }
        }
        let mut pos: Vec<usize> = keep.clone();
        pos.extend(keep.iter().rev().map(|&p| n - p));
        let t: Vec<usize> = pos.iter().map(|&p| y.surj[p]).collect();
        Ez { surj: u, nd: self.index[&(y.nd, t)] }
    }
}

/// `Tw X` truncated at `d`; its `k`-simplices are the `(2k+1)`-simplices of `X`.
pub fn tw_simplicial(x: &SimplicialSet, d: usize) -> Result<TwSimplicial, SsetError> {
    if let Some(t) = x.truncation() {
        if t < 2 * d + 1 {
            return Err(SsetError::Other(format!("input is only known through dimension {t}, need {}", 2 * d + 1)));
        }
    }
    let mut tw = TwSimplicial { set: SimplicialSet::new(), parts: Vec::new(), index: HashMap::new() };
    for k in 0..=d {
        let n = 2 * k + 1;
        for z in x.ids() {
            let e = x.dim(z);
            for t in op::surjections(n, e) {
                if (0..k).any(|j| tw_degenerate_at(&t, j)) {
                    continue;
                }
                let faces: Vec<Ez> = if k == 0 {
                    Vec::new()
                } else {
                    (0..=k)
                        .map(|i| {
                            let img: Vec<usize> = (0..=n).filter(|&p| p != i && p != n - i).collect();
                            let y = x.apply(&op::compose(&t, &img), z);
                            tw.normalize(&y)
                        })
                        .collect()
                };
                let base = Ez { surj: t.clone(), nd: z };
                let label = if k == 0 { x.describe(&base) } else { format!("⟨{}⟩", x.describe(&base)) };
                let id = tw.set.add_fresh(&label, faces)?;
                tw.index.insert((z, t.clone()), id);
                tw.parts.push((z, t));
            }
        }
    }
    tw.set.set_dims(d);
    if x.truncation().is_some() || x.top_dim().is_some_and(|t| t > 2 * d + 1) {
        tw.set.set_truncation(Some(d));
    }
    Ok(tw)
}

/// The comparison `N(Tw C) -> Tw(N C)` sending a chain `(aᵢ, bᵢ)` of twisted
/// arrows from `φ₀` to `φₖ` to the chain `a₁ … aₖ, φₖ, bₖ … b₁` of `C`.
pub fn canonical_map(
    c: &FiniteCategory,
    tw: &Twisted,
    ntw: &Nerve,
    nc: &Nerve,
    twn: &TwSimplicial,
) -> SimplicialMap {
    let inv = super::nerve::chain_table(ntw);
    let images = ntw
        .set
        .ids()
        .map(|s| {
            let chain = &inv[&s];
            let phi0 = if chain.is_empty() {
                ntw.objects.iter().position(|&v| v == s).unwrap()
            } else {
                tw.cat.src(chain[0])
            };
            let phik = chain.last().map_or(phi0, |&m| tw.cat.tgt(m));
            let mut mors: Vec<usize> = chain.iter().map(|&m| tw.pairs[m].0).collect();
            mors.push(phik);
            mors.extend(chain.iter().rev().map(|&m| tw.pairs[m].1));
            let y = nc.simplex(c, c.src(phi0), &mors);
            twn.normalize(&y)
        })
        .collect();
    SimplicialMap::new(images)
}

/// Checks that the comparison map is a simplicial isomorphism.
pub fn check_canonical_iso(c: &FiniteCategory, d: usize) -> Result<(), String> {
    let tw = twisted_arrow_cat(c);
    let ntw = super::nerve::nerve_truncated(&tw.cat, d, false);
    let nc = super::nerve::nerve_truncated(c, 2 * d + 1, false);
    let twn = tw_simplicial(&nc.set, d).map_err(|e| e.to_string())?;
    let m = canonical_map(c, &tw, &ntw, &nc, &twn);
    m.validate(&ntw.set, &twn.set, false).map_err(|e| e.to_string())?;
    m.check_mono(&ntw.set).map_err(|e| e.to_string())?;
    if ntw.set.len() != twn.set.len() {
        return Err(format!("{} simplices versus {}", ntw.set.len(), twn.set.len()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::{group, ordinal};
    use super::*;
    use crate::sset::build::{boundary, standard_simplex};

    #[test]
    fn tw_of_arrow_is_a_span() {
        let t = twisted_arrow_cat(&ordinal(1));
        t.cat.validate().unwrap();
        assert_eq!(t.cat.num_objects(), 3);
        let f = t.cat.object("01").unwrap();
        let non_id: Vec<_> = (0..t.cat.num_morphisms()).filter(|&m| !t.cat.is_identity(m)).collect();
        assert_eq!(non_id.len(), 2);
        assert!(non_id.iter().all(|&m| t.cat.src(m) == f));
    }

    #[test]
    fn tw_of_point_and_boundary() {
        let t = tw_simplicial(&standard_simplex(0, None), 2).unwrap();
        assert_eq!(t.set.len(), 1);
        let t = tw_simplicial(&boundary(2), 0).unwrap();
        assert_eq!(t.set.len(), 6);
        let n = crate::cat::nerve::nerve_truncated(&crate::cat::ordinal(1), 1, false);
        assert!(tw_simplicial(&n.set, 1).is_err());
    }

    #[test]
    fn canonical_comparison() {
        check_canonical_iso(&ordinal(2), 2).unwrap();
        check_canonical_iso(&group(&["e", "t"], |a, b| a ^ b), 2).unwrap();
    }
}
