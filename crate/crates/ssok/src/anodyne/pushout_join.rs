//! The pushout-join `i ⊠⋆ j : A⋆L ⊔_{A⋆K} B⋆K -> B⋆L`.

use std::collections::BTreeSet;

use super::MarkedMap;
use crate::sset::build::{boundary, horn, standard_simplex};
use crate::sset::construct::{join_map, join_tagged, pushout};
use crate::sset::iso::{iso_of_inclusions, IsoOutcome};
use crate::sset::{Ez, SimplicialMap, SimplicialSet};

fn right_tag(b: &SimplicialSet, l: &SimplicialSet) -> &'static str {
    let names: BTreeSet<&str> = b.of_dim(0).into_iter().map(|v| b.label(v)).collect();
    if l.of_dim(0).into_iter().any(|v| names.contains(l.label(v))) {
        "'"
    } else {
        ""
    }
}

/// `i ⊠⋆ j` for monomorphisms `i : A -> B` and `j : K -> L`, with inherited markings.
pub fn pushout_join(i: &MarkedMap, j: &MarkedMap) -> MarkedMap {
    let (a, b, k, l) = (&i.source, &i.target, &j.source, &j.target);
    let tag = right_tag(b, l);
    let j0 = join_tagged(a, k, "", tag);
    let j1 = join_tagged(a, l, "", tag);
    let j2 = join_tagged(b, k, "", tag);
    let bl = join_tagged(b, l, "", tag);
    let id_a = SimplicialMap::identity(a);
    let id_b = SimplicialMap::identity(b);
    let id_k = SimplicialMap::identity(k);
    let id_l = SimplicialMap::identity(l);
    let f = join_map(a, k, &id_a, &j.map, &j0, &j1);
    let g = join_map(a, k, &i.map, &id_k, &j0, &j2);
    let p = pushout(&j0.set, &j1.set, &j2.set, &f, &g).expect("id ⋆ j is a monomorphism");
    let on_c = join_map(b, k, &id_b, &j.map, &j2, &bl);
    let on_b = join_map(a, l, &i.map, &id_l, &j1, &bl);
    // the pushout keeps B⋆K on its first ids and appends the rest of A⋆L
    let mut images: Vec<Option<Ez>> = on_c.images.into_iter().map(Some).collect();
    images.resize(p.set.len(), None);
    for y in j1.set.ids() {
        let z = &p.from_b.images[y];
        if z.nd >= j2.set.len() {
            images[z.nd] = Some(on_b.images[y].clone());
        }
    }
    let images = images.into_iter().map(|z| z.expect("every simplex comes from one side")).collect();
    MarkedMap::new(p.set, bl.set, SimplicialMap::new(images)).expect("pushout-joins of monomorphisms are monomorphisms")
}

/// Whether two monomorphisms are isomorphic as objects of the arrow category.
pub fn same_inclusion(x: &MarkedMap, y: &MarkedMap) -> IsoOutcome {
    if x.source.counts() != y.source.counts() {
        return IsoOutcome::NotIsomorphic;
    }
    iso_of_inclusions(&x.map, &x.target, &y.map, &y.target, true)
}

pub fn horn_inclusion(n: usize, j: usize) -> MarkedMap {
    MarkedMap::inclusion(&horn(n, j).unwrap(), &standard_simplex(n, None)).unwrap()
}

pub fn boundary_inclusion(k: usize) -> MarkedMap {
    MarkedMap::inclusion(&boundary(k), &standard_simplex(k, None)).unwrap()
}

/// `(Λⱼⁿ ⊂ Δⁿ) ⊠⋆ (∂Δᵏ ⊂ Δᵏ) ≅ (Λⱼ^{n+1+k} ⊂ Δ^{n+1+k})`.
pub fn horn_boundary_identity(j: usize, n: usize, k: usize) -> IsoOutcome {
    let lhs = pushout_join(&horn_inclusion(n, j), &boundary_inclusion(k));
    same_inclusion(&lhs, &horn_inclusion(n + 1 + k, j))
}

/// `(∂Δᵏ ⊂ Δᵏ) ⊠⋆ (Λⱼⁿ ⊂ Δⁿ) ≅ (Λ_{k+1+j}^{n+1+k} ⊂ Δ^{n+1+k})`.
pub fn boundary_horn_identity(k: usize, j: usize, n: usize) -> IsoOutcome {
    let lhs = pushout_join(&boundary_inclusion(k), &horn_inclusion(n, j));
    same_inclusion(&lhs, &horn_inclusion(n + 1 + k, k + 1 + j))
}

/// `(∂Δⁿ ⊂ Δⁿ) ⊠⋆ (∂Δᵏ ⊂ Δᵏ) ≅ (∂Δ^{n+1+k} ⊂ Δ^{n+1+k})`.
pub fn boundary_boundary_identity(n: usize, k: usize) -> IsoOutcome {
    let lhs = pushout_join(&boundary_inclusion(n), &boundary_inclusion(k));
    same_inclusion(&lhs, &boundary_inclusion(n + 1 + k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert!(horn_boundary_identity(1, 2, 0).is_iso());
        assert!(boundary_horn_identity(0, 1, 2).is_iso());
        let empty = MarkedMap::inclusion(&SimplicialSet::new(), &standard_simplex(0, None)).unwrap();
        let pj = pushout_join(&empty, &empty);
        assert!(same_inclusion(&pj, &boundary_inclusion(1)).is_iso());
    }

    #[test]
    fn wrong_horn_index_is_not_isomorphic() {
        let lhs = pushout_join(&boundary_inclusion(0), &horn_inclusion(2, 1));
        assert!(!same_inclusion(&lhs, &horn_inclusion(3, 1)).is_iso());
    }
}
