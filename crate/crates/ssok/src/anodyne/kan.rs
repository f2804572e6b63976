//! Bounded horn-filling check for Kan complexes.

use std::collections::HashMap;

use crate::sset::build::horn;
use crate::sset::maps::{enumerate_maps, SimplexIndex};
use crate::sset::SimplicialSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KanVerdict {
    pub kan: bool,
    /// Largest horn dimension examined.
    pub checked_up_to: usize,
    /// Description of the first unfillable horn.
    pub failure: Option<String>,
}

/// Checks that every horn `Λₖⁿ -> K` with `1 ≤ n ≤ dim_bound` has a filler.
pub fn kan_check(k: &SimplicialSet, dim_bound: usize) -> KanVerdict {
    let bound = match k.truncation() {
        Some(t) => dim_bound.min(t),
        None => dim_bound,
    };
    let mut index = SimplexIndex::new(k);
    // one-dimensional horns always fill with a degenerate edge
    for n in 2..=bound {
        for j in 0..=n {
            let h = horn(n, j).unwrap();
            let subs: Vec<Vec<usize>> = h.ids().map(|s| h.label(s).chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).collect();
            for m in enumerate_maps(&h, k, &HashMap::new(), false, None) {
                let verts: Vec<_> = (0..=n).map(|v| m.images[h.get(&v.to_string()).unwrap()].nd).collect();
                let filled = index.candidates(n, &verts).iter().any(|z| subs.iter().zip(&m.images).all(|(sub, img)| &k.apply_ez(sub, z) == img));
                if !filled {
                    let desc: Vec<String> = verts.iter().map(|&v| k.label(v).to_string()).collect();
                    return KanVerdict {
                        kan: false,
                        checked_up_to: n,
                        failure: Some(format!("horn Λ{j}^{n} on vertices {} has no filler", desc.join(","))),
                    };
                }
            }
        }
    }
    KanVerdict { kan: true, checked_up_to: bound, failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::corpus::{walking_iso, z2};
    use crate::cat::nerve::nerve_truncated;
    use crate::cat::ordinal;
    use crate::sset::build::standard_simplex;

    #[test]
    fn groupoid_nerves_are_kan() {
        assert!(kan_check(&nerve_truncated(&z2(), 3, false).set, 3).kan);
        assert!(kan_check(&nerve_truncated(&walking_iso(), 3, false).set, 3).kan);
        assert!(kan_check(&standard_simplex(0, None), 3).kan);
    }

    #[test]
    fn interval_is_not_kan() {
        let v = kan_check(&nerve_truncated(&ordinal(1), 3, false).set, 2);
        assert!(!v.kan);
        assert_eq!(v.checked_up_to, 2);
    }
}
