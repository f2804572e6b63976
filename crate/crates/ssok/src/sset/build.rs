//! Standard objects: simplices, boundaries, horns, spines and other
//! unions of faces of a simplex.

use std::collections::{BTreeMap, BTreeSet};

use super::{op, vlabel, Ez, Id, SimplicialMap, SimplicialSet, SsetError};

/// A union of faces of a simplex on the given vertex names, one simplex per
/// nonempty vertex subset contained in some facet.
pub fn ordered_complex<S: AsRef<str>>(names: &[S], facets: &[Vec<usize>]) -> SimplicialSet {
    let mut subsets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        for k in 1..=f.len() {
            for c in op::combinations(f.len(), k) {
                subsets.insert(c.iter().map(|&i| f[i]).collect());
            }
        }
    }
    let mut sorted: Vec<Vec<usize>> = subsets.into_iter().collect();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut out = SimplicialSet::new();
    let mut ids: BTreeMap<Vec<usize>, Id> = BTreeMap::new();
    for s in sorted {
        let d = s.len() - 1;
        let faces = if d == 0 {
            Vec::new()
        } else {
            (0..=d)
                .map(|i| {
                    let mut t = s.clone();
                    t.remove(i);
                    Ez::nondeg(ids[&t], d - 1)
                })
                .collect()
        };
        let label = vlabel(&s.iter().map(|&i| names[i].as_ref()).collect::<Vec<_>>());
        let id = out.add_fresh(&label, faces).expect("faces exist");
        ids.insert(s, id);
    }
    out
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| i.to_string()).collect()
}

/// `Δⁿ`, optionally with vertex names.
pub fn standard_simplex(n: usize, labels: Option<&[String]>) -> SimplicialSet {
    let names = labels.map(|l| l.to_vec()).unwrap_or_else(|| default_names(n));
    let mut s = ordered_complex(&names, &[(0..=n).collect()]);
    s.set_dims(n);
    s
}

fn faces_except(n: usize, skip: Option<usize>) -> Vec<Vec<usize>> {
    (0..=n).filter(|&i| Some(i) != skip).map(|i| (0..=n).filter(|&j| j != i).collect()).collect()
}

/// `∂Δⁿ`; empty for `n = 0`.
pub fn boundary(n: usize) -> SimplicialSet {
    if n == 0 {
        return SimplicialSet::new();
    }
    ordered_complex(&default_names(n), &faces_except(n, None))
}

/// `Λ_kⁿ`, the union of all faces but the one opposite `k`.
pub fn horn(n: usize, k: usize) -> Result<SimplicialSet, SsetError> {
    if n == 0 || k > n {
        return Err(SsetError::Other(format!("no horn Λ_{k}^{n}")));
    }
    Ok(ordered_complex(&default_names(n), &faces_except(n, Some(k))))
}

/// `Spⁿ`, the consecutive edges of `Δⁿ`.
pub fn spine(n: usize) -> SimplicialSet {
    let facets: Vec<Vec<usize>> = if n == 0 { vec![vec![0]] } else { (0..n).map(|i| vec![i, i + 1]).collect() };
    ordered_complex(&default_names(n), &facets)
}

/// Facets given as vertex-name strings over the names of a simplex,
/// e.g. `sub_of_simplex(&names, &["0123", "4567"])` for single-char names.
pub fn sub_of_simplex(names: &[String], facets: &[&[&str]]) -> Result<SimplicialSet, SsetError> {
    let mut fs = Vec::new();
    for f in facets {
        let mut v = Vec::new();
        for n in f.iter() {
            v.push(names.iter().position(|x| x == n).ok_or_else(|| SsetError::Unknown(n.to_string()))?);
        }
        fs.push(v);
    }
    Ok(ordered_complex(names, &fs))
}

/// Same as [`sub_of_simplex`] with single-character vertex names spelled out
/// in one string per facet.
pub fn sub_of_simplex_str(names: &[String], facets: &[&str]) -> Result<SimplicialSet, SsetError> {
    let split: Vec<Vec<String>> = facets.iter().map(|f| f.chars().map(|c| c.to_string()).collect()).collect();
    let refs: Vec<Vec<&str>> = split.iter().map(|v| v.iter().map(|s| s.as_str()).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(|v| v.as_slice()).collect();
    sub_of_simplex(names, &slices)
}

/// Inclusion of a subobject whose labels all occur in the target.
pub fn inclusion(a: &SimplicialSet, b: &SimplicialSet) -> Result<SimplicialMap, SsetError> {
    SimplicialMap::by_labels(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_counts() {
        assert_eq!(standard_simplex(0, None).len(), 1);
        assert_eq!(standard_simplex(2, None).counts(), vec![3, 3, 1]);
        assert_eq!(standard_simplex(7, None).len(), 255);
    }

    #[test]
    fn horns_and_spines() {
        assert_eq!(horn(2, 1).unwrap().counts(), vec![3, 2]);
        assert_eq!(spine(3).counts(), vec![4, 3]);
        assert!(horn(0, 0).is_err());
        assert_eq!(horn(1, 0).unwrap().counts(), vec![1]);
        assert_eq!(boundary(2).counts(), vec![3, 3]);
        assert!(boundary(0).is_empty());
    }

    #[test]
    fn faces_validate() {
        for n in 0..6 {
            standard_simplex(n, None).validate().unwrap();
        }
    }
}
