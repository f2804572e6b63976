//! Morphisms of the simplex category.
//!
//! A monotone map `[m] -> [n]` is stored as its image vector of length `m + 1`.
//! The normal form is the unique factorization as a surjection followed by an
//! injection; the words are read off that factorization.

use std::fmt;

/// Image vector of the coface `d_i : [n-1] -> [n]`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// Image vector of the codegeneracy `s_j : [n+1] -> [n]`.
pub fn codegeneracy(n: usize, j: usize) -> Vec<usize> {
    (0..n + 2).map(|k| if k <= j { k } else { k - 1 }).collect()
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..=n).collect()
}

/// `a ∘ b`, i.e. first `b` then `a`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&j| a[j]).collect()
}

pub fn is_monotone(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

pub fn is_injective(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Surjective onto `[0, max]`.
pub fn is_surjection(v: &[usize]) -> bool {
    !v.is_empty() && v[0] == 0 && v.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
}

pub fn is_identity(v: &[usize]) -> bool {
    v.iter().enumerate().all(|(i, &x)| i == x)
}

/// Target dimension of a surjection.
pub fn surj_dim(v: &[usize]) -> usize {
    *v.last().unwrap()
}

/// Splits a monotone map into `(surjection, injection)` with `v = inj ∘ surj`.
pub fn factor(v: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut surj = Vec::with_capacity(v.len());
    let mut inj: Vec<usize> = Vec::new();
    for &x in v {
        if inj.last() != Some(&x) {
            inj.push(x);
        }
        surj.push(inj.len() - 1);
    }
    (surj, inj)
}

/// Degeneracy word of a surjection: positions `j` with `s(j) = s(j+1)`, increasing.
pub fn deg_word(s: &[usize]) -> Vec<usize> {
    (0..s.len().saturating_sub(1)).filter(|&j| s[j] == s[j + 1]).collect()
}

/// Inverse of [`deg_word`] for a source dimension `m`.
pub fn surj_from_deg_word(m: usize, word: &[usize]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(m + 1);
    let mut cur = 0usize;
    out.push(0);
    for j in 0..m {
        if !word.contains(&j) {
            cur += 1;
        }
        out.push(cur);
    }
    if word.iter().any(|&j| j >= m) || deg_word(&out) != sorted_dedup(word) {
        return None;
    }
    Some(out)
}

fn sorted_dedup(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    w.sort_unstable();
    w.dedup();
    w
}

/// A morphism `[src] -> [tgt]` of the simplex category.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplexOp {
    pub tgt: usize,
    pub img: Vec<usize>,
}

impl SimplexOp {
    pub fn new(tgt: usize, img: Vec<usize>) -> Option<Self> {
        if img.is_empty() || !is_monotone(&img) || img.iter().any(|&x| x > tgt) {
            return None;
        }
        Some(SimplexOp { tgt, img })
    }

    pub fn identity(n: usize) -> Self {
        SimplexOp { tgt: n, img: identity(n) }
    }

    pub fn face(n: usize, i: usize) -> Self {
        SimplexOp { tgt: n, img: coface(n, i) }
    }

    pub fn degeneracy(n: usize, j: usize) -> Self {
        SimplexOp { tgt: n, img: codegeneracy(n, j) }
    }

    pub fn src(&self) -> usize {
        self.img.len() - 1
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &SimplexOp) -> Option<SimplexOp> {
        if other.tgt != self.src() {
            return None;
        }
        Some(SimplexOp { tgt: self.tgt, img: compose(&self.img, &other.img) })
    }

    /// Normal form words `(degeneracies, faces)`.
    ///
    /// The op equals `d_{i_1} ∘ … ∘ d_{i_s} ∘ s_{j_1} ∘ … ∘ s_{j_t}` with
    /// `i_1 > … > i_s` and `j_1 < … < j_t`.
    pub fn words(&self) -> (Vec<usize>, Vec<usize>) {
        let (surj, inj) = factor(&self.img);
        let degs = deg_word(&surj);
        let mut faces: Vec<usize> = (0..=self.tgt).filter(|x| !inj.contains(x)).collect();
        faces.reverse();
        (degs, faces)
    }

    /// Rebuilds an op from normal form words.
    pub fn from_words(src: usize, degs: &[usize], faces: &[usize]) -> Option<SimplexOp> {
        let surj = surj_from_deg_word(src, degs)?;
        let mid = surj_dim(&surj);
        let tgt = mid + faces.len();
        let missing = sorted_dedup(faces);
        if missing.len() != faces.len() || missing.iter().any(|&x| x > tgt) {
            return None;
        }
        let inj: Vec<usize> = (0..=tgt).filter(|x| !missing.contains(x)).collect();
        Some(SimplexOp { tgt, img: compose(&inj, &surj) })
    }
}

impl fmt::Display for SimplexOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, s) = self.words();
        write!(f, "[{}]->[{}] s{:?} d{:?}", self.src(), self.tgt, d, s)
    }
}

/// All surjections `[m] -> [e]`.
pub fn surjections(m: usize, e: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if e > m {
        return out;
    }
    // choose which of the m gaps are repeats
    let gaps = m;
    let repeats = m - e;
    for combo in combinations(gaps, repeats) {
        let mut v = vec![0];
        let mut cur = 0;
        for j in 0..m {
            if !combo.contains(&j) {
                cur += 1;
            }
            v.push(cur);
        }
        out.push(v);
    }
    out
}

/// All `k`-subsets of `0..n`, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_round_trip() {
        let op = SimplexOp::new(4, vec![0, 0, 2, 3, 3]).unwrap();
        let (d, s) = op.words();
        assert_eq!(d, vec![0, 3]);
        assert_eq!(s, vec![4, 1]);
        assert_eq!(SimplexOp::from_words(4, &d, &s).unwrap(), op);
    }

    #[test]
    fn identity_has_empty_words() {
        let (d, s) = SimplexOp::identity(3).words();
        assert!(d.is_empty() && s.is_empty());
    }

    #[test]
    fn simplicial_identity_on_cofaces() {
        // d_j d_i = d_i d_{j-1} for i < j
        for n in 2..6 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = compose(&coface(n, j), &coface(n - 1, i));
                    let rhs = compose(&coface(n, i), &coface(n - 1, j - 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn surjection_counts_are_binomial() {
        assert_eq!(surjections(5, 2).len(), 10);
        assert_eq!(surjections(3, 3).len(), 1);
        assert!(surjections(2, 3).is_empty());
    }
}
