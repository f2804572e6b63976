//! Structural checks over small instances: simplicial identities, normal
//! forms, join and product counts, pushouts, operad axioms.

use std::collections::HashMap;

use crate::cat::corpus::corpus;
use crate::cat::nerve::nerve_truncated;
use crate::cat::shapes::map_by_vertices;
use crate::sset::build::{boundary, horn, spine, standard_simplex};
use crate::sset::construct::{join, product, pushout};
use crate::sset::maps::enumerate_maps;
use crate::sset::op;
use crate::sset::{Ez, SimplicialMap, SimplicialSet};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Nondegenerate simplex counts by dimension, padded to `len`.
fn counts(x: &SimplicialSet, len: usize) -> Vec<usize> {
    let mut c = x.counts();
    c.resize(len.max(c.len()), 0);
    c
}

pub fn euler(x: &SimplicialSet) -> i64 {
    x.counts().iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// Small sets the checks run over.
pub fn sample_sets() -> Vec<(String, SimplicialSet)> {
    let mut out = Vec::new();
    for n in 0..=3 {
        out.push((format!("Δ{n}"), standard_simplex(n, None)));
    }
    out.push(("∂Δ3".into(), boundary(3)));
    out.push(("Λ3_1".into(), horn(3, 1).unwrap()));
    out.push(("Sp4".into(), spine(4)));
    out.push(("Δ1×Δ1".into(), product(&standard_simplex(1, None), &standard_simplex(1, None)).set));
    out.push(("Δ1⋆∂Δ1".into(), join(&standard_simplex(1, None), &boundary(1)).set));
    let (_, c) = corpus().into_iter().find(|(n, _)| *n == "Z/2").unwrap();
    out.push(("N(Z/2)≤3".into(), nerve_truncated(&c, 3, false).set));
    out
}

/// `dᵢdⱼ = dⱼ₋₁dᵢ`, `dᵢsⱼ`, `sᵢsⱼ = sⱼ₊₁sᵢ` on every simplex up to one
/// dimension above the top. Returns the number of identities checked.
pub fn simplicial_identities(x: &SimplicialSet) -> Result<usize, String> {
    let top = x.top_dim().unwrap_or(0);
    let d = |z: &Ez, i: usize| x.face_ez(z, i);
    let s = |z: &Ez, j: usize| x.apply_ez(&op::codegeneracy(z.dim(), j), z);
    let mut n_checks = 0;
    for n in 0..=top + 1 {
        for z in x.all_of_dim(n) {
            let show = || x.describe(&z);
            for j in 0..=n {
                for i in 0..j {
                    if n < 2 {
                        break;
                    }
                    if d(&d(&z, j), i) != d(&d(&z, i), j - 1) {
                        return Err(format!("d{i}d{j} ≠ d{}d{i} on {}", j - 1, show()));
                    }
                    n_checks += 1;
                }
                let sz = s(&z, j);
                for i in 0..=n + 1 {
                    let lhs = d(&sz, i);
                    let rhs = if i < j {
                        if n == 0 {
                            continue;
                        }
                        s(&d(&z, i), j - 1)
                    } else if i == j || i == j + 1 {
                        z.clone()
                    } else {
                        s(&d(&z, i - 1), j)
                    };
                    if lhs != rhs {
                        return Err(format!("d{i}s{j} on {}", show()));
                    }
                    n_checks += 1;
                }
                for i in 0..=j {
                    if s(&s(&z, j), i) != s(&s(&z, i), j + 1) {
                        return Err(format!("s{i}s{j} ≠ s{}s{i} on {}", j + 1, show()));
                    }
                    n_checks += 1;
                }
            }
        }
    }
    Ok(n_checks)
}

/// Applying an operator always lands in normal form, normalizing twice
/// changes nothing, and `(z∘a)∘b = z∘(a∘b)`.
pub fn ez_idempotence(x: &SimplicialSet) -> Result<usize, String> {
    let top = x.top_dim().unwrap_or(0);
    let mut n_checks = 0;
    for n in 0..=top + 1 {
        for z in x.all_of_dim(n) {
            if !op::is_surjection(&z.surj) || !x.apply(&op::identity(x.dim(z.nd)), z.nd).is_nondeg() {
                return Err(format!("{} is not in normal form", x.describe(&z)));
            }
            if x.apply_ez(&op::identity(n), &z) != z {
                return Err(format!("normalizing {} is not idempotent", x.describe(&z)));
            }
            for m in 0..=n {
                for a in monotone_maps(m, n) {
                    let za = x.apply_ez(&a, &z);
                    if !op::is_surjection(&za.surj) || x.apply_ez(&op::identity(m), &za) != za {
                        return Err(format!("{}∘{a:?} is not normal", x.describe(&z)));
                    }
                    if m >= 1 {
                        for b in monotone_maps(m - 1, m) {
                            if x.apply_ez(&b, &za) != x.apply_ez(&op::compose(&a, &b), &z) {
                                return Err(format!("associativity fails on {}", x.describe(&z)));
                            }
                        }
                    }
                    n_checks += 1;
                }
            }
        }
    }
    Ok(n_checks)
}

/// Monotone maps `[m] → [n]` as image vectors.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(m, n, v, cur, out);
            cur.pop();
        }
    }
    rec(m, n, 0, &mut cur, &mut out);
    out
}

/// `(A⋆B)ₖ = Aₖ + Bₖ + Σ_{i+j=k-1} Aᵢ Bⱼ` on nondegenerate simplices.
pub fn join_counts(a: &SimplicialSet, b: &SimplicialSet) -> Result<(), String> {
    let j = join(a, b).set;
    let (ca, cb) = (a.counts(), b.counts());
    let len = ca.len() + cb.len();
    let (ca, cb) = (counts(a, len), counts(b, len));
    let mut want = vec![0usize; len];
    for k in 0..len {
        want[k] = ca[k] + cb[k];
        for i in 0..k {
            want[k] += ca[i] * cb[k - 1 - i];
        }
    }
    while want.last() == Some(&0) {
        want.pop();
    }
    let got = j.counts();
    if got != want {
        return Err(format!("join counts {got:?}, expected {want:?}"));
    }
    j.validate().map_err(|e| e.to_string())
}

/// Strictly increasing chains of length `k+1` in the grid `[p]×[q]`.
pub fn grid_chains(p: usize, q: usize, k: usize) -> usize {
    fn rec(p: usize, q: usize, at: (usize, usize), left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let mut n = 0;
        for a in at.0..=p {
            for b in at.1..=q {
                if (a, b) != at {
                    n += rec(p, q, (a, b), left - 1);
                }
            }
        }
        n
    }
    let mut n = 0;
    for a in 0..=p {
        for b in 0..=q {
            n += rec(p, q, (a, b), k);
        }
    }
    n
}

/// `Δᵖ×Δ^q` against the chain count of the grid, `Δᵖ⋆Δ^q` against
/// `C(p+q+2, k+1)`.
pub fn product_counts(p: usize, q: usize) -> Result<(), String> {
    let (dp, dq) = (standard_simplex(p, None), standard_simplex(q, None));
    let got = product(&dp, &dq).set.counts();
    let want: Vec<usize> = (0..=p + q).map(|k| grid_chains(p, q, k)).collect();
    if got != want {
        return Err(format!("Δ{p}×Δ{q} counts {got:?}, expected {want:?}"));
    }
    let got = join(&dp, &dq).set.counts();
    let want: Vec<usize> = (0..=p + q + 1).map(|k| binom(p + q + 2, k + 1)).collect();
    if got != want {
        return Err(format!("Δ{p}⋆Δ{q} counts {got:?}, expected {want:?}"));
    }
    Ok(())
}

/// `χ(A×B) = χ(A)χ(B)`.
pub fn euler_product(a: &SimplicialSet, b: &SimplicialSet) -> Result<(), String> {
    let p = product(a, b).set;
    p.validate().map_err(|e| e.to_string())?;
    if euler(&p) != euler(a) * euler(b) {
        return Err(format!("χ(A×B) = {} but χ(A)χ(B) = {}", euler(&p), euler(a) * euler(b)));
    }
    Ok(())
}

/// A span `B ← A → C` with `A → B` a monomorphism.
pub struct Span {
    pub name: &'static str,
    pub a: SimplicialSet,
    pub b: SimplicialSet,
    pub c: SimplicialSet,
    pub f: SimplicialMap,
    pub g: SimplicialMap,
}

fn span_by_vertices(name: &'static str, a: SimplicialSet, b: SimplicialSet, c: SimplicialSet, gv: &[usize]) -> Span {
    let f = SimplicialMap::by_labels(&a, &b).unwrap();
    let verts_a = a.of_dim(0);
    let verts_c = c.of_dim(0);
    let vmap: HashMap<_, _> = verts_a.iter().zip(gv).map(|(&x, &k)| (x, verts_c[k])).collect();
    let g = map_by_vertices(&a, &c, &vmap).unwrap();
    Span { name, a, b, c, f, g }
}

pub fn sample_spans() -> Vec<Span> {
    vec![
        span_by_vertices("Δ1 ∪_∂ Δ0", boundary(1), standard_simplex(1, None), standard_simplex(0, None), &[0, 0]),
        span_by_vertices("Δ2 ∪_Λ2_1 Δ1", horn(2, 1).unwrap(), standard_simplex(2, None), standard_simplex(1, None), &[0, 1, 1]),
        span_by_vertices("Δ2 ∪_∂ Δ1", boundary(2), standard_simplex(2, None), standard_simplex(1, None), &[0, 0, 1]),
        span_by_vertices("Δ1 ∪_Δ0 Δ2", spine(0), standard_simplex(1, None), standard_simplex(2, None), &[2]),
    ]
}

/// Counts add up, the square commutes, and maps out of the pushout into
/// truncated nerves of the corpus correspond exactly to compatible pairs.
pub fn pushout_universal(s: &Span, test_dim: usize) -> Result<usize, String> {
    let p = pushout(&s.a, &s.b, &s.c, &s.f, &s.g).map_err(|e| e.to_string())?;
    p.set.validate().map_err(|e| e.to_string())?;
    let len = p.set.counts().len().max(s.b.counts().len());
    let (cp, ca, cb, cc) = (counts(&p.set, len), counts(&s.a, len), counts(&s.b, len), counts(&s.c, len));
    for k in 0..len {
        if cp[k] + ca[k] != cb[k] + cc[k] {
            return Err(format!("{}: pushout has {} simplices in dimension {k}", s.name, cp[k]));
        }
    }
    if s.f.then(&p.from_b) != s.g.then(&p.from_c) {
        return Err(format!("{}: square does not commute", s.name));
    }
    let mut n_pairs = 0;
    for (cname, cat) in corpus().into_iter().take(6) {
        let t = nerve_truncated(&cat, test_dim, false).set;
        let none = HashMap::new();
        let from_c = enumerate_maps(&s.c, &t, &none, false, None);
        let from_b = enumerate_maps(&s.b, &t, &none, false, None);
        let mut pairs: HashMap<(SimplicialMap, SimplicialMap), usize> = HashMap::new();
        for u in &from_b {
            for v in &from_c {
                if s.f.then(u) == s.g.then(v) {
                    pairs.insert((u.clone(), v.clone()), 0);
                }
            }
        }
        for w in enumerate_maps(&p.set, &t, &none, false, None) {
            let key = (p.from_b.then(&w), p.from_c.then(&w));
            match pairs.get_mut(&key) {
                Some(n) => *n += 1,
                None => return Err(format!("{}: a map into N({cname}) restricts to an incompatible pair", s.name)),
            }
        }
        if let Some(((_, _), n)) = pairs.iter().find(|(_, &n)| n != 1) {
            return Err(format!("{}: a compatible pair into N({cname}) has {n} extensions", s.name));
        }
        n_pairs += pairs.len();
    }
    Ok(n_pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles() {
        assert_eq!(grid_chains(1, 1, 2), 2);
        assert_eq!(monotone_maps(1, 2).len(), 6);
        assert_eq!(euler(&boundary(3)), 2);
        for (name, x) in sample_sets() {
            simplicial_identities(&x).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for s in sample_spans() {
            assert!(pushout_universal(&s, 2).unwrap() > 0, "{}", s.name);
        }
    }
}
