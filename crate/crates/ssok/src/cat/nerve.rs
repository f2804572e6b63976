//! Truncated nerves.

use std::collections::HashMap;

use super::FiniteCategory;
use crate::sset::{Ez, Id, SimplicialSet};

pub struct Nerve {
    pub set: SimplicialSet,
    /// Vertex of each object.
    pub objects: Vec<Id>,
    /// Simplex of each chain of non-identity morphisms.
    pub chains: HashMap<Vec<usize>, Id>,
}

impl Nerve {
    /// The simplex of an arbitrary chain starting at `x`; identities become degeneracies.
    pub fn simplex(&self, c: &FiniteCategory, x: usize, chain: &[usize]) -> Ez {
        let reduced: Vec<usize> = chain.iter().copied().filter(|&f| !c.is_identity(f)).collect();
        let mut surj = vec![0];
        let mut k = 0;
        for &f in chain {
            if !c.is_identity(f) {
                k += 1;
            }
            surj.push(k);
        }
        let nd = if reduced.is_empty() { self.objects[x] } else { self.chains[&reduced] };
        Ez { surj, nd }
    }

    /// Morphisms along the chain of a simplex.
    pub fn chain_of(&self, set: &SimplicialSet, z: &Ez, inv: &HashMap<Id, Vec<usize>>, c: &FiniteCategory) -> Vec<usize> {
        let base = &inv[&z.nd];
        let objs: Vec<usize> = set.vertex_list(z).iter().map(|v| self.objects.iter().position(|o| o == v).unwrap()).collect();
        (1..z.surj.len())
            .map(|j| if z.surj[j] == z.surj[j - 1] { c.identity(objs[j]) } else { base[z.surj[j - 1]] })
            .collect()
    }
}

/// Nerve truncated at dimension `d`. With `natural`, isomorphisms are marked.
pub fn nerve_truncated(c: &FiniteCategory, d: usize, natural: bool) -> Nerve {
    let mut set = SimplicialSet::new();
    let mut objects = Vec::new();
    for o in &c.objects {
        objects.push(set.add_fresh(o, Vec::new()).unwrap());
    }
    let mut nerve = Nerve { set, objects, chains: HashMap::new() };
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for k in 1..=d {
        let mut next = Vec::new();
        for ch in &layer {
            let ends: Vec<usize> = if ch.is_empty() {
                (0..c.num_morphisms()).filter(|&f| !c.is_identity(f)).collect()
            } else {
                c.out_of(c.tgt(*ch.last().unwrap())).iter().copied().filter(|&f| !c.is_identity(f)).collect()
            };
            for f in ends {
                let mut n = ch.clone();
                n.push(f);
                next.push(n);
            }
        }
        for ch in &next {
            let faces: Vec<Ez> = (0..=k)
                .map(|i| {
                    if k == 1 {
                        let v = if i == 0 { c.tgt(ch[0]) } else { c.src(ch[0]) };
                        return Ez::nondeg(nerve.objects[v], 0);
                    }
                    let (x, sub): (usize, Vec<usize>) = if i == 0 {
                        (c.tgt(ch[0]), ch[1..].to_vec())
                    } else if i == k {
                        (c.src(ch[0]), ch[..k - 1].to_vec())
                    } else {
                        let mut s = ch[..i - 1].to_vec();
                        s.push(c.compose(ch[i], ch[i - 1]).unwrap());
                        s.extend_from_slice(&ch[i + 1..]);
                        (c.src(ch[0]), s)
                    };
                    nerve.simplex(c, x, &sub)
                })
                .collect();
            let label = ch.iter().map(|&f| c.name(f)).collect::<Vec<_>>().join("|");
            let id = nerve.set.add_fresh(&label, faces).unwrap();
            nerve.chains.insert(ch.clone(), id);
        }
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    if natural {
        let isos: Vec<Id> = (0..c.num_morphisms())
            .filter(|&f| !c.is_identity(f) && c.is_iso(f))
            .map(|f| nerve.chains[&vec![f]])
            .collect();
        for e in isos {
            nerve.set.mark(e).unwrap();
        }
    }
    nerve.set.set_dims(d);
    nerve.set.set_truncation(Some(d));
    nerve
}

/// Inverse table of a nerve: simplex id to chain.
pub fn chain_table(n: &Nerve) -> HashMap<Id, Vec<usize>> {
    let mut inv: HashMap<Id, Vec<usize>> = n.chains.iter().map(|(ch, &id)| (id, ch.clone())).collect();
    for &v in &n.objects {
        inv.insert(v, Vec::new());
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::super::{group, ordinal};
    use super::*;
    use crate::sset::build::standard_simplex;
    use crate::sset::iso::is_isomorphic;

    #[test]
    fn nerve_of_ordinal_is_simplex() {
        let n = nerve_truncated(&ordinal(2), 3, false);
        n.set.validate().unwrap();
        assert!(is_isomorphic(&n.set, &standard_simplex(2, None)).is_iso());
    }

    #[test]
    fn nerve_of_z2() {
        let n = nerve_truncated(&group(&["e", "t"], |a, b| a ^ b), 2, false);
        n.set.validate().unwrap();
        assert_eq!(n.set.counts(), vec![1, 1, 1]);
        // t|t has middle face t∘t = e, a degenerate edge
        let tt = n.set.get("t|t").unwrap();
        assert!(!n.set.face(tt, 1).is_nondeg());
    }
}
