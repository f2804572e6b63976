//! The total category `O⊗` over pointed finite sets, its active part and the
//! fiber of the twisted arrows of the envelope.

use std::collections::HashMap;
use std::fmt;

use super::{DiscreteOperad, Op, OperadError, PointedMap};
use crate::cat::tw::twisted_arrow_cat;
use crate::cat::{FiniteCategory, Morphism};

/// Guard on the number of composable pairs an enumeration may produce.
pub const SIZE_LIMIT: usize = 1_000_000;

/// A morphism `⟨m⟩ → ⟨n⟩` of `O⊗`: a pointed map with one operation per
/// output, whose inputs are the preimage in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalMorphism {
    pub alpha: PointedMap,
    pub ops: Vec<Op>,
}

impl TotalMorphism {
    pub fn new(o: &DiscreteOperad, alpha: PointedMap, ops: Vec<Op>) -> Result<Self, OperadError> {
        if ops.len() != alpha.n {
            return Err(OperadError::Other(format!("{} needs {} operations, got {}", alpha, alpha.n, ops.len())));
        }
        for (j, op) in ops.iter().enumerate() {
            let k = alpha.preimage(j + 1).len();
            if op.arity != k || op.idx >= o.count(k) {
                return Err(OperadError::Other(format!("output {} of {} needs an operation of arity {k}", j + 1, alpha)));
            }
        }
        Ok(TotalMorphism { alpha, ops })
    }

    pub fn identity(o: &DiscreteOperad, n: usize) -> Self {
        TotalMorphism { alpha: PointedMap::identity(n), ops: vec![o.unit; n] }
    }

    /// The active morphism `⟨n⟩ → ⟨1⟩` carrying `f`.
    pub fn single(f: Op) -> Self {
        TotalMorphism { alpha: PointedMap::fold(f.arity), ops: vec![f] }
    }

    pub fn source(&self) -> usize {
        self.alpha.m
    }

    pub fn target(&self) -> usize {
        self.alpha.n
    }

    pub fn is_active(&self) -> bool {
        self.alpha.is_active()
    }

    /// Bijective with invertible components.
    pub fn is_equivalence(&self, o: &DiscreteOperad) -> bool {
        self.alpha.is_bijection() && self.ops.iter().all(|&f| o.unary_inverse(f).is_some())
    }

    /// Empty or singleton preimages, invertible unary components.
    pub fn is_semi_inert(&self, o: &DiscreteOperad) -> bool {
        self.alpha.is_semi_inert() && self.ops.iter().all(|&f| f.arity == 0 || o.unary_inverse(f).is_some())
    }

    pub fn is_atomic(&self, o: &DiscreteOperad) -> bool {
        self.alpha.is_atomic() && self.is_semi_inert(o)
    }

    pub fn display(&self, o: &DiscreteOperad) -> String {
        let parts: Vec<String> = (1..=self.target())
            .map(|j| {
                let ins: Vec<String> = self.alpha.preimage(j).iter().map(|i| i.to_string()).collect();
                format!("{}({})", o.op_name(self.ops[j - 1]), ins.join(","))
            })
            .collect();
        format!("⟨{}⟩→⟨{}⟩ {}", self.source(), self.target(), parts.join(";"))
    }
}

impl fmt::Display for TotalMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.alpha, self.ops.iter().map(|o| (o.arity, o.idx)).collect::<Vec<_>>())
    }
}

/// Component at output `k` of `second ∘ first`.
pub fn compose_component(
    o: &DiscreteOperad,
    second_alpha: &PointedMap,
    psi: Op,
    k: usize,
    first: &TotalMorphism,
) -> Result<Op, OperadError> {
    let js = second_alpha.preimage(k);
    let mut inputs: Vec<usize> = Vec::new();
    let mut gs = Vec::with_capacity(js.len());
    for &j in &js {
        inputs.extend(first.alpha.preimage(j));
        gs.push(first.ops[j - 1]);
    }
    let h = o.gamma(psi, &gs)?;
    let mut sorted = inputs.clone();
    sorted.sort_unstable();
    let perm: Vec<usize> = inputs.iter().map(|x| sorted.binary_search(x).unwrap()).collect();
    Ok(o.act(h, &perm))
}

/// `second ∘ first`.
pub fn compose(o: &DiscreteOperad, second: &TotalMorphism, first: &TotalMorphism) -> Result<TotalMorphism, OperadError> {
    let alpha = second.alpha.after(&first.alpha);
    let ops = (1..=second.target())
        .map(|k| compose_component(o, &second.alpha, second.ops[k - 1], k, first))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TotalMorphism { alpha, ops })
}

/// Inverse of an equivalence.
pub fn inverse(o: &DiscreteOperad, f: &TotalMorphism) -> Option<TotalMorphism> {
    if !f.is_equivalence(o) {
        return None;
    }
    let n = f.target();
    let mut img = vec![0; n];
    let mut ops = vec![o.unit; n];
    for j in 1..=n {
        let i = f.alpha.preimage(j)[0];
        img[j - 1] = i;
        ops[i - 1] = o.unary_inverse(f.ops[j - 1])?;
    }
    Some(TotalMorphism { alpha: PointedMap::new(n, &img).unwrap(), ops })
}

/// Every morphism over `alpha`.
pub fn over(o: &DiscreteOperad, alpha: &PointedMap) -> Vec<TotalMorphism> {
    let choices: Vec<Vec<Op>> = (1..=alpha.n).map(|j| o.ops(alpha.preimage(j).len())).collect();
    product(&choices).into_iter().map(|ops| TotalMorphism { alpha: alpha.clone(), ops }).collect()
}

/// Cartesian product of choice lists.
pub fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for x in c {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// `|hom(⟨m⟩, ⟨n⟩)|` from the product decomposition over outputs.
pub fn hom_count(o: &DiscreteOperad, m: usize, n: usize, active_only: bool) -> usize {
    PointedMap::all(m, n)
        .into_iter()
        .filter(|a| !active_only || a.is_active())
        .map(|a| (1..=n).map(|j| o.count(a.preimage(j).len())).product::<usize>())
        .sum()
}

pub fn hom(o: &DiscreteOperad, m: usize, n: usize, active_only: bool) -> Vec<TotalMorphism> {
    PointedMap::all(m, n)
        .into_iter()
        .filter(|a| !active_only || a.is_active())
        .flat_map(|a| over(o, &a))
        .collect()
}

/// Enumerated `O⊗` (or its active part) on `⟨0⟩, …, ⟨bound⟩`.
#[derive(Clone, Debug)]
pub struct TotalCategory {
    pub cat: FiniteCategory,
    pub bound: usize,
    pub morphisms: Vec<TotalMorphism>,
}

impl TotalCategory {
    /// The projection to pointed finite sets on a morphism.
    pub fn project(&self, f: usize) -> &PointedMap {
        &self.morphisms[f].alpha
    }
}

fn build(o: &DiscreteOperad, bound: usize, active_only: bool) -> Result<TotalCategory, OperadError> {
    if bound > o.bound {
        return Err(OperadError::Bound { arity: bound, bound: o.bound });
    }
    let counts: Vec<Vec<usize>> =
        (0..=bound).map(|m| (0..=bound).map(|n| hom_count(o, m, n, active_only)).collect()).collect();
    let total: usize = counts.iter().flatten().sum();
    let pairs: usize = (0..=bound)
        .flat_map(|x| (0..=bound).flat_map(move |y| (0..=bound).map(move |z| (x, y, z))))
        .map(|(x, y, z)| counts[x][y].saturating_mul(counts[y][z]))
        .fold(0usize, |a, b| a.saturating_add(b));
    if total > SIZE_LIMIT || pairs > SIZE_LIMIT * 20 {
        return Err(OperadError::Other(format!(
            "{} up to arity {bound}: {total} morphisms and {pairs} composable pairs exceed the size guard",
            o.name
        )));
    }
    let mut morphisms = Vec::new();
    let mut meta = Vec::new();
    for m in 0..=bound {
        for n in 0..=bound {
            for f in hom(o, m, n, active_only) {
                meta.push(Morphism { name: f.display(o), src: m, tgt: n });
                morphisms.push(f);
            }
        }
    }
    let index: HashMap<&TotalMorphism, usize> = morphisms.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let identity = (0..=bound).map(|n| index[&TotalMorphism::identity(o, n)]).collect();
    let objects = (0..=bound).map(|n| format!("⟨{n}⟩")).collect();
    let cat = FiniteCategory::from_fn(objects, meta, identity, |g, f| {
        index[&compose(o, &morphisms[g], &morphisms[f]).expect("within bound")]
    });
    Ok(TotalCategory { cat, bound, morphisms })
}

pub fn total_category(o: &DiscreteOperad, bound: usize) -> Result<TotalCategory, OperadError> {
    build(o, bound, false)
}

pub fn active_category(o: &DiscreteOperad, bound: usize) -> Result<TotalCategory, OperadError> {
    build(o, bound, true)
}

/// Objects of the envelope over `⟨n⟩`: an object `⟨k⟩` of `O⊗` with an
/// active map `⟨k⟩ → ⟨n⟩`.
pub fn env_objects_over(n: usize, bound: usize) -> Vec<(usize, PointedMap)> {
    (0..=bound).flat_map(|k| PointedMap::all_active(k, n).into_iter().map(move |a| (k, a))).collect()
}

/// The fiber over `⟨1⟩` of the twisted arrows of the envelope: twisted arrows
/// of the active part.
pub fn tw_env_category(o: &DiscreteOperad, bound: usize) -> Result<FiniteCategory, OperadError> {
    Ok(twisted_arrow_cat(&active_category(o, bound)?.cat).cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{builtin_operad, Builtin};

    #[test]
    fn comm_small() {
        let o = builtin_operad(Builtin::Comm, 2);
        let t = total_category(&o, 2).unwrap();
        t.cat.validate().unwrap();
        assert_eq!(t.cat.hom(2, 1).len(), 4);
        assert_eq!(env_objects_over(1, 3).len(), 4);
    }

    #[test]
    fn projection_is_a_functor() {
        let o = builtin_operad(Builtin::AssInv, 2);
        let t = total_category(&o, 2).unwrap();
        t.cat.validate().unwrap();
        for f in 0..t.cat.num_morphisms() {
            for &g in t.cat.out_of(t.cat.tgt(f)) {
                let gf = t.cat.compose(g, f).unwrap();
                assert_eq!(*t.project(gf), t.project(g).after(t.project(f)));
            }
        }
    }

    #[test]
    fn inverses() {
        let o = builtin_operad(Builtin::AssInv, 3);
        for f in hom(&o, 3, 3, true).into_iter().filter(|f| f.is_equivalence(&o)) {
            let g = inverse(&o, &f).unwrap();
            assert_eq!(compose(&o, &g, &f).unwrap(), TotalMorphism::identity(&o, 3));
            assert_eq!(compose(&o, &f, &g).unwrap(), TotalMorphism::identity(&o, 3));
        }
    }
}
