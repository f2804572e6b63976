//! Fibers of the brane fibration over an active morphism, enumerated
//! directly from the square `σ = σ₁ σ⁺ σ₀`.

use std::collections::HashMap;

use super::ext::{atomic_maps, equivalences};
use super::total::{compose, hom, inverse, over, TotalMorphism, SIZE_LIMIT};
use super::{DiscreteOperad, OperadError, PointedMap};
use crate::cat::{FiniteCategory, Morphism, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoObject {
    /// Atomic `S₀ → S₀⁺`.
    pub s0: TotalMorphism,
    /// Active `S₀⁺ → S₁⁺`.
    pub plus: TotalMorphism,
    /// Equivalence `S₁⁺ → S₁`.
    pub s1: TotalMorphism,
}

impl BoObject {
    pub fn display(&self, o: &DiscreteOperad) -> String {
        format!("[{} | {} | {}]", self.s0.display(o), self.plus.display(o), self.s1.display(o))
    }
}

pub fn bo_objects(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<Vec<BoObject>, OperadError> {
    if !sigma.is_active() {
        return Err(OperadError::Other(format!("σ = {} is not active", sigma.display(o))));
    }
    let (m, n) = (sigma.source(), sigma.target());
    if m + 1 > o.bound {
        return Err(OperadError::Bound { arity: m + 1, bound: o.bound });
    }
    let actives = hom(o, m + 1, n, true);
    let mut out = Vec::new();
    for s0 in atomic_maps(o, m) {
        for s1 in equivalences(o, n) {
            for plus in &actives {
                if compose(o, &s1, &compose(o, plus, &s0)?)? == *sigma {
                    out.push(BoObject { s0: s0.clone(), plus: plus.clone(), s1: s1.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// The pairs `(f₀⁺, f₁⁺)` from `x` to `y`: `f₀⁺ σ₀ = τ₀`, `σ₁ f₁⁺ = τ₁`,
/// `σ⁺ = f₁⁺ τ⁺ f₀⁺`, and `f₀⁺` sends the new color to the new color.
pub fn bo_homs(o: &DiscreteOperad, x: &BoObject, y: &BoObject) -> Result<Vec<(TotalMorphism, TotalMorphism)>, OperadError> {
    let f1 = compose(o, &inverse(o, &x.s1).expect("equivalence"), &y.s1)?;
    let (nx, ny) = (x.s0.alpha.new_color().unwrap(), y.s0.alpha.new_color().unwrap());
    let k = x.s0.target();
    let mut out = Vec::new();
    for alpha in PointedMap::all(k, k) {
        if alpha.apply(nx) != ny || alpha.after(&x.s0.alpha) != y.s0.alpha {
            continue;
        }
        for f0 in over(o, &alpha) {
            if compose(o, &f0, &x.s0)? != y.s0 {
                continue;
            }
            if compose(o, &f1, &compose(o, &y.plus, &f0)?)? == x.plus {
                out.push((f0, f1.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct BoFiber {
    pub objects: Vec<BoObject>,
    pub cat: FiniteCategory,
}

pub fn bo_fiber(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<BoFiber, OperadError> {
    let objects = bo_objects(o, sigma)?;
    let n = objects.len();
    if n.saturating_mul(n).saturating_mul(n) > SIZE_LIMIT * 20 {
        return Err(OperadError::Other(format!("{n} objects in the fiber exceed the size guard")));
    }
    let mut meta = Vec::new();
    let mut data = Vec::new();
    let mut index = HashMap::new();
    let mut identity = vec![0; n];
    for x in 0..n {
        for y in 0..n {
            for (f0, f1) in bo_homs(o, &objects[x], &objects[y])? {
                if x == y && f0 == TotalMorphism::identity(o, f0.source()) {
                    identity[x] = meta.len();
                }
                index.insert((x, y, f0.clone()), meta.len());
                meta.push(Morphism { name: format!("{}: {x}→{y}", f0.display(o)), src: x, tgt: y });
                data.push((f0, f1));
            }
        }
    }
    let names = objects.iter().map(|x| x.display(o)).collect();
    let cat = FiniteCategory::from_fn(names, meta.clone(), identity, |g, f| {
        let f0 = compose(o, &data[g].0, &data[f].0).expect("within bound");
        index[&(meta[f].src, meta[g].tgt, f0)]
    });
    Ok(BoFiber { objects, cat })
}

/// Number of connected components, by union-find over hom existence.
pub fn bo_components(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<usize, OperadError> {
    let objects = bo_objects(o, sigma)?;
    let n = objects.len();
    let mut uf = UnionFind::new(n);
    if o.unary_is_group() {
        // every morphism is invertible, so reaching a representative suffices
        let mut reps: Vec<usize> = Vec::new();
        'obj: for x in 0..n {
            for &r in &reps {
                if !bo_homs(o, &objects[x], &objects[r])?.is_empty() {
                    uf.union(x, r);
                    continue 'obj;
                }
            }
            reps.push(x);
        }
    } else {
        for x in 0..n {
            for y in 0..n {
                if uf.find(x) != uf.find(y) && !bo_homs(o, &objects[x], &objects[y])?.is_empty() {
                    uf.union(x, y);
                }
            }
        }
    }
    Ok(uf.classes().len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{builtin_operad, Builtin};

    #[test]
    fn identity_fibers() {
        for (b, want) in [(Builtin::AssInv, 2), (Builtin::Ass, 2), (Builtin::Comm, 1)] {
            let o = builtin_operad(b, 2);
            let sigma = TotalMorphism::identity(&o, 1);
            let f = bo_fiber(&o, &sigma).unwrap();
            f.cat.validate().unwrap();
            assert_eq!(f.cat.pi0().len(), want, "{}", b.name());
            assert_eq!(bo_components(&o, &sigma).unwrap(), want);
        }
    }
}
