//! The square `Ext(id_Y) → Ext(g), Ext(f) → Ext(g∘f)` on connected
//! components, tested for being a pushout of sets. This is a necessary
//! condition for the square of spaces to be a homotopy pushout.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use super::ext::{ext_components, standard_atomic, ExtComponents, ExtObject, ExtVariant};
use super::total::{compose, hom, inverse, TotalMorphism};
use super::{DiscreteOperad, OperadError};
use crate::cat::UnionFind;

#[derive(Clone, Debug, Serialize)]
pub struct CoherenceVerdict {
    pub f: String,
    pub g: String,
    /// `|π₀|` of `Ext(id_Y)`, `Ext(g)`, `Ext(f)`, `Ext(g∘f)`.
    pub pi0: [usize; 4],
    pub commutes: bool,
    pub pushout: bool,
}

/// The extension of `f` by one new color on both sides, landing in the
/// target of the atomic `y0`.
fn widen(o: &DiscreteOperad, f: &TotalMorphism, y0: &TotalMorphism) -> Result<(TotalMorphism, TotalMorphism), OperadError> {
    let x0 = standard_atomic(o, f.source())?;
    let base = compose(o, y0, f)?;
    let nu = y0.alpha.new_color().unwrap();
    let mut img = base.alpha.images().to_vec();
    img.push(nu);
    let mut ops = base.ops.clone();
    ops[nu - 1] = o.unit;
    let plus = TotalMorphism { alpha: super::PointedMap::new(y0.target(), &img).unwrap(), ops };
    debug_assert_eq!(compose(o, &plus, &x0)?, base);
    Ok((x0, plus))
}

/// Post-composition `Ext(σ) → Ext(g∘σ)`.
fn push(o: &DiscreteOperad, g: &TotalMorphism, x: &ExtObject) -> Result<ExtObject, OperadError> {
    let back = compose(o, g, &inverse(o, &x.g1).expect("equivalence"))?;
    Ok(ExtObject { g0: x.g0.clone(), f: compose(o, &back, &x.f)?, g1: TotalMorphism::identity(o, g.target()) })
}

/// Pre-composition `Ext(τ) → Ext(τ∘f)`.
fn pull(o: &DiscreteOperad, f: &TotalMorphism, x: &ExtObject) -> Result<ExtObject, OperadError> {
    let (x0, plus) = widen(o, f, &x.g0)?;
    Ok(ExtObject { g0: x0, f: compose(o, &x.f, &plus)?, g1: x.g1.clone() })
}

/// Memoized component computations keyed by `σ`.
#[derive(Default)]
pub struct ExtCache {
    map: Mutex<HashMap<TotalMorphism, std::sync::Arc<ExtComponents>>>,
}

impl ExtCache {
    pub fn get(&self, o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<std::sync::Arc<ExtComponents>, OperadError> {
        if let Some(c) = self.map.lock().unwrap().get(sigma) {
            return Ok(c.clone());
        }
        let c = std::sync::Arc::new(ext_components(o, sigma, ExtVariant::Compatible)?);
        self.map.lock().unwrap().insert(sigma.clone(), c.clone());
        Ok(c)
    }
}

pub fn coherence_probe(o: &DiscreteOperad, f: &TotalMorphism, g: &TotalMorphism) -> Result<CoherenceVerdict, OperadError> {
    coherence_probe_cached(o, f, g, &ExtCache::default())
}

pub fn coherence_probe_cached(
    o: &DiscreteOperad,
    f: &TotalMorphism,
    g: &TotalMorphism,
    cache: &ExtCache,
) -> Result<CoherenceVerdict, OperadError> {
    if f.target() != g.source() || !f.is_active() || !g.is_active() {
        return Err(OperadError::Other("f and g must be composable active morphisms".into()));
    }
    let gf = compose(o, g, f)?;
    let a = cache.get(o, &TotalMorphism::identity(o, f.target()))?;
    let b = cache.get(o, g)?;
    let c = cache.get(o, f)?;
    let d = cache.get(o, &gf)?;
    let (nb, nc) = (b.count(), c.count());
    let mut uf = UnionFind::new(nb + nc);
    let mut commutes = true;
    for &r in &a.reps {
        let x = &a.objects[r];
        let xb = push(o, g, x)?;
        let xc = pull(o, f, x)?;
        let (cb, cc) = (b.classify(o, &xb)?, c.classify(o, &xc)?);
        uf.union(cb, nb + cc);
        commutes &= d.classify(o, &pull(o, f, &xb)?)? == d.classify(o, &push(o, g, &xc)?)?;
    }
    // induced map from the pushout of sets
    let mut image: HashMap<usize, usize> = HashMap::new();
    let mut injective = true;
    for cb in 0..nb {
        let z = d.classify(o, &pull(o, f, &b.objects[b.reps[cb]])?)?;
        injective &= *image.entry(uf.find(cb)).or_insert(z) == z;
    }
    for cc in 0..nc {
        let z = d.classify(o, &push(o, g, &c.objects[c.reps[cc]])?)?;
        injective &= *image.entry(uf.find(nb + cc)).or_insert(z) == z;
    }
    let mut seen: Vec<usize> = image.values().copied().collect();
    seen.sort_unstable();
    seen.dedup();
    injective &= seen.len() == image.len();
    let surjective = seen.len() == d.count();
    Ok(CoherenceVerdict {
        f: f.display(o),
        g: g.display(o),
        pi0: [a.count(), nb, nc, d.count()],
        commutes,
        pushout: commutes && injective && surjective,
    })
}

/// Every pair `f: ⟨a⟩ → ⟨b⟩`, `g: ⟨b⟩ → ⟨1⟩` of active morphisms with
/// `a, b ≤ max_arity`.
pub fn coherence_sweep(o: &DiscreteOperad, max_arity: usize) -> Result<Vec<CoherenceVerdict>, OperadError> {
    let mut pairs = Vec::new();
    for b in 1..=max_arity {
        for g in hom(o, b, 1, true) {
            for a in 0..=max_arity {
                for f in hom(o, a, b, true) {
                    pairs.push((f, g.clone()));
                }
            }
        }
    }
    let cache = ExtCache::default();
    pairs.par_iter().map(|(f, g)| coherence_probe_cached(o, f, g, &cache)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{builtin_operad, Builtin};

    #[test]
    fn binary_pairs() {
        for (b, want_a, want) in [(Builtin::Comm, 1, [2, 1, 2, 1]), (Builtin::Ass, 2, [4, 3, 5, 4])] {
            let o = builtin_operad(b, 4);
            let mu = TotalMorphism::single(o.ops(2)[0]);
            let v = coherence_probe(&o, &mu, &TotalMorphism::identity(&o, 1)).unwrap();
            assert!(v.pushout, "{v:?}");
            assert_eq!(v.pi0[0], want_a);
            let f = crate::operad::ext::parse_sigma(&o, &format!("{}(1,2);id(3)", o.op_name(o.ops(2)[0]))).unwrap();
            let v = coherence_probe(&o, &f, &mu).unwrap();
            assert!(v.pushout, "{v:?}");
            assert_eq!(v.pi0, want);
        }
    }

    #[test]
    fn sweep_small() {
        let o = builtin_operad(Builtin::Ass, 3);
        let all = coherence_sweep(&o, 2).unwrap();
        assert!(all.iter().all(|v| v.pushout));
    }
}
