//! Categories of extensions of an active morphism, strict extension fibers
//! and their `O(1)`-orbits.

use std::collections::HashMap;

use serde::Serialize;

use super::total::{compose, compose_component, inverse, product, TotalMorphism, SIZE_LIMIT};
use super::{DiscreteOperad, Op, OperadError, PointedMap};
use crate::cat::{FiniteCategory, Morphism, UnionFind};

/// A square `σ = g₁⁻¹ f′ g₀` with `g₀` atomic, `f′` active and `g₁` an
/// equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtObject {
    pub g0: TotalMorphism,
    pub f: TotalMorphism,
    pub g1: TotalMorphism,
}

impl ExtObject {
    /// The color of `⟨m+1⟩` missed by `g₀`.
    pub fn new_color(&self) -> usize {
        self.g0.alpha.new_color().expect("g0 is atomic")
    }

    pub fn display(&self, o: &DiscreteOperad) -> String {
        format!("[{} | {} | {}]", self.g0.display(o), self.f.display(o), self.g1.display(o))
    }
}

/// Whether morphisms must carry the new color to the new color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtVariant {
    Compatible,
    Full,
}

/// Atomic morphisms `⟨m⟩ → ⟨m+1⟩`.
pub fn atomic_maps(o: &DiscreteOperad, m: usize) -> Vec<TotalMorphism> {
    let units: Vec<Op> = o.ops(1).into_iter().filter(|&u| o.unary_inverse(u).is_some()).collect();
    PointedMap::all(m, m + 1)
        .into_iter()
        .filter(|a| a.is_atomic())
        .flat_map(|a| {
            let choices: Vec<Vec<Op>> =
                (1..=m + 1).map(|j| if a.preimage(j).is_empty() { o.ops(0) } else { units.clone() }).collect();
            product(&choices).into_iter().map(move |ops| TotalMorphism { alpha: a.clone(), ops })
        })
        .collect()
}

/// The inclusion `⟨n⟩ → ⟨n+1⟩` with unit components and the nullary
/// operation on the new color.
pub fn standard_atomic(o: &DiscreteOperad, n: usize) -> Result<TotalMorphism, OperadError> {
    let e = o.nullary().ok_or_else(|| OperadError::Unitality(format!("{} has {} nullary operations", o.name, o.count(0))))?;
    let mut ops = vec![o.unit; n];
    ops.push(e);
    Ok(TotalMorphism { alpha: PointedMap::new(n + 1, &(1..=n).collect::<Vec<_>>()).unwrap(), ops })
}

pub fn equivalences(o: &DiscreteOperad, n: usize) -> Vec<TotalMorphism> {
    let units: Vec<Op> = o.ops(1).into_iter().filter(|&u| o.unary_inverse(u).is_some()).collect();
    PointedMap::all(n, n)
        .into_iter()
        .filter(|a| a.is_bijection())
        .flat_map(|a| product(&vec![units.clone(); n]).into_iter().map(move |ops| TotalMorphism { alpha: a.clone(), ops }))
        .collect()
}

/// Morphisms `u` with source `first.target()` and `u ∘ first = target`,
/// whose pointed map extends the forced values and sends the remaining
/// elements anywhere allowed by `free`.
fn solve_after(
    o: &DiscreteOperad,
    first: &TotalMorphism,
    target: &TotalMorphism,
    free: &[Vec<usize>],
) -> Result<Vec<TotalMorphism>, OperadError> {
    let n = target.target();
    let mut forced = vec![None; first.target() + 1];
    for i in 1..=first.source() {
        let j = first.alpha.apply(i);
        if j != 0 {
            forced[j] = Some(target.alpha.apply(i));
        }
    }
    let mut out = Vec::new();
    let slots: Vec<usize> = (1..=first.target()).filter(|&j| forced[j].is_none()).collect();
    for pick in product(free) {
        let img: Vec<usize> = (1..=first.target())
            .map(|j| forced[j].unwrap_or_else(|| pick[slots.iter().position(|&s| s == j).unwrap()]))
            .collect();
        let alpha = PointedMap::new(n, &img).unwrap();
        if alpha.after(&first.alpha) != target.alpha {
            continue;
        }
        let mut choices = Vec::with_capacity(n);
        for k in 1..=n {
            let mut c = Vec::new();
            for psi in o.ops(alpha.preimage(k).len()) {
                if compose_component(o, &alpha, psi, k, first)? == target.ops[k - 1] {
                    c.push(psi);
                }
            }
            choices.push(c);
        }
        out.extend(product(&choices).into_iter().map(|ops| TotalMorphism { alpha: alpha.clone(), ops }));
    }
    Ok(out)
}

fn check_sigma(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<(), OperadError> {
    if !sigma.is_active() {
        return Err(OperadError::Other(format!("σ = {} is not active", sigma.display(o))));
    }
    if sigma.source() + 1 > o.bound {
        return Err(OperadError::Bound { arity: sigma.source() + 1, bound: o.bound });
    }
    Ok(())
}

/// Objects of the extension category of `σ`.
pub fn ext_objects(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<Vec<ExtObject>, OperadError> {
    check_sigma(o, sigma)?;
    let (m, n) = (sigma.source(), sigma.target());
    let mut out = Vec::new();
    for g1 in equivalences(o, n) {
        let target = compose(o, &g1, sigma)?;
        for g0 in atomic_maps(o, m) {
            let free = vec![(1..=n).collect::<Vec<_>>()];
            for f in solve_after(o, &g0, &target, &free)? {
                out.push(ExtObject { g0: g0.clone(), f, g1: g1.clone() });
            }
        }
    }
    Ok(out)
}

/// The `h` components of morphisms `x → y`; the other component is forced.
pub fn ext_homs(o: &DiscreteOperad, x: &ExtObject, y: &ExtObject, variant: ExtVariant) -> Result<Vec<TotalMorphism>, OperadError> {
    let k = compose(o, &y.g1, &inverse(o, &x.g1).expect("g1 is an equivalence"))?;
    let kf = compose(o, &k, &x.f)?;
    let free = match variant {
        ExtVariant::Compatible => vec![vec![y.new_color()]],
        ExtVariant::Full => vec![(1..=y.g0.target()).collect()],
    };
    let mut out = Vec::new();
    for h in solve_after(o, &x.g0, &y.g0, &free)? {
        if compose(o, &y.f, &h)? == kf {
            out.push(h);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ExtCategory {
    pub sigma: TotalMorphism,
    pub variant: ExtVariant,
    pub objects: Vec<ExtObject>,
    pub cat: FiniteCategory,
    /// The `h` component of each morphism.
    pub h: Vec<TotalMorphism>,
}

fn build(o: &DiscreteOperad, sigma: &TotalMorphism, variant: ExtVariant) -> Result<ExtCategory, OperadError> {
    let objects = ext_objects(o, sigma)?;
    let n = objects.len();
    if n.saturating_mul(n).saturating_mul(n) > SIZE_LIMIT * 20 {
        return Err(OperadError::Other(format!("{n} extension objects exceed the size guard")));
    }
    let mut meta = Vec::new();
    let mut hs = Vec::new();
    let mut index = HashMap::new();
    let mut identity = vec![0; n];
    for x in 0..n {
        for y in 0..n {
            for h in ext_homs(o, &objects[x], &objects[y], variant)? {
                if x == y && h == TotalMorphism::identity(o, h.source()) {
                    identity[x] = meta.len();
                }
                index.insert((x, y, h.clone()), meta.len());
                meta.push(Morphism { name: format!("{}: {x}→{y}", h.display(o)), src: x, tgt: y });
                hs.push(h);
            }
        }
    }
    let names = objects.iter().map(|x| x.display(o)).collect();
    let cat = FiniteCategory::from_fn(names, meta.clone(), identity, |g, f| {
        let h = compose(o, &hs[g], &hs[f]).expect("within bound");
        index[&(meta[f].src, meta[g].tgt, h)]
    });
    Ok(ExtCategory { sigma: sigma.clone(), variant, objects, cat, h: hs })
}

/// Morphisms preserve the new color.
pub fn ext_category(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<ExtCategory, OperadError> {
    build(o, sigma, ExtVariant::Compatible)
}

/// Same objects, every morphism under `σ`.
pub fn ext_ha_category(o: &DiscreteOperad, sigma: &TotalMorphism) -> Result<ExtCategory, OperadError> {
    build(o, sigma, ExtVariant::Full)
}

/// Connected components of the extension category without building its
/// composition table.
#[derive(Clone, Debug)]
pub struct ExtComponents {
    pub objects: Vec<ExtObject>,
    pub variant: ExtVariant,
    /// One representative per component.
    pub reps: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl ExtComponents {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Component of an object not necessarily in the enumerated list.
    pub fn classify(&self, o: &DiscreteOperad, x: &ExtObject) -> Result<usize, OperadError> {
        for (c, &r) in self.reps.iter().enumerate() {
            if !ext_homs(o, x, &self.objects[r], self.variant)?.is_empty() {
                return Ok(c);
            }
        }
        Err(OperadError::Other(format!("{} is not an extension object", x.display(o))))
    }
}

/// With a group of unary operations every compatible morphism is invertible,
/// so one morphism to a representative decides the component; otherwise all
/// pairs are inspected.
pub fn ext_components(o: &DiscreteOperad, sigma: &TotalMorphism, variant: ExtVariant) -> Result<ExtComponents, OperadError> {
    let objects = ext_objects(o, sigma)?;
    let n = objects.len();
    if variant == ExtVariant::Compatible && o.unary_is_group() {
        let mut reps: Vec<usize> = Vec::new();
        let mut class_of = vec![0; n];
        'obj: for x in 0..n {
            for (c, &r) in reps.iter().enumerate() {
                if !ext_homs(o, &objects[x], &objects[r], variant)?.is_empty() {
                    class_of[x] = c;
                    continue 'obj;
                }
            }
            class_of[x] = reps.len();
            reps.push(x);
        }
        return Ok(ExtComponents { objects, variant, reps, class_of });
    }
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in 0..n {
            if x != y && uf.find(x) != uf.find(y) && !ext_homs(o, &objects[x], &objects[y], variant)?.is_empty() {
                uf.union(x, y);
            }
        }
    }
    let classes = uf.classes();
    let mut class_of = vec![0; n];
    for (c, cl) in classes.iter().enumerate() {
        for &x in cl {
            class_of[x] = c;
        }
    }
    let reps = classes.iter().map(|cl| cl[0]).collect();
    Ok(ExtComponents { objects, variant, reps, class_of })
}

/// `{f′ ∈ O(n+1) : f′ ∘ i = σ}`.
pub fn strict_fiber(o: &DiscreteOperad, sigma: Op, i: &TotalMorphism) -> Result<Vec<Op>, OperadError> {
    if !i.is_atomic(o) || i.source() != sigma.arity {
        return Err(OperadError::Other(format!("{} is not an atomic map out of ⟨{}⟩", i.display(o), sigma.arity)));
    }
    let n = sigma.arity;
    if n + 1 > o.bound {
        return Err(OperadError::Bound { arity: n + 1, bound: o.bound });
    }
    let target = TotalMorphism::single(sigma);
    let mut out = Vec::new();
    for f in o.ops(n + 1) {
        if compose(o, &TotalMorphism::single(f), i)? == target {
            out.push(f);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbits {
    pub fiber: Vec<String>,
    pub group_order: usize,
    pub is_group: bool,
    pub free: bool,
    pub orbits: Vec<Vec<String>>,
}

/// Orbits of `O(1)` acting on the strict fiber through the new input.
pub fn unary_orbits(o: &DiscreteOperad, sigma: Op, i: &TotalMorphism) -> Result<Orbits, OperadError> {
    let fiber = strict_fiber(o, sigma, i)?;
    let slot = i.alpha.new_color().unwrap() - 1;
    let group = o.ops(1);
    let is_group = o.unary_is_group();
    let pos: HashMap<Op, usize> = fiber.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut uf = UnionFind::new(fiber.len());
    let mut free = true;
    for (k, &f) in fiber.iter().enumerate() {
        for &u in &group {
            let g = o.compose(f, slot, u)?;
            let Some(&kg) = pos.get(&g) else {
                return Err(OperadError::Other(format!("{} leaves the fiber", o.op_name(g))));
            };
            if kg == k && u != o.unit {
                free = false;
            }
            uf.union(k, kg);
        }
    }
    let name = |k: usize| o.op_name(fiber[k]).to_string();
    Ok(Orbits {
        fiber: (0..fiber.len()).map(name).collect(),
        group_order: group.len(),
        is_group,
        free,
        orbits: uf.classes().into_iter().map(|c| c.into_iter().map(name).collect()).collect(),
    })
}

/// Parses `NAME` (one output, inputs in order), `id`, or components
/// `NAME(1,2);NAME(3)` with 1-based inputs.
pub fn parse_sigma(o: &DiscreteOperad, spec: &str) -> Result<TotalMorphism, OperadError> {
    let lookup = |name: &str, arity: Option<usize>| -> Result<Op, OperadError> {
        let name = name.trim();
        if name == "id" {
            return Ok(o.unit);
        }
        match arity {
            Some(a) => o.op_by_name(a, name),
            None => o.find(name),
        }
        .ok_or_else(|| OperadError::Other(format!("unknown operation `{name}` in {}", o.name)))
    };
    let spec = spec.trim();
    if !spec.contains('(') {
        return Ok(TotalMorphism::single(lookup(spec, None)?));
    }
    let mut img: Vec<usize> = Vec::new();
    let mut ops = Vec::new();
    for (k, part) in spec.split(';').enumerate() {
        let (name, rest) = part.split_once('(').ok_or_else(|| OperadError::Other(format!("malformed component `{part}`")))?;
        let inner = rest.trim().strip_suffix(')').ok_or_else(|| OperadError::Other(format!("malformed component `{part}`")))?;
        let ins: Vec<usize> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| OperadError::Other(format!("bad input `{s}`"))))
                .collect::<Result<_, _>>()?
        };
        for &i in &ins {
            if i == 0 {
                return Err(OperadError::Other("inputs are numbered from 1".into()));
            }
            if img.len() < i {
                img.resize(i, 0);
            }
            if img[i - 1] != 0 {
                return Err(OperadError::Other(format!("input {i} used twice")));
            }
            img[i - 1] = k + 1;
        }
        if ins.windows(2).any(|w| w[0] > w[1]) {
            return Err(OperadError::Other(format!("inputs of `{part}` must increase; use the symmetric action instead")));
        }
        ops.push(lookup(name, Some(ins.len()))?);
    }
    let alpha = PointedMap::new(ops.len(), &img).map_err(OperadError::Other)?;
    let f = TotalMorphism::new(o, alpha, ops)?;
    if !f.is_active() {
        return Err(OperadError::Other(format!("σ = {} is not active", f.display(o))));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{builtin_operad, Builtin};

    #[test]
    fn assinv_identity() {
        let o = builtin_operad(Builtin::AssInv, 3);
        let i = standard_atomic(&o, 1).unwrap();
        let fiber = strict_fiber(&o, o.unit, &i).unwrap();
        let mut names: Vec<&str> = fiber.iter().map(|&f| o.op_name(f)).collect();
        names.sort();
        assert_eq!(names, ["ab", "a~b", "ba", "~ba"]);
        let orb = unary_orbits(&o, o.unit, &i).unwrap();
        assert!(orb.free && orb.is_group);
        assert_eq!(orb.orbits.len(), 2);
        let sigma = TotalMorphism::identity(&o, 1);
        let e = ext_category(&o, &sigma).unwrap();
        e.cat.validate().unwrap();
        assert!(e.cat.is_groupoid());
        assert_eq!(e.cat.pi0().len(), 2);
        assert_eq!(ext_components(&o, &sigma, ExtVariant::Compatible).unwrap().count(), 2);
    }

    #[test]
    fn comm_is_contractible() {
        let o = builtin_operad(Builtin::Comm, 3);
        for m in 1..=2 {
            let sigma = parse_sigma(&o, &format!("c{m}")).unwrap();
            let e = ext_category(&o, &sigma).unwrap();
            assert_eq!(e.cat.pi0().len(), 1);
            assert!(e.cat.hom_profile().keys().all(|&k| k == 1));
            let ha = ext_ha_category(&o, &sigma).unwrap();
            assert!(ha.cat.num_morphisms() > e.cat.num_morphisms());
        }
    }

    #[test]
    fn sigma_specs() {
        let o = builtin_operad(Builtin::Ass, 3);
        let s = parse_sigma(&o, "ab(1,3);a(2)").unwrap();
        assert_eq!((s.source(), s.target()), (3, 2));
        assert!(parse_sigma(&o, "ab(1,3)").is_err());
        assert!(parse_sigma(&o, "ab(1,1)").is_err());
    }
}
