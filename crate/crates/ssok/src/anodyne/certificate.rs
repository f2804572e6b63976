//! Attachment certificates and their replay.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::generator::{Generator, GeneratorClass};
use super::{MarkedMap, TargetClass};
use crate::sset::construct::pushout_named;
use crate::sset::iso::{find_iso, IsoOptions, IsoOutcome};
use crate::sset::json::{self as sjson, SsetJson};
use crate::sset::{op, Ez, Id, SimplicialMap, SimplicialSet};

/// A simplex of a stage: a named nondegenerate simplex and a degeneracy word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexRef {
    pub target: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub deg_word: Vec<usize>,
}

impl SimplexRef {
    pub fn of(x: &SimplicialSet, z: &Ez) -> Self {
        SimplexRef { target: x.label(z.nd).to_string(), deg_word: op::deg_word(&z.surj) }
    }

    fn named(name: &str, z: &Ez) -> Self {
        SimplexRef { target: name.to_string(), deg_word: op::deg_word(&z.surj) }
    }

    pub fn resolve(&self, x: &SimplicialSet) -> Result<Ez, String> {
        let nd = x.id(&self.target).ok_or_else(|| format!("no simplex named `{}`", self.target))?;
        let m = x.dim(nd) + self.deg_word.len();
        let surj = op::surj_from_deg_word(m, &self.deg_word).ok_or_else(|| format!("bad degeneracy word {:?}", self.deg_word))?;
        Ok(Ez { surj, nd })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub class: GeneratorClass,
    #[serde(default)]
    pub n: usize,
    #[serde(default)]
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<SsetJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_bound: Option<usize>,
}

impl GeneratorSpec {
    pub fn from_generator(g: &Generator) -> Self {
        GeneratorSpec { class: g.class, n: g.n, k: g.k, complex: g.complex.as_ref().map(sjson::to_json), dim_bound: g.dim_bound }
    }

    pub fn to_generator(&self) -> Result<Generator, String> {
        let complex = match &self.complex {
            Some(j) => Some(sjson::from_json(j).map_err(|e| e.to_string())?),
            None => None,
        };
        Ok(Generator { class: self.class, n: self.n, k: self.k, complex, dim_bound: self.dim_bound })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InclusionSpec {
    pub source: SsetJson,
    pub target: SsetJson,
    /// Images of source simplices; matched by label when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<BTreeMap<String, SimplexRef>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Step {
    pub generator: GeneratorSpec,
    /// Image in the current stage of each simplex of the generator's source.
    pub attach: BTreeMap<String, SimplexRef>,
    /// Names in the new stage for simplices of the generator's target.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub names: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub inclusion: InclusionSpec,
    pub class: TargetClass,
    pub steps: Vec<Step>,
}

impl Certificate {
    pub fn new(incl: &MarkedMap, class: TargetClass) -> Self {
        let by_label = incl.source.ids().all(|s| {
            let z = &incl.map.images[s];
            z.is_nondeg() && incl.target.label(z.nd) == incl.source.label(s)
        });
        let map = (!by_label).then(|| {
            incl.source.ids().map(|s| (incl.source.label(s).to_string(), SimplexRef::of(&incl.target, &incl.map.images[s]))).collect()
        });
        Certificate {
            inclusion: InclusionSpec { source: sjson::to_json(&incl.source), target: sjson::to_json(&incl.target), map },
            class,
            steps: Vec::new(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Generator classes used, with multiplicities.
    pub fn census(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for s in &self.steps {
            *out.entry(s.generator.class.name().to_string()).or_insert(0) += 1;
        }
        out
    }
}

/// Builds the step filling `x ∈ b` along the horn `Λₖ`, naming stage
/// simplices through `name_of`.
pub fn horn_step(b: &SimplicialSet, x: Id, k: usize, class: GeneratorClass, name_of: &dyn Fn(Id) -> String) -> Step {
    let n = b.dim(x);
    let g = Generator::horn(class, n, k);
    let inst = g.instance().expect("horn step parameters");
    let mut attach = BTreeMap::new();
    for s in inst.source.ids() {
        let z = b.apply(&vertex_positions(&inst.source, s), x);
        attach.insert(inst.source.label(s).to_string(), SimplexRef::named(&name_of(z.nd), &z));
    }
    let top: Vec<usize> = (0..=n).collect();
    let face: Vec<usize> = (0..=n).filter(|&v| v != k).collect();
    let mut names = BTreeMap::new();
    names.insert(crate::sset::vlabel(&digits(&top)), name_of(x));
    let fz = b.apply(&face, x);
    names.insert(crate::sset::vlabel(&digits(&face)), name_of(fz.nd));
    Step { generator: GeneratorSpec::from_generator(&g), attach, names }
}

/// Builds the step marking the long edge of the 2-simplex `t ∈ b`.
pub fn triangle_step(b: &SimplicialSet, t: Id, name_of: &dyn Fn(Id) -> String) -> Step {
    let g = Generator::triangle();
    let inst = g.instance().unwrap();
    let mut attach = BTreeMap::new();
    for s in inst.source.ids() {
        let z = b.apply(&vertex_positions(&inst.source, s), t);
        attach.insert(inst.source.label(s).to_string(), SimplexRef::named(&name_of(z.nd), &z));
    }
    Step { generator: GeneratorSpec::from_generator(&g), attach, names: BTreeMap::new() }
}

/// Builds the step marking every edge of the Kan complex `k` embedded by `f`.
pub fn kan_step(k: &SimplicialSet, dim_bound: usize, stage: &SimplicialSet, f: &SimplicialMap) -> Step {
    let g = Generator::kan(k.clone(), dim_bound);
    let attach = k.ids().map(|s| (k.label(s).to_string(), SimplexRef::of(stage, &f.images[s]))).collect();
    Step { generator: GeneratorSpec::from_generator(&g), attach, names: BTreeMap::new() }
}

fn digits(v: &[usize]) -> Vec<String> {
    v.iter().map(|d| d.to_string()).collect()
}

/// Vertex positions of a simplex of a standard simplex or one of its subcomplexes.
fn vertex_positions(x: &SimplicialSet, s: Id) -> Vec<usize> {
    x.verts(s).iter().map(|&v| x.label(v).parse::<usize>().expect("numbered vertices")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// The certificate does not parse into valid objects.
    WellFormed,
    /// The declared map is not a monomorphism of marked simplicial sets.
    Inclusion,
    /// The generator parameters do not describe an instance.
    Generator,
    /// The generator is not allowed in the declared class.
    Class,
    /// The attaching map is not a map of marked simplicial sets.
    Attach,
    /// The step does not enlarge the stage.
    Growth,
    /// The last stage is not isomorphic to the target under the source.
    Final,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        f.write_str(s.as_str().unwrap())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{}: {axiom}: {detail}", match .step { Some(i) => format!("step {i}"), None => "certificate".to_string() })]
pub struct ReplayFailure {
    pub step: Option<usize>,
    pub axiom: Axiom,
    pub detail: String,
}

fn fail(step: Option<usize>, axiom: Axiom, detail: impl Into<String>) -> ReplayFailure {
    ReplayFailure { step, axiom, detail: detail.into() }
}

#[derive(Clone, Debug)]
pub struct ReplayReport {
    pub steps: usize,
    /// Simplex and marked-edge counts of each stage, source first.
    pub stage_sizes: Vec<(usize, usize)>,
    pub final_stage: SimplicialSet,
    /// The isomorphism from the last stage to the target.
    pub iso: SimplicialMap,
}

/// Decodes the declared inclusion.
pub fn decode_inclusion(spec: &InclusionSpec) -> Result<MarkedMap, ReplayFailure> {
    let wf = |e: String| fail(None, Axiom::WellFormed, e);
    let source = sjson::from_json(&spec.source).map_err(|e| wf(format!("source: {e}")))?;
    let target = sjson::from_json(&spec.target).map_err(|e| wf(format!("target: {e}")))?;
    let map = match &spec.map {
        None => SimplicialMap::by_labels(&source, &target).map_err(|e| fail(None, Axiom::Inclusion, e.to_string()))?,
        Some(m) => {
            let mut images = Vec::new();
            for s in source.ids() {
                let r = m.get(source.label(s)).ok_or_else(|| wf(format!("map: no image for `{}`", source.label(s))))?;
                images.push(r.resolve(&target).map_err(|e| wf(format!("map: {e}")))?);
            }
            SimplicialMap::new(images)
        }
    };
    MarkedMap::new(source, target, map).map_err(|e| fail(None, Axiom::Inclusion, e.to_string()))
}

/// Applies one step to `stage`, returning the next stage.
pub fn apply_step(stage: &SimplicialSet, step: &Step, class: TargetClass, index: usize) -> Result<SimplicialSet, ReplayFailure> {
    let at = Some(index);
    let g = step.generator.to_generator().map_err(|e| fail(at, Axiom::WellFormed, e))?;
    let inst = g.instance().map_err(|e| fail(at, Axiom::Generator, e.to_string()))?;
    if !g.allowed_in(class) {
        return Err(fail(at, Axiom::Class, format!("{} is not a generator of the {class} class", g.class)));
    }
    let mut images = Vec::with_capacity(inst.source.len());
    for s in inst.source.ids() {
        let label = inst.source.label(s);
        let r = step.attach.get(label).ok_or_else(|| fail(at, Axiom::Attach, format!("no image for `{label}`")))?;
        images.push(r.resolve(stage).map_err(|e| fail(at, Axiom::Attach, e))?);
    }
    if step.attach.len() != inst.source.len() {
        return Err(fail(at, Axiom::Attach, "attaching map names simplices outside the generator"));
    }
    let attach = SimplicialMap::new(images);
    attach.validate(&inst.source, stage, true).map_err(|e| fail(at, Axiom::Attach, e.to_string()))?;
    let mut names = HashMap::new();
    for (from, to) in &step.names {
        let y = inst.target.id(from).ok_or_else(|| fail(at, Axiom::WellFormed, format!("names: no simplex `{from}` in the generator")))?;
        names.insert(y, to.clone());
    }
    let p = pushout_named(&inst.source, &inst.target, stage, &inst.map, &attach, &names).map_err(|e| fail(at, Axiom::Attach, e.to_string()))?;
    let next = p.set;
    if next.len() == stage.len() && next.marked().len() == stage.marked().len() {
        return Err(fail(at, Axiom::Growth, "the pushout adds neither simplices nor markings"));
    }
    Ok(next)
}

/// Replays `steps` from `start`.
pub fn replay_steps(start: &SimplicialSet, steps: &[Step], class: TargetClass) -> Result<(SimplicialSet, Vec<(usize, usize)>), ReplayFailure> {
    let mut stage = start.clone();
    let mut sizes = vec![(stage.len(), stage.marked().len())];
    for (i, s) in steps.iter().enumerate() {
        stage = apply_step(&stage, s, class, i)?;
        sizes.push((stage.len(), stage.marked().len()));
    }
    Ok((stage, sizes))
}

/// Checks that `stage`, which contains `incl.source` on its first ids, is
/// isomorphic to `incl.target` by a map extending `incl.map`.
pub fn match_target(stage: &SimplicialSet, incl: &MarkedMap) -> Result<SimplicialMap, String> {
    if let Ok(m) = SimplicialMap::by_labels(stage, &incl.target) {
        if is_marked_iso(&m, stage, &incl.target) && incl.source.ids().all(|s| m.images[s] == incl.map.images[s]) {
            return Ok(m);
        }
    }
    let fixed: HashMap<Id, Id> = incl.source.ids().map(|s| (s, incl.map.images[s].nd)).collect();
    let opts = IsoOptions { fixed, ..Default::default() };
    match find_iso(stage, &incl.target, &opts) {
        IsoOutcome::Iso(m) => Ok(m),
        IsoOutcome::NotIsomorphic => Err("the last stage is not isomorphic to the target under the source".into()),
        IsoOutcome::BudgetExceeded { size, budget } => Err(format!("isomorphism check exceeded its budget ({size} > {budget})")),
    }
}

fn is_marked_iso(m: &SimplicialMap, a: &SimplicialSet, b: &SimplicialSet) -> bool {
    if a.len() != b.len() || m.validate(a, b, true).is_err() || !m.is_mono() {
        return false;
    }
    let img: BTreeSet<Id> = a.marked().iter().map(|&e| m.images[e].nd).collect();
    &img == b.marked()
}

/// Replays a certificate from scratch.
pub fn verify_certificate(cert: &Certificate) -> Result<ReplayReport, ReplayFailure> {
    let incl = decode_inclusion(&cert.inclusion)?;
    let (stage, sizes) = replay_steps(&incl.source, &cert.steps, cert.class)?;
    let iso = match_target(&stage, &incl).map_err(|e| fail(None, Axiom::Final, e))?;
    Ok(ReplayReport { steps: cert.steps.len(), stage_sizes: sizes, final_stage: stage, iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::build::{horn, spine, standard_simplex};

    #[test]
    fn spine_of_triangle() {
        let t = standard_simplex(2, None);
        let incl = MarkedMap::inclusion(&spine(2), &t).unwrap();
        let mut c = Certificate::new(&incl, TargetClass::Inner);
        c.steps.push(horn_step(&t, t.get("012").unwrap(), 1, GeneratorClass::InnHorn, &|y| t.label(y).to_string()));
        let r = verify_certificate(&c).unwrap();
        assert_eq!(r.stage_sizes, vec![(5, 0), (7, 0)]);
        let back = Certificate::from_json_str(&c.to_json_string()).unwrap();
        verify_certificate(&back).unwrap();
    }

    #[test]
    fn horn_along_identity() {
        let t = standard_simplex(2, None);
        let incl = MarkedMap::inclusion(&horn(2, 1).unwrap(), &t).unwrap();
        let mut c = Certificate::new(&incl, TargetClass::Inner);
        c.steps.push(horn_step(&t, t.get("012").unwrap(), 1, GeneratorClass::InnHorn, &|y| t.label(y).to_string()));
        verify_certificate(&c).unwrap();
    }

    #[test]
    fn failures_name_the_axiom() {
        let t = standard_simplex(2, None);
        let incl = MarkedMap::inclusion(&horn(2, 0).unwrap(), &t).unwrap();
        let mut c = Certificate::new(&incl, TargetClass::Inner);
        c.steps.push(horn_step(&t, t.get("012").unwrap(), 0, GeneratorClass::LHornSharp, &|y| t.label(y).to_string()));
        let e = verify_certificate(&c).unwrap_err();
        assert_eq!((e.step, e.axiom), (Some(0), Axiom::Class));
        c.steps.clear();
        assert_eq!(verify_certificate(&c).unwrap_err().axiom, Axiom::Final);
    }
}
