//! JSON and DOT encodings of finite categories, and DOT for 1-skeleta.

use std::collections::HashMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{CatError, FiniteCategory, Morphism};
use crate::sset::SimplicialSet;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MorphismJson {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// Identities are implicit, named `id_<object>` unless `identities` says
/// otherwise; `composition` lists triples `[g, f, g∘f]` for composable
/// non-identity pairs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CategoryJson {
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<String>,
    pub morphisms: Vec<MorphismJson>,
    #[serde(default)]
    pub composition: Vec<[String; 3]>,
}

pub fn to_json(c: &FiniteCategory) -> CategoryJson {
    let mut composition = Vec::new();
    for f in 0..c.num_morphisms() {
        if c.is_identity(f) {
            continue;
        }
        for &g in c.out_of(c.tgt(f)) {
            if !c.is_identity(g) {
                let h = c.compose(g, f).unwrap();
                composition.push([c.name(g).to_string(), c.name(f).to_string(), c.name(h).to_string()]);
            }
        }
    }
    let identities: Vec<String> = (0..c.num_objects()).map(|x| c.name(c.identity(x)).to_string()).collect();
    let default = identities.iter().zip(&c.objects).all(|(i, o)| *i == format!("id_{o}"));
    CategoryJson {
        objects: c.objects.clone(),
        identities: if default { Vec::new() } else { identities },
        morphisms: (0..c.num_morphisms())
            .filter(|&f| !c.is_identity(f))
            .map(|f| MorphismJson {
                name: c.name(f).to_string(),
                src: c.objects[c.src(f)].clone(),
                tgt: c.objects[c.tgt(f)].clone(),
            })
            .collect(),
        composition,
    }
}

pub fn from_json(j: &CategoryJson) -> Result<FiniteCategory, CatError> {
    let obj = |n: &str| j.objects.iter().position(|o| o == n).ok_or_else(|| CatError::UnknownObject(n.to_string()));
    let mut morphisms: Vec<Morphism> = Vec::new();
    let mut identity = Vec::new();
    for (i, o) in j.objects.iter().enumerate() {
        identity.push(morphisms.len());
        let name = j.identities.get(i).cloned().unwrap_or_else(|| format!("id_{o}"));
        morphisms.push(Morphism { name, src: i, tgt: i });
    }
    for (k, m) in j.morphisms.iter().enumerate() {
        if morphisms.iter().any(|x| x.name == m.name) {
            return Err(CatError::Other(format!("morphisms[{k}]: duplicate name `{}`", m.name)));
        }
        morphisms.push(Morphism { name: m.name.clone(), src: obj(&m.src)?, tgt: obj(&m.tgt)? });
    }
    let mid = |n: &str| morphisms.iter().position(|m| m.name == n).ok_or_else(|| CatError::UnknownMorphism(n.to_string()));
    let mut table = HashMap::new();
    for (k, [g, f, h]) in j.composition.iter().enumerate() {
        let (g, f, h) = (mid(g)?, mid(f)?, mid(h)?);
        if morphisms[f].tgt != morphisms[g].src {
            return Err(CatError::Composition(format!("composition[{k}]: not composable")));
        }
        table.insert((g, f), h);
    }
    let c = FiniteCategory::from_table(j.objects.clone(), morphisms, identity, &table)?;
    c.validate()?;
    Ok(c)
}

pub fn to_string(c: &FiniteCategory) -> String {
    serde_json::to_string_pretty(&to_json(c)).expect("serializable")
}

pub fn from_str(s: &str) -> Result<FiniteCategory, CatError> {
    let j: CategoryJson =
        serde_json::from_str(s).map_err(|e| CatError::Other(format!("line {} column {}: {e}", e.line(), e.column())))?;
    from_json(&j)
}

/// Objects as nodes and non-identity morphisms as edges.
pub fn to_dot(c: &FiniteCategory) -> String {
    let mut s = String::from("digraph C {\n");
    for (i, o) in c.objects.iter().enumerate() {
        writeln!(s, "  n{i} [label=\"{}\"];", escape(o)).unwrap();
    }
    for f in 0..c.num_morphisms() {
        if !c.is_identity(f) {
            writeln!(s, "  n{} -> n{} [label=\"{}\"];", c.src(f), c.tgt(f), escape(c.name(f))).unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// The 1-skeleton; marked edges are drawn bold.
pub fn sset_to_dot(x: &SimplicialSet) -> String {
    let mut s = String::from("digraph X {\n");
    for v in x.of_dim(0) {
        writeln!(s, "  n{v} [label=\"{}\"];", escape(x.label(v))).unwrap();
    }
    for e in x.of_dim(1) {
        let (a, b) = (x.verts(e)[0], x.verts(e)[1]);
        let style = if x.is_marked_id(e) { " style=bold" } else { "" };
        writeln!(s, "  n{a} -> n{b} [label=\"{}\"{style}];", escape(x.label(e))).unwrap();
    }
    s.push_str("}\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::super::corpus::corpus;
    use super::*;

    #[test]
    fn round_trips() {
        for (_, c) in corpus() {
            let j = to_json(&c);
            let d = from_json(&j).unwrap();
            assert_eq!(to_json(&d), j);
        }
    }

    #[test]
    fn dot_counts_edges() {
        let tw = super::super::tw::twisted_arrow_cat(&super::super::ordinal(1));
        let dot = to_dot(&tw.cat);
        assert_eq!(dot.matches("->").count(), 2);
        assert_eq!(dot.matches("[label=").count(), 5);
    }
}
