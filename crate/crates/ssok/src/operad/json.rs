//! JSON tables for single-colored operads.
//!
//! ```json
//! { "name": "Ass", "colors": ["c"],
//!   "ops": { "0": { "→c": ["1"] }, "1": { "c→c": ["a"] }, "2": { "c,c→c": ["ab", "ba"] } },
//!   "units": { "c": "a" },
//!   "compose": [["ab", 1, "ab", "abc"]],
//!   "sym_action": [["ab", [2, 1], "ba"]] }
//! ```
//!
//! `compose` entries are `[f, i, g, f ∘_i g]` with `i` counted from 1;
//! `sym_action` entries are `[f, π, f·π]` with `π` listing `π(1), …, π(n)`.
//! Composites with the unit and identity permutations may be omitted.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{permutations, DiscreteOperad, Op, OperadError};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct OperadJson {
    #[serde(default)]
    pub name: String,
    pub colors: Vec<String>,
    pub ops: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub units: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<(String, usize, String, String)>,
    #[serde(default)]
    pub sym_action: Vec<(String, Vec<usize>, String)>,
}

fn signature(c: &str, n: usize) -> String {
    format!("{}→{c}", vec![c; n].join(","))
}

pub fn to_json(o: &DiscreteOperad) -> OperadJson {
    let c = "c".to_string();
    let mut ops = BTreeMap::new();
    for n in 0..=o.bound {
        let mut sig = BTreeMap::new();
        sig.insert(signature(&c, n), o.names[n].clone());
        ops.insert(n.to_string(), sig);
    }
    let mut compose = Vec::new();
    let mut sym_action = Vec::new();
    for n in 0..=o.bound {
        for f in o.ops(n) {
            if f == o.unit {
                continue;
            }
            for i in 0..n {
                for m in 0..=o.bound + 1 - n {
                    for g in o.ops(m) {
                        if g == o.unit {
                            continue;
                        }
                        let h = o.compose(f, i, g).expect("complete table");
                        compose.push((o.op_name(f).to_string(), i + 1, o.op_name(g).to_string(), o.op_name(h).to_string()));
                    }
                }
            }
            for p in permutations(n) {
                if p.iter().enumerate().all(|(t, &x)| t == x) {
                    continue;
                }
                let g = o.act(f, &p);
                sym_action.push((o.op_name(f).to_string(), p.iter().map(|x| x + 1).collect(), o.op_name(g).to_string()));
            }
        }
    }
    let mut units = BTreeMap::new();
    units.insert(c.clone(), o.op_name(o.unit).to_string());
    OperadJson { name: o.name.clone(), colors: vec![c], ops, units, compose, sym_action }
}

pub fn from_json(j: &OperadJson) -> Result<DiscreteOperad, OperadError> {
    let table = |s: String| OperadError::Table(s);
    let [color] = j.colors.as_slice() else {
        return Err(table(format!("colors: exactly one color is supported, found {}", j.colors.len())));
    };
    let mut names: Vec<Vec<String>> = Vec::new();
    for (arity, sigs) in &j.ops {
        let n: usize = arity.parse().map_err(|_| table(format!("ops: arity key `{arity}` is not a number")))?;
        for (sig, list) in sigs {
            if *sig != signature(color, n) && sig.replace(' ', "") != signature(color, n) {
                return Err(table(format!("ops.{arity}: signature `{sig}` does not match arity {n} over `{color}`")));
            }
            if names.len() <= n {
                names.resize(n + 1, Vec::new());
            }
            names[n].extend(list.iter().cloned());
        }
    }
    if names.len() < 2 {
        names.resize(2, Vec::new());
    }
    let mut by_name: HashMap<&str, Op> = HashMap::new();
    for (n, list) in names.iter().enumerate() {
        for (idx, s) in list.iter().enumerate() {
            if by_name.insert(s.as_str(), Op { arity: n, idx }).is_some() {
                return Err(table(format!("ops.{n}: duplicate operation name `{s}`")));
            }
        }
    }
    let unit_name = j
        .units
        .get(color)
        .ok_or_else(|| OperadError::Unitality(format!("units: no unit given for color `{color}`")))?;
    let unit = match by_name.get(unit_name.as_str()) {
        Some(&u) if u.arity == 1 => u,
        _ => return Err(OperadError::Unitality(format!("units.{color}: `{unit_name}` is not a unary operation"))),
    };
    let get = |field: String, s: &str| by_name.get(s).copied().ok_or_else(|| table(format!("{field}: unknown operation `{s}`")));
    let mut comp = HashMap::new();
    for (k, (f, i, g, h)) in j.compose.iter().enumerate() {
        let field = format!("compose[{k}]");
        let (f, g, h) = (get(field.clone(), f)?, get(field.clone(), g)?, get(field.clone(), h)?);
        if *i == 0 || *i > f.arity || h.arity + 1 != f.arity + g.arity {
            return Err(table(format!("{field}: arities do not match")));
        }
        if comp.insert((f, i - 1, g), h).is_some_and(|old| old != h) {
            return Err(table(format!("{field}: conflicting composite")));
        }
    }
    let mut act = HashMap::new();
    for (k, (f, p, g)) in j.sym_action.iter().enumerate() {
        let field = format!("sym_action[{k}]");
        let (f, g) = (get(field.clone(), f)?, get(field.clone(), g)?);
        let mut sorted = p.clone();
        sorted.sort_unstable();
        if f.arity != g.arity || sorted != (1..=f.arity).collect::<Vec<_>>() {
            return Err(table(format!("{field}: not a permutation of the inputs")));
        }
        act.insert((f, p.iter().map(|x| x - 1).collect()), g);
    }
    let name = if j.name.is_empty() { "operad".to_string() } else { j.name.clone() };
    let o = DiscreteOperad::from_tables(&name, names, unit, comp, act)?;
    o.check_axioms(o.bound)?;
    Ok(o)
}

pub fn to_string(o: &DiscreteOperad) -> String {
    serde_json::to_string_pretty(&to_json(o)).unwrap()
}

pub fn from_str(s: &str) -> Result<DiscreteOperad, OperadError> {
    let j: OperadJson = serde_json::from_str(s).map_err(|e| OperadError::Table(format!("line {} column {}: {e}", e.line(), e.column())))?;
    from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{builtin_operad, Builtin};

    #[test]
    fn round_trip() {
        for b in Builtin::ALL {
            let o = builtin_operad(b, 3);
            let back = from_str(&to_string(&o)).unwrap();
            assert_eq!(back.names, o.names);
            assert_eq!(to_json(&back), to_json(&o));
        }
    }

    #[test]
    fn missing_unit() {
        let mut j = to_json(&builtin_operad(Builtin::Comm, 2));
        j.units.clear();
        let err = from_json(&j).unwrap_err();
        assert!(err.to_string().contains("unitality"), "{err}");
    }

    #[test]
    fn bad_table() {
        let mut j = to_json(&builtin_operad(Builtin::Ass, 3));
        let k = j.compose.iter().position(|c| c.0 == "ab" && c.2 == "ab").unwrap();
        j.compose[k].3 = "bca".into();
        assert!(from_json(&j).is_err());
        j.compose.remove(k);
        assert!(matches!(from_json(&j), Err(OperadError::Table(_))));
    }
}
