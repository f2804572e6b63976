//! JSON encoding of simplicial sets.
//!
//! ```json
//! { "dims": 1, "simplices": [{ "id": "01", "dim": 1,
//!   "faces": [{ "deg_word": [], "target": "1" }, { "deg_word": [], "target": "0" }] }],
//!   "marked": ["01"] }
//! ```

use serde::{Deserialize, Serialize};

use super::{op, Ez, SimplicialSet, SsetError};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FaceJson {
    pub deg_word: Vec<usize>,
    pub target: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SimplexJson {
    pub id: String,
    pub dim: usize,
    #[serde(default)]
    pub faces: Vec<FaceJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SsetJson {
    pub dims: usize,
    pub simplices: Vec<SimplexJson>,
    #[serde(default)]
    pub marked: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncated_at: Option<usize>,
}

pub fn to_json(x: &SimplicialSet) -> SsetJson {
    SsetJson {
        dims: x.dims(),
        simplices: x
            .ids()
            .map(|s| SimplexJson {
                id: x.label(s).to_string(),
                dim: x.dim(s),
                faces: x
                    .simplex(s)
                    .faces
                    .iter()
                    .map(|f| FaceJson { deg_word: op::deg_word(&f.surj), target: x.label(f.nd).to_string() })
                    .collect(),
            })
            .collect(),
        marked: x.marked_labels(),
        truncated_at: x.truncation(),
    }
}

pub fn from_json(j: &SsetJson) -> Result<SimplicialSet, SsetError> {
    let mut out = SimplicialSet::new();
    let mut pending: Vec<usize> = (0..j.simplices.len()).collect();
    // faces may be listed after their cofaces
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for k in pending {
            let s = &j.simplices[k];
            if s.faces.iter().all(|f| out.id(&f.target).is_some()) {
                let at = |field: &str, why: String| SsetError::Other(format!("simplices[{k}].{field}: {why}"));
                let expect = if s.dim == 0 { 0 } else { s.dim + 1 };
                if s.faces.len() != expect {
                    return Err(at("faces", format!("expected {expect} faces for dimension {}", s.dim)));
                }
                let mut faces = Vec::new();
                for (i, f) in s.faces.iter().enumerate() {
                    let t = out.get(&f.target)?;
                    let surj = op::surj_from_deg_word(s.dim - 1, &f.deg_word)
                        .ok_or_else(|| at(&format!("faces[{i}].deg_word"), format!("invalid word {:?}", f.deg_word)))?;
                    faces.push(Ez { surj, nd: t });
                }
                out.add(&s.id, faces).map_err(|e| at("id", e.to_string()))?;
            } else {
                rest.push(k);
            }
        }
        if rest.len() == before {
            let k = rest[0];
            let missing = j.simplices[k].faces.iter().find(|f| out.id(&f.target).is_none()).unwrap();
            return Err(SsetError::Other(format!(
                "simplices[{k}].faces: unknown or cyclic target `{}`",
                missing.target
            )));
        }
        pending = rest;
    }
    for (k, m) in j.marked.iter().enumerate() {
        let e = out.get(m).map_err(|e| SsetError::Other(format!("marked[{k}]: {e}")))?;
        out.mark(e).map_err(|e| SsetError::Other(format!("marked[{k}]: {e}")))?;
    }
    out.set_dims(j.dims);
    out.set_truncation(j.truncated_at);
    out.validate()?;
    Ok(out)
}

pub fn to_string(x: &SimplicialSet) -> String {
    serde_json::to_string_pretty(&to_json(x)).expect("serializable")
}

pub fn from_str(s: &str) -> Result<SimplicialSet, SsetError> {
    let j: SsetJson = serde_json::from_str(s).map_err(|e| SsetError::Other(format!("line {} column {}: {e}", e.line(), e.column())))?;
    from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::super::build::*;
    use super::super::construct::product;
    use super::*;

    #[test]
    fn round_trip() {
        let p = product(&standard_simplex(2, None), &standard_simplex(1, None).sharp()).set;
        let j = to_json(&p);
        let q = from_json(&j).unwrap();
        assert_eq!(to_json(&q), j);
    }

    #[test]
    fn bad_target_reported() {
        let s = r#"{"dims":1,"simplices":[{"id":"a","dim":1,"faces":[{"deg_word":[],"target":"x"},{"deg_word":[],"target":"x"}]}]}"#;
        let e = from_str(s).unwrap_err().to_string();
        assert!(e.contains("simplices[0]"), "{e}");
    }
}
