//! Generating anodyne maps.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::kan::kan_check;
use super::{AnodyneError, MarkedMap, TargetClass};
use crate::sset::build::{boundary, horn, standard_simplex};
use crate::sset::SimplicialSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorClass {
    /// `∂Δⁿ ⊂ Δⁿ`.
    Cell,
    /// `Λₖⁿ ⊂ Δⁿ`, `0 < k < n`.
    InnHorn,
    /// `∂Δⁿ♭ ⊂ Δⁿ♭`.
    #[serde(rename = "Cell♭")]
    CellFlat,
    /// `Λₖⁿ♭ ⊂ Δⁿ♭`, `0 < k < n`.
    #[serde(rename = "InnHorn♭")]
    InnHornFlat,
    /// `Λ₀ⁿ♭[0→1] ⊂ Δⁿ♭[0→1]`, or an inner flat horn.
    #[serde(rename = "LHorn♯")]
    LHornSharp,
    /// `Λₙⁿ♭[n-1→n] ⊂ Δⁿ♭[n-1→n]`, or an inner flat horn.
    #[serde(rename = "RHorn♯")]
    RHornSharp,
    /// `Λ₁²♯ ⊔_{Λ₁²♭} Δ²♭ → Δ²♯`.
    Triangle,
    /// `K♭ → K♯` for a finite Kan complex `K`.
    Kan,
}

impl GeneratorClass {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorClass::Cell => "Cell",
            GeneratorClass::InnHorn => "InnHorn",
            GeneratorClass::CellFlat => "Cell♭",
            GeneratorClass::InnHornFlat => "InnHorn♭",
            GeneratorClass::LHornSharp => "LHorn♯",
            GeneratorClass::RHornSharp => "RHorn♯",
            GeneratorClass::Triangle => "Triangle",
            GeneratorClass::Kan => "Kan",
        }
    }
}

impl fmt::Display for GeneratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub class: GeneratorClass,
    pub n: usize,
    pub k: usize,
    /// The complex of a `Kan` generator.
    pub complex: Option<SimplicialSet>,
    /// Horn dimension up to which the `Kan` complex is checked.
    pub dim_bound: Option<usize>,
}

impl Generator {
    pub fn horn(class: GeneratorClass, n: usize, k: usize) -> Self {
        Generator { class, n, k, complex: None, dim_bound: None }
    }

    pub fn triangle() -> Self {
        Generator { class: GeneratorClass::Triangle, n: 2, k: 1, complex: None, dim_bound: None }
    }

    pub fn kan(complex: SimplicialSet, dim_bound: usize) -> Self {
        Generator { class: GeneratorClass::Kan, n: 0, k: 0, complex: Some(complex), dim_bound: Some(dim_bound) }
    }

    fn is_inner(&self) -> bool {
        0 < self.k && self.k < self.n
    }

    /// Whether the generator may appear in a certificate of class `c`.
    pub fn allowed_in(&self, c: TargetClass) -> bool {
        use GeneratorClass::*;
        match self.class {
            Cell | CellFlat => false,
            InnHorn | InnHornFlat => true,
            LHornSharp => self.is_inner() || (c.allows_left()),
            RHornSharp => self.is_inner() || (c.allows_right()),
            Triangle | Kan => c.allows_marking(),
        }
    }

    /// The generator as an inclusion of marked simplicial sets.
    pub fn instance(&self) -> Result<MarkedMap, AnodyneError> {
        use GeneratorClass::*;
        let bad = |why: String| Err(AnodyneError::Generator(format!("{} n={} k={}: {why}", self.class, self.n, self.k)));
        let (n, k) = (self.n, self.k);
        match self.class {
            Cell | CellFlat => MarkedMap::inclusion(&boundary(n), &standard_simplex(n, None)),
            InnHorn | InnHornFlat => {
                if !self.is_inner() {
                    return bad("not an inner horn".into());
                }
                MarkedMap::inclusion(&horn(n, k)?, &standard_simplex(n, None))
            }
            LHornSharp | RHornSharp => {
                if self.is_inner() {
                    return MarkedMap::inclusion(&horn(n, k)?, &standard_simplex(n, None));
                }
                let left = self.class == LHornSharp;
                if n == 0 || (left && k != 0) || (!left && k != n) {
                    return bad("wrong horn position".into());
                }
                let edge = if left { "01" } else { &format!("{}{}", n - 1, n) };
                let mut t = standard_simplex(n, None);
                t.mark_labels(&[edge])?;
                let mut s = horn(n, k)?;
                if n >= 2 {
                    s.mark_labels(&[edge])?;
                }
                MarkedMap::inclusion(&s, &t)
            }
            Triangle => {
                let mut s = standard_simplex(2, None);
                s.mark_labels(&["01", "12"])?;
                let t = standard_simplex(2, None).sharp();
                MarkedMap::inclusion(&s, &t)
            }
            Kan => {
                let k = self.complex.as_ref().ok_or_else(|| AnodyneError::Generator("Kan generator needs a complex".into()))?;
                let bound = self.dim_bound.unwrap_or(k.top_dim().unwrap_or(0) + 1);
                let v = kan_check(k, bound);
                if !v.kan {
                    return bad(format!("complex is not Kan: {}", v.failure.unwrap_or_default()));
                }
                MarkedMap::inclusion(&k.flat(), &k.sharp())
            }
        }
    }
}

/// Instances of a class up to dimension `n_max`.
pub fn enumerate(class: GeneratorClass, n_max: usize) -> Vec<Generator> {
    use GeneratorClass::*;
    let mut out = Vec::new();
    match class {
        Cell | CellFlat => out.extend((0..=n_max).map(|n| Generator::horn(class, n, 0))),
        InnHorn | InnHornFlat => {
            for n in 2..=n_max {
                out.extend((1..n).map(|k| Generator::horn(class, n, k)));
            }
        }
        LHornSharp | RHornSharp => {
            for n in 1..=n_max {
                for k in 0..=n {
                    let outer_ok = if class == LHornSharp { k == 0 } else { k == n };
                    if outer_ok || (0 < k && k < n) {
                        out.push(Generator::horn(class, n, k));
                    }
                }
            }
        }
        Triangle => out.push(Generator::triangle()),
        Kan => out.push(Generator::kan(standard_simplex(0, None), n_max)),
    }
    out
}

pub const ALL_CLASSES: [GeneratorClass; 8] = [
    GeneratorClass::Cell,
    GeneratorClass::InnHorn,
    GeneratorClass::CellFlat,
    GeneratorClass::InnHornFlat,
    GeneratorClass::LHornSharp,
    GeneratorClass::RHornSharp,
    GeneratorClass::Triangle,
    GeneratorClass::Kan,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_instance_is_a_marked_mono() {
        for c in ALL_CLASSES {
            for g in enumerate(c, 4) {
                g.instance().unwrap_or_else(|e| panic!("{c} {} {}: {e}", g.n, g.k));
            }
        }
    }

    #[test]
    fn one_dimensional_outer_horns() {
        let l = Generator::horn(GeneratorClass::LHornSharp, 1, 0).instance().unwrap();
        assert_eq!(l.source.len(), 1);
        assert_eq!(l.target.marked().len(), 1);
        assert!(Generator::horn(GeneratorClass::LHornSharp, 2, 2).instance().is_err());
    }
}
