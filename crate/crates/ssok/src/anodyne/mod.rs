//! Marked anodyne maps: generators, certificates, search and the
//! pushout-join calculus.

pub mod certificate;
pub mod filtrations;
pub mod generator;
pub mod kan;
pub mod pushout_join;
pub mod search;
pub mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sset::{SimplicialMap, SimplicialSet, SsetError};

pub use certificate::{verify_certificate, Certificate};
pub use generator::{Generator, GeneratorClass};
pub use search::{search_decomposition, SearchConfig, SearchOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnodyneError {
    #[error(transparent)]
    Sset(#[from] SsetError),
    #[error("invalid generator: {0}")]
    Generator(String),
    #[error("{0}")]
    Other(String),
}

/// A monomorphism of marked simplicial sets.
#[derive(Clone, Debug)]
pub struct MarkedMap {
    pub source: SimplicialSet,
    pub target: SimplicialSet,
    pub map: SimplicialMap,
}

impl MarkedMap {
    pub fn new(source: SimplicialSet, target: SimplicialSet, map: SimplicialMap) -> Result<Self, AnodyneError> {
        map.validate(&source, &target, true)?;
        map.check_mono(&source)?;
        Ok(MarkedMap { source, target, map })
    }

    /// Inclusion of a subobject matched by labels.
    pub fn inclusion(source: &SimplicialSet, target: &SimplicialSet) -> Result<Self, AnodyneError> {
        let map = SimplicialMap::by_labels(source, target)?;
        Self::new(source.clone(), target.clone(), map)
    }

    /// Inclusion of the subobject spanned by the listed facets of `target`,
    /// with the induced marking.
    pub fn sub(target: &SimplicialSet, facets: &[&str]) -> Result<Self, AnodyneError> {
        let mut keep = Vec::new();
        for f in facets {
            keep.push(target.get(f)?);
        }
        let closed = target.closure(keep);
        let (source, map) = target.sub(&closed)?;
        Self::new(source, target.clone(), map)
    }
}

/// The class a certificate claims membership in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetClass {
    #[serde(rename = "inner")]
    Inner,
    #[serde(rename = "marked")]
    Marked,
    #[serde(rename = "right_marked")]
    RightMarked,
    #[serde(rename = "left_marked")]
    LeftMarked,
}

impl TargetClass {
    pub const ALL: [TargetClass; 4] = [TargetClass::Inner, TargetClass::Marked, TargetClass::RightMarked, TargetClass::LeftMarked];

    pub fn allows_left(self) -> bool {
        matches!(self, TargetClass::Marked | TargetClass::LeftMarked)
    }

    pub fn allows_right(self) -> bool {
        matches!(self, TargetClass::Marked | TargetClass::RightMarked)
    }

    pub fn allows_marking(self) -> bool {
        !matches!(self, TargetClass::Inner)
    }

    pub fn name(self) -> &'static str {
        match self {
            TargetClass::Inner => "inner",
            TargetClass::Marked => "marked",
            TargetClass::RightMarked => "right_marked",
            TargetClass::LeftMarked => "left_marked",
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetClass {
    type Err = AnodyneError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TargetClass::ALL
            .into_iter()
            .find(|c| c.name() == s || c.name().replace('_', "-") == s)
            .ok_or_else(|| AnodyneError::Other(format!("unknown class `{s}`")))
    }
}
