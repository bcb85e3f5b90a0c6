//! JSON configuration for a Borcherds-Cartan datum.
//!
//! Layout:
//!
//! ```json
//! {
//!   "indices": ["a", "b", "c"],
//!   "A": [[2, -1, -1], [-1, 0, 0], [-1, 0, -2]],
//!   "D": [1, 1, 1],
//!   "orientation": [["a", "b"], ["a", "c"]],
//!   "norms": { "c:2": { "num": {"0": "1"}, "den": {"0": "1", "4": "-1"} } }
//! }
//! ```
//!
//! `orientation` and `norms` are optional. Orientation defaults to
//! lower-to-higher index order. Norm override keys are `"name"` for
//! generators of multiplicity 1 and `"name:l"` for multiplicity l; the values
//! replace the built-in generator norms of the bilinear form.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CartanDatum, CartanError, Datum};
use crate::scalar::RatFunc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumConfig {
    pub indices: Vec<String>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(rename = "D")]
    pub d: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norms: Option<BTreeMap<String, RatFunc>>,
}

/// Generator-norm replacements keyed by (index id, multiplicity).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormOverrides {
    values: BTreeMap<(usize, u32), RatFunc>,
}

impl NormOverrides {
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, index: usize, mult: u32) -> Option<&RatFunc> {
        self.values.get(&(index, mult))
    }

    pub fn insert(&mut self, index: usize, mult: u32, value: RatFunc) {
        self.values.insert((index, mult), value);
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), &RatFunc)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }
}

impl DatumConfig {
    pub fn build(&self) -> Result<(Datum, NormOverrides), CartanError> {
        let mut raw = CartanDatum::new(self.indices.clone(), self.a.clone(), self.d.clone());
        if let Some(edges) = &self.orientation {
            raw = raw.with_orientation(edges.clone());
        }
        let datum = raw.validate()?;
        let mut overrides = NormOverrides::default();
        if let Some(norms) = &self.norms {
            for (key, value) in norms {
                let (index, mult) = parse_norm_key(&datum, key)?;
                overrides.insert(index, mult, value.clone());
            }
        }
        Ok((datum, overrides))
    }
}

fn parse_norm_key(datum: &Datum, key: &str) -> Result<(usize, u32), CartanError> {
    let (name, mult) = match key.rsplit_once(':') {
        Some((name, mult_str)) => {
            let mult: u32 = mult_str
                .parse()
                .map_err(|_| CartanError::Config(format!("norm key {key:?}: bad multiplicity")))?;
            (name, mult)
        }
        None => (key, 1),
    };
    if mult == 0 {
        return Err(CartanError::Config(format!("norm key {key:?}: multiplicity must be positive")));
    }
    let index = datum.index_of(name)?;
    Ok((index, mult))
}

pub fn parse_config(text: &str) -> Result<(Datum, NormOverrides), CartanError> {
    let config: DatumConfig =
        serde_json::from_str(text).map_err(|e| CartanError::Config(e.to_string()))?;
    config.build()
}

pub fn load_config(path: &Path) -> Result<(Datum, NormOverrides), CartanError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CartanError::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}
