//! JSON formats: state dumps and masker manifests.
//!
//! State dump:
//!
//! ```text
//! {"dims":[d1,...,dn], "amps":[{"idx":[i1,...,in], "re":x, "im":y}, ...]}
//! ```
//!
//! with 1-based digits and entries in lexicographic index order. A masker
//! manifest wraps one dump per image:
//!
//! ```text
//! {"scheme":..., "d":..., "parties":..., "local_dims":[...], "images":[<dump>, ...]}
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maskers::{Masker, Scheme};
use crate::state::{MultiIndex, SparseState};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmpEntry {
    pub idx: Vec<usize>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateDump {
    pub dims: Vec<usize>,
    pub amps: Vec<AmpEntry>,
}

impl StateDump {
    pub fn from_state(state: &SparseState) -> Self {
        Self {
            dims: state.dims().to_vec(),
            amps: state
                .iter()
                .map(|(idx, a)| AmpEntry {
                    idx: idx.digits().iter().map(|d| d + 1).collect(),
                    re: a.re,
                    im: a.im,
                })
                .collect(),
        }
    }

    pub fn to_state(&self) -> Result<SparseState> {
        let entries = self
            .amps
            .iter()
            .map(|e| {
                if e.idx.contains(&0) {
                    return Err(Error::DimensionMismatch(format!(
                        "dump digits are 1-based, found 0 in {:?}",
                        e.idx
                    )));
                }
                let digits = e.idx.iter().map(|d| d - 1).collect();
                Ok((MultiIndex::new(digits), Complex64::new(e.re, e.im)))
            })
            .collect::<Result<Vec<_>>>()?;
        SparseState::new(self.dims.clone(), entries)
    }
}

/// Compact single-line JSON dump of `state`.
pub fn dump_state(state: &SparseState) -> String {
    serde_json::to_string(&StateDump::from_state(state)).expect("dump serializes")
}

pub fn load_state(json: &str) -> Result<SparseState> {
    let dump: StateDump =
        serde_json::from_str(json).map_err(|e| Error::format(e.line(), e.to_string()))?;
    dump.to_state()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaskerManifest {
    pub scheme: String,
    pub d: usize,
    pub parties: usize,
    pub local_dims: Vec<usize>,
    pub images: Vec<StateDump>,
}

impl MaskerManifest {
    pub fn from_masker(m: &Masker) -> Self {
        Self {
            scheme: m.scheme().name().to_string(),
            d: m.input_dim(),
            parties: m.parties(),
            local_dims: m.local_dims().to_vec(),
            images: m.images().iter().map(StateDump::from_state).collect(),
        }
    }

    pub fn to_masker(&self) -> Result<Masker> {
        let scheme: Scheme = self.scheme.parse()?;
        let images = self
            .images
            .iter()
            .map(StateDump::to_state)
            .collect::<Result<Vec<_>>>()?;
        let m = Masker::from_images(scheme, self.local_dims.clone(), images)?;
        if m.input_dim() != self.d || m.parties() != self.parties {
            return Err(Error::DimensionMismatch(format!(
                "manifest declares d={} parties={}, images give d={} parties={}",
                self.d,
                self.parties,
                m.input_dim(),
                m.parties()
            )));
        }
        Ok(m)
    }
}

/// Pretty-printed manifest, one line per key.
pub fn dump_masker(m: &Masker) -> String {
    let mut s = serde_json::to_string_pretty(&MaskerManifest::from_masker(m)).expect("manifest serializes");
    s.push('\n');
    s
}

pub fn load_masker(json: &str) -> Result<Masker> {
    let manifest: MaskerManifest =
        serde_json::from_str(json).map_err(|e| Error::format(e.line(), e.to_string()))?;
    manifest.to_masker()
}
