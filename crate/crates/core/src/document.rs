//! The JSON document format: named objects and morphisms over one ring.
//!
//! ```json
//! {
//!   "ring": "rational",
//!   "objects": { "X": { "weights": ["1", "2"] } },
//!   "morphisms": { "f": { "dom": "X", "cod": "X", "matrix": [["1", "0"], ["0", "1/2"]] } },
//!   "results": { "classify_f": { "mono": true } }
//! }
//! ```
//!
//! `results` holds non-morphism outputs and is omitted when empty. Output is
//! pretty-printed with sorted keys and a trailing newline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::category::{WMorphism, WObject};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{RingId, StarField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub dom: String,
    pub cod: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub ring: RingId,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub results: BTreeMap<String, serde_json::Value>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl Document {
    pub fn new(ring: RingId) -> Self {
        Document { ring, objects: BTreeMap::new(), morphisms: BTreeMap::new(), results: BTreeMap::new() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(format!("invalid document: {e}")))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("documents serialize")
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("values serialize");
        s.push('\n');
        s
    }

    /// Checks every reference, shape and literal in the document.
    pub fn validate(&self) -> Result<()> {
        crate::dispatch_ring!(self.ring, D => {
            for name in self.objects.keys() {
                self.object::<D>(name)?;
            }
            for name in self.morphisms.keys() {
                self.morphism::<D>(name)?;
            }
            Ok(())
        })
    }

    /// Rewrites every literal in canonical form (`2/4` becomes `1/2`).
    pub fn canonicalize(&mut self) -> Result<()> {
        crate::dispatch_ring!(self.ring, D => {
            let canon = |lit: &mut String| -> Result<()> {
                *lit = D::parse_literal(lit)?.to_string();
                Ok(())
            };
            for spec in self.objects.values_mut() {
                spec.weights.iter_mut().try_for_each(canon)?;
            }
            for spec in self.morphisms.values_mut() {
                spec.matrix.iter_mut().flatten().try_for_each(canon)?;
            }
            Ok(())
        })
    }

    fn check_ring<D: StarField>(&self) -> Result<()> {
        if self.ring != D::RING {
            return Err(Error::RingMismatch { left: self.ring, right: D::RING });
        }
        Ok(())
    }

    pub fn object<D: StarField>(&self, name: &str) -> Result<WObject<D>> {
        self.check_ring::<D>()?;
        let spec = self.objects.get(name).ok_or_else(|| parse_err(format!("unknown object `{name}`")))?;
        let weights = spec
            .weights
            .iter()
            .map(|w| D::parse_literal(w))
            .collect::<Result<Vec<D>>>()
            .map_err(|e| parse_err(format!("object `{name}`: {e}")))?;
        WObject::new(weights).map_err(|e| parse_err(format!("object `{name}`: {e}")))
    }

    pub fn morphism<D: StarField>(&self, name: &str) -> Result<WMorphism<D>> {
        self.check_ring::<D>()?;
        let spec = self.morphisms.get(name).ok_or_else(|| parse_err(format!("unknown morphism `{name}`")))?;
        let dom = self.object::<D>(&spec.dom)?;
        let cod = self.object::<D>(&spec.cod)?;
        let rows = spec
            .matrix
            .iter()
            .map(|row| row.iter().map(|x| D::parse_literal(x)).collect::<Result<Vec<D>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_err(format!("morphism `{name}`: {e}")))?;
        let matrix = Matrix::from_rows(rows, dom.dim()).map_err(|e| parse_err(format!("morphism `{name}`: {e}")))?;
        WMorphism::new(dom, cod, matrix).map_err(|e| parse_err(format!("morphism `{name}`: {e}")))
    }

    /// Name of an object equal to `obj`, inserting it under `hint` (made
    /// unique with a numeric suffix) when none exists.
    pub fn ensure_object<D: StarField>(&mut self, hint: &str, obj: &WObject<D>) -> String {
        let spec = ObjectSpec { weights: obj.weights().iter().map(|w| w.to_string()).collect() };
        if let Some((name, _)) = self.objects.iter().find(|(_, s)| **s == spec) {
            return name.clone();
        }
        let name = self.fresh_name(hint, |d, n| d.objects.contains_key(n));
        self.objects.insert(name.clone(), spec);
        name
    }

    fn fresh_name(&self, hint: &str, taken: impl Fn(&Self, &str) -> bool) -> String {
        if !taken(self, hint) {
            return hint.to_string();
        }
        (2..).map(|k| format!("{hint}_{k}")).find(|n| !taken(self, n)).expect("names are unbounded")
    }

    /// Inserts `m` under `name` (replacing any previous entry), naming dom
    /// and cod objects after `name` if they are new.
    pub fn insert_morphism<D: StarField>(&mut self, name: &str, m: &WMorphism<D>) -> String {
        let dom = self.ensure_object(&format!("{name}_dom"), m.dom());
        let cod = self.ensure_object(&format!("{name}_cod"), m.cod());
        let matrix = m.matrix().to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        self.morphisms.insert(name.to_string(), MorphismSpec { dom, cod, matrix });
        name.to_string()
    }

    /// Like [`insert_morphism`](Self::insert_morphism) but never replaces.
    pub fn insert_fresh_morphism<D: StarField>(&mut self, hint: &str, m: &WMorphism<D>) -> String {
        let name = self.fresh_name(hint, |d, n| d.morphisms.contains_key(n));
        self.insert_morphism(&name, m)
    }

    pub fn insert_result(&mut self, name: &str, value: serde_json::Value) {
        self.results.insert(name.to_string(), value);
    }
}

/// Runs `$body` with `$D` bound to the scalar type of `$ring`.
#[macro_export]
macro_rules! dispatch_ring {
    ($ring:expr, $D:ident => $body:expr) => {
        match $ring {
            $crate::scalar::RingId::Rational => {
                type $D = $crate::scalar::Rational;
                $body
            }
            $crate::scalar::RingId::Gaussian => {
                type $D = $crate::scalar::Gaussian;
                $body
            }
            $crate::scalar::RingId::Quaternion => {
                type $D = $crate::scalar::Quaternion;
                $body
            }
            $crate::scalar::RingId::Ratfun => {
                type $D = $crate::scalar::RatFun;
                $body
            }
        }
    };
}
