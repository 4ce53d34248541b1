//! JSON problem documents.
//!
//! ```json
//! {"ring": {"vars": ["X","Y","Z"], "weights": [1,1,1]},
//!  "module": {"num": ["1"], "den": ["X^3","X*Y^4"], "shift": 0},
//!  "ideals": {"I": ["X","Y^2","Z^3"]},
//!  "family": {"kind": "In_mod_In1N", "I": "I", "a": "1", "n_max": 10},
//!  "options": {"window": 3}}
//! ```
//!
//! Ideal names `"1"` and `"0"` always mean the unit and the zero ideal.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::kernel::{parse_monomial, GradedRing, MonomialIdeal};
use crate::lab::{FamilyKind, FamilySpec};
use crate::quotient::Subquotient;

/// A problem with the input text, located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
}

fn unit_num() -> Vec<String> {
    vec!["1".into()]
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    #[serde(default = "unit_num")]
    num: Vec<String>,
    #[serde(default)]
    den: Vec<String>,
    #[serde(default)]
    shift: i64,
}

fn unit_name() -> String {
    "1".into()
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    kind: String,
    #[serde(rename = "I")]
    i: String,
    #[serde(default = "unit_name")]
    a: String,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    n_max: u32,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    ring: RawRing,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    module: Option<RawModule>,
    #[serde(default)]
    ideals: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<RawFamily>,
    #[serde(default)]
    options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRef {
    pub kind: FamilyKind,
    pub i: String,
    pub a: String,
    pub j: Option<String>,
    pub n_max: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemDocument {
    pub ring: Arc<GradedRing>,
    pub module: Subquotient,
    pub ideals: BTreeMap<String, MonomialIdeal>,
    pub family: Option<FamilyRef>,
    pub options: Options,
}

/// Finds the first occurrence of the JSON string literal `needle` and returns
/// the 1-based position of its first character inside the quotes.
fn locate(text: &str, needle: &str) -> (usize, usize) {
    let quoted = serde_json::to_string(needle).unwrap_or_else(|_| format!("\"{needle}\""));
    match text.find(&quoted) {
        Some(offset) => position_of(text, offset + 1),
        None => (1, 1),
    }
}

fn position_of(text: &str, byte_offset: usize) -> (usize, usize) {
    let before = &text[..byte_offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let column = before[line_start..].chars().count() + 1;
    (line, column)
}

fn error_at(text: &str, needle: &str, extra_col: usize, message: impl Into<String>) -> ParseError {
    let (line, column) = locate(text, needle);
    ParseError {
        line,
        column: column + extra_col,
        message: message.into(),
    }
}

fn parse_ideal(text: &str, ring: &Arc<GradedRing>, gens: &[String]) -> Result<MonomialIdeal, ParseError> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let m = parse_monomial(ring, g).map_err(|e| {
            error_at(text, g, e.column.saturating_sub(1), format!("in monomial {g:?}: {}", e.message))
        })?;
        out.push(m);
    }
    Ok(MonomialIdeal::minimalize(ring.clone(), out))
}

/// Parses and validates a problem document.
pub fn parse_input(text: &str) -> Result<ProblemDocument, ParseError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line().max(1),
        column: e.column().max(1),
        message: e.to_string(),
    })?;

    let weights = match &raw.ring.weights {
        None => vec![1u32; raw.ring.vars.len()],
        Some(ws) => {
            if ws.len() != raw.ring.vars.len() {
                return Err(error_at(text, "weights", 0, "weights and vars differ in length"));
            }
            let mut out = Vec::with_capacity(ws.len());
            for &w in ws {
                if w < 1 {
                    return Err(error_at(text, "weights", 0, format!("non-positive weight {w}")));
                }
                out.push(u32::try_from(w).map_err(|_| error_at(text, "weights", 0, "weight too large"))?);
            }
            out
        }
    };
    let ring = GradedRing::new(raw.ring.vars.clone(), weights)
        .map_err(|e| error_at(text, "vars", 0, e.to_string()))?;

    let mut ideals = BTreeMap::new();
    for (name, gens) in &raw.ideals {
        if name == "0" || name == "1" {
            return Err(error_at(text, name, 0, format!("ideal name {name:?} is reserved")));
        }
        ideals.insert(name.clone(), parse_ideal(text, &ring, gens)?);
    }

    let module = match &raw.module {
        None => Subquotient::cyclic(MonomialIdeal::zero(ring.clone())),
        Some(m) => {
            let num = parse_ideal(text, &ring, &m.num)?;
            let den = parse_ideal(text, &ring, &m.den)?;
            Subquotient::new(num, den, m.shift)
                .map_err(|e| error_at(text, "module", 0, e.to_string()))?
        }
    };

    let family = match &raw.family {
        None => None,
        Some(f) => {
            let kind: FamilyKind = f
                .kind
                .parse()
                .map_err(|e: String| error_at(text, &f.kind, 0, e))?;
            for name in [Some(&f.i), Some(&f.a), f.j.as_ref()].into_iter().flatten() {
                if name != "0" && name != "1" && !ideals.contains_key(name) {
                    return Err(error_at(text, name, 0, format!("unknown ideal name {name:?}")));
                }
            }
            Some(FamilyRef {
                kind,
                i: f.i.clone(),
                a: f.a.clone(),
                j: f.j.clone(),
                n_max: f.n_max,
            })
        }
    };

    Ok(ProblemDocument {
        ring,
        module,
        ideals,
        family,
        options: raw.options,
    })
}

impl ProblemDocument {
    /// Looks up a named ideal; `"1"` and `"0"` are built in.
    pub fn ideal(&self, name: &str) -> Option<MonomialIdeal> {
        match name {
            "1" => Some(MonomialIdeal::unit(self.ring.clone())),
            "0" => Some(MonomialIdeal::zero(self.ring.clone())),
            _ => self.ideals.get(name).cloned(),
        }
    }

    /// The family over the document's module, with `n_max` optionally overridden.
    pub fn family_spec(&self, n_max: Option<u32>) -> crate::Result<FamilySpec> {
        let f = self
            .family
            .as_ref()
            .ok_or_else(|| Error::InvalidFamily("document has no family section".into()))?;
        let get = |name: &str| {
            self.ideal(name)
                .ok_or_else(|| Error::InvalidFamily(format!("unknown ideal {name:?}")))
        };
        FamilySpec::new(
            self.module.num().clone(),
            self.module.den().clone(),
            get(&f.i)?,
            f.j.as_deref().map(get).transpose()?,
            get(&f.a)?,
            f.kind,
            n_max.unwrap_or(f.n_max),
        )
    }

    fn to_raw(&self) -> RawDocument {
        let gens = |i: &MonomialIdeal| -> Vec<String> { i.gens().iter().map(|g| self.ring.format(g)).collect() };
        RawDocument {
            ring: RawRing {
                vars: self.ring.names().to_vec(),
                weights: Some(self.ring.weights().iter().map(|&w| w as i64).collect()),
            },
            module: Some(RawModule {
                num: gens(self.module.num()),
                den: gens(self.module.den()),
                shift: self.module.shift(),
            }),
            ideals: self.ideals.iter().map(|(k, v)| (k.clone(), gens(v))).collect(),
            family: self.family.as_ref().map(|f| RawFamily {
                kind: f.kind.as_str().into(),
                i: f.i.clone(),
                a: f.a.clone(),
                j: f.j.clone(),
                n_max: f.n_max,
            }),
            options: self.options.clone(),
        }
    }

    /// Canonical JSON: explicit weights, minimal generators in canonical
    /// order, sorted ideal names.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("document serializes")
    }

    /// Canonical form with the fields that do not affect a family series
    /// (`n_max`, options) dropped; used as the cache key.
    pub fn series_key_json(&self) -> String {
        let mut value = serde_json::to_value(self.to_raw()).expect("document serializes");
        if let Some(obj) = value.as_object_mut() {
            obj.remove("options");
            if let Some(f) = obj.get_mut("family").and_then(|f| f.as_object_mut()) {
                f.remove("n_max");
            }
        }
        serde_json::to_string(&value).expect("value serializes")
    }
}
