//! The arrangement file format:
//!
//! ```json
//! {"vars": ["x", "y"],
//!  "hyperplanes": [{"coeffs": ["1", "-1"], "const": "0"}],
//!  "mult": [3]}
//! ```
//!
//! Rationals are strings `"p"` or `"p/q"`; `mult` is optional.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Arrangement, MultiArrangement};
use crate::algebra::{parse_rational, AffineForm, Ring};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    vars: Vec<String>,
    hyperplanes: Vec<HyperplaneRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HyperplaneRepr {
    coeffs: Vec<String>,
    #[serde(rename = "const", default = "zero_string")]
    constant: String,
}

fn zero_string() -> String {
    "0".to_string()
}

/// Contents of an arrangement file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangementFile {
    Simple(Arrangement),
    Multi(MultiArrangement),
}

impl ArrangementFile {
    pub fn arrangement(&self) -> &Arrangement {
        match self {
            ArrangementFile::Simple(a) => a,
            ArrangementFile::Multi(m) => m.base(),
        }
    }

    /// Multiplicities default to one.
    pub fn into_multi(self) -> MultiArrangement {
        match self {
            ArrangementFile::Simple(a) => MultiArrangement::simple(a),
            ArrangementFile::Multi(m) => m,
        }
    }
}

fn repr(a: &Arrangement) -> FileRepr {
    FileRepr {
        vars: a.ring().names().to_vec(),
        hyperplanes: a
            .forms()
            .iter()
            .map(|f| HyperplaneRepr {
                coeffs: f.linear().iter().map(ToString::to_string).collect(),
                constant: f.constant().to_string(),
            })
            .collect(),
        mult: None,
    }
}

pub fn arrangement_to_json(a: &Arrangement) -> Value {
    serde_json::to_value(repr(a)).expect("serializable")
}

pub fn multi_to_json(m: &MultiArrangement) -> Value {
    let mut r = repr(m.base());
    r.mult = Some(m.mult().to_vec());
    serde_json::to_value(r).expect("serializable")
}

/// Parses and validates an arrangement file. Errors carry a JSON-pointer
/// location such as `/hyperplanes/2/coeffs/0`.
pub fn parse_arrangement_json(text: &str) -> Result<ArrangementFile> {
    let file: FileRepr = serde_json::from_str(text).map_err(|e| Error::Parse(format!("/: {e}")))?;
    let l = file.vars.len();
    for (i, v) in file.vars.iter().enumerate() {
        if v.is_empty() || file.vars[..i].contains(v) {
            return Err(Error::Parse(format!(
                "/vars/{i}: empty or repeated variable `{v}`"
            )));
        }
    }
    let ring = Ring::new(file.vars.iter().cloned());
    let mut forms = Vec::with_capacity(file.hyperplanes.len());
    for (i, h) in file.hyperplanes.iter().enumerate() {
        if h.coeffs.len() != l {
            return Err(Error::Parse(format!(
                "/hyperplanes/{i}/coeffs: expected {l} coefficients, found {}",
                h.coeffs.len()
            )));
        }
        let linear = h
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                parse_rational(c)
                    .map_err(|e| Error::Parse(format!("/hyperplanes/{i}/coeffs/{j}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let constant = parse_rational(&h.constant)
            .map_err(|e| Error::Parse(format!("/hyperplanes/{i}/const: {e}")))?;
        let form = AffineForm::new(linear, constant).map_err(|_| {
            Error::Parse(format!(
                "/hyperplanes/{i}: zero linear part (hyperplane {})",
                i + 1
            ))
        })?;
        forms.push(form);
    }
    let arrangement = Arrangement::new(&ring, forms).map_err(|e| match e {
        Error::DuplicateHyperplane { first, second } => Error::Parse(format!(
            "/hyperplanes/{}: proportional to /hyperplanes/{} (hyperplanes {first} and {second})",
            second - 1,
            first - 1
        )),
        other => other,
    })?;
    match file.mult {
        None => Ok(ArrangementFile::Simple(arrangement)),
        Some(m) => {
            if m.len() != arrangement.len() {
                return Err(Error::Parse(format!(
                    "/mult: {} multiplicities for {} hyperplanes",
                    m.len(),
                    arrangement.len()
                )));
            }
            Ok(ArrangementFile::Multi(MultiArrangement::new(
                arrangement,
                m,
            )?))
        }
    }
}
