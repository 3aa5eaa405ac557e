use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{parse_polynomial, PolyMatrix, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::ModuleElement;

/// Homogeneous derivations `sum_i f_i d/dx_i`, stored as coefficient
/// vectors `(f_1, ..., f_l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSet {
    ring: Ring,
    derivations: Vec<ModuleElement>,
    pdegs: Vec<u32>,
}

impl DerivationSet {
    /// Each derivation must have one coefficient per variable, all of a
    /// common degree. The zero derivation is given `pdeg` 0.
    pub fn new(ring: &Ring, derivations: Vec<ModuleElement>) -> Result<DerivationSet> {
        let mut pdegs = Vec::with_capacity(derivations.len());
        for (k, d) in derivations.iter().enumerate() {
            ring.check_same(d.ring())?;
            if d.rank() != ring.nvars() {
                return Err(Error::Dimension(format!(
                    "derivation {} has {} coefficients in a ring of {} variables",
                    k + 1,
                    d.rank(),
                    ring.nvars()
                )));
            }
            let p = if d.is_zero() {
                0
            } else {
                d.degree()
                    .ok_or_else(|| Error::NotHomogeneous(format!("derivation {}", k + 1)))?
            };
            pdegs.push(p);
        }
        Ok(DerivationSet {
            ring: ring.clone(),
            derivations,
            pdegs,
        })
    }

    /// Builds a set from coefficient vectors written as polynomial strings.
    pub fn parse(ring: &Ring, coefficients: &[Vec<String>]) -> Result<DerivationSet> {
        let derivations = coefficients
            .iter()
            .map(|c| {
                let polys = c
                    .iter()
                    .map(|s| parse_polynomial(ring, s))
                    .collect::<Result<_>>()?;
                ModuleElement::new(ring, polys)
            })
            .collect::<Result<_>>()?;
        DerivationSet::new(ring, derivations)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.derivations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.derivations.is_empty()
    }

    pub fn derivations(&self) -> &[ModuleElement] {
        &self.derivations
    }

    pub fn pdegs(&self) -> &[u32] {
        &self.pdegs
    }

    /// Coefficient matrix with entry `(i, j) = delta_j(x_i)`: column `j` is
    /// derivation `j`.
    pub fn matrix(&self) -> Result<PolyMatrix> {
        let cols: Vec<Vec<Polynomial>> = self
            .derivations
            .iter()
            .map(|d| d.components().to_vec())
            .collect();
        if cols.is_empty() {
            return PolyMatrix::from_rows(&self.ring, vec![Vec::new(); self.ring.nvars()]);
        }
        PolyMatrix::from_columns(&self.ring, &cols)
    }

    /// The matrix in the `matrix([[..], ..])` row notation.
    pub fn matrix_string(&self) -> String {
        let l = self.ring.nvars();
        let rows: Vec<String> = (0..l)
            .map(|i| {
                let entries: Vec<String> = self
                    .derivations
                    .iter()
                    .map(|d| d.components()[i].to_string())
                    .collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        format!("matrix([{}])", rows.join(",\n        "))
    }

    pub fn to_json(&self) -> Value {
        let repr = Repr {
            vars: self.ring.names().to_vec(),
            derivations: self
                .derivations
                .iter()
                .map(|d| d.components().iter().map(Polynomial::to_string).collect())
                .collect(),
            pdegs: Some(self.pdegs.clone()),
        };
        serde_json::to_value(repr).expect("serializable")
    }

    /// Reads the format written by [`DerivationSet::to_json`]. A `pdegs`
    /// list, if present, must agree with the derivations.
    pub fn from_json(text: &str) -> Result<DerivationSet> {
        let repr: Repr = serde_json::from_str(text).map_err(|e| Error::Parse(format!("/: {e}")))?;
        let ring = Ring::new(repr.vars.iter().cloned());
        let set = DerivationSet::parse(&ring, &repr.derivations).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("/derivations: {m}")),
            other => other,
        })?;
        if let Some(p) = repr.pdegs {
            if p != set.pdegs {
                return Err(Error::Parse(format!(
                    "/pdegs: listed {p:?}, computed {:?}",
                    set.pdegs
                )));
            }
        }
        Ok(set)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Repr {
    vars: Vec<String>,
    derivations: Vec<Vec<String>>,
    #[serde(default)]
    pdegs: Option<Vec<u32>>,
}

/// `delta(p) = sum_i f_i dp/dx_i`.
pub fn apply_derivation(delta: &ModuleElement, p: &Polynomial) -> Result<Polynomial> {
    p.ring().check_same(delta.ring())?;
    if delta.rank() != p.ring().nvars() {
        return Err(Error::Dimension(format!(
            "derivation of rank {} applied in a ring of {} variables",
            delta.rank(),
            p.ring().nvars()
        )));
    }
    let mut out = p.ring().zero();
    for (i, f) in delta.components().iter().enumerate() {
        if !f.is_zero() {
            out = &out + &(f * &p.partial_derivative(i)?);
        }
    }
    Ok(out)
}
