//! Arrangements of affine hyperplanes, multiarrangements, and the structural
//! operations on them. Hyperplane indices in this API are 1-based.

mod families;
mod json;

use std::fmt;

use num_traits::Zero;

use crate::algebra::{solve_affine, AffineForm, AffineSolution, Polynomial, Rational, Ring};
use crate::combinatorics::Flat;
use crate::error::{Error, Result};

pub use families::{default_var_names, make_family, Family};
pub use json::{arrangement_to_json, multi_to_json, parse_arrangement_json, ArrangementFile};

/// An ordered list of pairwise distinct (non-proportional) hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    ring: Ring,
    forms: Vec<AffineForm>,
}

impl Arrangement {
    pub fn new(ring: &Ring, forms: Vec<AffineForm>) -> Result<Arrangement> {
        for (i, f) in forms.iter().enumerate() {
            if f.dim() != ring.nvars() {
                return Err(Error::Dimension(format!(
                    "hyperplane {} has {} coefficients, ring has {} variables",
                    i + 1,
                    f.dim(),
                    ring.nvars()
                )));
            }
        }
        let normalized: Vec<AffineForm> = forms.iter().map(AffineForm::normalized).collect();
        for j in 0..normalized.len() {
            if let Some(i) = (0..j).find(|&i| normalized[i] == normalized[j]) {
                return Err(Error::DuplicateHyperplane {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
        Ok(Arrangement {
            ring: ring.clone(),
            forms,
        })
    }

    /// Reads each polynomial as an affine form.
    pub fn from_polynomials(ring: &Ring, polys: &[Polynomial]) -> Result<Arrangement> {
        let forms = polys
            .iter()
            .enumerate()
            .map(|(i, p)| {
                ring.check_same(p.ring())?;
                AffineForm::from_polynomial(p).map_err(|_| {
                    if p.is_constant() {
                        Error::ZeroForm(i + 1)
                    } else {
                        Error::InvalidArrangement(format!(
                            "hyperplane {} (`{p}`) is not of degree one",
                            i + 1
                        ))
                    }
                })
            })
            .collect::<Result<_>>()?;
        Arrangement::new(ring, forms)
    }

    pub fn empty(ring: &Ring) -> Arrangement {
        Arrangement {
            ring: ring.clone(),
            forms: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Ambient dimension `l`.
    pub fn dim(&self) -> usize {
        self.ring.nvars()
    }

    /// Number of hyperplanes `n`.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn form_polynomials(&self) -> Vec<Polynomial> {
        self.forms
            .iter()
            .map(|f| f.to_polynomial(&self.ring))
            .collect()
    }

    pub fn check_index(&self, index: usize) -> Result<usize> {
        if index == 0 || index > self.len() {
            return Err(Error::IndexOutOfRange {
                what: "hyperplane",
                index,
                valid: format!("1..={}", self.len()),
            });
        }
        Ok(index - 1)
    }

    /// `Q(A)`, the product of the defining forms.
    pub fn defining_poly(&self) -> Polynomial {
        self.form_polynomials()
            .iter()
            .fold(self.ring.one(), |acc, f| &acc * f)
    }

    pub fn is_central(&self) -> bool {
        self.forms.iter().all(AffineForm::is_homogeneous)
    }

    /// The central arrangement in one more variable: every form homogenized
    /// with `new_var`, followed by the hyperplane `new_var = 0`.
    pub fn cone(&self, new_var: &str) -> Result<Arrangement> {
        if self.ring.index_of(new_var).is_some() {
            return Err(Error::VariableClash(new_var.to_string()));
        }
        let ring = Ring::new(
            self.ring
                .names()
                .iter()
                .cloned()
                .chain([new_var.to_string()]),
        );
        let l = self.dim();
        let mut forms: Vec<AffineForm> = self.forms.iter().map(AffineForm::homogenize).collect();
        let mut last = vec![Rational::zero(); l + 1];
        last[l] = Rational::from_integer(1.into());
        forms.push(AffineForm::new(last, Rational::zero())?);
        Arrangement::new(&ring, forms)
    }

    /// Removes hyperplane `index`.
    pub fn deletion(&self, index: usize) -> Result<Arrangement> {
        let i = self.check_index(index)?;
        let mut forms = self.forms.clone();
        forms.remove(i);
        Ok(Arrangement {
            ring: self.ring.clone(),
            forms,
        })
    }

    /// The arrangement `A^H` induced on `H = H_index`, in coordinates
    /// `y[1], ..., y[l-1]` bound to the free variables of `H` in ascending order.
    pub fn restriction(&self, index: usize) -> Result<Arrangement> {
        Ok(self.restriction_with_origins(index)?.0)
    }

    /// Restriction plus, for each restricted hyperplane, the (0-based)
    /// indices of the original hyperplanes that cut it out.
    pub(crate) fn restriction_with_origins(
        &self,
        index: usize,
    ) -> Result<(Arrangement, Vec<Vec<usize>>)> {
        let h = self.check_index(index)?;
        let l = self.dim();
        let AffineSolution::Point { point, basis, .. } = solve_affine(l, &self.forms[h..=h])?
        else {
            unreachable!("a single hyperplane is never empty");
        };
        let ring = Ring::indexed("y", l - 1);
        let mut forms: Vec<AffineForm> = Vec::new();
        let mut origins: Vec<Vec<usize>> = Vec::new();
        for (i, f) in self.forms.iter().enumerate() {
            if i == h {
                continue;
            }
            let linear: Vec<Rational> = basis
                .iter()
                .map(|b| f.linear().iter().zip(b).map(|(a, x)| a * x).sum())
                .collect();
            if linear.iter().all(Zero::is_zero) {
                // parallel to H (a proportional form was rejected at construction)
                continue;
            }
            let g = AffineForm::new(linear, f.eval(&point))?.normalized();
            match forms.iter().position(|e| *e == g) {
                Some(k) => origins[k].push(i),
                None => {
                    forms.push(g);
                    origins.push(vec![i]);
                }
            }
        }
        Ok((Arrangement { ring, forms }, origins))
    }

    /// `A_X`: the hyperplanes containing the flat, in their original order.
    pub fn localization(&self, flat: &Flat) -> Result<Arrangement> {
        let fresh = Flat::from_support(self, flat.support())
            .ok_or_else(|| Error::FlatNotInLattice("empty intersection".into()))?;
        if fresh != *flat {
            return Err(Error::FlatNotInLattice(flat.display(&self.ring)));
        }
        Ok(Arrangement {
            ring: self.ring.clone(),
            forms: flat
                .support()
                .iter()
                .map(|&i| self.forms[i].clone())
                .collect(),
        })
    }

    /// Ziegler's multirestriction onto `H_index`: each restricted hyperplane
    /// `X` carries the number of other hyperplanes of `A` containing `X`.
    pub fn ziegler_multirestriction(&self, index: usize) -> Result<MultiArrangement> {
        if !self.is_central() {
            return Err(Error::NonCentral);
        }
        let (base, origins) = self.restriction_with_origins(index)?;
        let mult = origins.iter().map(|o| o.len() as u32).collect();
        MultiArrangement::new(base, mult)
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.forms.iter().map(|h| h.display(&self.ring)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// An arrangement with a non-negative multiplicity on each hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiArrangement {
    base: Arrangement,
    mult: Vec<u32>,
}

impl MultiArrangement {
    pub fn new(base: Arrangement, mult: Vec<u32>) -> Result<MultiArrangement> {
        if mult.len() != base.len() {
            return Err(Error::Dimension(format!(
                "{} multiplicities for {} hyperplanes",
                mult.len(),
                base.len()
            )));
        }
        Ok(MultiArrangement { base, mult })
    }

    /// Constant multiplicity one.
    pub fn simple(base: Arrangement) -> MultiArrangement {
        let mult = vec![1; base.len()];
        MultiArrangement { base, mult }
    }

    pub fn base(&self) -> &Arrangement {
        &self.base
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// `Q(A, m)`.
    pub fn defining_poly(&self) -> Polynomial {
        self.base
            .form_polynomials()
            .iter()
            .zip(&self.mult)
            .fold(self.base.ring.one(), |acc, (f, &m)| &acc * &f.pow(m))
    }

    /// `|m|`.
    pub fn total(&self) -> u32 {
        self.mult.iter().sum()
    }
}

impl fmt::Display for MultiArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .base
            .forms
            .iter()
            .zip(&self.mult)
            .map(|(h, m)| format!("[{}, {}]", h.display(&self.base.ring), m))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
