use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::{Polynomial, Ring};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Affine linear form `a_1 x_1 + ... + a_l x_l + c` with a nonzero linear part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    linear: Vec<Rational>,
    constant: Rational,
}

impl AffineForm {
    pub fn new(linear: Vec<Rational>, constant: Rational) -> Result<AffineForm> {
        if linear.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArrangement(
                "affine form with zero linear part".into(),
            ));
        }
        Ok(AffineForm { linear, constant })
    }

    pub fn from_ints(linear: &[i64], constant: i64) -> Result<AffineForm> {
        AffineForm::new(
            linear
                .iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect(),
            Rational::from_integer(constant.into()),
        )
    }

    /// Reads a polynomial of degree exactly one.
    pub fn from_polynomial(p: &Polynomial) -> Result<AffineForm> {
        let l = p.ring().nvars();
        let mut linear = vec![Rational::zero(); l];
        let mut constant = Rational::zero();
        for (m, c) in p.terms() {
            match m.degree() {
                0 => constant = c.clone(),
                1 => {
                    let i = (0..l)
                        .find(|&i| m.exponent(i) == 1)
                        .expect("degree-one monomial");
                    linear[i] = c.clone();
                }
                _ => return Err(Error::Parse(format!("`{p}` is not an affine form"))),
            }
        }
        AffineForm::new(linear, constant)
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    pub fn linear(&self) -> &[Rational] {
        &self.linear
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.is_zero()
    }

    /// The row `(a_1, ..., a_l, c)`.
    pub fn row(&self) -> Vec<Rational> {
        let mut r = self.linear.clone();
        r.push(self.constant.clone());
        r
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.linear
            .iter()
            .zip(point)
            .fold(self.constant.clone(), |acc, (a, x)| acc + a * x)
    }

    /// Scaled so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> AffineForm {
        let lead = self
            .linear
            .iter()
            .find(|a| !a.is_zero())
            .expect("nonzero linear part");
        if lead.is_one() {
            return self.clone();
        }
        let inv = lead.recip();
        AffineForm {
            linear: self.linear.iter().map(|a| a * &inv).collect(),
            constant: &self.constant * &inv,
        }
    }

    /// Same hyperplane (forms differ by a nonzero scalar).
    pub fn is_proportional(&self, other: &AffineForm) -> bool {
        self.dim() == other.dim() && self.normalized() == other.normalized()
    }

    /// Homogenized with an extra trailing coordinate.
    pub fn homogenize(&self) -> AffineForm {
        let mut linear = self.linear.clone();
        linear.push(self.constant.clone());
        AffineForm {
            linear,
            constant: Rational::zero(),
        }
    }

    pub fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.nvars(), self.dim(), "ring arity");
        let l = self.dim();
        Polynomial::from_terms(
            ring,
            self.linear
                .iter()
                .enumerate()
                .map(|(i, a)| (Monomial::var(l, i), a.clone()))
                .chain(std::iter::once((Monomial::one(l), self.constant.clone()))),
        )
    }

    pub fn display(&self, ring: &Ring) -> String {
        self.to_polynomial(ring).to_compact_string()
    }
}
