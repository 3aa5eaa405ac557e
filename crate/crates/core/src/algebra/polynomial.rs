use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A polynomial ring `Q[v_1, ..., v_k]`, identified by its variable names.
/// Cloning is cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring(Arc<Vec<String>>);

impl Ring {
    pub fn new<I, S>(names: I) -> Ring
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ring(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// Ring with variables `prefix[1], ..., prefix[n]`.
    pub fn indexed(prefix: &str, n: usize) -> Ring {
        Ring::new((1..=n).map(|i| format!("{prefix}[{i}]")))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Rational::one())
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(&self, c: Rational, m: Monomial) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.term(Rational::one(), Monomial::var(self.nvars(), i))
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// strictly descending in degrevlex order with no zero coefficients, so equal
/// polynomials have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked arithmetic.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    a.ring.check_same(&b.ring)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Polynomial {
    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Polynomial {
            ring: ring.clone(),
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Trusts that `terms` is already canonical.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ring.nvars() {
            return Err(Error::IndexOutOfRange {
                what: "variable",
                index: var,
                valid: format!("0..{}", self.ring.nvars()),
            });
        }
        Ok(Polynomial::from_terms(
            &self.ring,
            self.terms.iter().filter_map(|(m, c)| {
                let e = m.exponent(var);
                m.lower(var)
                    .map(|lowered| (lowered, c * Rational::from_integer(e.into())))
            }),
        ))
    }

    /// Image under the ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Dimension(format!(
                "substitute: {} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            // zero-variable source ring: only constants
            return Err(Error::Dimension(
                "substitute: cannot infer target ring from zero images".into(),
            ));
        };
        for img in images {
            target.check_same(&img.ring)?;
        }
        let mut out = target.zero();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![target.one(), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, e) in m.exponents().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars(), "evaluation point arity");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exponents().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Moves the polynomial into another ring with the same number of variables.
    pub fn with_ring(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars(), "ring arity");
        Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. A single polynomial is a Groebner basis of its own ideal,
    /// so the division algorithm decides divisibility.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c / lc;
            rem = &rem - &divisor.mul_term(&qc, &qm);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    pub fn is_divisible_by(&self, divisor: &Polynomial) -> bool {
        self.div_exact(divisor).is_some()
    }

    /// Terms joined compactly: `x^2-2*x*y+1`.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            let body = if m.is_one() {
                a.to_string()
            } else if a.is_one() {
                m.fmt_with(self.ring.names())
            } else {
                format!("{}*{}", a, m.fmt_with(self.ring.names()))
            };
            match (k, neg, spaced) {
                (0, true, _) => out.push('-'),
                (0, false, _) => {}
                (_, true, true) => out.push_str(" -"),
                (_, false, true) => out.push_str(" +"),
                (_, true, false) => out.push('-'),
                (_, false, false) => out.push('+'),
            }
            out.push_str(&body);
        }
        out
    }
}

/// `{}` prints compactly (`x-y-1`); `{:#}` separates terms with spaces in
/// the style `9*t^2 +6*t +1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(f.alternate()))
    }
}

fn merge(
    a: &[(Monomial, Rational)],
    b: &[(Monomial, Rational)],
    negate_b: bool,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let conv = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.clone(), conv(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return self.ring.zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(c, m);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(c, m);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
