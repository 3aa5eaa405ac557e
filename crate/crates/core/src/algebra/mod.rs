//! Exact arithmetic over the rationals: big rationals, sparse multivariate
//! polynomials under degree-reverse-lexicographic order, affine forms, and
//! linear algebra over both `Q` and polynomial rings.

mod affine;
mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod rational;

pub use affine::AffineForm;
pub use matrix::{solve_affine, AffineSolution, PolyMatrix, QMatrix, Rref};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::{poly_arith, ArithOp, Polynomial, Ring};
pub use rational::{parse_rational, rat, Rational};
