//! Exact computations with hyperplane arrangements over the rationals:
//! intersection lattices and their polynomials, logarithmic derivation
//! modules and freeness, Orlik-Terao and Solomon-Terao ideals, and
//! multiarrangements.

pub mod algebra;
pub mod arrangement;
pub mod combinatorics;
pub mod error;
pub mod exec;
pub mod freeness;
pub mod groebner;
pub mod ideals;

pub use error::{Error, Result};
