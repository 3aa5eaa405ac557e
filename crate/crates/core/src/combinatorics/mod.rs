//! The intersection poset `L(A)` and the invariants read off from it.

mod finite_field;
mod poset;
mod tutte;

use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::algebra::{Monomial, Polynomial, Rational, Ring};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};

pub use finite_field::count_points_ff;
pub use poset::{flats, mobius, Flat, IntersectionPoset, MobiusTable};
pub use tutte::{
    subset_table, tutte_char_check, tutte_poly, tutte_ring, whitney_char_poly, SubsetTable,
};

/// The ring `Q[t]` that univariate invariants live in.
pub fn t_ring() -> Ring {
    Ring::new(["t"])
}

/// `sum_k coeffs[k] t^k` in [`t_ring`].
pub(crate) fn t_poly(coeffs: &[i64]) -> Polynomial {
    let r = t_ring();
    Polynomial::from_terms(
        &r,
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, &c)| {
                (
                    Monomial::from_exponents(&[k as u32]),
                    Rational::from_integer(c.into()),
                )
            }),
    )
}

fn coefficients(p: &Polynomial) -> Vec<i64> {
    let n = p.degree().map_or(0, |d| d as usize + 1);
    let mut out = vec![0i64; n];
    for (m, c) in p.terms() {
        out[m.exponent(0) as usize] = c.to_integer().to_i64().expect("small coefficient");
    }
    out
}

/// `rk(A)`: the largest rank of a flat.
pub fn rank(a: &Arrangement) -> usize {
    flats(a).rank()
}

/// `pi(A, t) = sum_X mu(X) (-t)^{rk X}`.
pub fn poincare_poly(a: &Arrangement) -> Polynomial {
    let p = flats(a);
    let mu = mobius(&p);
    let mut c = vec![0i64; p.rank() + 1];
    for (i, f) in p.flats().iter().enumerate() {
        let r = f.rank();
        c[r] += if r % 2 == 0 { mu.get(i) } else { -mu.get(i) };
    }
    t_poly(&c)
}

/// `chi(A, t) = sum_X mu(X) t^{dim X}`.
pub fn char_poly(a: &Arrangement) -> Polynomial {
    let p = flats(a);
    let mu = mobius(&p);
    let mut c = vec![0i64; a.dim() + 1];
    for (i, f) in p.flats().iter().enumerate() {
        c[f.dim()] += mu.get(i);
    }
    t_poly(&c)
}

/// `[b_0, ..., b_rk]` with `chi(A, t) = sum_i (-1)^i b_i t^{l-i}`.
pub fn betti_numbers(a: &Arrangement) -> Vec<u64> {
    let chi = coefficients(&char_poly(a));
    let l = a.dim();
    (0..=rank(a))
        .map(|i| chi.get(l - i).copied().unwrap_or(0).unsigned_abs())
        .collect()
}

fn abs_value_at(p: &Polynomial, t: i64) -> u64 {
    let v = p.eval(&[Rational::from_integer(t.into())]);
    v.abs()
        .to_integer()
        .to_u64()
        .expect("chamber count fits in u64")
}

/// `|chi(A, -1)|`, the number of chambers of the real complement.
pub fn num_chambers(a: &Arrangement) -> u64 {
    abs_value_at(&char_poly(a), -1)
}

/// `|chi(A, 1)|`, the number of bounded chambers.
pub fn num_bounded_chambers(a: &Arrangement) -> u64 {
    abs_value_at(&char_poly(a), 1)
}

/// `chi(A) = chi(A \ H) - chi(A^H)` for `H = H_index`.
pub fn deletion_restriction_check(a: &Arrangement, index: usize) -> Result<bool> {
    let d = char_poly(&a.deletion(index)?);
    let r = char_poly(&a.restriction(index)?);
    Ok(char_poly(a) == &d - &r)
}

/// A variable name not used by `a`: `w`, `w1`, `w2`, ...
pub fn fresh_variable(a: &Arrangement) -> String {
    std::iter::once("w".to_string())
        .chain((1..).map(|k| format!("w{k}")))
        .find(|v| a.ring().index_of(v).is_none())
        .expect("infinitely many candidates")
}

/// `pi(cA, t) = (1 + t) pi(A, t)`.
pub fn cone_poincare_check(a: &Arrangement) -> Result<bool> {
    let c = a.cone(&fresh_variable(a))?;
    Ok(poincare_poly(&c) == &t_poly(&[1, 1]) * &poincare_poly(a))
}

/// JSON export of `L(A)`: flats grouped by rank with 1-based supports and
/// Möbius values.
pub fn poset_to_json(a: &Arrangement, p: &IntersectionPoset, mu: &MobiusTable) -> Value {
    let levels: Vec<Value> = p
        .levels()
        .iter()
        .map(|level| {
            Value::Array(
                level
                    .iter()
                    .map(|&i| {
                        let f = &p.flats()[i];
                        json!({
                            "flat": f.display(a.ring()),
                            "dim": f.dim(),
                            "support": f.support().iter().map(|s| s + 1).collect::<Vec<_>>(),
                            "mobius": mu.get(i),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "vars": a.ring().names(), "levels": levels })
}

/// Checks `mu(V) = 1` and `sum_{Y <= X} mu(Y) = 0` for every `X > V`.
pub fn mobius_recursion_holds(p: &IntersectionPoset, mu: &MobiusTable) -> bool {
    (0..p.len()).all(|j| {
        let s: i64 = p.below(j).iter().map(|&i| mu.get(i)).sum::<i64>() + mu.get(j);
        if p.flats()[j].rank() == 0 {
            mu.get(j) == 1
        } else {
            s == 0
        }
    })
}

pub(crate) fn require_small(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::SizeGuard(format!(
            "{what} enumerates 2^{n} subsets; at most {limit} hyperplanes are allowed"
        )));
    }
    Ok(())
}
