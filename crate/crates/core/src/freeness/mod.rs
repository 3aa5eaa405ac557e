//! Logarithmic derivation modules `D(A)` and `D(A, m)`, freeness and
//! exponents, Saito's criterion, and the Ziegler and Yoshinaga checks.

mod chordal;
mod derivations;

use crate::algebra::{Polynomial, Rational};
use crate::arrangement::{Arrangement, MultiArrangement};
use crate::combinatorics::flats;
use crate::error::{Error, Result};
use crate::exec::{map_vec, Execution};
use crate::groebner::{
    minimal_generators_with, syzygies_with, GbConfig, ModuleElement, SubmoduleGens,
};

pub use chordal::graph_is_chordal;
pub use derivations::{apply_derivation, DerivationSet};

fn require_central(a: &Arrangement) -> Result<()> {
    if a.is_central() {
        Ok(())
    } else {
        Err(Error::NonCentral)
    }
}

/// Minimal homogeneous generators of `D(A, m)`, sorted by `pdeg`.
///
/// With `alpha_i = sum_j a_ij x_j`, a tuple `(f_1, ..., f_l, g_1, ...)` is a
/// syzygy of the columns `(a_1j, ..., a_kj)` and `alpha_i^{m_i} e_i` iff
/// `delta = sum_j f_j d/dx_j` satisfies `delta(alpha_i) = -g_i alpha_i^{m_i}`.
/// Hyperplanes with `m_i = 0` contribute no row.
fn log_derivations(a: &Arrangement, mult: &[u32], config: &GbConfig) -> Result<DerivationSet> {
    require_central(a)?;
    let ring = a.ring();
    let l = a.dim();
    let rows: Vec<usize> = (0..a.len()).filter(|&i| mult[i] > 0).collect();
    let k = rows.len();
    let polys = a.form_polynomials();
    let mut gens = Vec::with_capacity(l + k);
    for j in 0..l {
        let col = rows
            .iter()
            .map(|&i| ring.constant(a.forms()[i].linear()[j].clone()))
            .collect();
        gens.push(ModuleElement::new(ring, col)?);
    }
    for (r, &i) in rows.iter().enumerate() {
        let mut col = vec![ring.zero(); k];
        col[r] = polys[i].pow(mult[i]);
        gens.push(ModuleElement::new(ring, col)?);
    }
    let syz = syzygies_with(&SubmoduleGens::new(ring, k, gens)?, &vec![0; k], config)?;
    let projected = syz
        .gens()
        .iter()
        .map(|s| ModuleElement::new(ring, s.components()[..l].to_vec()))
        .collect::<Result<_>>()?;
    let minimal = minimal_generators_with(&SubmoduleGens::new(ring, l, projected)?, config)?;
    DerivationSet::new(ring, minimal.gens().to_vec())
}

/// `D(A)` for a central arrangement.
pub fn der_module(a: &Arrangement) -> Result<DerivationSet> {
    der_module_with(a, &GbConfig::default())
}

pub fn der_module_with(a: &Arrangement, config: &GbConfig) -> Result<DerivationSet> {
    log_derivations(a, &vec![1; a.len()], config)
}

/// `D(A, m)` for a multiarrangement on a central arrangement.
pub fn multi_der_module(ma: &MultiArrangement) -> Result<DerivationSet> {
    log_derivations(ma.base(), ma.mult(), &GbConfig::default())
}

/// The nonzero scalar `c` with `det = c * q`, if there is one.
fn saito_constant(set: &DerivationSet, q: &Polynomial) -> Result<Option<Rational>> {
    let det = set.matrix()?.det()?;
    if det.is_zero() {
        return Ok(None);
    }
    Ok(det.div_exact(q).and_then(|c| c.constant_value()))
}

/// A free module's minimal generators must pass Saito's criterion; anything
/// else is a bug in the pipeline, reported rather than returned as `false`.
fn assert_saito(set: &DerivationSet, q: &Polynomial, total: u32) -> Result<()> {
    let sum: u32 = set.pdegs().iter().sum();
    if sum != total {
        return Err(Error::Inconsistent(format!(
            "exponents sum to {sum}, expected {total}"
        )));
    }
    if saito_constant(set, q)?.is_none() {
        return Err(Error::Inconsistent(
            "determinant of a basis is not a nonzero multiple of Q".into(),
        ));
    }
    Ok(())
}

fn sorted(set: &DerivationSet) -> Vec<u32> {
    let mut e = set.pdegs().to_vec();
    e.sort_unstable();
    e
}

/// Whether `D(A)` is free, i.e. has exactly `l` minimal generators.
pub fn is_free(a: &Arrangement) -> Result<bool> {
    let d = der_module(a)?;
    let free = d.len() == a.dim();
    if free {
        assert_saito(&d, &a.defining_poly(), a.len() as u32)?;
    }
    Ok(free)
}

/// Sorted exponents of a free central arrangement.
pub fn exponents(a: &Arrangement) -> Result<Vec<u32>> {
    let d = der_module(a)?;
    if d.len() != a.dim() {
        return Err(Error::NotFree);
    }
    assert_saito(&d, &a.defining_poly(), a.len() as u32)?;
    Ok(sorted(&d))
}

pub fn is_multi_free(ma: &MultiArrangement) -> Result<bool> {
    let d = multi_der_module(ma)?;
    let free = d.len() == ma.base().dim();
    if free {
        assert_saito(&d, &ma.defining_poly(), ma.total())?;
    }
    Ok(free)
}

pub fn multi_exponents(ma: &MultiArrangement) -> Result<Vec<u32>> {
    let d = multi_der_module(ma)?;
    if d.len() != ma.base().dim() {
        return Err(Error::NotFree);
    }
    assert_saito(&d, &ma.defining_poly(), ma.total())?;
    Ok(sorted(&d))
}

fn check_candidate(a: &Arrangement, mult: &[u32], candidate: &DerivationSet) -> Result<()> {
    a.ring().check_same(candidate.ring())?;
    if candidate.len() != a.dim() {
        return Err(Error::Dimension(format!(
            "Saito's criterion needs {} derivations, got {}",
            a.dim(),
            candidate.len()
        )));
    }
    let polys = a.form_polynomials();
    for (k, d) in candidate.derivations().iter().enumerate() {
        for (i, alpha) in polys.iter().enumerate() {
            if mult[i] == 0 {
                continue;
            }
            if !apply_derivation(d, alpha)?.is_divisible_by(&alpha.pow(mult[i])) {
                return Err(Error::NotLogarithmic {
                    derivation: k + 1,
                    hyperplane: i + 1,
                });
            }
        }
    }
    Ok(())
}

/// Saito's criterion: `l` logarithmic derivations form a basis of `D(A)` iff
/// the determinant of their coefficient matrix is `c Q(A)` with `c != 0`.
pub fn saito_check(a: &Arrangement, candidate: &DerivationSet) -> Result<bool> {
    check_candidate(a, &vec![1; a.len()], candidate)?;
    Ok(saito_constant(candidate, &a.defining_poly())?.is_some())
}

/// Generalized Saito criterion with `Q(A, m)`.
pub fn multi_saito_check(ma: &MultiArrangement, candidate: &DerivationSet) -> Result<bool> {
    check_candidate(ma.base(), ma.mult(), candidate)?;
    Ok(saito_constant(candidate, &ma.defining_poly())?.is_some())
}

/// Ziegler's theorem at `H_index`: if `A` is free with exponents
/// `(1, e_2, ..., e_l)`, the multirestriction is free with exponents
/// `(e_2, ..., e_l)`. Unmet hypotheses are errors.
pub fn ziegler_theorem_check_at(a: &Arrangement, index: usize) -> Result<bool> {
    require_central(a)?;
    a.check_index(index)?;
    let e = match exponents(a) {
        Err(Error::NotFree) => return Err(Error::Hypotheses("arrangement is not free".into())),
        other => other?,
    };
    if e.first() != Some(&1) {
        return Err(Error::Hypotheses(format!(
            "exponents {e:?} do not start with 1"
        )));
    }
    let predicted = e[1..].to_vec();
    let z = a.ziegler_multirestriction(index)?;
    match multi_exponents(&z) {
        Ok(found) => Ok(found == predicted),
        Err(Error::NotFree) => Ok(false),
        Err(other) => Err(other),
    }
}

/// [`ziegler_theorem_check_at`] for the first hyperplane.
pub fn ziegler_theorem_check(a: &Arrangement) -> Result<bool> {
    ziegler_theorem_check_at(a, 1)
}

/// Whether `A_X` is free for every flat `X` of rank at least 2 contained in
/// `H_index`, other than the center `T = ∩A` itself (`A_T = A`). Rank-1
/// localizations are single hyperplanes and always free.
pub fn is_locally_free_along(a: &Arrangement, index: usize, exec: Execution) -> Result<bool> {
    require_central(a)?;
    let h = a.check_index(index)?;
    let p = flats(a);
    let candidates: Vec<_> = p
        .flats()
        .iter()
        .filter(|f| f.rank() >= 2 && f.rank() < p.rank() && f.support().contains(&h))
        .collect();
    let results = map_vec(exec, &candidates, |f| is_free(&a.localization(f)?));
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
