//! Buchberger's algorithm on submodules of `S^r` under a position-over-term
//! order: lower positions dominate, and degrevlex breaks ties within a
//! position. Ideals are the rank-one case.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};

use super::GbConfig;
use crate::algebra::{Monomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Terms sorted strictly descending in the module order, no zero coefficients.
pub(crate) type Vector = Vec<Term>;

pub(crate) fn cmp_terms(a_pos: usize, a: &Monomial, b_pos: usize, b: &Monomial) -> Ordering {
    b_pos.cmp(&a_pos).then_with(|| a.cmp(b))
}

/// `f - c * m * g`.
pub(crate) fn sub_multiple(f: &[Term], c: &Rational, m: &Monomial, g: &[Term]) -> Vector {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &Term| Term {
        pos: t.pos,
        mono: t.mono.mul(m),
        coeff: -(c * &t.coeff),
    };
    let mut pending = g.first().map(scaled);
    while i < f.len() {
        let Some(gt) = pending.as_ref() else { break };
        match cmp_terms(f[i].pos, &f[i].mono, gt.pos, &gt.mono) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pending.take().expect("pending term"));
                j += 1;
                pending = g.get(j).map(scaled);
            }
            Ordering::Equal => {
                let s = &f[i].coeff + &gt.coeff;
                if !s.is_zero() {
                    out.push(Term {
                        pos: f[i].pos,
                        mono: f[i].mono.clone(),
                        coeff: s,
                    });
                }
                i += 1;
                j += 1;
                pending = g.get(j).map(scaled);
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    if let Some(t) = pending {
        out.push(t);
        out.extend(g[j + 1..].iter().map(scaled));
    }
    out
}

pub(crate) fn make_monic(v: &mut Vector) {
    if let Some(lc) = v.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            let inv = lc.recip();
            for t in v.iter_mut() {
                t.coeff *= &inv;
            }
        }
    }
}

/// Weighted degree of a term: monomial degree plus the shift of its position.
fn weighted(shifts: &[u32], t: &Term) -> u32 {
    t.mono.degree() + shifts.get(t.pos).copied().unwrap_or(0)
}

/// Largest weighted degree of a term.
fn max_weighted(shifts: &[u32], v: &[Term]) -> u32 {
    v.iter().map(|t| weighted(shifts, t)).max().unwrap_or(0)
}

/// Common weighted degree of all terms, if any.
pub(crate) fn homogeneous_degree(shifts: &[u32], v: &[Term]) -> Option<u32> {
    let d = weighted(shifts, v.first()?);
    v.iter().all(|t| weighted(shifts, t) == d).then_some(d)
}

/// Full reduction of `f` modulo `basis`: no term of the result is divisible
/// by a leading term of the basis.
pub(crate) fn reduce(f: Vector, basis: &[Vector]) -> Vector {
    let mut done = Vec::new();
    let mut f = f;
    let mut head = 0;
    while head < f.len() {
        let t = &f[head];
        let divisor = basis.iter().find(|g| {
            let lt = &g[0];
            lt.pos == t.pos && lt.mono.divides(&t.mono)
        });
        match divisor {
            Some(g) => {
                let c = &t.coeff / &g[0].coeff;
                let m = g[0].mono.quotient_of(&t.mono);
                f = sub_multiple(&f[head..], &c, &m, g);
                head = 0;
            }
            None => {
                done.push(f[head].clone());
                head += 1;
            }
        }
    }
    done
}

type PairKey = (u32, Monomial, usize, usize);

pub(crate) struct Buchberger {
    rank: usize,
    shifts: Vec<u32>,
    config: GbConfig,
    basis: Vec<Vector>,
    queue: BTreeSet<PairKey>,
    pending: HashSet<(usize, usize)>,
}

impl Buchberger {
    pub fn new(rank: usize, shifts: Vec<u32>, config: GbConfig) -> Buchberger {
        Buchberger {
            rank,
            shifts,
            config,
            basis: Vec::new(),
            queue: BTreeSet::new(),
            pending: HashSet::new(),
        }
    }

    /// Adds `v` (reduced first) and queues its critical pairs. Returns
    /// whether anything was added.
    pub fn insert(&mut self, v: Vector) -> Result<bool> {
        let mut v = reduce(v, &self.basis);
        if v.is_empty() {
            return Ok(false);
        }
        make_monic(&mut v);
        if self.basis.len() >= self.config.max_basis_size {
            return Err(Error::Budget(format!(
                "basis grew beyond {} elements",
                self.config.max_basis_size
            )));
        }
        let k = self.basis.len();
        let lt_pos = v[0].pos;
        for i in 0..k {
            let g = &self.basis[i][0];
            if g.pos != lt_pos {
                continue;
            }
            if self.rank == 1 && g.mono.is_coprime(&v[0].mono) {
                // product criterion (ideal case only)
                continue;
            }
            let lcm = g.mono.lcm(&v[0].mono);
            let sugar = lcm.degree() + self.shifts.get(lt_pos).copied().unwrap_or(0);
            self.queue.insert((sugar, lcm, i, k));
            self.pending.insert((i, k));
        }
        self.basis.push(v);
        Ok(true)
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        let pos = self.basis[i][0].pos;
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k][0].pos == pos
                && self.basis[k][0].mono.divides(lcm)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    /// Processes critical pairs (lowest degree first) until the basis is a
    /// Groebner basis.
    pub fn complete(&mut self) -> Result<()> {
        while let Some(key) = self.queue.pop_first() {
            let (sugar, lcm, i, j) = key;
            self.pending.remove(&(i, j));
            if sugar > self.config.max_degree {
                return Err(Error::Budget(format!(
                    "critical pair of degree {sugar} exceeds limit {}",
                    self.config.max_degree
                )));
            }
            if self.chain_criterion(i, j, &lcm) {
                continue;
            }
            let s = s_vector(&self.basis[i], &self.basis[j], &lcm);
            self.insert(s)?;
        }
        Ok(())
    }

    /// The reduced Groebner basis, sorted by leading term descending.
    pub fn reduced(&self) -> Vec<Vector> {
        let n = self.basis.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                let lt = &self.basis[i][0];
                !(0..n).any(|k| {
                    if k == i {
                        return false;
                    }
                    let o = &self.basis[k][0];
                    o.pos == lt.pos && o.mono.divides(&lt.mono) && (o.mono != lt.mono || k < i)
                })
            })
            .collect();
        let minimal: Vec<Vector> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut out: Vec<Vector> = (0..minimal.len())
            .map(|i| {
                let others: Vec<Vector> = minimal
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, v)| v.clone())
                    .collect();
                let mut tail = reduce(minimal[i][1..].to_vec(), &others);
                let mut v = vec![minimal[i][0].clone()];
                v.append(&mut tail);
                make_monic(&mut v);
                v
            })
            .collect();
        out.sort_by(|a, b| cmp_terms(b[0].pos, &b[0].mono, a[0].pos, &a[0].mono));
        out
    }
}

pub(crate) fn s_vector(f: &[Term], g: &[Term], lcm: &Monomial) -> Vector {
    // both monic
    let mf = f[0].mono.quotient_of(lcm);
    let mg = g[0].mono.quotient_of(lcm);
    let scaled_f: Vector = f
        .iter()
        .map(|t| Term {
            pos: t.pos,
            mono: t.mono.mul(&mf),
            coeff: t.coeff.clone(),
        })
        .collect();
    let c = &f[0].coeff / &g[0].coeff;
    sub_multiple(&scaled_f, &c, &mg, g)
}

/// Groebner basis of the submodule generated by `gens`.
///
/// Non-homogeneous input is homogenized first; the dehomogenized basis is
/// then completed and reduced in the original ring. Degree-by-degree
/// completion keeps the coefficient growth of the direct computation in
/// check on inhomogeneous input.
pub(crate) fn groebner(
    rank: usize,
    shifts: &[u32],
    gens: Vec<Vector>,
    config: &GbConfig,
) -> Result<Vec<Vector>> {
    let graded = gens
        .iter()
        .all(|g| g.is_empty() || homogeneous_degree(shifts, g).is_some());
    if graded {
        return complete(rank, shifts, gens, config);
    }
    let lifted = gens.iter().map(|g| homogenize(shifts, g)).collect();
    let basis = complete(rank, shifts, lifted, config)?;
    complete(
        rank,
        shifts,
        basis.into_iter().map(dehomogenize).collect(),
        config,
    )
}

fn complete(
    rank: usize,
    shifts: &[u32],
    gens: Vec<Vector>,
    config: &GbConfig,
) -> Result<Vec<Vector>> {
    let mut bb = Buchberger::new(rank, shifts.to_vec(), config.clone());
    let mut gens = gens;
    gens.sort_by_key(|g| g.first().map(|t| weighted(shifts, t)).unwrap_or(0));
    for g in gens {
        bb.insert(g)?;
    }
    bb.complete()?;
    Ok(bb.reduced())
}

/// Sorts terms descending in the module order, merging equal ones.
fn normalize(mut terms: Vec<Term>) -> Vector {
    terms.sort_by(|a, b| cmp_terms(b.pos, &b.mono, a.pos, &a.mono));
    let mut out: Vector = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.pos == t.pos && last.mono == t.mono => last.coeff += t.coeff,
            _ => out.push(t),
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
    }
    out
}

/// `v` in one more variable `h`, each term multiplied by the power of `h`
/// that lifts it to the largest weighted degree of `v`.
fn homogenize(shifts: &[u32], v: &[Term]) -> Vector {
    let d = max_weighted(shifts, v);
    normalize(
        v.iter()
            .map(|t| {
                let mut e: Vec<u32> = t.mono.exponents().collect();
                e.push(d - weighted(shifts, t));
                Term {
                    pos: t.pos,
                    mono: Monomial::from_exponents(&e),
                    coeff: t.coeff.clone(),
                }
            })
            .collect(),
    )
}

/// Sets the last variable to one.
fn dehomogenize(v: Vector) -> Vector {
    normalize(
        v.into_iter()
            .map(|t| {
                let e: Vec<u32> = t.mono.exponents().collect();
                Term {
                    pos: t.pos,
                    mono: Monomial::from_exponents(&e[..e.len() - 1]),
                    coeff: t.coeff,
                }
            })
            .collect(),
    )
}

/// Generators of the syzygy module of `gens` (elements of `S^rank`), via a
/// Groebner basis of `(g_i, e_i)` in `S^(rank + k)`; elements whose leading
/// position falls in the second block have a vanishing first block.
///
/// Non-homogeneous input is homogenized first and the syzygies found are
/// dehomogenized: the position-over-term basis of the augmented module is
/// prone to coefficient swell when the degree filtration is lost.
pub(crate) fn syzygies(
    nvars: usize,
    rank: usize,
    shifts: &[u32],
    gens: &[Vector],
    config: &GbConfig,
) -> Result<Vec<Vector>> {
    let graded = gens
        .iter()
        .all(|g| g.is_empty() || homogeneous_degree(shifts, g).is_some());
    if graded {
        return graded_syzygies(nvars, rank, shifts, gens, config);
    }
    let lifted: Vec<Vector> = gens.iter().map(|g| homogenize(shifts, g)).collect();
    let syz = graded_syzygies(nvars + 1, rank, shifts, &lifted, config)?;
    let mut out: Vec<Vector> = Vec::with_capacity(syz.len());
    for v in syz.into_iter().map(dehomogenize) {
        if !v.is_empty() && !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

fn graded_syzygies(
    nvars: usize,
    rank: usize,
    shifts: &[u32],
    gens: &[Vector],
    config: &GbConfig,
) -> Result<Vec<Vector>> {
    let k = gens.len();
    let mut all_shifts: Vec<u32> = (0..rank)
        .map(|p| shifts.get(p).copied().unwrap_or(0))
        .collect();
    let mut augmented = Vec::with_capacity(k);
    for (j, g) in gens.iter().enumerate() {
        all_shifts.push(homogeneous_degree(shifts, g).unwrap_or(0));
        let mut v = g.clone();
        v.push(Term {
            pos: rank + j,
            mono: Monomial::one(nvars),
            coeff: Rational::one(),
        });
        augmented.push(v);
    }
    let gb = groebner(rank + k, &all_shifts, augmented, config)?;
    Ok(gb
        .into_iter()
        .filter(|v| v[0].pos >= rank)
        .map(|v| {
            v.into_iter()
                .map(|t| Term {
                    pos: t.pos - rank,
                    mono: t.mono,
                    coeff: t.coeff,
                })
                .collect()
        })
        .collect())
}
