//! Subset sums over central subarrangements: the Tutte polynomial and the
//! Whitney formula for `chi`.

use std::collections::HashMap;

use super::{char_poly, flats, require_small, t_poly, t_ring, Flat};
use crate::algebra::{Polynomial, QMatrix, Rational, Ring};
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::exec::{fold_range, Execution};

const TUTTE_LIMIT: usize = 24;
const WHITNEY_LIMIT: usize = 20;
const NONE: u32 = u32::MAX;

/// `count(s, r)`: number of central subsets `B` with `|B| = s`, `rk B = r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTable {
    n: usize,
    l: usize,
    counts: Vec<u64>,
}

impl SubsetTable {
    pub fn count(&self, size: usize, rank: usize) -> u64 {
        self.counts[size * (self.l + 1) + rank]
    }

    /// Nonzero entries as `(size, rank, count)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..=self.n)
            .flat_map(move |s| (0..=self.l).map(move |r| (s, r, self.count(s, r))))
            .filter(|e| e.2 > 0)
    }
}

/// Transition table `next[f][h]`: the flat `X_f ∩ H_h`, or `NONE` if empty.
fn transitions(a: &Arrangement) -> (Vec<usize>, Vec<Vec<u32>>) {
    let p = flats(a);
    let index: HashMap<&[usize], u32> = p
        .flats()
        .iter()
        .enumerate()
        .map(|(i, f)| (f.support(), i as u32))
        .collect();
    let next = p
        .flats()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            (0..a.len())
                .map(|h| {
                    if f.support().contains(&h) {
                        return i as u32;
                    }
                    let mut support = f.support().to_vec();
                    support.push(h);
                    Flat::from_support(a, &support).map_or(NONE, |g| index[g.support()])
                })
                .collect()
        })
        .collect();
    (p.flats().iter().map(Flat::rank).collect(), next)
}

/// Tabulates `(|B|, rk B)` over all central subsets `B`, walking each subset
/// through the flat transition table.
pub fn subset_table(a: &Arrangement, exec: Execution) -> Result<SubsetTable> {
    let n = a.len();
    let l = a.dim();
    require_small(n, TUTTE_LIMIT, "the subset table")?;
    let (ranks, next) = transitions(a);
    let width = l + 1;
    let counts = fold_range(
        exec,
        0..1u64 << n,
        || vec![0u64; (n + 1) * width],
        |mut acc, mask| {
            let mut cur = 0u32;
            let mut bits = mask;
            while bits != 0 {
                let h = bits.trailing_zeros() as usize;
                cur = next[cur as usize][h];
                if cur == NONE {
                    return acc;
                }
                bits &= bits - 1;
            }
            acc[mask.count_ones() as usize * width + ranks[cur as usize]] += 1;
            acc
        },
        |mut x, y| {
            x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
            x
        },
    );
    Ok(SubsetTable { n, l, counts })
}

/// The ring `Q[t[1], t[2]]` of Tutte polynomials.
pub fn tutte_ring() -> Ring {
    Ring::indexed("t", 2)
}

/// `T_A(x, y) = sum_{B central} (x-1)^{rk A - rk B} (y-1)^{|B| - rk B}`,
/// with `x = t[1]`, `y = t[2]`.
pub fn tutte_poly(a: &Arrangement, exec: Execution) -> Result<Polynomial> {
    let table = subset_table(a, exec)?;
    let rk = table.entries().map(|e| e.1).max().unwrap_or(0);
    let ring = tutte_ring();
    let one = ring.one();
    let x1 = &ring.var(0) - &one;
    let y1 = &ring.var(1) - &one;
    let mut out = ring.zero();
    for (s, r, c) in table.entries() {
        let term = (&x1.pow((rk - r) as u32) * &y1.pow((s - r) as u32))
            .scale(&Rational::from_integer(c.into()));
        out = &out + &term;
    }
    Ok(out)
}

/// `chi(A, t) = (-1)^{rk A} t^{l - rk A} T_A(1 - t, 0)`.
///
/// The power of `t` is the ambient dimension minus the rank. Writing `|A|`
/// there only agrees when `|A| = l`, and fails for affine examples such as
/// the Shi arrangement.
pub fn tutte_char_check(a: &Arrangement, exec: Execution) -> Result<bool> {
    let t = tutte_poly(a, exec)?;
    let rk = super::rank(a);
    let one = t_poly(&[1]);
    let img = [&one - &t_poly(&[0, 1]), t_ring().zero()];
    let mut rhs = &t.substitute(&img)? * &t_poly(&[0, 1]).pow((a.dim() - rk) as u32);
    if rk % 2 == 1 {
        rhs = -rhs;
    }
    Ok(rhs == char_poly(a))
}

/// `chi(A, t) = sum_{B central} (-1)^{|B|} t^{dim(∩B)}`, evaluated by an
/// independent row reduction per subset.
pub fn whitney_char_poly(a: &Arrangement, exec: Execution) -> Result<Polynomial> {
    let n = a.len();
    let l = a.dim();
    require_small(n, WHITNEY_LIMIT, "the Whitney formula")?;
    let rows: Vec<Vec<Rational>> = a.forms().iter().map(|f| f.row()).collect();
    let coeffs = fold_range(
        exec,
        0..1u64 << n,
        || vec![0i64; l + 1],
        |mut acc, mask| {
            let chosen: Vec<Vec<Rational>> = (0..n)
                .filter(|h| mask >> h & 1 == 1)
                .map(|h| rows[h].clone())
                .collect();
            let rref = QMatrix::from_rows(l + 1, chosen)
                .expect("rectangular")
                .rref();
            if rref.pivots.last() != Some(&l) {
                acc[l - rref.rank] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
            acc
        },
        |mut x, y| {
            x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
            x
        },
    );
    Ok(t_poly(&coeffs))
}
