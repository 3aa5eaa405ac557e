//! Exhaustive point count of the complement over `F_q`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::flats;
use crate::algebra::Rational;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exec::{fold_range, Execution};

const POINT_LIMIT: u64 = 10_000_000;

fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn reduce(r: &Rational, q: u64) -> Option<u64> {
    let qb = BigInt::from(q);
    let residue = |x: &BigInt| {
        let m = x.abs() % &qb;
        let m = m.to_u64().expect("residue below q");
        if x.is_negative() && m != 0 {
            q - m
        } else {
            m
        }
    };
    let d = residue(r.denom());
    if d == 0 {
        return None;
    }
    Some(residue(r.numer()) * inv_mod(d, q) % q)
}

/// Row echelon form mod `q` with zero rows dropped.
fn echelon(mut rows: Vec<Vec<u64>>, q: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], q);
        rows[r].iter_mut().for_each(|v| *v = *v * inv % q);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + (q - f) * p) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn in_span(system: &[Vec<u64>], pivots: &[usize], row: &[u64], q: u64) -> bool {
    let mut v = row.to_vec();
    for (s, &p) in system.iter().zip(pivots) {
        let f = v[p];
        if f != 0 {
            for j in 0..v.len() {
                v[j] = (v[j] + (q - f) * s[j]) % q;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Echelon system, pivots and support of a flat over `F_q`.
type ModFlat = (Vec<Vec<u64>>, Vec<usize>, Vec<usize>);

/// Level sizes of the intersection poset of the reduced arrangement.
fn level_sizes_mod(rows: &[Vec<u64>], l: usize, q: u64) -> Vec<usize> {
    let n = rows.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(Vec::new());
    let mut level: Vec<ModFlat> = vec![(Vec::new(), Vec::new(), Vec::new())];
    let mut sizes = vec![1];
    loop {
        let mut next = Vec::new();
        for (system, _, support) in &level {
            for h in 0..n {
                if support.contains(&h) {
                    continue;
                }
                let mut stacked = system.clone();
                stacked.push(rows[h].clone());
                let (sys, piv) = echelon(stacked, q);
                if piv.last() == Some(&l) {
                    continue;
                }
                let supp: Vec<usize> = (0..n)
                    .filter(|&k| in_span(&sys, &piv, &rows[k], q))
                    .collect();
                if seen.insert(supp.clone()) {
                    next.push((sys, piv, supp));
                }
            }
        }
        if next.is_empty() {
            return sizes;
        }
        sizes.push(next.len());
        level = next;
    }
}

/// `|F_q^l \ union A|` by enumeration of all `q^l` points.
///
/// Refuses composite `q`, more than `10^7` points, and primes of bad
/// reduction: a denominator divisible by `q` or a reduced intersection poset
/// whose level sizes differ from those over `Q`.
pub fn count_points_ff(a: &Arrangement, q: u64, exec: Execution) -> Result<u64> {
    if !is_prime(q) || q > u32::MAX as u64 {
        return Err(Error::BadReduction {
            q,
            reason: "modulus is not a prime below 2^32".into(),
        });
    }
    let l = a.dim();
    let points = (0..l)
        .try_fold(1u64, |acc, _| {
            acc.checked_mul(q).filter(|&p| p <= POINT_LIMIT)
        })
        .ok_or_else(|| {
            Error::SizeGuard(format!("{q}^{l} points exceed the limit of {POINT_LIMIT}"))
        })?;
    let mut rows = Vec::with_capacity(a.len());
    for (i, f) in a.forms().iter().enumerate() {
        let row = f
            .row()
            .iter()
            .map(|c| reduce(c, q))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::BadReduction {
                q,
                reason: format!(
                    "a coefficient of hyperplane {} has denominator divisible by {q}",
                    i + 1
                ),
            })?;
        if row[..l].iter().all(Zero::is_zero) {
            return Err(Error::BadReduction {
                q,
                reason: format!("hyperplane {} has zero linear part mod {q}", i + 1),
            });
        }
        rows.push(row);
    }
    let expected = flats(a).level_sizes();
    let found = level_sizes_mod(&rows, l, q);
    if expected != found {
        return Err(Error::BadReduction {
            q,
            reason: format!(
                "intersection poset levels {found:?} mod {q} differ from {expected:?} over Q"
            ),
        });
    }
    let (count, _) = fold_range(
        exec,
        0..points,
        || (0u64, vec![0u64; l]),
        |(acc, mut x), idx| {
            let mut k = idx;
            for xi in x.iter_mut() {
                *xi = k % q;
                k /= q;
            }
            let off = rows.iter().all(|r| {
                let v = x.iter().zip(r).fold(r[l], |s, (xi, ai)| (s + xi * ai) % q);
                v != 0
            });
            (acc + off as u64, x)
        },
        |(a, x), (b, _)| (a + b, x),
    );
    Ok(count)
}
