//! Circuits, the Orlik-Terao ideal and its Artinian quotient, and the
//! Solomon-Terao ideal.

use serde_json::{json, Value};

use crate::algebra::{Monomial, Polynomial, QMatrix, Rational, Ring};
use crate::arrangement::Arrangement;
use crate::combinatorics::Flat;
use crate::error::Result;
use crate::freeness::{apply_derivation, der_module};

/// A minimal dependent set with its relation `sum c_i alpha_i = 0`,
/// scaled so the coefficient at the smallest index is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    indices: Vec<usize>,
    relation: Vec<Rational>,
}

impl Circuit {
    /// 1-based hyperplane indices, ascending.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `c_i`, aligned with [`Circuit::indices`].
    pub fn relation(&self) -> &[Rational] {
        &self.relation
    }
}

/// Subsets of `0..n` of size `k` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().expect("checked");
        match (0..k).rev().find(|&i| c[i] < n - k + i) {
            Some(i) => {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
            }
            None => cur = None,
        }
        Some(out)
    })
}

/// `Λ` is dependent if `∩_{i∈Λ} H_i` is nonempty of codimension below `|Λ|`.
pub(crate) fn is_dependent(a: &Arrangement, set: &[usize]) -> bool {
    Flat::from_support(a, set).is_some_and(|f| f.rank() < set.len())
}

/// Basis of `{c : sum_{i∈Λ} c_i alpha_i = 0}` for 0-based `Λ`.
pub(crate) fn relations(a: &Arrangement, set: &[usize]) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = set.iter().map(|&i| a.forms()[i].row()).collect();
    let l = a.dim();
    let columns: Vec<Vec<Rational>> = (0..=l)
        .map(|r| rows.iter().map(|row| row[r].clone()).collect())
        .collect();
    QMatrix::from_rows(set.len(), columns)
        .expect("rectangular")
        .kernel()
}

/// All circuits, by increasing size; supersets of circuits already found
/// are skipped, which leaves exactly the minimal dependent sets.
pub fn circuits(a: &Arrangement) -> Vec<Circuit> {
    let n = a.len();
    let max = crate::combinatorics::rank(a) + 1;
    let mut found: Vec<Circuit> = Vec::new();
    for k in 2..=max.min(n) {
        for set in combinations(n, k) {
            let contains_found = found
                .iter()
                .any(|c| c.indices.iter().all(|i| set.contains(&(i - 1))));
            if contains_found || !is_dependent(a, &set) {
                continue;
            }
            let mut rel = relations(a, &set)
                .into_iter()
                .next()
                .expect("dependent set has a relation");
            let lead = rel[0].clone();
            rel.iter_mut().for_each(|c| *c /= &lead);
            found.push(Circuit {
                indices: set.iter().map(|i| i + 1).collect(),
                relation: rel,
            });
        }
    }
    found
}

/// The ring `Q[y[1], ..., y[n]]` of the Orlik-Terao ideal.
pub fn ot_ring(n: usize) -> Ring {
    Ring::indexed("y", n)
}

/// `f_Λ = sum_j c_{i_j} prod_{m != j} y_{i_m}` for 1-based `indices`.
pub fn signed_deletion(ring: &Ring, indices: &[usize], relation: &[Rational]) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        indices.iter().zip(relation).map(|(&skip, c)| {
            let mut e = vec![0u32; n];
            for &i in indices {
                if i != skip {
                    e[i - 1] = 1;
                }
            }
            (Monomial::from_exponents(&e), c.clone())
        }),
    )
}

/// Generators `f_Λ`, one per circuit.
pub fn orlik_terao_ideal(a: &Arrangement) -> Vec<Polynomial> {
    let ring = ot_ring(a.len());
    circuits(a)
        .iter()
        .map(|c| signed_deletion(&ring, &c.indices, &c.relation))
        .collect()
}

/// Orlik-Terao generators followed by the squares `y_i^2`.
pub fn artinian_orlik_terao_ideal(a: &Arrangement) -> Vec<Polynomial> {
    let ring = ot_ring(a.len());
    let mut gens = orlik_terao_ideal(a);
    gens.extend((0..a.len()).map(|i| ring.var(i).pow(2)));
    gens
}

/// `a(A, f) = {delta(f) : delta ∈ D(A)}`, generated by the images of the
/// minimal generators of `D(A)`; zero images are dropped.
pub fn solomon_terao_ideal(a: &Arrangement, f: &Polynomial) -> Result<Vec<Polynomial>> {
    a.ring().check_same(f.ring())?;
    let d = der_module(a)?;
    let mut out = Vec::new();
    for delta in d.derivations() {
        let g = apply_derivation(delta, f)?;
        if !g.is_zero() {
            out.push(g);
        }
    }
    Ok(out)
}

/// `{"vars": [...], "generators": [...]}`.
pub fn ideal_to_json(ring: &Ring, gens: &[Polynomial]) -> Value {
    json!({
        "vars": ring.names(),
        "generators": gens.iter().map(Polynomial::to_string).collect::<Vec<_>>(),
    })
}

/// `ideal(g_1, g_2, ...)` with generators separated by `", "`.
pub fn ideal_string(gens: &[Polynomial]) -> String {
    if gens.is_empty() {
        return "ideal()".to_string();
    }
    let parts: Vec<String> = gens.iter().map(Polynomial::to_string).collect();
    format!("ideal({})", parts.join(", "))
}
