use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{AffineForm, QMatrix, Rational, Ring};
use crate::arrangement::Arrangement;

/// A nonempty intersection of hyperplanes.
///
/// `system` is the reduced row-echelon form of the stacked rows
/// `(a_1, ..., a_l | c)` of the supporting hyperplanes, with zero rows
/// dropped; two flats are equal iff their systems are identical. `support`
/// lists (0-based) every hyperplane containing the flat.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    system: QMatrix,
    pivots: Vec<usize>,
    dim: usize,
    support: Vec<usize>,
}

impl Flat {
    /// The whole space.
    pub fn ambient(l: usize) -> Flat {
        Flat {
            system: QMatrix::zeros(0, l + 1),
            pivots: Vec::new(),
            dim: l,
            support: Vec::new(),
        }
    }

    /// Intersection of the given hyperplanes (0-based), or `None` if empty.
    pub fn from_support(a: &Arrangement, indices: &[usize]) -> Option<Flat> {
        if indices.iter().any(|&i| i >= a.len()) {
            return None;
        }
        let rows: Vec<Vec<Rational>> = indices.iter().map(|&i| a.forms()[i].row()).collect();
        Flat::from_rows(a, rows)
    }

    fn from_rows(a: &Arrangement, rows: Vec<Vec<Rational>>) -> Option<Flat> {
        let l = a.dim();
        let rref = QMatrix::from_rows(l + 1, rows)
            .expect("rows of length l + 1")
            .rref();
        if rref.pivots.last() == Some(&l) {
            return None;
        }
        let kept: Vec<Vec<Rational>> = (0..rref.rank)
            .map(|i| rref.matrix.row(i).to_vec())
            .collect();
        let system = QMatrix::from_rows(l + 1, kept).expect("rectangular");
        let mut flat = Flat {
            system,
            pivots: rref.pivots,
            dim: l - rref.rank,
            support: Vec::new(),
        };
        flat.support = (0..a.len())
            .filter(|&i| flat.lies_on(&a.forms()[i]))
            .collect();
        Some(flat)
    }

    /// Whether the flat is contained in the hyperplane `{f = 0}`; for a
    /// nonempty flat this is membership of `f` in the row space.
    pub fn lies_on(&self, f: &AffineForm) -> bool {
        let mut r = f.row();
        for (i, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (j, v) in self.system.row(i).iter().enumerate() {
                if !v.is_zero() {
                    r[j] -= &c * v;
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Codimension.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn system(&self) -> &QMatrix {
        &self.system
    }

    /// Canonical equations as affine forms.
    pub fn equations(&self) -> Vec<AffineForm> {
        let l = self.system.ncols() - 1;
        self.system
            .rows()
            .map(|r| AffineForm::new(r[..l].to_vec(), r[l].clone()).expect("pivot row"))
            .collect()
    }

    /// `ideal(x-z, y-z)`; the ambient space prints as `ideal(0)`.
    pub fn display(&self, ring: &Ring) -> String {
        if self.pivots.is_empty() {
            return "ideal(0)".to_string();
        }
        let eqs: Vec<String> = self.equations().iter().map(|e| e.display(ring)).collect();
        format!("ideal({})", eqs.join(", "))
    }
}

/// Fixed-width bit set over hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub fn from_indices(n: usize, idx: &[usize]) -> Bits {
        let mut w = vec![0u64; n.div_ceil(64).max(1)];
        for &i in idx {
            w[i / 64] |= 1 << (i % 64);
        }
        Bits(w)
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// The intersection semilattice `L(A)` ordered by reverse inclusion and
/// graded by rank. Empty intersections are not stored, so affine
/// arrangements need not have a top element.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    l: usize,
    flats: Vec<Flat>,
    levels: Vec<Vec<usize>>,
    bits: Vec<Bits>,
}

impl IntersectionPoset {
    pub fn ambient_dim(&self) -> usize {
        self.l
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Flat indices per rank, rank 0 first.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Largest rank of a flat.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// `X_i < X_j`, i.e. `X_j` is strictly contained in `X_i`.
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        i != j
            && self.flats[i].rank() < self.flats[j].rank()
            && self.bits[i].is_subset(&self.bits[j])
    }

    /// Indices of the flats strictly below flat `j`.
    pub fn below(&self, j: usize) -> Vec<usize> {
        (0..self.flats.len())
            .filter(|&i| self.is_below(i, j))
            .collect()
    }

    pub fn index_of(&self, flat: &Flat) -> Option<usize> {
        self.flats.iter().position(|f| f == flat)
    }
}

/// Builds `L(A)` breadth-first: every rank-`k` flat is intersected with each
/// hyperplane outside its support, and nonempty results are deduplicated by
/// support (equivalently, by canonical system).
pub fn flats(a: &Arrangement) -> IntersectionPoset {
    let l = a.dim();
    let n = a.len();
    let mut flats = vec![Flat::ambient(l)];
    let mut levels = vec![vec![0]];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(Vec::new(), 0);
    loop {
        let current = levels.last().expect("nonempty").clone();
        let mut next = Vec::new();
        for &fi in &current {
            // a hyperplane in the support of a child of X meets X in that child
            let mut covered = vec![false; n];
            for &h in &flats[fi].support {
                covered[h] = true;
            }
            for h in 0..n {
                if covered[h] {
                    continue;
                }
                let mut rows: Vec<Vec<Rational>> =
                    flats[fi].system.rows().map(<[Rational]>::to_vec).collect();
                rows.push(a.forms()[h].row());
                let Some(g) = Flat::from_rows(a, rows) else {
                    continue;
                };
                for &k in &g.support {
                    covered[k] = true;
                }
                if seen.contains_key(&g.support) {
                    continue;
                }
                seen.insert(g.support.clone(), flats.len());
                next.push(flats.len());
                flats.push(g);
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let bits = flats
        .iter()
        .map(|f| Bits::from_indices(n, &f.support))
        .collect();
    IntersectionPoset {
        l,
        flats,
        levels,
        bits,
    }
}

/// Möbius values indexed like [`IntersectionPoset::flats`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    values: Vec<i64>,
}

impl MobiusTable {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, flat_index: usize) -> i64 {
        self.values[flat_index]
    }
}

/// `mu(V) = 1` and `mu(X) = -sum_{Y < X} mu(Y)`.
pub fn mobius(p: &IntersectionPoset) -> MobiusTable {
    let mut values = vec![0i64; p.flats.len()];
    for level in &p.levels {
        for &j in level {
            values[j] = if p.flats[j].rank() == 0 {
                1
            } else {
                -p.below(j).iter().map(|&i| values[i]).sum::<i64>()
            };
        }
    }
    MobiusTable { values }
}
