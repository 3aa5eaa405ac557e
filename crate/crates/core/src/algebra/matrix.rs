use num_traits::{One, Zero};

use super::affine::AffineForm;
use super::polynomial::{Polynomial, Ring};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense rectangular matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row-echelon form with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<QMatrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row of length {} in {cols}-column matrix",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(QMatrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> QMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        QMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&a| Rational::from_integer(a.into()))
                        .collect()
                })
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row-echelon form; pivots are chosen leftmost-first.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column
    /// in ascending order.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&matrix[(i, f)];
                }
                v
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = Rational::one();
        let mut prev = Rational::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(Rational::zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(if n == 0 {
            Rational::one()
        } else {
            sign * &m[(n - 1, n - 1)]
        })
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Solution set of a system of affine equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Empty,
    /// `point + span(basis)`; basis vectors correspond to the free variables
    /// in ascending order.
    Point {
        point: Vec<Rational>,
        basis: Vec<Vec<Rational>>,
        free: Vec<usize>,
    },
}

/// Solves `alpha(x) = 0` for every form in `system`, in `dim` variables.
pub fn solve_affine(dim: usize, system: &[AffineForm]) -> Result<AffineSolution> {
    if let Some(f) = system.iter().find(|f| f.dim() != dim) {
        return Err(Error::Dimension(format!(
            "form in {} variables, expected {dim}",
            f.dim()
        )));
    }
    let rows = system
        .iter()
        .map(|f| {
            let mut r = f.linear().to_vec();
            r.push(-f.constant());
            r
        })
        .collect();
    let Rref { matrix, pivots, .. } = QMatrix::from_rows(dim + 1, rows)?.rref();
    if pivots.last() == Some(&dim) {
        return Ok(AffineSolution::Empty);
    }
    let mut point = vec![Rational::zero(); dim];
    for (i, &p) in pivots.iter().enumerate() {
        point[p] = matrix[(i, dim)].clone();
    }
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&matrix[(i, f)];
            }
            v
        })
        .collect();
    Ok(AffineSolution::Point { point, basis, free })
}

/// Rectangular matrix of polynomials over a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension("ragged polynomial matrix".into()));
            }
            for p in r {
                ring.check_same(p.ring())?;
                data.push(p);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: n,
            cols,
            data,
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ring: &Ring, columns: &[Vec<Polynomial>]) -> Result<PolyMatrix> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("ragged polynomial columns".into()));
        }
        PolyMatrix::from_rows(
            ring,
            (0..rows)
                .map(|i| columns.iter().map(|c| c[i].clone()).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    /// Determinant by Laplace expansion along successive rows, memoizing the
    /// minors on each column subset. Exponential in the size; meant for the
    /// small coefficient matrices of derivation bases.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > 16 {
            return Err(Error::SizeGuard(format!("{n}x{n} polynomial determinant")));
        }
        // minors[mask]: determinant of rows (n - |mask|).. over the columns in mask
        let mut minors: Vec<Option<Polynomial>> = vec![None; 1 << n];
        minors[0] = Some(self.ring.one());
        for mask in 1usize..(1 << n) {
            let k = n - mask.count_ones() as usize;
            let mut acc = self.ring.zero();
            let mut before = 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = self.get(k, j);
                let minor = minors[mask & !(1 << j)]
                    .as_ref()
                    .expect("computed in mask order");
                if !entry.is_zero() && !minor.is_zero() {
                    let t = entry * minor;
                    acc = if before % 2 == 0 {
                        &acc + &t
                    } else {
                        &acc - &t
                    };
                }
                before += 1;
            }
            minors[mask] = Some(acc);
        }
        Ok(minors.pop().flatten().expect("full minor"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn rref_examples() {
        let id = QMatrix::identity(3).rref();
        assert_eq!((id.rank, id.pivots), (3, vec![0, 1, 2]));
        let braid = QMatrix::from_i64(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]).rref();
        assert_eq!(braid.rank, 2);
        assert_eq!(QMatrix::zeros(2, 3).rref().rank, 0);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = QMatrix::from_i64(&[&[2, 4, 1], &[1, 2, 3], &[0, 0, 5]]);
        let once = m.rref().matrix;
        assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn kernel_annihilates() {
        let m = QMatrix::from_i64(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        for r in m.rows() {
            let dot: Rational = r.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn numeric_det() {
        let m = QMatrix::from_i64(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        // 0*(1-0) - 2*(3-0) + 1*(3-1)
        assert_eq!(m.det().unwrap(), rat(-4, 1));
        assert!(QMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn solve_examples() {
        let x_y = AffineForm::from_ints(&[1, -1], 0).unwrap();
        let x_y1 = AffineForm::from_ints(&[1, -1], -1).unwrap();
        assert_eq!(
            solve_affine(2, &[x_y, x_y1]).unwrap(),
            AffineSolution::Empty
        );

        let a = AffineForm::from_ints(&[1, -1, 0], 0).unwrap();
        let b = AffineForm::from_ints(&[0, 1, -1], 0).unwrap();
        match solve_affine(3, &[a, b]).unwrap() {
            AffineSolution::Point { point, basis, .. } => {
                assert!(point.iter().all(Zero::is_zero));
                assert_eq!(basis, vec![vec![rat(1, 1), rat(1, 1), rat(1, 1)]]);
            }
            AffineSolution::Empty => panic!("consistent system"),
        }

        match solve_affine(3, &[]).unwrap() {
            AffineSolution::Point { basis, .. } => assert_eq!(basis.len(), 3),
            AffineSolution::Empty => panic!(),
        }
    }

    #[test]
    fn poly_det_examples() {
        let r = Ring::new(["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let diag = PolyMatrix::from_rows(
            &r,
            vec![
                vec![x.clone(), r.zero(), r.zero()],
                vec![r.zero(), y.clone(), r.zero()],
                vec![r.zero(), r.zero(), z.clone()],
            ],
        )
        .unwrap();
        assert_eq!(diag.det().unwrap(), &(&x * &y) * &z);
        let rep = PolyMatrix::from_columns(
            &r,
            &[vec![x.clone(), y.clone()], vec![x.clone(), y.clone()]],
        )
        .unwrap();
        assert!(rep.det().unwrap().is_zero());
        let rect = PolyMatrix::from_rows(&r, vec![vec![x.clone(), y.clone()]]).unwrap();
        assert!(matches!(rect.det(), Err(Error::NotSquare { .. })));
    }
}
