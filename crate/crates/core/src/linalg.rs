//! Dense rational matrices and an incremental sparse echelon basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::ZERO, |acc, (a, b)| acc.add_mul(a, b))
            })
            .collect()
    }

    /// Block-diagonal matrix `a ⊕ b`.
    pub fn block_diagonal(a: &Self, b: &Self) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    fn row_reduce(&self) -> (Self, usize, Rational) {
        let mut m = self.clone();
        let mut det = Rational::ONE;
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                det = Rational::ZERO;
                continue;
            };
            if p != rank {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, rank * m.cols + j);
                }
                det = -det;
            }
            let pivot = m[(rank, col)].clone();
            det = &det * &pivot;
            let inv = pivot.recip();
            for j in 0..m.cols {
                m[(rank, j)] = &m[(rank, j)] * &inv;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in 0..m.cols {
                        let v = &m[(rank, j)] * &f;
                        m[(r, j)] = &m[(r, j)] - &v;
                    }
                }
            }
            rank += 1;
        }
        (m, rank, det)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let (_, rank, det) = self.row_reduce();
        if rank < self.rows {
            Rational::ZERO
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::ONE;
        }
        let (red, _, _) = aug.row_reduce();
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            if !red[(i, i)].is_one() {
                return None;
            }
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Solves `self * x = b` when a solution exists (any one of them).
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (red, _, _) = aug.row_reduce();
        let mut x = vec![Rational::ZERO; self.cols];
        for i in 0..red.rows {
            let lead = (0..=self.cols).find(|&j| !red[(i, j)].is_zero());
            match lead {
                Some(j) if j == self.cols => return None,
                Some(j) => x[j] = red[(i, self.cols)].clone(),
                None => {}
            }
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add_mul(a, b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Sparse vector: strictly increasing indices, nonzero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// Incrementally maintained row-echelon basis of a subspace of ℚ^N.
///
/// Rows are kept reduced against each other's pivots, pivot = smallest
/// index with nonzero entry, normalised to 1.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(target: &SparseVec, factor: &Rational, row: &SparseVec) -> SparseVec {
    // target - factor * row
    let mut out = Vec::with_capacity(target.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < row.len() {
        let ti = target.get(i).map(|e| e.0);
        let rj = row.get(j).map(|e| e.0);
        match (ti, rj) {
            (Some(a), Some(b)) if a == b => {
                let v = &target[i].1 - &(factor * &row[j].1);
                if !v.is_zero() {
                    out.push((a, v));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(target[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(target[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                out.push((b, -(factor * &row[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current pivots.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let idx = v[k].0;
            if let Some(row) = self.rows.get(&idx) {
                let f = v[k].1.clone();
                v = axpy(&v, &f, row);
            } else {
                k += 1;
            }
        }
        v
    }

    /// Inserts `v`; returns whether the rank increased.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((pivot, lead)) = v.first().cloned() else {
            return false;
        };
        let inv = lead.recip();
        let v: SparseVec = v.into_iter().map(|(i, c)| (i, &c * &inv)).collect();
        self.rows.insert(pivot, v);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RationalMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(m.determinant(), r(-1));
        assert_eq!(&m * &m.inverse().unwrap(), RationalMatrix::identity(3));
        let s = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant(), r(0));
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = m.solve(&[r(3), r(1), r(4)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        assert!(m.solve(&[r(3), r(1), r(5)]).is_none());
    }

    #[test]
    fn echelon_tracks_rank() {
        let mut e = Echelon::new();
        assert!(e.insert(vec![(0, r(2)), (3, r(1))]));
        assert!(e.insert(vec![(0, r(1)), (1, r(1))]));
        assert!(!e.insert(vec![(1, r(-2)), (3, r(1))]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(vec![(0, r(3)), (1, r(1)), (3, r(1))]));
        assert!(!e.insert(vec![]));
    }
}
