use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalars::CycScalar;

/// Dense row-major matrix over a cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: u32,
    entries: Vec<CycScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, order: u32) -> Self {
        Matrix { rows, cols, order, entries: vec![CycScalar::zero(order); rows * cols] }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let mut m = Self::zeros(n, n, order);
        for i in 0..n {
            m[(i, i)] = CycScalar::one(order);
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<CycScalar>>, cols: usize, order: u32) -> Result<Self> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(alloc::format!(
                    "row of length {} in a matrix with {} columns",
                    row.len(),
                    cols
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix { rows: r, cols, order, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, order: u32, mut f: impl FnMut(usize, usize) -> CycScalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, order, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn push_row(&mut self, row: Vec<CycScalar>) {
        assert_eq!(row.len(), self.cols, "row length");
        self.entries.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.order, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(alloc::format!(
                "{}x{} times {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols, self.order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycScalar::zero(self.order);
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
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
            let inv = m[(r, c)].checked_inv().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = &m[(r, j)] * &inv;
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let t = &f * &m[(r, j)];
                        m[(i, j)] -= &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : M v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<CycScalar>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Reduced row-echelon form and right null space in one pass.
    pub fn rref_and_kernel(&self) -> (Matrix, Vec<Vec<CycScalar>>) {
        let (r, pivots) = self.rref();
        let k = kernel_from_rref(&r, &pivots);
        (r, k)
    }

    /// One solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[CycScalar]) -> Option<Vec<CycScalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, self.order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![CycScalar::zero(self.order); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<CycScalar> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = CycScalar::one(self.order);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(CycScalar::zero(self.order));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.checked_inv()?;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        let t = &f * &m[(c, j)];
                        m[(i, j)] -= &t;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.order);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CycScalar::one(self.order);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DegenerateScalar);
        }
        Ok(Matrix::from_fn(n, n, self.order, |i, j| r[(i, n + j)].clone()))
    }
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<CycScalar>> {
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; r.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    for free in (0..r.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![CycScalar::zero(r.order); r.cols];
        v[free] = CycScalar::one(r.order);
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -&r[(i, free)];
        }
        basis.push(v);
    }
    basis
}

impl Index<(usize, usize)> for Matrix {
    type Output = CycScalar;
    fn index(&self, (i, j): (usize, usize)) -> &CycScalar {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycScalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| CycScalar::from_int(1, x)).collect()).collect(),
            cols,
            1,
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<CycScalar> {
        v.iter().map(|&x| CycScalar::from_int(1, x)).collect()
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let (_, k) = int_matrix(&[&[1, 1]]).rref_and_kernel();
        assert_eq!(k, vec![ints(&[-1, 1])]);
    }

    #[test]
    fn identity_has_no_kernel() {
        assert!(Matrix::identity(3, 1).kernel().is_empty());
    }

    #[test]
    fn rank_one_example() {
        let m = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel(), vec![ints(&[-2, 1])]);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = int_matrix(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det().unwrap(), CycScalar::from_int(1, 18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3, 1));
    }

    #[test]
    fn solve_consistency() {
        let m = int_matrix(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&ints(&[1, 2])).is_none());
        let x = m.solve(&ints(&[3, 3])).unwrap();
        assert_eq!(m.mul_vec(&x), ints(&[3, 3]));
    }

    #[test]
    fn cyclotomic_entries() {
        let i = CycScalar::zeta(4);
        let one = CycScalar::one(4);
        let m = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i.clone(), one.clone()]], 2, 4).unwrap();
        // det = 1 - i^2 = 2
        assert_eq!(m.det().unwrap(), CycScalar::from_int(4, 2));
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_rank_nullity(entries in proptest::collection::vec(-3i64..4, 12)) {
            let rows: Vec<&[i64]> = entries.chunks(4).collect();
            let m = int_matrix(&rows);
            let (r, k) = m.rref_and_kernel();
            prop_assert_eq!(r.rref().0, r.clone());
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(CycScalar::is_zero));
            }
        }
    }
}
