//! Exact sparse integer matrices and dense real symmetric matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Sparse nonnegative integer matrix in compressed sparse row form.
///
/// Column indices are strictly increasing within each row and no stored
/// entry is zero, so two matrices are equal iff their entries are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<u64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            row_ptr: vec![0; rows + 1],
            col_idx: Vec::new(),
            values: Vec::new(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zero results dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Self {
        let mut per_row: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) out of bounds");
            *per_row[r].entry(c).or_insert(0) += v;
        }
        let mut out = Self::zeros(rows, cols);
        for (r, row) in per_row.into_iter().enumerate() {
            for (c, v) in row {
                if v != 0 {
                    out.col_idx.push(c);
                    out.values.push(v);
                }
            }
            out.row_ptr[r + 1] = out.col_idx.len();
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        let span = self.row_ptr[row]..self.row_ptr[row + 1];
        match self.col_idx[span.clone()].binary_search(&col) {
            Ok(pos) => self.values[span.start + pos],
            Err(_) => 0,
        }
    }

    /// Nonzero entries of one row as `(col, value)`.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        let span = self.row_ptr[row]..self.row_ptr[row + 1];
        self.col_idx[span.clone()]
            .iter()
            .copied()
            .zip(self.values[span].iter().copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.rows).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.iter().map(|(r, c, v)| (c, r, v)))
    }

    /// Exact sparse product `self * rhs`.
    pub fn matmul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        let mut touched = Vec::new();
        for r in 0..self.rows {
            for (k, a) in self.row(r) {
                for (c, b) in rhs.row(k) {
                    if acc[c] == 0 {
                        touched.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                out.col_idx.push(c);
                out.values.push(acc[c]);
                acc[c] = 0;
            }
            touched.clear();
            out.row_ptr[r + 1] = out.col_idx.len();
        }
        Ok(out)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows)
            .map(|r| self.row(r).map(|(_, v)| v).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let mut sums = vec![0; self.cols];
        for (_, c, v) in self.iter() {
            sums[c] += v;
        }
        sums
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && self.iter().all(|(r, c, v)| self.get(c, r) == v)
    }

    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        let mut dense = vec![vec![0; self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            dense[r][c] = v;
        }
        dense
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

/// Dense real symmetric matrix stored row-major.
///
/// Entries are only ever written in mirrored pairs, so symmetry is exact.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from a generator evaluated on the upper triangle.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Accepts a square row-major array; fails unless it is exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v.to_bits() != rows[j][i].to_bits() {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                m.data[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Writes `v` at `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Principal submatrix on the given indices, in the given order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |a, b| self.get(idx[a], idx[b]))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `xᵀ M x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl From<&IntMatrix> for SymMatrix {
    /// Densifies a symmetric integer matrix.
    fn from(m: &IntMatrix) -> Self {
        assert!(m.is_symmetric(), "integer matrix is not symmetric");
        let mut out = SymMatrix::zeros(m.rows());
        for (r, c, v) in m.iter() {
            out.set(r, c, v as f64);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_accumulate_and_drop_zeros() {
        let m = IntMatrix::from_triplets(2, 3, [(0, 1, 2), (0, 1, 3), (1, 2, 0)]);
        assert_eq!(m.get(0, 1), 5);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 2), 0);
    }

    #[test]
    fn matmul_matches_dense_product() {
        let a = IntMatrix::from_triplets(2, 3, [(0, 0, 1), (0, 2, 2), (1, 1, 3)]);
        let b = IntMatrix::from_triplets(3, 2, [(0, 1, 4), (1, 0, 5), (2, 0, 1), (2, 1, 1)]);
        let c = a.matmul(&b).unwrap();
        assert_eq!(c.to_dense(), vec![vec![2, 6], vec![15, 0]]);
        assert!(matches!(a.matmul(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn empty_product_shapes() {
        let a = IntMatrix::zeros(3, 2);
        let b = IntMatrix::zeros(2, 0);
        let c = a.matmul(&b).unwrap();
        assert_eq!((c.rows(), c.cols(), c.nnz()), (3, 0, 0));
    }

    #[test]
    fn sym_matrix_rejects_asymmetric_rows() {
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]).is_err());
        let m = SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert_eq!(m.quadratic_form(&[1.0, 1.0]), 6.0);
    }
}
