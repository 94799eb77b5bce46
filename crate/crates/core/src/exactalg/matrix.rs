use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Column-major sparse matrix. Absent entries are zero.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    columns: Vec<SparseVec<F>>,
}

pub(crate) fn normalize<F: Field>(mut v: SparseVec<F>) -> SparseVec<F> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.clone() + x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            columns: (0..n).map(|i| vec![(i, F::one())]).collect(),
        }
    }

    /// Builds a matrix from sparse columns. Duplicate indices are summed and
    /// zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec<F>>) -> Result<Self> {
        let mut out = Vec::with_capacity(columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            if let Some((r, _)) = col.iter().find(|(r, _)| *r >= rows) {
                return Err(Error::Dimension(format!(
                    "entry ({r}, {c}) outside a matrix with {rows} rows"
                )));
            }
            out.push(normalize(col));
        }
        Ok(Matrix { rows, columns: out })
    }

    /// Dense row-major input.
    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let mut columns = vec![Vec::new(); cols];
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    columns[j].push((i, x.clone()));
                }
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            columns,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
            .collect();
        Self::from_rows(&dense).expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, F)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec<F>] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.columns[c]
            .binary_search_by_key(&r, |(i, _)| *i)
            .map(|k| self.columns[c][k].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn push_column(&mut self, col: SparseVec<F>) -> Result<()> {
        if col.iter().any(|(r, _)| *r >= self.rows) {
            return Err(Error::Dimension("column entry out of range".into()));
        }
        self.columns.push(normalize(col));
        Ok(())
    }

    /// Column concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot place {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Ok(Matrix {
            rows: self.rows,
            columns,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                columns[*r].push((c, x.clone()));
            }
        }
        Matrix {
            rows: self.cols(),
            columns,
        }
    }

    /// Row vectors in sparse form (indices are column numbers).
    pub fn row_vectors(&self) -> Vec<SparseVec<F>> {
        self.transpose().columns
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols() {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols()
            )));
        }
        let mut out = vec![F::zero(); self.rows];
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (r, y) in col {
                out[*r] = out[*r].clone() + y.clone() * x.clone();
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a sparse vector.
    pub fn mul_sparse(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut acc = Vec::new();
        for (c, x) in v {
            for (r, y) in &self.columns[*c] {
                acc.push((*r, y.clone() * x.clone()));
            }
        }
        normalize(acc)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let columns = other.columns.iter().map(|c| self.mul_sparse(c)).collect();
        Ok(Matrix {
            rows: self.rows,
            columns,
        })
    }

    pub fn scale_row(&mut self, r: usize, s: &F) {
        for col in &mut self.columns {
            if let Ok(k) = col.binary_search_by_key(&r, |(i, _)| *i) {
                col[k].1 = col[k].1.clone() * s.clone();
            }
        }
        for col in &mut self.columns {
            col.retain(|(_, x)| !x.is_zero());
        }
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|col| normalize(col.iter().map(|(r, x)| (perm[*r], x.clone())).collect()))
            .collect();
        Matrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Matrix {
            rows: self.rows,
            columns: idx.iter().map(|&c| self.columns[c].clone()).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                out[*r][c] = x.clone();
            }
        }
        out
    }

    /// Nonzero entries as `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
    }

    /// Reduced row echelon form of the rows by plain Gauss-Jordan elimination
    /// over `F`. Returns pivot columns and the reduced nonzero rows.
    pub fn gauss_jordan(&self) -> (Vec<usize>, Vec<Vec<F>>) {
        let mut a = self.to_dense();
        let (m, n) = (self.rows, self.cols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv();
            for x in &mut a[r][c..] {
                *x = x.clone() * inv.clone();
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (pivots, a)
    }

    /// Rank by dense Gauss-Jordan over `F`.
    pub fn rank_gauss_jordan(&self) -> usize {
        self.gauss_jordan().0.len()
    }

    /// Kernel basis by dense Gauss-Jordan over `F`, one column per free variable.
    pub fn kernel_gauss_jordan(&self) -> Self {
        let (pivots, rows) = self.gauss_jordan();
        let n = self.cols();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut columns = Vec::new();
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            let mut v = vec![(f, F::one())];
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v.push((p, -row[f].clone()));
                }
            }
            columns.push(normalize(v));
        }
        Matrix { rows: n, columns }
    }
}

impl<F: Field + fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols())?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}
