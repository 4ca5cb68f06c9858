//! Exact matrices with sparse row storage.
//!
//! Rows are kept sorted by column with no explicit zeros, so derived
//! equality is equality of matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

type Row = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Row>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

fn add_rows(a: &Row, b: &Row, scale: &Scalar) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = scale * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(scale * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn row_get(row: &Row, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, field.one())]).collect();
        Matrix { field, rows: n, cols: n, data }
    }

    /// Sums duplicate positions; zero results are dropped.
    pub fn from_entries<I>(field: Field, rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut by_row: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, c) in entries {
            assert!(i < rows && j < cols, "entry ({i},{j}) outside {rows}x{cols}");
            if !c.is_zero() {
                by_row[i].push((j, c));
            }
        }
        let data = by_row
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                let mut out: Row = Vec::with_capacity(r.len());
                for (j, c) in r {
                    match out.last_mut() {
                        Some(last) if last.0 == j => last.1 += &c,
                        _ => out.push((j, c)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect();
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries =
            rows.iter().enumerate().flat_map(|(i, r)| r.iter().cloned().enumerate().map(move |(j, c)| (i, j, c)));
        Matrix::from_entries(field, rows.len(), cols, entries)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rs: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        let mut m = Matrix::from_rows(field, &rs);
        if rows.is_empty() {
            m.cols = 0;
        }
        m
    }

    pub fn column(field: Field, values: &[Scalar]) -> Self {
        Matrix::from_entries(field, values.len(), 1, values.iter().cloned().enumerate().map(|(i, c)| (i, 0, c)))
    }

    pub fn row_vector(field: Field, values: &[Scalar]) -> Self {
        Matrix::column(field, values).transpose()
    }

    pub fn unit_vector(field: Field, n: usize, i: usize) -> Self {
        Matrix::from_entries(field, n, 1, [(i, 0, field.one())])
    }

    pub fn scalar(field: Field, c: Scalar) -> Self {
        Matrix::from_entries(field, 1, 1, [(0, 0, c)])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        row_get(&self.data[i], j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn row_entries(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, *j, c)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    /// Dense copy of column `j`.
    pub fn column_values(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn col(&self, j: usize) -> Matrix {
        let entries = self.data.iter().enumerate().filter_map(|(i, r)| row_get(r, j).map(|c| (i, 0, c.clone())));
        Matrix::from_entries(self.field, self.rows, 1, entries)
    }

    pub fn columns(&self) -> Vec<Matrix> {
        let t = self.transpose();
        (0..self.cols)
            .map(|j| Matrix { field: self.field, rows: self.rows, cols: 1, data: Vec::new() }.with_col_from(&t.data[j]))
            .collect()
    }

    fn with_col_from(mut self, row: &Row) -> Matrix {
        self.data = vec![Vec::new(); self.rows];
        for (i, c) in row {
            self.data[*i].push((0, c.clone()));
        }
        self
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().map(|&i| self.data[i].clone()).collect();
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &j) in idx.iter().enumerate() {
            pos[j] = k;
        }
        let entries = self.entries().filter(|e| pos[e.1] != usize::MAX).map(|(i, j, c)| (i, pos[j], c.clone()));
        Matrix::from_entries(self.field, self.rows, idx.len(), entries)
    }

    /// Column concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, c)| (j + self.cols, c.clone())));
                r
            })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hcat(field: Field, rows: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, rows, 0), |acc, m| acc.hstack(m))
    }

    pub fn vcat(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, 0, cols), |acc, m| acc.vstack(m))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<Row> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, c) in r {
                data[*j].push((i, c.clone()));
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape { op: "mul", left: self.shape(), right: other.shape() });
        }
        let zero = self.field.zero();
        let mut acc = vec![zero.clone(); other.cols];
        let mut touched = vec![false; other.cols];
        let mut list = Vec::new();
        let data = self
            .data
            .iter()
            .map(|r| {
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        if !touched[*j] {
                            touched[*j] = true;
                            list.push(*j);
                        }
                        acc[*j] += &(a * b);
                    }
                }
                list.sort_unstable();
                let mut out = Vec::with_capacity(list.len());
                for &j in &list {
                    touched[j] = false;
                    let v = core::mem::replace(&mut acc[j], zero.clone());
                    if !v.is_zero() {
                        out.push((j, v));
                    }
                }
                list.clear();
                out
            })
            .collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: other.cols, data })
    }

    /// Panics on shape mismatch; use [`Matrix::try_mul`] for checked products.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Left-to-right product `ms[0] * ms[1] * ...`.
    pub fn chain(ms: &[&Matrix]) -> Matrix {
        let mut it = ms.iter();
        let first = (*it.next().expect("empty chain")).clone();
        it.fold(first, |acc, m| acc.mul(m))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.axpy(&self.field.one(), other)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.axpy(&self.field.from_i64(-1), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in addition");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| add_rows(a, b, c)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.field, self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, c * v)).collect()).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.from_i64(-1))
    }

    /// `(A⊗B)[i·B.rows+k, j·B.cols+l] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (j, a) in ra {
                    for (l, b) in rb {
                        row.push((j * other.cols + l, a * b));
                    }
                }
                data.push(row);
            }
        }
        Matrix { field: self.field, rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    /// `I_p ⊗ self ⊗ I_q`.
    pub fn pad(&self, p: usize, q: usize) -> Matrix {
        let f = self.field;
        Matrix::identity(f, p).kron(self).kron(&Matrix::identity(f, q))
    }

    /// Kronecker product of a list of matrices.
    pub fn kron_all(field: Field, ms: &[&Matrix]) -> Matrix {
        ms.iter().fold(Matrix::identity(field, 1), |acc, m| acc.kron(m))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Row> = self.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == rows.len() {
                break;
            }
            // rows below r vanish left of `col`, so a pivot row starts exactly at `col`
            let Some(found) = (r..rows.len()).find(|&i| rows[i].first().is_some_and(|e| e.0 == col)) else {
                continue;
            };
            rows.swap(r, found);
            let inv = rows[r][0].1.inv().expect("nonzero pivot");
            if !inv.is_one() {
                for e in rows[r].iter_mut() {
                    e.1 = &e.1 * &inv;
                }
            }
            let pivot_row = core::mem::take(&mut rows[r]);
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                if let Some(c) = row_get(row, col) {
                    let c = -c;
                    *row = add_rows(row, &pivot_row, &c);
                }
            }
            rows[r] = pivot_row;
            pivots.push(col);
            r += 1;
        }
        rows.retain(|row| !row.is_empty());
        let mut data = rows;
        data.resize(self.rows, Vec::new());
        (Matrix { field: self.field, rows: self.rows, cols: self.cols, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one column per free variable in increasing order.
    pub fn kernel_basis(&self) -> Vec<Matrix> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![usize::MAX; self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            is_pivot[p] = k;
        }
        (0..self.cols)
            .filter(|&f| is_pivot[f] == usize::MAX)
            .map(|f| {
                let mut entries = vec![(f, 0, self.field.one())];
                for (k, &p) in pivots.iter().enumerate() {
                    if let Some(c) = row_get(&r.data[k], f) {
                        entries.push((p, 0, -c));
                    }
                }
                Matrix::from_entries(self.field, self.cols, 1, entries)
            })
            .collect()
    }

    /// Kernel basis as the columns of one matrix.
    pub fn kernel(&self) -> Matrix {
        let basis = self.kernel_basis();
        Matrix::hcat(self.field, self.cols, &basis)
    }

    /// One solution of `self · X = b` (free variables zero), or `None`.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.field != b.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != b.rows {
            return Err(Error::Shape { op: "solve", left: self.shape(), right: b.shape() });
        }
        let (r, pivots) = self.hstack(b).rref();
        if pivots.last().is_some_and(|&p| p >= self.cols) {
            return Ok(None);
        }
        let entries = pivots.iter().enumerate().flat_map(|(k, &p)| {
            r.data[k].iter().filter(|e| e.0 >= self.cols).map(move |(j, c)| (p, j - self.cols, c.clone()))
        });
        Ok(Some(Matrix::from_entries(self.field, self.cols, b.cols, entries)))
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let (r, pivots) = self.hstack(&Matrix::identity(self.field, self.rows)).rref();
        if pivots.len() < self.rows || pivots[self.rows - 1] >= self.cols {
            return Ok(None);
        }
        Ok(Some(r.select_cols(&(self.cols..2 * self.cols).collect::<Vec<_>>())))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            if let Some(c) = row_get(&self.data[i], i) {
                t += c;
            }
        }
        t
    }

    /// Matrix reshaped from row-major `rows×cols` data held in a column vector.
    pub fn unflatten(v: &Matrix, rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.rows, rows * cols);
        Matrix::from_entries(v.field, rows, cols, v.entries().map(|(i, _, c)| (i / cols, i % cols, c.clone())))
    }

    /// Row-major flattening into a column vector.
    pub fn flatten(&self) -> Matrix {
        let n = self.cols;
        Matrix::from_entries(self.field, self.rows * n, 1, self.entries().map(|(i, j, c)| (i * n + j, 0, c.clone())))
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((usize::MAX, usize::MAX));
        }
        let d = self.sub(other);
        let first = d.entries().next().map(|(i, j, _)| (i, j));
        first
    }
}

/// Permutes tensor factors: output factor `k` is input factor `perm[k]`.
pub fn tensor_permutation(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut entries = Vec::with_capacity(total);
    let mut digits = vec![0usize; dims.len()];
    for idx in 0..total {
        let mut rest = idx;
        for k in (0..dims.len()).rev() {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        let mut out = 0;
        for (k, &p) in perm.iter().enumerate() {
            out = out * out_dims[k] + digits[p];
        }
        entries.push((out, idx, field.one()));
    }
    Matrix::from_entries(field, total, total, entries)
}

/// The flip `V⊗W → W⊗V`.
pub fn swap(field: Field, m: usize, n: usize) -> Matrix {
    tensor_permutation(field, &[m, n], &[1, 0])
}

/// Sum `Σ_i e_i ⊗ e_i` as a column of length `n²`.
pub fn identity_element(field: Field, n: usize) -> Matrix {
    Matrix::identity(field, n).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::from_i64(q(), &[&[3], &[5]]);
        assert_eq!(a.solve(&b).unwrap(), Some(b));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_i64(q(), &[&[1, 1], &[2, 2]]);
        let b = Matrix::from_i64(q(), &[&[1], &[3]]);
        assert_eq!(a.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_zero_rhs_over_f2() {
        let f = Field::Prime(2);
        let a = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        let b = Matrix::zeros(f, 2, 1);
        assert_eq!(a.solve(&b).unwrap(), Some(Matrix::zeros(f, 2, 1)));
    }

    #[test]
    fn solve_rejects_field_mismatch() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::zeros(Field::Prime(3), 2, 1);
        assert_eq!(a.solve(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn kernels() {
        assert!(Matrix::identity(q(), 3).kernel_basis().is_empty());
        let k = Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![Matrix::from_i64(q(), &[&[-1], &[1]])]);
        let z = Matrix::zeros(q(), 2, 2).kernel_basis();
        assert_eq!(z, vec![Matrix::unit_vector(q(), 2, 0), Matrix::unit_vector(q(), 2, 1)]);
    }

    #[test]
    fn inverses() {
        let i4 = Matrix::identity(q(), 4);
        assert_eq!(i4.inverse().unwrap(), Some(i4.clone()));
        let p = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(p.inverse().unwrap(), Some(p.clone()));
        assert_eq!(Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]).inverse().unwrap(), None);
        assert!(Matrix::zeros(q(), 2, 3).inverse().is_err());
        let a = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]);
        let b = a.inverse().unwrap().unwrap();
        assert!(a.mul(&b).is_identity());
    }

    #[test]
    fn kronecker_basics() {
        let c = Matrix::from_i64(q(), &[&[3]]);
        let m = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        assert_eq!(c.kron(&m), m.scale(&q().from_i64(3)));
        assert!(Matrix::identity(q(), 2).kron(&Matrix::identity(q(), 3)).is_identity());
    }

    #[test]
    fn permutation_matches_swap() {
        let f = q();
        let a = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(f, &[&[5, 6, 7]]).transpose();
        let s1 = swap(f, 2, 3);
        let s2 = swap(f, 2, 1);
        // swap (a⊗b) = (b⊗a) swap
        assert_eq!(s1.mul(&a.kron(&b)), b.kron(&a).mul(&s2));
    }
}
