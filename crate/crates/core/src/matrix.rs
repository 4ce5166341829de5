//! Dense matrices over a [`FieldSpec`] and Gaussian elimination.

use std::fmt;

use crate::error::{LeibError, Result};
use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::Subspace;

/// Coordinate vector in some fixed basis.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += factor * v`.
pub fn axpy(acc: &mut [Scalar], factor: &Scalar, v: &[Scalar]) {
    if factor.is_zero() {
        return;
    }
    let neg = -factor;
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            a.sub_mul_assign(&neg, b);
        }
    }
}

pub fn scale_vector(factor: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| factor * x).collect()
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Row-major dense matrix with all entries in one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn check_field(field: FieldSpec, s: &Scalar) -> Result<()> {
    if s.field() != field {
        return Err(LeibError::FieldMismatch {
            expected: field.label(),
            found: s.field().label(),
        });
    }
    Ok(())
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged rows and foreign-field entries.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LeibError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for s in &row {
                check_field(field, s)?;
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Integer entries, mostly for constructors and tests.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().map(|&x| field.from_i64(x))).collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LeibError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, s) in col.iter().enumerate() {
                check_field(field, s)?;
                m.data[i * m.cols + j] = s.clone();
            }
        }
        Ok(m)
    }

    /// Reshapes a row-major flat vector.
    pub fn from_flat(field: FieldSpec, rows: usize, cols: usize, data: Vector) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(LeibError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        for s in &data {
            check_field(field, s)?;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "scalar field mismatch");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn as_flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_flat(self) -> Vector {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(LeibError::FieldMismatch {
                expected: self.field.label(),
                found: other.field.label(),
            });
        }
        Ok(())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LeibError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            data: add_vectors(&self.data, &other.data),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            data: sub_vectors(&self.data, &other.data),
            ..self.clone()
        })
    }

    pub fn scale(&self, factor: &Scalar) -> Matrix {
        Matrix {
            data: scale_vector(factor, &self.data),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LeibError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let acc = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    axpy(acc, a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(LeibError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            check_field(self.field, x)?;
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    o.add_assign_ref(&(a * x));
                }
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(LeibError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Unique reduced row-echelon form, first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..cols {
                let v = &m.data[r * cols + j] * &inv;
                m.data[r * cols + j] = v;
            }
            let pivot_row: Vector = m.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                let row = &mut m.data[i * cols + c..(i + 1) * cols];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        x.sub_mul_assign(&factor, p);
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

    /// Kernel `{v : self * v = 0}` in canonical form.
    pub fn nullspace(&self) -> Subspace {
        let fast = match self.field {
            FieldSpec::Rationals => crate::modular::rational_kernel(self),
            FieldSpec::PrimeField { p } => Some(crate::modular::prime_kernel(self, p)),
        };
        if let Some(vectors) = fast {
            return Subspace::span(self.field, self.cols, vectors).expect("kernel vectors are well formed");
        }
        let Rref { matrix, pivots, .. } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vector(self.field, n);
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(i, free);
            }
            vectors.push(v);
        }
        Subspace::span(self.field, n, vectors).expect("kernel vectors are well formed")
    }

    /// One solution of `self * x = rhs` with every free variable zero, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vector>> {
        if rhs.len() != self.rows {
            return Err(LeibError::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        for s in rhs {
            check_field(self.field, s)?;
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.field, self.rows, n + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..n {
                aug.data[r * (n + 1) + c] = self.get(r, c).clone();
            }
            aug.data[r * (n + 1) + n] = b.clone();
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = zero_vector(self.field, n);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(i, n).clone();
        }
        Ok(Some(x))
    }

    pub fn pow(&self, mut exp: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(LeibError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// True iff `self^n = 0` for the side length `n`.
    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.pow(self.rows as u32)?.is_zero())
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(LeibError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t.add_assign_ref(self.get(i, i));
        }
        Ok(t)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.data[r * 2 * n + n + r] = self.field.one();
        }
        let Rref { matrix, rank, pivots } = aug.rref();
        if rank < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = matrix.get(r, n + c).clone();
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Scalar::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
