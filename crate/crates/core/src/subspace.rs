//! Coordinate subspaces stored by their canonical reduced row-echelon basis.

use std::fmt;

use crate::error::{LeibError, Result};
use crate::matrix::{axpy, is_zero_vector, Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Subspace of `F^ambient`. The basis is the RREF with zero rows dropped, so two
/// equal subspaces compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<I>(field: FieldSpec, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(LeibError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if !is_zero_vector(&v) {
                rows.push(v);
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, rows)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        if m.rows() == 0 {
            return Subspace::zero(m.field(), m.cols());
        }
        Self::from_matrix_rows(m)
    }

    fn from_matrix_rows(m: &Matrix) -> Self {
        let r = m.rref();
        let rows: Vec<Vector> = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        let basis = if rows.is_empty() {
            Matrix::zeros(m.field(), 0, m.cols())
        } else {
            Matrix::from_rows(m.field(), rows).expect("rref rows share the field")
        };
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: FieldSpec, ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices.iter().map(|&i| crate::matrix::unit_vector(field, ambient, i));
        Subspace::span(field, ambient, vectors).expect("unit vectors")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors, in canonical order.
    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors().map(<[Scalar]>::to_vec).collect()
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(LeibError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(LeibError::FieldMismatch {
                expected: self.field.label(),
                found: other.field.label(),
            });
        }
        if self.ambient != other.ambient {
            return Err(LeibError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let factor = -&out[p];
                axpy(&mut out, &factor, self.basis.row(i));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = crate::matrix::zero_vector(self.field, self.ambient);
        for (i, c) in coords.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(i));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for v in self.basis.row_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Subspace::span(self.field, self.ambient, self.vectors().into_iter().chain(other.vectors()))
    }

    pub fn with_vectors<I: IntoIterator<Item = Vector>>(&self, extra: I) -> Result<Subspace> {
        Subspace::span(self.field, self.ambient, self.vectors().into_iter().chain(extra))
    }

    /// Rows spanning the annihilator `{a : a . v = 0 for all v in self}` of the dual space.
    pub fn annihilator(&self) -> Matrix {
        let ann = self.basis.nullspace();
        ann.basis.clone()
    }

    /// Intersection via annihilators: `U ∩ V = ann(ann U + ann V)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let stacked = self.annihilator().vstack(&other.annihilator())?;
        if stacked.rows() == 0 {
            return Ok(Subspace::full(self.field, self.ambient));
        }
        Ok(stacked.nullspace())
    }

    /// `{v : map v ∈ self}` for a square map on the ambient space.
    pub fn preimage(&self, map: &Matrix) -> Result<Subspace> {
        if map.rows() != self.ambient {
            return Err(LeibError::DimensionMismatch {
                expected: self.ambient,
                found: map.rows(),
            });
        }
        let ann = self.annihilator();
        if ann.rows() == 0 {
            return Ok(Subspace::full(self.field, map.cols()));
        }
        Ok(ann.mul(map)?.nullspace())
    }

    /// Image of the subspace under `map`.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        let mut out = Vec::with_capacity(self.dim());
        for v in self.basis.row_vectors() {
            out.push(map.mul_vec(v)?);
        }
        Subspace::span(self.field, map.rows(), out)
    }

    /// True iff `map` sends the subspace into itself.
    pub fn is_invariant_under(&self, map: &Matrix) -> Result<bool> {
        for v in self.basis.row_vectors() {
            if !self.contains(&map.mul_vec(v)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Standard coordinates not used as pivots; they index a complement basis.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .row_vectors()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(Scalar::to_string).collect();
                format!("({})", cells.join(","))
            })
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn coordinate_sum_and_intersection() {
        let e1 = Subspace::coordinate(q(), 3, &[0]);
        let e2 = Subspace::coordinate(q(), 3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(q(), 3, &[0, 1]));
        let a = Subspace::coordinate(q(), 3, &[0, 1]);
        let b = Subspace::coordinate(q(), 3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), e2);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert!(matches!(
            a.sum(&Subspace::zero(q(), 2)),
            Err(LeibError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_equality() {
        let v = |xs: &[i64]| xs.iter().map(|&x| q().from_i64(x)).collect::<Vector>();
        let a = Subspace::span(q(), 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(q(), 3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&v(&[2, 3, 1])).unwrap());
        assert!(!a.contains(&v(&[0, 0, 1])).unwrap());
        let coords = a.coordinates(&v(&[2, 3, 1])).unwrap().unwrap();
        assert_eq!(a.combine(&coords), v(&[2, 3, 1]));
    }

    fn small_vectors(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-2i64..3, n), 0..n + 1)
    }

    proptest! {
        #[test]
        fn dimension_formula(a in small_vectors(4), b in small_vectors(4), fp in any::<bool>()) {
            let f = if fp { FieldSpec::PrimeField { p: 3 } } else { q() };
            let conv = |vs: &Vec<Vec<i64>>| vs.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect::<Vec<Vector>>();
            let u = Subspace::span(f, 4, conv(&a)).unwrap();
            let v = Subspace::span(f, 4, conv(&b)).unwrap();
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&v).unwrap());
            prop_assert!(u.is_subspace_of(&s).unwrap() && v.is_subspace_of(&s).unwrap());
        }
    }
}
