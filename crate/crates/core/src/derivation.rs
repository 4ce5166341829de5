//! Derivation algebras, inner derivations, and characteristic ideals.

use crate::algebra::{spin, LeibnizAlgebra};
use crate::error::{LeibError, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Canonical basis of `Der(A)`: the RREF basis of the solution space of the
/// derivation law, with each solution reshaped into an `n × n` matrix whose
/// `j`-th column is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBasis {
    n: usize,
    space: Subspace,
    mats: Vec<Matrix>,
    /// Flattened basis as columns, present when the basis is not the canonical one.
    columns: Option<Matrix>,
}

/// Result of an innerness test. When `witness` is `Some(x)`, every column of
/// `delta − L_x` lies in `Leib(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerWitness {
    pub delta: Matrix,
    pub witness: Option<Vector>,
}

impl InnerWitness {
    pub fn is_inner(&self) -> bool {
        self.witness.is_some()
    }
}

/// The `n³ × n²` system whose kernel is `Der(A)`; the unknown `δ[r][c]` sits at column `r·n + c`.
fn derivation_system(a: &LeibnizAlgebra) -> Matrix {
    let n = a.dim();
    let field = a.field();
    let mut sys = Matrix::zeros(field, n * n * n, n * n);
    // Row (i, j, k): coefficient of e_k in δ[e_i,e_j] − [δe_i, e_j] − [e_i, δe_j].
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let c_ijm = a.structure_constant(i, j, m);
                if !c_ijm.is_zero() {
                    for k in 0..n {
                        let row = (i * n + j) * n + k;
                        let col = k * n + m;
                        let cur = sys.get(row, col) + c_ijm;
                        sys.set(row, col, cur);
                    }
                }
            }
            for k in 0..n {
                let row = (i * n + j) * n + k;
                for m in 0..n {
                    let c_mjk = a.structure_constant(m, j, k);
                    if !c_mjk.is_zero() {
                        let col = m * n + i;
                        let cur = sys.get(row, col) - c_mjk;
                        sys.set(row, col, cur);
                    }
                    let c_imk = a.structure_constant(i, m, k);
                    if !c_imk.is_zero() {
                        let col = m * n + j;
                        let cur = sys.get(row, col) - c_imk;
                        sys.set(row, col, cur);
                    }
                }
            }
        }
    }
    sys
}

pub fn derivation_basis(a: &LeibnizAlgebra) -> DerivationBasis {
    let n = a.dim();
    let space = if n == 0 {
        Subspace::zero(a.field(), 0)
    } else {
        derivation_system(a).nullspace()
    };
    let mats = space
        .vectors()
        .into_iter()
        .map(|v| Matrix::from_flat(a.field(), n, n, v).expect("n² entries"))
        .collect();
    DerivationBasis {
        n,
        space,
        mats,
        columns: None,
    }
}

impl DerivationBasis {
    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// `Der(A)` as a subspace of flattened `n × n` matrices.
    pub fn flat_space(&self) -> &Subspace {
        &self.space
    }

    /// Replaces the canonical basis by `mats`, which must be a basis of `Der(A)`.
    pub fn from_matrices(a: &LeibnizAlgebra, mats: Vec<Matrix>) -> Result<Self> {
        let n = a.dim();
        for m in &mats {
            if !is_derivation(a, m)? {
                return Err(LeibError::NotADerivation);
            }
        }
        let canonical = derivation_basis(a);
        let space = Subspace::span(a.field(), n * n, mats.iter().map(|m| m.as_flat().to_vec()))?;
        if space.dim() != mats.len() || space != canonical.space {
            return Err(LeibError::InvalidParameter(format!(
                "{} matrices do not form a basis of the {}-dimensional derivation algebra",
                mats.len(),
                canonical.dim()
            )));
        }
        let flat: Vec<Vector> = mats.iter().map(|m| m.as_flat().to_vec()).collect();
        let columns = if flat.is_empty() {
            None
        } else {
            Some(Matrix::from_columns(a.field(), n * n, &flat)?)
        };
        Ok(DerivationBasis {
            n,
            space,
            mats,
            columns,
        })
    }

    /// Coordinates of `m` in this basis, or `None` if `m` is not a derivation.
    pub fn coordinates(&self, m: &Matrix) -> Result<Option<Vector>> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(LeibError::DimensionMismatch {
                expected: self.n * self.n,
                found: m.rows() * m.cols(),
            });
        }
        match &self.columns {
            None => self.space.coordinates(m.as_flat()),
            Some(cols) => {
                if !self.space.contains(m.as_flat())? {
                    return Ok(None);
                }
                cols.solve(m.as_flat())
            }
        }
    }

    /// `Σ cᵢ δᵢ`.
    pub fn combine(&self, coords: &[Scalar]) -> Matrix {
        let field = self.space.field();
        let mut flat = crate::matrix::zero_vector(field, self.n * self.n);
        for (c, m) in coords.iter().zip(&self.mats) {
            crate::matrix::axpy(&mut flat, c, m.as_flat());
        }
        Matrix::from_flat(field, self.n, self.n, flat).expect("n² entries")
    }

    /// True iff every basis derivation maps `s` into itself.
    pub fn preserves(&self, s: &Subspace) -> Result<bool> {
        for d in &self.mats {
            if !s.is_invariant_under(d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal and stable under every derivation.
    pub fn is_characteristic_ideal(&self, a: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
        Ok(a.is_ideal(s)? && self.preserves(s)?)
    }

    /// `L_{e_i}`, `R_{e_i}` and the derivation basis; characteristic ideals are exactly
    /// the subspaces stable under all of them.
    pub fn characteristic_maps(&self, a: &LeibnizAlgebra) -> Vec<Matrix> {
        let mut maps = a.multiplication_maps();
        maps.extend(self.mats.iter().cloned());
        maps
    }

    /// Smallest characteristic ideal containing `s`.
    pub fn characteristic_closure(&self, a: &LeibnizAlgebra, s: &Subspace) -> Result<Subspace> {
        spin(s, &self.characteristic_maps(a))
    }
}

pub fn is_derivation(a: &LeibnizAlgebra, m: &Matrix) -> Result<bool> {
    let n = a.dim();
    if m.rows() != n || m.cols() != n {
        return Err(LeibError::DimensionMismatch {
            expected: n * n,
            found: m.rows() * m.cols(),
        });
    }
    if m.field() != a.field() {
        return Err(LeibError::FieldMismatch {
            expected: a.field().label(),
            found: m.field().label(),
        });
    }
    let images = m.columns();
    for i in 0..n {
        for j in 0..n {
            let lhs = m.mul_vec(a.product_basis(i, j))?;
            let r1 = a.bracket(&images[i], &a.basis_vector(j))?;
            let r2 = a.bracket(&a.basis_vector(i), &images[j])?;
            let rhs: Vector = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Canonical `x` with `π∘δ = π∘L_x`, where `π` projects modulo `Leib(A)`.
///
/// The system is linear in `x`; among its solutions the one with all free
/// coordinates zero is returned.
pub fn inner_witness(a: &LeibnizAlgebra, delta: &Matrix) -> Result<InnerWitness> {
    if !is_derivation(a, delta)? {
        return Err(LeibError::NotADerivation);
    }
    let leib = a.leib_ideal();
    Ok(inner_witness_unchecked(a, &leib, delta))
}

pub(crate) fn inner_witness_unchecked(a: &LeibnizAlgebra, leib: &Subspace, delta: &Matrix) -> InnerWitness {
    let n = a.dim();
    let field = a.field();
    let comp = leib.non_pivot_columns();
    let q = comp.len();
    // Row (j, c): coordinate c of π([e_i, e_j]) for unknown x_i.
    let mut sys = Matrix::zeros(field, n * q, n);
    let mut rhs = Vec::with_capacity(n * q);
    let images = delta.columns();
    for (j, image) in images.iter().enumerate() {
        let target = leib.reduce(image);
        rhs.extend(comp.iter().map(|&c| target[c].clone()));
        for i in 0..n {
            let prod = leib.reduce(a.product_basis(i, j));
            for (ci, &c) in comp.iter().enumerate() {
                sys.set(j * q + ci, i, prod[c].clone());
            }
        }
    }
    let witness = if n * q == 0 {
        Some(a.zero_vector())
    } else {
        sys.solve(&rhs).expect("consistent shapes")
    };
    InnerWitness {
        delta: delta.clone(),
        witness,
    }
}

/// Every derivation is inner.
///
/// Innerness is linear in `δ` (the witness system has `δ` only on the right-hand
/// side), so checking the canonical basis suffices.
pub fn all_derivations_inner(a: &LeibnizAlgebra, der: &DerivationBasis) -> bool {
    inner_witnesses(a, der).iter().all(InnerWitness::is_inner)
}

pub fn inner_witnesses(a: &LeibnizAlgebra, der: &DerivationBasis) -> Vec<InnerWitness> {
    let leib = a.leib_ideal();
    der.matrices()
        .iter()
        .map(|d| inner_witness_unchecked(a, &leib, d))
        .collect()
}

pub fn is_characteristic_ideal(a: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    derivation_basis(a).is_characteristic_ideal(a, s)
}

pub fn characteristic_closure(a: &LeibnizAlgebra, s: &Subspace) -> Result<Subspace> {
    derivation_basis(a).characteristic_closure(a, s)
}
