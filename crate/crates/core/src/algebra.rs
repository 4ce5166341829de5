//! Left Leibniz algebras given by structure constants, with their canonical
//! ideals, series and quotients.

use std::collections::HashSet;

use crate::error::{LeibError, Result};
use crate::matrix::{axpy, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::Subspace;

/// Finite-dimensional algebra with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Values built through [`LeibnizAlgebra::new`] satisfy the left Leibniz identity
/// `[a,[b,c]] = [[a,b],c] + [b,[a,c]]` on every basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    field: FieldSpec,
    names: Vec<String>,
    tensor: Vec<Scalar>,
}

/// A subspace certified to be a two-sided ideal of some algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraIdeal {
    space: Subspace,
}

impl AlgebraIdeal {
    pub fn new(algebra: &LeibnizAlgebra, space: Subspace) -> Result<Self> {
        if !algebra.is_ideal(&space)? {
            return Err(LeibError::NotAnIdeal);
        }
        Ok(AlgebraIdeal { space })
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

/// Quotient `A/I` on the complement spanned by the non-pivot coordinates of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    /// `q × n` matrix sending `A` onto quotient coordinates.
    pub projection: Matrix,
    /// `n × q` matrix embedding the complement basis back into `A`.
    pub lift: Matrix,
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Result<Vector> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Result<Vector> {
        self.lift.mul_vec(v)
    }

    /// Image of a subspace of `A` in the quotient.
    pub fn project_subspace(&self, s: &Subspace) -> Result<Subspace> {
        s.image(&self.projection)
    }

    /// Full preimage in `A` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace) -> Result<Subspace> {
        s.preimage(&self.projection)
    }
}

/// Derived and lower central series.
///
/// Lengths follow the convention that the length (class) is `k − 1` when the
/// `k`-th term is the first zero term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesProfile {
    pub derived: Vec<Subspace>,
    pub lower_central: Vec<Subspace>,
    pub derived_length: Option<usize>,
    pub nilpotency_class: Option<usize>,
}

impl SeriesProfile {
    pub fn is_solvable(&self) -> bool {
        self.derived_length.is_some()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

/// Accumulates structure constants by basis name.
pub struct TableBuilder {
    field: FieldSpec,
    names: Vec<String>,
    tensor: Vec<Scalar>,
}

impl TableBuilder {
    fn index(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown basis name {name}"))
    }

    /// Adds `Σ coeff·name` to `[left, right]`.
    pub fn product(mut self, left: &str, right: &str, value: &[(&str, i64)]) -> Self {
        let (i, j) = (self.index(left), self.index(right));
        let n = self.names.len();
        for &(name, c) in value {
            let k = self.index(name);
            let slot = &mut self.tensor[(i * n + j) * n + k];
            *slot = &*slot + &self.field.from_i64(c);
        }
        self
    }

    pub fn build(self) -> Result<LeibnizAlgebra> {
        LeibnizAlgebra::new(self.field, self.names, self.tensor)
    }
}

impl LeibnizAlgebra {
    /// Validating constructor.
    pub fn new(field: FieldSpec, names: Vec<String>, tensor: Vec<Scalar>) -> Result<Self> {
        let a = Self::new_unchecked(field, names, tensor)?;
        a.check_identity()?;
        Ok(a)
    }

    /// Checks shape, names and field but not the Leibniz identity.
    pub fn new_unchecked(field: FieldSpec, names: Vec<String>, tensor: Vec<Scalar>) -> Result<Self> {
        let n = names.len();
        if tensor.len() != n * n * n {
            return Err(LeibError::DimensionMismatch {
                expected: n * n * n,
                found: tensor.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(LeibError::Schema(format!("duplicate basis name {name:?}")));
            }
        }
        for s in &tensor {
            if s.field() != field {
                return Err(LeibError::FieldMismatch {
                    expected: field.label(),
                    found: s.field().label(),
                });
            }
        }
        Ok(LeibnizAlgebra { field, names, tensor })
    }

    pub fn builder<S: AsRef<str>>(field: FieldSpec, names: &[S]) -> TableBuilder {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        TableBuilder {
            field,
            names,
            tensor: vec![field.zero(); n * n * n],
        }
    }

    /// The abelian algebra on the given names.
    pub fn abelian<S: AsRef<str>>(field: FieldSpec, names: &[S]) -> Self {
        Self::builder(field, names).build().expect("zero table is Leibniz")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn product_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.tensor[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.product_basis(i, j)[k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(LeibError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `[e_i, v]`.
    fn left_apply(&self, i: usize, v: &[Scalar]) -> Vector {
        let mut out = self.zero_vector();
        for (m, vm) in v.iter().enumerate() {
            if !vm.is_zero() {
                axpy(&mut out, vm, self.product_basis(i, m));
            }
        }
        out
    }

    /// `[v, e_k]`.
    fn right_apply(&self, v: &[Scalar], k: usize) -> Vector {
        let mut out = self.zero_vector();
        for (m, vm) in v.iter().enumerate() {
            if !vm.is_zero() {
                axpy(&mut out, vm, self.product_basis(m, k));
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        let mut out = self.zero_vector();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    axpy(&mut out, &(ui * vj), self.product_basis(i, j));
                }
            }
        }
        Ok(out)
    }

    /// First basis triple violating the left Leibniz identity, if any.
    pub fn check_identity(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_basis(i, j).to_vec();
                for k in 0..n {
                    let lhs = self.left_apply(i, self.product_basis(j, k));
                    let mut rhs = self.right_apply(&ij, k);
                    let tail = self.left_apply(j, self.product_basis(i, k));
                    axpy(&mut rhs, &self.field.one(), &tail);
                    if lhs != rhs {
                        return Err(LeibError::IdentityViolation {
                            i,
                            j,
                            k,
                            lhs: lhs.iter().map(Scalar::to_string).collect(),
                            rhs: rhs.iter().map(Scalar::to_string).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff every square vanishes, i.e. the table is antisymmetric.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            is_zero_vector(self.product_basis(i, i))
                && (i + 1..n).all(|j| {
                    self.product_basis(i, j)
                        .iter()
                        .zip(self.product_basis(j, i))
                        .all(|(a, b)| (a + b).is_zero())
                })
        })
    }

    /// Matrix of `y ↦ [v, y]`.
    pub fn left_mult_matrix(&self, v: &[Scalar]) -> Result<Matrix> {
        self.check_len(v)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.right_apply(v, j)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `y ↦ [y, v]`.
    pub fn right_mult_matrix(&self, v: &[Scalar]) -> Result<Matrix> {
        self.check_len(v)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.left_apply(j, v)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        self.left_mult_matrix(&self.basis_vector(i)).expect("basis vector")
    }

    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        self.right_mult_matrix(&self.basis_vector(i)).expect("basis vector")
    }

    /// All `L_{e_i}` followed by all `R_{e_i}`; the subspaces stable under these are the ideals.
    pub fn multiplication_maps(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..n)
            .map(|i| self.left_mult_basis(i))
            .chain((0..n).map(|i| self.right_mult_basis(i)))
            .collect()
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != self.dim() {
            return Err(LeibError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        if s.field() != self.field {
            return Err(LeibError::FieldMismatch {
                expected: self.field.label(),
                found: s.field().label(),
            });
        }
        Ok(())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// `[U, V] = span{[u, v]}` over basis vectors.
    pub fn product_of_subspaces(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let vu = u.vectors();
        let vv = v.vectors();
        let mut out = Vec::with_capacity(vu.len() * vv.len());
        for a in &vu {
            for b in &vv {
                out.push(self.bracket(a, b)?);
            }
        }
        Subspace::span(self.field, self.dim(), out)
    }

    /// `Leib(A)`: spanned by `[e_i,e_i]` and `[e_i,e_j] + [e_j,e_i]`.
    pub fn leib_ideal(&self) -> Subspace {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            out.push(self.product_basis(i, i).to_vec());
            for j in i + 1..n {
                let s: Vector = self
                    .product_basis(i, j)
                    .iter()
                    .zip(self.product_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                out.push(s);
            }
        }
        Subspace::span(self.field, n, out).expect("vectors of length n")
    }

    /// Left center `{v : L_v = 0}`.
    pub fn left_center(&self) -> Subspace {
        // v ↦ L_v, flattened into an n² × n system.
        let n = self.dim();
        let mut sys = Matrix::zeros(self.field, n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sys.set(j * n + k, i, self.structure_constant(i, j, k).clone());
                }
            }
        }
        sys.nullspace()
    }

    /// Two-sided center `{v : L_v = 0 and R_v = 0}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut sys = Matrix::zeros(self.field, 2 * n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sys.set(j * n + k, i, self.structure_constant(i, j, k).clone());
                    sys.set(n * n + j * n + k, i, self.structure_constant(j, i, k).clone());
                }
            }
        }
        sys.nullspace()
    }

    /// `[A,S] + [S,A] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        self.check_subspace(s)?;
        let n = self.dim();
        for v in s.vectors() {
            for i in 0..n {
                if !s.contains(&self.left_apply(i, &v))? || !s.contains(&self.right_apply(&v, i))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `[S, S] ⊆ S`.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.product_of_subspaces(s, s)?.is_subspace_of(s)
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<AlgebraIdeal> {
        self.check_subspace(s)?;
        let space = spin(s, &self.multiplication_maps())?;
        Ok(AlgebraIdeal { space })
    }

    /// `A/I`, with structure constants induced on the non-pivot coordinates of `I`.
    pub fn quotient(&self, ideal: &AlgebraIdeal) -> Result<Quotient> {
        let space = ideal.space();
        self.check_subspace(space)?;
        let n = self.dim();
        let complement = space.non_pivot_columns();
        let q = complement.len();
        let mut projection = Matrix::zeros(self.field, q, n);
        for j in 0..n {
            let reduced = space.reduce(&self.basis_vector(j));
            for (a, &c) in complement.iter().enumerate() {
                projection.set(a, j, reduced[c].clone());
            }
        }
        let mut lift = Matrix::zeros(self.field, n, q);
        for (a, &c) in complement.iter().enumerate() {
            lift.set(c, a, self.field.one());
        }
        let mut tensor = Vec::with_capacity(q * q * q);
        for &ca in &complement {
            for &cb in &complement {
                tensor.extend(projection.mul_vec(self.product_basis(ca, cb))?);
            }
        }
        let names = complement.iter().map(|&c| self.names[c].clone()).collect();
        let algebra = LeibnizAlgebra::new_unchecked(self.field, names, tensor)?;
        Ok(Quotient {
            algebra,
            projection,
            lift,
            complement,
        })
    }

    /// Quotient by an arbitrary subspace, failing with `NotAnIdeal` when it is not one.
    pub fn quotient_by(&self, s: &Subspace) -> Result<Quotient> {
        let ideal = AlgebraIdeal::new(self, s.clone())?;
        self.quotient(&ideal)
    }

    /// The Lie algebra `A/Leib(A)`.
    pub fn lie_quotient(&self) -> Quotient {
        let leib = AlgebraIdeal {
            space: self.leib_ideal(),
        };
        self.quotient(&leib).expect("Leib(A) is an ideal")
    }

    /// Subalgebra `s` as a standalone algebra in the coordinates of its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LeibnizAlgebra> {
        self.check_subspace(s)?;
        let basis = s.vectors();
        let d = basis.len();
        let mut tensor = Vec::with_capacity(d * d * d);
        for a in &basis {
            for b in &basis {
                let prod = self.bracket(a, b)?;
                let coords = s
                    .coordinates(&prod)?
                    .ok_or_else(|| LeibError::InvalidParameter("subspace is not a subalgebra".into()))?;
                tensor.extend(coords);
            }
        }
        let names = (0..d)
            .map(|i| match single_coordinate(&basis[i]) {
                Some(c) => self.names[c].clone(),
                None => format!("b{}", i + 1),
            })
            .collect();
        LeibnizAlgebra::new_unchecked(self.field, names, tensor)
    }

    /// Series of `A` itself.
    pub fn series_profile(&self) -> SeriesProfile {
        self.subspace_series(&self.full_space()).expect("full space")
    }

    /// Derived and lower central series of the subalgebra `s` viewed as an algebra on its own:
    /// `S^(k+1) = [S^(k), S^(k)]` and `S^(k+1) = [S, S^k]`.
    pub fn subspace_series(&self, s: &Subspace) -> Result<SeriesProfile> {
        self.check_subspace(s)?;
        let (derived, derived_length) = self.chain(s, |cur| self.product_of_subspaces(cur, cur))?;
        let (lower_central, nilpotency_class) = self.chain(s, |cur| self.product_of_subspaces(s, cur))?;
        Ok(SeriesProfile {
            derived,
            lower_central,
            derived_length,
            nilpotency_class,
        })
    }

    fn chain<F>(&self, start: &Subspace, step: F) -> Result<(Vec<Subspace>, Option<usize>)>
    where
        F: Fn(&Subspace) -> Result<Subspace>,
    {
        let mut terms = vec![start.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                return Ok((terms.clone(), Some(terms.len() - 1)));
            }
            let next = step(last)?;
            if next == *last {
                return Ok((terms, None));
            }
            terms.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.series_profile().is_solvable()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series_profile().is_nilpotent()
    }

    /// `dim Z(A/Leib(A))`.
    pub fn quotient_center_dim(&self) -> usize {
        self.lie_quotient().algebra.left_center().dim()
    }

    /// Vector in standard coordinates written with basis names, e.g. `2*x - 1/2*y`.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(&self.names, v)
    }

    pub fn format_subspace(&self, s: &Subspace) -> String {
        let parts: Vec<String> = s.vectors().iter().map(|v| self.format_vector(v)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

fn single_coordinate(v: &[Scalar]) -> Option<usize> {
    let mut hit = None;
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            if hit.is_some() || !x.is_one() {
                return None;
            }
            hit = Some(i);
        }
    }
    hit
}

pub fn format_combination(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Smallest subspace containing `start` and stable under every map.
pub fn spin(start: &Subspace, maps: &[Matrix]) -> Result<Subspace> {
    let mut current = start.clone();
    let mut queue: Vec<Vector> = start.vectors();
    while let Some(w) = queue.pop() {
        if current.is_full() {
            break;
        }
        for m in maps {
            let u = m.mul_vec(&w)?;
            if !current.contains(&u)? {
                current = current.with_vectors([u.clone()])?;
                queue.push(u);
            }
        }
    }
    Ok(current)
}

/// Largest subspace of `start` stable under every map: `V ← ⋂_T V ∩ T⁻¹(V)` until stable.
pub fn largest_invariant_subspace(start: &Subspace, maps: &[Matrix]) -> Result<(Subspace, Vec<usize>)> {
    let mut current = start.clone();
    let mut trace = vec![current.dim()];
    loop {
        let mut next = current.clone();
        for m in maps {
            next = next.intersect(&current.preimage(m)?)?;
        }
        if next == current {
            return Ok((current, trace));
        }
        current = next;
        trace.push(current.dim());
    }
}
