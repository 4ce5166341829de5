//! Constructors for the algebra families used throughout the crate, a named
//! catalog with expected invariants, and a seeded change-of-basis fuzzer.

use crate::algebra::LeibnizAlgebra;
use crate::error::{LeibError, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::subspace::Subspace;

/// Cyclic algebra `span{x, x², …, xⁿ}` with `[x, xⁱ] = xⁱ⁺¹` and `[x, xⁿ] = Σ kᵢ xⁱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSpec {
    pub n: usize,
    /// `k₂ … kₙ`.
    pub coeffs: Vec<Scalar>,
}

impl CyclicSpec {
    pub fn new(n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if n < 2 {
            return Err(LeibError::InvalidParameter(format!("cyclic dimension must be at least 2, got {n}")));
        }
        if coeffs.len() != n - 1 {
            return Err(LeibError::DimensionMismatch {
                expected: n - 1,
                found: coeffs.len(),
            });
        }
        Ok(CyclicSpec { n, coeffs })
    }

    pub fn nilpotent(n: usize, field: FieldSpec) -> Result<Self> {
        Self::new(n, vec![field.zero(); n.saturating_sub(1)])
    }

    pub fn from_i64(n: usize, field: FieldSpec, coeffs: &[i64]) -> Result<Self> {
        Self::new(n, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn field(&self) -> FieldSpec {
        self.coeffs[0].field()
    }
}

fn cyclic_names(n: usize) -> Vec<String> {
    std::iter::once("x".to_string())
        .chain((2..=n).map(|i| format!("x{i}")))
        .collect()
}

pub fn make_cyclic(spec: &CyclicSpec) -> Result<LeibnizAlgebra> {
    let n = spec.n;
    let field = spec.field();
    let mut tensor = vec![field.zero(); n * n * n];
    for i in 0..n - 1 {
        tensor[i * n + i + 1] = field.one();
    }
    for (idx, k) in spec.coeffs.iter().enumerate() {
        tensor[(n - 1) * n + idx + 1] = k.clone();
    }
    LeibnizAlgebra::new(field, cyclic_names(n), tensor)
}

pub fn cyclic_nilpotent(n: usize, field: FieldSpec) -> LeibnizAlgebra {
    make_cyclic(&CyclicSpec::nilpotent(n, field).expect("n >= 2")).expect("cyclic tables are Leibniz")
}

/// Every pattern `kᵢ ∈ {0, 1}` with at least one `1`.
pub fn cyclic_sweep(n: usize, field: FieldSpec) -> Vec<CyclicSpec> {
    let m = n - 1;
    (1u32..(1 << m))
        .map(|mask| {
            let coeffs = (0..m).map(|b| field.from_i64(((mask >> b) & 1) as i64)).collect();
            CyclicSpec::new(n, coeffs).expect("n >= 2")
        })
        .collect()
}

/// Closed-form derivation bases of cyclic algebras.
///
/// Nilpotent case: `δ₁ = diag(1, …, n)` and `δ_k : xⁱ ↦ xⁱ⁺ᵏ⁻¹` (truncated) for `2 ≤ k ≤ n`.
/// Otherwise `δ₁ = L_x` and `δ_k = δ₁ᵏ` for `k ≤ n − 1`.
pub fn expected_cyclic_der(spec: &CyclicSpec) -> Vec<Matrix> {
    let n = spec.n;
    let field = spec.field();
    if spec.is_nilpotent() {
        let mut out = Vec::with_capacity(n);
        let mut d1 = Matrix::zeros(field, n, n);
        for i in 0..n {
            d1.set(i, i, field.from_i64(i as i64 + 1));
        }
        out.push(d1);
        for k in 2..=n {
            let mut d = Matrix::zeros(field, n, n);
            for i in 1..=n {
                let target = i + k - 1;
                if target <= n {
                    d.set(target - 1, i - 1, field.one());
                }
            }
            out.push(d);
        }
        out
    } else {
        let mut d1 = Matrix::zeros(field, n, n);
        for i in 0..n - 1 {
            d1.set(i + 1, i, field.one());
        }
        for (idx, k) in spec.coeffs.iter().enumerate() {
            d1.set(idx + 1, n - 1, k.clone());
        }
        let mut out = vec![d1.clone()];
        for _ in 2..n {
            let next = out.last().expect("nonempty").mul(&d1).expect("square");
            out.push(next);
        }
        out
    }
}

/// The four-dimensional nilpotent algebra on `w, x, y, z` with
/// `[x,x] = z, [w,x] = y, [x,w] = −y + z, [w,y] = z, [y,w] = −z`.
pub fn example_3_8() -> LeibnizAlgebra {
    LeibnizAlgebra::builder(FieldSpec::Rationals, &["w", "x", "y", "z"])
        .product("x", "x", &[("z", 1)])
        .product("w", "x", &[("y", 1)])
        .product("x", "w", &[("y", -1), ("z", 1)])
        .product("w", "y", &[("z", 1)])
        .product("y", "w", &[("z", -1)])
        .build()
        .expect("valid table")
}

/// The derivations `δ₁…δ₄` of [`example_3_8`] in the basis `(w, x, y, z)`.
pub fn example_3_8_derivations() -> Vec<Matrix> {
    let q = FieldSpec::Rationals;
    // Column j is the image of the j-th basis vector.
    let d1 = Matrix::from_i64(q, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]]);
    let d2 = Matrix::from_i64(q, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0]]);
    let d3 = Matrix::from_i64(q, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let d4 = Matrix::from_i64(q, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 1, 0, 0]]);
    vec![d1, d2, d3, d4]
}

/// `sl₂` on `(e, h, f)` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::builder(field, &["e", "h", "f"])
        .product("h", "e", &[("e", 2)])
        .product("e", "h", &[("e", -2)])
        .product("h", "f", &[("f", -2)])
        .product("f", "h", &[("f", 2)])
        .product("e", "f", &[("h", 1)])
        .product("f", "e", &[("h", -1)])
        .build()
        .expect("valid table")
}

/// Three-dimensional Heisenberg Lie algebra `[x,y] = z`.
pub fn heisenberg(field: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::builder(field, &["x", "y", "z"])
        .product("x", "y", &[("z", 1)])
        .product("y", "x", &[("z", -1)])
        .build()
        .expect("valid table")
}

pub fn abelian(k: usize, field: FieldSpec) -> LeibnizAlgebra {
    let names: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
    LeibnizAlgebra::abelian(field, &names)
}

/// `A ⊕ B` with each basis name suffixed by `1` or `2`.
pub fn direct_sum(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
    if a.field() != b.field() {
        return Err(LeibError::FieldMismatch {
            expected: a.field().label(),
            found: b.field().label(),
        });
    }
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut tensor = vec![field.zero(); n * n * n];
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                tensor[(i * n + j) * n + k] = a.structure_constant(i, j, k).clone();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                tensor[((na + i) * n + na + j) * n + na + k] = b.structure_constant(i, j, k).clone();
            }
        }
    }
    let names = a
        .names()
        .iter()
        .map(|s| format!("{s}1"))
        .chain(b.names().iter().map(|s| format!("{s}2")))
        .collect();
    LeibnizAlgebra::new(field, names, tensor)
}

/// Natural two-dimensional `sl₂`-module, matrices for `(e, h, f)`.
pub fn sl2_natural_module(field: FieldSpec) -> Vec<Matrix> {
    vec![
        Matrix::from_i64(field, &[&[0, 1], &[0, 0]]),
        Matrix::from_i64(field, &[&[1, 0], &[0, -1]]),
        Matrix::from_i64(field, &[&[0, 0], &[1, 0]]),
    ]
}

/// Adjoint module of a Lie algebra: `ρ(e_i) = L_{e_i}`.
pub fn adjoint_module(lie: &LeibnizAlgebra) -> Vec<Matrix> {
    (0..lie.dim()).map(|i| lie.left_mult_basis(i)).collect()
}

/// Hemisemidirect product `S ⊕ M` with `[s + m, s' + m'] = [s, s'] + ρ(s)m'`.
pub fn make_hemisemidirect(lie: &LeibnizAlgebra, action: &[Matrix]) -> Result<LeibnizAlgebra> {
    if !lie.is_lie() {
        return Err(LeibError::NotLie);
    }
    let s = lie.dim();
    if action.len() != s {
        return Err(LeibError::DimensionMismatch {
            expected: s,
            found: action.len(),
        });
    }
    let field = lie.field();
    let m = action.first().map_or(0, Matrix::rows);
    for rho in action {
        if rho.rows() != m || rho.cols() != m || rho.field() != field {
            return Err(LeibError::NotAModule("action matrices must be square of one size over the algebra's field".into()));
        }
    }
    for a in 0..s {
        for b in 0..s {
            let mut bracket_image = Matrix::zeros(field, m, m);
            for (k, c) in lie.product_basis(a, b).iter().enumerate() {
                if !c.is_zero() {
                    bracket_image = bracket_image.add(&action[k].scale(c))?;
                }
            }
            if bracket_image != action[a].commutator(&action[b])? {
                return Err(LeibError::NotAModule(format!(
                    "ρ([{}, {}]) differs from [ρ({}), ρ({})]",
                    lie.names()[a],
                    lie.names()[b],
                    lie.names()[a],
                    lie.names()[b]
                )));
            }
        }
    }
    let n = s + m;
    let mut tensor = vec![field.zero(); n * n * n];
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                tensor[(i * n + j) * n + k] = lie.structure_constant(i, j, k).clone();
            }
        }
        for j in 0..m {
            for k in 0..m {
                tensor[(i * n + s + j) * n + s + k] = action[i].get(k, j).clone();
            }
        }
    }
    let names = lie
        .names()
        .iter()
        .cloned()
        .chain((1..=m).map(|i| format!("v{i}")))
        .collect();
    LeibnizAlgebra::new(field, names, tensor)
}

/// Output of [`make_current_truncated`].
#[derive(Clone, Debug)]
pub struct CurrentAlgebra {
    pub algebra: LeibnizAlgebra,
    /// `1 ⊗ d/dx`.
    pub delta: Matrix,
    /// `L ⊗ N`, the span of `a ⊗ xᵗ` with `t ≥ 1`.
    pub ln: Subspace,
}

/// `L ⊗ F[x]/(xᵖ)` with `[a⊗y, b⊗z] = [a,b]⊗yz`, basis `a⊗xᵗ` ordered by `t` then by `a`,
/// named `a_t`.
pub fn make_current_truncated(lie: &LeibnizAlgebra, p: u64) -> Result<CurrentAlgebra> {
    let field = FieldSpec::prime(p)?;
    if lie.field() != field {
        return Err(LeibError::FieldMismatch {
            expected: field.label(),
            found: lie.field().label(),
        });
    }
    if !lie.is_lie() {
        return Err(LeibError::NotLie);
    }
    let d = lie.dim();
    let pp = p as usize;
    let n = d * pp;
    let idx = |t: usize, a: usize| t * d + a;
    let mut tensor = vec![field.zero(); n * n * n];
    for s in 0..pp {
        for t in 0..pp - s {
            for a in 0..d {
                for b in 0..d {
                    for (c, coef) in lie.product_basis(a, b).iter().enumerate() {
                        tensor[(idx(s, a) * n + idx(t, b)) * n + idx(s + t, c)] = coef.clone();
                    }
                }
            }
        }
    }
    let names = (0..pp)
        .flat_map(|t| lie.names().iter().map(move |a| format!("{a}_{t}")))
        .collect();
    let algebra = LeibnizAlgebra::new(field, names, tensor)?;
    let mut delta = Matrix::zeros(field, n, n);
    for t in 1..pp {
        for a in 0..d {
            delta.set(idx(t - 1, a), idx(t, a), field.from_i64(t as i64));
        }
    }
    let ln_coords: Vec<usize> = (d..n).collect();
    let ln = Subspace::coordinate(field, n, &ln_coords);
    Ok(CurrentAlgebra { algebra, delta, ln })
}

/// Park–Miller style generator: `x ← 48271·x mod (2³¹ − 1)`.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MODULUS: u64 = (1 << 31) - 1;
    pub const MULTIPLIER: u64 = 48271;

    pub fn new(seed: u64) -> Self {
        let s = seed % Self::MODULUS;
        Lcg {
            state: if s == 0 { 1 } else { s },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state * Self::MULTIPLIER % Self::MODULUS;
        self.state
    }

    /// Uniform-ish integer in `[lo, hi]`.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

/// Entries of random transforms are drawn from this range.
pub const BASIS_CHANGE_RANGE: (i64, i64) = (-3, 3);

/// Seeded invertible matrix; seed 0 gives the identity.
pub fn random_invertible(field: FieldSpec, n: usize, seed: u64) -> Matrix {
    if seed == 0 {
        return Matrix::identity(field, n);
    }
    let mut rng = Lcg::new(seed);
    loop {
        let data: Vector = (0..n * n)
            .map(|_| field.from_i64(rng.next_in(BASIS_CHANGE_RANGE.0, BASIS_CHANGE_RANGE.1)))
            .collect();
        let m = Matrix::from_flat(field, n, n, data).expect("n*n entries");
        if m.is_invertible() {
            return m;
        }
    }
}

/// Rewrites `A` in the basis given by the columns of a seeded invertible matrix `P`.
pub fn random_basis_change(a: &LeibnizAlgebra, seed: u64) -> Result<(LeibnizAlgebra, Matrix)> {
    let n = a.dim();
    let field = a.field();
    let p = random_invertible(field, n, seed);
    let out = change_basis(a, &p)?;
    Ok((out, p))
}

/// New structure constants for the basis `f_i = P e_i`: `c'(i, j) = P⁻¹ [P e_i, P e_j]`.
pub fn change_basis(a: &LeibnizAlgebra, p: &Matrix) -> Result<LeibnizAlgebra> {
    let n = a.dim();
    let pinv = p
        .inverse()
        .ok_or_else(|| LeibError::InvalidParameter("basis change matrix is singular".into()))?;
    let cols = p.columns();
    let mut tensor = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            tensor.extend(pinv.mul_vec(&a.bracket(&cols[i], &cols[j])?)?);
        }
    }
    LeibnizAlgebra::new(a.field(), a.names().to_vec(), tensor)
}

/// Expected invariants recorded alongside a catalog entry. `None` means "not asserted".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectations {
    pub der_dim: Option<usize>,
    pub leib_dim: Option<usize>,
    pub quotient_center_dim: Option<usize>,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub all_inner: Option<bool>,
    pub complete: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LeibnizAlgebra,
    pub expected: Expectations,
}

fn entry(name: impl Into<String>, algebra: LeibnizAlgebra, expected: Expectations) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        algebra,
        expected,
    }
}

pub fn hemi_sl2_natural() -> LeibnizAlgebra {
    let q = FieldSpec::Rationals;
    make_hemisemidirect(&sl2(q), &sl2_natural_module(q)).expect("natural module")
}

pub fn hemi_sl2_adjoint() -> LeibnizAlgebra {
    let s = sl2(FieldSpec::Rationals);
    make_hemisemidirect(&s, &adjoint_module(&s)).expect("adjoint module")
}

pub fn current_sl2(p: u64) -> Result<CurrentAlgebra> {
    make_current_truncated(&sl2(FieldSpec::prime(p)?), p)
}

/// Named algebras with their expected invariants.
pub fn catalog() -> Vec<CatalogEntry> {
    let q = FieldSpec::Rationals;
    let f5 = FieldSpec::PrimeField { p: 5 };
    let mut out = vec![entry(
        "example_3_8",
        example_3_8(),
        Expectations {
            der_dim: Some(4),
            leib_dim: Some(1),
            quotient_center_dim: Some(1),
            solvable: Some(true),
            nilpotent: Some(true),
            all_inner: Some(true),
            complete: Some(false),
        },
    )];
    for n in 2..=6 {
        out.push(entry(
            format!("cyclic_nilpotent_{n}"),
            cyclic_nilpotent(n, q),
            Expectations {
                der_dim: Some(n),
                leib_dim: Some(n - 1),
                quotient_center_dim: Some(1),
                solvable: Some(true),
                nilpotent: Some(true),
                all_inner: Some(false),
                complete: Some(false),
            },
        ));
    }
    for n in 2..=6 {
        let mut coeffs = vec![0; n - 1];
        coeffs[n - 2] = 1;
        let spec = CyclicSpec::from_i64(n, q, &coeffs).expect("n >= 2");
        out.push(entry(
            format!("cyclic_solvable_{n}"),
            make_cyclic(&spec).expect("cyclic"),
            Expectations {
                der_dim: Some(n - 1),
                leib_dim: Some(n - 1),
                quotient_center_dim: Some(1),
                solvable: Some(true),
                nilpotent: Some(false),
                all_inner: Some(true),
                complete: Some(false),
            },
        ));
    }
    out.push(entry(
        "heisenberg",
        heisenberg(q),
        Expectations {
            der_dim: Some(6),
            leib_dim: Some(0),
            quotient_center_dim: Some(1),
            solvable: Some(true),
            nilpotent: Some(true),
            all_inner: Some(false),
            complete: Some(false),
        },
    ));
    let simple = Expectations {
        der_dim: Some(3),
        leib_dim: Some(0),
        quotient_center_dim: Some(0),
        solvable: Some(false),
        nilpotent: Some(false),
        all_inner: Some(true),
        complete: Some(true),
    };
    out.push(entry("sl2_Q", sl2(q), simple.clone()));
    out.push(entry("sl2_F5", sl2(f5), simple));
    out.push(entry(
        "sl2_sum_Q",
        direct_sum(&sl2(q), &sl2(q)).expect("same field"),
        Expectations {
            der_dim: Some(6),
            leib_dim: Some(0),
            quotient_center_dim: Some(0),
            solvable: Some(false),
            nilpotent: Some(false),
            all_inner: Some(true),
            complete: Some(true),
        },
    ));
    out.push(entry(
        "hemi_sl2_natural",
        hemi_sl2_natural(),
        Expectations {
            leib_dim: Some(2),
            quotient_center_dim: Some(0),
            solvable: Some(false),
            nilpotent: Some(false),
            all_inner: Some(true),
            complete: Some(true),
            ..Default::default()
        },
    ));
    out.push(entry(
        "hemi_sl2_adjoint",
        hemi_sl2_adjoint(),
        Expectations {
            leib_dim: Some(3),
            quotient_center_dim: Some(0),
            solvable: Some(false),
            nilpotent: Some(false),
            all_inner: Some(true),
            complete: Some(true),
            ..Default::default()
        },
    ));
    out.push(entry(
        "current_sl2_p5",
        current_sl2(5).expect("p = 5").algebra,
        Expectations {
            leib_dim: Some(0),
            solvable: Some(false),
            nilpotent: Some(false),
            ..Default::default()
        },
    ));
    for k in 1..=3 {
        out.push(entry(
            format!("abelian_{k}"),
            abelian(k, q),
            Expectations {
                der_dim: Some(k * k),
                leib_dim: Some(0),
                quotient_center_dim: Some(k),
                solvable: Some(true),
                nilpotent: Some(true),
                all_inner: Some(false),
                complete: Some(false),
            },
        ));
    }
    out
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
