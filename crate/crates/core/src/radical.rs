//! Radical, nilradical, characteristic radical and the semisimplicity hierarchy.
//!
//! Decisions that cannot always be settled exactly return a [`Verdict`]; a
//! `Yes` or `No` always carries a checkable certificate.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{largest_invariant_subspace, spin, LeibnizAlgebra, Quotient};
use crate::catalog::Lcg;
use crate::derivation::{derivation_basis, DerivationBasis};
use crate::error::{LeibError, Result};
use crate::matrix::{add_vectors, is_zero_vector, Matrix, Vector};
use crate::scalar::FieldSpec;
use crate::subspace::Subspace;

/// Default cap on `(p^d − 1)/(p − 1)` for exact line enumeration.
pub const DEFAULT_MAX_ENUM: u64 = 1_000_000;
/// Environment variable overriding [`DEFAULT_MAX_ENUM`].
pub const MAX_ENUM_ENV: &str = "LEIBKIT_MAX_ENUM";
/// Number of seeded random probes used for characteristic simplicity.
pub const RANDOM_PROBES: usize = 32;
/// Seed of the probe generator.
pub const PROBE_SEED: u64 = 20_240_917;
/// Entries of random probes are drawn from this range.
pub const PROBE_RANGE: (i64, i64) = (-3, 3);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_enum: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_enum: DEFAULT_MAX_ENUM,
        }
    }
}

impl SuiteConfig {
    /// Default configuration with the enumeration bound taken from the environment when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_ENUM_ENV) {
            Ok(raw) => {
                let max_enum = raw.trim().parse::<u64>().map_err(|_| {
                    LeibError::InvalidParameter(format!("{MAX_ENUM_ENV} must be a non-negative integer, got {raw:?}"))
                })?;
                Ok(SuiteConfig { max_enum })
            }
            Err(_) => Ok(SuiteConfig::default()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
    Undecided,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Undecided => "undecided",
        })
    }
}

/// Tri-state decision with its certificate. `witness` holds the refuting or
/// certifying subspace when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub certificate: String,
    pub witness: Option<Subspace>,
}

impl Verdict {
    pub fn yes(certificate: impl Into<String>) -> Self {
        Verdict {
            status: Status::Yes,
            certificate: certificate.into(),
            witness: None,
        }
    }

    pub fn no(certificate: impl Into<String>) -> Self {
        Verdict {
            status: Status::No,
            certificate: certificate.into(),
            witness: None,
        }
    }

    pub fn undecided(reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::Undecided,
            certificate: reason.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: Subspace) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::No
    }

    pub fn is_undecided(&self) -> bool {
        self.status == Status::Undecided
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Verdict", 2)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("certificate", &self.certificate)?;
        st.end()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status, self.certificate)
    }
}

/// Radical structure of an algebra. `radical` and `crad` are `None` when no
/// certified radical is available in the field's characteristic.
#[derive(Clone, Debug)]
pub struct RadicalProfile {
    pub radical: Option<Subspace>,
    pub radical_verdict: Verdict,
    pub nilradical: Option<Subspace>,
    pub nilradical_verdict: Verdict,
    pub crad: Option<Subspace>,
    pub crad_trace: Vec<usize>,
    pub semisimple: Option<bool>,
    pub characteristically_semisimple: Option<bool>,
    pub characteristically_simple: Verdict,
}

/// Externally certified candidates, typically for prime fields.
#[derive(Clone, Debug, Default)]
pub struct Supplied {
    pub radical: Option<Subspace>,
    pub nilradical: Option<Subspace>,
}

/// `κ(x̄ᵢ, x̄ⱼ) = tr(ad x̄ᵢ · ad x̄ⱼ)` on `A/Leib(A)`.
pub fn killing_form_on_quotient(a: &LeibnizAlgebra) -> Matrix {
    killing_form(&a.lie_quotient().algebra)
}

fn killing_form(lie: &LeibnizAlgebra) -> Matrix {
    trace_form(&(0..lie.dim()).map(|i| lie.left_mult_basis(i)).collect::<Vec<_>>(), lie.field())
}

/// Gram matrix `tr(Mᵢ Mⱼ)`.
fn trace_form(maps: &[Matrix], field: FieldSpec) -> Matrix {
    let n = maps.len();
    let mut g = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let t = maps[i].mul(&maps[j]).expect("square maps").trace().expect("square");
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    g
}

fn is_solvable_subspace(a: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    Ok(a.subspace_series(s)?.is_solvable())
}

fn is_nilpotent_subspace(a: &LeibnizAlgebra, s: &Subspace) -> Result<bool> {
    Ok(a.subspace_series(s)?.is_nilpotent())
}

/// Preimage of the `κ`-orthogonal complement of `[Q, Q]` in `Q = A/Leib(A)`.
///
/// In characteristic zero this is exactly the radical; in characteristic `p` it is
/// only a candidate.
fn killing_candidate(a: &LeibnizAlgebra) -> Result<Subspace> {
    let quot = a.lie_quotient();
    let lie = &quot.algebra;
    if lie.dim() == 0 {
        return Ok(a.full_space());
    }
    let kappa = killing_form(lie);
    let full = lie.full_space();
    let derived = lie.product_of_subspaces(&full, &full)?;
    let rad_q = if derived.is_zero() {
        full
    } else {
        derived.basis().mul(&kappa)?.nullspace()
    };
    quot.preimage(&rad_q)
}

/// Largest solvable ideal, characteristic zero only.
pub fn radical(a: &LeibnizAlgebra) -> Result<Subspace> {
    if a.field().is_finite() {
        return Err(LeibError::UnsupportedCharacteristic(a.field().characteristic()));
    }
    let cand = killing_candidate(a)?;
    if !a.is_ideal(&cand)? || !is_solvable_subspace(a, &cand)? {
        return Err(LeibError::Internal(format!(
            "Killing-form candidate {} is not a solvable ideal",
            a.format_subspace(&cand)
        )));
    }
    Ok(cand)
}

/// Radical in any supported characteristic: the Killing candidate, certified by
/// enumeration over prime fields.
pub fn certified_radical(a: &LeibnizAlgebra, cfg: &SuiteConfig) -> Result<(Subspace, Verdict)> {
    if !a.field().is_finite() {
        let r = radical(a)?;
        return Ok((r, Verdict::yes("Killing form of the Lie quotient, characteristic zero")));
    }
    let cand = killing_candidate(a)?;
    let v = verify_radical_candidate(a, &cand, cfg)?;
    if v.is_yes() {
        Ok((cand, v))
    } else {
        Err(LeibError::UnsupportedCharacteristic(a.field().characteristic()))
    }
}

/// Number of lines in `F_p^d`, or `None` on overflow.
pub fn line_count(p: u64, d: usize) -> Option<u64> {
    if d == 0 {
        return Some(0);
    }
    let total = p.checked_pow(u32::try_from(d).ok()?)?;
    Some((total - 1) / (p - 1))
}

enum Scan {
    /// Line closure satisfying the predicate.
    Found(Subspace),
    /// Every line was checked.
    Exhausted(u64),
    TooMany(Option<u64>),
}

/// Calls `visit` on the ideal closure of every line of `alg` over a prime field,
/// stopping at the first closure for which it returns `true`.
fn scan_line_closures<F>(alg: &LeibnizAlgebra, cfg: &SuiteConfig, mut visit: F) -> Result<Scan>
where
    F: FnMut(&Subspace) -> Result<bool>,
{
    scan_lines(alg.field(), alg.dim(), cfg, &alg.multiplication_maps(), &mut visit)
}

/// Enumerates lines of `F_p^d` by normalized representatives (first nonzero entry 1)
/// and visits the closure of each under `maps`.
fn scan_lines<F>(field: FieldSpec, d: usize, cfg: &SuiteConfig, maps: &[Matrix], visit: &mut F) -> Result<Scan>
where
    F: FnMut(&Subspace) -> Result<bool>,
{
    let p = match field {
        FieldSpec::PrimeField { p } => p,
        FieldSpec::Rationals => {
            return Err(LeibError::UnsupportedCharacteristic(0));
        }
    };
    let count = line_count(p, d);
    match count {
        Some(c) if c <= cfg.max_enum => {}
        other => return Ok(Scan::TooMany(other)),
    }
    let mut seen: u64 = 0;
    for lead in 0..d {
        let tail = d - lead - 1;
        let mut digits = vec![0u64; tail];
        loop {
            let mut v = vec![field.zero(); d];
            v[lead] = field.one();
            for (t, &dg) in digits.iter().enumerate() {
                v[lead + 1 + t] = field.from_i64(dg as i64);
            }
            let line = Subspace::span(field, d, [v])?;
            let closure = spin(&line, maps)?;
            seen += 1;
            if visit(&closure)? {
                return Ok(Scan::Found(closure));
            }
            // Odometer over the tail digits.
            let mut pos = 0;
            while pos < tail {
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == tail {
                break;
            }
        }
    }
    Ok(Scan::Exhausted(seen))
}

fn too_many(count: Option<u64>, cfg: &SuiteConfig) -> Verdict {
    match count {
        Some(c) => Verdict::undecided(format!("{c} lines exceed the enumeration bound {}", cfg.max_enum)),
        None => Verdict::undecided("line count overflows the enumeration bound"),
    }
}

/// Decides whether `s` is the radical of `A`.
///
/// Over `Q` the candidate is compared with the Killing-form radical. Over `F_p`
/// every line of `A/S` is enumerated: `S` is maximal iff no line generates a
/// solvable ideal of the quotient.
pub fn verify_radical_candidate(a: &LeibnizAlgebra, s: &Subspace, cfg: &SuiteConfig) -> Result<Verdict> {
    if !a.is_ideal(s)? {
        return Ok(Verdict::no("candidate is not an ideal").with_witness(s.clone()));
    }
    if !is_solvable_subspace(a, s)? {
        return Ok(Verdict::no("candidate is not solvable").with_witness(s.clone()));
    }
    if s.is_full() {
        return Ok(Verdict::yes("candidate is the whole algebra and solvable"));
    }
    if !a.field().is_finite() {
        let r = radical(a)?;
        return Ok(if &r == s {
            Verdict::yes("equals the Killing-form radical")
        } else {
            Verdict::no(format!("solvable ideal {} strictly contains the candidate", a.format_subspace(&r)))
                .with_witness(r)
        });
    }
    let quot = a.quotient_by(s)?;
    let scan = scan_line_closures(&quot.algebra, cfg, |j| is_solvable_subspace(&quot.algebra, j))?;
    Ok(match scan {
        Scan::Found(j) => {
            let over = quot.preimage(&j)?;
            Verdict::no(format!("solvable ideal {} strictly contains the candidate", a.format_subspace(&over)))
                .with_witness(over)
        }
        Scan::Exhausted(lines) => Verdict::yes(format!(
            "all {lines} lines of the {}-dimensional quotient generate non-solvable ideals",
            quot.algebra.dim()
        )),
        Scan::TooMany(c) => too_many(c, cfg),
    })
}

/// `{v : tr(L_v L_y) = 0 for all y}`; every nilpotent ideal lies inside it.
fn trace_kernel(a: &LeibnizAlgebra) -> Subspace {
    let maps: Vec<Matrix> = (0..a.dim()).map(|i| a.left_mult_basis(i)).collect();
    if maps.is_empty() {
        return a.zero_space();
    }
    trace_form(&maps, a.field()).nullspace()
}

/// Largest ideal inside `s`.
fn largest_ideal_in(a: &LeibnizAlgebra, s: &Subspace) -> Result<Subspace> {
    Ok(largest_invariant_subspace(s, &a.multiplication_maps())?.0)
}

/// Nilradical candidate with its verdict.
///
/// With a supplied candidate the verdict comes from [`verify_nilradical_candidate`].
/// Otherwise the candidate is the largest ideal inside `rad ∩ {v : tr(L_v L_y) = 0 ∀y}`
/// (over `F_p` the radical factor is dropped); every nilpotent ideal lies inside it,
/// so the candidate is certified as soon as it is nilpotent.
pub fn nilradical(a: &LeibnizAlgebra, candidate: Option<&Subspace>, cfg: &SuiteConfig) -> Result<(Subspace, Verdict)> {
    if let Some(c) = candidate {
        return Ok((c.clone(), verify_nilradical_candidate(a, c, cfg)?));
    }
    let (n0, v) = trace_candidate(a)?;
    if v.is_yes() || !a.field().is_finite() {
        return Ok((n0, v));
    }
    let v = verify_nilradical_candidate(a, &n0, cfg)?;
    Ok((n0, v))
}

fn trace_candidate(a: &LeibnizAlgebra) -> Result<(Subspace, Verdict)> {
    let mut bound = trace_kernel(a);
    if !a.field().is_finite() {
        bound = bound.intersect(&radical(a)?)?;
    }
    let n0 = largest_ideal_in(a, &bound)?;
    if is_nilpotent_subspace(a, &n0)? {
        Ok((
            n0,
            Verdict::yes("largest ideal in the trace-form kernel is nilpotent and contains every nilpotent ideal"),
        ))
    } else {
        Ok((n0, Verdict::undecided("trace-form candidate is not nilpotent")))
    }
}

/// Decides whether `s` is the nilradical of `A`.
pub fn verify_nilradical_candidate(a: &LeibnizAlgebra, s: &Subspace, cfg: &SuiteConfig) -> Result<Verdict> {
    if !a.is_ideal(s)? {
        return Ok(Verdict::no("candidate is not an ideal").with_witness(s.clone()));
    }
    if !is_nilpotent_subspace(a, s)? {
        return Ok(Verdict::no("candidate is not nilpotent").with_witness(s.clone()));
    }
    if s.is_full() {
        return Ok(Verdict::yes("candidate is the whole algebra and nilpotent"));
    }
    let (n0, v0) = trace_candidate(a)?;
    if v0.is_yes() {
        return Ok(if &n0 == s {
            Verdict::yes(v0.certificate)
        } else {
            Verdict::no(format!("nilpotent ideal {} strictly contains the candidate", a.format_subspace(&n0)))
                .with_witness(n0)
        });
    }
    if !a.field().is_finite() {
        return Ok(Verdict::undecided("trace-form candidate is not nilpotent"));
    }
    // Any nilpotent ideal J ⊋ S gives the nilpotent ideal J + S, whose image in A/S
    // contains a line closure with nilpotent preimage.
    let quot = a.quotient_by(s)?;
    let mut ambiguous: Option<Subspace> = None;
    let scan = scan_line_closures(&quot.algebra, cfg, |j| {
        if !is_nilpotent_subspace(&quot.algebra, j)? {
            return Ok(false);
        }
        let over = quot.preimage(j)?;
        if is_nilpotent_subspace(a, &over)? {
            return Ok(true);
        }
        if ambiguous.is_none() {
            ambiguous = Some(over);
        }
        Ok(false)
    })?;
    Ok(match scan {
        Scan::Found(j) => {
            let over = quot.preimage(&j)?;
            Verdict::no(format!("nilpotent ideal {} strictly contains the candidate", a.format_subspace(&over)))
                .with_witness(over)
        }
        Scan::Exhausted(lines) => match ambiguous {
            None => Verdict::yes(format!(
                "all {lines} lines of the {}-dimensional quotient generate non-nilpotent ideals",
                quot.algebra.dim()
            )),
            Some(over) => Verdict::undecided(format!(
                "line closure with non-nilpotent preimage {} leaves maximality open",
                a.format_subspace(&over)
            )),
        },
        Scan::TooMany(c) => too_many(c, cfg),
    })
}

/// Characteristic radical with the dimensions visited by the fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crad {
    pub space: Subspace,
    pub trace: Vec<usize>,
}

/// Largest characteristic ideal inside the radical.
///
/// `supplied` must be the radical when given; it is checked to be a solvable ideal.
/// Without it the radical is computed, which over `F_p` requires an enumeration certificate.
pub fn crad(a: &LeibnizAlgebra, der: &DerivationBasis, supplied: Option<&Subspace>, cfg: &SuiteConfig) -> Result<Crad> {
    let rad = match supplied {
        Some(r) => {
            if !a.is_ideal(r)? || !is_solvable_subspace(a, r)? {
                return Err(LeibError::InvalidParameter("supplied radical is not a solvable ideal".into()));
            }
            r.clone()
        }
        None => certified_radical(a, cfg)?.0,
    };
    let (space, trace) = largest_invariant_subspace(&rad, &der.characteristic_maps(a))?;
    Ok(Crad { space, trace })
}

/// `dim Crad(A / Crad(A))`.
///
/// The radical of the quotient is the image of `rad(A)`, since `Crad(A) ⊆ rad(A)`.
pub fn crad_quotient_residual(
    a: &LeibnizAlgebra,
    der: &DerivationBasis,
    supplied: Option<&Subspace>,
    cfg: &SuiteConfig,
) -> Result<usize> {
    let rad = match supplied {
        Some(r) => r.clone(),
        None => certified_radical(a, cfg)?.0,
    };
    let r = crad(a, der, Some(&rad), cfg)?;
    let quot: Quotient = a.quotient_by(&r.space)?;
    let rad_q = quot.project_subspace(&rad)?;
    let qder = derivation_basis(&quot.algebra);
    Ok(crad(&quot.algebra, &qder, Some(&rad_q), cfg)?.space.dim())
}

/// Decides whether Leib(A) is the only proper nonzero characteristic ideal and `A² = A`.
///
/// Stages: refutation by probing characteristic closures; the `A² = A` test; exact
/// line enumeration over `F_p`; and a certificate that the derivation-and-multiplication
/// action is absolutely irreducible on both `A/Leib(A)` and `Leib(A)` with a
/// non-split extension.
pub fn characteristically_simple(a: &LeibnizAlgebra, der: &DerivationBasis, cfg: &SuiteConfig) -> Result<Verdict> {
    let n = a.dim();
    if n == 0 {
        return Ok(Verdict::no("zero algebra"));
    }
    let field = a.field();
    let leib = a.leib_ideal();
    let maps = der.characteristic_maps(a);
    let refutes = |c: &Subspace, inside_leib: bool| -> bool {
        if inside_leib {
            c != &leib
        } else {
            !c.is_full()
        }
    };

    for v in probe_vectors(field, n) {
        let inside = leib.contains(&v)?;
        let c = spin(&Subspace::span(field, n, [v])?, &maps)?;
        if refutes(&c, inside) {
            return Ok(Verdict::no(format!(
                "characteristic closure {} is proper and differs from Leib",
                a.format_subspace(&c)
            ))
            .with_witness(c));
        }
    }

    let full = a.full_space();
    let square = a.product_of_subspaces(&full, &full)?;
    if !square.is_full() {
        return Ok(
            Verdict::no(format!("A² = {} is a proper characteristic ideal", a.format_subspace(&square))).with_witness(square)
        );
    }

    if field.is_finite() {
        let mut visit = |c: &Subspace| -> Result<bool> {
            // A closure of v ∉ Leib always escapes Leib, so membership is read off the closure.
            let inside = c.is_subspace_of(&leib)?;
            Ok(refutes(c, inside))
        };
        match scan_lines(field, n, cfg, &maps, &mut visit)? {
            Scan::Found(c) => {
                return Ok(Verdict::no(format!(
                    "characteristic closure {} is proper and differs from Leib",
                    a.format_subspace(&c)
                ))
                .with_witness(c));
            }
            Scan::Exhausted(lines) => {
                return Ok(Verdict::yes(format!(
                    "all {lines} lines generate A or Leib; A² = A"
                )));
            }
            Scan::TooMany(_) => {}
        }
    }

    if let Some(cert) = irreducibility_certificate(a, &leib, &maps)? {
        return Ok(Verdict::yes(cert));
    }
    Ok(Verdict::undecided("probes found no refutation and irreducibility was not certified"))
}

/// Standard basis vectors, pairwise sums, then seeded random vectors.
fn probe_vectors(field: FieldSpec, n: usize) -> Vec<Vector> {
    let unit = |i| crate::matrix::unit_vector(field, n, i);
    let mut out: Vec<Vector> = (0..n).map(unit).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(add_vectors(&unit(i), &unit(j)));
        }
    }
    let mut rng = Lcg::new(PROBE_SEED);
    for _ in 0..RANDOM_PROBES {
        let v: Vector = (0..n)
            .map(|_| field.from_i64(rng.next_in(PROBE_RANGE.0, PROBE_RANGE.1)))
            .collect();
        if !is_zero_vector(&v) {
            out.push(v);
        }
    }
    out
}

/// Maps induced on `A/W` (via the quotient coordinates of `W`) and on `W`.
fn induced_actions(maps: &[Matrix], w: &Subspace) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let field = w.field();
    let n = w.ambient();
    let comp = w.non_pivot_columns();
    let q = comp.len();
    let basis = w.vectors();
    let l = basis.len();
    let mut on_quot = Vec::with_capacity(maps.len());
    let mut on_sub = Vec::with_capacity(maps.len());
    for m in maps {
        let mut mq = Matrix::zeros(field, q, q);
        for (b, &cb) in comp.iter().enumerate() {
            let img = w.reduce(&m.column(cb));
            for (a, &ca) in comp.iter().enumerate() {
                mq.set(a, b, img[ca].clone());
            }
        }
        on_quot.push(mq);
        let mut ms = Matrix::zeros(field, l, l);
        for (b, v) in basis.iter().enumerate() {
            let coords = w
                .coordinates(&m.mul_vec(v)?)?
                .ok_or_else(|| LeibError::Internal("subspace is not invariant".into()))?;
            for (a, c) in coords.into_iter().enumerate() {
                ms.set(a, b, c);
            }
        }
        on_sub.push(ms);
    }
    debug_assert_eq!(n, q + l);
    Ok((on_quot, on_sub))
}

/// True iff the associative algebra generated by `maps` (with identity) is all of `End(F^k)`.
pub fn generates_full_matrix_algebra(maps: &[Matrix], k: usize, field: FieldSpec) -> Result<bool> {
    if k == 0 {
        return Ok(false);
    }
    let target = k * k;
    let id = Matrix::identity(field, k);
    let mut span = Subspace::span(field, target, [id.as_flat().to_vec()])?;
    let mut queue = vec![id];
    while let Some(w) = queue.pop() {
        if span.dim() == target {
            break;
        }
        for g in maps {
            let u = g.mul(&w)?;
            if !span.contains(u.as_flat())? {
                span = span.with_vectors([u.as_flat().to_vec()])?;
                queue.push(u);
            }
        }
    }
    Ok(span.dim() == target)
}

/// Certificate text when the characteristic maps act absolutely irreducibly on
/// `A/Leib` and on `Leib`, and `Leib` has no ideal complement.
fn irreducibility_certificate(a: &LeibnizAlgebra, leib: &Subspace, maps: &[Matrix]) -> Result<Option<String>> {
    let field = a.field();
    let (on_quot, on_leib) = induced_actions(maps, leib)?;
    let q = a.dim() - leib.dim();
    if !generates_full_matrix_algebra(&on_quot, q, field)? {
        return Ok(None);
    }
    if leib.is_zero() {
        return Ok(Some(format!(
            "Leib = 0 and derivations with multiplications generate all {q}x{q} matrices; A² = A"
        )));
    }
    if !generates_full_matrix_algebra(&on_leib, leib.dim(), field)? {
        return Ok(None);
    }
    // A complement of Leib that is an ideal forces every L_x to vanish on Leib.
    let (_, left_on_leib) = induced_actions(&(0..a.dim()).map(|i| a.left_mult_basis(i)).collect::<Vec<_>>(), leib)?;
    if left_on_leib.iter().all(Matrix::is_zero) {
        return Ok(None);
    }
    Ok(Some(format!(
        "action is absolutely irreducible on A/Leib (dim {q}) and on Leib (dim {}); A acts nontrivially on Leib; A² = A",
        leib.dim()
    )))
}

/// Decides whether `A` is the direct sum of the given characteristically simple ideals.
pub fn verify_completely_semisimple(a: &LeibnizAlgebra, parts: &[Subspace], cfg: &SuiteConfig) -> Result<Verdict> {
    let mut total = a.zero_space();
    let mut dims = 0;
    for (i, part) in parts.iter().enumerate() {
        if !a.is_ideal(part)? {
            return Ok(Verdict::no(format!("part {} is not an ideal", i + 1)).with_witness(part.clone()));
        }
        for other in &parts[..i] {
            let meet = part.intersect(other)?;
            if !meet.is_zero() {
                return Ok(Verdict::no(format!("parts meet in {}", a.format_subspace(&meet))).with_witness(meet));
            }
        }
        total = total.sum(part)?;
        dims += part.dim();
    }
    if !total.is_full() || dims != a.dim() {
        return Ok(Verdict::no(format!("parts span {} of {} dimensions", total.dim(), a.dim())).with_witness(total));
    }
    let mut undecided = Vec::new();
    let mut certificates = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let sub = a.restrict(part)?;
        let v = characteristically_simple(&sub, &derivation_basis(&sub), cfg)?;
        match v.status {
            Status::No => {
                return Ok(Verdict::no(format!("part {} is not characteristically simple: {}", i + 1, v.certificate))
                    .with_witness(part.clone()));
            }
            Status::Undecided => undecided.push(format!("part {}: {}", i + 1, v.certificate)),
            Status::Yes => certificates.push(format!("part {}: {}", i + 1, v.certificate)),
        }
    }
    if !undecided.is_empty() {
        return Ok(Verdict::undecided(undecided.join("; ")));
    }
    Ok(Verdict::yes(format!("direct sum of ideals; {}", certificates.join("; "))))
}

/// All radical-related flags.
///
/// A supplied radical or nilradical replaces the computed one only after it is
/// verified (or, over `F_p`, after it at least passes the structural checks).
pub fn semisimplicity_flags(
    a: &LeibnizAlgebra,
    der: &DerivationBasis,
    supplied: &Supplied,
    cfg: &SuiteConfig,
) -> Result<RadicalProfile> {
    let (radical, radical_verdict) = match &supplied.radical {
        Some(r) => {
            let v = verify_radical_candidate(a, r, cfg)?;
            (if v.is_yes() { Some(r.clone()) } else { None }, v)
        }
        None => match certified_radical(a, cfg) {
            Ok((r, v)) => (Some(r), v),
            Err(LeibError::UnsupportedCharacteristic(p)) => (
                None,
                Verdict::undecided(format!("no certified radical candidate in characteristic {p}")),
            ),
            Err(e) => return Err(e),
        },
    };
    let (nil, nilradical_verdict) = nilradical(a, supplied.nilradical.as_ref(), cfg)?;
    let nilradical = nilradical_verdict.is_yes().then_some(nil);
    let leib = a.leib_ideal();
    let (crad_space, crad_trace) = match &radical {
        Some(r) => {
            let c = crad(a, der, Some(r), cfg)?;
            (Some(c.space), c.trace)
        }
        None => (None, Vec::new()),
    };
    let semisimple = radical.as_ref().map(|r| r == &leib);
    let characteristically_semisimple = crad_space.as_ref().map(|c| c == &leib);
    let characteristically_simple = characteristically_simple(a, der, cfg)?;
    Ok(RadicalProfile {
        radical,
        radical_verdict,
        nilradical,
        nilradical_verdict,
        crad: crad_space,
        crad_trace,
        semisimple,
        characteristically_semisimple,
        characteristically_simple,
    })
}
