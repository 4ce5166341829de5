//! C ABI over `leibkit`.
//!
//! Algebras cross the boundary as opaque [`LeibkitAlgebra`] handles and JSON
//! strings in the algebra file format. Every function returns a
//! [`LeibkitStatus`]; on failure [`leibkit_last_error`] describes the cause.
//! Strings returned through out-parameters are owned by the caller and must be
//! released with [`leibkit_string_free`]; handles with [`leibkit_algebra_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use leibkit::catalog;
use leibkit::completeness::is_complete;
use leibkit::derivation::derivation_basis;
use leibkit::holomorph::build_holomorph;
use leibkit::io::{emit_algebra_string, parse_algebra_str, parse_linear_combination};
use leibkit::report::{analyze, AnalyzeOptions};
use leibkit::{LeibError, LeibnizAlgebra, Subspace, SuiteConfig};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeibkitStatus {
    LeibkitOk = 0,
    /// A queried predicate is false.
    LeibkitFalse = 1,
    LeibkitInputError = 2,
    /// A verdict could not be decided.
    LeibkitUndecided = 3,
    LeibkitNullPointer = 4,
    LeibkitInternal = 5,
}

/// Opaque handle to a validated algebra.
pub struct LeibkitAlgebra {
    inner: LeibnizAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(text).expect("nul bytes removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &LeibError) -> LeibkitStatus {
    match err {
        LeibError::Internal(_) | LeibError::CoordinateSolveFailure(_) => LeibkitStatus::LeibkitInternal,
        _ => LeibkitStatus::LeibkitInputError,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard<F>(body: F) -> LeibkitStatus
where
    F: FnOnce() -> Result<LeibkitStatus, (LeibkitStatus, String)>,
{
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LeibkitStatus::LeibkitInternal
        }
    }
}

fn lib_err(e: LeibError) -> (LeibkitStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LeibkitStatus, String) {
    (LeibkitStatus::LeibkitNullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LeibkitStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (LeibkitStatus::LeibkitInputError, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `a` must be null or a live handle.
unsafe fn algebra<'a>(a: *const LeibkitAlgebra) -> Result<&'a LeibnizAlgebra, (LeibkitStatus, String)> {
    a.as_ref().map(|h| &h.inner).ok_or_else(|| null("algebra handle"))
}

fn into_handle(a: LeibnizAlgebra) -> *mut LeibkitAlgebra {
    Box::into_raw(Box::new(LeibkitAlgebra { inner: a }))
}

/// # Safety
/// `out` must be null or writable.
unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), (LeibkitStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON output has no NUL bytes").into_raw()
}

/// Message for the last failing call on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn leibkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an algebra file given as a JSON string.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_from_json(
    json: *const c_char,
    validate: bool,
    out: *mut *mut LeibkitAlgebra,
) -> LeibkitStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let a = parse_algebra_str(text, validate).map_err(lib_err)?;
        put(out, into_handle(a), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// Named entry of the built-in catalog.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_catalog_entry(name: *const c_char, out: *mut *mut LeibkitAlgebra) -> LeibkitStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let e = catalog::catalog_entry(name)
            .ok_or_else(|| (LeibkitStatus::LeibkitInputError, format!("no catalog entry named {name:?}")))?;
        put(out, into_handle(e.algebra), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_free(a: *mut LeibkitAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn leibkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_dim(a: *const LeibkitAlgebra, out: *mut usize) -> LeibkitStatus {
    guard(|| {
        put(out, algebra(a)?.dim(), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// Serializes the algebra in the file format.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_algebra_to_json(a: *const LeibkitAlgebra, out: *mut *mut c_char) -> LeibkitStatus {
    guard(|| {
        let text = emit_algebra_string(algebra(a)?);
        put(out, c_string(text), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_derivation_dim(a: *const LeibkitAlgebra, out: *mut usize) -> LeibkitStatus {
    guard(|| {
        put(out, derivation_basis(algebra(a)?).dim(), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// Returns `LEIBKIT_OK` when complete and `LEIBKIT_FALSE` otherwise.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn leibkit_is_complete(a: *const LeibkitAlgebra) -> LeibkitStatus {
    guard(|| {
        Ok(if is_complete(algebra(a)?).complete {
            LeibkitStatus::LeibkitOk
        } else {
            LeibkitStatus::LeibkitFalse
        })
    })
}

/// Machine-format analysis report. With `strict`, returns `LEIBKIT_UNDECIDED`
/// (still writing the report) when any verdict is undecided.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_analyze(
    a: *const LeibkitAlgebra,
    skip_hol: bool,
    strict: bool,
    out: *mut *mut c_char,
) -> LeibkitStatus {
    guard(|| {
        let a = algebra(a)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let opts = AnalyzeOptions {
            skip_hol,
            config: SuiteConfig::from_env().map_err(lib_err)?,
            ..Default::default()
        };
        let report = analyze(a, &opts).map_err(lib_err)?;
        put(out, c_string(report.to_machine()), "out")?;
        Ok(if strict && report.has_undecided() {
            LeibkitStatus::LeibkitUndecided
        } else {
            LeibkitStatus::LeibkitOk
        })
    })
}

/// `hol(A)` on the basis `(e_1..e_n, D_1..D_d)`.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_holomorph(a: *const LeibkitAlgebra, out: *mut *mut LeibkitAlgebra) -> LeibkitStatus {
    guard(|| {
        let h = build_holomorph(algebra(a)?).map_err(lib_err)?;
        put(out, into_handle(h.algebra), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// Same algebra in the seeded random basis; seed 0 is the identity change.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn leibkit_basis_change(
    a: *const LeibkitAlgebra,
    seed: u64,
    out: *mut *mut LeibkitAlgebra,
) -> LeibkitStatus {
    guard(|| {
        let (b, _) = catalog::random_basis_change(algebra(a)?, seed).map_err(lib_err)?;
        put(out, into_handle(b), "out")?;
        Ok(LeibkitStatus::LeibkitOk)
    })
}

/// Tests whether the span of the generator expressions is a characteristic ideal.
/// Returns `LEIBKIT_OK` if so and `LEIBKIT_FALSE` otherwise.
///
/// # Safety
/// `a` must be a live handle and `exprs` must point to `count` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn leibkit_check_ideal(
    a: *const LeibkitAlgebra,
    exprs: *const *const c_char,
    count: usize,
) -> LeibkitStatus {
    guard(|| {
        let a = algebra(a)?;
        if exprs.is_null() && count > 0 {
            return Err(null("exprs"));
        }
        let mut vs = Vec::with_capacity(count);
        for i in 0..count {
            let e = read_str(*exprs.add(i), "generator expression")?;
            vs.push(parse_linear_combination(a, e).map_err(lib_err)?);
        }
        let span = Subspace::span(a.field(), a.dim(), vs).map_err(lib_err)?;
        let der = derivation_basis(a);
        let ok = der.is_characteristic_ideal(a, &span).map_err(lib_err)?;
        Ok(if ok {
            LeibkitStatus::LeibkitOk
        } else {
            LeibkitStatus::LeibkitFalse
        })
    })
}
