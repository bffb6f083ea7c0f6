//! C ABI over the `qnarayana` library.
//!
//! Polynomials cross the boundary as opaque `QnPoly` handles; strings
//! returned to the caller are owned by the caller and released with
//! `qn_string_free`. Every fallible call returns a `QnStatus`; on anything
//! other than `QN_STATUS_OK` a description is available from
//! `qn_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qnarayana::gfun::{verify_identity, Identity};
use qnarayana::hankel::{det_bareiss, hankel_matrix};
use qnarayana::narayana::{Family, PolySequence};
use qnarayana::verify::{registry, run_checks, Fixtures, VerifyConfig};
use qnarayana::{Error, Polynomial, Var};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QnStatus {
    Ok = 0,
    /// A check ran and failed.
    Mismatch = 1,
    /// Bad argument: unknown name, out-of-range value, unparsable text.
    Usage = 2,
    NullPointer = 3,
    Internal = 4,
    Panic = 5,
}

/// Polynomial families indexed by `n`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QnFamily {
    /// `c_n(t)`
    SmallC = 0,
    /// `C_n(t)`
    Narayana = 1,
    /// `W_n(t)`
    NarayanaB = 2,
    /// Catalan number as a constant polynomial.
    Catalan = 3,
}

impl From<QnFamily> for Family {
    fn from(f: QnFamily) -> Family {
        match f {
            QnFamily::SmallC => Family::SmallC,
            QnFamily::Narayana => Family::NarayanaPoly,
            QnFamily::NarayanaB => Family::NarayanaB,
            QnFamily::Catalan => Family::CatalanC,
        }
    }
}

/// Opaque polynomial handle.
pub struct QnPoly(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> QnStatus {
    if e.is_usage() {
        QnStatus::Usage
    } else {
        QnStatus::Internal
    }
}

/// Runs `f`, records its error text and converts panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<QnStatus, (QnStatus, String)>) -> QnStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside qnarayana");
            QnStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (QnStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(name: &str) -> (QnStatus, String) {
    (QnStatus::NullPointer, format!("{name} is null"))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (QnStatus, String)> {
    if out.is_null() {
        return Err(null_err("out"));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
unsafe fn poly_ref<'a>(p: *const QnPoly, name: &str) -> Result<&'a Polynomial, (QnStatus, String)> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null_err(name))
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn str_arg<'a>(s: *const c_char, name: &str) -> Result<&'a str, (QnStatus, String)> {
    if s.is_null() {
        return Err(null_err(name));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (QnStatus::Usage, format!("{name} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn into_handle(p: Polynomial) -> *mut QnPoly {
    Box::into_raw(Box::new(QnPoly(p)))
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn qn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The `n`-th member of `family`, written to `*out`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_family(family: QnFamily, n: u32, out: *mut *mut QnPoly) -> QnStatus {
    guard(|| {
        let p = Family::from(family).member(n as usize);
        write_out(out, into_handle(p))?;
        Ok(QnStatus::Ok)
    })
}

/// Parses canonical text such as `1+2t+4t^2` (variable `t` unless the text
/// names `q`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_parse(text: *const c_char, out: *mut *mut QnPoly) -> QnStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let p = Polynomial::parse(text, Var::T).map_err(lib_err)?;
        write_out(out, into_handle(p))?;
        Ok(QnStatus::Ok)
    })
}

/// Degree of `p`; -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_degree(p: *const QnPoly) -> i64 {
    p.as_ref().and_then(|h| h.0.degree()).map_or(-1, |d| d as i64)
}

/// Coefficient of `var^power` as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_coeff(p: *const QnPoly, power: usize, out: *mut *mut c_char) -> QnStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        write_out(out, into_c_string(p.coeff(power).to_string()))?;
        Ok(QnStatus::Ok)
    })
}

/// Canonical text form, e.g. `1+2t+4t^2+2t^3+t^4`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_to_string(p: *const QnPoly, out: *mut *mut c_char) -> QnStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        write_out(out, into_c_string(p.to_string()))?;
        Ok(QnStatus::Ok)
    })
}

/// JSON form `{"var":"t","coeffs":["1","2",...]}`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_to_json(p: *const QnPoly, out: *mut *mut c_char) -> QnStatus {
    guard(|| {
        let p = poly_ref(p, "p")?;
        let json = serde_json::to_string(p).map_err(|e| (QnStatus::Internal, e.to_string()))?;
        write_out(out, into_c_string(json))?;
        Ok(QnStatus::Ok)
    })
}

/// Product of two polynomials in the same variable.
///
/// # Safety
/// `a` and `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_mul(a: *const QnPoly, b: *const QnPoly, out: *mut *mut QnPoly) -> QnStatus {
    guard(|| {
        let product = poly_ref(a, "a")?.try_mul(poly_ref(b, "b")?).map_err(lib_err)?;
        write_out(out, into_handle(product))?;
        Ok(QnStatus::Ok)
    })
}

/// Structural equality; false if either handle is null.
///
/// # Safety
/// `a` and `b` must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_equal(a: *const QnPoly, b: *const QnPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qn_poly_free(p: *mut QnPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Determinant of the `n x n` Hankel matrix `(a_{i+j+shift})` of `family`,
/// `shift` 0 or 1.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_hankel_det(
    family: QnFamily,
    shift: u32,
    n: u32,
    out: *mut *mut QnPoly,
) -> QnStatus {
    guard(|| {
        if shift > 1 {
            return Err((QnStatus::Usage, format!("shift must be 0 or 1, got {shift}")));
        }
        let (n, shift) = (n as usize, shift as usize);
        let seq = PolySequence::build(family.into(), 2 * n + shift);
        let det = det_bareiss(&hankel_matrix(&seq, n, shift).map_err(lib_err)?).map_err(lib_err)?;
        write_out(out, into_handle(det))?;
        Ok(QnStatus::Ok)
    })
}

/// Checks one generating-function identity (`"eq25"`, `"g_at_1"`, ...)
/// through `z^order`. `QN_STATUS_OK` on pass, `QN_STATUS_MISMATCH` on fail.
///
/// # Safety
/// `name` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn qn_verify_identity(name: *const c_char, order: u32) -> QnStatus {
    guard(|| {
        let id: Identity = str_arg(name, "name")?.parse().map_err(lib_err)?;
        let report = verify_identity(id, order as usize).map_err(lib_err)?;
        if report.passed() {
            Ok(QnStatus::Ok)
        } else {
            Err((QnStatus::Mismatch, report.to_string()))
        }
    })
}

/// Runs every registered check with default bounds. Either output pointer
/// may be null.
///
/// # Safety
/// `passed` and `total` must each be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qn_verify_all(passed: *mut u32, total: *mut u32) -> QnStatus {
    guard(|| {
        let outcomes = run_checks(&registry(), &Fixtures::default(), &VerifyConfig::default());
        let ok = outcomes.iter().filter(|o| o.passed).count();
        if !passed.is_null() {
            passed.write(ok as u32);
        }
        if !total.is_null() {
            total.write(outcomes.len() as u32);
        }
        match outcomes.iter().find(|o| !o.passed) {
            None => Ok(QnStatus::Ok),
            Some(first) => Err((QnStatus::Mismatch, first.to_string())),
        }
    })
}
