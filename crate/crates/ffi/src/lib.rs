//! C ABI over `hopfcd`.
//!
//! Elements cross the boundary as opaque [`HcdElement`] handles. Scalars,
//! reports and certificates cross as NUL-terminated JSON strings owned by
//! the library; release them with [`hcd_string_free`]. Every fallible call
//! returns an [`HcdStatus`] and stores a message readable through
//! [`hcd_last_error`] on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopfcd::hopf_zero::CertJson;
use hopfcd::suites::{run_suite, SuiteConfig};
use hopfcd::{Element, Error, Scalar};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    InvalidArgument = 4,
    LevelMismatch = 5,
    Precondition = 6,
    Panic = 7,
}

/// Opaque handle to an exact algebra element.
pub struct HcdElement(Element);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HcdStatus {
    match e {
        Error::LevelMismatch { .. } => HcdStatus::LevelMismatch,
        Error::Precondition(_) | Error::ZeroVector | Error::IrrationalNorm(_) | Error::InvalidCertificate(_) => HcdStatus::Precondition,
        _ => HcdStatus::InvalidArgument,
    }
}

struct Fail(HcdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail(HcdStatus::InvalidJson, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HcdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HcdStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hopfcd".to_string());
            HcdStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(HcdStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(HcdStatus::InvalidUtf8, e.to_string()))
}

unsafe fn read_el<'a>(p: *const HcdElement) -> Result<&'a Element, Fail> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| Fail(HcdStatus::NullPointer, "null element handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(HcdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_el(out: *mut *mut HcdElement, e: Element) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(HcdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(Box::into_raw(Box::new(HcdElement(e))));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(HcdStatus::InvalidArgument, e.to_string()))?;
    if out.is_null() {
        return Err(Fail(HcdStatus::NullPointer, "null output pointer".into()));
    }
    out.write(c.into_raw());
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hcd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hcd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases an element handle. NULL is ignored.
///
/// # Safety
/// `e` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_free(e: *mut HcdElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Basis element `e_index` of `A_level`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_basis(level: u32, index: usize, out: *mut *mut HcdElement) -> HcdStatus {
    guard(|| write_el(out, Element::basis(level, index)?))
}

/// Parses a JSON array of `2^level` scalar strings such as `["1", "-1/2", "0", "0"]`.
///
/// # Safety
/// `json` must be NUL-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_from_json(level: u32, json: *const c_char, out: *mut *mut HcdElement) -> HcdStatus {
    guard(|| {
        let coeffs: Vec<Scalar> = serde_json::from_str(read_str(json)?)?;
        write_el(out, Element::new(level, coeffs)?)
    })
}

/// Coefficients of `e` as a JSON array of scalar strings.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_to_json(e: *const HcdElement, out: *mut *mut c_char) -> HcdStatus {
    guard(|| write_string(out, serde_json::to_string(read_el(e)?.coeffs())?))
}

/// Level of `e`, or -1 for a NULL handle.
///
/// # Safety
/// `e` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_level(e: *const HcdElement) -> c_int {
    e.as_ref().map_or(-1, |h| h.0.level() as c_int)
}

/// Doubling product `x y`.
///
/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_mul(x: *const HcdElement, y: *const HcdElement, out: *mut *mut HcdElement) -> HcdStatus {
    guard(|| write_el(out, read_el(x)?.try_mul(read_el(y)?)?))
}

/// Sum `x + y`.
///
/// # Safety
/// `x`, `y` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_add(x: *const HcdElement, y: *const HcdElement, out: *mut *mut HcdElement) -> HcdStatus {
    guard(|| write_el(out, read_el(x)?.try_add(read_el(y)?)?))
}

/// Conjugate of `x`.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_conj(x: *const HcdElement, out: *mut *mut HcdElement) -> HcdStatus {
    guard(|| write_el(out, read_el(x)?.conj()))
}

/// `(a, b) -> (-b, a)`; requires level >= 1.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_tilde(x: *const HcdElement, out: *mut *mut HcdElement) -> HcdStatus {
    guard(|| write_el(out, read_el(x)?.tilde()?))
}

/// Squared norm of `x` as a scalar string.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_norm_sq(x: *const HcdElement, out: *mut *mut c_char) -> HcdStatus {
    guard(|| write_string(out, read_el(x)?.norm_sq().to_string()))
}

/// Writes 1 to `out` when `x` is exactly zero, 0 otherwise.
///
/// # Safety
/// `x` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hcd_element_is_zero(x: *const HcdElement, out: *mut c_int) -> HcdStatus {
    guard(|| write_out(out, read_el(x)?.is_zero() as c_int))
}

/// Verifies a zero-divisor certificate given as JSON. Writes 1 or 0 to
/// `passed` and, when `report` is not NULL, the JSON report.
///
/// # Safety
/// `json` must be NUL-terminated; `passed` must be valid; `report` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn hcd_verify_cert(json: *const c_char, passed: *mut c_int, report: *mut *mut c_char) -> HcdStatus {
    guard(|| {
        let cert: CertJson = serde_json::from_str(read_str(json)?)?;
        let rep = hopfcd::cli::verify_cert_json(&cert)?;
        write_out(passed, rep.passed as c_int)?;
        if !report.is_null() {
            write_string(report, serde_json::to_string(&rep)?)?;
        }
        Ok(())
    })
}

/// Runs a named verification suite. Writes 1 or 0 to `passed` and, when
/// `report` is not NULL, the JSON report.
///
/// # Safety
/// `name` must be NUL-terminated; `passed` must be valid; `report` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn hcd_run_suite(
    name: *const c_char,
    level: u32,
    seed: u64,
    samples: u64,
    passed: *mut c_int,
    report: *mut *mut c_char,
) -> HcdStatus {
    guard(|| {
        let rep = run_suite(read_str(name)?, &SuiteConfig { level, seed, samples })?;
        write_out(passed, rep.passed as c_int)?;
        if !report.is_null() {
            write_string(report, serde_json::to_string(&rep)?)?;
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::LevelMismatch { left: 1, right: 2 }), HcdStatus::LevelMismatch);
        assert_eq!(status_of(&Error::ZeroVector), HcdStatus::Precondition);
        assert_eq!(status_of(&Error::UnknownSuite("x".into())), HcdStatus::InvalidArgument);
    }

    #[test]
    fn last_error_is_per_thread() {
        set_error("here".into());
        let other = std::thread::spawn(|| hcd_last_error().is_null()).join().unwrap();
        assert!(other);
        assert!(!hcd_last_error().is_null());
    }
}
