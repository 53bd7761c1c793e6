//! C ABI for `convsl-core`.
//!
//! Instances are opaque handles. Points, polytopes and results cross the
//! boundary as UTF-8 JSON using the library's "a/b" rational strings. Every
//! function returns a [`ConvslStatus`]; on failure [`convsl_last_error`]
//! describes the error. Strings written to `out` parameters are owned by the
//! caller and must be released with [`convsl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use convsl::algebra::SemilatticeInstance;
use convsl::io::{join_points, load_instance, membership, parse_instance, solve_params, ParamMode, SupportAnswer};
use convsl::riesz::support_embed;
use convsl::suite::{parse_law_selector, run_suite, SuiteConfig};
use convsl::{Error, Polytope, QVector, Rational};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvslStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    DimensionMismatch = 4,
    Domain = 5,
    Parse = 6,
    Validation = 7,
    Io = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvslParamMode {
    Swap = 0,
    FromPq = 1,
    FromPr = 2,
}

/// Opaque handle to a validated instance.
pub struct ConvslInstance {
    inner: SemilatticeInstance,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

enum Failure {
    Status(ConvslStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Core(e.into())
    }
}

fn status_of(e: &Error) -> ConvslStatus {
    match e {
        Error::InvalidInput(_) => ConvslStatus::InvalidInput,
        Error::DimensionMismatch { .. } => ConvslStatus::DimensionMismatch,
        Error::Domain(_) => ConvslStatus::Domain,
        Error::Parse(_) => ConvslStatus::Parse,
        Error::Validation(_) => ConvslStatus::Validation,
        Error::Io(_) => ConvslStatus::Io,
    }
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> ConvslStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ConvslStatus::Ok,
        Ok(Err(Failure::Status(status, msg))) => {
            set_last_error(msg);
            status
        }
        Ok(Err(Failure::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            ConvslStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(ConvslStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::Status(ConvslStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `inst` must be null or a handle from this library that has not been freed.
unsafe fn instance<'a>(inst: *const ConvslInstance) -> Result<&'a SemilatticeInstance, Failure> {
    inst.as_ref().map(|h| &h.inner).ok_or_else(|| null("instance"))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_json<T: serde::Serialize>(out: *mut *mut c_char, value: &T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let s = CString::new(serde_json::to_string(value)?).expect("JSON has no NUL bytes");
    *out = s.into_raw();
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_handle(out: *mut *mut ConvslInstance, inner: SemilatticeInstance) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(ConvslInstance { inner }));
    Ok(())
}

/// Parses an instance file body, translating the carrier to contain 0 when
/// requested, and validates it.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn convsl_instance_from_json(json: *const c_char, out: *mut *mut ConvslInstance) -> ConvslStatus {
    guard(|| write_handle(out, parse_instance(text(json, "json")?)?))
}

/// # Safety
/// `path` must be a valid NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn convsl_instance_load(path: *const c_char, out: *mut *mut ConvslInstance) -> ConvslStatus {
    guard(|| write_handle(out, load_instance(text(path, "path")?)?))
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `inst` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn convsl_instance_free(inst: *mut ConvslInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Ambient dimension, or 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn convsl_instance_dim(inst: *const ConvslInstance) -> usize {
    inst.as_ref().map_or(0, |h| h.inner.dim())
}

/// Membership in the generated subspace. `point_json` is an array of
/// rational strings; writes `{"member", "p_max", "witness"}`.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn convsl_membership(
    inst: *const ConvslInstance,
    point_json: *const c_char,
    out: *mut *mut c_char,
) -> ConvslStatus {
    guard(|| {
        let inst = instance(inst)?;
        let x: QVector = serde_json::from_str(text(point_json, "point")?)?;
        write_json(out, &membership(inst, &x)?)
    })
}

/// Extended join; writes `{"result", "witness"}`.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn convsl_join(
    inst: *const ConvslInstance,
    x_json: *const c_char,
    y_json: *const c_char,
    out: *mut *mut c_char,
) -> ConvslStatus {
    guard(|| {
        let inst = instance(inst)?;
        let x: QVector = serde_json::from_str(text(x_json, "x")?)?;
        let y: QVector = serde_json::from_str(text(y_json, "y")?)?;
        write_json(out, &join_points(inst, &x, &y)?)
    })
}

/// Support function values; writes `{"values": [...]}`.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn convsl_support(
    polytope_json: *const c_char,
    directions_json: *const c_char,
    out: *mut *mut c_char,
) -> ConvslStatus {
    guard(|| {
        let p: Polytope = serde_json::from_str(text(polytope_json, "polytope")?)?;
        let dirs: Vec<QVector> = serde_json::from_str(text(directions_json, "directions")?)?;
        write_json(out, &SupportAnswer { values: support_embed(&p, &dirs)? })
    })
}

/// `a` and `b` are rational strings: `(p, q)` for swap and from-pq, `(p, r)`
/// for from-pr.
///
/// # Safety
/// Pointers must be valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn convsl_solve_params(
    mode: ConvslParamMode,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> ConvslStatus {
    guard(|| {
        let a: Rational = text(a, "a")?.parse()?;
        let b: Rational = text(b, "b")?.parse()?;
        let mode = match mode {
            ConvslParamMode::Swap => ParamMode::Swap,
            ConvslParamMode::FromPq => ParamMode::FromPq,
            ConvslParamMode::FromPr => ParamMode::FromPr,
        };
        write_json(out, &solve_params(mode, &a, &b)?)
    })
}

/// Runs the law suite and writes its summary. `laws` may be null for all
/// groups. `*passed` is set to 1 iff every law passed.
///
/// # Safety
/// Pointers must be valid as described in the module docs; `passed` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn convsl_check(
    inst: *const ConvslInstance,
    seed: u64,
    cases: usize,
    laws: *const c_char,
    passed: *mut i32,
    out: *mut *mut c_char,
) -> ConvslStatus {
    guard(|| {
        let inst = instance(inst)?;
        if passed.is_null() {
            return Err(null("passed"));
        }
        let laws = if laws.is_null() { "all" } else { text(laws, "laws")? };
        let cfg = SuiteConfig { seed, cases, laws: parse_law_selector(laws)?, ..SuiteConfig::default() };
        let outcome = run_suite(inst, &cfg)?;
        write_json(out, &outcome.summary)?;
        *passed = i32::from(outcome.summary.passed);
        Ok(())
    })
}

/// Releases a string returned through an `out` parameter; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn convsl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn convsl_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn convsl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
