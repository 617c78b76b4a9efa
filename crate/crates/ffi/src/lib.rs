//! C ABI over `qident-core`.
//!
//! Every fallible function returns a [`QidentStatus`] and writes its result
//! through an out-pointer. On failure [`qident_last_error`] describes the
//! problem. Rational functions are handed out as opaque [`QidentRatFunc`]
//! handles; strings returned by the library are released with
//! [`qident_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qident_core::arith::{parse_rational, RatFunc, Rational};
use qident_core::cli::{cmd_verify, format_expansion, hsym_builtin, parse_config, parse_monomial, validate_config};
use qident_core::divisor::sigma;
use qident_core::identities::a_coeff;
use qident_core::qseries::{gauss_binomial, pochhammer};
use qident_core::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QidentStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A string argument could not be parsed.
    Parse = 3,
    /// The inputs are outside the domain of the requested quantity.
    Domain = 4,
    /// A q-expansion was requested for a function with a pole at q = 0.
    PoleAtZero = 5,
    /// The result does not fit the output type.
    Overflow = 6,
    /// The verification config was rejected.
    InvalidConfig = 7,
    /// An internal error; the message is in [`qident_last_error`].
    Internal = 8,
}

/// Opaque handle to an exact rational function in `q`.
pub struct QidentRatFunc(RatFunc);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(QidentStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::PoleAtZero => QidentStatus::PoleAtZero,
            _ => QidentStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> QidentStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            QidentStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            QidentStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(QidentStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(QidentStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn rational_arg(p: *const c_char, what: &str) -> Result<Rational, Failure> {
    let s = str_arg(p, what)?;
    parse_rational(s).ok_or_else(|| Failure(QidentStatus::Parse, format!("{what}: '{s}' is not a rational p or p/r")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_handle(out: *mut *mut QidentRatFunc, f: RatFunc) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(QidentRatFunc(f))));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(QidentStatus::Internal, e.to_string()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn handle<'a>(f: *const QidentRatFunc) -> Result<&'a RatFunc, Failure> {
    f.as_ref().map(|h| &h.0).ok_or_else(|| null("handle"))
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn qident_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// The Gaussian binomial `[n, k]` (zero outside `0 <= k <= n`).
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qident_gaussian(n: i64, k: i64, out: *mut *mut QidentRatFunc) -> QidentStatus {
    guard(|| write_handle(out, RatFunc::from_poly(gauss_binomial(n, k)?)))
}

/// The q-Pochhammer symbol `(x)_n` with `x` a monomial such as `"q"`, `"-2/3"`
/// or `"5*q^2"`.
///
/// # Safety
/// `x` must be a nul-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qident_pochhammer(x: *const c_char, n: i64, out: *mut *mut QidentRatFunc) -> QidentStatus {
    guard(|| {
        let x = parse_monomial(str_arg(x, "x")?).map_err(|e| Failure(QidentStatus::Parse, e.to_string()))?;
        write_handle(out, pochhammer(&x, n)?)
    })
}

/// `h_m(q^k/(1 - z q^k) : k = i..n)` with `z` given as `"p"` or `"p/r"`.
///
/// # Safety
/// `z` must be a nul-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qident_hsym(
    m: i64,
    n: i64,
    z: *const c_char,
    i: i64,
    out: *mut *mut QidentRatFunc,
) -> QidentStatus {
    guard(|| {
        let z = rational_arg(z, "z")?;
        write_handle(out, hsym_builtin(m, n, &z, i)?)
    })
}

/// The coefficient `A_i(z)` of the x-polynomial for the given `n`, `m`.
///
/// # Safety
/// `z` must be a nul-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qident_a_coeff(
    z: *const c_char,
    i: i64,
    n: i64,
    m: i64,
    out: *mut *mut QidentRatFunc,
) -> QidentStatus {
    guard(|| {
        let z = rational_arg(z, "z")?;
        write_handle(out, a_coeff(&z, i, n, m)?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `f` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn qident_ratfunc_free(f: *mut QidentRatFunc) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Canonical rendering, `num` alone or `(num) / (den)`.
///
/// # Safety
/// `f` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qident_ratfunc_to_string(f: *const QidentRatFunc, out: *mut *mut c_char) -> QidentStatus {
    guard(|| write_string(out, handle(f)?.to_string()))
}

/// Coefficients of `q^0..q^order` as `"c0, c1, ..."` with each `c` written
/// `p` or `p/r`.
///
/// # Safety
/// `f` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qident_ratfunc_q_expand(
    f: *const QidentRatFunc,
    order: usize,
    out: *mut *mut c_char,
) -> QidentStatus {
    guard(|| write_string(out, format_expansion(handle(f)?, order)?))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn qident_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The divisor function `sigma_r(n)` for `r` in {0, 1} and `n >= 1`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qident_sigma(r: u32, n: i64, out: *mut u64) -> QidentStatus {
    guard(|| {
        let s = sigma(r, n)?;
        let s =
            u64::try_from(s).map_err(|_| Failure(QidentStatus::Overflow, format!("sigma_{r}({n}) exceeds 64 bits")))?;
        write_out(out, s)
    })
}

/// Runs the verification suite described by a TOML config (the same keys as
/// `qident verify --config`) and returns the JSON report. `failures`
/// receives the number of failed checks and may be null.
///
/// # Safety
/// `config_toml` must be a nul-terminated string, `out_json` valid for a
/// pointer write and `failures` null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qident_verify(
    config_toml: *const c_char,
    out_json: *mut *mut c_char,
    failures: *mut usize,
) -> QidentStatus {
    guard(|| {
        let text = str_arg(config_toml, "config")?;
        let invalid = |e: qident_core::cli::CliError| Failure(QidentStatus::InvalidConfig, e.to_string());
        let cfg = parse_config(text).map_err(invalid)?;
        validate_config(&cfg).map_err(invalid)?;
        let report = cmd_verify(cfg);
        if !failures.is_null() {
            failures.write(report.summary.fail);
        }
        write_string(out_json, report.to_json())
    })
}
