//! C ABI over `stdpuzzle`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Strings returned through `char **` are
//! NUL-terminated, heap-allocated, and released with [`sp_string_free`].
//! Every fallible call returns an [`SpStatus`]; the detail of the most
//! recent failure on the calling thread is available from
//! [`sp_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stdpuzzle::count::profile;
use stdpuzzle::dictionary::{census, emit_report, Parallelism, ReportFormat};
use stdpuzzle::verify::{run_suite, Suite};
use stdpuzzle::{dp_count, is_connected, BoundaryProfile, Error, Support};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    Overflow = 5,
    OutOfRange = 6,
    Io = 7,
    Panic = 8,
}

/// A set of pieces.
pub struct SpSupport(Support);

/// Boundary profile of a support at one width.
pub struct SpProfile {
    cells: Vec<(u16, u16, CString)>,
    total: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> SpStatus {
    match e {
        Error::UnknownCode(_)
        | Error::DuplicatePiece(_)
        | Error::EmptySupport
        | Error::PuzzleLiteral(_)
        | Error::UnknownSuite(_)
        | Error::UnknownFormat(_)
        | Error::Json(_) => SpStatus::Parse,
        Error::Io(_) | Error::EmptyOeisTable(_) => SpStatus::Io,
        _ => SpStatus::Domain,
    }
}

fn guard(f: impl FnOnce() -> Result<(), SpStatus>) -> SpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SpStatus::Panic
        }
    }
}

fn lift<T>(r: stdpuzzle::Result<T>) -> Result<T, SpStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn input_str<'a>(s: *const c_char) -> Result<&'a str, SpStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(SpStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        SpStatus::InvalidUtf8
    })
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, SpStatus> {
    h.as_ref().ok_or_else(|| {
        set_error("null handle");
        SpStatus::NullPointer
    })
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SpStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(SpStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), SpStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains NUL");
        SpStatus::Domain
    })?;
    if out.is_null() {
        set_error("null output pointer");
        return Err(SpStatus::NullPointer);
    }
    out.write(c.into_raw());
    Ok(())
}

/// Static description of a status code. Never NULL; do not free.
#[no_mangle]
pub extern "C" fn sp_status_message(status: c_int) -> *const c_char {
    let s: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer\0",
        2 => b"invalid UTF-8\0",
        3 => b"parse error\0",
        4 => b"argument outside the supported domain\0",
        5 => b"result does not fit\0",
        6 => b"index out of range\0",
        7 => b"I/O error\0",
        8 => b"internal panic\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

/// Copy of the last error message on this thread, or NULL if none.
#[no_mangle]
pub extern "C" fn sp_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .clone()
            .map_or(ptr::null_mut(), CString::into_raw)
    })
}

/// # Safety
/// `s` must be NULL or a pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a support literal such as `"BCEG"`.
///
/// # Safety
/// `literal` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_support_parse(
    literal: *const c_char,
    out: *mut *mut SpSupport,
) -> SpStatus {
    guard(|| {
        let s: Support = lift(input_str(literal)?.parse())?;
        write_out(out, Box::into_raw(Box::new(SpSupport(s))))
    })
}

/// # Safety
/// `support` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sp_support_free(support: *mut SpSupport) {
    if !support.is_null() {
        drop(Box::from_raw(support));
    }
}

/// Number of pieces, or 0 for a NULL handle.
///
/// # Safety
/// `support` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_support_len(support: *const SpSupport) -> usize {
    support.as_ref().map_or(0, |s| s.0.len())
}

/// # Safety
/// `support` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_support_is_connected(support: *const SpSupport) -> bool {
    support.as_ref().is_some_and(|s| is_connected(s.0))
}

/// # Safety
/// `support` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_support_name(
    support: *const SpSupport,
    out: *mut *mut c_char,
) -> SpStatus {
    guard(|| write_string(out, handle(support)?.0.name()))
}

/// Class representative under the symmetry group, as a new handle.
///
/// # Safety
/// `support` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_support_canonical(
    support: *const SpSupport,
    out: *mut *mut SpSupport,
) -> SpStatus {
    guard(|| {
        let c = handle(support)?.0.canonical();
        write_out(out, Box::into_raw(Box::new(SpSupport(c))))
    })
}

/// `|P^n|` as a decimal string.
///
/// # Safety
/// `support` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_count(
    support: *const SpSupport,
    n: usize,
    out: *mut *mut c_char,
) -> SpStatus {
    guard(|| {
        let c = lift(dp_count(handle(support)?.0, n))?;
        write_string(out, c.to_string())
    })
}

/// `|P^n|` as an integer; `SP_STATUS_OVERFLOW` if it exceeds 64 bits.
///
/// # Safety
/// `support` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_count_u64(
    support: *const SpSupport,
    n: usize,
    out: *mut u64,
) -> SpStatus {
    guard(|| {
        let c = lift(dp_count(handle(support)?.0, n))?;
        let v = u64::try_from(&c).map_err(|_| {
            set_error(format!("count {c} exceeds 64 bits"));
            SpStatus::Overflow
        })?;
        write_out(out, v)
    })
}

fn profile_handle(p: &BoundaryProfile) -> SpProfile {
    let text = |v: String| CString::new(v).expect("decimal digits");
    SpProfile {
        cells: p
            .nonzero()
            .map(|(x, y, c)| (x, y, text(c.to_string())))
            .collect(),
        total: text(p.total().to_string()),
    }
}

/// # Safety
/// `support` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_new(
    support: *const SpSupport,
    n: usize,
    out: *mut *mut SpProfile,
) -> SpStatus {
    guard(|| {
        let p = lift(profile(handle(support)?.0, n))?;
        write_out(out, Box::into_raw(Box::new(profile_handle(&p))))
    })
}

/// # Safety
/// `profile` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_free(profile: *mut SpProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// Number of nonzero cells, or 0 for a NULL handle.
///
/// # Safety
/// `profile` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_len(profile: *const SpProfile) -> usize {
    profile.as_ref().map_or(0, |p| p.cells.len())
}

/// Cell `index` in (X, Y) order. `count` borrows from the handle and stays
/// valid until it is freed.
///
/// # Safety
/// `profile` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_cell(
    profile: *const SpProfile,
    index: usize,
    top: *mut u16,
    bottom: *mut u16,
    count: *mut *const c_char,
) -> SpStatus {
    guard(|| {
        let p = handle(profile)?;
        let (x, y, c) = p.cells.get(index).ok_or_else(|| {
            set_error(format!("cell {index} of {}", p.cells.len()));
            SpStatus::OutOfRange
        })?;
        write_out(top, *x)?;
        write_out(bottom, *y)?;
        write_out(count, c.as_ptr())
    })
}

/// Sum of all cells; borrows from the handle.
///
/// # Safety
/// `profile` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_profile_total(profile: *const SpProfile) -> *const c_char {
    profile.as_ref().map_or(ptr::null(), |p| p.total.as_ptr())
}

/// Runs a verification suite (`catalan`, `tangent`, `bceg`, `secant`,
/// `named`, `all`) and returns the reports as JSON. `all_passed` is set to
/// whether every report passed, counting deviations as passes.
///
/// # Safety
/// `suite` must be a NUL-terminated string; out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_verify(
    suite: *const c_char,
    n_max: usize,
    all_passed: *mut bool,
    out_json: *mut *mut c_char,
) -> SpStatus {
    guard(|| {
        let suite: Suite = lift(input_str(suite)?.parse())?;
        let reports = lift(run_suite(suite, n_max))?;
        let doc = lift(serde_json::to_string(&reports).map_err(Error::from))?;
        write_out(all_passed, reports.iter().all(|r| r.passed()))?;
        write_string(out_json, doc)
    })
}

/// Census report of all connected classes of `size` pieces with `terms`
/// terms from n = 2, in `format` (`text`, `json` or `markdown`).
///
/// # Safety
/// `format` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sp_census(
    size: usize,
    terms: usize,
    format: *const c_char,
    out: *mut *mut c_char,
) -> SpStatus {
    guard(|| {
        let format: ReportFormat = lift(input_str(format)?.parse())?;
        let records = lift(census(size, terms + 1, Parallelism::Auto))?;
        write_string(out, lift(emit_report(&records, format))?)
    })
}
