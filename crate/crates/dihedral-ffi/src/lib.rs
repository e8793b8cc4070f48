//! C ABI over the dihedral crate.
//!
//! Conventions:
//!
//! - Every function returns a [`DihedralStatus`]; results travel through out
//!   pointers. `DIHEDRAL_STATUS_OK` is zero.
//! - Handle types (`DihedralSeries`, `DihedralTable`, ...) are opaque. Each
//!   `*_new` call transfers ownership to the caller, who must release the
//!   handle with the matching `*_free` exactly once. `*_free` accepts null.
//! - Strings are written into caller-provided buffers as NUL-terminated
//!   UTF-8. `written` always receives the required size in bytes including
//!   the NUL, so a call with `cap = 0` sizes the buffer; if the buffer is
//!   too small the status is `DIHEDRAL_STATUS_BUFFER_TOO_SMALL` and the
//!   buffer is left untouched.
//! - Counts are decimal strings because they outgrow every fixed-width
//!   integer type.

use std::os::raw::c_char;

use dihedral::characters::CharacterTable;
use dihedral::counting::CountSeries;
use dihedral::error::DihedralError;
use dihedral::spectral::IdempotentSet;
use dihedral::verify::VerifyReport;

/// Status code of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DihedralStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A parameter violated a precondition (bad n, parity mismatch, ...).
    InvalidArgument = 2,
    /// An oracle enumeration would exceed the tuple budget.
    BudgetExceeded = 3,
    /// The caller-provided buffer cannot hold the result.
    BufferTooSmall = 4,
    /// A row, column, or member index was out of range.
    IndexOutOfRange = 5,
}

fn status_of(e: &DihedralError) -> DihedralStatus {
    match e {
        DihedralError::BudgetExceeded { .. } => DihedralStatus::BudgetExceeded,
        _ => DihedralStatus::InvalidArgument,
    }
}

/// Opaque handle to a count series.
pub struct DihedralSeries {
    inner: CountSeries,
}

/// Opaque handle to a character table.
pub struct DihedralTable {
    inner: CharacterTable,
}

/// Opaque handle to a complete orthogonal idempotent set.
pub struct DihedralIdempotents {
    inner: IdempotentSet,
}

/// Opaque handle to a verification report.
pub struct DihedralVerifyReport {
    inner: VerifyReport,
}

unsafe fn free_handle<H>(handle: *mut H) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Writes `s` into `buf` as NUL-terminated UTF-8; `written` receives the
/// required size including the NUL.
unsafe fn write_str(s: &str, buf: *mut c_char, cap: usize, written: *mut usize) -> DihedralStatus {
    if written.is_null() {
        return DihedralStatus::NullPointer;
    }
    let needed = s.len() + 1;
    *written = needed;
    if cap < needed {
        return DihedralStatus::BufferTooSmall;
    }
    if buf.is_null() {
        return DihedralStatus::NullPointer;
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    DihedralStatus::Ok
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dihedral_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Number of semi-magic squares with line sum `r`, written as a decimal
/// string.
///
/// # Safety
/// `buf` must point to at least `cap` writable bytes and `written` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_count(
    n: u32,
    r: u32,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    match dihedral::counting::count_closed(n as usize, r as u64) {
        Ok(v) => write_str(&v.to_string(), buf, cap, written),
        Err(e) => status_of(&e),
    }
}

/// Brute-force oracle count (deduplicated enumeration), written as a
/// decimal string. Fails with `BUDGET_EXCEEDED` when the enumeration would
/// visit more than `max_tuples` tuples.
///
/// # Safety
/// Same buffer contract as [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_oracle_count(
    n: u32,
    r: u32,
    max_tuples: u64,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    match dihedral::counting::oracle_count(n as usize, r as u64, max_tuples) {
        Ok(v) => write_str(&v.to_string(), buf, cap, written),
        Err(e) => status_of(&e),
    }
}

// ---------------------------------------------------------------- series

/// Builds the count series H(0..=r_max) with its h* vector.
///
/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`dihedral_series_free`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_series_new(
    n: u32,
    r_max: u32,
    out: *mut *mut DihedralSeries,
) -> DihedralStatus {
    if out.is_null() {
        return DihedralStatus::NullPointer;
    }
    match dihedral::counting::series(n as usize, r_max as u64) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(DihedralSeries { inner }));
            DihedralStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of stored values (r_max + 1).
///
/// # Safety
/// `series` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_series_len(
    series: *const DihedralSeries,
    len: *mut usize,
) -> DihedralStatus {
    let Some(s) = series.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if len.is_null() {
        return DihedralStatus::NullPointer;
    }
    *len = s.inner.values.len();
    DihedralStatus::Ok
}

/// H(r) as a decimal string.
///
/// # Safety
/// `series` must be a live handle; buffer contract as in [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_series_value(
    series: *const DihedralSeries,
    r: u32,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    let Some(s) = series.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    match s.inner.values.get(r as usize) {
        Some(v) => write_str(&v.to_string(), buf, cap, written),
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Length of the h* coefficient vector.
///
/// # Safety
/// `series` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_series_hstar_len(
    series: *const DihedralSeries,
    len: *mut usize,
) -> DihedralStatus {
    let Some(s) = series.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if len.is_null() {
        return DihedralStatus::NullPointer;
    }
    *len = s.inner.hstar.len();
    DihedralStatus::Ok
}

/// The i-th h* coefficient as a decimal string.
///
/// # Safety
/// `series` must be a live handle; buffer contract as in [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_series_hstar_coeff(
    series: *const DihedralSeries,
    i: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    let Some(s) = series.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    match s.inner.hstar.get(i) {
        Some(v) => write_str(&v.to_string(), buf, cap, written),
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Releases a series handle.
///
/// # Safety
/// `series` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn dihedral_series_free(series: *mut DihedralSeries) {
    free_handle(series);
}

// ---------------------------------------------------------------- character table

/// Builds the character table.
///
/// # Safety
/// `out` must be valid; release the handle with [`dihedral_table_free`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_new(
    n: u32,
    out: *mut *mut DihedralTable,
) -> DihedralStatus {
    if out.is_null() {
        return DihedralStatus::NullPointer;
    }
    match dihedral::characters::character_table(n as usize) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(DihedralTable { inner }));
            DihedralStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of conjugacy classes (table columns).
///
/// # Safety
/// `table` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_class_count(
    table: *const DihedralTable,
    count: *mut usize,
) -> DihedralStatus {
    let Some(t) = table.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if count.is_null() {
        return DihedralStatus::NullPointer;
    }
    *count = t.inner.classes().len();
    DihedralStatus::Ok
}

/// Number of rows, including the permutation-character row.
///
/// # Safety
/// `table` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_row_count(
    table: *const DihedralTable,
    count: *mut usize,
) -> DihedralStatus {
    let Some(t) = table.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if count.is_null() {
        return DihedralStatus::NullPointer;
    }
    *count = t.inner.rows().len();
    DihedralStatus::Ok
}

/// Size of the i-th conjugacy class.
///
/// # Safety
/// `table` must be a live handle and `size` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_class_size(
    table: *const DihedralTable,
    class: usize,
    size: *mut usize,
) -> DihedralStatus {
    let Some(t) = table.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if size.is_null() {
        return DihedralStatus::NullPointer;
    }
    match t.inner.classes().get(class) {
        Some(c) => {
            *size = c.size();
            DihedralStatus::Ok
        }
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Label of the i-th conjugacy class (e, R^±1, C, ...).
///
/// # Safety
/// `table` must be a live handle; buffer contract as in [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_class_label(
    table: *const DihedralTable,
    class: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    let Some(t) = table.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    match t.inner.classes().get(class) {
        Some(c) => write_str(&c.label(), buf, cap, written),
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Label of the i-th row (triv, det, pi2(1), ..., rho).
///
/// # Safety
/// `table` must be a live handle; buffer contract as in [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_row_label(
    table: *const DihedralTable,
    row: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    let Some(t) = table.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    match t.inner.rows().get(row) {
        Some((label, _)) => write_str(&label.to_string(), buf, cap, written),
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Character value at (row, class) as real and imaginary parts.
///
/// # Safety
/// `table` must be a live handle; `re` and `im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_value(
    table: *const DihedralTable,
    row: usize,
    class: usize,
    re: *mut f64,
    im: *mut f64,
) -> DihedralStatus {
    let Some(t) = table.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if re.is_null() || im.is_null() {
        return DihedralStatus::NullPointer;
    }
    let Some((_, values)) = t.inner.rows().get(row) else {
        return DihedralStatus::IndexOutOfRange;
    };
    let Some(z) = values.get(class) else {
        return DihedralStatus::IndexOutOfRange;
    };
    *re = z.re;
    *im = z.im;
    DihedralStatus::Ok
}

/// Releases a table handle.
///
/// # Safety
/// `table` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn dihedral_table_free(table: *mut DihedralTable) {
    free_handle(table);
}

// ---------------------------------------------------------------- idempotents

/// Builds the complete orthogonal idempotent set. `eps <= 0` selects the
/// library default tolerance.
///
/// # Safety
/// `out` must be valid; release with [`dihedral_idempotents_free`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_idempotents_new(
    n: u32,
    eps: f64,
    out: *mut *mut DihedralIdempotents,
) -> DihedralStatus {
    if out.is_null() {
        return DihedralStatus::NullPointer;
    }
    let eps = if eps > 0.0 {
        eps
    } else {
        dihedral::magic::DEFAULT_EPS
    };
    match dihedral::spectral::idempotent_set_with_eps(n as usize, eps) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(DihedralIdempotents { inner }));
            DihedralStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of idempotents in the set.
///
/// # Safety
/// `set` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_idempotents_count(
    set: *const DihedralIdempotents,
    count: *mut usize,
) -> DihedralStatus {
    let Some(s) = set.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if count.is_null() {
        return DihedralStatus::NullPointer;
    }
    *count = s.inner.members.len();
    DihedralStatus::Ok
}

/// Label of the i-th idempotent (triv, sgn, det*sgn, pi2(j)).
///
/// # Safety
/// `set` must be a live handle; buffer contract as in [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_idempotents_label(
    set: *const DihedralIdempotents,
    member: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    let Some(s) = set.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    match s.inner.members.get(member) {
        Some((label, _)) => write_str(&label.to_string(), buf, cap, written),
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Matrix entry (row, col) of the i-th idempotent.
///
/// # Safety
/// `set` must be a live handle; `re` and `im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dihedral_idempotents_entry(
    set: *const DihedralIdempotents,
    member: usize,
    row: usize,
    col: usize,
    re: *mut f64,
    im: *mut f64,
) -> DihedralStatus {
    let Some(s) = set.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if re.is_null() || im.is_null() {
        return DihedralStatus::NullPointer;
    }
    let Some((_, m)) = s.inner.members.get(member) else {
        return DihedralStatus::IndexOutOfRange;
    };
    if row >= m.n() || col >= m.n() {
        return DihedralStatus::IndexOutOfRange;
    }
    let z = m.mat().get(row, col);
    *re = z.re;
    *im = z.im;
    DihedralStatus::Ok
}

/// Releases an idempotent-set handle.
///
/// # Safety
/// `set` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn dihedral_idempotents_free(set: *mut DihedralIdempotents) {
    free_handle(set);
}

// ---------------------------------------------------------------- verification

/// Runs the full cross-checking suite. `eps <= 0` selects the default
/// tolerance; oracle sub-checks stay within `max_tuples`.
///
/// # Safety
/// `out` must be valid; release with [`dihedral_verify_free`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_run(
    n: u32,
    max_tuples: u64,
    eps: f64,
    out: *mut *mut DihedralVerifyReport,
) -> DihedralStatus {
    if out.is_null() {
        return DihedralStatus::NullPointer;
    }
    let eps = if eps > 0.0 {
        eps
    } else {
        dihedral::magic::DEFAULT_EPS
    };
    let opts = dihedral::verify::VerifyOptions { max_tuples, eps };
    match dihedral::verify::run_all(n as usize, opts) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(DihedralVerifyReport { inner }));
            DihedralStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Total number of checks in the report.
///
/// # Safety
/// `report` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_check_count(
    report: *const DihedralVerifyReport,
    count: *mut usize,
) -> DihedralStatus {
    let Some(r) = report.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if count.is_null() {
        return DihedralStatus::NullPointer;
    }
    *count = r.inner.checks.len();
    DihedralStatus::Ok
}

/// Number of passed checks.
///
/// # Safety
/// `report` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_passed_count(
    report: *const DihedralVerifyReport,
    count: *mut usize,
) -> DihedralStatus {
    let Some(r) = report.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if count.is_null() {
        return DihedralStatus::NullPointer;
    }
    *count = r.inner.passed_count();
    DihedralStatus::Ok
}

/// Name of the i-th check.
///
/// # Safety
/// `report` must be a live handle; buffer contract as in [`dihedral_count`].
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_check_name(
    report: *const DihedralVerifyReport,
    i: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> DihedralStatus {
    let Some(r) = report.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    match r.inner.checks.get(i) {
        Some(c) => write_str(&c.name, buf, cap, written),
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Whether the i-th check passed (1) or failed (0).
///
/// # Safety
/// `report` must be a live handle and `passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_check_passed(
    report: *const DihedralVerifyReport,
    i: usize,
    passed: *mut u8,
) -> DihedralStatus {
    let Some(r) = report.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if passed.is_null() {
        return DihedralStatus::NullPointer;
    }
    match r.inner.checks.get(i) {
        Some(c) => {
            *passed = c.passed as u8;
            DihedralStatus::Ok
        }
        None => DihedralStatus::IndexOutOfRange,
    }
}

/// Whether every check passed (1) or not (0).
///
/// # Safety
/// `report` must be a live handle and `passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_all_passed(
    report: *const DihedralVerifyReport,
    passed: *mut u8,
) -> DihedralStatus {
    let Some(r) = report.as_ref() else {
        return DihedralStatus::NullPointer;
    };
    if passed.is_null() {
        return DihedralStatus::NullPointer;
    }
    *passed = r.inner.all_passed() as u8;
    DihedralStatus::Ok
}

/// Releases a report handle.
///
/// # Safety
/// `report` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn dihedral_verify_free(report: *mut DihedralVerifyReport) {
    free_handle(report);
}
