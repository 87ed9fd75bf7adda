//! C ABI for the quasicartan library.
//!
//! Matrices are opaque handles created by the `qc_matrix_*` constructors and
//! released with [`qc_matrix_free`]. Strings returned through `char **` out
//! parameters are UTF-8, NUL-terminated, allocated by this library and must
//! be released with [`qc_string_free`]. Every fallible function returns a
//! [`QcStatus`]; on failure [`qc_last_error_message`] describes the error
//! until the next call on the same thread.
//!
//! The generated header lives at `include/quasicartan.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quasicartan::companion::{
    c_plus, find_positive_companion, verify_companion, CompanionError, SearchOptions,
    DEFAULT_SEARCH_CAP,
};
use quasicartan::io::{matrix_to_json_value, matrix_to_text, parse_matrix_auto};
use quasicartan::matrix::IntMatrix;
use quasicartan::positivity::is_positive;
use quasicartan::report::classify;
use quasicartan::symmetrize::{
    check_skew_symmetrizable, check_symmetrizable, find_symmetrizer, integer_normalize,
};

/// Opaque handle to a square integer matrix.
pub struct QcMatrix {
    inner: IntMatrix,
}

/// Result code of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The matrix text/JSON could not be parsed.
    ParseError = 3,
    /// An index was outside the matrix.
    OutOfRange = 4,
    /// An entry does not fit the requested machine type.
    Overflow = 5,
    /// Positivity was asked of a matrix that is not symmetric by signs.
    NotSymmetricBySigns = 6,
    /// A companion was asked of a matrix that is not skew-symmetrizable.
    NotSkewSymmetrizable = 7,
    /// The companion search hit its assignment budget before deciding.
    CapExceeded = 8,
    /// Two matrices of different dimensions were combined.
    DimensionMismatch = 9,
    /// An internal invariant failed; this is a bug in the library.
    InternalError = 10,
}

/// Options for the companion search; see `qc_companion_options_default`.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct QcCompanionOptions {
    /// Apply the pair/triple product bounds as pruning rules.
    pub prune: bool,
    /// Use the small-dimension, dense and per-component shortcuts.
    pub fast_paths: bool,
    /// Maximum number of sign assignments to enumerate before giving up.
    pub cap: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<Vec<u8>>) {
    let message = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn guarded(f: impl FnOnce() -> QcStatus) -> QcStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic");
            QcStatus::InternalError
        }
    }
}

fn error(status: QcStatus, message: impl Into<Vec<u8>>) -> QcStatus {
    set_last_error(message);
    status
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    let c = CString::new(s).expect("no interior NUL in emitted text");
    *out = c.into_raw();
}

unsafe fn matrix_arg<'a>(m: *const QcMatrix) -> Result<&'a IntMatrix, QcStatus> {
    m.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| error(QcStatus::NullPointer, "matrix handle is null"))
}

fn options_arg(options: *const QcCompanionOptions) -> SearchOptions {
    if options.is_null() {
        return SearchOptions::default();
    }
    let o = unsafe { &*options };
    SearchOptions {
        prune: o.prune,
        fast_paths: o.fast_paths,
        cap: o.cap,
    }
}

/// Message for the most recent failure on this thread, or null after a
/// success. The pointer is owned by the library and valid until the next
/// `qc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn qc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |message| message.as_ptr())
    })
}

/// Default companion search options: pruning and fast paths on, cap 2^24.
#[no_mangle]
pub extern "C" fn qc_companion_options_default() -> QcCompanionOptions {
    QcCompanionOptions {
        prune: true,
        fast_paths: true,
        cap: DEFAULT_SEARCH_CAP,
    }
}

/// Parses a matrix from its text or JSON form (auto-detected).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_parse(
    text: *const c_char,
    out: *mut *mut QcMatrix,
) -> QcStatus {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return error(QcStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return error(QcStatus::InvalidUtf8, "matrix text is not valid UTF-8");
        };
        match parse_matrix_auto(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(QcMatrix { inner }));
                QcStatus::Ok
            }
            Err(e) => error(QcStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds an `n` x `n` matrix from a row-major buffer of `n * n` entries.
///
/// # Safety
/// `entries` must point to `n * n` readable values and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_from_i64(
    n: usize,
    entries: *const i64,
    out: *mut *mut QcMatrix,
) -> QcStatus {
    guarded(|| {
        if out.is_null() || (entries.is_null() && n > 0) {
            return error(QcStatus::NullPointer, "null argument");
        }
        let slice = if n == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(entries, n * n)
        };
        let inner = IntMatrix::from_flat_i64(n, slice).expect("slice length checked");
        *out = Box::into_raw(Box::new(QcMatrix { inner }));
        QcStatus::Ok
    })
}

/// Releases a matrix handle. Null is ignored.
///
/// # Safety
/// `m` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_free(m: *mut QcMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned through a `char **` out parameter. Null is
/// ignored.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn qc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Dimension of a matrix; 0 for a null handle.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_dim(m: *const QcMatrix) -> usize {
    m.as_ref().map_or(0, |h| h.inner.n())
}

/// Reads one entry as an `i64`; fails with `Overflow` if it does not fit.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_entry_i64(
    m: *const QcMatrix,
    i: usize,
    j: usize,
    out: *mut i64,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        if i >= matrix.n() || j >= matrix.n() {
            return error(QcStatus::OutOfRange, format!("index ({i}, {j}) out of range"));
        }
        match matrix.entry_i64(i, j) {
            Some(value) => {
                *out = value;
                QcStatus::Ok
            }
            None => error(QcStatus::Overflow, "entry does not fit in i64"),
        }
    })
}

/// Renders a matrix in the canonical text format.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_to_text(
    m: *const QcMatrix,
    out: *mut *mut c_char,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        write_string(out, matrix_to_text(matrix));
        QcStatus::Ok
    })
}

/// Renders a matrix as `{"n": ..., "rows": [[...]]}`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_matrix_to_json(
    m: *const QcMatrix,
    out: *mut *mut c_char,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        write_string(out, matrix_to_json_value(matrix).to_string());
        QcStatus::Ok
    })
}

unsafe fn predicate(
    m: *const QcMatrix,
    out: *mut bool,
    f: impl Fn(&IntMatrix) -> bool,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        *out = f(matrix);
        QcStatus::Ok
    })
}

/// True iff every off-diagonal pair is both zero or has positive product.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_is_symmetric_by_signs(
    m: *const QcMatrix,
    out: *mut bool,
) -> QcStatus {
    predicate(m, out, IntMatrix::is_symmetric_by_signs)
}

/// True iff the diagonal is zero and off-diagonal pairs have negative product.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_is_skew_symmetric_by_signs(
    m: *const QcMatrix,
    out: *mut bool,
) -> QcStatus {
    predicate(m, out, IntMatrix::is_skew_symmetric_by_signs)
}

unsafe fn symmetrizable_check(
    m: *const QcMatrix,
    verdict: *mut bool,
    witness_json: *mut *mut c_char,
    skew: bool,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if verdict.is_null() {
            return error(QcStatus::NullPointer, "verdict pointer is null");
        }
        let outcome = if skew {
            check_skew_symmetrizable(matrix)
        } else {
            check_symmetrizable(matrix)
        };
        *verdict = outcome.is_yes();
        if !witness_json.is_null() {
            *witness_json = match outcome.witness() {
                Some(d) => {
                    let mut holder = ptr::null_mut();
                    write_string(&mut holder, d.to_json_value().to_string());
                    holder
                }
                None => ptr::null_mut(),
            };
        }
        QcStatus::Ok
    })
}

/// Decides symmetrizability. On a yes verdict and a non-null `witness_json`,
/// stores the symmetrizer as JSON (caller frees); stores null otherwise.
///
/// # Safety
/// `m` must be a live handle, `verdict` valid, `witness_json` valid or null.
#[no_mangle]
pub unsafe extern "C" fn qc_check_symmetrizable(
    m: *const QcMatrix,
    verdict: *mut bool,
    witness_json: *mut *mut c_char,
) -> QcStatus {
    symmetrizable_check(m, verdict, witness_json, false)
}

/// Skew analogue of `qc_check_symmetrizable`.
///
/// # Safety
/// `m` must be a live handle, `verdict` valid, `witness_json` valid or null.
#[no_mangle]
pub unsafe extern "C" fn qc_check_skew_symmetrizable(
    m: *const QcMatrix,
    verdict: *mut bool,
    witness_json: *mut *mut c_char,
) -> QcStatus {
    symmetrizable_check(m, verdict, witness_json, true)
}

/// Constructs a symmetrizer for a matrix promised symmetrizable and stores it
/// as JSON. Garbage in, garbage out: no validation is performed. With
/// `normalize`, the result is rescaled to minimal positive integers per
/// connected component.
///
/// # Safety
/// `m` must be a live handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_find_symmetrizer(
    m: *const QcMatrix,
    normalize: bool,
    out_json: *mut *mut c_char,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out_json.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        let mut d = find_symmetrizer(matrix);
        if normalize {
            d = integer_normalize(&d, &matrix.connected_components());
        }
        write_string(out_json, d.to_json_value().to_string());
        QcStatus::Ok
    })
}

/// Decides positivity of a symmetrizable matrix by leading principal minors.
/// Fails with `NotSymmetricBySigns` when the criterion does not apply. On
/// success stores the verdict and, if `report_json` is non-null, the full
/// verdict JSON.
///
/// # Safety
/// `m` must be a live handle, `verdict` valid, `report_json` valid or null.
#[no_mangle]
pub unsafe extern "C" fn qc_is_positive(
    m: *const QcMatrix,
    verdict: *mut bool,
    report_json: *mut *mut c_char,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if verdict.is_null() {
            return error(QcStatus::NullPointer, "verdict pointer is null");
        }
        match is_positive(matrix) {
            Ok(result) => {
                *verdict = result.positive;
                if !report_json.is_null() {
                    write_string(report_json, result.to_json_value().to_string());
                }
                QcStatus::Ok
            }
            Err(e) => error(QcStatus::NotSymmetricBySigns, e.to_string()),
        }
    })
}

/// Builds the canonical companion candidate `C+` of a matrix.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_c_plus(m: *const QcMatrix, out: *mut *mut QcMatrix) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        *out = Box::into_raw(Box::new(QcMatrix { inner: c_plus(matrix) }));
        QcStatus::Ok
    })
}

/// Searches for a positive quasi-Cartan companion. `options` may be null for
/// defaults. Stores the search summary as JSON in `result_json` (if non-null)
/// and, when a companion was found and `companion` is non-null, a new matrix
/// handle for it (null when none exists).
///
/// Fails with `NotSkewSymmetrizable` for invalid input and `CapExceeded` when
/// the budget ran out before a decision.
///
/// # Safety
/// `m` must be a live handle; `options`, `companion` and `result_json` must
/// each be valid or null.
#[no_mangle]
pub unsafe extern "C" fn qc_find_positive_companion(
    m: *const QcMatrix,
    options: *const QcCompanionOptions,
    companion: *mut *mut QcMatrix,
    result_json: *mut *mut c_char,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        match find_positive_companion(matrix, &options_arg(options)) {
            Ok(result) => {
                if !result_json.is_null() {
                    write_string(result_json, result.to_json_value().to_string());
                }
                if !companion.is_null() {
                    *companion = result
                        .companion
                        .map_or(ptr::null_mut(), |inner| {
                            Box::into_raw(Box::new(QcMatrix { inner }))
                        });
                }
                QcStatus::Ok
            }
            Err(e @ CompanionError::NotSkewSymmetrizable(_)) => {
                error(QcStatus::NotSkewSymmetrizable, e.to_string())
            }
            Err(e @ CompanionError::CapExceeded { .. }) => {
                error(QcStatus::CapExceeded, e.to_string())
            }
            Err(e) => error(QcStatus::InternalError, e.to_string()),
        }
    })
}

/// Certificate check: is `c` a positive quasi-Cartan companion of `b`?
///
/// # Safety
/// `b` and `c` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qc_verify_companion(
    b: *const QcMatrix,
    c: *const QcMatrix,
    out: *mut bool,
) -> QcStatus {
    guarded(|| {
        let (b, c) = match (matrix_arg(b), matrix_arg(c)) {
            (Ok(b), Ok(c)) => (b, c),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        if out.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        match verify_companion(b, c) {
            Ok(verdict) => {
                *out = verdict;
                QcStatus::Ok
            }
            Err(e) => error(QcStatus::DimensionMismatch, e.to_string()),
        }
    })
}

/// Runs the full classification and stores the report as JSON. `options` may
/// be null for defaults; `integer_symmetrizer` rescales witnesses to minimal
/// positive integers.
///
/// # Safety
/// `m` must be a live handle, `out_json` valid, `options` valid or null.
#[no_mangle]
pub unsafe extern "C" fn qc_classify(
    m: *const QcMatrix,
    options: *const QcCompanionOptions,
    integer_symmetrizer: bool,
    out_json: *mut *mut c_char,
) -> QcStatus {
    guarded(|| {
        let matrix = match matrix_arg(m) {
            Ok(matrix) => matrix,
            Err(status) => return status,
        };
        if out_json.is_null() {
            return error(QcStatus::NullPointer, "out pointer is null");
        }
        let report = classify(matrix, &options_arg(options), integer_symmetrizer);
        write_string(out_json, report.to_json_value().to_string());
        QcStatus::Ok
    })
}
