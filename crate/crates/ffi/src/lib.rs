//! C ABI over the dual complex linear algebra toolkit.
//!
//! The surface follows the usual opaque-handle pattern: matrices live
//! behind [`DcmxMatrix`] pointers created by [`dcmx_matrix_parse_json`] and
//! released by [`dcmx_matrix_free`]; reports come back as JSON in C strings
//! released by [`dcmx_string_free`]. Every fallible call returns a
//! [`DcmxStatus`]; on any non-`Ok` status a human-readable message is
//! available from [`dcmx_last_error_message`] until the next failing call
//! on the same thread.
//!
//! Scalars cross the boundary as `[re_s, im_s, re_d, im_d]` doubles, the
//! same layout the JSON wire format uses.

use dcmx::{DCMatrix, DualComplex, Tol};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Opaque dual complex matrix handle.
pub struct DcmxMatrix {
    inner: DCMatrix,
}

/// Numerical tolerance profile; mirror of the library's tolerance set.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct DcmxTol {
    /// Absolute threshold below which a value is zero.
    pub abs: f64,
    /// Relative singular-value threshold for rank decisions.
    pub rank_rel: f64,
    /// Relative radius for clustering computed eigenvalues.
    pub cluster_rel: f64,
    /// Relative residual bound for eigenpair verification.
    pub eig_rel: f64,
    /// Relative residual bound for canonical-form reconstruction.
    pub jordan_rel: f64,
}

/// Call outcome. `Ok` is zero; everything else indicates failure and leaves
/// a message for [`dcmx_last_error_message`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DcmxStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text failed to parse or validate.
    ParseError = 3,
    /// Operand shapes are incompatible.
    ShapeMismatch = 4,
    /// The standard part of a matrix that must be invertible is singular.
    SingularStandardPart = 5,
    /// A scalar or vector that must be appreciable has zero standard part.
    NotAppreciable = 6,
    /// The input does not have the structure the operation requires
    /// (block layout, Jordan block, Hermitian symmetry, declared
    /// eigenvalues, …).
    StructureMismatch = 7,
    /// Eigenvalue clustering is ambiguous at the configured tolerance.
    IllConditioned = 8,
    /// A decomposition failed to converge.
    ConvergenceFailure = 9,
    /// Index out of range.
    OutOfRange = 10,
    /// The operation panicked; state is unchanged.
    Internal = 99,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &dcmx::Error) -> DcmxStatus {
    use dcmx::Error as E;
    match err {
        E::ParseError(_) => DcmxStatus::ParseError,
        E::ShapeMismatch(_) => DcmxStatus::ShapeMismatch,
        E::SingularStandardPart { .. } => DcmxStatus::SingularStandardPart,
        E::NotAppreciable | E::NegativeInput => DcmxStatus::NotAppreciable,
        E::NotAnEigenpair(_)
        | E::BadBlockStructure(_)
        | E::StandardPartNotBlockScalar(_)
        | E::EigenvaluesNotDistinct
        | E::StandardPartDefective
        | E::StandardPartNotJordanBlock(_)
        | E::NotHermitian { .. } => DcmxStatus::StructureMismatch,
        E::IllConditionedStructure(_) => DcmxStatus::IllConditioned,
        E::ConvergenceFailure(_) => DcmxStatus::ConvergenceFailure,
    }
}

fn fail(err: &dcmx::Error) -> DcmxStatus {
    set_error(&err.to_string());
    status_of(err)
}

fn tol_from(opt: *const DcmxTol) -> Tol {
    if opt.is_null() {
        Tol::default()
    } else {
        let t = unsafe { &*opt };
        Tol {
            abs: t.abs,
            rank_rel: t.rank_rel,
            cluster_rel: t.cluster_rel,
            eig_rel: t.eig_rel,
            jordan_rel: t.jordan_rel,
        }
    }
}

/// Runs `f` with panics converted to `Internal` instead of unwinding across
/// the ABI.
fn guarded(f: impl FnOnce() -> DcmxStatus) -> DcmxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            DcmxStatus::Internal
        }
    }
}

fn emit_string(out: *mut *mut c_char, s: String) -> DcmxStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            DcmxStatus::Ok
        }
        Err(_) => {
            set_error("report contained an interior NUL byte");
            DcmxStatus::Internal
        }
    }
}

/// The default tolerance profile.
#[no_mangle]
pub extern "C" fn dcmx_tol_default() -> DcmxTol {
    let t = Tol::default();
    DcmxTol {
        abs: t.abs,
        rank_rel: t.rank_rel,
        cluster_rel: t.cluster_rel,
        eig_rel: t.eig_rel,
        jordan_rel: t.jordan_rel,
    }
}

/// Message for the most recent failure on this thread. Never null; empty
/// before the first failure. Valid until the next failing call on the same
/// thread.
#[no_mangle]
pub extern "C" fn dcmx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a matrix from its JSON wire form. On success stores a new handle
/// in `out`; the caller owns it and must release it with
/// [`dcmx_matrix_free`].
#[no_mangle]
pub extern "C" fn dcmx_matrix_parse_json(
    json: *const c_char,
    out: *mut *mut DcmxMatrix,
) -> DcmxStatus {
    if json.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(_) => {
                set_error("input is not valid UTF-8");
                return DcmxStatus::InvalidUtf8;
            }
        };
        match dcmx::json::matrix_from_str(text) {
            Ok(m) => {
                let handle = Box::new(DcmxMatrix { inner: m });
                unsafe { *out = Box::into_raw(handle) };
                DcmxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Serializes a matrix to its JSON wire form (pretty-printed). The caller
/// owns the returned string and must release it with [`dcmx_string_free`].
#[no_mangle]
pub extern "C" fn dcmx_matrix_to_json(m: *const DcmxMatrix, out: *mut *mut c_char) -> DcmxStatus {
    if m.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let value = dcmx::json::matrix_to_json(&unsafe { &*m }.inner);
        emit_string(out, format!("{:#}", value))
    })
}

/// Number of rows; zero for a null handle.
#[no_mangle]
pub extern "C" fn dcmx_matrix_rows(m: *const DcmxMatrix) -> usize {
    if m.is_null() {
        return 0;
    }
    unsafe { &*m }.inner.nrows()
}

/// Number of columns; zero for a null handle.
#[no_mangle]
pub extern "C" fn dcmx_matrix_cols(m: *const DcmxMatrix) -> usize {
    if m.is_null() {
        return 0;
    }
    unsafe { &*m }.inner.ncols()
}

/// Reads entry (i, j) into `entry_out[0..4]` as
/// `[re_s, im_s, re_d, im_d]`.
#[no_mangle]
pub extern "C" fn dcmx_matrix_entry(
    m: *const DcmxMatrix,
    i: usize,
    j: usize,
    entry_out: *mut f64,
) -> DcmxStatus {
    if m.is_null() || entry_out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    let inner = &unsafe { &*m }.inner;
    if i >= inner.nrows() || j >= inner.ncols() {
        set_error("entry index out of range");
        return DcmxStatus::OutOfRange;
    }
    let v = inner.get(i, j);
    let slice = unsafe { std::slice::from_raw_parts_mut(entry_out, 4) };
    slice[0] = v.std.re;
    slice[1] = v.std.im;
    slice[2] = v.dual.re;
    slice[3] = v.dual.im;
    DcmxStatus::Ok
}

/// Releases a matrix handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn dcmx_matrix_free(m: *mut DcmxMatrix) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub extern "C" fn dcmx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Inverts a dual complex matrix. `tol` may be null for the defaults. On
/// success stores a new handle in `out`.
#[no_mangle]
pub extern "C" fn dcmx_invert(
    m: *const DcmxMatrix,
    tol: *const DcmxTol,
    out: *mut *mut DcmxMatrix,
) -> DcmxStatus {
    if m.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let t = tol_from(tol);
        match unsafe { &*m }.inner.inverse(&t) {
            Ok(inv) => {
                unsafe { *out = Box::into_raw(Box::new(DcmxMatrix { inner: inv })) };
                DcmxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Classifies all eigenvalues. On success stores the JSON report (the same
/// shape the CLI's `eig --format json` prints) in `out`.
#[no_mangle]
pub extern "C" fn dcmx_eig_json(
    m: *const DcmxMatrix,
    tol: *const DcmxTol,
    out: *mut *mut c_char,
) -> DcmxStatus {
    if m.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let t = tol_from(tol);
        match dcmx::eigen::eig_all(&unsafe { &*m }.inner, &t) {
            Ok(report) => emit_string(
                out,
                format!("{:#}", dcmx::json::eigen_report_to_json(&report)),
            ),
            Err(e) => fail(&e),
        }
    })
}

/// Computes the canonical (Jordan) form when the standard part is either
/// diagonalizable or a single Jordan block, matching the CLI's automatic
/// route choice. On success stores the JSON form in `out`.
#[no_mangle]
pub extern "C" fn dcmx_jordan_json(
    m: *const DcmxMatrix,
    tol: *const DcmxTol,
    out: *mut *mut c_char,
) -> DcmxStatus {
    if m.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let t = tol_from(tol);
        let a = &unsafe { &*m }.inner;
        match dcmx::jordan::jordan_block_standard(a, &t) {
            Ok(form) => {
                return emit_string(out, format!("{:#}", dcmx::json::jordan_form_to_json(&form)));
            }
            Err(dcmx::Error::StandardPartNotJordanBlock(_)) => {}
            Err(e) => return fail(&e),
        }
        match dcmx::jordan::jordan_form_full(a, &t) {
            Ok((form, _pairs)) => {
                emit_string(out, format!("{:#}", dcmx::json::jordan_form_to_json(&form)))
            }
            Err(e) => fail(&e),
        }
    })
}

/// Decides diagonalizability. On success stores the JSON verdict (with the
/// transform and residual on a positive verdict) in `out`.
#[no_mangle]
pub extern "C" fn dcmx_diag_json(
    m: *const DcmxMatrix,
    tol: *const DcmxTol,
    out: *mut *mut c_char,
) -> DcmxStatus {
    if m.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let t = tol_from(tol);
        match dcmx::eigen::is_diagonalizable(&unsafe { &*m }.inner, &t) {
            Ok(verdict) => emit_string(
                out,
                format!("{:#}", dcmx::json::diagonalizability_to_json(&verdict)),
            ),
            Err(e) => fail(&e),
        }
    })
}

/// Eigendecomposition of a Hermitian matrix: dual-number eigenvalues,
/// orthonormal eigenvectors, and definiteness verdicts as JSON.
#[no_mangle]
pub extern "C" fn dcmx_hermitian_json(
    m: *const DcmxMatrix,
    tol: *const DcmxTol,
    out: *mut *mut c_char,
) -> DcmxStatus {
    if m.is_null() || out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let t = tol_from(tol);
        match dcmx::eigen::hermitian_eig(&unsafe { &*m }.inner, &t) {
            Ok(h) => emit_string(out, format!("{:#}", dcmx::json::hermitian_to_json(&h))),
            Err(e) => fail(&e),
        }
    })
}

/// Verifies a candidate eigenpair. `lambda` is `[re_s, im_s, re_d, im_d]`;
/// `x` must be a single-column matrix. Writes 1 into `verified_out` when
/// the pair satisfies the eigen equation at the tolerance, 0 otherwise.
#[no_mangle]
pub extern "C" fn dcmx_verify_eigenpair(
    m: *const DcmxMatrix,
    lambda: *const f64,
    x: *const DcmxMatrix,
    tol: *const DcmxTol,
    verified_out: *mut u8,
) -> DcmxStatus {
    if m.is_null() || lambda.is_null() || x.is_null() || verified_out.is_null() {
        set_error("null argument");
        return DcmxStatus::NullArgument;
    }
    guarded(|| {
        let t = tol_from(tol);
        let l = unsafe { std::slice::from_raw_parts(lambda, 4) };
        let lam = DualComplex::new(
            dcmx::Complex64::new(l[0], l[1]),
            dcmx::Complex64::new(l[2], l[3]),
        );
        let xm = &unsafe { &*x }.inner;
        if xm.ncols() != 1 {
            set_error("eigenvector must be a single-column matrix");
            return DcmxStatus::ShapeMismatch;
        }
        let xv = match dcmx::DCVector::new(
            xm.std().column(0).into_owned(),
            xm.dual().column(0).into_owned(),
        ) {
            Ok(v) => v,
            Err(e) => return fail(&e),
        };
        match dcmx::matrix::verify_eigenpair(&unsafe { &*m }.inner, lam, &xv, &t) {
            Ok(ok) => {
                unsafe { *verified_out = u8::from(ok) };
                DcmxStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
