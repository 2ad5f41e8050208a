//! C ABI over the float pipeline: family metrics on S^3 behind an opaque
//! handle, Ricci eigenvalues, `∫ H_S` and e-invariants.
//!
//! Every fallible function returns an [`SfStatus`]; on failure a message is
//! kept per thread and can be read with [`sf_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, UnwindSafe};

use stringform::canonical::integral_h;
use stringform::metric::{Chirality, InvariantMetric};
use stringform::region::{classify_eigenvalues, family_ricci_eigenvalues, RicciRegion};
use stringform::string_class::StringClass;
use stringform::Error;

/// Result codes of the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Internal = 4,
}

/// Sign class of the Ricci curvature.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfRegion {
    Interior = 0,
    Boundary = 1,
    Outside = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfChirality {
    Left = 0,
    Right = 1,
}

/// Opaque handle to the metric `g_{α1,α2}` of a given chirality.
pub struct SfMetric {
    alpha1: f64,
    alpha2: f64,
    metric: InvariantMetric<f64>,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn fail(e: Error) -> SfStatus {
    let status = match e {
        Error::Parse(_) => SfStatus::Parse,
        ref other if other.is_validation() => SfStatus::InvalidArgument,
        _ => SfStatus::Internal,
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> SfStatus + UnwindSafe) -> SfStatus {
    catch_unwind(f).unwrap_or_else(|_| {
        set_error("internal panic");
        SfStatus::Internal
    })
}

fn null() -> SfStatus {
    set_error("null pointer argument");
    SfStatus::NullPointer
}

unsafe fn read_class(text: *const c_char) -> Result<StringClass, SfStatus> {
    if text.is_null() {
        return Err(null());
    }
    let s = CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(Error::Parse("class is not UTF-8".into())))?;
    s.parse().map_err(fail)
}

/// Creates `g_{α1,α2}`. On success `*out` owns a handle to release with
/// [`sf_metric_free`].
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_metric_new(
    alpha1: f64,
    alpha2: f64,
    chirality: SfChirality,
    out: *mut *mut SfMetric,
) -> SfStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        let chirality = match chirality {
            SfChirality::Left => Chirality::Left,
            SfChirality::Right => Chirality::Right,
        };
        match InvariantMetric::family(alpha1, alpha2, chirality) {
            Ok(metric) => {
                *out = Box::into_raw(Box::new(SfMetric {
                    alpha1,
                    alpha2,
                    metric,
                }));
                SfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle from [`sf_metric_new`]. Null is ignored.
///
/// # Safety
/// `metric` must be null or a live handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn sf_metric_free(metric: *mut SfMetric) {
    if !metric.is_null() {
        drop(Box::from_raw(metric));
    }
}

/// Writes the Ricci eigenvalues along `α1 e1, α2 e2, e3` to `out[0..3]` and
/// the region to `*region` (which may be null).
///
/// # Safety
/// `metric` must be a live handle; `out` must be valid for three doubles.
#[no_mangle]
pub unsafe extern "C" fn sf_ricci_eigenvalues(
    metric: *const SfMetric,
    out: *mut f64,
    region: *mut SfRegion,
) -> SfStatus {
    guard(|| {
        if metric.is_null() || out.is_null() {
            return null();
        }
        let m = &*metric;
        match family_ricci_eigenvalues(&m.alpha1, &m.alpha2) {
            Ok(ev) => {
                std::ptr::copy_nonoverlapping(ev.as_ptr(), out, 3);
                if !region.is_null() {
                    *region = match classify_eigenvalues(&ev) {
                        RicciRegion::Interior => SfRegion::Interior,
                        RicciRegion::Boundary => SfRegion::Boundary,
                        RicciRegion::Outside => SfRegion::Outside,
                    };
                }
                SfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `∫_{S^3} H_S` for the class named by `class` ("L", "R", "dD4", "L+2", ...).
///
/// # Safety
/// `metric` must be a live handle, `class` a NUL-terminated string and `out`
/// valid for one double.
#[no_mangle]
pub unsafe extern "C" fn sf_integral_h(
    metric: *const SfMetric,
    class: *const c_char,
    out: *mut f64,
) -> SfStatus {
    guard(|| {
        if metric.is_null() || out.is_null() {
            return null();
        }
        let class = match read_class(class) {
            Ok(c) => c,
            Err(status) => return status,
        };
        match integral_h(&class, &(*metric).metric) {
            Ok(v) => {
                *out = v;
                SfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// The e-invariant of a class as `*numerator / 24` with `0 <= *numerator < 24`.
///
/// # Safety
/// `class` must be a NUL-terminated string and `numerator` valid for one int.
#[no_mangle]
pub unsafe extern "C" fn sf_e_invariant(class: *const c_char, numerator: *mut i32) -> SfStatus {
    guard(|| {
        if numerator.is_null() {
            return null();
        }
        let class = match read_class(class) {
            Ok(c) => c,
            Err(status) => return status,
        };
        match class.e_invariant() {
            Ok(e) => match e.twenty_fourths() {
                Some(p) => {
                    *numerator = p as i32;
                    SfStatus::Ok
                }
                None => fail(Error::Parse(format!(
                    "e-invariant {e} is not a multiple of 1/24"
                ))),
            },
            Err(e) => fail(e),
        }
    })
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`) and returns the full message length in bytes.
///
/// # Safety
/// `buf` must be null or valid for writing `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn sf_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}
