use std::ffi::CString;
use std::ptr;

use stringform_ffi::*;

fn metric(a1: f64, a2: f64, chirality: SfChirality) -> *mut SfMetric {
    let mut handle = ptr::null_mut();
    assert_eq!(
        unsafe { sf_metric_new(a1, a2, chirality, &mut handle) },
        SfStatus::Ok
    );
    assert!(!handle.is_null());
    handle
}

fn last_error() -> String {
    let mut buf = vec![0u8; 256];
    let n = unsafe { sf_last_error(buf.as_mut_ptr().cast(), buf.len()) };
    buf.truncate(n.min(255));
    String::from_utf8(buf).unwrap()
}

#[test]
fn round_metric_values() {
    let m = metric(1.0, 1.0, SfChirality::Left);
    let mut ev = [0.0; 3];
    let mut region = SfRegion::Outside;
    assert_eq!(
        unsafe { sf_ricci_eigenvalues(m, ev.as_mut_ptr(), &mut region) },
        SfStatus::Ok
    );
    assert_eq!(ev, [2.0, 2.0, 2.0]);
    assert_eq!(region, SfRegion::Interior);

    for (class, expected) in [("L", -1.0), ("dD4", 0.0), ("R", 1.0), ("L+5", 4.0)] {
        let c = CString::new(class).unwrap();
        let mut v = f64::NAN;
        assert_eq!(
            unsafe { sf_integral_h(m, c.as_ptr(), &mut v) },
            SfStatus::Ok
        );
        assert!((v - expected).abs() < 1e-12, "{class}: {v}");
    }
    unsafe { sf_metric_free(m) };
}

#[test]
fn berger_spot_value_and_right_chirality() {
    let m = metric(2.0, 1.0, SfChirality::Left);
    let l = CString::new("L").unwrap();
    let mut v = 0.0;
    assert_eq!(
        unsafe { sf_integral_h(m, l.as_ptr(), &mut v) },
        SfStatus::Ok
    );
    assert!((v + 25.0 / 16.0).abs() < 1e-12);
    unsafe { sf_metric_free(m) };

    let r = metric(2.0, 1.0, SfChirality::Right);
    let rc = CString::new("R").unwrap();
    assert_eq!(
        unsafe { sf_integral_h(r, rc.as_ptr(), &mut v) },
        SfStatus::Ok
    );
    assert!((v - 25.0 / 16.0).abs() < 1e-12);
    unsafe { sf_metric_free(r) };
}

#[test]
fn e_invariants() {
    for (class, p) in [("L", 23), ("dD4", 0), ("R", 1), ("L+13", 12)] {
        let c = CString::new(class).unwrap();
        let mut n = -1;
        assert_eq!(unsafe { sf_e_invariant(c.as_ptr(), &mut n) }, SfStatus::Ok);
        assert_eq!(n, p, "{class}");
    }
}

#[test]
fn error_codes() {
    let mut handle = ptr::null_mut();
    assert_eq!(
        unsafe { sf_metric_new(-1.0, 1.0, SfChirality::Left, &mut handle) },
        SfStatus::InvalidArgument
    );
    assert!(handle.is_null());
    assert!(last_error().contains("alpha1"));
    assert_eq!(
        unsafe { sf_metric_new(1.0, 1.0, SfChirality::Left, ptr::null_mut()) },
        SfStatus::NullPointer
    );

    let m = metric(1.0, 1.0, SfChirality::Left);
    let bad = CString::new("Q+1").unwrap();
    let mut v = 0.0;
    assert_eq!(
        unsafe { sf_integral_h(m, bad.as_ptr(), &mut v) },
        SfStatus::Parse
    );
    assert_eq!(
        unsafe { sf_integral_h(m, ptr::null(), &mut v) },
        SfStatus::NullPointer
    );
    assert_eq!(
        unsafe { sf_ricci_eigenvalues(ptr::null(), &mut v, ptr::null_mut()) },
        SfStatus::NullPointer
    );
    unsafe { sf_metric_free(m) };
    unsafe { sf_metric_free(ptr::null_mut()) };
}

#[test]
fn header_declares_the_interface() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/stringform.h"))
            .unwrap();
    for name in [
        "sf_metric_new",
        "sf_metric_free",
        "sf_ricci_eigenvalues",
        "sf_integral_h",
        "sf_e_invariant",
        "sf_last_error",
        "typedef struct SfMetric SfMetric",
        "SF_STATUS_INVALID_ARGUMENT",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
