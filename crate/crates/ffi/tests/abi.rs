use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use hopfcd_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hcd_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(hcd_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn sedenion_zero_product_through_handles() {
    unsafe {
        // (e3 + e10)(e6 - e15) = 0 in the sedenions
        let a_json = CString::new(r#"["0","0","0","1","0","0","0","0","0","0","1","0","0","0","0","0"]"#).unwrap();
        let b_json = CString::new(r#"["0","0","0","0","0","0","1","0","0","0","0","0","0","0","0","-1"]"#).unwrap();
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(hcd_element_from_json(4, a_json.as_ptr(), &mut a), HcdStatus::Ok);
        assert_eq!(hcd_element_from_json(4, b_json.as_ptr(), &mut b), HcdStatus::Ok);
        let mut ab = ptr::null_mut();
        assert_eq!(hcd_element_mul(a, b, &mut ab), HcdStatus::Ok);
        let mut zero: c_int = -1;
        assert_eq!(hcd_element_is_zero(ab, &mut zero), HcdStatus::Ok);
        assert_eq!(zero, 1);
        let mut n = ptr::null_mut();
        assert_eq!(hcd_element_norm_sq(a, &mut n), HcdStatus::Ok);
        assert_eq!(take_string(n), "2");
        assert_eq!(hcd_element_level(ab), 4);
        for h in [a, b, ab] {
            hcd_element_free(h);
        }
    }
}

#[test]
fn tilde_round_trips_through_json() {
    unsafe {
        let mut e1 = ptr::null_mut();
        assert_eq!(hcd_element_basis(2, 1, &mut e1), HcdStatus::Ok);
        let mut t = ptr::null_mut();
        assert_eq!(hcd_element_tilde(e1, &mut t), HcdStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(hcd_element_to_json(t, &mut s), HcdStatus::Ok);
        assert_eq!(take_string(s), r#"["0","0","0","1"]"#);
        let mut c = ptr::null_mut();
        assert_eq!(hcd_element_conj(t, &mut c), HcdStatus::Ok);
        let mut sum = ptr::null_mut();
        assert_eq!(hcd_element_add(t, c, &mut sum), HcdStatus::Ok);
        let mut zero = 0;
        hcd_element_is_zero(sum, &mut zero);
        assert_eq!(zero, 1);
        for h in [e1, t, c, sum] {
            hcd_element_free(h);
        }
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(hcd_element_basis(2, 9, &mut out), HcdStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));
        assert!(out.is_null());

        let bad = CString::new("[1, 2").unwrap();
        assert_eq!(hcd_element_from_json(1, bad.as_ptr(), &mut out), HcdStatus::InvalidJson);
        assert_eq!(hcd_element_from_json(1, ptr::null(), &mut out), HcdStatus::NullPointer);

        let mut x = ptr::null_mut();
        let mut y = ptr::null_mut();
        hcd_element_basis(1, 0, &mut x);
        hcd_element_basis(2, 0, &mut y);
        assert_eq!(hcd_element_mul(x, y, &mut out), HcdStatus::LevelMismatch);
        assert_eq!(hcd_element_mul(x, ptr::null(), &mut out), HcdStatus::NullPointer);
        assert_eq!(hcd_element_level(ptr::null()), -1);
        hcd_element_free(x);
        hcd_element_free(y);
        hcd_element_free(ptr::null_mut());
        hcd_string_free(ptr::null_mut());
    }
}

#[test]
fn suites_and_certificates() {
    unsafe {
        let name = CString::new("lemma-1.1").unwrap();
        let mut passed = 0;
        let mut report = ptr::null_mut();
        assert_eq!(hcd_run_suite(name.as_ptr(), 4, 3, 10, &mut passed, &mut report), HcdStatus::Ok);
        assert_eq!(passed, 1);
        let rep: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
        assert_eq!(rep["suite"], "lemma-1.1");

        let unknown = CString::new("nope").unwrap();
        assert_eq!(hcd_run_suite(unknown.as_ptr(), 4, 3, 10, &mut passed, ptr::null_mut()), HcdStatus::InvalidArgument);

        let cert = hopfcd::hopf_zero::search_exhaustive(4, 2).unwrap().remove(0).to_json();
        let text = CString::new(serde_json::to_string(&cert).unwrap()).unwrap();
        assert_eq!(hcd_verify_cert(text.as_ptr(), &mut passed, ptr::null_mut()), HcdStatus::Ok);
        assert_eq!(passed, 1);

        let mut tampered = cert.clone();
        tampered.a[0] = hopfcd::Scalar::one();
        let text = CString::new(serde_json::to_string(&tampered).unwrap()).unwrap();
        assert_eq!(hcd_verify_cert(text.as_ptr(), &mut passed, ptr::null_mut()), HcdStatus::Ok);
        assert_eq!(passed, 0);
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hopfcd.h")).unwrap();
    for f in [
        "hcd_last_error",
        "hcd_string_free",
        "hcd_element_free",
        "hcd_element_basis",
        "hcd_element_from_json",
        "hcd_element_to_json",
        "hcd_element_level",
        "hcd_element_mul",
        "hcd_element_add",
        "hcd_element_conj",
        "hcd_element_tilde",
        "hcd_element_norm_sq",
        "hcd_element_is_zero",
        "hcd_verify_cert",
        "hcd_run_suite",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct HcdElement HcdElement;"));
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(cc) = which_cc() else { return };
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libhopfcd_ffi.a");
    if !lib.exists() {
        return;
    }
    let dir = env!("CARGO_MANIFEST_DIR");
    let exe = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("hopfcd_smoke");
    let status = std::process::Command::new(cc)
        .args([&format!("{dir}/tests/c/smoke.c"), &format!("-I{dir}/include"), lib.to_str().unwrap(), "-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("out of range"));
}

fn which_cc() -> Option<String> {
    for cc in ["cc", "gcc", "clang"] {
        if std::process::Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Some(cc.to_string());
        }
    }
    None
}
