use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use baxter_hopf_ffi::*;
use serde_json::Value;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    bax_string_free(s);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bax_last_error()).to_str().unwrap().to_string() }
}

unsafe fn parse(s: &str) -> *mut BaxPermutation {
    let mut p = ptr::null_mut();
    assert_eq!(bax_perm_parse(c(s).as_ptr(), &mut p), BaxStatus::Ok);
    p
}

#[test]
fn permutation_round_trip() {
    unsafe {
        let p = parse("[2,4,1,3]");
        assert_eq!(bax_perm_len(p), 4);
        let mut s = ptr::null_mut();
        assert_eq!(bax_perm_to_string(p, &mut s), BaxStatus::Ok);
        assert_eq!(take_string(s), "2413");
        let (mut b, mut t) = (true, true);
        assert_eq!(bax_perm_is_baxter(p, &mut b), BaxStatus::Ok);
        assert_eq!(bax_perm_is_twisted_baxter(p, &mut t), BaxStatus::Ok);
        assert!(!b && !t);
        bax_perm_free(p);
    }
}

#[test]
fn rho_tau_beta() {
    unsafe {
        let p = parse("2413");
        let mut r = ptr::null_mut();
        assert_eq!(bax_rho(p, &mut r), BaxStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(bax_rect_to_json(r, &mut json), BaxStatus::Ok);
        let json = take_string(json);
        assert_eq!(json, r#"{"n":4,"rects":[[0,3,2,4],[0,0,2,3],[2,1,4,4],[2,0,4,1]]}"#);

        let mut r2 = ptr::null_mut();
        assert_eq!(bax_rect_parse(c(&json).as_ptr(), &mut r2), BaxStatus::Ok);
        let (mut tau, mut beta) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(bax_tau(r2, &mut tau), BaxStatus::Ok);
        assert_eq!(bax_beta(r2, &mut beta), BaxStatus::Ok);
        let mut s = ptr::null_mut();
        bax_perm_to_string(tau, &mut s);
        assert_eq!(take_string(s), "2143");
        bax_perm_to_string(beta, &mut s);
        assert_eq!(take_string(s), "2143");
        for h in [tau, beta, p] {
            bax_perm_free(h);
        }
        bax_rect_free(r);
        bax_rect_free(r2);
    }
}

#[test]
fn counting() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(bax_baxter_number(30, &mut s), BaxStatus::Ok);
        assert_eq!(take_string(s), baxter_hopf::baxter_number(30).to_string());
        let mut k = 0u64;
        for (kind, n, want) in [
            (BaxKind::Rectangulation, 4, 22),
            (BaxKind::TwistedBaxter, 0, 1),
            (BaxKind::Baxter, 5, 92),
            (BaxKind::Perm, 20, 2432902008176640000),
        ] {
            assert_eq!(bax_count(kind, n, &mut k), BaxStatus::Ok);
            assert_eq!(k, want);
        }
        assert_eq!(bax_count(BaxKind::Baxter, 11, &mut k), BaxStatus::ResourceLimit);
        assert!(last_error().contains("exceeds"));
    }
}

#[test]
fn algebra_calls() {
    unsafe {
        let mut s = ptr::null_mut();
        let st = bax_product_json(BaxAlgebra::TwistedBaxter, c("21").as_ptr(), c("132").as_ptr(), &mut s);
        assert_eq!(st, BaxStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 6);

        let st = bax_product_json(BaxAlgebra::Rectangulation, c("21").as_ptr(), c("21").as_ptr(), &mut s);
        assert_eq!(st, BaxStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);

        let st = bax_coproduct_json(BaxAlgebra::MalvenutoReutenauer, c("231").as_ptr(), &mut s);
        assert_eq!(st, BaxStatus::Ok);
        let v: Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 4);

        let st = bax_product_json(BaxAlgebra::TwistedBaxter, c("2413").as_ptr(), c("1").as_ptr(), &mut s);
        assert_eq!(st, BaxStatus::InvalidInput);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(bax_perm_parse(c("2x").as_ptr(), &mut p), BaxStatus::InvalidInput);
        assert!(p.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(bax_perm_parse(ptr::null(), &mut p), BaxStatus::NullPointer);
        assert_eq!(bax_perm_parse(c("12").as_ptr(), ptr::null_mut()), BaxStatus::NullPointer);
        let mut b = false;
        assert_eq!(bax_perm_is_baxter(ptr::null(), &mut b), BaxStatus::NullPointer);
        let mut r = ptr::null_mut();
        assert_eq!(bax_rect_parse(c(r#"{"n":2,"rects":[]}"#).as_ptr(), &mut r), BaxStatus::InvalidInput);
        assert_eq!(bax_perm_len(ptr::null()), 0);
        bax_perm_free(ptr::null_mut());
        bax_string_free(ptr::null_mut());
        let p = parse("1");
        assert!(last_error().is_empty());
        bax_perm_free(p);
    }
}

#[test]
fn header_is_generated_and_links_from_c() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = root.join("include/baxter_hopf.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["BAX_STATUS_RESOURCE_LIMIT", "typedef struct BaxPermutation BaxPermutation", "bax_product_json"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // target/<profile>/deps/<this test> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libbaxter_hopf_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status();
    let Ok(status) = status else {
        eprintln!("no C compiler; skipping the link check");
        return;
    };
    assert!(status.success(), "C smoke test failed to build");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "22 92\n3142\n");
}
