use std::ffi::{CStr, CString};
use std::ptr;

use cdle_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

const BOOL: &str = "
Bool ◂ ★ = ∀ X : ★. X ➔ X ➔ X.
tt ◂ Bool = Λ X. λ t, f. t.
tt2 ◂ Bool = Λ X. λ a, b. tt -X a b.
ff ◂ Bool = Λ X. λ t, f. f.
";

#[test]
fn load_erase_and_compare() {
    unsafe {
        let s = cdle_session_new(0);
        assert_eq!(
            cdle_session_load_source(s, c("bool").as_ptr(), c(BOOL).as_ptr(), ptr::null()),
            CDLE_OK
        );
        assert_eq!(cdle_session_failure_count(s), 0);
        assert!(cdle_session_last_error(s).is_null());

        let mut out = ptr::null_mut();
        assert_eq!(cdle_erase(s, c("tt2").as_ptr(), &mut out), CDLE_OK);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "λ a. λ b. a");
        cdle_string_free(out);

        let mut equal = -1;
        assert_eq!(
            cdle_eq(s, c("tt").as_ptr(), c("tt2").as_ptr(), &mut equal),
            CDLE_OK
        );
        assert_eq!(equal, 1);
        assert_eq!(
            cdle_eq(s, c("tt").as_ptr(), c("ff").as_ptr(), &mut equal),
            CDLE_OK
        );
        assert_eq!(equal, 0);

        assert_eq!(
            cdle_erase(s, c("nope").as_ptr(), &mut out),
            CDLE_ERR_UNKNOWN_NAME
        );
        let msg = CStr::from_ptr(cdle_session_last_error(s)).to_str().unwrap();
        assert!(msg.contains("nope"));
        cdle_session_free(s);
    }
}

#[test]
fn failures_are_reported_by_code() {
    unsafe {
        let s = cdle_session_new(0);
        let bad = c("leak ◂ ∀ X : ★. ∀ x : X. X = Λ X, x. x.");
        assert_eq!(
            cdle_session_load_source(s, c("bad").as_ptr(), bad.as_ptr(), ptr::null()),
            CDLE_ERR_TYPE
        );
        assert_eq!(cdle_session_failure_count(s), 1);
        let msg = CStr::from_ptr(cdle_session_last_error(s)).to_str().unwrap();
        assert!(msg.contains("ErasedVarOccursFree"), "{msg}");

        let garbled = c("x ◂ = .");
        assert_eq!(
            cdle_session_load_source(s, c("g").as_ptr(), garbled.as_ptr(), ptr::null()),
            CDLE_ERR_PARSE
        );
        let import = c("import nowhere.");
        assert_eq!(
            cdle_session_load_source(s, c("i").as_ptr(), import.as_ptr(), ptr::null()),
            CDLE_ERR_IO
        );
        assert_eq!(
            cdle_session_load_file(s, c("/no/such/file.cdl").as_ptr(), ptr::null()),
            CDLE_ERR_IO
        );
        cdle_session_free(s);
    }
}

#[test]
fn null_and_invalid_arguments() {
    unsafe {
        let mut out = ptr::null_mut();
        let mut equal = 0;
        assert_eq!(
            cdle_erase(ptr::null_mut(), c("x").as_ptr(), &mut out),
            CDLE_ERR_NULL
        );
        assert_eq!(
            cdle_eq(ptr::null_mut(), ptr::null(), ptr::null(), &mut equal),
            CDLE_ERR_NULL
        );
        assert_eq!(
            cdle_session_failure_count(ptr::null()),
            CDLE_ERR_NULL as i64
        );
        assert!(cdle_session_last_error(ptr::null()).is_null());
        cdle_session_free(ptr::null_mut());
        cdle_string_free(ptr::null_mut());

        let s = cdle_session_new(0);
        assert_eq!(
            cdle_session_load_source(s, ptr::null(), c("").as_ptr(), ptr::null()),
            CDLE_ERR_NULL
        );
        let invalid = [0xffu8, 0];
        assert_eq!(
            cdle_session_load_source(s, c("l").as_ptr(), invalid.as_ptr().cast(), ptr::null()),
            CDLE_ERR_UTF8
        );
        assert_eq!(
            cdle_erase(s, c("x").as_ptr(), ptr::null_mut()),
            CDLE_ERR_NULL
        );
        cdle_session_free(s);
    }
}

#[test]
fn corpus_session_exposes_zero_cost_conversions() {
    unsafe {
        let s = cdle_corpus_session_new(0);
        assert!(!s.is_null());
        assert_eq!(cdle_session_failure_count(s), 0);
        let mut out = ptr::null_mut();
        assert_eq!(
            cdle_erase(s, c("appV2appLGen!").as_ptr(), &mut out),
            CDLE_OK
        );
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "λ a. a");
        cdle_string_free(out);
        let mut equal = 0;
        assert_eq!(
            cdle_eq(s, c("appL").as_ptr(), c("appV").as_ptr(), &mut equal),
            CDLE_OK
        );
        assert_eq!(equal, 1);
        cdle_session_free(s);
    }
}

#[test]
fn tiny_fuel_surfaces_as_a_code() {
    unsafe {
        let s = cdle_session_new(1);
        let src = c("Unit ◂ ★ = ∀ X : ★. X ➔ X.\nu ◂ Unit = Λ X. λ x. x.\nv ◂ Unit = u -Unit u -Unit u -Unit u.");
        assert_eq!(
            cdle_session_load_source(s, c("u").as_ptr(), src.as_ptr(), ptr::null()),
            CDLE_OK
        );
        let mut out = ptr::null_mut();
        assert_eq!(cdle_erase(s, c("v").as_ptr(), &mut out), CDLE_ERR_FUEL);
        cdle_session_free(s);
    }
}

/// The generated header is valid C and its API links against the library.
#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let dir = env!("CARGO_MANIFEST_DIR");
    let status = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(format!("{dir}/tests/smoke.c"))
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            std::process::Command::new(c)
                .arg("--version")
                .output()
                .is_ok()
        })
        .ok_or(())
}
