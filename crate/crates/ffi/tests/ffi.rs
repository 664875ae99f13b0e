use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use polygraph_ffi::*;

const P3: &str = "vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3\n";
const MIXED: &str = "vertex u free p q\nvertex w mono\nvertex z free r\nedge u w\nedge w z\n";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn product(text: &str) -> *mut PgProduct {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pg_product_parse(c(text).as_ptr(), &mut p) }, PgStatus::Ok);
    p
}

fn element(p: *const PgProduct, w: &str) -> *mut PgElement {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { pg_element_parse(p, c(w).as_ptr(), &mut e) }, PgStatus::Ok);
    e
}

fn hull(p: *const PgProduct, w: &str) -> *mut PgHull {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_parse(p, c(w).as_ptr(), &mut h) }, PgStatus::Ok);
    h
}

fn take(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { pg_string_free(s) };
    owned
}

fn show(e: *const PgElement) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pg_element_to_string(e, &mut s) }, PgStatus::Ok);
    take(s)
}

fn show_hull(h: *const PgHull) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_to_string(h, &mut s) }, PgStatus::Ok);
    take(s)
}

fn last_error() -> String {
    let e = pg_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_string_lossy().into_owned()
}

#[test]
fn element_arithmetic() {
    let p = product(P3);
    let (a, b) = (element(p, "x3 x2"), element(p, "x1"));
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { pg_element_multiply(a, b, &mut m) }, PgStatus::Ok);
    assert_eq!(show(m), "x2 x3 x1");

    let mut q = ptr::null_mut();
    assert_eq!(unsafe { pg_element_right_divide(m, b, &mut q) }, PgStatus::Ok);
    let mut eq = false;
    assert_eq!(unsafe { pg_element_equal(q, a, &mut eq) }, PgStatus::Ok);
    assert!(eq);

    let mut none = ptr::null_mut();
    assert_eq!(unsafe { pg_element_right_divide(b, a, &mut none) }, PgStatus::NotDivisible);
    assert!(none.is_null());
    assert_eq!(last_error(), "not divisible");

    unsafe {
        for e in [a, b, m, q] {
            pg_element_free(e);
        }
        pg_product_free(p);
    }
}

#[test]
fn lclm_and_hclf() {
    let p = product(P3);
    let (x1, x2, x3) = (element(p, "x1"), element(p, "x2"), element(p, "x3"));
    let (mut m, mut s, mut t) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { pg_element_lclm(x1, x2, &mut m, &mut s, &mut t) }, PgStatus::Ok);
    assert_eq!((show(m), show(s), show(t)), ("x1 x2".into(), "x2".into(), "x1".into()));

    let mut m2 = ptr::null_mut();
    assert_eq!(
        unsafe { pg_element_lclm(x1, x3, &mut m2, ptr::null_mut(), ptr::null_mut()) },
        PgStatus::NoCommonMultiple
    );

    let (a, b) = (element(p, "x2 x1"), element(p, "x2 x3"));
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pg_element_hclf(a, b, &mut h) }, PgStatus::Ok);
    assert_eq!(show(h), "x2");
    unsafe {
        for e in [x1, x2, x3, m, s, t, a, b, h] {
            pg_element_free(e);
        }
        pg_product_free(p);
    }
}

#[test]
fn hull_operations() {
    let p = product(P3);
    let (s, t) = (hull(p, "[1|x1]"), hull(p, "[x2|1]"));
    let mut st = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_multiply(s, t, &mut st) }, PgStatus::Ok);
    assert_eq!(show_hull(st), "[x2 | x1]");

    let mut inv = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_inverse(st, &mut inv) }, PgStatus::Ok);
    assert_eq!(show_hull(inv), "[x1 | x2]");

    let (low, high) = (hull(p, "[x2 x1|x2 x3]"), hull(p, "[x1|x3]"));
    let mut le = false;
    assert_eq!(unsafe { pg_hull_natural_le(low, high, &mut le) }, PgStatus::Ok);
    assert!(le);
    let mut max = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_max_above(low, &mut max) }, PgStatus::Ok);
    assert_eq!(show_hull(max), "[x1 | x3]");

    let zero = hull(p, "0");
    let mut nothing = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_max_above(zero, &mut nothing) }, PgStatus::ZeroInput);

    let mut idem = false;
    let e = hull(p, "[x1|x1]");
    assert_eq!(unsafe { pg_hull_is_idempotent(e, &mut idem) }, PgStatus::Ok);
    assert!(idem);

    let mut ev = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_eval(p, c("x1 x3^-1").as_ptr(), &mut ev) }, PgStatus::Ok);
    assert_eq!(show_hull(ev), "0");

    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_eta(st, &mut g) }, PgStatus::Ok);
    assert_eq!(take(g), "x1 x2^-1");
    unsafe {
        for h in [s, t, st, inv, low, high, max, zero, e, ev] {
            pg_hull_free(h);
        }
        pg_product_free(p);
    }
}

#[test]
fn group_and_presentation() {
    let p = product(P3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pg_group_normal_form(p, c("x1 x2 x1^-1").as_ptr(), &mut s) }, PgStatus::Ok);
    assert_eq!(take(s), "x2");
    let mut rel = ptr::null_mut();
    assert_eq!(unsafe { pg_presentation(p, &mut rel) }, PgStatus::Ok);
    let rel = take(rel);
    assert!(rel.lines().any(|l| l == "x1 x3^-1 = 0"), "{rel}");
    unsafe { pg_product_free(p) };

    let mixed = product(MIXED);
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { pg_group_normal_form(mixed, c("w").as_ptr(), &mut g) },
        PgStatus::NotMonogenic
    );
    unsafe { pg_product_free(mixed) };
}

#[test]
fn errors_are_reported() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { pg_product_parse(c("vertex a mono\nedge a b\n").as_ptr(), &mut p) }, PgStatus::Parse);
    assert!(p.is_null());
    assert!(last_error().contains('b'));

    assert_eq!(unsafe { pg_product_parse(ptr::null(), &mut p) }, PgStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { pg_product_parse(bad.as_ptr().cast(), &mut p) },
        PgStatus::InvalidUtf8
    );

    let p = product(P3);
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { pg_element_parse(p, c("x9").as_ptr(), &mut e) }, PgStatus::Parse);
    assert_eq!(unsafe { pg_element_parse(p, c("x1").as_ptr(), ptr::null_mut()) }, PgStatus::NullPointer);
    assert_eq!(unsafe { pg_element_to_string(ptr::null(), &mut ptr::null_mut()) }, PgStatus::NullPointer);
    unsafe {
        pg_product_free(p);
        pg_product_free(ptr::null_mut());
        pg_element_free(ptr::null_mut());
        pg_hull_free(ptr::null_mut());
        pg_string_free(ptr::null_mut());
    }
}

#[test]
fn mismatched_graphs_are_rejected() {
    let (p, q) = (product(P3), product(P3));
    let (a, b) = (element(p, "x1"), element(q, "x1"));
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pg_element_multiply(a, b, &mut out) }, PgStatus::GraphMismatch);
    let mut eq = false;
    assert_eq!(unsafe { pg_element_equal(a, b, &mut eq) }, PgStatus::GraphMismatch);
    let (s, t) = (hull(p, "[x1|1]"), hull(q, "[x1|1]"));
    let mut st = ptr::null_mut();
    assert_eq!(unsafe { pg_hull_multiply(s, t, &mut st) }, PgStatus::GraphMismatch);

    // Values outlive the product handle they came from.
    unsafe { pg_product_free(p) };
    assert_eq!(show(a), "x1");
    unsafe {
        pg_element_free(a);
        pg_element_free(b);
        pg_hull_free(s);
        pg_hull_free(t);
        pg_product_free(q);
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/polygraph.h");
    let text = std::fs::read_to_string(&header).expect("header generated by build script");
    for name in ["pg_product_parse", "pg_element_lclm", "pg_hull_multiply", "pg_last_error", "PG_STATUS_GRAPH_MISMATCH"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(dir.join("tests/c/smoke.c"))
        .status()
    else {
        eprintln!("no C compiler available; skipping syntax check");
        return;
    };
    assert!(status.success());
}
