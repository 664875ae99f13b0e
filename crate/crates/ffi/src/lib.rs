//! C interface to the `polygraph` library.
//!
//! Handles are opaque and owned by the caller; every `*_free` function
//! accepts null. Functions return a [`PgStatus`] and write results through
//! out-pointers. On failure, [`pg_last_error`] describes the most recent
//! error on the calling thread. Strings returned through out-pointers are
//! released with [`pg_string_free`].
//!
//! Elements and hull elements remember the graph they were parsed against;
//! combining values from different graph handles yields
//! [`PgStatus::GraphMismatch`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use polygraph::{Element, Error, GraphProduct, HullElement};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Graph text, word or element failed to parse.
    Parse = 3,
    NotDivisible = 4,
    NoCommonMultiple = 5,
    /// The operation is undefined on the zero element.
    ZeroInput = 6,
    /// The operation needs every component to be monogenic.
    NotMonogenic = 7,
    GraphMismatch = 8,
    Panic = 9,
}

/// A graph together with its component declarations.
pub struct PgProduct {
    inner: Arc<GraphProduct>,
}

/// An element of the graph product.
pub struct PgElement {
    product: Arc<GraphProduct>,
    value: Element,
}

/// An element of the inverse hull with zero.
pub struct PgHull {
    product: Arc<GraphProduct>,
    value: HullElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotDivisible => PgStatus::NotDivisible,
            Error::NoCommonMultiple => PgStatus::NoCommonMultiple,
            Error::ZeroInput => PgStatus::ZeroInput,
            Error::NotMonogenic => PgStatus::NotMonogenic,
            _ => PgStatus::Parse,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PgStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            PgStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PgStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(PgStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null out-pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null out-pointer".into()));
    }
    *out = CString::new(s)
        .map_err(|_| Failure(PgStatus::Parse, "output contains nul".into()))?
        .into_raw();
    Ok(())
}

unsafe fn put_bool(out: *mut bool, b: bool) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PgStatus::NullPointer, "null out-pointer".into()));
    }
    *out = b;
    Ok(())
}

fn same_graph(a: &Arc<GraphProduct>, b: &Arc<GraphProduct>) -> Result<(), Failure> {
    if Arc::ptr_eq(a, b) {
        Ok(())
    } else {
        Err(Failure(PgStatus::GraphMismatch, "operands belong to different graphs".into()))
    }
}

fn element(product: &Arc<GraphProduct>, value: Element) -> PgElement {
    PgElement {
        product: Arc::clone(product),
        value,
    }
}

fn hull(product: &Arc<GraphProduct>, value: HullElement) -> PgHull {
    PgHull {
        product: Arc::clone(product),
        value,
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` is null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph description.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pg_product_parse(text_: *const c_char, out: *mut *mut PgProduct) -> PgStatus {
    guard(|| {
        let gp = GraphProduct::parse(text(text_)?)?;
        put(out, PgProduct { inner: Arc::new(gp) })
    })
}

/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_product_free(p: *mut PgProduct) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses a positive word such as `x1 x2^3` into its normal form.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_parse(
    p: *const PgProduct,
    word: *const c_char,
    out: *mut *mut PgElement,
) -> PgStatus {
    guard(|| {
        let p = handle(p)?;
        let e = p.inner.element(text(word)?)?;
        put(out, element(&p.inner, e))
    })
}

/// # Safety
/// `e` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_element_free(e: *mut PgElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_to_string(e: *const PgElement, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let e = handle(e)?;
        put_string(out, e.product.format_element(&e.value))
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_equal(a: *const PgElement, b: *const PgElement, out: *mut bool) -> PgStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        same_graph(&a.product, &b.product)?;
        put_bool(out, a.value == b.value)
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_multiply(
    a: *const PgElement,
    b: *const PgElement,
    out: *mut *mut PgElement,
) -> PgStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        same_graph(&a.product, &b.product)?;
        put(out, element(&a.product, a.product.multiply(&a.value, &b.value)))
    })
}

/// The `b` with `a = b·c`, or [`PgStatus::NotDivisible`].
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_right_divide(
    a: *const PgElement,
    c: *const PgElement,
    out: *mut *mut PgElement,
) -> PgStatus {
    guard(|| {
        let (a, c) = (handle(a)?, handle(c)?);
        same_graph(&a.product, &c.product)?;
        let q = a.product.right_divide(&a.value, &c.value)?;
        put(out, element(&a.product, q))
    })
}

/// Least common left multiple `m = s·b = t·c`. `out_s` and `out_t` may be
/// null.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_lclm(
    b: *const PgElement,
    c: *const PgElement,
    out_m: *mut *mut PgElement,
    out_s: *mut *mut PgElement,
    out_t: *mut *mut PgElement,
) -> PgStatus {
    guard(|| {
        let (b, c) = (handle(b)?, handle(c)?);
        same_graph(&b.product, &c.product)?;
        let l = b.product.lclm(&b.value, &c.value)?;
        if !out_s.is_null() {
            put(out_s, element(&b.product, l.left))?;
        }
        if !out_t.is_null() {
            put(out_t, element(&b.product, l.right))?;
        }
        put(out_m, element(&b.product, l.multiple))
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_element_hclf(
    a: *const PgElement,
    b: *const PgElement,
    out: *mut *mut PgElement,
) -> PgStatus {
    guard(|| {
        let (a, b) = (handle(a)?, handle(b)?);
        same_graph(&a.product, &b.product)?;
        put(out, element(&a.product, a.product.hclf(&a.value, &b.value)))
    })
}

/// Parses `0` or `[a | b]`.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_parse(p: *const PgProduct, s: *const c_char, out: *mut *mut PgHull) -> PgStatus {
    guard(|| {
        let p = handle(p)?;
        let h = p.inner.parse_hull(text(s)?)?;
        put(out, hull(&p.inner, h))
    })
}

/// Evaluates a signed word such as `x1 x2^-1`.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_eval(p: *const PgProduct, word: *const c_char, out: *mut *mut PgHull) -> PgStatus {
    guard(|| {
        let p = handle(p)?;
        let w = p.inner.parse_signed(text(word)?)?;
        put(out, hull(&p.inner, p.inner.eval_word(&w)))
    })
}

/// # Safety
/// `s` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_free(s: *mut PgHull) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_to_string(s: *const PgHull, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let s = handle(s)?;
        put_string(out, s.product.format_hull(&s.value))
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_multiply(s: *const PgHull, t: *const PgHull, out: *mut *mut PgHull) -> PgStatus {
    guard(|| {
        let (s, t) = (handle(s)?, handle(t)?);
        same_graph(&s.product, &t.product)?;
        put(out, hull(&s.product, s.product.hull_multiply(&s.value, &t.value)))
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_inverse(s: *const PgHull, out: *mut *mut PgHull) -> PgStatus {
    guard(|| {
        let s = handle(s)?;
        put(out, hull(&s.product, s.value.inverse()))
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_natural_le(s: *const PgHull, t: *const PgHull, out: *mut bool) -> PgStatus {
    guard(|| {
        let (s, t) = (handle(s)?, handle(t)?);
        same_graph(&s.product, &t.product)?;
        put_bool(out, s.product.natural_le(&s.value, &t.value))
    })
}

/// Maximal element above a nonzero element, or [`PgStatus::ZeroInput`].
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_max_above(s: *const PgHull, out: *mut *mut PgHull) -> PgStatus {
    guard(|| {
        let s = handle(s)?;
        let m = s.product.max_above(&s.value)?;
        put(out, hull(&s.product, m))
    })
}

/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_is_idempotent(s: *const PgHull, out: *mut bool) -> PgStatus {
    guard(|| put_bool(out, handle(s)?.value.is_idempotent()))
}

/// Image of a hull element in the graph group with zero: `0`, `1` or a
/// reduced signed word.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_hull_eta(s: *const PgHull, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let s = handle(s)?;
        let g = s.product.eta(&s.value)?;
        put_string(out, s.product.format_group_or_zero(&g))
    })
}

/// Reduced canonical form of a signed word in the graph group.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_group_normal_form(
    p: *const PgProduct,
    word: *const c_char,
    out: *mut *mut c_char,
) -> PgStatus {
    guard(|| {
        let p = handle(p)?;
        let w = p.inner.parse_signed(text(word)?)?;
        let g = p.inner.group_reduce(&w)?;
        put_string(out, p.inner.format_group(&g))
    })
}

/// Defining relations, one per line.
///
/// # Safety
/// Pointers are valid as documented at the crate level.
#[no_mangle]
pub unsafe extern "C" fn pg_presentation(p: *const PgProduct, out: *mut *mut c_char) -> PgStatus {
    guard(|| {
        let p = handle(p)?;
        let lines: Vec<String> = p.inner.presentation().iter().map(|r| p.inner.format_relation(r)).collect();
        put_string(out, lines.join("\n"))
    })
}
