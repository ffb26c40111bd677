//! C ABI over `hsymb`.
//!
//! Every fallible function returns an `HsymbStatus`. On failure a message is
//! available from `hsymb_last_error` until the next call on the same thread.
//! Strings handed out must be released with `hsymb_string_free`, elements with
//! `hsymb_element_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hsymb::coproduct::coproduct;
use hsymb::forms::w_element;
use hsymb::inv::inv;
use hsymb::parse::parse_in;
use hsymb::render::*;
use hsymb::tensor::symbol;
use hsymb::variation::Variation;
use hsymb::verify::{self, Bounds, Suite};
use hsymb::{Element, Error, Sort};
use serde_json::json;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsymbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    SortMismatch = 4,
    InvalidArgument = 5,
    VerificationFailed = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsymbSort {
    H = 0,
    Hbar = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsymbFormat {
    Text = 0,
    Latex = 1,
    Json = 2,
}

/// Opaque handle to an element of H or Hbar.
pub struct HsymbElement(Element);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(HsymbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => HsymbStatus::Parse,
            Error::SortMismatch | Error::InvertedInH => HsymbStatus::SortMismatch,
            _ => HsymbStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HsymbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HsymbStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            HsymbStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(HsymbStatus::NullPointer, format!("null pointer: {}", what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HsymbStatus::InvalidUtf8, format!("{} is not valid UTF-8", what)))
}

unsafe fn element<'a>(p: *const HsymbElement) -> Result<&'a Element, Fail> {
    p.as_ref().map(|e| &e.0).ok_or_else(|| null("element"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Fail(HsymbStatus::Internal, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_element(out: *mut *mut HsymbElement, e: Element) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(HsymbElement(e)));
    Ok(())
}

fn sort_of(s: i32) -> Result<Sort, Fail> {
    match s {
        x if x == HsymbSort::H as i32 => Ok(Sort::H),
        x if x == HsymbSort::Hbar as i32 => Ok(Sort::Hbar),
        _ => Err(Fail(HsymbStatus::InvalidArgument, format!("unknown sort {}", s))),
    }
}

fn format_of(f: i32) -> Result<HsymbFormat, Fail> {
    [HsymbFormat::Text, HsymbFormat::Latex, HsymbFormat::Json]
        .into_iter()
        .find(|x| *x as i32 == f)
        .ok_or_else(|| Fail(HsymbStatus::InvalidArgument, format!("unknown format {}", f)))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hsymb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hsymb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parse `text` into a new element; `sort` is one of the `HSYMB_SORT_*` values.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_parse(text: *const c_char, sort: i32, out: *mut *mut HsymbElement) -> HsymbStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        write_element(out, parse_in(text, sort_of(sort)?)?)
    })
}

/// Release an element. Null is ignored.
///
/// # Safety
/// `e` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hsymb_element_free(e: *mut HsymbElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hsymb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The sort of an element.
///
/// # Safety
/// `e` must be a live element.
#[no_mangle]
pub unsafe extern "C" fn hsymb_element_sort(e: *const HsymbElement, out: *mut HsymbSort) -> HsymbStatus {
    guard(|| {
        let e = element(e)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = match e.sort() {
            Sort::H => HsymbSort::H,
            Sort::Hbar => HsymbSort::Hbar,
        };
        Ok(())
    })
}

/// Structural equality of two elements.
///
/// # Safety
/// Both pointers must be live elements; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hsymb_element_equal(a: *const HsymbElement, b: *const HsymbElement, out: *mut bool) -> HsymbStatus {
    guard(|| {
        let (a, b) = (element(a)?, element(b)?);
        *out.as_mut().ok_or_else(|| null("out"))? = a == b;
        Ok(())
    })
}

/// Render an element; `format` is one of the `HSYMB_FORMAT_*` values.
///
/// # Safety
/// `e` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_render(e: *const HsymbElement, format: i32, out: *mut *mut c_char) -> HsymbStatus {
    guard(|| {
        let e = element(e)?;
        let s = match format_of(format)? {
            HsymbFormat::Text => element_text(e),
            HsymbFormat::Latex => element_latex(e),
            HsymbFormat::Json => element_json(e).to_string(),
        };
        write_string(out, s)
    })
}

/// Rewrite inverted symbols, giving an element of H.
///
/// # Safety
/// `e` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_inv(e: *const HsymbElement, out: *mut *mut HsymbElement) -> HsymbStatus {
    guard(|| {
        let e = element(e)?;
        write_element(out, inv(e))
    })
}

/// Coproduct of an element, rendered.
///
/// # Safety
/// `e` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_coproduct(e: *const HsymbElement, format: i32, out: *mut *mut c_char) -> HsymbStatus {
    guard(|| {
        let t = coproduct(element(e)?);
        let s = match format_of(format)? {
            HsymbFormat::Text => tensor_text(&t),
            HsymbFormat::Latex => tensor_latex(&t),
            HsymbFormat::Json => tensor_json(&t).to_string(),
        };
        write_string(out, s)
    })
}

/// Symbol of an element, rendered.
///
/// # Safety
/// `e` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_symbol(e: *const HsymbElement, format: i32, out: *mut *mut c_char) -> HsymbStatus {
    guard(|| {
        let s = symbol(element(e)?);
        let text = match format_of(format)? {
            HsymbFormat::Text => symbol_text(&s),
            HsymbFormat::Latex => symbol_latex(&s),
            HsymbFormat::Json => symbol_json(&s).to_string(),
        };
        write_string(out, text)
    })
}

/// The 1-form `w` of an element, rendered.
///
/// # Safety
/// `e` must be a live element and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_form(e: *const HsymbElement, format: i32, out: *mut *mut c_char) -> HsymbStatus {
    guard(|| {
        let w = w_element(element(e)?);
        let text = match format_of(format)? {
            HsymbFormat::Text => form_text(&w),
            HsymbFormat::Latex => form_latex(&w),
            HsymbFormat::Json => form_json(&w).to_string(),
        };
        write_string(out, text)
    })
}

/// Variation matrix for the weight vector `weights[0..len]`, rendered.
///
/// # Safety
/// `weights` must point to `len` integers and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hsymb_variation_matrix(
    weights: *const u32,
    len: usize,
    sort: i32,
    format: i32,
    out: *mut *mut c_char,
) -> HsymbStatus {
    guard(|| {
        if weights.is_null() && len > 0 {
            return Err(null("weights"));
        }
        let n = if len == 0 { &[][..] } else { std::slice::from_raw_parts(weights, len) };
        let sort = sort_of(sort)?;
        let v = Variation::build(n, sort)?.v;
        let text = match format_of(format)? {
            HsymbFormat::Text => matrix_text(&v, terms_text),
            HsymbFormat::Latex => matrix_latex(&v, terms_latex),
            HsymbFormat::Json => {
                matrix_json(&v, |t| json!({ "type": "element", "sort": sort.to_string(), "terms": terms_json(t) })).to_string()
            }
        };
        write_string(out, text)
    })
}

/// Run a verification suite (or `"all"`) and write the JSON report.
/// Returns `VerificationFailed` when any case fails; the report is still written.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hsymb_verify(
    suite: *const c_char,
    max_weight: u32,
    max_depth: u32,
    seed: u64,
    out: *mut *mut c_char,
) -> HsymbStatus {
    guard(|| {
        let name = read_str(suite, "suite")?;
        let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
        let bounds = Bounds { max_weight, max_depth: max_depth as usize, seed };
        let reports: Vec<_> = suites.iter().map(|s| verify::run(*s, &bounds)).collect();
        let passed = reports.iter().all(|r| r.passed());
        let doc = json!({ "passed": passed, "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() });
        write_string(out, doc.to_string())?;
        if passed {
            Ok(())
        } else {
            Err(Fail(HsymbStatus::VerificationFailed, "verification failed".into()))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn last_error() -> String {
        unsafe { CStr::from_ptr(hsymb_last_error()) }.to_str().unwrap().to_string()
    }

    #[test]
    fn errors_set_the_message() {
        let mut e = ptr::null_mut();
        let text = CString::new("Li[2](2,1)").unwrap();
        let st = unsafe { hsymb_parse(text.as_ptr(), HsymbSort::H as i32, &mut e) };
        assert_eq!(st, HsymbStatus::Parse);
        assert!(e.is_null());
        assert!(!last_error().is_empty());
        let st = unsafe { hsymb_parse(ptr::null(), HsymbSort::H as i32, &mut e) };
        assert_eq!(st, HsymbStatus::NullPointer);
        let text = CString::new("ILi[1](1,2)").unwrap();
        assert_eq!(unsafe { hsymb_parse(text.as_ptr(), HsymbSort::H as i32, &mut e) }, HsymbStatus::SortMismatch);
        let text = CString::new("Li[1](1,").unwrap();
        assert_eq!(unsafe { hsymb_parse(text.as_ptr(), HsymbSort::H as i32, &mut e) }, HsymbStatus::Parse);
    }

    #[test]
    fn success_clears_the_message() {
        let mut e = ptr::null_mut();
        let text = CString::new("log(1)").unwrap();
        unsafe { hsymb_parse(ptr::null(), HsymbSort::H as i32, &mut e) };
        assert_eq!(unsafe { hsymb_parse(text.as_ptr(), HsymbSort::H as i32, &mut e) }, HsymbStatus::Ok);
        assert_eq!(last_error(), "");
        unsafe { hsymb_element_free(e) };
    }

    #[test]
    fn version_is_static() {
        let v = unsafe { CStr::from_ptr(hsymb_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
