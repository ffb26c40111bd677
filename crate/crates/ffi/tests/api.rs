use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hsymb_ffi::*;

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hsymb_string_free(s) };
    out
}

fn parse(text: &str, sort: HsymbSort) -> *mut HsymbElement {
    let c = CString::new(text).unwrap();
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { hsymb_parse(c.as_ptr(), sort as i32, &mut e) }, HsymbStatus::Ok);
    e
}

#[test]
fn element_life_cycle() {
    let e = parse("ILi[1,3](1,2,3)", HsymbSort::Hbar);
    let mut sort = HsymbSort::H;
    assert_eq!(unsafe { hsymb_element_sort(e, &mut sort) }, HsymbStatus::Ok);
    assert_eq!(sort, HsymbSort::Hbar);

    let mut h = ptr::null_mut();
    assert_eq!(unsafe { hsymb_inv(e, &mut h) }, HsymbStatus::Ok);
    assert_eq!(unsafe { hsymb_element_sort(h, &mut sort) }, HsymbStatus::Ok);
    assert_eq!(sort, HsymbSort::H);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hsymb_render(e, HsymbFormat::Latex as i32, &mut s) }, HsymbStatus::Ok);
    assert_eq!(take(s), "[x_{2}^{-1},x_{1}^{-1}]_{1,3}");

    let same = parse("ILi[1,3](1,2,3)", HsymbSort::Hbar);
    let mut eq = false;
    assert_eq!(unsafe { hsymb_element_equal(e, same, &mut eq) }, HsymbStatus::Ok);
    assert!(eq);
    assert_eq!(unsafe { hsymb_element_equal(e, h, &mut eq) }, HsymbStatus::Ok);
    assert!(!eq);

    unsafe {
        hsymb_element_free(e);
        hsymb_element_free(h);
        hsymb_element_free(same);
        hsymb_element_free(ptr::null_mut());
        hsymb_string_free(ptr::null_mut());
    }
}

#[test]
fn computations_match_the_library() {
    let e = parse("Li[2,1](1,2,3)", HsymbSort::H);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hsymb_coproduct(e, HsymbFormat::Text as i32, &mut s) }, HsymbStatus::Ok);
    let expected = hsymb::render::tensor_text(&hsymb::coproduct::coproduct(&hsymb::parse::parse("Li[2,1](1,2,3)").unwrap()));
    assert_eq!(take(s), expected);

    assert_eq!(unsafe { hsymb_symbol(e, HsymbFormat::Json as i32, &mut s) }, HsymbStatus::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(doc["type"], "symbol");
    assert_eq!(doc["terms"].as_array().unwrap().len(), 6);

    let f = parse("Li[1,1](1,2,3)", HsymbSort::H);
    assert_eq!(unsafe { hsymb_form(f, HsymbFormat::Text as i32, &mut s) }, HsymbStatus::Ok);
    assert!(take(s).starts_with("-1/2*u1*dv1_2"));

    let n = [2u32, 1];
    assert_eq!(
        unsafe { hsymb_variation_matrix(n.as_ptr(), n.len(), HsymbSort::H as i32, HsymbFormat::Json as i32, &mut s) },
        HsymbStatus::Ok
    );
    let doc: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 6);
    unsafe {
        hsymb_element_free(e);
        hsymb_element_free(f);
    }
}

#[test]
fn verification_reports() {
    let suite = CString::new("varmatrix").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hsymb_verify(suite.as_ptr(), 4, 3, 0, &mut s) }, HsymbStatus::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["reports"][0]["cases"], 36);

    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { hsymb_verify(bad.as_ptr(), 4, 3, 0, &mut s) }, HsymbStatus::InvalidArgument);
}

#[test]
fn invalid_arguments() {
    let e = parse("log(1)", HsymbSort::H);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hsymb_render(e, 9, &mut s) }, HsymbStatus::InvalidArgument);
    assert_eq!(unsafe { hsymb_render(ptr::null(), 0, &mut s) }, HsymbStatus::NullPointer);
    assert_eq!(unsafe { hsymb_render(e, 0, ptr::null_mut()) }, HsymbStatus::NullPointer);
    let text = CString::new("log(1)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hsymb_parse(text.as_ptr(), 5, &mut out) }, HsymbStatus::InvalidArgument);
    let bytes = [0xffu8, 0];
    assert_eq!(unsafe { hsymb_parse(bytes.as_ptr().cast(), 0, &mut out) }, HsymbStatus::InvalidUtf8);
    let n = [0u32];
    assert_ne!(unsafe { hsymb_variation_matrix(n.as_ptr(), 1, 0, 0, &mut s) }, HsymbStatus::Ok);
    assert_eq!(unsafe { hsymb_variation_matrix(ptr::null(), 2, 0, 0, &mut s) }, HsymbStatus::NullPointer);
    unsafe { hsymb_element_free(e) };
}

#[test]
fn last_error_is_per_thread() {
    let text = CString::new("Li[").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hsymb_parse(text.as_ptr(), 0, &mut out) }, HsymbStatus::Parse);
    let here = unsafe { CStr::from_ptr(hsymb_last_error()) }.to_str().unwrap().to_string();
    assert!(here.starts_with("parse error"));
    let there = std::thread::spawn(|| unsafe { CStr::from_ptr(hsymb_last_error()) }.to_str().unwrap().to_string())
        .join()
        .unwrap();
    assert_eq!(there, "");
}
