use std::ffi::{c_char, CStr, CString};
use std::ptr;

use qnarayana_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { qn_string_free(s) };
    text
}

fn last_error() -> Option<String> {
    let p = qn_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn family(f: QnFamily, n: u32) -> *mut QnPoly {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_family(f, n, &mut out) }, QnStatus::Ok);
    out
}

fn to_string(p: *const QnPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_to_string(p, &mut s) }, QnStatus::Ok);
    take_string(s)
}

#[test]
fn family_members_and_text() {
    let c5 = family(QnFamily::SmallC, 5);
    assert_eq!(to_string(c5), "1+2t+4t^2+2t^3+t^4");
    assert_eq!(unsafe { qn_poly_degree(c5) }, 4);
    let mut coeff = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_coeff(c5, 2, &mut coeff) }, QnStatus::Ok);
    assert_eq!(take_string(coeff), "4");
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_to_json(c5, &mut json) }, QnStatus::Ok);
    assert_eq!(take_string(json), r#"{"var":"t","coeffs":["1","2","4","2","1"]}"#);
    unsafe { qn_poly_free(c5) };

    let big = family(QnFamily::Narayana, 5);
    assert_eq!(to_string(big), "1+10t+20t^2+10t^3+t^4");
    unsafe { qn_poly_free(big) };
    let cat = family(QnFamily::Catalan, 10);
    assert_eq!(to_string(cat), "16796");
    unsafe { qn_poly_free(cat) };
}

#[test]
fn parse_multiply_compare() {
    let text = CString::new("1+t").unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_parse(text.as_ptr(), &mut a) }, QnStatus::Ok);
    let mut square = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_mul(a, a, &mut square) }, QnStatus::Ok);
    assert_eq!(to_string(square), "1+2t+t^2");
    let expected = CString::new("1+2t+t^2").unwrap();
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_parse(expected.as_ptr(), &mut b) }, QnStatus::Ok);
    assert!(unsafe { qn_poly_equal(square, b) });
    assert!(!unsafe { qn_poly_equal(a, b) });
    let q = CString::new("1+q").unwrap();
    let mut in_q = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_parse(q.as_ptr(), &mut in_q) }, QnStatus::Ok);
    assert_eq!(unsafe { qn_poly_mul(a, in_q, &mut square) }, QnStatus::Usage);
    assert!(last_error().unwrap().contains("variable"));
    unsafe {
        qn_poly_free(a);
        qn_poly_free(b);
        qn_poly_free(in_q);
        qn_poly_free(ptr::null_mut());
    }
}

#[test]
fn hankel_determinants() {
    for n in 1..=6u32 {
        let mut det = ptr::null_mut();
        assert_eq!(unsafe { qn_hankel_det(QnFamily::SmallC, 1, n, &mut det) }, QnStatus::Ok);
        let e = n * (n - 1) / 2;
        let expected = match (e, e % 2) {
            (0, _) => "1".to_string(),
            (1, _) => "-t".to_string(),
            (_, 1) => format!("-t^{e}"),
            _ => format!("t^{e}"),
        };
        assert_eq!(to_string(det), expected);
        unsafe { qn_poly_free(det) };
    }
    let mut det = ptr::null_mut();
    assert_eq!(unsafe { qn_hankel_det(QnFamily::Narayana, 2, 3, &mut det) }, QnStatus::Usage);
    assert!(det.is_null());
    assert!(last_error().unwrap().contains("shift"));
}

#[test]
fn identities_and_suite() {
    let name = CString::new("eq25").unwrap();
    assert_eq!(unsafe { qn_verify_identity(name.as_ptr(), 20) }, QnStatus::Ok);
    assert!(last_error().is_none());
    let bad = CString::new("eq99").unwrap();
    assert_eq!(unsafe { qn_verify_identity(bad.as_ptr(), 20) }, QnStatus::Usage);
    assert_eq!(unsafe { qn_verify_identity(name.as_ptr(), 1) }, QnStatus::Usage);
    let (mut passed, mut total) = (0u32, 0u32);
    assert_eq!(unsafe { qn_verify_all(&mut passed, &mut total) }, QnStatus::Ok);
    assert_eq!(passed, total);
    assert_eq!(total as usize, qnarayana::verify::registry().len());
}

#[test]
fn null_arguments_are_reported() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qn_poly_to_string(ptr::null(), &mut s) }, QnStatus::NullPointer);
    assert_eq!(unsafe { qn_poly_family(QnFamily::SmallC, 3, ptr::null_mut()) }, QnStatus::NullPointer);
    assert_eq!(unsafe { qn_verify_identity(ptr::null(), 20) }, QnStatus::NullPointer);
    assert_eq!(unsafe { qn_poly_degree(ptr::null()) }, -1);
    assert!(!unsafe { qn_poly_equal(ptr::null(), ptr::null()) });
    unsafe { qn_string_free(ptr::null_mut()) };
}
