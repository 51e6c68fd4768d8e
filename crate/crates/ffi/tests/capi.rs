//! Exercises the C ABI exactly as a C caller would: raw pointers, status
//! codes, `last_error` messages, and explicit frees.

use dcmx_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn fixture(name: &str) -> CString {
    let path = format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    CString::new(std::fs::read_to_string(path).expect("fixture readable")).unwrap()
}

fn parse(name: &str) -> *mut DcmxMatrix {
    let json = fixture(name);
    let mut m: *mut DcmxMatrix = ptr::null_mut();
    let status = dcmx_matrix_parse_json(json.as_ptr(), &mut m);
    assert_eq!(status, DcmxStatus::Ok);
    assert!(!m.is_null());
    m
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(dcmx_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    dcmx_string_free(s);
    owned
}

#[test]
fn parse_inspect_serialize_round_trip() {
    let m = parse("example4.json");
    assert_eq!(dcmx_matrix_rows(m), 3);
    assert_eq!(dcmx_matrix_cols(m), 3);

    let mut entry = [0.0f64; 4];
    assert_eq!(
        dcmx_matrix_entry(m, 2, 2, entry.as_mut_ptr()),
        DcmxStatus::Ok
    );
    assert_eq!(entry, [2.0, 0.0, 1.0, 0.0]);

    assert_eq!(
        dcmx_matrix_entry(m, 3, 0, entry.as_mut_ptr()),
        DcmxStatus::OutOfRange
    );
    assert!(last_error().contains("out of range"));

    let mut json_out: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(dcmx_matrix_to_json(m, &mut json_out), DcmxStatus::Ok);
    let text = take_string(json_out);

    // Reparse the serialized form; it must describe the same matrix.
    let round = CString::new(text).unwrap();
    let mut m2: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(
        dcmx_matrix_parse_json(round.as_ptr(), &mut m2),
        DcmxStatus::Ok
    );
    for i in 0..3 {
        for j in 0..3 {
            let mut a = [0.0f64; 4];
            let mut b = [0.0f64; 4];
            dcmx_matrix_entry(m, i, j, a.as_mut_ptr());
            dcmx_matrix_entry(m2, i, j, b.as_mut_ptr());
            assert_eq!(a, b, "entry ({i}, {j})");
        }
    }
    dcmx_matrix_free(m2);
    dcmx_matrix_free(m);
}

#[test]
fn invert_round_trips_through_the_abi() {
    let m = parse("example4.json");
    let mut inv: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(dcmx_invert(m, ptr::null(), &mut inv), DcmxStatus::Ok);
    let mut back: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(dcmx_invert(inv, ptr::null(), &mut back), DcmxStatus::Ok);
    for i in 0..3 {
        for j in 0..3 {
            let mut a = [0.0f64; 4];
            let mut b = [0.0f64; 4];
            dcmx_matrix_entry(m, i, j, a.as_mut_ptr());
            dcmx_matrix_entry(back, i, j, b.as_mut_ptr());
            for k in 0..4 {
                assert!(
                    (a[k] - b[k]).abs() <= 1e-12,
                    "entry ({i}, {j}) component {k}: {} vs {}",
                    a[k],
                    b[k]
                );
            }
        }
    }
    dcmx_matrix_free(back);
    dcmx_matrix_free(inv);
    dcmx_matrix_free(m);
}

#[test]
fn singular_standard_part_is_reported() {
    let m = parse("singular.json");
    let mut inv: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(
        dcmx_invert(m, ptr::null(), &mut inv),
        DcmxStatus::SingularStandardPart
    );
    assert!(inv.is_null());
    assert!(last_error().contains("singular"));
    dcmx_matrix_free(m);
}

#[test]
fn eig_report_classifies_the_infinite_family() {
    let m = parse("example2.json");
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(dcmx_eig_json(m, ptr::null(), &mut out), DcmxStatus::Ok);
    let report = take_string(out);
    assert!(report.contains("\"classification\": \"infinite\""));
    assert!(report.contains("\"any_infinite\": true"));
    dcmx_matrix_free(m);
}

#[test]
fn jordan_route_covers_both_canonical_cases() {
    // Jordan-block standard part.
    let m1 = parse("example1.json");
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(dcmx_jordan_json(m1, ptr::null(), &mut out), DcmxStatus::Ok);
    let form1 = take_string(out);
    assert!(form1.contains("\"last_row\""));
    dcmx_matrix_free(m1);

    // Diagonalizable standard part.
    let m4 = parse("example4.json");
    let mut out4: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(dcmx_jordan_json(m4, ptr::null(), &mut out4), DcmxStatus::Ok);
    let form4 = take_string(out4);
    assert!(form4.contains("\"blocks\""));
    dcmx_matrix_free(m4);

    // Neither: structure mismatch surfaces as a status, not a crash.
    let mf = parse("fallback.json");
    let mut outf: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        dcmx_jordan_json(mf, ptr::null(), &mut outf),
        DcmxStatus::StructureMismatch
    );
    assert!(outf.is_null());
    dcmx_matrix_free(mf);
}

#[test]
fn diag_hermitian_and_verify_entries() {
    let m5 = parse("example5.json");
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(dcmx_diag_json(m5, ptr::null(), &mut out), DcmxStatus::Ok);
    assert!(take_string(out).contains("\"diagonalizable\": true"));
    dcmx_matrix_free(m5);

    let mh = parse("hermitian.json");
    let mut outh: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        dcmx_hermitian_json(mh, ptr::null(), &mut outh),
        DcmxStatus::Ok
    );
    let report = take_string(outh);
    assert!(report.contains("\"positive_definite\": true"));
    dcmx_matrix_free(mh);

    // Verify a member of the infinite family by hand: with A_s = [[1,1],[0,1]]
    // and A_d = [[1,0],[0,0]], the pair λ = 1 + 2ε, x = (1, ε) satisfies
    // (A_s − I)x_d + (A_d − λ_d I)x_s = (1, 0) + (1 − 2, 0) = 0.
    let m2 = parse("example2.json");
    let x_json = CString::new(
        r#"{"rows":2,"cols":1,"standard":[[1.0,0.0],[0.0,0.0]],"dual":[[0.0,0.0],[1.0,0.0]]}"#,
    )
    .unwrap();
    let mut x: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(
        dcmx_matrix_parse_json(x_json.as_ptr(), &mut x),
        DcmxStatus::Ok
    );
    let lambda = [1.0, 0.0, 2.0, 0.0];
    let mut verified = 0u8;
    assert_eq!(
        dcmx_verify_eigenpair(m2, lambda.as_ptr(), x, ptr::null(), &mut verified),
        DcmxStatus::Ok
    );
    assert_eq!(verified, 1);

    // A wrong dual component must be rejected, not errored.
    let bad = [1.0, 0.0, 5.0, 0.0];
    assert_eq!(
        dcmx_verify_eigenpair(m2, bad.as_ptr(), x, ptr::null(), &mut verified),
        DcmxStatus::Ok
    );
    assert_eq!(verified, 0);
    dcmx_matrix_free(x);
    dcmx_matrix_free(m2);
}

#[test]
fn tolerance_override_changes_the_rank_verdict() {
    let m = parse("near_singular.json");
    let mut inv: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(dcmx_invert(m, ptr::null(), &mut inv), DcmxStatus::Ok);
    dcmx_matrix_free(inv);

    let mut coarse = dcmx_tol_default();
    coarse.rank_rel = 1e-6;
    let mut inv2: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(
        dcmx_invert(m, &coarse, &mut inv2),
        DcmxStatus::SingularStandardPart
    );
    dcmx_matrix_free(m);
}

#[test]
fn null_and_malformed_inputs_are_rejected() {
    let mut m: *mut DcmxMatrix = ptr::null_mut();
    assert_eq!(
        dcmx_matrix_parse_json(ptr::null(), &mut m),
        DcmxStatus::NullArgument
    );
    assert_eq!(
        dcmx_matrix_parse_json(CString::new("{").unwrap().as_ptr(), ptr::null_mut()),
        DcmxStatus::NullArgument
    );

    let garbage = CString::new("not json at all").unwrap();
    assert_eq!(
        dcmx_matrix_parse_json(garbage.as_ptr(), &mut m),
        DcmxStatus::ParseError
    );
    assert!(m.is_null());
    assert!(!last_error().is_empty());

    // Frees tolerate null.
    dcmx_matrix_free(ptr::null_mut());
    dcmx_string_free(ptr::null_mut());
}

#[test]
fn generated_header_is_current_and_covers_the_surface() {
    let header = std::fs::read_to_string(format!("{}/include/dcmx.h", env!("CARGO_MANIFEST_DIR")))
        .expect("committed header present");
    for symbol in [
        "dcmx_tol_default",
        "dcmx_last_error_message",
        "dcmx_matrix_parse_json",
        "dcmx_matrix_to_json",
        "dcmx_matrix_rows",
        "dcmx_matrix_cols",
        "dcmx_matrix_entry",
        "dcmx_matrix_free",
        "dcmx_string_free",
        "dcmx_invert",
        "dcmx_eig_json",
        "dcmx_jordan_json",
        "dcmx_diag_json",
        "dcmx_hermitian_json",
        "dcmx_verify_eigenpair",
        "typedef struct DcmxMatrix DcmxMatrix",
    ] {
        assert!(header.contains(symbol), "header is missing `{symbol}`");
    }
}
