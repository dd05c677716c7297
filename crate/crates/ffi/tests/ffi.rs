use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hurwitz_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    hz_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(hz_last_error_message()).to_string_lossy().into_owned()
}

#[test]
fn type_round_trip_and_counts() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(hz_type_parse(c("5:2,2,4,4").as_ptr(), &mut t), HzStatus::HZ_OK);
        let mut d = 0;
        assert_eq!(hz_type_degree(t, &mut d), HzStatus::HZ_OK);
        assert_eq!(d, 5);
        let mut s = ptr::null_mut();
        assert_eq!(hz_type_to_string(t, &mut s), HzStatus::HZ_OK);
        assert_eq!(take_string(s), "5:2,2,4,4");
        let (mut f, mut b) = (0u64, 0u64);
        assert_eq!(hz_hurwitz_formula(t, &mut f), HzStatus::HZ_OK);
        assert_eq!(hz_hurwitz_brute(t, &mut b), HzStatus::HZ_OK);
        assert_eq!((f, b), (8, 8));

        let mut list = ptr::null_mut();
        assert_eq!(hz_enumerate(t, &mut list), HzStatus::HZ_OK);
        let mut n = 0;
        assert_eq!(hz_list_len(list, &mut n), HzStatus::HZ_OK);
        assert_eq!(n, 8);
        let mut s = ptr::null_mut();
        assert_eq!(hz_list_get_json(list, 0, &mut s), HzStatus::HZ_OK);
        assert!(take_string(s).starts_with("{\"d\":5,\"tuple\":"));
        assert_eq!(hz_list_get_json(list, 8, &mut s), HzStatus::HZ_INDEX_OUT_OF_RANGE);
        hz_list_free(list);

        let mut count = 0;
        assert_eq!(hz_braid_orbits(t, ptr::null_mut(), 0, &mut count), HzStatus::HZ_OK);
        let mut orbits = vec![HzOrbit { length: 0, node_a: 0, node_b: 0 }; count];
        assert_eq!(hz_braid_orbits(t, orbits.as_mut_ptr(), count, &mut count), HzStatus::HZ_OK);
        assert_eq!(orbits.iter().map(|o| o.length).sum::<usize>(), 8);
        assert_eq!(orbits.iter().filter(|o| o.node_b != 0).count(), 4);
        hz_type_free(t);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(hz_type_parse(c("5:x").as_ptr(), &mut t), HzStatus::HZ_PARSE_ERROR);
        assert!(t.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(hz_type_parse(ptr::null(), &mut t), HzStatus::HZ_NULL_POINTER);
        assert_eq!(hz_type_parse(c("9:2,2,4,4").as_ptr(), &mut t), HzStatus::HZ_OK);
        let mut n = 0;
        assert_eq!(hz_hurwitz_formula(t, &mut n), HzStatus::HZ_GENUS_CONDITION);
        assert!(last_error().contains("genus"), "{}", last_error());
        assert_eq!(hz_hurwitz_formula(ptr::null(), &mut n), HzStatus::HZ_NULL_POINTER);
        hz_type_free(t);
        assert_eq!(hz_type_parse(c("10:2-2,8,10").as_ptr(), &mut t), HzStatus::HZ_OK);
        assert_eq!(hz_hurwitz_brute(t, &mut n), HzStatus::HZ_BOUND_EXCEEDED);
        hz_type_free(t);
        hz_type_free(ptr::null_mut());
    }
}

#[test]
fn census_and_tails() {
    unsafe {
        let mut out = std::mem::zeroed::<HzCensus>();
        let e = [2usize, 4, 4, 6];
        assert_eq!(hz_reduction_census(7, 7, e.as_ptr(), &mut out), HzStatus::HZ_OK);
        assert_eq!(out.h, 12);
        assert_eq!(out.bad, HzCount { kind: HzCountKind::HZ_COUNT_AMBIGUOUS, low: 7, high: 9 });
        let e = [3usize, 3, 5, 5];
        assert_eq!(hz_reduction_census(7, 7, e.as_ptr(), &mut out), HzStatus::HZ_OK);
        assert_eq!(out.bad, HzCount { kind: HzCountKind::HZ_COUNT_EXACT, low: 7, high: 7 });

        let mut tail = std::mem::zeroed::<HzTail>();
        assert_eq!(hz_tail_invariants(7, 3, 0, &mut tail), HzStatus::HZ_OK);
        assert_eq!((tail.h, tail.m, tail.sigma_num, tail.sigma_den), (2, 3, 2, 3));
        assert_eq!(hz_tail_invariants(7, 3, 3, &mut tail), HzStatus::HZ_OK);
        assert_eq!((tail.h, tail.m), (1, 3));
        assert_eq!(hz_tail_invariants(6, 3, 0, &mut tail), HzStatus::HZ_INVALID_INPUT);
    }
}

#[test]
fn polynomials_and_groups() {
    unsafe {
        let a = [1u64, 1, 1, 1];
        let mut poly = ptr::null_mut();
        assert_eq!(hz_cartier_coefficient(3, a.as_ptr(), &mut poly), HzStatus::HZ_OK);
        let mut deg = 0;
        assert_eq!(hz_poly_degree(poly, &mut deg), HzStatus::HZ_OK);
        assert_eq!(deg, 1);
        let (mut ptr_, mut len) = (ptr::null(), 0);
        assert_eq!(hz_poly_coeffs(poly, &mut ptr_, &mut len), HzStatus::HZ_OK);
        assert_eq!(std::slice::from_raw_parts(ptr_, len), &[1, 1]);
        let mut s = ptr::null_mut();
        assert_eq!(hz_poly_to_string(poly, &mut s), HzStatus::HZ_OK);
        assert_eq!(take_string(s), "1 + λ");
        hz_poly_free(poly);

        let mut roots = [0u64; 4];
        let mut n = 0;
        assert_eq!(hz_supersingular_roots(3, a.as_ptr(), roots.as_mut_ptr(), 4, &mut n), HzStatus::HZ_OK);
        assert_eq!(&roots[..n], &[2]);
        let bad = [2u64, 2, 2, 1];
        assert_eq!(hz_cartier_coefficient(5, bad.as_ptr(), &mut poly), HzStatus::HZ_INVALID_INPUT);

        let mut g = std::mem::zeroed::<HzGroupReport>();
        let text = c("degree: 5\n(1,2)\n(1,2,3,4,5)\n");
        assert_eq!(hz_group_analyze(text.as_ptr(), &mut g), HzStatus::HZ_OK);
        assert_eq!((g.degree, g.order, g.transitive), (5, 120, true));
        assert_eq!(g.classification, HzGroupClass::HZ_GROUP_SYMMETRIC);
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/hurwitz.h")).unwrap();
    for name in [
        "hz_type_parse",
        "hz_enumerate",
        "hz_reduction_census",
        "hz_cartier_coefficient",
        "hz_group_analyze",
        "hz_last_error_message",
        "typedef struct HzType HzType;",
        "HZ_BOUND_EXCEEDED = 7",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compile and run a small C program against the header and the static
/// library when a C compiler is available.
#[test]
fn c_program_links_against_the_static_library() {
    let target = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target.join("libhurwitz_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no static library at {} or no C compiler", lib.display());
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "hurwitz.h"
int main(void) {
    HzType *t = NULL;
    uint64_t h = 0;
    if (hz_type_parse("7:2,4,4,6", &t) != HZ_OK) return 1;
    if (hz_hurwitz_formula(t, &h) != HZ_OK) return 2;
    hz_type_free(t);
    if (hz_type_parse("oops", &t) != HZ_PARSE_ERROR) return 3;
    if (hz_last_error_message() == NULL) return 4;
    printf("%llu\n", (unsigned long long)h);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("smoke");
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke program exited with {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "12");
}
