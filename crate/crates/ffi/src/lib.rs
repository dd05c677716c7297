//! C interface to `hurwitz-core`.
//!
//! Conventions:
//! * every function returns an [`HzStatus`]; results go through out-pointers;
//! * handles (`HzType`, `HzFactorizationList`, `HzPoly`) are created by the
//!   library and released with the matching `*_free` function;
//! * strings returned through `char **` are released with [`hz_string_free`];
//! * on failure, [`hz_last_error_message`] describes the error of the most
//!   recent failing call on the current thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hurwitz_core::braid::{braid_orbits, NodeClass};
use hurwitz_core::charp::{
    admissible_reduction_census, tail_invariants, CensusVariant, ReductionCount,
};
use hurwitz_core::fp_poly::{cartier_coefficient, supersingular_lambdas, FpPolynomial, KummerData};
use hurwitz_core::hurwitz::{
    enumerate_factorizations, hurwitz_formula, hurwitz_number_brute, HurwitzFactorization,
    RamificationType,
};
use hurwitz_core::perm::{group_analyze, Classification, CycleType, GeneratorSet};
use hurwitz_core::Error;

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HzStatus {
    HZ_OK = 0,
    HZ_NULL_POINTER = 1,
    HZ_INVALID_UTF8 = 2,
    HZ_PARSE_ERROR = 3,
    HZ_INVALID_INPUT = 4,
    HZ_GENUS_CONDITION = 5,
    HZ_UNSUPPORTED = 6,
    HZ_BOUND_EXCEEDED = 7,
    HZ_RESOURCE_GUARD = 8,
    HZ_INDEX_OUT_OF_RANGE = 9,
    HZ_IO_ERROR = 10,
    HZ_PANIC = 11,
}

/// A ramification type.
pub struct HzType {
    inner: RamificationType,
}

/// Factorizations of a type, in canonical order.
pub struct HzFactorizationList {
    items: Vec<HurwitzFactorization>,
}

/// A polynomial over a prime field.
pub struct HzPoly {
    inner: FpPolynomial,
}

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HzCountKind {
    HZ_COUNT_EXACT = 0,
    /// One of exactly two values, `low` or `high`.
    HZ_COUNT_AMBIGUOUS = 1,
    /// Anywhere in `[low, high]`.
    HZ_COUNT_BOUNDED = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HzCount {
    pub kind: HzCountKind,
    pub low: u64,
    pub high: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HzCensus {
    pub h: u64,
    pub single_cycle_bad: u64,
    pub two_cycle_bad: HzCount,
    pub bad: HzCount,
    pub good: HzCount,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HzTail {
    pub h: u64,
    pub m: u64,
    pub sigma_num: i64,
    pub sigma_den: i64,
}

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HzGroupClass {
    HZ_GROUP_SYMMETRIC = 0,
    HZ_GROUP_ALTERNATING = 1,
    HZ_GROUP_OTHER = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HzGroupReport {
    pub degree: usize,
    pub order: u64,
    pub transitive: bool,
    pub classification: HzGroupClass,
}

/// A braid orbit: its length and the node monodromy, a single
/// `node_a`-cycle (`node_b == 0`) or a pair `node_a-node_b`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HzOrbit {
    pub length: usize,
    pub node_a: usize,
    pub node_b: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(HzStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => HzStatus::HZ_PARSE_ERROR,
            Error::GenusCondition(_) => HzStatus::HZ_GENUS_CONDITION,
            Error::Unsupported(_) => HzStatus::HZ_UNSUPPORTED,
            Error::BoundExceeded { .. } => HzStatus::HZ_BOUND_EXCEEDED,
            Error::ResourceGuard(_) => HzStatus::HZ_RESOURCE_GUARD,
            Error::Io(_) => HzStatus::HZ_IO_ERROR,
            Error::DegreeMismatch(..)
            | Error::InvalidPermutation(_)
            | Error::InvalidType(_)
            | Error::Precondition(_) => HzStatus::HZ_INVALID_INPUT,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: HzStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HzStatus::HZ_OK,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            HzStatus::HZ_PANIC
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(HzStatus::HZ_NULL_POINTER, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(HzStatus::HZ_INVALID_UTF8, "argument is not valid UTF-8"))
}

unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(HzStatus::HZ_NULL_POINTER, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(HzStatus::HZ_NULL_POINTER, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| fail(HzStatus::HZ_INVALID_INPUT, "interior NUL"))?;
    write_out(out, c.into_raw())
}

fn count(c: ReductionCount) -> HzCount {
    let kind = match c {
        ReductionCount::Exact(_) => HzCountKind::HZ_COUNT_EXACT,
        ReductionCount::Ambiguous { .. } => HzCountKind::HZ_COUNT_AMBIGUOUS,
        ReductionCount::Bounded { .. } => HzCountKind::HZ_COUNT_BOUNDED,
    };
    HzCount { kind, low: c.low(), high: c.high() }
}

/// Message for the last failing call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------- types

/// Parse `d:e1,e2,..` (pairs written `e1-e2`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_type_parse(text: *const c_char, out: *mut *mut HzType) -> HzStatus {
    guard(|| {
        let inner: RamificationType = str_arg(text)?.parse()?;
        write_out(out, Box::into_raw(Box::new(HzType { inner })))
    })
}

/// # Safety
/// `t` must be NULL or a handle from [`hz_type_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_type_free(t: *mut HzType) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_type_degree(t: *const HzType, out: *mut usize) -> HzStatus {
    guard(|| write_out(out, ref_arg(t)?.inner.degree()))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_type_to_string(t: *const HzType, out: *mut *mut c_char) -> HzStatus {
    guard(|| write_string(out, ref_arg(t)?.inner.to_string()))
}

/// Hurwitz number from the closed formulas.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_hurwitz_formula(t: *const HzType, out: *mut u64) -> HzStatus {
    guard(|| write_out(out, hurwitz_formula(&ref_arg(t)?.inner)?))
}

/// Hurwitz number by enumeration, with bounds from the environment.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_hurwitz_brute(t: *const HzType, out: *mut u64) -> HzStatus {
    guard(|| write_out(out, hurwitz_number_brute(&ref_arg(t)?.inner)?))
}

// ---------------------------------------------------------------- factorizations

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_enumerate(t: *const HzType, out: *mut *mut HzFactorizationList) -> HzStatus {
    guard(|| {
        let items = enumerate_factorizations(&ref_arg(t)?.inner)?;
        write_out(out, Box::into_raw(Box::new(HzFactorizationList { items })))
    })
}

/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_list_len(list: *const HzFactorizationList, out: *mut usize) -> HzStatus {
    guard(|| write_out(out, ref_arg(list)?.items.len()))
}

/// Entry `index` as a JSON line `{"d":..,"tuple":[..]}` with 1-based points.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_list_get_json(
    list: *const HzFactorizationList,
    index: usize,
    out: *mut *mut c_char,
) -> HzStatus {
    guard(|| {
        let f = ref_arg(list)?
            .items
            .get(index)
            .ok_or_else(|| fail(HzStatus::HZ_INDEX_OUT_OF_RANGE, format!("index {index} out of range")))?;
        write_string(out, f.to_json_line())
    })
}

/// # Safety
/// `list` must be NULL or a handle from [`hz_enumerate`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_list_free(list: *mut HzFactorizationList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Braid orbits of a 4-point type. Writes up to `capacity` orbits to
/// `orbits` and the total number to `count`; pass `capacity = 0` to query.
///
/// # Safety
/// `t` must be a live handle; `orbits` must hold `capacity` entries;
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_braid_orbits(
    t: *const HzType,
    orbits: *mut HzOrbit,
    capacity: usize,
    count: *mut usize,
) -> HzStatus {
    guard(|| {
        let all = braid_orbits(&ref_arg(t)?.inner)?;
        if capacity > 0 && orbits.is_null() {
            return Err(fail(HzStatus::HZ_NULL_POINTER, "null orbit buffer"));
        }
        for (i, o) in all.iter().take(capacity).enumerate() {
            let (node_a, node_b) = match o.node {
                NodeClass::SingleCycle(m) => (m, 0),
                NodeClass::TwoCycle(a, b) => (a, b),
            };
            orbits.add(i).write(HzOrbit { length: o.length, node_a, node_b });
        }
        write_out(count, all.len())
    })
}

// ---------------------------------------------------------------- characteristic p

/// Reduction census of the pure-cycle type `(d; e[0..4])` at the prime `p`.
///
/// # Safety
/// `e` must point to four values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_reduction_census(p: usize, d: usize, e: *const usize, out: *mut HzCensus) -> HzStatus {
    guard(|| {
        if e.is_null() {
            return Err(fail(HzStatus::HZ_NULL_POINTER, "null exponent array"));
        }
        let e = [*e, *e.add(1), *e.add(2), *e.add(3)];
        let variant = if d == p { CensusVariant::PrimeDegree } else { CensusVariant::GeneralDegree(d) };
        let c = admissible_reduction_census(p, e, variant)?;
        write_out(
            out,
            HzCensus {
                h: c.h,
                single_cycle_bad: c.single_cycle_bad,
                two_cycle_bad: count(c.two_cycle_bad),
                bad: count(c.bad),
                good: count(c.good),
            },
        )
    })
}

/// Tail invariants of a single `e1`-cycle (`e2 == 0`) or a pair `e1-e2` in degree `p`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_tail_invariants(p: usize, e1: usize, e2: usize, out: *mut HzTail) -> HzStatus {
    guard(|| {
        let lengths: &[usize] = if e2 == 0 { &[e1] } else { &[e1, e2] };
        let inv = tail_invariants(p, &CycleType::new(p, lengths)?)?;
        write_out(
            out,
            HzTail {
                h: inv.h,
                m: inv.m,
                sigma_num: *inv.sigma.numer(),
                sigma_den: *inv.sigma.denom(),
            },
        )
    })
}

// ---------------------------------------------------------------- polynomials

unsafe fn kummer(p: u64, a: *const u64) -> Result<KummerData, Failure> {
    if a.is_null() {
        return Err(fail(HzStatus::HZ_NULL_POINTER, "null exponent array"));
    }
    Ok(KummerData::new(p, [*a, *a.add(1), *a.add(2), *a.add(3)])?)
}

/// The Cartier coefficient `c(λ)` for exponents `a[0..4]`.
///
/// # Safety
/// `a` must point to four values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_cartier_coefficient(p: u64, a: *const u64, out: *mut *mut HzPoly) -> HzStatus {
    guard(|| {
        let inner = cartier_coefficient(&kummer(p, a)?)?;
        write_out(out, Box::into_raw(Box::new(HzPoly { inner })))
    })
}

/// Roots of `c(λ)` in `F_p \ {0, 1}`: up to `capacity` are written to
/// `roots`, the total to `count`.
///
/// # Safety
/// `a` must point to four values; `roots` must hold `capacity` entries;
/// `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_supersingular_roots(
    p: u64,
    a: *const u64,
    roots: *mut u64,
    capacity: usize,
    count: *mut usize,
) -> HzStatus {
    guard(|| {
        let r = supersingular_lambdas(&kummer(p, a)?)?;
        if capacity > 0 && roots.is_null() {
            return Err(fail(HzStatus::HZ_NULL_POINTER, "null root buffer"));
        }
        for (i, &x) in r.rational.iter().take(capacity).enumerate() {
            roots.add(i).write(x);
        }
        write_out(count, r.rational.len())
    })
}

/// Degree, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_poly_degree(poly: *const HzPoly, out: *mut i64) -> HzStatus {
    guard(|| write_out(out, ref_arg(poly)?.inner.degree().map_or(-1, |d| d as i64)))
}

/// Borrow the coefficients (ascending powers); valid while `poly` lives.
///
/// # Safety
/// `poly` must be a live handle; `coeffs` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_poly_coeffs(poly: *const HzPoly, coeffs: *mut *const u64, len: *mut usize) -> HzStatus {
    guard(|| {
        let c = ref_arg(poly)?.inner.coeffs();
        write_out(coeffs, c.as_ptr())?;
        write_out(len, c.len())
    })
}

/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_poly_to_string(poly: *const HzPoly, out: *mut *mut c_char) -> HzStatus {
    guard(|| write_string(out, ref_arg(poly)?.inner.to_string()))
}

/// # Safety
/// `poly` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_poly_free(poly: *mut HzPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

// ---------------------------------------------------------------- groups

/// Analyze the group generated by a generator file's contents
/// (`degree: n` header, then one permutation per line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hz_group_analyze(text: *const c_char, out: *mut HzGroupReport) -> HzStatus {
    guard(|| {
        let gens: GeneratorSet = str_arg(text)?.parse()?;
        let r = group_analyze(&gens.generators)?;
        let classification = match r.classification {
            Classification::Symmetric => HzGroupClass::HZ_GROUP_SYMMETRIC,
            Classification::Alternating => HzGroupClass::HZ_GROUP_ALTERNATING,
            Classification::Other(_) => HzGroupClass::HZ_GROUP_OTHER,
        };
        let order = u64::try_from(r.order).map_err(|_| fail(HzStatus::HZ_RESOURCE_GUARD, "order exceeds 64 bits"))?;
        write_out(
            out,
            HzGroupReport {
                degree: r.degree,
                order,
                transitive: r.is_transitive,
                classification,
            },
        )
    })
}
