//! C ABI over `schubert-core`.
//!
//! Every fallible function returns a [`SchubertStatus`] and writes its
//! result through an out-pointer. On failure a message is kept per thread
//! and can be read with [`schubert_last_error`]. Handles are opaque and must
//! be released with their `_free` function; strings returned by the library
//! must be released with [`schubert_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;

use schubert_core::ideals::{classify, reduced_schubert_basis_with};
use schubert_core::poly::{antidiagonal_order, antidiagonal_transpose_order, GroebnerBasis};
use schubert_core::regularity::{ads_regularity_of_shape, regularity_decomposition, rrw_regularity, Certification};
use schubert_core::report::permutation_report;
use schubert_core::{parse_permutation, Error, Partition, Permutation, TermOrder};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    NotBinomial = 4,
    CapExceeded = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchubertOrder {
    Antidiag = 0,
    AntidiagTranspose = 1,
}

/// Opaque permutation handle.
pub struct SchubertPerm {
    inner: Permutation,
}

/// Opaque Gröbner basis handle; members are in the basis order.
pub struct SchubertBasis {
    inner: GroebnerBasis,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SchubertClassification {
    pub vexillary: bool,
    pub binomial: bool,
    pub binomial_ideal: bool,
    pub gao_yong_reduced: bool,
    /// -1 when the essential set is empty.
    pub max_essential_rank: i64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SchubertShapeRegularity {
    pub rrw: usize,
    pub ads: usize,
    /// Set when the ads value comes from a witness rather than exhaustive
    /// search.
    pub lower_bound_certified: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> SchubertStatus {
    match e {
        Error::CapExceeded { .. } => SchubertStatus::CapExceeded,
        Error::NotBinomial(_) => SchubertStatus::NotBinomial,
        _ => SchubertStatus::InvalidInput,
    }
}

struct Failure(SchubertStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status and the thread's
/// last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SchubertStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SchubertStatus::Ok,
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
            set_error(format!("internal panic: {msg}"));
            SchubertStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(SchubertStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `s` is null or a valid nul-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(SchubertStatus::InvalidUtf8, "string is not UTF-8".into()))
}

/// # Safety
/// `p` is null or points to a live value of type `T`.
unsafe fn read_ref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nuls removed").into_raw()
}

fn order(o: SchubertOrder, n: usize) -> TermOrder {
    match o {
        SchubertOrder::Antidiag => antidiagonal_order(n),
        SchubertOrder::AntidiagTranspose => antidiagonal_transpose_order(n),
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// owned by the library and valid until the next failing call on the same
/// thread.
#[no_mangle]
pub extern "C" fn schubert_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schubert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a one-line word such as `"31425"` or `"3,1,4,2,5"`.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_perm_parse(text: *const c_char, out: *mut *mut SchubertPerm) -> SchubertStatus {
    guard(|| {
        let w = parse_permutation(read_str(text)?)?;
        write_out(out, Box::into_raw(Box::new(SchubertPerm { inner: w })))
    })
}

/// # Safety
/// `perm` is null or a handle from [`schubert_perm_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schubert_perm_free(perm: *mut SchubertPerm) {
    if !perm.is_null() {
        drop(Box::from_raw(perm));
    }
}

/// Size `n` of the permutation, or 0 for a null handle.
///
/// # Safety
/// `perm` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schubert_perm_size(perm: *const SchubertPerm) -> usize {
    perm.as_ref().map_or(0, |p| p.inner.size())
}

/// # Safety
/// `perm` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_classify(
    perm: *const SchubertPerm,
    out: *mut SchubertClassification,
) -> SchubertStatus {
    guard(|| {
        let c = classify(&read_ref(perm)?.inner);
        write_out(
            out,
            SchubertClassification {
                vexillary: c.vexillary,
                binomial: c.binomial,
                binomial_ideal: c.binomial_ideal,
                gao_yong_reduced: c.gao_yong_reduced,
                max_essential_rank: c.max_essential_rank,
            },
        )
    })
}

/// Reduced Gröbner basis of the Schubert determinantal ideal.
///
/// # Safety
/// `perm` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_reduced_basis(
    perm: *const SchubertPerm,
    term_order: SchubertOrder,
    out: *mut *mut SchubertBasis,
) -> SchubertStatus {
    guard(|| {
        let w = &read_ref(perm)?.inner;
        let basis = reduced_schubert_basis_with(w, order(term_order, w.size()));
        write_out(out, Box::into_raw(Box::new(SchubertBasis { inner: basis })))
    })
}

/// # Safety
/// `basis` is null or a handle from [`schubert_reduced_basis`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schubert_basis_free(basis: *mut SchubertBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Number of members, or 0 for a null handle.
///
/// # Safety
/// `basis` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn schubert_basis_len(basis: *const SchubertBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.inner.len())
}

fn member(basis: &SchubertBasis, index: usize) -> Result<&schubert_core::Polynomial, Failure> {
    basis.inner.members.get(index).ok_or_else(|| {
        Failure(SchubertStatus::OutOfRange, format!("index {index} out of range for {} members", basis.inner.len()))
    })
}

/// Degree and number of terms of member `index`.
///
/// # Safety
/// `basis` is a live handle; `degree` and `num_terms` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_basis_member_shape(
    basis: *const SchubertBasis,
    index: usize,
    degree: *mut u32,
    num_terms: *mut usize,
) -> SchubertStatus {
    guard(|| {
        let p = member(read_ref(basis)?, index)?;
        write_out(degree, p.degree())?;
        write_out(num_terms, p.num_terms())
    })
}

/// Member `index` as text, terms in descending order. Free the result with
/// [`schubert_string_free`].
///
/// # Safety
/// `basis` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_basis_member_text(
    basis: *const SchubertBasis,
    index: usize,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        let b = read_ref(basis)?;
        let p = member(b, index)?;
        write_out(out, to_c_string(p.to_text(&b.inner.order)))
    })
}

/// Regularity of a dominant part of shape `partition` (e.g. `"6,4,1,1,1"`)
/// by the canonical antidiagonal and by recession connectivity.
///
/// # Safety
/// `partition` is a nul-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_shape_regularity(
    partition: *const c_char,
    edge_cap: usize,
    out: *mut SchubertShapeRegularity,
) -> SchubertStatus {
    guard(|| {
        let lambda: Partition = read_str(partition)?.parse()?;
        if lambda.is_empty() {
            return Err(Error::EmptyInput.into());
        }
        let ads = ads_regularity_of_shape(&lambda, edge_cap)?;
        write_out(
            out,
            SchubertShapeRegularity {
                rrw: rrw_regularity(&lambda),
                ads: ads.value,
                lower_bound_certified: ads.certification == Certification::LowerBoundCertified,
            },
        )
    })
}

/// Regularity of a binomial Schubert determinantal ideal as a sum over its
/// parts.
///
/// # Safety
/// `perm` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_regularity(perm: *const SchubertPerm, out: *mut usize) -> SchubertStatus {
    guard(|| {
        let r = regularity_decomposition(&read_ref(perm)?.inner)?;
        write_out(out, r)
    })
}

/// The full JSON report for a permutation. Free the result with
/// [`schubert_string_free`].
///
/// # Safety
/// `perm` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn schubert_report_json(
    perm: *const SchubertPerm,
    term_order: SchubertOrder,
    out: *mut *mut c_char,
) -> SchubertStatus {
    guard(|| {
        let w = &read_ref(perm)?.inner;
        let report = permutation_report(w, &order(term_order, w.size()));
        let text = serde_json::to_string(&report).expect("reports serialize");
        write_out(out, to_c_string(text))
    })
}
