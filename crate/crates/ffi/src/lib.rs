//! C ABI over `sdyb`.
//!
//! Structures live behind opaque handles created by `sdyb_*_new`-style
//! constructors and released with the matching `*_free`. Every fallible call
//! returns an [`SdybStatus`]; on failure [`sdyb_last_error`] describes the
//! problem for the current thread. Elements are `uint32_t` in `0..size`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use sdyb::braid::{coloring_count_closure, BraidWord};
use sdyb::magma::{axiom_report, make_alexander_quandle, make_trivial_quandle};
use sdyb::solution::{check_birack, guitar_map, sigma_from_shelf, structure_rack};
use sdyb::{CochainComplex, ComplexKind, OpTable, SigmaTable, Subcomplex};
use thiserror::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdybStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The structure does not satisfy what the operation needs (not a rack, not a birack, ...).
    Domain = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

/// Which complex [`sdyb_sigma_cohomology`] builds from a solution.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdybComplex {
    Braided = 0,
    Birack = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdybSubcomplex {
    Full = 0,
    /// `f(…, a, a, …) = 0` (quandle or biquandle cochains).
    Degenerate = 1,
    /// `f(t(a), a) = 0`, braided complex in degree 2 only.
    BraidedBiquandle = 2,
}

/// Axiom flags of an operation table.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SdybMagmaReport {
    pub is_shelf: bool,
    pub is_rack: bool,
    pub is_quandle: bool,
}

/// Axiom flags of a solution.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SdybSigmaReport {
    pub is_braided: bool,
    pub is_invertible: bool,
    pub is_left_nondegenerate: bool,
    pub is_right_nondegenerate: bool,
    pub is_birack: bool,
    pub is_biquandle: bool,
}

/// Opaque operation table `a ◁ b`.
pub struct SdybMagma(OpTable);

/// Opaque solution `σ(a,b)`.
pub struct SdybSigma(SigmaTable);

#[derive(Debug, Error)]
enum FfiError {
    #[error("null pointer passed as {0}")]
    Null(&'static str),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Domain(#[from] sdyb::Error),
    #[error("output buffer holds {capacity} entries, {needed} needed")]
    TooSmall { capacity: usize, needed: usize },
}

impl FfiError {
    fn status(&self) -> SdybStatus {
        match self {
            FfiError::Null(_) => SdybStatus::NullPointer,
            FfiError::Invalid(_) => SdybStatus::InvalidArgument,
            FfiError::Domain(
                sdyb::Error::Braid(_)
                | sdyb::Error::Parameter(_)
                | sdyb::Error::EmptyCarrier
                | sdyb::Error::TableShape { .. }
                | sdyb::Error::EntryOutOfRange { .. },
            ) => SdybStatus::InvalidArgument,
            FfiError::Domain(_) => SdybStatus::Domain,
            FfiError::TooSmall { .. } => SdybStatus::BufferTooSmall,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> SdybStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdybStatus::Ok,
        Ok(Err(e)) => {
            set_error(e.to_string());
            e.status()
        }
        Err(_) => {
            set_error("internal panic".into());
            SdybStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, FfiError> {
    p.as_ref().ok_or(FfiError::Null(name))
}

unsafe fn as_slice<'a, T>(p: *const T, len: usize, name: &'static str) -> Result<&'a [T], FfiError> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(FfiError::Null(name));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn write<T>(out: *mut T, value: T, name: &'static str) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(FfiError::Null(name));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_slice<T: Copy>(out: *mut T, capacity: usize, values: &[T]) -> Result<(), FfiError> {
    if values.len() > capacity {
        return Err(FfiError::TooSmall { capacity, needed: values.len() });
    }
    if !values.is_empty() {
        if out.is_null() {
            return Err(FfiError::Null("out"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    Ok(())
}

fn elements(raw: &[u32]) -> Vec<usize> {
    raw.iter().map(|&x| x as usize).collect()
}

fn checked_size(size: u32, per_cell: usize, len: usize) -> Result<usize, FfiError> {
    let m = size as usize;
    let expected = m.checked_mul(m).and_then(|c| c.checked_mul(per_cell)).ok_or(FfiError::Invalid("size".into()))?;
    if len != expected {
        return Err(FfiError::Invalid(format!("table of length {len}, expected {expected}")));
    }
    Ok(m)
}

/// Message for the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn sdyb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a magma from a row-major `size*size` table.
///
/// # Safety
/// `table` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_new(
    size: u32,
    table: *const u32,
    len: usize,
    out: *mut *mut SdybMagma,
) -> SdybStatus {
    guard(|| {
        let m = checked_size(size, 1, len)?;
        let op = OpTable::new(m, elements(as_slice(table, len, "table")?))?;
        write(out, Box::into_raw(Box::new(SdybMagma(op))), "out")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_trivial(size: u32, out: *mut *mut SdybMagma) -> SdybStatus {
    guard(|| write(out, Box::into_raw(Box::new(SdybMagma(make_trivial_quandle(size as usize)?))), "out"))
}

/// `a ◁ b = t·a + (1−t)·b mod m`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_alexander(m: u32, t: i64, out: *mut *mut SdybMagma) -> SdybStatus {
    guard(|| write(out, Box::into_raw(Box::new(SdybMagma(make_alexander_quandle(m as usize, t)?))), "out"))
}

/// # Safety
/// `magma` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_free(magma: *mut SdybMagma) {
    if !magma.is_null() {
        drop(Box::from_raw(magma));
    }
}

/// Carrier size, or 0 for NULL.
///
/// # Safety
/// `magma` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_size(magma: *const SdybMagma) -> u32 {
    magma.as_ref().map_or(0, |m| m.0.size() as u32)
}

/// Copies the row-major table into `out` (capacity `cap`).
///
/// # Safety
/// `magma` must be live; `out` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_table(magma: *const SdybMagma, out: *mut u32, cap: usize) -> SdybStatus {
    guard(|| {
        let op = &as_ref(magma, "magma")?.0;
        let values: Vec<u32> = op.entries().iter().map(|&x| x as u32).collect();
        write_slice(out, cap, &values)
    })
}

/// # Safety
/// `magma` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_check(magma: *const SdybMagma, out: *mut SdybMagmaReport) -> SdybStatus {
    guard(|| {
        let r = axiom_report(&as_ref(magma, "magma")?.0);
        write(out, SdybMagmaReport { is_shelf: r.is_shelf, is_rack: r.is_rack, is_quandle: r.is_quandle }, "out")
    })
}

/// Rack cohomology `H^k(ℤ_n)` (`n = 0` for ℤ) as cyclic factor orders, 0 marking a copy of ℤ.
///
/// `*len` receives the number of factors, also when `cap` is too small.
///
/// # Safety
/// `magma` must be live; `factors` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_magma_cohomology(
    magma: *const SdybMagma,
    quandle: bool,
    k: u32,
    n: u64,
    factors: *mut u64,
    cap: usize,
    len: *mut usize,
) -> SdybStatus {
    guard(|| {
        let op = as_ref(magma, "magma")?.0.clone();
        let sub = if quandle { Subcomplex::QuandleDegenerate } else { Subcomplex::Full };
        let h = CochainComplex::new(ComplexKind::Rack(op), sub)?.cohomology(k as usize, n)?;
        write(len, h.factors().len(), "len")?;
        write_slice(factors, cap, h.factors())
    })
}

/// Builds a solution from `size*size` pairs, row-major, flattened to `2*size*size` values.
///
/// # Safety
/// `pairs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_new(
    size: u32,
    pairs: *const u32,
    len: usize,
    out: *mut *mut SdybSigma,
) -> SdybStatus {
    guard(|| {
        let m = checked_size(size, 2, len)?;
        let raw = as_slice(pairs, len, "pairs")?;
        let table = raw.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        write(out, Box::into_raw(Box::new(SdybSigma(SigmaTable::new(m, table)?))), "out")
    })
}

/// `σ(a,b) = (b, a◁b)`.
///
/// # Safety
/// `magma` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_from_shelf(magma: *const SdybMagma, out: *mut *mut SdybSigma) -> SdybStatus {
    guard(|| {
        let s = sigma_from_shelf(&as_ref(magma, "magma")?.0);
        write(out, Box::into_raw(Box::new(SdybSigma(s))), "out")
    })
}

/// # Safety
/// `sigma` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_free(sigma: *mut SdybSigma) {
    if !sigma.is_null() {
        drop(Box::from_raw(sigma));
    }
}

/// Carrier size, or 0 for NULL.
///
/// # Safety
/// `sigma` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_size(sigma: *const SdybSigma) -> u32 {
    sigma.as_ref().map_or(0, |s| s.0.size() as u32)
}

/// # Safety
/// `sigma` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_check(sigma: *const SdybSigma, out: *mut SdybSigmaReport) -> SdybStatus {
    guard(|| {
        let r = check_birack(&as_ref(sigma, "sigma")?.0);
        let report = SdybSigmaReport {
            is_braided: r.is_braided,
            is_invertible: r.is_invertible,
            is_left_nondegenerate: r.is_left_nondegenerate,
            is_right_nondegenerate: r.is_right_nondegenerate,
            is_birack: r.is_birack,
            is_biquandle: r.is_biquandle,
        };
        write(out, report, "out")
    })
}

/// The structure rack of a birack, as a new magma handle.
///
/// # Safety
/// `sigma` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_structure_rack(sigma: *const SdybSigma, out: *mut *mut SdybMagma) -> SdybStatus {
    guard(|| {
        let rack = structure_rack(&as_ref(sigma, "sigma")?.0)?;
        write(out, Box::into_raw(Box::new(SdybMagma(rack))), "out")
    })
}

/// Writes `J(tuple)` (same length as `tuple`) into `out`.
///
/// # Safety
/// `tuple` must hold `len` values and `out` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_guitar(
    sigma: *const SdybSigma,
    tuple: *const u32,
    len: usize,
    out: *mut u32,
) -> SdybStatus {
    guard(|| {
        let s = &as_ref(sigma, "sigma")?.0;
        let t = elements(as_slice(tuple, len, "tuple")?);
        if let Some(&x) = t.iter().find(|&&x| x >= s.size()) {
            return Err(FfiError::Invalid(format!("element {x} outside 0..{}", s.size())));
        }
        let image: Vec<u32> = guitar_map(s, &t).into_iter().map(|x| x as u32).collect();
        write_slice(out, len, &image)
    })
}

/// Number of colorings of the closure of the braid word `letters` on `strands` strands.
///
/// # Safety
/// `letters` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_closure_count(
    sigma: *const SdybSigma,
    strands: u32,
    letters: *const i32,
    len: usize,
    out: *mut u64,
) -> SdybStatus {
    guard(|| {
        let s = &as_ref(sigma, "sigma")?.0;
        let word = BraidWord::new(strands as usize, as_slice(letters, len, "letters")?.to_vec())?;
        write(out, coloring_count_closure(s, &word)?, "out")
    })
}

/// Braided or birack cohomology of a solution; output as in [`sdyb_magma_cohomology`].
///
/// # Safety
/// `sigma` must be live; `factors` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sdyb_sigma_cohomology(
    sigma: *const SdybSigma,
    complex: SdybComplex,
    sub: SdybSubcomplex,
    k: u32,
    n: u64,
    factors: *mut u64,
    cap: usize,
    len: *mut usize,
) -> SdybStatus {
    guard(|| {
        let s = as_ref(sigma, "sigma")?.0.clone();
        let kind = match complex {
            SdybComplex::Braided => ComplexKind::Braided(s),
            SdybComplex::Birack => ComplexKind::Birack(s),
        };
        let sub = match sub {
            SdybSubcomplex::Full => Subcomplex::Full,
            SdybSubcomplex::Degenerate => Subcomplex::QuandleDegenerate,
            SdybSubcomplex::BraidedBiquandle => Subcomplex::BraidedBiquandleDeg2,
        };
        let h = CochainComplex::new(kind, sub)?.cohomology(k as usize, n)?;
        write(len, h.factors().len(), "len")?;
        write_slice(factors, cap, h.factors())
    })
}
