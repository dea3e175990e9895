//! C ABI for the `picard0n` library.
//!
//! Handles are opaque pointers created and released by the `_new`/`_free`
//! pairs below; every fallible call returns a [`P0nStatus`] and leaves a
//! human-readable message retrievable through [`p0n_last_error`]. Labels
//! cross the boundary as `uint32_t` arrays with explicit lengths; basis
//! coefficients come back as an `int64_t` array in basis order.
//!
//! The generated header lives at `include/picard0n.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use picard0n::{
    canonicalize, decompose, dimension, nonadjacent_basis, num_divisors, quotient_dimension_check,
    BoundaryDivisor, CyclicOrder, MarkedSubset, NonAdjacentBasis,
};

/// Status codes returned by every fallible entry point.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P0nStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The inputs violate a precondition; see `p0n_last_error`.
    InvalidArgument = 2,
    /// An output buffer is too small; the required size was reported.
    BufferTooSmall = 3,
}

/// Opaque handle to a cyclic ordering of the labels `1..=n`.
pub struct P0nOrder(CyclicOrder);

/// Opaque handle to the non-adjacent basis of a cyclic ordering.
pub struct P0nBasis(NonAdjacentBasis);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let cleaned: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).expect("NUL-free message");
    });
}

fn invalid(err: picard0n::Error) -> P0nStatus {
    set_error(&err.to_string());
    P0nStatus::InvalidArgument
}

fn null_argument(what: &str) -> P0nStatus {
    set_error(&format!("null argument: {what}"));
    P0nStatus::NullArgument
}

/// Copies the most recent error message (NUL-terminated) into `buf` and
/// returns the message length excluding the terminator. With a null or
/// too-small buffer nothing is copied; call again with the returned
/// length plus one.
#[no_mangle]
pub unsafe extern "C" fn p0n_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let message = slot.borrow();
        let bytes = message.as_bytes_with_nul();
        if !buf.is_null() && cap >= bytes.len() {
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, bytes.len());
        }
        bytes.len() - 1
    })
}

unsafe fn labels_from_raw(labels: *const u32, len: usize) -> Option<Vec<usize>> {
    if labels.is_null() && len > 0 {
        return None;
    }
    let slice = if len == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(labels, len)
    };
    Some(slice.iter().map(|&l| l as usize).collect())
}

unsafe fn write_labels(
    values: &[usize],
    out: *mut u32,
    cap: usize,
    written: *mut usize,
) -> P0nStatus {
    if written.is_null() {
        return null_argument("written");
    }
    *written = values.len();
    if values.len() > cap {
        set_error("output buffer too small");
        return P0nStatus::BufferTooSmall;
    }
    if out.is_null() && !values.is_empty() {
        return null_argument("out");
    }
    for (i, &v) in values.iter().enumerate() {
        *out.add(i) = v as u32;
    }
    P0nStatus::Ok
}

/// Number of boundary divisors, `2^(n-1) - 1 - n`.
#[no_mangle]
pub unsafe extern "C" fn p0n_num_divisors(n: u32, out: *mut u64) -> P0nStatus {
    if out.is_null() {
        return null_argument("out");
    }
    match dimension(n as usize) {
        Ok(_) => {
            *out = num_divisors(n as usize) as u64;
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

/// Basis dimension, `2^(n-1) - 1 - n(n-1)/2`.
#[no_mangle]
pub unsafe extern "C" fn p0n_dimension(n: u32, out: *mut u64) -> P0nStatus {
    if out.is_null() {
        return null_argument("out");
    }
    match dimension(n as usize) {
        Ok(d) => {
            *out = d as u64;
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

/// Creates the standard order `(1, ..., n)`. Free with [`p0n_order_free`].
#[no_mangle]
pub unsafe extern "C" fn p0n_order_standard(n: u32, out: *mut *mut P0nOrder) -> P0nStatus {
    if out.is_null() {
        return null_argument("out");
    }
    match CyclicOrder::standard(n as usize) {
        Ok(order) => {
            *out = Box::into_raw(Box::new(P0nOrder(order)));
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

/// Creates an order from an arrangement (any rotation of it denotes the
/// same order). Free with [`p0n_order_free`].
#[no_mangle]
pub unsafe extern "C" fn p0n_order_new(
    labels: *const u32,
    len: usize,
    out: *mut *mut P0nOrder,
) -> P0nStatus {
    if out.is_null() {
        return null_argument("out");
    }
    let Some(arrangement) = labels_from_raw(labels, len) else {
        return null_argument("labels");
    };
    match CyclicOrder::new(&arrangement) {
        Ok(order) => {
            *out = Box::into_raw(Box::new(P0nOrder(order)));
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn p0n_order_free(order: *mut P0nOrder) {
    if !order.is_null() {
        drop(Box::from_raw(order));
    }
}

/// Number of marked points, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn p0n_order_points(order: *const P0nOrder) -> u32 {
    if order.is_null() {
        return 0;
    }
    (*order).0.n() as u32
}

/// Copies the canonical arrangement (starting with label 1) into `out`.
#[no_mangle]
pub unsafe extern "C" fn p0n_order_arrangement(
    order: *const P0nOrder,
    out: *mut u32,
    cap: usize,
    written: *mut usize,
) -> P0nStatus {
    if order.is_null() {
        return null_argument("order");
    }
    write_labels((*order).0.arrangement(), out, cap, written)
}

/// Canonical representative of the divisor `{A, complement(A)}`: the
/// smaller side, ties broken toward the side containing label 1.
#[no_mangle]
pub unsafe extern "C" fn p0n_canonical_rep(
    n: u32,
    labels: *const u32,
    len: usize,
    out: *mut u32,
    cap: usize,
    written: *mut usize,
) -> P0nStatus {
    let Some(side) = labels_from_raw(labels, len) else {
        return null_argument("labels");
    };
    let subset = match MarkedSubset::from_labels(n as usize, &side) {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    match canonicalize(&subset) {
        Ok(d) => write_labels(&d.rep().labels(), out, cap, written),
        Err(e) => invalid(e),
    }
}

/// Block count `k` of the divisor for the order: 1 means consecutive,
/// 2 or more means it belongs to the non-adjacent basis.
#[no_mangle]
pub unsafe extern "C" fn p0n_block_count(
    order: *const P0nOrder,
    labels: *const u32,
    len: usize,
    out: *mut u32,
) -> P0nStatus {
    if order.is_null() {
        return null_argument("order");
    }
    if out.is_null() {
        return null_argument("out");
    }
    let Some(side) = labels_from_raw(labels, len) else {
        return null_argument("labels");
    };
    let n = (*order).0.n();
    let divisor = match BoundaryDivisor::from_labels(n, &side) {
        Ok(d) => d,
        Err(e) => return invalid(e),
    };
    match decompose(&divisor, &(*order).0) {
        Ok(dec) => {
            *out = dec.k() as u32;
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

/// Writes the polygon signature, e.g. `(10,1,2|3|4|5,6|7|8,9)`, as a
/// NUL-terminated string. `written` receives the length excluding the
/// terminator; `cap` must be at least `written + 1`.
#[no_mangle]
pub unsafe extern "C" fn p0n_polygon_signature(
    order: *const P0nOrder,
    labels: *const u32,
    len: usize,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> P0nStatus {
    if order.is_null() {
        return null_argument("order");
    }
    if written.is_null() {
        return null_argument("written");
    }
    let Some(side) = labels_from_raw(labels, len) else {
        return null_argument("labels");
    };
    let n = (*order).0.n();
    let divisor = match BoundaryDivisor::from_labels(n, &side) {
        Ok(d) => d,
        Err(e) => return invalid(e),
    };
    let signature = match picard0n::polygon_signature(&divisor, &(*order).0) {
        Ok(s) => s,
        Err(e) => return invalid(e),
    };
    *written = signature.len();
    if cap < signature.len() + 1 {
        set_error("signature buffer too small");
        return P0nStatus::BufferTooSmall;
    }
    if buf.is_null() {
        return null_argument("buf");
    }
    std::ptr::copy_nonoverlapping(signature.as_ptr() as *const c_char, buf, signature.len());
    *buf.add(signature.len()) = 0;
    P0nStatus::Ok
}

/// Builds the non-adjacent basis for the order. Free with
/// [`p0n_basis_free`].
#[no_mangle]
pub unsafe extern "C" fn p0n_basis_new(
    order: *const P0nOrder,
    out: *mut *mut P0nBasis,
) -> P0nStatus {
    if order.is_null() {
        return null_argument("order");
    }
    if out.is_null() {
        return null_argument("out");
    }
    match nonadjacent_basis(&(*order).0) {
        Ok(basis) => {
            *out = Box::into_raw(Box::new(P0nBasis(basis)));
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn p0n_basis_free(basis: *mut P0nBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Number of basis elements, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn p0n_basis_len(basis: *const P0nBasis) -> usize {
    if basis.is_null() {
        return 0;
    }
    (*basis).0.len()
}

/// Copies the canonical representative of basis element `index`.
#[no_mangle]
pub unsafe extern "C" fn p0n_basis_element(
    basis: *const P0nBasis,
    index: usize,
    out: *mut u32,
    cap: usize,
    written: *mut usize,
) -> P0nStatus {
    if basis.is_null() {
        return null_argument("basis");
    }
    match (*basis).0.get(index) {
        Some(d) => write_labels(&d.rep().labels(), out, cap, written),
        None => {
            set_error(&format!(
                "basis index {index} out of range 0..{}",
                (*basis).0.len()
            ));
            P0nStatus::InvalidArgument
        }
    }
}

/// Expands the divisor with side `labels` in the basis. Writes one
/// `int64_t` per basis element (so `cap` must be at least
/// [`p0n_basis_len`]); entries are always -1, 0, or +1.
#[no_mangle]
pub unsafe extern "C" fn p0n_expand(
    basis: *const P0nBasis,
    labels: *const u32,
    len: usize,
    out_coeffs: *mut i64,
    cap: usize,
) -> P0nStatus {
    if basis.is_null() {
        return null_argument("basis");
    }
    let Some(side) = labels_from_raw(labels, len) else {
        return null_argument("labels");
    };
    let basis = &(*basis).0;
    if cap < basis.len() {
        set_error(&format!(
            "coefficient buffer holds {cap}, basis has {} elements",
            basis.len()
        ));
        return P0nStatus::BufferTooSmall;
    }
    if out_coeffs.is_null() && basis.len() > 0 {
        return null_argument("out_coeffs");
    }
    let divisor = match BoundaryDivisor::from_labels(basis.n(), &side) {
        Ok(d) => d,
        Err(e) => return invalid(e),
    };
    match picard0n::expand(&divisor, basis) {
        Ok(v) => {
            for (i, &c) in v.coeffs().iter().enumerate() {
                *out_coeffs.add(i) = c;
            }
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

/// Runs the exact rank check: true when the relation matrix cuts the
/// divisor space down to the basis dimension. Supports `4 <= n <= 8`.
#[no_mangle]
pub unsafe extern "C" fn p0n_quotient_dimension_ok(n: u32, out: *mut bool) -> P0nStatus {
    if out.is_null() {
        return null_argument("out");
    }
    match quotient_dimension_check(n as usize) {
        Ok(ok) => {
            *out = ok;
            P0nStatus::Ok
        }
        Err(e) => invalid(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let mut buf = vec![0i8; 256];
        let len = unsafe { p0n_last_error(buf.as_mut_ptr() as *mut c_char, buf.len()) };
        let bytes: Vec<u8> = buf[..len].iter().map(|&b| b as u8).collect();
        String::from_utf8(bytes).unwrap()
    }

    #[test]
    fn counts() {
        let mut out = 0u64;
        assert_eq!(unsafe { p0n_num_divisors(6, &mut out) }, P0nStatus::Ok);
        assert_eq!(out, 25);
        assert_eq!(unsafe { p0n_dimension(6, &mut out) }, P0nStatus::Ok);
        assert_eq!(out, 16);
        assert_eq!(
            unsafe { p0n_dimension(2, &mut out) },
            P0nStatus::InvalidArgument
        );
        assert!(last_error().contains("at least 3"));
        assert_eq!(
            unsafe { p0n_dimension(6, std::ptr::null_mut()) },
            P0nStatus::NullArgument
        );
    }

    #[test]
    fn order_lifecycle() {
        let mut order: *mut P0nOrder = std::ptr::null_mut();
        assert_eq!(unsafe { p0n_order_standard(5, &mut order) }, P0nStatus::Ok);
        assert_eq!(unsafe { p0n_order_points(order) }, 5);
        let mut arr = [0u32; 5];
        let mut written = 0usize;
        assert_eq!(
            unsafe { p0n_order_arrangement(order, arr.as_mut_ptr(), 5, &mut written) },
            P0nStatus::Ok
        );
        assert_eq!(arr, [1, 2, 3, 4, 5]);
        unsafe { p0n_order_free(order) };

        let rotated = [3u32, 1, 4, 2];
        let mut order: *mut P0nOrder = std::ptr::null_mut();
        assert_eq!(
            unsafe { p0n_order_new(rotated.as_ptr(), 4, &mut order) },
            P0nStatus::Ok
        );
        let mut arr = [0u32; 4];
        assert_eq!(
            unsafe { p0n_order_arrangement(order, arr.as_mut_ptr(), 4, &mut written) },
            P0nStatus::Ok
        );
        assert_eq!(arr, [1, 4, 2, 3]);
        unsafe { p0n_order_free(order) };

        let bad = [1u32, 1, 2, 3];
        assert_eq!(
            unsafe { p0n_order_new(bad.as_ptr(), 4, &mut order) },
            P0nStatus::InvalidArgument
        );
        assert!(last_error().contains("duplicate"));
    }

    #[test]
    fn canonical_rep_roundtrip() {
        let side = [1u32, 2, 3, 5];
        let mut out = [0u32; 8];
        let mut written = 0usize;
        let status = unsafe {
            p0n_canonical_rep(6, side.as_ptr(), side.len(), out.as_mut_ptr(), 8, &mut written)
        };
        assert_eq!(status, P0nStatus::Ok);
        assert_eq!(&out[..written], &[4, 6]);

        // too-small buffer reports the needed size
        let status = unsafe {
            p0n_canonical_rep(6, side.as_ptr(), side.len(), out.as_mut_ptr(), 1, &mut written)
        };
        assert_eq!(status, P0nStatus::BufferTooSmall);
        assert_eq!(written, 2);
    }

    #[test]
    fn block_count_and_signature() {
        let mut order: *mut P0nOrder = std::ptr::null_mut();
        assert_eq!(unsafe { p0n_order_standard(10, &mut order) }, P0nStatus::Ok);
        let side = [1u32, 2, 4, 7, 10];
        let mut k = 0u32;
        assert_eq!(
            unsafe { p0n_block_count(order, side.as_ptr(), side.len(), &mut k) },
            P0nStatus::Ok
        );
        assert_eq!(k, 3);

        let mut buf = vec![0i8; 64];
        let mut written = 0usize;
        let status = unsafe {
            p0n_polygon_signature(
                order,
                side.as_ptr(),
                side.len(),
                buf.as_mut_ptr() as *mut c_char,
                buf.len(),
                &mut written,
            )
        };
        assert_eq!(status, P0nStatus::Ok);
        let bytes: Vec<u8> = buf[..written].iter().map(|&b| b as u8).collect();
        assert_eq!(String::from_utf8(bytes).unwrap(), "(10,1,2|3|4|5,6|7|8,9)");
        unsafe { p0n_order_free(order) };
    }

    #[test]
    fn basis_and_expansion() {
        let mut order: *mut P0nOrder = std::ptr::null_mut();
        assert_eq!(unsafe { p0n_order_standard(6, &mut order) }, P0nStatus::Ok);
        let mut basis: *mut P0nBasis = std::ptr::null_mut();
        assert_eq!(unsafe { p0n_basis_new(order, &mut basis) }, P0nStatus::Ok);
        assert_eq!(unsafe { p0n_basis_len(basis) }, 16);

        let mut labels = [0u32; 4];
        let mut written = 0usize;
        assert_eq!(
            unsafe { p0n_basis_element(basis, 0, labels.as_mut_ptr(), 4, &mut written) },
            P0nStatus::Ok
        );
        assert_eq!(&labels[..written], &[1, 3]);

        let side = [1u32, 2, 3];
        let mut coeffs = [0i64; 16];
        assert_eq!(
            unsafe { p0n_expand(basis, side.as_ptr(), side.len(), coeffs.as_mut_ptr(), 16) },
            P0nStatus::Ok
        );
        // golden expansion: nonzero pattern over the 16 basis elements
        let total: i64 = coeffs.iter().map(|c| c.abs()).sum();
        assert_eq!(total, 7);
        assert!(coeffs.iter().all(|c| (-1..=1).contains(c)));
        assert_eq!(coeffs[0], -1); // d{1,3}

        assert_eq!(
            unsafe { p0n_expand(basis, side.as_ptr(), side.len(), coeffs.as_mut_ptr(), 3) },
            P0nStatus::BufferTooSmall
        );

        unsafe { p0n_basis_free(basis) };
        unsafe { p0n_order_free(order) };
    }

    #[test]
    fn quotient_check() {
        let mut ok = false;
        assert_eq!(unsafe { p0n_quotient_dimension_ok(5, &mut ok) }, P0nStatus::Ok);
        assert!(ok);
        assert_eq!(
            unsafe { p0n_quotient_dimension_ok(9, &mut ok) },
            P0nStatus::InvalidArgument
        );
        assert!(last_error().contains("n <= 8"));
    }
}
