//! C interface to `cqsym`.
//!
//! Digraphs and computed functions are opaque handles owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns a [`CqsStatus`]; on failure [`cqs_last_error_message`] describes
//! the problem. Strings returned by the library are released with
//! [`cqs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cqsym::combinatorics::{is_proper_circular_arc, Digraph};
use cqsym::cqsf::{compute, Method};
use cqsym::verify::{run_suite, Suite, VerifyParams};
use cqsym::{Basis, Error, Function};

/// Status codes. Values 1 to 4 match the exit codes of the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CqsStatus {
    Ok = 0,
    InvalidInput = 1,
    NotSymmetric = 2,
    Budget = 3,
    Counterexample = 4,
    NullPointer = 5,
    Panic = 6,
}

/// A directed graph on vertices `1..=n`.
pub struct CqsDigraph(Digraph);

/// A homogeneous quasisymmetric or symmetric function with coefficients in
/// `Q[t]`.
pub struct CqsPoly(Function);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(e: &Error) -> CqsStatus {
    match e {
        Error::InvalidInput(_) | Error::Parse(_) => CqsStatus::InvalidInput,
        Error::NotSymmetric { .. } => CqsStatus::NotSymmetric,
        Error::Budget { .. } => CqsStatus::Budget,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (CqsStatus, String)>) -> CqsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CqsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CqsStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CqsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(what: &str) -> (CqsStatus, String) {
    (CqsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CqsStatus, String)> {
    if p.is_null() {
        return Err(null_err(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CqsStatus::InvalidInput, format!("{what} is not UTF-8")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Builds a digraph from `edge_count` arcs stored as consecutive
/// `(tail, head)` pairs in `edges`. Vertices are numbered from 1.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqs_digraph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut CqsDigraph,
) -> CqsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        if edges.is_null() && edge_count > 0 {
            return Err(null_err("edges"));
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let arcs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0] as usize, c[1] as usize)).collect();
        let d = Digraph::from_edges(n, &arcs).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CqsDigraph(d)));
        Ok(())
    })
}

/// Parses `{"n": 3, "edges": [[1,2],[2,3]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqs_digraph_from_json(json: *const c_char, out: *mut *mut CqsDigraph) -> CqsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        let text = read_str(json, "json")?;
        let d: Digraph = serde_json::from_str(text).map_err(|e| (CqsStatus::InvalidInput, e.to_string()))?;
        *out = Box::into_raw(Box::new(CqsDigraph(d)));
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cqs_digraph_free(d: *mut CqsDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// 1 for a proper circular arc digraph, 0 otherwise, -1 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cqs_digraph_is_proper_circular_arc(d: *const CqsDigraph) -> c_int {
    match d.as_ref() {
        None => -1,
        Some(d) => is_proper_circular_arc(&d.0).is_proper() as c_int,
    }
}

/// Computes `X` for `d` in `basis` (`"M"`, `"F"`, `"m"`, `"e"`, `"p"`) by
/// `method` (`"direct"`, `"f-basis"`, `"p-basis"`, `"series"`). A `budget`
/// of 0 selects the default factorial budget.
///
/// # Safety
/// `d` must be a live handle, `basis` and `method` NUL-terminated strings,
/// and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cqs_compute(
    d: *const CqsDigraph,
    basis: *const c_char,
    method: *const c_char,
    budget: usize,
    out: *mut *mut CqsPoly,
) -> CqsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_err("out"));
        }
        let d = d.as_ref().ok_or_else(|| null_err("digraph"))?;
        let basis: Basis = read_str(basis, "basis")?.parse().map_err(lib_err)?;
        let method: Method = read_str(method, "method")?.parse().map_err(lib_err)?;
        let budget = if budget == 0 { cqsym::cqsf::DEFAULT_FACTORIAL_BUDGET } else { budget };
        let x = compute(&d.0, basis, method, budget).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CqsPoly(x)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cqs_poly_free(p: *mut CqsPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The JSON form of `p`; null for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cqs_poly_to_json(p: *const CqsPoly) -> *mut c_char {
    match p.as_ref() {
        None => ptr::null_mut(),
        Some(p) => into_c_string(serde_json::to_string(&p.0.to_json()).expect("serializable")),
    }
}

/// The one-line rendering of `p`, such as `(3t+3t²)·e[3]`.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cqs_poly_render(p: *const CqsPoly) -> *mut c_char {
    match p.as_ref() {
        None => ptr::null_mut(),
        Some(p) => into_c_string(p.0.to_string()),
    }
}

/// Runs a verification suite with default parameters for `max_n` and
/// writes the JSON report to `report`. Returns `Counterexample` if the
/// suite found a mismatch; the report is written in that case too.
///
/// # Safety
/// `suite` must be a NUL-terminated string and `report` writable.
#[no_mangle]
pub unsafe extern "C" fn cqs_verify(
    suite: *const c_char,
    max_n: usize,
    budget: usize,
    report: *mut *mut c_char,
) -> CqsStatus {
    let mut failed = false;
    let status = guard(|| {
        if report.is_null() {
            return Err(null_err("report"));
        }
        let suite: Suite = read_str(suite, "suite")?.parse().map_err(lib_err)?;
        let mut params = VerifyParams::defaults(suite, max_n);
        if budget != 0 {
            params.budget = budget;
        }
        let r = run_suite(suite, &params).map_err(lib_err)?;
        failed = !r.passed();
        *report = into_c_string(serde_json::to_string(&r).expect("serializable"));
        Ok(())
    });
    if status == CqsStatus::Ok && failed {
        set_error("counterexample found");
        return CqsStatus::Counterexample;
    }
    status
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn cqs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on the calling thread; empty after
/// a success. Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn cqs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
