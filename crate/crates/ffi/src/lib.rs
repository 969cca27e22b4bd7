//! C ABI for the assemblage library.
//!
//! Index computations return an opaque [`AsmIndexResult`] handle queried
//! through accessor functions and released with [`asm_result_free`].
//! Strings returned by the library are released with [`asm_string_free`].
//! All functions report an [`AsmStatus`]; out-parameters are written only
//! on `AsmOk`.

use std::ffi::{c_char, CStr, CString};
use std::time::Duration;

use assemblage::chains::{min_chain_length, min_vector_chain, VectorChainConfig};
use assemblage::error::Error;
use assemblage::graph::{graph_assembly_index, parse_graph};
use assemblage::grid::{grid_assembly_index, parse_grid};
use assemblage::report::{verify_document, ResultDocument};
use assemblage::search::SearchBudget;
use assemblage::strings::{shannon_entropy, string_assembly_index};

/// Status codes mirroring the CLI exit codes where applicable.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsmStatus {
    AsmOk = 0,
    /// Invalid input for the requested operation.
    AsmDomainError = 2,
    /// A resource cap was reached before the result was settled.
    AsmBudgetExceeded = 3,
    /// Input text could not be parsed.
    AsmParseError = 4,
    /// A required pointer argument was null.
    AsmNullPointer = 5,
    /// Input text was not valid UTF-8.
    AsmInvalidUtf8 = 6,
}

/// Opaque result of an index computation.
pub struct AsmIndexResult {
    doc: ResultDocument,
}

fn status_of(err: &Error) -> AsmStatus {
    match err {
        Error::BudgetExceeded(_) | Error::TooLarge(_) => AsmStatus::AsmBudgetExceeded,
        Error::Parse(_) => AsmStatus::AsmParseError,
        _ => AsmStatus::AsmDomainError,
    }
}

fn budget(max_nodes: u64, max_millis: u64, threads: u32) -> SearchBudget {
    SearchBudget {
        max_nodes: if max_nodes == 0 { u64::MAX } else { max_nodes },
        max_time: (max_millis > 0).then(|| Duration::from_millis(max_millis)),
        threads: threads.max(1) as usize,
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, AsmStatus> {
    if ptr.is_null() {
        return Err(AsmStatus::AsmNullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| AsmStatus::AsmInvalidUtf8)
}

fn hand_out(doc: ResultDocument, out: *mut *mut AsmIndexResult) -> AsmStatus {
    let boxed = Box::new(AsmIndexResult { doc });
    unsafe {
        *out = Box::into_raw(boxed);
    }
    AsmStatus::AsmOk
}

/// Compute the assembly index of a text string.
///
/// `max_nodes = 0` means unlimited; `max_millis = 0` disables the time cap.
/// On success `*out` owns a result handle (the result may be an inexact
/// interval if the budget ran out; inspect [`asm_result_exact`]).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asm_string_index(
    text: *const c_char,
    max_nodes: u64,
    max_millis: u64,
    threads: u32,
    out: *mut *mut AsmIndexResult,
) -> AsmStatus {
    if out.is_null() {
        return AsmStatus::AsmNullPointer;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match string_assembly_index(text, &budget(max_nodes, max_millis, threads)) {
        Ok((space, result)) => hand_out(
            ResultDocument::from_result(&space, &text.to_string(), &result),
            out,
        ),
        Err(e) => status_of(&e),
    }
}

/// Compute the assembly index of a plain-text grid (`.` = empty cell).
///
/// # Safety
/// `grid` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asm_grid_index(
    grid: *const c_char,
    rotations: bool,
    max_nodes: u64,
    max_millis: u64,
    threads: u32,
    out: *mut *mut AsmIndexResult,
) -> AsmStatus {
    if out.is_null() {
        return AsmStatus::AsmNullPointer;
    }
    let text = match read_str(grid) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let target = match parse_grid(text) {
        Ok(t) => t,
        Err(e) => return status_of(&e),
    };
    match grid_assembly_index(&target, rotations, &budget(max_nodes, max_millis, threads)) {
        Ok((space, result)) => hand_out(ResultDocument::from_result(&space, &target, &result), out),
        Err(e) => status_of(&e),
    }
}

/// Compute the assembly index of a connected graph in edge-list form.
///
/// # Safety
/// `edge_list` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn asm_graph_index(
    edge_list: *const c_char,
    vertex_cap: u32,
    max_nodes: u64,
    max_millis: u64,
    threads: u32,
    out: *mut *mut AsmIndexResult,
) -> AsmStatus {
    if out.is_null() {
        return AsmStatus::AsmNullPointer;
    }
    let text = match read_str(edge_list) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let target = match parse_graph(text) {
        Ok(t) => t,
        Err(e) => return status_of(&e),
    };
    match graph_assembly_index(
        &target,
        &budget(max_nodes, max_millis, threads),
        vertex_cap as usize,
    ) {
        Ok((space, result)) => hand_out(ResultDocument::from_result(&space, &target, &result), out),
        Err(e) => status_of(&e),
    }
}

/// Exact minimal addition-chain length of `n`.
///
/// # Safety
/// `out_length` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn asm_chain_length(n: u64, out_length: *mut u64) -> AsmStatus {
    if out_length.is_null() {
        return AsmStatus::AsmNullPointer;
    }
    match min_chain_length(n) {
        Ok((len, _)) => {
            *out_length = len;
            AsmStatus::AsmOk
        }
        Err(e) => status_of(&e),
    }
}

/// Minimal vectorial addition-chain length of the `len`-dimensional vector
/// at `components`. Writes a certified interval; `*out_exact` tells whether
/// the two ends coincide.
///
/// # Safety
/// `components` must point to `len` readable values; the three out-pointers
/// must be valid.
#[no_mangle]
pub unsafe extern "C" fn asm_vector_chain_length(
    components: *const u64,
    len: usize,
    exact_sum_limit: u64,
    out_lower: *mut u64,
    out_upper: *mut u64,
    out_exact: *mut bool,
) -> AsmStatus {
    if components.is_null() || out_lower.is_null() || out_upper.is_null() || out_exact.is_null() {
        return AsmStatus::AsmNullPointer;
    }
    let v = std::slice::from_raw_parts(components, len);
    let cfg = VectorChainConfig {
        exact_sum_limit,
        ..VectorChainConfig::default()
    };
    match min_vector_chain(v, &cfg) {
        Ok(res) => {
            *out_lower = res.lower;
            *out_upper = res.upper;
            *out_exact = res.exact;
            AsmStatus::AsmOk
        }
        Err(e) => status_of(&e),
    }
}

/// Shannon entropy of the character distribution of `text`, in bits.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out_bits` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn asm_shannon_entropy(
    text: *const c_char,
    out_bits: *mut f64,
) -> AsmStatus {
    if out_bits.is_null() {
        return AsmStatus::AsmNullPointer;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match shannon_entropy(text) {
        Ok(h) => {
            *out_bits = h;
            AsmStatus::AsmOk
        }
        Err(e) => status_of(&e),
    }
}

/// Replay the witness inside a JSON result document. Returns `AsmOk` for a
/// valid document and `AsmDomainError` for a tampered one; when
/// `reason_out` is non-null and the document is invalid, it receives a
/// newly allocated string (free with [`asm_string_free`]).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `reason_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn asm_verify_json(
    json: *const c_char,
    reason_out: *mut *mut c_char,
) -> AsmStatus {
    let text = match read_str(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let doc = match ResultDocument::from_json(text) {
        Ok(d) => d,
        Err(e) => return status_of(&e),
    };
    match verify_document(&doc) {
        Ok(()) => AsmStatus::AsmOk,
        Err(reason) => {
            if !reason_out.is_null() {
                let c = CString::new(reason).unwrap_or_default();
                *reason_out = c.into_raw();
            }
            AsmStatus::AsmDomainError
        }
    }
}

/// Certified lower bound of the result.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn asm_result_lower(result: *const AsmIndexResult) -> u64 {
    (*result).doc.lower
}

/// Certified upper bound of the result.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn asm_result_upper(result: *const AsmIndexResult) -> u64 {
    (*result).doc.upper
}

/// Whether the bounds coincide (the index is exact).
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn asm_result_exact(result: *const AsmIndexResult) -> bool {
    (*result).doc.exact
}

/// Number of search nodes expanded.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn asm_result_nodes_expanded(result: *const AsmIndexResult) -> u64 {
    (*result).doc.nodes_expanded
}

/// Number of steps in the witness pathway.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn asm_result_witness_len(result: *const AsmIndexResult) -> usize {
    (*result).doc.witness.len()
}

/// The full result as a JSON document (free with [`asm_string_free`]).
/// Returns null on allocation failure.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn asm_result_to_json(result: *const AsmIndexResult) -> *mut c_char {
    let json = (*result).doc.to_json();
    CString::new(json).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Release a string allocated by this library.
///
/// # Safety
/// `s` must be null or a string previously returned by this library, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn asm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Release a result handle.
///
/// # Safety
/// `result` must be null or a live handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn asm_result_free(result: *mut AsmIndexResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}
