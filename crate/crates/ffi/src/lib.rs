//! C ABI over `sombor_core`: opaque graph handles, a spectrum call that fills
//! a caller buffer, and JSON verification reports.
//!
//! Every function returns a [`SomborStatus`]; on failure the message is
//! available from [`sombor_last_error`] until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sombor_core::graph::{build_graph, GraphKind, Relation, SimpleGraph};
use sombor_core::group::{make_group, Family, GroupSpec};
use sombor_core::spectral::{eigen_sym, sombor_matrix, DEFAULT_EIGEN_TOL};
use sombor_core::verify::{run_task, to_rounded_string, VerificationTask};
use sombor_core::Error;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SomborStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// unknown family/kind/relation code or n out of range
    InvalidArgument = 3,
    /// no closed-form entry covers the cell
    NotCovered = 4,
    NoConvergence = 5,
    /// `written` holds the required length
    BufferTooSmall = 6,
    Internal = 7,
}

/// Opaque graph handle; release with [`sombor_graph_free`].
pub struct SomborGraph {
    group: GroupSpec,
    graph: SimpleGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: SomborStatus, msg: impl AsRef<str>) -> SomborStatus {
    set_error(msg.as_ref());
    status
}

fn from_core(e: Error) -> SomborStatus {
    let status = match e {
        Error::ParameterRange(_) | Error::Parse { .. } => SomborStatus::InvalidArgument,
        Error::CatalogMiss { .. } => SomborStatus::NotCovered,
        Error::NoConvergence { .. } => SomborStatus::NoConvergence,
        _ => SomborStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), SomborStatus>) -> SomborStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SomborStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => fail(SomborStatus::Internal, "panic inside sombor"),
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, SomborStatus> {
    if p.is_null() {
        return Err(fail(SomborStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SomborStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn cell(
    family: *const c_char,
    kind: *const c_char,
    relation: *const c_char,
) -> Result<(Family, GraphKind, Relation), SomborStatus> {
    let family: Family = text(family, "family")?.parse().map_err(from_core)?;
    let kind: GraphKind = text(kind, "kind")?.parse().map_err(from_core)?;
    let relation: Relation = text(relation, "relation")?.parse().map_err(from_core)?;
    Ok((family, kind, relation))
}

/// Builds the `relation` super `kind` graph of the group `family` with parameter `n`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_build(
    family: *const c_char,
    n: u32,
    kind: *const c_char,
    relation: *const c_char,
    out: *mut *mut SomborGraph,
) -> SomborStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(SomborStatus::NullPointer, "out is null"));
        }
        *out = ptr::null_mut();
        let (family, kind, relation) = cell(family, kind, relation)?;
        let spec = GroupSpec::new(family, n).map_err(from_core)?;
        let g = make_group(spec).map_err(from_core)?;
        let graph = build_graph(&g, kind, relation).map_err(from_core)?;
        *out = Box::into_raw(Box::new(SomborGraph { group: spec, graph }));
        Ok(())
    })
}

/// # Safety
/// `g` must come from [`sombor_graph_build`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_free(g: *mut SomborGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_order(g: *const SomborGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_size(g: *const SomborGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Writes the group name (e.g. "SD24") into `buf` including the NUL.
///
/// # Safety
/// `buf` must hold `capacity` bytes; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_group(
    g: *const SomborGraph,
    buf: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> SomborStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| fail(SomborStatus::NullPointer, "graph is null"))?;
        if written.is_null() {
            return Err(fail(SomborStatus::NullPointer, "written is null"));
        }
        let name = CString::new(g.group.to_string()).expect("no interior NUL");
        let bytes = name.as_bytes_with_nul();
        *written = bytes.len();
        if buf.is_null() || capacity < bytes.len() {
            return Err(fail(SomborStatus::BufferTooSmall, format!("need {} bytes", bytes.len())));
        }
        ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len());
        Ok(())
    })
}

/// Sombor eigenvalues in ascending order. Call with `capacity` 0 to learn
/// the required length from `written`.
///
/// # Safety
/// `out` must hold `capacity` doubles; `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sombor_graph_spectrum(
    g: *const SomborGraph,
    out: *mut f64,
    capacity: usize,
    written: *mut usize,
) -> SomborStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| fail(SomborStatus::NullPointer, "graph is null"))?;
        if written.is_null() {
            return Err(fail(SomborStatus::NullPointer, "written is null"));
        }
        let order = g.graph.vertex_count();
        *written = order;
        if out.is_null() || capacity < order {
            return Err(fail(SomborStatus::BufferTooSmall, format!("need {order} values")));
        }
        let eigs = eigen_sym(&sombor_matrix(&g.graph), DEFAULT_EIGEN_TOL).map_err(from_core)?;
        ptr::copy_nonoverlapping(eigs.as_ptr(), out, order);
        Ok(())
    })
}

/// Verifies the cell against its primary closed-form entry (or `source`, if
/// non-null) with default tolerances. The JSON report is returned in `out`
/// and must be released with [`sombor_string_free`]. An uncovered cell
/// returns `NotCovered`.
///
/// # Safety
/// String arguments must be NUL-terminated (or null for `source`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sombor_verify_json(
    family: *const c_char,
    n: u32,
    kind: *const c_char,
    relation: *const c_char,
    source: *const c_char,
    out: *mut *mut c_char,
) -> SomborStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(SomborStatus::NullPointer, "out is null"));
        }
        *out = ptr::null_mut();
        let (family, kind, relation) = cell(family, kind, relation)?;
        let mut task = VerificationTask::new(family, kind, relation, n);
        if !source.is_null() {
            task.source = Some(text(source, "source")?.to_string());
        }
        let report = run_task(&task).map_err(from_core)?;
        if let Some(msg) = report.message.as_deref() {
            return Err(fail(SomborStatus::NotCovered, msg));
        }
        let json = to_rounded_string(&report).map_err(from_core)?;
        *out = CString::new(json).map_err(|_| fail(SomborStatus::Internal, "NUL in report"))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sombor_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread ("" after a success). The
/// pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn sombor_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
