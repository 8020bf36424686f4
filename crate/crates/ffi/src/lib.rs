//! C ABI for the powerdom library.
//!
//! Graphs and reductions are opaque heap handles released with their `_free`
//! functions. Every fallible call returns a [`PdStatus`]; on failure a message is
//! available from [`pd_last_error_message`] on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and released with
//! [`pd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use powerdom::solvers::DEFAULT_BUDGET;
use powerdom::{
    build_reduction, classify, monitored_fixpoint, solve, zero_forcing_fixpoint, FamilyError,
    FamilySpec, Graph, Parameter, ReductionOutput, SolverError, SolverOptions, VertexSet,
};

/// Opaque graph handle.
pub struct PdGraph {
    graph: Graph,
}

/// Opaque reduction handle. Owns its gadget graph.
pub struct PdReduction {
    output: ReductionOutput,
    gadget: PdGraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    NoFormula = 5,
    OutOfRange = 6,
    BudgetExceeded = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdParameter {
    GammaP = 0,
    GammaBarP = 1,
    ZeroForcingNumber = 2,
    FailedZeroForcingNumber = 3,
    DominationNumber = 4,
    IndependenceNumber = 5,
}

impl From<PdParameter> for Parameter {
    fn from(p: PdParameter) -> Self {
        match p {
            PdParameter::GammaP => Parameter::GammaP,
            PdParameter::GammaBarP => Parameter::GammaBarP,
            PdParameter::ZeroForcingNumber => Parameter::ZeroForcingNumber,
            PdParameter::FailedZeroForcingNumber => Parameter::FailedZeroForcingNumber,
            PdParameter::DominationNumber => Parameter::DominationNumber,
            PdParameter::IndependenceNumber => Parameter::IndependenceNumber,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PdSolverOptions {
    pub budget: u64,
    pub workers: usize,
    pub canonical: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PdClassification {
    pub is_pds: bool,
    pub is_fpds: bool,
    pub is_spds: bool,
    pub properly_stalled: bool,
    pub maximally_stalled: bool,
    /// Size of the monitored fixed point.
    pub monitored_count: usize,
}

/// Outcome of a solver call. The witness is written to a caller buffer.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PdSolverResult {
    pub value: usize,
    pub witness_len: usize,
    pub calls: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    let c = CString::new(text).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(PdStatus);

fn fail(status: PdStatus, message: impl ToString) -> Fail {
    set_error(message);
    Fail(status)
}

/// Clears the error slot, runs `f`, and turns panics into [`PdStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PdStatus::Ok,
        Ok(Err(Fail(status))) => status,
        Err(_) => {
            set_error("internal panic");
            PdStatus::Panic
        }
    }
}

unsafe fn text_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(PdStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(PdStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| fail(PdStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| fail(PdStatus::NullPointer, format!("{what} is null")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(fail(PdStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn set_arg(n: usize, p: *const usize, len: usize) -> Result<VertexSet, Fail> {
    let idx = slice_arg(p, len, "set")?;
    VertexSet::try_from_indices(n, idx.iter().copied()).map_err(|v| {
        fail(
            PdStatus::OutOfRange,
            format!("vertex {v} is out of range for n = {n}"),
        )
    })
}

unsafe fn write_set(s: &VertexSet, buf: *mut usize, cap: usize) -> Result<(), Fail> {
    if s.len() > cap {
        return Err(fail(
            PdStatus::BufferTooSmall,
            format!("buffer holds {cap} entries, {} needed", s.len()),
        ));
    }
    if s.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(fail(PdStatus::NullPointer, "buffer is null"));
    }
    for (i, v) in s.iter().enumerate() {
        *buf.add(i) = v;
    }
    Ok(())
}

fn family_fail(e: FamilyError) -> Fail {
    let status = match e {
        FamilyError::Descriptor { .. } => PdStatus::Parse,
        FamilyError::Domain { .. } => PdStatus::Domain,
        FamilyError::NoFormula(_) => PdStatus::NoFormula,
    };
    fail(status, e)
}

unsafe fn emit_string(out: *mut *mut c_char, text: String) -> Result<(), Fail> {
    let slot = out_arg(out, "out")?;
    *slot = CString::new(text)
        .expect("JSON has no interior NUL")
        .into_raw();
    Ok(())
}

fn emit_graph(out: &mut *mut PdGraph, graph: Graph) {
    *out = Box::into_raw(Box::new(PdGraph { graph }));
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an edge list (`#` comments, optional leading vertex count).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut PdGraph,
) -> PdStatus {
    guard(|| {
        let text = text_arg(text, "text")?;
        let out = out_arg(out, "out")?;
        let g = Graph::from_edge_list(text).map_err(|e| fail(PdStatus::Parse, e))?;
        emit_graph(out, g);
        Ok(())
    })
}

/// Builds a graph from `edge_count` index pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PdGraph,
) -> PdStatus {
    guard(|| {
        let flat = slice_arg(edges, edge_count * 2, "edges")?;
        let out = out_arg(out, "out")?;
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        let g = Graph::from_edges(n, pairs).map_err(|e| fail(PdStatus::Domain, e))?;
        emit_graph(out, g);
        Ok(())
    })
}

/// Generates a family member from a descriptor such as `"ladder:9"`.
///
/// # Safety
/// `descriptor` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_from_family(
    descriptor: *const c_char,
    out: *mut *mut PdGraph,
) -> PdStatus {
    guard(|| {
        let text = text_arg(descriptor, "descriptor")?;
        let out = out_arg(out, "out")?;
        let spec: FamilySpec = text.parse().map_err(family_fail)?;
        let g = spec.generate().map_err(family_fail)?;
        emit_graph(out, g);
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_free(g: *mut PdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_vertex_count(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// Edge count, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_edge_count(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Index of the vertex labeled `label`.
///
/// # Safety
/// `g` must be a live handle, `label` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_find_label(
    g: *const PdGraph,
    label: *const c_char,
    out: *mut usize,
) -> PdStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        let label = text_arg(label, "label")?;
        let out = out_arg(out, "out")?;
        *out = g
            .graph
            .find_label(label)
            .ok_or_else(|| fail(PdStatus::Domain, format!("no vertex labeled {label:?}")))?;
        Ok(())
    })
}

/// Graph as JSON `{"n":..,"edges":[[u,v],..],"labels":[..]}`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_to_json(g: *const PdGraph, out: *mut *mut c_char) -> PdStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        emit_string(out, g.graph.to_json())
    })
}

/// Classifies the vertex set `set[0..len]`.
///
/// # Safety
/// `g` must be a live handle, `set` must point to `len` indices, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_classify(
    g: *const PdGraph,
    set: *const usize,
    len: usize,
    out: *mut PdClassification,
) -> PdStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        let s = set_arg(g.graph.n(), set, len)?;
        let out = out_arg(out, "out")?;
        let c = classify(&g.graph, &s);
        *out = PdClassification {
            is_pds: c.is_pds,
            is_fpds: c.is_fpds,
            is_spds: c.is_spds,
            properly_stalled: c.properly_stalled,
            maximally_stalled: c.maximally_stalled,
            monitored_count: c.monitored.len(),
        };
        Ok(())
    })
}

/// Propagation trace as JSON `{"kind":..,"steps":[..],"stabilized_at":i}`.
///
/// # Safety
/// `g` must be a live handle, `set` must point to `len` indices, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_trace_json(
    g: *const PdGraph,
    set: *const usize,
    len: usize,
    zero_forcing: bool,
    out: *mut *mut c_char,
) -> PdStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        let s = set_arg(g.graph.n(), set, len)?;
        let t = if zero_forcing {
            zero_forcing_fixpoint(&g.graph, &s)
        } else {
            monitored_fixpoint(&g.graph, &s)
        };
        emit_string(out, t.to_json())
    })
}

#[no_mangle]
pub extern "C" fn pd_solver_options_default() -> PdSolverOptions {
    PdSolverOptions {
        budget: DEFAULT_BUDGET,
        workers: 1,
        canonical: false,
    }
}

/// Computes `parameter` exactly. The witness is written to `witness[0..cap]`;
/// on [`PdStatus::BufferTooSmall`] `out->witness_len` still holds the size needed.
/// On [`PdStatus::BudgetExceeded`] `out->calls` holds the budget.
///
/// # Safety
/// `g` must be a live handle, `options` null (defaults) or valid, `witness`
/// writable for `cap` entries, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_solve(
    g: *const PdGraph,
    parameter: PdParameter,
    options: *const PdSolverOptions,
    witness: *mut usize,
    cap: usize,
    out: *mut PdSolverResult,
) -> PdStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        let out = out_arg(out, "out")?;
        let o = options
            .as_ref()
            .copied()
            .unwrap_or_else(|| pd_solver_options_default());
        let opts = SolverOptions::default()
            .with_budget(o.budget)
            .with_workers(o.workers)
            .canonical(o.canonical);
        match solve(parameter.into(), &g.graph, &opts) {
            Ok(r) => {
                *out = PdSolverResult {
                    value: r.value,
                    witness_len: r.witness.len(),
                    calls: r.propagation_calls,
                };
                write_set(&r.witness, witness, cap)
            }
            Err(e @ SolverError::BudgetExceeded { calls, .. }) => {
                *out = PdSolverResult {
                    value: 0,
                    witness_len: 0,
                    calls,
                };
                Err(fail(PdStatus::BudgetExceeded, e))
            }
            Err(e @ SolverError::EmptyGraph) => Err(fail(PdStatus::Domain, e)),
        }
    })
}

/// Closed-form failed power domination number of a family member.
///
/// # Safety
/// `descriptor` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_family_oracle(descriptor: *const c_char, out: *mut usize) -> PdStatus {
    guard(|| {
        let text = text_arg(descriptor, "descriptor")?;
        let out = out_arg(out, "out")?;
        let spec: FamilySpec = text.parse().map_err(family_fail)?;
        *out = spec.oracle_gamma_bar().map_err(family_fail)?;
        Ok(())
    })
}

/// Returns the extremal value (`n-1`, `n-2` or `n-3`) through `out` and true,
/// or false when no extremal condition holds.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_extremal_gamma_bar(g: *const PdGraph, out: *mut usize) -> bool {
    let (Some(g), Some(out)) = (g.as_ref(), out.as_mut()) else {
        return false;
    };
    match powerdom::extremal_gamma_bar(&g.graph) {
        Some(v) => {
            *out = v;
            true
        }
        None => false,
    }
}

/// Builds the independent-set gadget. `path_len == 0` selects the faithful
/// length `n²`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_build(
    g: *const PdGraph,
    path_len: usize,
    out: *mut *mut PdReduction,
) -> PdStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        let out = out_arg(out, "out")?;
        let len = (path_len != 0).then_some(path_len);
        let output = build_reduction(&g.graph, len).map_err(|e| fail(PdStatus::Domain, e))?;
        let gadget = PdGraph {
            graph: output.gprime.clone(),
        };
        *out = Box::into_raw(Box::new(PdReduction { output, gadget }));
        Ok(())
    })
}

/// # Safety
/// `r` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_free(r: *mut PdReduction) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Borrowed gadget graph, valid until `r` is freed. Do not pass it to
/// [`pd_graph_free`].
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_graph(r: *const PdReduction) -> *const PdGraph {
    r.as_ref()
        .map_or(ptr::null(), |r| &r.gadget as *const PdGraph)
}

/// `path_len·|E| + k`, or 0 for null.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_m_of(r: *const PdReduction, k: usize) -> usize {
    r.as_ref().map_or(0, |r| r.output.m_of(k))
}

/// Index of the hub vertex, or 0 for null.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_hub(r: *const PdReduction) -> usize {
    r.as_ref().map_or(0, |r| r.output.hub())
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_is_faithful(r: *const PdReduction) -> bool {
    r.as_ref().is_some_and(|r| r.output.faithful)
}

/// Lifts an independent set of the source graph into the gadget. The lifted set
/// goes to `buf[0..cap]` and its size to `out_len` (set even when the buffer is
/// too small).
///
/// # Safety
/// `r` must be a live handle, `set` must point to `len` indices, `buf` writable
/// for `cap` entries, `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_lift(
    r: *const PdReduction,
    set: *const usize,
    len: usize,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> PdStatus {
    guard(|| {
        let r = ref_arg(r, "reduction")?;
        let u = set_arg(r.output.source_n(), set, len)?;
        let out_len = out_arg(out_len, "out_len")?;
        let lifted = r
            .output
            .lift_independent_set(&u)
            .map_err(|e| fail(PdStatus::Domain, e))?;
        *out_len = lifted.len();
        write_set(&lifted, buf, cap)
    })
}

/// Role maps of the gadget as JSON.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_reduction_sidecar_json(
    r: *const PdReduction,
    out: *mut *mut c_char,
) -> PdStatus {
    guard(|| {
        let r = ref_arg(r, "reduction")?;
        emit_string(out, r.output.sidecar(None).to_json())
    })
}
