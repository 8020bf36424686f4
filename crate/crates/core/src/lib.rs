//! Power domination, zero forcing and failed power domination on simple graphs.
//!
//! * [`graph`]: graph representation, edge-list/JSON I/O, structural operators.
//! * [`propagation`]: monitoring and zero-forcing fixed points, set classification.
//! * [`solvers`]: exact `γ_p`, `γ̄_p`, `Z`, `F`, `γ`, `α`.
//! * [`families`]: named graph families and closed-form `γ̄_p` values.
//! * [`reduction`]: the independent-set gadget and its certificate maps.

pub mod cli;
pub mod families;
pub mod graph;
pub mod propagation;
pub mod reduction;
pub mod solvers;
pub mod subsets;
pub mod vertex_set;

pub use families::{extremal_gamma_bar, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError};
pub use propagation::{
    classify, monitored_fixpoint, zero_forcing_fixpoint, Classification, PropagationTrace,
    Propagator, TraceKind,
};
pub use reduction::{build_reduction, Extracted, ReductionError, ReductionOutput};
pub use solvers::{
    domination_number, failed_zero_forcing_number, gamma_bar_p, gamma_p, max_independent_set,
    solve, zero_forcing_number, Parameter, SolverError, SolverOptions, SolverResult,
};
pub use vertex_set::VertexSet;
