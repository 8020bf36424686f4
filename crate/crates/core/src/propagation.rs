//! Power-domination monitoring and zero forcing as fixed-point processes.
//!
//! Both processes share one forcing rule: a filled vertex with exactly one
//! unfilled neighbor fills that neighbor. Power domination starts from `N[S]`,
//! zero forcing from `S`. Steps are simultaneous: every vertex forcible from step
//! `i` enters at step `i + 1`.

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceKind {
    PowerDomination,
    ZeroForcing,
}

/// The chain `steps[0] ⊆ steps[1] ⊆ …` up to (and excluding) the first repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub kind: TraceKind,
    pub steps: Vec<VertexSet>,
    pub stabilized_at: usize,
}

impl PropagationTrace {
    pub fn initial(&self) -> &VertexSet {
        &self.steps[0]
    }

    pub fn fixed_point(&self) -> &VertexSet {
        &self.steps[self.stabilized_at]
    }

    /// The step-`i` set; steps past stabilization equal the fixed point.
    pub fn step(&self, i: usize) -> &VertexSet {
        &self.steps[i.min(self.stabilized_at)]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// Writes into `out` every vertex forced from `filled` in one simultaneous step.
/// Returns whether anything new was forced.
fn forced_step(g: &Graph, filled: &VertexSet, out: &mut VertexSet) -> bool {
    out.clear();
    let mut any = false;
    for v in filled {
        if let Some(w) = g.neighbors(v).sole_member_outside(filled) {
            any |= out.insert(w);
        }
    }
    any
}

fn run_trace(g: &Graph, start: VertexSet, kind: TraceKind) -> PropagationTrace {
    let mut steps = vec![start];
    let mut forced = VertexSet::empty(g.n());
    loop {
        let cur = steps.last().expect("trace has a first step");
        if !forced_step(g, cur, &mut forced) {
            break;
        }
        let next = cur.union(&forced);
        steps.push(next);
    }
    let stabilized_at = steps.len() - 1;
    PropagationTrace {
        kind,
        steps,
        stabilized_at,
    }
}

/// `P^0(S) = N[S]`, then forcing to the fixed point.
pub fn monitored_fixpoint(g: &Graph, s: &VertexSet) -> PropagationTrace {
    run_trace(g, g.closed_neighborhood(s), TraceKind::PowerDomination)
}

/// `Q^0(S) = S`, then forcing to the fixed point.
pub fn zero_forcing_fixpoint(g: &Graph, s: &VertexSet) -> PropagationTrace {
    run_trace(g, s.clone(), TraceKind::ZeroForcing)
}

/// Verdicts for one `(graph, set)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_pds: bool,
    pub is_fpds: bool,
    pub is_spds: bool,
    pub properly_stalled: bool,
    pub maximally_stalled: bool,
    /// `P^∞(S)`.
    pub monitored: VertexSet,
}

pub fn classify(g: &Graph, s: &VertexSet) -> Classification {
    let trace = monitored_fixpoint(g, s);
    let is_pds = trace.fixed_point().is_full();
    let is_spds = trace.stabilized_at == 0;
    let properly_stalled = is_spds && !trace.initial().is_full();
    let maximally_stalled = is_spds && {
        let mut scratch = Propagator::new(g);
        s.complement().iter().all(|u| {
            let mut bigger = s.clone();
            bigger.insert(u);
            scratch.is_power_dominating(&bigger)
        })
    };
    Classification {
        is_pds,
        is_fpds: !is_pds,
        is_spds,
        properly_stalled,
        maximally_stalled,
        monitored: trace.fixed_point().clone(),
    }
}

/// Allocation-free membership tests for the solvers' inner loops.
///
/// Holds scratch buffers sized for one graph; not shareable across threads, so
/// each worker builds its own.
pub struct Propagator<'g> {
    g: &'g Graph,
    filled: VertexSet,
    forced: VertexSet,
}

impl<'g> Propagator<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self {
            g,
            filled: VertexSet::empty(g.n()),
            forced: VertexSet::empty(g.n()),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    fn load_closed_neighborhood(&mut self, members: impl IntoIterator<Item = usize>) {
        self.filled.clear();
        for v in members {
            self.filled.insert(v);
            self.filled.union_with(self.g.neighbors(v));
        }
    }

    fn load_members(&mut self, members: impl IntoIterator<Item = usize>) {
        self.filled.clear();
        for v in members {
            self.filled.insert(v);
        }
    }

    /// Runs forcing from the loaded set; true iff it fills every vertex.
    fn saturates(&mut self) -> bool {
        loop {
            if self.filled.is_full() {
                return true;
            }
            if !forced_step(self.g, &self.filled, &mut self.forced) {
                return false;
            }
            self.filled.union_with(&self.forced);
        }
    }

    pub fn is_power_dominating(&mut self, s: &VertexSet) -> bool {
        self.load_closed_neighborhood(s.iter());
        self.saturates()
    }

    pub fn is_power_dominating_indices(&mut self, s: &[usize]) -> bool {
        self.load_closed_neighborhood(s.iter().copied());
        self.saturates()
    }

    pub fn is_zero_forcing(&mut self, s: &VertexSet) -> bool {
        self.load_members(s.iter());
        self.saturates()
    }

    pub fn is_zero_forcing_indices(&mut self, s: &[usize]) -> bool {
        self.load_members(s.iter().copied());
        self.saturates()
    }

    pub fn is_dominating_indices(&mut self, s: &[usize]) -> bool {
        self.load_closed_neighborhood(s.iter().copied());
        self.filled.is_full()
    }
}
