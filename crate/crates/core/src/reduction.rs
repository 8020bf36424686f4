//! The INDEPENDENT SET → stalled power dominating set gadget.
//!
//! From a connected source graph `G` on `n >= 3` vertices, the gadget `G'`:
//!
//! 1. keeps every source vertex;
//! 2. subdivides each edge `e = {u, v}` with a vertex `v_{e_0}`;
//! 3. hangs a path `v_{e_0} – v_{e_1} – … – v_{e_L}` off each subdivision vertex,
//!    where `L = n²` for a faithful instance;
//! 4. adds a hub `x` adjacent to every subdivision vertex.
//!
//! An independent set `U` of `G` lifts to the stalled set `U ∪ {all path vertices}`
//! of size `L·|E| + |U|`.
//!
//! Index layout of `G'`: source vertices `0..n`, subdivision vertices in source
//! edge order, path vertices grouped by edge, hub last.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("source graph must be connected")]
    DisconnectedInput,
    #[error("source graph needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("path length must be at least 1")]
    ZeroPathLength,
    #[error("vertices {0} and {1} are adjacent in the source graph")]
    NotIndependent(usize, usize),
    #[error("set universe {got} does not match the expected {expected}")]
    UniverseMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub gprime: Graph,
    pub source: Graph,
    /// Source edges in the order that fixes the index layout.
    pub source_edges: Vec<(usize, usize)>,
    pub path_len: usize,
    /// True iff `path_len == n²`.
    pub faithful: bool,
}

/// Extracted preimage of a gadget set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extracted {
    pub set: VertexSet,
    pub independent: bool,
}

pub fn build_reduction(
    g: &Graph,
    path_len: Option<usize>,
) -> Result<ReductionOutput, ReductionError> {
    let n = g.n();
    if n < 3 {
        return Err(ReductionError::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(ReductionError::DisconnectedInput);
    }
    let faithful_len = n * n;
    let len = path_len.unwrap_or(faithful_len);
    if len == 0 {
        return Err(ReductionError::ZeroPathLength);
    }
    let source_edges = g.edges();
    let m = source_edges.len();
    let total = (len + 1) * m + n + 1;
    let hub = total - 1;

    let mut edges = Vec::with_capacity(m * (len + 3));
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    labels.resize(total, String::new());
    for (e, &(u, v)) in source_edges.iter().enumerate() {
        let sub = n + e;
        edges.extend([(u, sub), (sub, v), (hub, sub)]);
        labels[sub] = format!("e{e}_0");
        let mut prev = sub;
        for i in 1..=len {
            let p = n + m + e * len + (i - 1);
            edges.push((prev, p));
            labels[p] = format!("e{e}_{i}");
            prev = p;
        }
    }
    labels[hub] = "x".to_string();
    let gprime = Graph::from_edges(total, edges)
        .expect("gadget edges in range")
        .with_labels(labels)
        .expect("one label per gadget vertex");
    Ok(ReductionOutput {
        gprime,
        source: g.clone(),
        source_edges,
        path_len: len,
        faithful: len == faithful_len,
    })
}

impl ReductionOutput {
    pub fn source_n(&self) -> usize {
        self.source.n()
    }

    pub fn source_m(&self) -> usize {
        self.source_edges.len()
    }

    pub fn original_vertex(&self, v: usize) -> usize {
        assert!(v < self.source_n());
        v
    }

    /// Index of `v_{e_0}` for source edge number `e`.
    pub fn subdiv_vertex(&self, e: usize) -> usize {
        assert!(e < self.source_m());
        self.source_n() + e
    }

    /// Index of `v_{e_i}`, `1 <= i <= path_len`.
    pub fn path_vertex(&self, e: usize, i: usize) -> usize {
        assert!(e < self.source_m() && (1..=self.path_len).contains(&i));
        self.source_n() + self.source_m() + e * self.path_len + (i - 1)
    }

    pub fn hub(&self) -> usize {
        self.gprime.n() - 1
    }

    /// Target size `path_len·|E| + k` for an independent set of size `k`.
    pub fn m_of(&self, k: usize) -> usize {
        self.path_len * self.source_m() + k
    }

    pub fn subdivision_vertices(&self) -> VertexSet {
        let n = self.source_n();
        VertexSet::from_indices(self.gprime.n(), n..n + self.source_m())
    }

    pub fn path_vertices(&self) -> VertexSet {
        let start = self.source_n() + self.source_m();
        VertexSet::from_indices(self.gprime.n(), start..self.hub())
    }

    fn check_universe(&self, s: &VertexSet, expected: usize) -> Result<(), ReductionError> {
        if s.universe() != expected {
            return Err(ReductionError::UniverseMismatch {
                expected,
                got: s.universe(),
            });
        }
        Ok(())
    }

    /// `U' = U ∪ {every path vertex}`, after checking that `U` is independent in
    /// the source.
    pub fn lift_independent_set(&self, u: &VertexSet) -> Result<VertexSet, ReductionError> {
        self.check_universe(u, self.source_n())?;
        if let Some((a, b)) = first_internal_edge(&self.source, u) {
            return Err(ReductionError::NotIndependent(a, b));
        }
        let mut lifted = self.path_vertices();
        for v in u {
            lifted.insert(self.original_vertex(v));
        }
        Ok(lifted)
    }

    /// `S ∩ V` mapped back to source indices, with a recomputed independence flag.
    pub fn extract_independent_set(&self, s: &VertexSet) -> Result<Extracted, ReductionError> {
        self.check_universe(s, self.gprime.n())?;
        let set =
            VertexSet::from_indices(self.source_n(), s.iter().filter(|&v| v < self.source_n()));
        let independent = first_internal_edge(&self.source, &set).is_none();
        Ok(Extracted { set, independent })
    }

    /// Role maps and sizes for the JSON sidecar.
    pub fn sidecar(&self, k: Option<usize>) -> Sidecar {
        Sidecar {
            source_n: self.source_n(),
            source_m: self.source_m(),
            path_len: self.path_len,
            faithful: self.faithful,
            vertex_count: self.gprime.n(),
            original: (0..self.source_n()).collect(),
            subdivision: (0..self.source_m())
                .map(|e| SubdivisionRole {
                    edge: [self.source_edges[e].0, self.source_edges[e].1],
                    vertex: self.subdiv_vertex(e),
                    path: (1..=self.path_len)
                        .map(|i| self.path_vertex(e, i))
                        .collect(),
                })
                .collect(),
            hub: self.hub(),
            m_base: self.m_of(0),
            m_of_k: k.map(|k| MOfK { k, m: self.m_of(k) }),
        }
    }
}

fn first_internal_edge(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    s.iter()
        .find_map(|u| g.neighbors(u).intersection(s).first().map(|v| (u, v)))
}

#[derive(Debug, Serialize)]
pub struct Sidecar {
    pub source_n: usize,
    pub source_m: usize,
    pub path_len: usize,
    pub faithful: bool,
    pub vertex_count: usize,
    pub original: Vec<usize>,
    pub subdivision: Vec<SubdivisionRole>,
    pub hub: usize,
    /// `path_len·|E|`, the target size for an empty independent set.
    pub m_base: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_of_k: Option<MOfK>,
}

impl Sidecar {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sidecar serializes")
    }
}

#[derive(Debug, Serialize)]
pub struct SubdivisionRole {
    pub edge: [usize; 2],
    pub vertex: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct MOfK {
    pub k: usize,
    pub m: usize,
}
