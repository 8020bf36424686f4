//! Simple undirected graphs over dense `0..n` vertex indices.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subsets::Colex;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{}self-loop on vertex {vertex}", at(*line))]
    Loop { line: Option<usize>, vertex: usize },
    #[error("{}vertex {index} out of range for {n} vertices", at(*line))]
    Index {
        line: Option<usize>,
        index: usize,
        n: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

fn at(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

/// An immutable simple graph. Adjacency rows are [`VertexSet`]s, so loops and
/// multi-edges cannot be represented.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Wire form: `{"n": int, "edges": [[u,v],...], "labels": [...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            add_edge(&mut adj, n, u, v, None)?;
        }
        Ok(Self {
            n,
            adj,
            labels: None,
        })
    }

    /// Parses the line-oriented edge-list format.
    ///
    /// `#` starts a comment, blank lines are ignored, an optional first data line
    /// holding a single integer fixes the vertex count, and every other data line
    /// is `u v`. Without a declared count, `n` is the largest index plus one.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut declared: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut seen_data = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let parse = |t: &str| {
                t.parse::<usize>().map_err(|_| GraphError::Parse {
                    line,
                    message: format!("expected a vertex index, found {t:?}"),
                })
            };
            match tokens.as_slice() {
                [count] if !seen_data => declared = Some(parse(count)?),
                [u, v] => {
                    let (u, v) = (parse(u)?, parse(v)?);
                    if u == v {
                        return Err(GraphError::Loop {
                            line: Some(line),
                            vertex: u,
                        });
                    }
                    edges.push((line, u, v));
                }
                _ => {
                    return Err(GraphError::Parse {
                        line,
                        message: format!("expected \"u v\", found {body:?}"),
                    })
                }
            }
            seen_data = true;
        }
        let n = declared.unwrap_or_else(|| {
            edges
                .iter()
                .map(|&(_, u, v)| u.max(v) + 1)
                .max()
                .unwrap_or(0)
        });
        let mut adj = vec![VertexSet::empty(n); n];
        for (line, u, v) in edges {
            add_edge(&mut adj, n, u, v, Some(line))?;
        }
        Ok(Self {
            n,
            adj,
            labels: None,
        })
    }

    /// Inverse of [`Graph::from_edge_list`]: a count line followed by one `u v`
    /// line per edge, `u < v`, in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        let g = Self::from_edges(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))?;
        match raw.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }

    /// Returns a copy carrying display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or its index rendered as text.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// `S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N(S)`: union of the open neighborhoods of members of `S`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Connected components of the subgraph induced by `within`, each as a set.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut comps = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::empty(self.n);
            comp.insert(start);
            unseen.remove(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in &self.adj[v] {
                    if unseen.remove(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Complement graph. Labels are kept.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union; `other`'s indices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let shift = self.n;
        let edges = self.edges().into_iter().chain(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        let g = Graph::from_edges(n, edges).expect("shifted edges stay in range");
        g.with_merged_labels(self, other)
    }

    /// `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let cross = (0..self.n).flat_map(|u| (0..other.n).map(move |v| (u, v + shift)));
        let union = self.disjoint_union(other);
        let labels = union.labels.clone();
        let edges = union.edges().into_iter().chain(cross);
        let g = Graph::from_edges(self.n + other.n, edges).expect("join edges in range");
        Graph { labels, ..g }
    }

    fn with_merged_labels(self, a: &Graph, b: &Graph) -> Graph {
        if a.labels.is_none() && b.labels.is_none() {
            return self;
        }
        let labels = (0..a.n)
            .map(|v| a.label(v))
            .chain((0..b.n).map(|v| b.label(v)))
            .collect();
        Graph {
            labels: Some(labels),
            ..self
        }
    }

    /// `self □ other`. Vertex `(u, v)` has index `u * other.n() + v` and label
    /// `u{u}v{v}`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let n = self.n * m;
        let mut edges = Vec::new();
        for u in 0..self.n {
            for (a, b) in other.edges() {
                edges.push((u * m + a, u * m + b));
            }
        }
        for (a, b) in self.edges() {
            for v in 0..m {
                edges.push((a * m + v, b * m + v));
            }
        }
        let labels = (0..self.n)
            .flat_map(|u| (0..m).map(move |v| format!("u{u}v{v}")))
            .collect();
        Graph::from_edges(n, edges)
            .expect("product edges in range")
            .with_labels(labels)
            .expect("one label per product vertex")
    }

    /// `G[S]` on `|S|` vertices, plus the map from new index to original index.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(s).iter() {
                if back[w] > i {
                    edges.push((i, back[w]));
                }
            }
        }
        let mut g = Graph::from_edges(map.len(), edges).expect("induced edges in range");
        if let Some(l) = &self.labels {
            g.labels = Some(map.iter().map(|&v| l[v].clone()).collect());
        }
        (g, map)
    }

    /// Articulation points (per component for disconnected input).
    pub fn cut_vertices(&self) -> VertexSet {
        const UNSEEN: usize = usize::MAX;
        let lists: Vec<Vec<usize>> = self.adj.iter().map(VertexSet::to_vec).collect();
        let mut disc = vec![UNSEEN; self.n];
        let mut low = vec![0; self.n];
        let mut out = VertexSet::empty(self.n);
        let mut clock = 0;
        for root in 0..self.n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor position)
            let mut stack = vec![(root, UNSEEN, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (v, parent, pos) = *top;
                if pos < lists[v].len() {
                    top.2 += 1;
                    let w = lists[v][pos];
                    if disc[w] == UNSEEN {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            out.insert(p);
                        }
                    }
                }
            }
            if root_children >= 2 {
                out.insert(root);
            }
        }
        out
    }

    /// Vertex connectivity by exhaustive search over removal sets of increasing
    /// size. Complete graphs get `n - 1` by convention.
    pub fn vertex_connectivity(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.is_complete() {
            return Ok(self.n.saturating_sub(1));
        }
        let full = self.vertex_set();
        for k in 1..self.n {
            let mut it = Colex::new(self.n, k);
            while let Some(removed) = it.next_subset() {
                let mut rest = full.clone();
                for &v in removed {
                    rest.remove(v);
                }
                if self.components_within(&rest).len() > 1 {
                    return Ok(k);
                }
            }
        }
        unreachable!("a non-complete graph has two non-adjacent vertices to separate")
    }
}

fn add_edge(
    adj: &mut [VertexSet],
    n: usize,
    u: usize,
    v: usize,
    line: Option<usize>,
) -> Result<(), GraphError> {
    for index in [u, v] {
        if index >= n {
            return Err(GraphError::Index { line, index, n });
        }
    }
    if u == v {
        return Err(GraphError::Loop { line, vertex: u });
    }
    adj[u].insert(v);
    adj[v].insert(u);
    Ok(())
}
