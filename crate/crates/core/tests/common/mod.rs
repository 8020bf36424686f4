#![allow(dead_code)]

use powerdom::{
    classify, monitored_fixpoint, zero_forcing_fixpoint, FamilySpec, Graph, Propagator, VertexSet,
};
use rand::seq::IndexedRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|_| rng.random_bool(p)))
}

/// Every closed-form zero family member with at most `max_n` vertices, plus
/// `empty:2`, as join factor candidates.
pub fn zero_factor_pool(max_n: usize) -> Vec<FamilySpec> {
    let mut pool = vec![FamilySpec::Empty { n: 2 }];
    for n in 1..=max_n {
        pool.push(FamilySpec::Path { n });
        pool.push(FamilySpec::Complete { n });
    }
    for n in 3..=max_n {
        pool.push(FamilySpec::Cycle { n });
    }
    for n in 4..=max_n {
        pool.push(FamilySpec::Wheel { n });
        pool.push(FamilySpec::ComplementPath { n });
    }
    for n in 5..=max_n {
        pool.push(FamilySpec::ComplementCycle { n });
    }
    pool
}

/// A join of 2 or 3 zero-pool factors with total order at most `max_total`.
pub fn random_zero_join(rng: &mut impl Rng, max_total: usize) -> FamilySpec {
    let pool = zero_factor_pool(max_total - 1);
    loop {
        let parts = rng.random_range(2..=3);
        let factors: Vec<FamilySpec> = (0..parts)
            .map(|_| pool.choose(rng).unwrap().clone())
            .collect();
        let total: usize = factors.iter().map(|f| f.generate().unwrap().n()).sum();
        if total <= max_total {
            return FamilySpec::Join(factors);
        }
    }
}

/// Every valid fan-chord and fan-chord-plus member with `n <= max_n`.
pub fn fan_chord_members(max_n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for i in 3..n {
            for k in 1..n {
                if i + k < n {
                    out.push(FamilySpec::FanChord { n, i, k });
                    if i >= 5 && n >= 6 {
                        out.push(FamilySpec::FanChordPlus { n, i, k });
                    }
                }
            }
        }
    }
    out
}

/// For a PDS `s`: `P^0(S) \ S` zero forces `G[V \ S]`.
pub fn domset_observation_holds(g: &Graph, s: &VertexSet) -> bool {
    let rest = s.complement();
    let (h, map) = g.induced_subgraph(&rest);
    let p0 = g.closed_neighborhood(s);
    let start = VertexSet::from_indices(
        h.n(),
        map.iter()
            .enumerate()
            .filter(|&(_, &v)| p0.contains(v))
            .map(|(i, _)| i),
    );
    zero_forcing_fixpoint(&h, &start).fixed_point().is_full()
}

/// Every subset of `0..n` as a bitmask-driven iterator.
pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n)
        .map(move |mask| VertexSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)))
}

/// Properly stalled: `P^0(S) = P^1(S) != V`.
pub fn properly_stalled(g: &Graph, s: &VertexSet) -> bool {
    let t = monitored_fixpoint(g, s);
    t.stabilized_at == 0 && !t.initial().is_full()
}

/// Host for the pendant-path scan: `base` plus a path of `k - 1` new vertices
/// hung off `attach`. Returns the host and the vertex set of the induced path
/// `P_k` (the attachment vertex and the new vertices).
pub fn pendant_path_host(base: &Graph, attach: usize, k: usize) -> (Graph, VertexSet) {
    let nb = base.n();
    let n = nb + k - 1;
    let mut edges = base.edges();
    edges.push((attach, nb));
    for i in nb..n - 1 {
        edges.push((i, i + 1));
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let path = VertexSet::from_indices(n, std::iter::once(attach).chain(nb..n));
    (g, path)
}

#[derive(Debug, Default, Clone)]
pub struct PathspreadScan {
    pub hosts: usize,
    pub stalled_touching: usize,
    pub maximal_touching: usize,
    /// `(k, host, set)` with fewer than `ceil(k/3)` path vertices.
    pub domination_violations: Vec<(usize, Graph, VertexSet)>,
    /// Same scan against `ceil((k-1)/3)`.
    pub shifted_violations: usize,
    /// Maximally stalled sets with fewer than `k - 1` path vertices.
    pub maximal_violations: Vec<(usize, Graph, VertexSet)>,
}

/// Exhaustive properly-stalled scan over every subset of one host.
pub fn scan_host(host: &Graph, path: &VertexSet, k: usize, acc: &mut PathspreadScan) {
    acc.hosts += 1;
    let mut prop = Propagator::new(host);
    for s in all_subsets(host.n()) {
        let hit = s.intersection(path).len();
        if hit == 0 || !properly_stalled(host, &s) {
            continue;
        }
        acc.stalled_touching += 1;
        if hit < k.div_ceil(3) {
            acc.domination_violations.push((k, host.clone(), s.clone()));
        }
        if hit < (k - 1).div_ceil(3) {
            acc.shifted_violations += 1;
        }
        let maximal = s.complement().iter().all(|u| {
            let mut t = s.clone();
            t.insert(u);
            prop.is_power_dominating(&t)
        });
        if maximal {
            debug_assert!(classify(host, &s).maximally_stalled);
            acc.maximal_touching += 1;
            if hit < k - 1 {
                acc.maximal_violations.push((k, host.clone(), s));
            }
        }
    }
}

/// Random hosts: connected base on `3..` vertices with an attachment vertex of
/// base degree at least 2, pendant path `P_k` for `k` in `3..=6`, total order at
/// most 12.
pub fn random_pendant_hosts(rng: &mut impl Rng, count: usize) -> Vec<(usize, Graph, VertexSet)> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.random_range(3..=6);
        let nb = rng.random_range(3..=12 - (k - 1));
        let base = random_connected_graph(rng, nb, 0.5);
        let candidates: Vec<usize> = (0..nb).filter(|&v| base.degree(v) >= 2).collect();
        let Some(&attach) = candidates.choose(rng) else {
            continue;
        };
        let (host, path) = pendant_path_host(&base, attach, k);
        out.push((k, host, path));
    }
    out
}

/// The host on which the `ceil(k/3)` pendant-path bound fails for `k = 4`.
pub fn pathspread_counterexample() -> (Graph, VertexSet, VertexSet) {
    let base = Graph::from_edges(
        7,
        [
            (0, 1),
            (0, 5),
            (0, 6),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
    )
    .unwrap();
    let (host, path) = pendant_path_host(&base, 6, 4);
    let s = VertexSet::from_indices(host.n(), [0, 8]);
    (host, path, s)
}

/// Connected graphs on vertex set `0..n` with at most `max_edges` edges, every
/// labeled edge subset enumerated.
pub fn connected_graphs(n: usize, max_edges: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        if mask.count_ones() as usize > max_edges || (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

pub fn is_path_graph(g: &Graph) -> bool {
    let n = g.n();
    if n == 1 {
        return true;
    }
    g.is_connected() && g.edge_count() == n - 1 && (0..n).all(|v| g.degree(v) <= 2)
}
