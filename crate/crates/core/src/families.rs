//! Named graph families, their descriptor strings, and closed-form values of
//! `γ̄_p` where a proved formula exists.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {constraint}")]
    Domain {
        family: &'static str,
        constraint: String,
    },
    #[error("no closed form for {0}; use the exact solver")]
    NoFormula(String),
    #[error("bad family descriptor {descriptor:?}: {reason}")]
    Descriptor { descriptor: String, reason: String },
}

/// A member of one of the supported families.
///
/// Fan-chord families follow the cycle labels `v_1..v_n`, mapped to indices
/// `0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Edgeless graph on `n` vertices.
    Empty {
        n: usize,
    },
    /// `W_n = C_{n-1} ∨ K_1`.
    Wheel {
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// `P_k □ P_2`.
    Ladder {
        k: usize,
    },
    /// `P_m □ P_n`, labeled `cd` by column and row.
    Grid {
        m: usize,
        n: usize,
    },
    ComplementCycle {
        n: usize,
    },
    ComplementPath {
        n: usize,
    },
    /// `C_n` with chords `{v_1, v_i}, …, {v_1, v_{i+k-1}}`.
    FanChord {
        n: usize,
        i: usize,
        k: usize,
    },
    /// [`FamilySpec::FanChord`] plus the chord `{v_2, v_{i-1}}`.
    FanChordPlus {
        n: usize,
        i: usize,
        k: usize,
    },
    Join(Vec<FamilySpec>),
    /// `K_k □ P_l`.
    CompleteTimesPath {
        k: usize,
        l: usize,
    },
}

fn domain(family: &'static str, ok: bool, constraint: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Domain {
            family,
            constraint: constraint.to_string(),
        })
    }
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Empty { .. } => "empty",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::CompleteBipartite { .. } => "kmn",
            FamilySpec::Ladder { .. } => "ladder",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::ComplementCycle { .. } => "cbar",
            FamilySpec::ComplementPath { .. } => "pbar",
            FamilySpec::FanChord { .. } => "fanchord",
            FamilySpec::FanChordPlus { .. } => "fanchord+",
            FamilySpec::Join(_) => "join",
            FamilySpec::CompleteTimesPath { .. } => "kpath",
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.family_name();
        match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } | FamilySpec::Empty { n } => {
                domain(name, n >= 1, "n >= 1")
            }
            FamilySpec::Cycle { n } | FamilySpec::ComplementCycle { n } => {
                domain(name, n >= 3, "n >= 3")
            }
            FamilySpec::ComplementPath { n } => domain(name, n >= 1, "n >= 1"),
            FamilySpec::Wheel { n } => domain(name, n >= 4, "n >= 4"),
            FamilySpec::CompleteBipartite { m, n } => domain(name, m >= 1 && n >= 1, "m, n >= 1"),
            FamilySpec::Ladder { k } => domain(name, k >= 2, "k >= 2"),
            FamilySpec::Grid { m, n } => domain(name, m >= 1 && n >= 1, "m, n >= 1"),
            FamilySpec::CompleteTimesPath { k, l } => domain(name, k >= 1 && l >= 1, "k, l >= 1"),
            FamilySpec::FanChord { n, i, k } => {
                domain(name, i >= 3, "i >= 3")?;
                domain(name, n >= 4, "n >= 4")?;
                domain(name, k >= 1, "k >= 1")?;
                domain(
                    name,
                    i + k < n,
                    &format!("i + k <= n - 1 (got i + k = {}, n - 1 = {})", i + k, n - 1),
                )
            }
            FamilySpec::FanChordPlus { n, i, k } => {
                domain(name, i >= 5, "i >= 5")?;
                domain(name, n >= 6, "n >= 6")?;
                domain(name, k >= 1, "k >= 1")?;
                domain(
                    name,
                    i + k < n,
                    &format!("i + k <= n - 1 (got i + k = {}, n - 1 = {})", i + k, n - 1),
                )
            }
            FamilySpec::Join(ref parts) => {
                domain(name, parts.len() >= 2, "at least two factors")?;
                parts.iter().try_for_each(FamilySpec::validate)
            }
        }
    }

    /// Chord endpoints (0-based) for the fan-chord families; empty otherwise.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        match *self {
            FamilySpec::FanChord { i, k, .. } => (i..i + k).map(|j| (0, j - 1)).collect(),
            FamilySpec::FanChordPlus { i, k, .. } => {
                let mut c: Vec<_> = (i..i + k).map(|j| (0, j - 1)).collect();
                c.push((1, i - 2));
                c
            }
            _ => Vec::new(),
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        Ok(self.build())
    }

    fn build(&self) -> Graph {
        match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::Empty { n } => Graph::empty(n),
            FamilySpec::Wheel { n } => cycle(n - 1).join(&Graph::empty(1)),
            FamilySpec::CompleteBipartite { m, n } => Graph::empty(m).join(&Graph::empty(n)),
            FamilySpec::Ladder { k } => path(k).cartesian_product(&path(2)),
            FamilySpec::Grid { m, n } => grid(m, n),
            FamilySpec::ComplementCycle { n } => cycle(n).complement(),
            FamilySpec::ComplementPath { n } => path(n).complement(),
            FamilySpec::FanChord { n, .. } | FamilySpec::FanChordPlus { n, .. } => {
                let ring = (0..n).map(|v| (v, (v + 1) % n));
                let labels = (1..=n).map(|v| format!("v{v}")).collect();
                Graph::from_edges(n, ring.chain(self.chords()))
                    .expect("chords stay inside the cycle")
                    .with_labels(labels)
                    .expect("one label per cycle vertex")
            }
            FamilySpec::Join(ref parts) => {
                let mut it = parts.iter().map(FamilySpec::build);
                let first = it.next().expect("validated join has factors");
                it.fold(first, |acc, g| acc.join(&g))
            }
            FamilySpec::CompleteTimesPath { k, l } => complete(k).cartesian_product(&path(l)),
        }
    }

    /// Whether this spec can be used as a join factor in a `γ̄_p = 0` join:
    /// its own value is certified 0, or it is `K̄_2`.
    fn join_factor_ok(&self) -> bool {
        matches!(self, FamilySpec::Empty { n: 2 }) || matches!(self.oracle_gamma_bar(), Ok(0))
    }

    /// Closed-form `γ̄_p`, refusing outside the hypotheses of a proved statement.
    pub fn oracle_gamma_bar(&self) -> Result<usize, FamilyError> {
        self.validate()?;
        let refuse = || Err(FamilyError::NoFormula(self.to_string()));
        match *self {
            FamilySpec::Path { .. }
            | FamilySpec::Cycle { .. }
            | FamilySpec::Complete { .. }
            | FamilySpec::Wheel { .. }
            | FamilySpec::FanChord { .. }
            | FamilySpec::FanChordPlus { .. } => Ok(0),
            FamilySpec::ComplementCycle { n } if n >= 5 => Ok(0),
            FamilySpec::ComplementPath { n } if n >= 4 => Ok(0),
            // every vertex is isolated
            FamilySpec::Empty { n } => Ok(n - 1),
            FamilySpec::CompleteBipartite { m, n } => {
                let big = m.max(n);
                Ok(big.saturating_sub(2))
            }
            FamilySpec::Ladder { k } if k >= 4 => Ok((k - 4).div_ceil(3)),
            FamilySpec::CompleteTimesPath { k, l } if k >= 3 && l >= 3 => {
                Ok((k - 2) * ((l - 1) / 2))
            }
            FamilySpec::Join(ref parts) if parts.iter().all(FamilySpec::join_factor_ok) => Ok(0),
            _ => refuse(),
        }
    }
}

fn parse_usizes(descriptor: &str, args: &str, want: usize) -> Result<Vec<usize>, FamilyError> {
    let bad = |reason: String| FamilyError::Descriptor {
        descriptor: descriptor.to_string(),
        reason,
    };
    let vals = args
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| bad(format!("{t:?} is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if vals.len() != want {
        return Err(bad(format!(
            "expected {want} parameter(s), got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses descriptors such as `ladder:9`, `kmn:5,2`, `fanchord+:10,6,3`,
    /// `grid:6,6` or `join:cycle:4/empty:2`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let (name, args) = s.split_once(':').ok_or_else(|| FamilyError::Descriptor {
            descriptor: s.to_string(),
            reason: "expected NAME:PARAMS".to_string(),
        })?;
        let p = |want| parse_usizes(s, args, want);
        let spec = match name {
            "path" => FamilySpec::Path { n: p(1)?[0] },
            "cycle" => FamilySpec::Cycle { n: p(1)?[0] },
            "complete" => FamilySpec::Complete { n: p(1)?[0] },
            "empty" => FamilySpec::Empty { n: p(1)?[0] },
            "wheel" => FamilySpec::Wheel { n: p(1)?[0] },
            "kmn" => {
                let v = p(2)?;
                FamilySpec::CompleteBipartite { m: v[0], n: v[1] }
            }
            "ladder" => FamilySpec::Ladder { k: p(1)?[0] },
            "grid" => {
                let v = p(2)?;
                FamilySpec::Grid { m: v[0], n: v[1] }
            }
            "cbar" => FamilySpec::ComplementCycle { n: p(1)?[0] },
            "pbar" => FamilySpec::ComplementPath { n: p(1)?[0] },
            "fanchord" => {
                let v = p(3)?;
                FamilySpec::FanChord {
                    n: v[0],
                    i: v[1],
                    k: v[2],
                }
            }
            "fanchord+" => {
                let v = p(3)?;
                FamilySpec::FanChordPlus {
                    n: v[0],
                    i: v[1],
                    k: v[2],
                }
            }
            "kpath" => {
                let v = p(2)?;
                FamilySpec::CompleteTimesPath { k: v[0], l: v[1] }
            }
            "join" => FamilySpec::Join(
                args.split('/')
                    .map(FamilySpec::from_str)
                    .collect::<Result<_, _>>()?,
            ),
            other => {
                return Err(FamilyError::Descriptor {
                    descriptor: s.to_string(),
                    reason: format!("unknown family {other:?}"),
                })
            }
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family_name();
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Empty { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::ComplementCycle { n }
            | FamilySpec::ComplementPath { n } => write!(f, "{name}:{n}"),
            FamilySpec::Ladder { k } => write!(f, "{name}:{k}"),
            FamilySpec::CompleteBipartite { m, n } | FamilySpec::Grid { m, n } => {
                write!(f, "{name}:{m},{n}")
            }
            FamilySpec::CompleteTimesPath { k, l } => write!(f, "{name}:{k},{l}"),
            FamilySpec::FanChord { n, i, k } | FamilySpec::FanChordPlus { n, i, k } => {
                write!(f, "{name}:{n},{i},{k}")
            }
            FamilySpec::Join(parts) => {
                write!(f, "join:")?;
                for (idx, p) in parts.iter().enumerate() {
                    if idx > 0 {
                        write!(f, "/")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// `P_n`; `n = 0` gives the null graph.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges in range")
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges in range")
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// `P_m □ P_n` with labels `cd` (column `c < m`, row `d < n`, index `c * n + d`).
/// Coordinates of 10 or more are written `c.d`.
pub fn grid(m: usize, n: usize) -> Graph {
    let labels = (0..m)
        .flat_map(|c| {
            (0..n).map(move |d| {
                if c < 10 && d < 10 {
                    format!("{c}{d}")
                } else {
                    format!("{c}.{d}")
                }
            })
        })
        .collect();
    path(m)
        .cartesian_product(&path(n))
        .with_labels(labels)
        .expect("one label per grid vertex")
}

/// Closed-form `γ̄_p` when it is `n - 1`, `n - 2` or `n - 3`, decided from the
/// structure of `g` alone:
///
/// * `n - 1` iff some vertex is isolated;
/// * otherwise `n - 2` iff some component is `K_2`;
/// * otherwise `n - 3` iff `g` has an induced `P_3` whose ends have degree 1, or
///   a triangle in which at least two vertices have degree 2.
pub fn extremal_gamma_bar(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if (0..n).any(|v| g.degree(v) == 0) {
        return Some(n - 1);
    }
    if g.components().iter().any(|c| c.len() == 2) {
        return Some(n - 2);
    }
    for mid in 0..n {
        let nb = g.neighbors(mid).to_vec();
        for (a, &u) in nb.iter().enumerate() {
            for &w in &nb[a + 1..] {
                let pendant_pair = g.degree(u) == 1 && g.degree(w) == 1;
                let hanging_triangle = g.has_edge(u, w) && g.degree(u) == 2 && g.degree(w) == 2;
                if pendant_pair || hanging_triangle {
                    return Some(n - 3);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propagation::classify;
    use crate::solvers::{gamma_bar_p, SolverOptions};
    use crate::vertex_set::VertexSet;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn fig5_graph() {
        let s = spec("fanchord+:10,6,3");
        let g = s.generate().unwrap();
        let mut expected: Vec<(usize, usize)> = (0..10).map(|v| (v, (v + 1) % 10)).collect();
        // v1v6, v1v7, v1v8, v2v5
        expected.extend([(0, 5), (0, 6), (0, 7), (1, 4)]);
        let mut expected: Vec<_> = expected
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        expected.sort();
        assert_eq!(g.edges(), expected);
        assert_eq!(s.chords(), vec![(0, 5), (0, 6), (0, 7), (1, 4)]);
        assert_eq!(g.label(0), "v1");
    }

    #[test]
    fn wheel_four_is_k4() {
        let g = spec("wheel:4").generate().unwrap();
        assert_eq!(g.without_labels(), complete(4));
    }

    #[test]
    fn domain_errors() {
        match spec("fanchord:4,3,2").generate() {
            Err(FamilyError::Domain { family, constraint }) => {
                assert_eq!(family, "fanchord");
                assert!(constraint.contains("i + k <= n - 1"), "{constraint}");
            }
            other => panic!("expected domain error, got {other:?}"),
        }
        assert!(spec("wheel:3").generate().is_err());
        assert!(spec("fanchord+:10,4,1").generate().is_err());
        assert!(spec("join:cycle:4").generate().is_err());
        assert!("ladder".parse::<FamilySpec>().is_err());
        assert!("ladder:x".parse::<FamilySpec>().is_err());
        assert!("kmn:3".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn descriptors_round_trip() {
        for d in [
            "path:5",
            "kmn:5,2",
            "fanchord+:10,6,3",
            "grid:6,6",
            "join:cycle:4/empty:2/complete:3",
            "kpath:3,4",
            "cbar:7",
        ] {
            assert_eq!(spec(d).to_string(), d);
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(spec("kmn:5,2").oracle_gamma_bar(), Ok(3));
        assert_eq!(spec("ladder:9").oracle_gamma_bar(), Ok(2));
        assert_eq!(spec("kpath:3,3").oracle_gamma_bar(), Ok(1));
        assert_eq!(spec("cbar:5").oracle_gamma_bar(), Ok(0));
        assert_eq!(spec("join:cycle:5/empty:2").oracle_gamma_bar(), Ok(0));
        assert!(matches!(
            spec("ladder:3").oracle_gamma_bar(),
            Err(FamilyError::NoFormula(_))
        ));
        assert!(matches!(
            spec("grid:6,6").oracle_gamma_bar(),
            Err(FamilyError::NoFormula(_))
        ));
        assert!(matches!(
            spec("join:kmn:4,1/cycle:4").oracle_gamma_bar(),
            Err(FamilyError::NoFormula(_))
        ));
    }

    #[test]
    fn fig5_trace_matches_caption() {
        use crate::propagation::monitored_fixpoint;
        let g = spec("fanchord+:10,6,3").generate().unwrap();
        let t = monitored_fixpoint(&g, &VertexSet::from_indices(10, [2]));
        assert_eq!(t.steps[4], VertexSet::from_indices(10, 0..8));
        assert_eq!(t.stabilized_at, 5);
        assert!(t.fixed_point().is_full());
    }

    #[test]
    fn ladder_witness_pattern_is_stalled() {
        // u_i v_j with i = 2 mod 3, 2 <= i <= k-3, j = i mod 2
        for k in 4..=12usize {
            let g = spec(&format!("ladder:{k}")).generate().unwrap();
            let s = VertexSet::from_indices(
                g.n(),
                (2..=k.saturating_sub(3))
                    .filter(|i| i % 3 == 2)
                    .map(|i| i * 2 + i % 2),
            );
            assert_eq!(s.len(), (k - 4).div_ceil(3));
            let c = classify(&g, &s);
            assert!(c.is_spds && c.is_fpds, "k={k}");
        }
    }

    #[test]
    fn extremal_examples() {
        let k3_plus_isolated = complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(extremal_gamma_bar(&k3_plus_isolated), Some(3));
        assert_eq!(
            extremal_gamma_bar(&complete(2).disjoint_union(&cycle(4))),
            Some(4)
        );
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(extremal_gamma_bar(&paw), Some(1));
        assert_eq!(extremal_gamma_bar(&cycle(6)), None);
    }

    #[test]
    fn zero_family_singletons_are_pds() {
        for d in [
            "wheel:7",
            "cbar:6",
            "pbar:5",
            "fanchord:9,3,4",
            "fanchord+:10,6,3",
        ] {
            let g = spec(d).generate().unwrap();
            for v in 0..g.n() {
                assert!(
                    classify(&g, &VertexSet::from_indices(g.n(), [v])).is_pds,
                    "{d} v={v}"
                );
            }
        }
    }

    #[test]
    fn oracle_matches_solver_on_small_members() {
        let o = SolverOptions::default();
        for d in [
            "kmn:4,3",
            "ladder:7",
            "kpath:3,4",
            "join:path:3/empty:2",
            "empty:4",
        ] {
            let s = spec(d);
            let g = s.generate().unwrap();
            assert_eq!(
                gamma_bar_p(&g, &o).unwrap().value,
                s.oracle_gamma_bar().unwrap(),
                "{d}"
            );
        }
    }
}
