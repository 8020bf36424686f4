//! Exact parameter computation by size-stratified subset search.
//!
//! Every solver walks strata of `k`-subsets in colexicographic order and stops at
//! the first stratum that decides the parameter:
//!
//! * minimization (`γ_p`, `Z`, `γ`): the first `k` with a successful set;
//! * failed parameters (`γ̄_p`, `F`): the first `k` with *no* failed set. Failed
//!   sets are closed under taking subsets (propagation is monotone in `S`), so once
//!   every `k`-set succeeds, every larger set does too and the answer is `k - 1`;
//! * `α`: descending sizes, the first `k` with an independent set.
//!
//! A stratum is split by its largest element ("top"). With more than one worker,
//! tops are fanned out over a rayon pool.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::propagation::Propagator;
use crate::subsets::Colex;
use crate::vertex_set::VertexSet;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    GammaP,
    GammaBarP,
    ZeroForcingNumber,
    FailedZeroForcingNumber,
    DominationNumber,
    IndependenceNumber,
}

impl Parameter {
    pub fn name(self) -> &'static str {
        match self {
            Parameter::GammaP => "gamma_p",
            Parameter::GammaBarP => "gamma_bar_p",
            Parameter::ZeroForcingNumber => "zero_forcing_number",
            Parameter::FailedZeroForcingNumber => "failed_zero_forcing_number",
            Parameter::DominationNumber => "domination_number",
            Parameter::IndependenceNumber => "independence_number",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Cap on predicate evaluations (propagation fixpoints, domination or
    /// independence checks).
    pub budget: u64,
    pub workers: usize,
    /// Return the colexicographically smallest witness and make call counts
    /// reproducible for a fixed worker count.
    pub canonical: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: 1,
            canonical: false,
        }
    }
}

impl SolverOptions {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn canonical(mut self, canonical: bool) -> Self {
        self.canonical = canonical;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: VertexSet,
    pub propagation_calls: u64,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    parameter: &'static str,
    value: usize,
    witness: &'a VertexSet,
    calls: u64,
}

impl SolverResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ResultJson {
            parameter: self.parameter.name(),
            value: self.value,
            witness: &self.witness,
            calls: self.propagation_calls,
        })
        .expect("solver result serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("solvers need a graph with at least one vertex")]
    EmptyGraph,
    #[error("{} search exceeded its budget of {calls} calls", parameter.name())]
    BudgetExceeded { parameter: Parameter, calls: u64 },
}

#[derive(Debug, Clone, Copy)]
enum Test {
    PowerDominating,
    NotPowerDominating,
    ZeroForcing,
    NotZeroForcing,
    Dominating,
    Independent,
}

impl Test {
    fn holds(self, p: &mut Propagator<'_>, s: &[usize]) -> bool {
        match self {
            Test::PowerDominating => p.is_power_dominating_indices(s),
            Test::NotPowerDominating => !p.is_power_dominating_indices(s),
            Test::ZeroForcing => p.is_zero_forcing_indices(s),
            Test::NotZeroForcing => !p.is_zero_forcing_indices(s),
            Test::Dominating => p.is_dominating_indices(s),
            Test::Independent => {
                let g = p.graph();
                s.iter()
                    .enumerate()
                    .all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
            }
        }
    }
}

struct Exhausted;

struct Search<'g> {
    g: &'g Graph,
    opts: SolverOptions,
    calls: AtomicU64,
    pool: Option<rayon::ThreadPool>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, opts: SolverOptions) -> Result<Self, SolverError> {
        if g.n() == 0 {
            return Err(SolverError::EmptyGraph);
        }
        let pool = (opts.workers > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("worker pool builds")
        });
        Ok(Self {
            g,
            opts,
            calls: AtomicU64::new(0),
            pool,
        })
    }

    fn charge(&self) -> Result<(), Exhausted> {
        if self.calls.fetch_add(1, Ordering::Relaxed) >= self.opts.budget {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }

    /// First `k`-subset with largest element `top` passing `test`, scanning the
    /// rest in colex order. Gives up early once `stop` is raised.
    fn scan_top(
        &self,
        k: usize,
        top: usize,
        test: Test,
        stop: Option<&AtomicBool>,
    ) -> Result<Option<Vec<usize>>, Exhausted> {
        let mut prop = Propagator::new(self.g);
        let mut rest = Colex::new(top, k - 1);
        let mut cand = vec![0; k];
        cand[k - 1] = top;
        while let Some(sub) = rest.next_subset() {
            if stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
                return Ok(None);
            }
            self.charge()?;
            cand[..k - 1].copy_from_slice(sub);
            if test.holds(&mut prop, &cand) {
                return Ok(Some(cand));
            }
        }
        Ok(None)
    }

    /// Some `k`-subset passing `test`, or `None` when the whole stratum fails.
    fn stratum(&self, k: usize, test: Test) -> Result<Option<Vec<usize>>, Exhausted> {
        let n = self.g.n();
        if k > n {
            return Ok(None);
        }
        if k == 0 {
            self.charge()?;
            let mut prop = Propagator::new(self.g);
            return Ok(test.holds(&mut prop, &[]).then(Vec::new));
        }
        let tops = k - 1..n;
        let Some(pool) = &self.pool else {
            for top in tops {
                if let Some(hit) = self.scan_top(k, top, test, None)? {
                    return Ok(Some(hit));
                }
            }
            return Ok(None);
        };
        if self.opts.canonical {
            // Fixed waves of tops, each scanned to its own first hit: the smallest
            // top with a hit holds the colex-first witness.
            let tops: Vec<usize> = tops.collect();
            for wave in tops.chunks(self.opts.workers) {
                let results: Vec<_> = pool.install(|| {
                    wave.par_iter()
                        .map(|&top| self.scan_top(k, top, test, None))
                        .collect()
                });
                for r in results {
                    if let Some(hit) = r? {
                        return Ok(Some(hit));
                    }
                }
            }
            Ok(None)
        } else {
            let stop = AtomicBool::new(false);
            let found = pool.install(|| {
                tops.into_par_iter().find_map_any(|top| {
                    match self.scan_top(k, top, test, Some(&stop)) {
                        Ok(Some(hit)) => {
                            stop.store(true, Ordering::Relaxed);
                            Some(Ok(hit))
                        }
                        Ok(None) => None,
                        Err(e) => {
                            stop.store(true, Ordering::Relaxed);
                            Some(Err(e))
                        }
                    }
                })
            });
            found.transpose()
        }
    }

    fn finish(&self, parameter: Parameter, value: usize, witness: &[usize]) -> SolverResult {
        SolverResult {
            parameter,
            value,
            witness: VertexSet::from_indices(self.g.n(), witness.iter().copied()),
            propagation_calls: self.calls.load(Ordering::Relaxed),
        }
    }

    fn exhausted(&self, parameter: Parameter) -> SolverError {
        SolverError::BudgetExceeded {
            parameter,
            calls: self.opts.budget,
        }
    }

    fn minimize(&self, parameter: Parameter, test: Test) -> Result<SolverResult, SolverError> {
        for k in 0..=self.g.n() {
            match self.stratum(k, test) {
                Ok(Some(w)) => return Ok(self.finish(parameter, k, &w)),
                Ok(None) => {}
                Err(Exhausted) => return Err(self.exhausted(parameter)),
            }
        }
        unreachable!("the full vertex set passes every minimized test")
    }

    fn maximize_failure(
        &self,
        parameter: Parameter,
        failing: Test,
    ) -> Result<SolverResult, SolverError> {
        let mut best: Option<Vec<usize>> = None;
        for k in 0..=self.g.n() {
            match self.stratum(k, failing) {
                Ok(Some(w)) => best = Some(w),
                Ok(None) => {
                    let w = best.expect("the empty set fails on a nonempty graph");
                    return Ok(self.finish(parameter, k - 1, &w));
                }
                Err(Exhausted) => return Err(self.exhausted(parameter)),
            }
        }
        unreachable!("the full vertex set never fails")
    }
}

/// Power domination number `γ_p`.
pub fn gamma_p(g: &Graph, opts: &SolverOptions) -> Result<SolverResult, SolverError> {
    Search::new(g, *opts)?.minimize(Parameter::GammaP, Test::PowerDominating)
}

/// Failed power domination number `γ̄_p`: the largest set that is not a PDS.
/// `∅` always fails, so the value is at least 0.
pub fn gamma_bar_p(g: &Graph, opts: &SolverOptions) -> Result<SolverResult, SolverError> {
    Search::new(g, *opts)?.maximize_failure(Parameter::GammaBarP, Test::NotPowerDominating)
}

/// Zero forcing number `Z`.
pub fn zero_forcing_number(g: &Graph, opts: &SolverOptions) -> Result<SolverResult, SolverError> {
    Search::new(g, *opts)?.minimize(Parameter::ZeroForcingNumber, Test::ZeroForcing)
}

/// Failed zero forcing number `F`.
pub fn failed_zero_forcing_number(
    g: &Graph,
    opts: &SolverOptions,
) -> Result<SolverResult, SolverError> {
    Search::new(g, *opts)?
        .maximize_failure(Parameter::FailedZeroForcingNumber, Test::NotZeroForcing)
}

/// Domination number `γ`.
pub fn domination_number(g: &Graph, opts: &SolverOptions) -> Result<SolverResult, SolverError> {
    Search::new(g, *opts)?.minimize(Parameter::DominationNumber, Test::Dominating)
}

/// Independence number `α`, searched from `n` downwards.
pub fn max_independent_set(g: &Graph, opts: &SolverOptions) -> Result<SolverResult, SolverError> {
    let search = Search::new(g, *opts)?;
    let parameter = Parameter::IndependenceNumber;
    for k in (0..=g.n()).rev() {
        match search.stratum(k, Test::Independent) {
            Ok(Some(w)) => return Ok(search.finish(parameter, k, &w)),
            Ok(None) => {}
            Err(Exhausted) => return Err(search.exhausted(parameter)),
        }
    }
    unreachable!("the empty set is independent")
}

/// Dispatch by parameter.
pub fn solve(
    parameter: Parameter,
    g: &Graph,
    opts: &SolverOptions,
) -> Result<SolverResult, SolverError> {
    match parameter {
        Parameter::GammaP => gamma_p(g, opts),
        Parameter::GammaBarP => gamma_bar_p(g, opts),
        Parameter::ZeroForcingNumber => zero_forcing_number(g, opts),
        Parameter::FailedZeroForcingNumber => failed_zero_forcing_number(g, opts),
        Parameter::DominationNumber => domination_number(g, opts),
        Parameter::IndependenceNumber => max_independent_set(g, opts),
    }
}
