mod common;

use powerdom::{
    classify, domination_number, failed_zero_forcing_number, gamma_bar_p, gamma_p,
    monitored_fixpoint, zero_forcing_fixpoint, Graph, SolverOptions, VertexSet,
};
use proptest::prelude::*;

use common::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(g, a, b)| {
                let small = VertexSet::from_indices(n, (0..n).filter(|&i| a[i]));
                let big = VertexSet::from_indices(n, (0..n).filter(|&i| a[i] || b[i]));
                (g, small, big)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fixed_points_are_monotone((g, small, big) in graph_and_sets(10)) {
        prop_assert!(monitored_fixpoint(&g, &small)
            .fixed_point()
            .is_subset(monitored_fixpoint(&g, &big).fixed_point()));
        prop_assert!(zero_forcing_fixpoint(&g, &small)
            .fixed_point()
            .is_subset(zero_forcing_fixpoint(&g, &big).fixed_point()));
    }

    #[test]
    fn zero_forcing_stays_inside_monitoring((g, s, _) in graph_and_sets(10)) {
        let q = zero_forcing_fixpoint(&g, &s);
        let p = monitored_fixpoint(&g, &s);
        prop_assert!(q.fixed_point().is_subset(p.fixed_point()));
    }

    #[test]
    fn traces_grow_strictly_until_stable((g, s, _) in graph_and_sets(10)) {
        for t in [monitored_fixpoint(&g, &s), zero_forcing_fixpoint(&g, &s)] {
            prop_assert!(t.stabilized_at <= g.n());
            prop_assert_eq!(t.steps.len(), t.stabilized_at + 1);
            for w in t.steps.windows(2) {
                prop_assert!(w[0].is_subset(&w[1]));
                prop_assert!(w[1].len() > w[0].len());
            }
        }
    }

    #[test]
    fn classification_is_consistent((g, s, _) in graph_and_sets(9)) {
        let c = classify(&g, &s);
        prop_assert_eq!(c.is_fpds, !c.is_pds);
        prop_assert!(!c.properly_stalled || (c.is_spds && c.is_fpds));
        prop_assert!(!c.maximally_stalled || c.is_spds);
        prop_assert_eq!(c.is_pds, c.monitored.is_full());
    }

    #[test]
    fn domination_observation_on_pds((g, s, _) in graph_and_sets(10)) {
        if classify(&g, &s).is_pds {
            prop_assert!(domset_observation_holds(&g, &s));
        }
    }

    #[test]
    fn parameter_bounds(g in graph_strategy(8)) {
        let o = SolverOptions::default();
        let gb = gamma_bar_p(&g, &o).unwrap().value;
        let f = failed_zero_forcing_number(&g, &o).unwrap().value;
        let gp = gamma_p(&g, &o).unwrap().value;
        let dom = domination_number(&g, &o).unwrap().value;
        prop_assert!(gb <= f);
        prop_assert!(gp <= dom);
    }
}

/// Plants `S' ⊆ P^i(S)` and checks that whenever `S'` zero forces
/// `G[(V \ P^i(S)) ∪ S']`, the set `S` power dominates.
#[test]
fn planted_zero_forcing_subsets_imply_pds() {
    let mut rng = rng(21);
    let (mut planted, mut hits) = (0, 0);
    for _ in 0..3000 {
        let n = rand::Rng::random_range(&mut rng, 2..=9);
        let g = random_graph(&mut rng, n, 0.45);
        let s = random_subset(&mut rng, n, 0.25);
        let t = monitored_fixpoint(&g, &s);
        let i = rand::Rng::random_range(&mut rng, 0..=t.stabilized_at);
        let filled = t.step(i).clone();
        let sub = random_subset(&mut rng, n, 0.6).intersection(&filled);
        let within = filled.complement().union(&sub);
        let (h, map) = g.induced_subgraph(&within);
        let start = VertexSet::from_indices(
            h.n(),
            map.iter()
                .enumerate()
                .filter(|&(_, &v)| sub.contains(v))
                .map(|(j, _)| j),
        );
        planted += 1;
        if zero_forcing_fixpoint(&h, &start).fixed_point().is_full() {
            hits += 1;
            assert!(
                classify(&g, &s).is_pds,
                "{:?} S = {s:?} step {i}",
                g.edges()
            );
        }
    }
    assert!(
        hits > planted / 20,
        "only {hits} of {planted} configurations qualified"
    );
}
