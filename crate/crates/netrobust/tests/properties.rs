//! Randomized property tests for the structural invariants of the
//! library, checked against the naive oracles in `common`.

mod common;

use proptest::prelude::*;

use netrobust::attacks::{weighted_probabilities, AttackPlan, StrategyId, TargetKind};
use netrobust::engine::{rank_values, run_sequence};
use netrobust::generators::{generate, GeneratorConfig, ModelId};
use netrobust::graph::{components, Graph, RemovalMask};
use netrobust::linalg::symmetric_eigen;
use netrobust::measures::{driver_nodes_mit, lcc, MeasureSet};
use netrobust::optimize::{degree_preserving_swap, SwapProposal};

/// Strategy: a simple undirected graph as (n, deduplicated edge list).
fn small_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| (n, edges))
    })
}

fn small_digraph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| (n, edges))
    })
}

proptest! {
    /// Component labelling agrees with the transitive-closure oracle.
    #[test]
    fn components_match_closure_oracle((n, edges) in small_graph(8)) {
        let g = Graph::new(n, false, edges.clone()).unwrap();
        let decomp = components(&g, &RemovalMask::new(&g)).unwrap();
        let mut got = decomp.sizes.clone();
        got.sort_unstable_by(|a, b| b.cmp(a));
        let want = common::closure_component_sizes(n, &edges);
        prop_assert_eq!(got, want);
    }

    /// Removing any node never grows the largest component.
    #[test]
    fn lcc_never_grows_under_removal((n, edges) in small_graph(10), pick in 0usize..10) {
        let g = Graph::new(n, false, edges).unwrap();
        let mut mask = RemovalMask::new(&g);
        let before = lcc(&g, &mask).unwrap();
        mask.remove_node(&g, pick % n).unwrap();
        let after = lcc(&g, &mask).unwrap();
        prop_assert!(after <= before);
    }

    /// Betweenness agrees with explicit shortest-path enumeration.
    #[test]
    fn betweenness_matches_path_enumeration((n, edges) in small_graph(7)) {
        let g = Graph::new(n, false, edges.clone()).unwrap();
        let (nb, _) = netrobust::apriori::betweenness(&g, &RemovalMask::new(&g)).unwrap();
        let want = common::naive_node_betweenness(n, &edges, false);
        for (i, (a, b)) in nb.iter().zip(&want).enumerate() {
            prop_assert!((a - b).abs() <= 1e-9, "node {}: {} vs oracle {}", i, a, b);
        }
    }

    /// Driver-node count from matching agrees with brute-force matching
    /// enumeration, and never decreases when an arc is removed.
    #[test]
    fn driver_count_matching_properties((n, edges) in small_digraph(6), pick in 0usize..32) {
        let g = Graph::new(n, true, edges.clone()).unwrap();
        let mask = RemovalMask::new(&g);
        let got = driver_nodes_mit(&g, &mask).unwrap();
        let mut adj = vec![vec![]; n];
        for &(u, v) in &edges {
            adj[u].push(v);
        }
        prop_assert_eq!(got, (n - common::brute_matching(&adj, n)).max(1));

        if !edges.is_empty() {
            let mut mask = RemovalMask::new(&g);
            mask.remove_edge(pick % edges.len()).unwrap();
            let after = driver_nodes_mit(&g, &mask).unwrap();
            prop_assert!(after >= got);
        }
    }

    /// Every generator is deterministic in its seed and emits a simple
    /// graph with the requested edge budget.
    #[test]
    fn generators_deterministic_and_simple(
        model in prop::sample::select(vec![
            ModelId::Er, ModelId::SwNw, ModelId::SwWs, ModelId::Rt, ModelId::Rh,
            ModelId::Eh, ModelId::Ba, ModelId::Sf, ModelId::Os, ModelId::Qs,
        ]),
        n in 12usize..60,
        seed in 0u64..1000,
    ) {
        let k = 4.0;
        let directed = model == ModelId::Qs;
        let config = GeneratorConfig::new(model, n, k).directed(directed).seed(seed);
        let a = generate(&config).unwrap();
        let b = generate(&config).unwrap();
        prop_assert_eq!(a.edges(), b.edges());

        let mut seen = std::collections::HashSet::new();
        for &(u, v) in a.edges() {
            prop_assert!(u != v, "self loop {}-{}", u, v);
            prop_assert!(u < n && v < n);
            let key = if directed || u < v { (u, v) } else { (v, u) };
            prop_assert!(seen.insert(key), "duplicate edge {:?}", key);
        }
        // Undirected models hit the edge budget M = floor(N k / 2), except
        // preferential attachment whose count follows from its growth
        // process: a seed clique of m0 = max(m, 2) nodes plus m edges per
        // arriving node.
        if !directed {
            let want = if model == ModelId::Ba {
                let m = (k / 2.0).round() as usize;
                let m0 = m.max(2);
                m0 * (m0 - 1) / 2 + (n - m0) * m
            } else {
                (n as f64 * k / 2.0).floor() as usize
            };
            prop_assert_eq!(a.edge_count(), want);
        }
    }

    /// The symmetric eigensolver reconstructs its input: A = Q diag(l) Q^T.
    #[test]
    fn eigensolver_reconstructs_input(vals in prop::collection::vec(-5.0f64..5.0, 6)) {
        // Symmetric 3x3 from the 6 free entries.
        let n = 3;
        let a = vec![
            vals[0], vals[1], vals[2],
            vals[1], vals[3], vals[4],
            vals[2], vals[4], vals[5],
        ];
        let (lambda, q) = symmetric_eigen(&a, n);
        for i in 0..n {
            for j in 0..n {
                let mut rec = 0.0;
                for k in 0..n {
                    rec += q[i * n + k] * lambda[k] * q[j * n + k];
                }
                prop_assert!((rec - a[i * n + j]).abs() <= 1e-8, "entry ({}, {})", i, j);
            }
        }
        // Eigenvalues are reported in descending order.
        for w in lambda.windows(2) {
            prop_assert!(w[0] >= w[1] - 1e-12);
        }
    }

    /// Probability-weighted attack scores form a distribution and favor
    /// high-degree nodes when fully degree-weighted.
    #[test]
    fn weighted_probabilities_form_distribution((n, edges) in small_graph(8)) {
        let g = Graph::new(n, false, edges).unwrap();
        let mask = RemovalMask::new(&g);
        let mut plan = AttackPlan::new(StrategyId::WeightedProb, TargetKind::Node);
        plan.alpha = (1.0, 0.0);
        let ids: Vec<usize> = (0..n).collect();
        let probs = weighted_probabilities(&plan, &g, &mask, &ids).unwrap();
        let total: f64 = probs.iter().sum();
        prop_assert!((total - 1.0).abs() <= 1e-9, "sum {}", total);
        prop_assert!(probs.iter().all(|&p| p >= 0.0));
        // With pure degree weighting, a strictly higher-degree node never
        // gets a lower probability.
        let deg: Vec<usize> = (0..n).map(|u| g.neighbors_undirected(u).count()).collect();
        for u in 0..n {
            for v in 0..n {
                if deg[u] > deg[v] {
                    prop_assert!(probs[u] >= probs[v] - 1e-12);
                }
            }
        }
    }

    /// Fractional ranks are a permutation-of-positions average: they sum
    /// to n(n+1)/2 and respect the value order.
    #[test]
    fn ranks_sum_and_order(values in prop::collection::vec(-10.0f64..10.0, 1..8)) {
        let ranks = rank_values(&values, true, 1e-9);
        let n = values.len();
        let total: f64 = ranks.iter().sum();
        prop_assert!((total - (n * (n + 1)) as f64 / 2.0).abs() <= 1e-9);
        for i in 0..n {
            for j in 0..n {
                if values[i] > values[j] + 1e-9 {
                    prop_assert!(ranks[i] < ranks[j]);
                }
            }
        }
    }

    /// A degree-preserving swap keeps every node degree and the graph
    /// simple.
    #[test]
    fn swap_preserves_degrees(n in 6usize..30, seed in 0u64..500) {
        let g = generate(&GeneratorConfig::new(ModelId::Er, n, 3.0).seed(seed)).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let Ok(SwapProposal { e1, e2, new1, new2 }) =
            degree_preserving_swap(g.edges(), false, &mut rng, 200)
        else {
            return Ok(()); // stagnation is legal on tiny dense graphs
        };
        let mut edges = g.edges().to_vec();
        edges[e1] = new1;
        edges[e2] = new2;
        let swapped = Graph::new(n, false, edges).unwrap(); // rejects loops/dups
        let degrees = |g: &Graph| {
            let mut d = vec![0usize; g.node_count()];
            for &(u, v) in g.edges() {
                d[u] += 1;
                d[v] += 1;
            }
            d
        };
        prop_assert_eq!(degrees(&g), degrees(&swapped));
    }

    /// Running a fixed removal sequence is pure: identical traces on
    /// repeat, and the surviving count falls by one per step.
    #[test]
    fn fixed_sequences_are_pure((n, edges) in small_graph(8)) {
        let g = Graph::new(n, false, edges).unwrap();
        let order: Vec<usize> = (0..n).rev().collect();
        let which = MeasureSet::all_for(false);
        let a = run_sequence(&g, TargetKind::Node, &order, which).unwrap();
        let b = run_sequence(&g, TargetKind::Node, &order, which).unwrap();
        prop_assert_eq!(&a.samples, &b.samples);
        for (i, s) in a.samples.iter().enumerate() {
            prop_assert_eq!(s.surviving, n - i);
        }
    }

    /// Adaptive attacks only ever hit alive targets, and each target once.
    #[test]
    fn attacks_hit_each_target_once(
        (n, edges) in small_graph(8),
        strategy in prop::sample::select(vec![
            StrategyId::Random, StrategyId::Mdta, StrategyId::Mbta,
            StrategyId::Damage, StrategyId::WeightedProb,
        ]),
        seed in 0u64..100,
    ) {
        let g = Graph::new(n, false, edges).unwrap();
        let plan = AttackPlan::new(strategy, TargetKind::Node).with_seed(seed);
        let trace = netrobust::engine::run_trace(
            &g, &plan, MeasureSet::connectivity(), netrobust::engine::StopRule::Full,
        ).unwrap();
        let mut seen = std::collections::HashSet::new();
        for &t in &trace.sequence {
            prop_assert!(t < n);
            prop_assert!(seen.insert(t), "target {} attacked twice", t);
        }
        prop_assert_eq!(trace.sequence.len(), n);
    }
}
