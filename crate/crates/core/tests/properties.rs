mod common;

use proptest::prelude::*;

use heavylight::counting::{count_paths_in_residual, path_exists};
use heavylight::experiments::{run_campaign, ExperimentConfig, InstanceSpec};
use heavylight::graph::random_subcubic;
use heavylight::{
    brute_force_extreme_path, count_hamilton_cycles, count_hamilton_through, count_paths_exact, estimate_paths_sampling,
    path_weight, random_cubic, read_edge_list, run_greedy, sample_weights, write_edge_list, CountOracle, Graph, GreedyMode, Path,
    RngSeed,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_subcubic(n, p, RngSeed::new(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recursion_identity(g in small_graph(), u0 in 0usize..10, k in 2usize..=10) {
        let (u0, k) = (u0 % g.n(), k.min(g.n()).max(1));
        prop_assume!(k >= 2);
        let f = count_paths_exact(&g, u0, k).unwrap();
        let residual = g.without_vertex(u0);
        let sum: u128 = g.neighbors(u0).iter().map(|&v| count_paths_exact(&residual, v, k - 1).unwrap().to_u128().unwrap()).sum();
        prop_assert_eq!(f.to_u128().unwrap(), sum);
        prop_assert_eq!(f.to_u128().unwrap(), common::naive_path_count(&g, u0, k));
        for &v in g.neighbors(u0) {
            prop_assert_eq!(count_paths_in_residual(&g, &[u0], v, k - 1).unwrap(), count_paths_exact(&residual, v, k - 1).unwrap());
        }
    }

    #[test]
    fn count_is_at_most_three_times_powers_of_two(g in small_graph(), u0 in 0usize..10, k in 1usize..=10) {
        let (u0, k) = (u0 % g.n(), k.min(g.n()));
        let f = count_paths_exact(&g, u0, k).unwrap().to_u128().unwrap();
        let cap = if k == 1 { 1 } else { 3u128 << (k - 2) };
        prop_assert!(f <= cap, "f = {} > {}", f, cap);
        prop_assert_eq!(f > 0, path_exists(&g, &[], u0, k).unwrap());
    }

    #[test]
    fn greedy_output_is_valid_and_sandwiched(g in small_graph(), u0 in 0usize..10, k in 1usize..=10, seed in any::<u64>()) {
        let (u0, k) = (u0 % g.n(), k.min(g.n()));
        prop_assume!(!count_paths_exact(&g, u0, k).unwrap().is_zero());
        let w = sample_weights(&g, RngSeed::new(seed));
        let max = path_weight(&brute_force_extreme_path(&g, &w, u0, k, GreedyMode::Heavy).unwrap(), &w).unwrap();
        let min = path_weight(&brute_force_extreme_path(&g, &w, u0, k, GreedyMode::Light).unwrap(), &w).unwrap();
        for mode in [GreedyMode::Heavy, GreedyMode::Light] {
            let (p, trace) = run_greedy(&g, &w, u0, k, mode, &CountOracle::Exact).unwrap();
            prop_assert_eq!(p.len(), k);
            prop_assert_eq!(p.start(), u0);
            prop_assert!(Path::new(&g, p.vertices().to_vec()).is_ok());
            prop_assert!(min - 1e-12 <= trace.weight && trace.weight <= max + 1e-12);
            prop_assert!(trace.choice_steps < k.max(1));
        }
    }

    #[test]
    fn edge_list_round_trip(g in small_graph(), seed in any::<u64>(), weighted in any::<bool>()) {
        // An edgeless file cannot say whether it is weighted.
        let w = (weighted && g.edge_count() > 0).then(|| sample_weights(&g, RngSeed::new(seed)));
        let text = write_edge_list(&g, w.as_ref());
        let (g2, w2) = read_edge_list(&text).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(&w2, &w);
        prop_assert_eq!(write_edge_list(&g2, w2.as_ref()), text);
    }
}

/// `h(G, P) = sum_i h(G, P + w_i)` over the unvisited neighbors of the end.
#[test]
fn hamilton_recursion() {
    for seed in 0..15 {
        let g = random_cubic(10, RngSeed::new(seed)).unwrap();
        let h = count_hamilton_cycles(&g).unwrap().to_u128().unwrap();
        let mut stack = vec![vec![0usize]];
        while let Some(p) = stack.pop() {
            if p.len() >= g.n() {
                continue;
            }
            let end = *p.last().unwrap();
            let children: Vec<Vec<usize>> = g
                .neighbors(end)
                .iter()
                .filter(|v| !p.contains(v))
                .map(|&v| [p.clone(), vec![v]].concat())
                .collect();
            let through = |q: &[usize]| count_hamilton_through(&g, &Path::new(&g, q.to_vec()).unwrap()).unwrap().to_u128().unwrap();
            let sum: u128 = children.iter().map(|c| through(c)).sum();
            // Through a single vertex every cycle is counted once per direction.
            let parent = if p.len() == 1 { 2 * h } else { through(&p) };
            assert_eq!(sum, parent, "seed {seed} path {p:?}");
            if p.len() < 4 {
                stack.extend(children);
            }
        }
    }
}

/// Heavy and light bounds on complete binary trees of depth 6 to 10.
#[test]
fn tree_bounds_across_depths() {
    for depth in 6..=10u32 {
        for mode in [GreedyMode::Heavy, GreedyMode::Light] {
            let cfg = ExperimentConfig {
                name: format!("tree-d{depth}"),
                instance: InstanceSpec::Tree { depth },
                start: 0,
                k: depth as usize + 1,
                mode,
                oracle: CountOracle::Exact,
                trials: 1000,
                weight_seed: depth as u64,
            };
            let r = run_campaign(&cfg).unwrap();
            assert_eq!(r.log2f, depth as f64);
            assert!(r.verdict.pass, "depth {depth} {mode}: {}", r.verdict.summary_line());
        }
    }
}

/// The sampling estimator's grand mean is unbiased on a cubic graph.
#[test]
fn sampling_tracks_exact_count() {
    let g = random_cubic(16, RngSeed::new(2)).unwrap();
    for k in [6, 10, 14] {
        let exact = count_paths_exact(&g, 0, k).unwrap().to_u128().unwrap() as f64;
        let est = estimate_paths_sampling(&g, 0, k, 40_000, 20, RngSeed::new(k as u64)).unwrap();
        assert!((est.mean - exact).abs() <= 4.0 * est.std_error, "k={k}: {} vs {exact}", est.mean);
    }
}

/// Greedy with sampled alphas still outputs valid k-vertex paths.
#[test]
fn sampling_oracle_greedy_is_valid() {
    let g = random_cubic(20, RngSeed::new(9)).unwrap();
    let oracle = CountOracle::Sampling {
        walks: 200,
        groups: 4,
        seed: RngSeed::new(1),
    };
    for s in 0..10 {
        let w = sample_weights(&g, RngSeed::new(s));
        let (p, _) = run_greedy(&g, &w, 0, 16, GreedyMode::Heavy, &oracle).unwrap();
        assert_eq!(p.len(), 16);
        assert!(Path::new(&g, p.into_vec()).is_ok());
    }
}
