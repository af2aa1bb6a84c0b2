//! Heavy and light greedy paths of prescribed length in subcubic graphs
//! with i.i.d. exp(1) edge weights.
//!
//! The greedy rules steer by path counts: at each step the heavy rule takes
//! the neighbor maximizing `w + log2(alpha)/2` and the light rule the one
//! minimizing `w - log2(alpha)/2`, where `alpha` is the share of the
//! remaining paths that go through that neighbor. On average this gains
//! `log2 f / 2` over a blind walk, where `f` is the number of paths.
//!
//! ```
//! use heavylight::{binary_tree, count_paths_exact, run_greedy, sample_weights, CountOracle, GreedyMode, RngSeed};
//!
//! let (tree, root) = binary_tree(4);
//! assert_eq!(count_paths_exact(&tree, root, 5).unwrap().to_u128(), Some(16));
//!
//! let w = sample_weights(&tree, RngSeed::new(1));
//! let (path, trace) = run_greedy(&tree, &w, root, 5, GreedyMode::Heavy, &CountOracle::Exact).unwrap();
//! assert_eq!(path.len(), 5);
//! assert_eq!(trace.choice_steps, 4);
//! ```

pub mod closed_form;
pub mod counting;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod greedy;
pub mod rng;

pub use closed_form::{bound_report, BoundReport};
pub use counting::{
    alpha_split, count_hamilton_cycles, count_hamilton_through, count_paths_budgeted, count_paths_exact, estimate_paths_sampling,
    AlphaSplit, CountEstimate, PathCount,
};
pub use error::{Error, Result};
pub use experiments::{run_campaign, run_hamilton_campaign, ExperimentConfig, InstanceSpec, TrialStats};
pub use graph::{
    binary_tree, complete_graph, cycle_graph, path_graph, random_cubic, read_edge_list, sample_weights, write_edge_list, Edge, Graph,
    Path, WeightAssignment,
};
pub use greedy::{
    brute_force_extreme_hamilton, brute_force_extreme_path, path_weight, preprocess_g_prime, run_greedy, run_greedy_hamilton,
    CountOracle, GreedyMode, GreedyTrace,
};
pub use rng::RngSeed;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/greedy.md")]
    mod greedy {}
    #[doc = include_str!("../../../book/src/hamilton.md")]
    mod hamilton {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
