use rand::Rng;
use serde::Serialize;

use super::check_length;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::RngSeed;

/// A sampled estimate of a path count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountEstimate {
    /// Median of the group means.
    pub estimate: f64,
    /// Mean over all walks; an unbiased estimate of the count.
    pub mean: f64,
    pub std_error: f64,
    pub walks: usize,
    pub groups: usize,
    pub group_min: f64,
    pub group_max: f64,
}

/// Sequential importance sampling of `f(G, u0, k)`.
///
/// Each walk grows a uniformly random self-avoiding walk from `u0`,
/// multiplying its weight by the number of unvisited neighbors available at
/// every step. A walk that reaches `k` vertices contributes its weight, one
/// that gets stuck contributes 0; the weight's expectation is exactly the
/// path count. Walks are split into `groups` contiguous groups and the
/// reported estimate is the median of the group means.
pub fn estimate_paths_sampling(
    g: &Graph,
    u0: usize,
    k: usize,
    walks: usize,
    groups: usize,
    seed: RngSeed,
) -> Result<CountEstimate> {
    estimate_paths_sampling_in_residual(g, &[], u0, k, walks, groups, seed)
}

pub fn estimate_paths_sampling_in_residual(
    g: &Graph,
    removed: &[usize],
    u0: usize,
    k: usize,
    walks: usize,
    groups: usize,
    seed: RngSeed,
) -> Result<CountEstimate> {
    g.check_vertex(u0)?;
    check_length(g, k)?;
    if groups < 1 || walks < groups {
        return Err(Error::InvalidParameter(format!(
            "need walks >= groups >= 1, got walks = {walks}, groups = {groups}"
        )));
    }
    let mut rng = seed.rng();
    let mut visited = vec![false; g.n()];
    for &r in removed {
        g.check_vertex(r)?;
        visited[r] = true;
    }
    let start_blocked = visited[u0];
    let mut path = Vec::with_capacity(k);
    let mut candidates = Vec::with_capacity(3);

    let samples: Vec<f64> = (0..walks)
        .map(|_| {
            if start_blocked {
                return 0.0;
            }
            path.clear();
            path.push(u0);
            visited[u0] = true;
            let mut weight = 1.0;
            while path.len() < k {
                let end = *path.last().expect("nonempty");
                candidates.clear();
                candidates.extend(g.neighbors(end).iter().copied().filter(|&v| !visited[v]));
                if candidates.is_empty() {
                    weight = 0.0;
                    break;
                }
                weight *= candidates.len() as f64;
                let next = candidates[rng.gen_range(0..candidates.len())];
                visited[next] = true;
                path.push(next);
            }
            for &v in &path {
                visited[v] = false;
            }
            weight
        })
        .collect();

    let n = walks as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = if walks > 1 {
        samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };

    let base = walks / groups;
    let extra = walks % groups;
    let mut group_means = Vec::with_capacity(groups);
    let mut offset = 0;
    for gi in 0..groups {
        let size = base + usize::from(gi < extra);
        let slice = &samples[offset..offset + size];
        group_means.push(slice.iter().sum::<f64>() / size as f64);
        offset += size;
    }
    group_means.sort_by(f64::total_cmp);
    let mid = groups / 2;
    let estimate = if groups % 2 == 1 {
        group_means[mid]
    } else {
        (group_means[mid - 1] + group_means[mid]) / 2.0
    };

    Ok(CountEstimate {
        estimate,
        mean,
        std_error: (var / n).sqrt(),
        walks,
        groups,
        group_min: group_means[0],
        group_max: group_means[groups - 1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_paths_exact;
    use crate::graph::{binary_tree, complete_graph, path_graph, random_subcubic};

    #[test]
    fn forced_path_is_exact() {
        let (g, end) = path_graph(5);
        let e = estimate_paths_sampling(&g, end, 5, 37, 5, RngSeed::new(1)).unwrap();
        assert_eq!(e.estimate, 1.0);
        assert_eq!(e.std_error, 0.0);
    }

    #[test]
    fn tree_and_k4_close_to_exact() {
        let (t, root) = binary_tree(8);
        let exact = count_paths_exact(&t, root, 9).unwrap().to_u128().unwrap() as f64;
        assert_eq!(exact, 256.0);
        let e = estimate_paths_sampling(&t, root, 9, 10_000, 10, RngSeed::new(2)).unwrap();
        assert!((e.estimate - exact).abs() <= 0.1 * exact);

        let k4 = complete_graph(4);
        let e = estimate_paths_sampling(&k4, 0, 4, 10_000, 10, RngSeed::new(3)).unwrap();
        assert!((e.estimate - 6.0).abs() <= 0.6);
    }

    #[test]
    fn unbiased_on_random_subcubic() {
        for s in 0..8 {
            let g = random_subcubic(12, 0.8, RngSeed::new(100 + s));
            let k = 8;
            let exact = count_paths_exact(&g, 0, k).unwrap().to_u128().unwrap() as f64;
            let e = estimate_paths_sampling(&g, 0, k, 100_000, 20, RngSeed::new(s)).unwrap();
            if e.std_error == 0.0 {
                assert_eq!(e.mean, exact);
            } else {
                assert!((e.mean - exact).abs() <= 3.0 * e.std_error, "seed {s}: {} vs {exact}", e.mean);
            }
        }
    }

    #[test]
    fn dead_walks_give_zero() {
        let (g, end) = path_graph(3);
        let e = estimate_paths_sampling_in_residual(&g, &[1], end, 2, 10, 2, RngSeed::new(0)).unwrap();
        assert_eq!(e.estimate, 0.0);
    }

    #[test]
    fn parameter_validation() {
        let k4 = complete_graph(4);
        assert!(estimate_paths_sampling(&k4, 0, 4, 3, 4, RngSeed::new(0)).is_err());
        assert!(estimate_paths_sampling(&k4, 0, 4, 3, 0, RngSeed::new(0)).is_err());
        assert!(estimate_paths_sampling(&k4, 0, 0, 3, 1, RngSeed::new(0)).is_err());
    }
}
