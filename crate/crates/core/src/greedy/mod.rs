//! Heavy and light greedy path construction.
//!
//! Starting from `u0`, each step looks at the unvisited neighbors `v_i` of
//! the current end, with `alpha_i` the fraction of the remaining
//! `k`-vertex completions that go through `v_i` in the graph with the path
//! so far removed. The heavy rule takes the neighbor maximizing
//! `w(end, v_i) + log2(alpha_i)/2`, the light rule the one minimizing
//! `w(end, v_i) - log2(alpha_i)/2`. A neighbor with `alpha_i = 0` scores
//! `-inf` (heavy) or `+inf` (light) and is never taken, so the output always
//! has exactly `k` vertices. Ties go to the smallest neighbor id.
//!
//! Before the first step a degree-3 start vertex loses its incident edge of
//! smallest `alpha` (see [`preprocess_g_prime`]); this costs at most a factor
//! 3 in the path count.

mod hamilton;
mod oracle;
mod trace;

pub use hamilton::run_greedy_hamilton;
pub use oracle::{brute_force_extreme_hamilton, brute_force_extreme_path, ORACLE_PATH_LIMIT};
pub use trace::{Candidate, GreedyTrace, StartEdgeRecord, StepRecord};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::counting::{estimate_paths_sampling_in_residual, PathSearch};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, WeightAssignment};
use crate::rng::RngSeed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GreedyMode {
    Heavy,
    Light,
}

impl GreedyMode {
    /// Score of an edge of weight `w` whose continuation fraction has the
    /// given `log2`. `-inf` for `log2_alpha` maps to `-inf` (heavy) or
    /// `+inf` (light).
    pub fn score(self, w: f64, log2_alpha: f64) -> f64 {
        match self {
            GreedyMode::Heavy => w + log2_alpha / 2.0,
            GreedyMode::Light => w - log2_alpha / 2.0,
        }
    }

    /// Whether score `a` strictly beats score `b`.
    pub fn beats(self, a: f64, b: f64) -> bool {
        match self {
            GreedyMode::Heavy => a > b,
            GreedyMode::Light => a < b,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GreedyMode::Heavy => "heavy",
            GreedyMode::Light => "light",
        }
    }
}

impl fmt::Display for GreedyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GreedyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heavy" => Ok(GreedyMode::Heavy),
            "light" => Ok(GreedyMode::Light),
            _ => Err(Error::InvalidParameter(format!("mode must be heavy or light, got {s:?}"))),
        }
    }
}

/// Where the greedy gets its `alpha` values from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountOracle {
    /// Exact backtracking counts.
    Exact,
    /// Sampled counts. Whether a neighbor has any completion at all is
    /// still decided exactly, so a dead end is never taken.
    Sampling { walks: usize, groups: usize, seed: RngSeed },
}

/// Sum of the edge weights along `p`.
pub fn path_weight(p: &Path, w: &WeightAssignment) -> Result<f64> {
    p.edges().map(|e| w.weight(e.0, e.1)).sum()
}

fn check_weights(g: &Graph, w: &WeightAssignment) -> Result<()> {
    if w.covers(g) {
        return Ok(());
    }
    for e in g.edges() {
        w.weight(e.0, e.1)?;
    }
    Err(Error::InvalidParameter("weights defined on edges outside the graph".into()))
}

/// `log2 alpha_i` for each candidate neighbor of the current path end, with
/// the path's vertices blocked in `search`. `None` marks a neighbor with no
/// completion of `len` vertices.
fn candidate_log2_alphas(
    search: &mut PathSearch<'_>,
    g: &Graph,
    removed: &[usize],
    candidates: &[usize],
    len: usize,
    oracle: &CountOracle,
    stream: u64,
) -> Result<Vec<Option<f64>>> {
    let counts: Vec<f64> = match oracle {
        CountOracle::Exact => candidates
            .iter()
            .map(|&v| search.count_from(v, len).map(|c| c as f64))
            .collect::<Result<_>>()?,
        CountOracle::Sampling { walks, groups, seed } => candidates
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if !search.exists_from(v, len) {
                    return Ok(0.0);
                }
                let sub = seed.with_stream(seed.stream.wrapping_add(stream * 4 + i as u64));
                let est = estimate_paths_sampling_in_residual(g, removed, v, len, *walks, *groups, sub)?;
                // A live neighbor has at least one completion.
                Ok(est.estimate.max(1.0))
            })
            .collect::<Result<_>>()?,
    };
    let total: f64 = counts.iter().sum();
    Ok(counts
        .into_iter()
        .map(|c| (c > 0.0).then(|| c.log2() - total.log2()))
        .collect())
}

/// `G'`: if `u0` has degree 3, drop its incident edge with the smallest
/// `alpha` (smallest neighbor id on ties); otherwise `g` unchanged.
/// Guarantees `f(G', u0, k) >= f(G, u0, k) / 3`.
pub fn preprocess_g_prime(g: &Graph, u0: usize, k: usize) -> Result<Graph> {
    preprocess_with(g, u0, k, &CountOracle::Exact).map(|(g, _)| g)
}

/// [`preprocess_g_prime`] with a chosen oracle; also returns the removed
/// edge, if any.
pub fn preprocess_with(g: &Graph, u0: usize, k: usize, oracle: &CountOracle) -> Result<(Graph, Option<Edge>)> {
    g.check_subcubic()?;
    g.check_vertex(u0)?;
    if k < 1 || k > g.n() {
        return Err(Error::InvalidLength { k, n: g.n() });
    }
    let mut search = PathSearch::new(g);
    if !search.exists_from(u0, k) {
        return Err(Error::NoSuchPath { from: u0, k });
    }
    if g.degree(u0) < 3 || k < 2 {
        return Ok((g.clone(), None));
    }
    search.block(u0);
    let neighbors = g.neighbors(u0).to_vec();
    let alphas = candidate_log2_alphas(&mut search, g, &[u0], &neighbors, k - 1, oracle, u64::MAX / 8)?;
    let key = |i: usize| alphas[i].unwrap_or(f64::NEG_INFINITY);
    let drop = (1..neighbors.len()).fold(0, |best, i| if key(i) < key(best) { i } else { best });
    let v = neighbors[drop];
    Ok((g.without_edge(u0, v), Some(Edge::new(u0, v))))
}

/// Runs the heavy or light greedy for a `k`-vertex path from `u0`.
pub fn run_greedy(
    g: &Graph,
    w: &WeightAssignment,
    u0: usize,
    k: usize,
    mode: GreedyMode,
    oracle: &CountOracle,
) -> Result<(Path, GreedyTrace)> {
    check_weights(g, w)?;
    let (gp, removed_edge) = preprocess_with(g, u0, k, oracle)?;

    let mut search = PathSearch::new(&gp);
    let mut path = vec![u0];
    search.block(u0);
    let mut steps = Vec::with_capacity(k.saturating_sub(1));
    while path.len() < k {
        let end = *path.last().expect("nonempty");
        let candidates: Vec<usize> = gp.neighbors(end).iter().copied().filter(|&v| !search.is_blocked(v)).collect();
        let len = k - path.len();
        let alphas = candidate_log2_alphas(&mut search, &gp, &path, &candidates, len, oracle, steps.len() as u64)?;
        let step = choose(mode, end, &candidates, &alphas, w, steps.len())?;
        search.block(step.chosen);
        path.push(step.chosen);
        steps.push(step);
    }

    let path = Path::from_vec_unchecked(path);
    let weight = path_weight(&path, w)?;
    let trace = GreedyTrace::new(mode, u0, k, removed_edge, steps, path.clone(), weight);
    Ok((path, trace))
}

/// Scores the candidates and picks the extreme admissible one.
pub(crate) fn choose(
    mode: GreedyMode,
    end: usize,
    candidates: &[usize],
    log2_alphas: &[Option<f64>],
    w: &WeightAssignment,
    index: usize,
) -> Result<StepRecord> {
    let mut records = Vec::with_capacity(candidates.len());
    let mut best: Option<(usize, f64)> = None;
    for (&v, &la) in candidates.iter().zip(log2_alphas) {
        let weight = w.weight(end, v)?;
        let log2_alpha = la.unwrap_or(f64::NEG_INFINITY);
        let score = mode.score(weight, log2_alpha);
        let admissible = la.is_some();
        if admissible && best.is_none_or(|(_, s)| mode.beats(score, s)) {
            best = Some((v, score));
        }
        records.push(Candidate {
            vertex: v,
            weight,
            log2_alpha,
            score,
            admissible,
        });
    }
    let (chosen, _) = best.ok_or(Error::NoSuchPath { from: end, k: 2 })?;
    Ok(StepRecord {
        index,
        end,
        candidates: records,
        chosen,
    })
}
