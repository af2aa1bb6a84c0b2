//! Exhaustive search for the true extremes, used to validate the greedy.

use super::{check_weights, path_weight, GreedyMode};
use crate::counting::{count_hamilton_cycles, count_paths_budgeted};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, WeightAssignment};

/// Largest number of candidate paths or cycles the oracles will enumerate.
pub const ORACLE_PATH_LIMIT: u128 = 10_000_000;

struct Best {
    mode: GreedyMode,
    path: Option<Vec<usize>>,
    weight: f64,
}

impl Best {
    fn new(mode: GreedyMode) -> Self {
        Best { mode, path: None, weight: 0.0 }
    }

    /// Keeps the first of equal-weight candidates; the searches visit
    /// candidates in lexicographic order.
    fn offer(&mut self, path: &[usize], weight: f64) {
        if self.path.is_none() || self.mode.beats(weight, self.weight) {
            self.path = Some(path.to_vec());
            self.weight = weight;
        }
    }
}

/// The heaviest (`Heavy`) or lightest (`Light`) path of `k` vertices from
/// `u0`, lexicographically smallest among equal weights.
pub fn brute_force_extreme_path(g: &Graph, w: &WeightAssignment, u0: usize, k: usize, mode: GreedyMode) -> Result<Path> {
    check_weights(g, w)?;
    let budget = 64 * ORACLE_PATH_LIMIT as u64;
    let f = match count_paths_budgeted(g, u0, k, budget) {
        Ok(f) => f.to_u128().unwrap_or(u128::MAX),
        Err(Error::BudgetExceeded(_)) => u128::MAX,
        Err(e) => return Err(e),
    };
    if f == 0 {
        return Err(Error::NoSuchPath { from: u0, k });
    }
    if f > ORACLE_PATH_LIMIT {
        return Err(Error::OracleTooLarge(if f == u128::MAX { "too many".into() } else { f.to_string() }));
    }

    fn go(g: &Graph, w: &WeightAssignment, path: &mut Vec<usize>, on: &mut [bool], weight: f64, k: usize, best: &mut Best) {
        if path.len() == k {
            best.offer(path, weight);
            return;
        }
        let end = *path.last().expect("nonempty");
        for &v in g.neighbors(end) {
            if !on[v] {
                let ew = w.get(end, v).expect("weights checked");
                on[v] = true;
                path.push(v);
                go(g, w, path, on, weight + ew, k, best);
                path.pop();
                on[v] = false;
            }
        }
    }

    let mut best = Best::new(mode);
    let mut on = vec![false; g.n()];
    on[u0] = true;
    go(g, w, &mut vec![u0], &mut on, 0.0, k, &mut best);
    let path = Path::from_vec_unchecked(best.path.expect("f >= 1"));
    debug_assert_eq!(path_weight(&path, w).ok(), Some(best.weight));
    Ok(path)
}

/// The heaviest or lightest Hamilton cycle, as a path from vertex 0 plus its
/// cycle weight (closing edge included).
pub fn brute_force_extreme_hamilton(g: &Graph, w: &WeightAssignment, mode: GreedyMode) -> Result<(Path, f64)> {
    check_weights(g, w)?;
    let h = count_hamilton_cycles(g)?.to_u128().unwrap_or(u128::MAX);
    if h == 0 {
        return Err(Error::NoHamiltonCycle);
    }
    if h > ORACLE_PATH_LIMIT {
        return Err(Error::OracleTooLarge(h.to_string()));
    }

    fn go(g: &Graph, w: &WeightAssignment, path: &mut Vec<usize>, on: &mut [bool], weight: f64, best: &mut Best) {
        let end = *path.last().expect("nonempty");
        if path.len() == g.n() {
            if let Some(close) = w.get(end, path[0]) {
                best.offer(path, weight + close);
            }
            return;
        }
        for &v in g.neighbors(end) {
            if !on[v] {
                let ew = w.get(end, v).expect("weights checked");
                on[v] = true;
                path.push(v);
                go(g, w, path, on, weight + ew, best);
                path.pop();
                on[v] = false;
            }
        }
    }

    let mut best = Best::new(mode);
    let mut on = vec![false; g.n()];
    on[0] = true;
    go(g, w, &mut vec![0], &mut on, 0.0, &mut best);
    let weight = best.weight;
    Ok((Path::from_vec_unchecked(best.path.expect("h >= 1")), weight))
}
