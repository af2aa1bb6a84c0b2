use super::PathCount;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path};

/// Counts Hamilton cycles that contain a fixed path as a segment.
///
/// Traversing such a cycle from the path's start in the path's direction
/// gives exactly one Hamilton path extending it and ending next to the start,
/// so cycles are counted by extending the path from its far end. The edges
/// of the fixed path are forced; nothing is enumerated and filtered.
pub(crate) struct HamiltonSearch<'g> {
    g: &'g Graph,
    visited: Vec<bool>,
    start: usize,
    len: usize,
}

impl<'g> HamiltonSearch<'g> {
    /// `path` must be a valid path with at least two vertices.
    pub fn new(g: &'g Graph, path: &[usize]) -> Self {
        debug_assert!(path.len() >= 2);
        let mut visited = vec![false; g.n()];
        for &v in path {
            visited[v] = true;
        }
        HamiltonSearch {
            g,
            visited,
            start: path[0],
            len: path.len(),
        }
    }

    pub fn push(&mut self, v: usize) {
        debug_assert!(!self.visited[v]);
        self.visited[v] = true;
        self.len += 1;
    }

    pub fn is_visited(&self, v: usize) -> bool {
        self.visited[v]
    }

    /// Number of Hamilton cycles through the current path, whose last
    /// vertex is `end`.
    pub fn count(&mut self, end: usize) -> u128 {
        if self.g.n() < 3 {
            return 0;
        }
        self.extend(end)
    }

    /// Count for the current path extended by the unvisited vertex `next`.
    pub fn count_with(&mut self, end: usize, next: usize) -> u128 {
        debug_assert!(self.g.has_edge(end, next) && !self.visited[next]);
        if self.g.n() < 3 || !self.feasible_step(end, next) {
            return 0;
        }
        self.visited[next] = true;
        self.len += 1;
        let c = self.extend(next);
        self.visited[next] = false;
        self.len -= 1;
        c
    }

    fn extend(&mut self, end: usize) -> u128 {
        let g = self.g;
        if self.len == g.n() {
            return u128::from(g.has_edge(end, self.start));
        }
        let mut total = 0;
        for &v in g.neighbors(end) {
            if !self.visited[v] && self.feasible_step(end, v) {
                self.visited[v] = true;
                self.len += 1;
                total += self.extend(v);
                self.visited[v] = false;
                self.len -= 1;
            }
        }
        total
    }

    /// After moving the end from `end` to `next`, `end` becomes interior.
    /// Each still-unvisited neighbor of `end` must keep two usable
    /// neighbors: unvisited ones, the new end, or the start.
    fn feasible_step(&self, end: usize, next: usize) -> bool {
        let g = self.g;
        g.neighbors(end).iter().all(|&x| {
            if x == next || self.visited[x] {
                return true;
            }
            // `next` is not marked yet, so it counts as unvisited here.
            let usable = g.neighbors(x).iter().filter(|&&y| !self.visited[y] || y == self.start).count();
            usable >= 2
        })
    }
}

/// Number of distinct Hamilton cycles of `g`, up to rotation and reflection.
pub fn count_hamilton_cycles(g: &Graph) -> Result<PathCount> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!("Hamilton cycles need n >= 3, got {}", g.n())));
    }
    Ok((directed_cycles_from(g, 0) / 2).into())
}

/// Directed Hamilton cycles starting at `start`: each undirected cycle twice.
fn directed_cycles_from(g: &Graph, start: usize) -> u128 {
    g.neighbors(start)
        .iter()
        .map(|&v| HamiltonSearch::new(g, &[start, v]).count(v))
        .sum()
}

/// `h(G, P)`: the number of Hamilton cycles of `g` that contain every edge
/// of `path`. A single-vertex path lies on every Hamilton cycle.
pub fn count_hamilton_through(g: &Graph, path: &Path) -> Result<PathCount> {
    let p = Path::new(g, path.vertices().to_vec())?;
    if p.len() == 1 {
        return count_hamilton_cycles(g);
    }
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!("Hamilton cycles need n >= 3, got {}", g.n())));
    }
    Ok(HamiltonSearch::new(g, p.vertices()).count(p.end()).into())
}
