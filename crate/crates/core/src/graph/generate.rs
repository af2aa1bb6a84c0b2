use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::RngSeed;

/// Complete binary tree of the given depth, labeled in BFS order: the root is
/// 0 and vertex `i` has children `2i + 1` and `2i + 2`.
pub fn binary_tree(depth: u32) -> (Graph, usize) {
    let n = (1usize << (depth + 1)) - 1;
    let edges = (1..n).map(|v| ((v - 1) / 2, v));
    (Graph::new(n, edges).expect("tree edges are simple"), 0)
}

/// Path `0 - 1 - ... - (n-1)`, returned with its endpoint 0.
pub fn path_graph(n: usize) -> (Graph, usize) {
    assert!(n >= 1, "path graph needs at least one vertex");
    let g = Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple");
    (g, 0)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph is simple")
}

/// Uniformly random simple 3-regular graph on `n` vertices.
///
/// Configuration model: the `3n` half-edges are shuffled and paired off
/// consecutively. A pairing containing a loop or a repeated edge is thrown
/// away as a whole and a fresh one is drawn, which makes the accepted graph
/// uniform over simple cubic graphs. About `e^2` pairings are needed on
/// average.
pub fn random_cubic(n: usize, seed: RngSeed) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::NoCubicGraph(n));
    }
    let mut rng = seed.rng();
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(&mut rng);
        if let Some(g) = simple_pairing(n, &points) {
            return Ok(g);
        }
    }
}

fn simple_pairing(n: usize, points: &[usize]) -> Option<Graph> {
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::with_capacity(3); n];
    for pair in points.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || adjacency[u].contains(&v) {
            return None;
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let edges = adjacency
        .iter()
        .enumerate()
        .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Graph::new(n, edges.collect::<Vec<_>>()).ok()
}

/// Random graph of maximum degree at most 3: candidate pairs are visited in a
/// random order and each is kept with probability `p` while both endpoints
/// still have degree below 3.
pub fn random_subcubic(n: usize, p: f64, seed: RngSeed) -> Graph {
    let mut rng = seed.rng();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < 3 && degree[v] < 3 && rng.gen_bool(p) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("distinct pairs are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_shapes() {
        let (g, root) = binary_tree(0);
        assert_eq!((g.n(), g.edge_count(), root), (1, 0, 0));
        let (g, root) = binary_tree(2);
        assert_eq!((g.n(), g.edge_count()), (7, 6));
        assert_eq!(g.degree(root), 2);
        let (g, _) = binary_tree(3);
        assert_eq!((g.n(), g.edge_count()), (15, 14));
        let degrees = g.degrees();
        assert!(degrees[1..7].iter().all(|&d| d == 3));
        assert!(degrees[7..].iter().all(|&d| d == 1));
    }

    #[test]
    fn path_and_cycle() {
        let (g, end) = path_graph(5);
        assert_eq!(g.degrees(), vec![1, 2, 2, 2, 1]);
        assert_eq!(end, 0);
        let c = cycle_graph(3).unwrap();
        assert_eq!(c.degrees(), vec![2, 2, 2]);
        assert_eq!(cycle_graph(2).unwrap_err(), Error::CycleTooSmall(2));
    }

    #[test]
    fn cubic_on_four_is_k4() {
        for s in 0..20 {
            assert_eq!(random_cubic(4, RngSeed::new(s)).unwrap(), complete_graph(4));
        }
    }

    #[test]
    fn cubic_rejects_impossible_orders() {
        for n in [0, 1, 2, 3, 5, 7] {
            assert_eq!(random_cubic(n, RngSeed::new(1)).unwrap_err(), Error::NoCubicGraph(n));
        }
    }

    #[test]
    fn cubic_is_regular_and_reproducible() {
        for s in 0..200 {
            let n = 6 + 2 * (s as usize % 8);
            let g = random_cubic(n, RngSeed::new(s)).unwrap();
            assert!(g.is_cubic() && g.is_well_formed());
            assert_eq!(g, random_cubic(n, RngSeed::new(s)).unwrap());
        }
    }

    #[test]
    fn subcubic_respects_degree_cap() {
        for s in 0..50 {
            let g = random_subcubic(9, 0.6, RngSeed::new(s));
            assert!(g.max_degree() <= 3 && g.is_well_formed());
        }
    }
}
