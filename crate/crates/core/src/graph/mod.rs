//! Simple undirected graphs on dense vertex ids, paths, and edge weights.

mod edgelist;
mod generate;
mod weights;

pub use edgelist::{read_edge_list, write_edge_list};
pub use generate::{binary_tree, complete_graph, cycle_graph, path_graph, random_cubic, random_subcubic};
pub use weights::{sample_weights, sample_weights_with, WeightAssignment};

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge stored as `(min id, max id)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }
}

/// Immutable simple graph. Neighbor lists are sorted ascending, which fixes
/// the tie-breaking order of everything built on top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, parallel edges
    /// and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                let e = Edge::new(u, v);
                return Err(Error::ParallelEdge(e.0, e.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            adjacency,
            edge_count,
            max_degree,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges in normalized sort order: by smaller endpoint, then larger.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| Edge(u, v)))
    }

    pub fn is_cubic(&self) -> bool {
        self.adjacency.iter().all(|l| l.len() == 3)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { id: v, n: self.n() })
        }
    }

    /// Errors unless every vertex has degree at most 3.
    pub fn check_subcubic(&self) -> Result<()> {
        if self.max_degree > 3 {
            Err(Error::DegreeTooLarge(self.max_degree))
        } else {
            Ok(())
        }
    }

    /// The graph with every edge at `v` deleted. Vertex ids are kept, so `v`
    /// stays present as an isolated vertex.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let edges: Vec<_> = self.edges().filter(|e| e.0 != v && e.1 != v).map(|e| (e.0, e.1)).collect();
        Graph::new(self.n(), edges).expect("subgraph of a valid graph")
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let drop = Edge::new(u, v);
        let edges: Vec<_> = self.edges().filter(|&e| e != drop).map(|e| (e.0, e.1)).collect();
        Graph::new(self.n(), edges).expect("subgraph of a valid graph")
    }

    /// Checks symmetry, sortedness, simplicity and the cached maximum degree.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        let mut half_edges = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v >= n || v == u || self.adjacency[v].binary_search(&u).is_err() {
                    return false;
                }
            }
            half_edges += list.len();
        }
        half_edges == 2 * self.edge_count && self.max_degree == self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }
}

/// A sequence of distinct vertices, consecutive ones adjacent.
/// Its length is the number of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty".into()));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPath(format!("vertex {v} repeated")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
        }
        Ok(Path(vertices))
    }

    /// Wraps a vertex sequence already known to be a valid path.
    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Path {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().expect("paths are nonempty")
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 1]);
        assert!(g.is_well_formed());
    }

    #[test]
    fn k4_is_cubic() {
        let g = complete_graph(4);
        assert_eq!(g.max_degree(), 3);
        assert!(g.is_cubic());
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn rejects_parallel_edge() {
        let err = Graph::new(3, [(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, Error::ParallelEdge(0, 1));
        assert!(err.to_string().contains("parallel edge"));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]).unwrap_err(), Error::ParallelEdge(0, 1));
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(Graph::new(3, [(1, 1)]).unwrap_err(), Error::SelfLoop(1));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { id: 2, n: 2 })));
    }

    #[test]
    fn without_vertex_keeps_ids() {
        let g = complete_graph(4).without_vertex(0);
        assert_eq!(g.n(), 4);
        assert_eq!(g.degrees(), vec![0, 2, 2, 2]);
        assert!(g.is_well_formed());
    }

    #[test]
    fn path_validation() {
        let (g, _) = path_graph(4);
        assert!(Path::new(&g, vec![0, 1, 2]).is_ok());
        assert!(Path::new(&g, vec![0, 2]).is_err());
        assert!(Path::new(&g, vec![0, 1, 0]).is_err());
        assert!(Path::new(&g, vec![]).is_err());
        assert!(Path::new(&g, vec![9]).is_err());
    }
}
