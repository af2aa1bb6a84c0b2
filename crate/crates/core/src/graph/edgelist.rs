//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! 4
//! 0 1 0.25
//! 0 2 1.5
//! ```
//!
//! The first non-comment line holds the vertex count. Every further
//! non-empty line is `u v` or `u v w`; either all edges carry a weight or
//! none do. The writer emits edges in normalized order with `u < v` and
//! formats weights with the shortest representation that reads back to the
//! same `f64`.

use std::fmt::Write as _;

use super::{Edge, Graph, WeightAssignment};
use crate::error::{Error, Result};

pub fn read_edge_list(text: &str) -> Result<(Graph, Option<WeightAssignment>)> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<(Edge, f64)> = Vec::new();
    let mut weighted: Option<bool> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let Some(n) = n else {
            n = Some(line.parse().map_err(|_| err(format!("expected vertex count, found {line:?}")))?);
            continue;
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(err(format!("expected \"u v [w]\", found {line:?}")));
        }
        let vertex = |s: &str| -> Result<usize> {
            let id: usize = s.parse().map_err(|_| err(format!("bad vertex id {s:?}")))?;
            if id >= n {
                return Err(err(format!("vertex id out of range: {id} (n = {n})")));
            }
            Ok(id)
        };
        let (u, v) = (vertex(fields[0])?, vertex(fields[1])?);
        let has_weight = fields.len() == 3;
        if *weighted.get_or_insert(has_weight) != has_weight {
            return Err(err("inconsistent weights: either every edge has a weight or none".into()));
        }
        if has_weight {
            let w: f64 = fields[2].parse().map_err(|_| err(format!("bad weight {:?}", fields[2])))?;
            if !(w.is_finite() && w >= 0.0) {
                return Err(err(format!("weight {w} is not a finite nonnegative number")));
            }
            weights.push((Edge::new(u, v), w));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }

    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex count".into(),
    })?;
    let g = Graph::new(n, edges)?;
    let w = if weighted == Some(true) {
        weights.sort_by_key(|&(e, _)| e);
        Some(WeightAssignment::new(&g, weights.into_iter().map(|(_, w)| w).collect())?)
    } else {
        None
    };
    Ok((g, w))
}

pub fn write_edge_list(g: &Graph, weights: Option<&WeightAssignment>) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        match weights.and_then(|w| w.get(e.0, e.1)) {
            Some(w) => writeln!(out, "{} {} {}", e.0, e.1, w),
            None => writeln!(out, "{} {}", e.0, e.1),
        }
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, sample_weights};
    use crate::rng::RngSeed;

    #[test]
    fn reads_weighted_edge() {
        let (g, w) = read_edge_list("2\n0 1 0.5\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(w.unwrap().get(0, 1), Some(0.5));
    }

    #[test]
    fn comments_and_blank_lines() {
        let (g, w) = read_edge_list("# header\n3\n\n# edge\n2 1\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(w.is_none());
        assert_eq!(write_edge_list(&g, None), "3\n0 1\n1 2\n");
    }

    #[test]
    fn out_of_range_reports_line() {
        let err = read_edge_list("2\n0 2 1.0\n").unwrap_err();
        assert!(err.to_string().contains("vertex id out of range"), "{err}");
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(read_edge_list("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_edge_list("3\n0 1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_edge_list("3\n0 1 1.0\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_edge_list("3\n0 1 -1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_edge_list("3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(read_edge_list("3\n0 1\n1 0\n").unwrap_err(), Error::ParallelEdge(0, 1));
        assert!(read_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn k4_round_trip_is_byte_identical() {
        let g = complete_graph(4);
        let w = sample_weights(&g, RngSeed::new(4));
        let text = write_edge_list(&g, Some(&w));
        let (g2, w2) = read_edge_list(&text).unwrap();
        assert_eq!(g2, g);
        assert_eq!(w2.as_ref(), Some(&w));
        assert_eq!(write_edge_list(&g2, w2.as_ref()), text);
    }
}
