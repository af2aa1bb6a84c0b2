//! Test-only helpers: isomorphism-class enumeration of small subcubic graphs
//! and a naive path counter used as an independent oracle.

#![allow(dead_code)]

use std::collections::BTreeSet;

use heavylight::Graph;

/// Bitmask adjacency, `adj[v]` has bit `u` set when `uv` is an edge.
type Adj = Vec<u16>;

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn code_under(adj: &Adj, order: &[usize]) -> u64 {
    let n = order.len();
    pairs(n).fold(0u64, |code, (i, j)| (code << 1) | ((adj[order[i]] >> order[j]) & 1) as u64)
}

/// Stable colour refinement; colours are ranks of isomorphism-invariant
/// signatures, so equal graphs get equal colourings up to relabeling.
fn refine(adj: &Adj) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks.binary_search(&s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Largest adjacency code over all labelings that list vertices by colour.
fn canonical(adj: &Adj) -> u64 {
    let colour = refine(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max_colour = colour.iter().copied().max().unwrap_or(0);
    for c in 0..=max_colour {
        let cell: Vec<usize> = (0..adj.len()).filter(|&v| colour[v] == c).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    fn go(adj: &Adj, cells: &[Vec<usize>], used: &mut Vec<bool>, order: &mut Vec<usize>, cell: usize, best: &mut u64) {
        if cell == cells.len() {
            *best = (*best).max(code_under(adj, order));
            return;
        }
        let filled = cells[cell].iter().all(|&v| used[v]);
        if filled {
            go(adj, cells, used, order, cell + 1, best);
            return;
        }
        for &v in &cells[cell] {
            if !used[v] {
                used[v] = true;
                order.push(v);
                go(adj, cells, used, order, cell, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut best = 0;
    go(adj, &cells, &mut vec![false; adj.len()], &mut Vec::new(), 0, &mut best);
    best
}

fn from_code(n: usize, code: u64) -> Adj {
    let total = n * (n.saturating_sub(1)) / 2;
    let mut adj = vec![0u16; n];
    for (idx, (i, j)) in pairs(n).enumerate() {
        if code >> (total - 1 - idx) & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

fn to_graph(adj: &Adj) -> Graph {
    let edges = pairs(adj.len()).filter(|&(i, j)| adj[i] >> j & 1 == 1);
    Graph::new(adj.len(), edges).unwrap()
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// with maximum degree at most 3 (connected or not).
pub fn subcubic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10);
    let mut all = BTreeSet::from([0u64]);
    let mut level = BTreeSet::from([0u64]);
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for &code in &level {
            let adj = from_code(n, code);
            for (i, j) in pairs(n) {
                if adj[i] >> j & 1 == 0 && adj[i].count_ones() < 3 && adj[j].count_ones() < 3 {
                    let mut a = adj.clone();
                    a[i] |= 1 << j;
                    a[j] |= 1 << i;
                    next.insert(canonical(&a));
                }
            }
        }
        all.extend(next.iter().copied());
        level = next;
    }
    all.into_iter().map(|c| to_graph(&from_code(n, c))).collect()
}

pub fn connected_subcubic_graphs(n: usize) -> Vec<Graph> {
    subcubic_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Paths of `k` vertices from `u0` by plain recursion over all neighbors.
pub fn naive_path_count(g: &Graph, u0: usize, k: usize) -> u128 {
    fn go(g: &Graph, on: &mut Vec<bool>, end: usize, left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for &v in g.neighbors(end) {
            if !on[v] {
                on[v] = true;
                total += go(g, on, v, left - 1);
                on[v] = false;
            }
        }
        total
    }
    if k == 0 {
        return 0;
    }
    let mut on = vec![false; g.n()];
    on[u0] = true;
    go(g, &mut on, u0, k - 1)
}
