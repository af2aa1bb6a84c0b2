use super::{check_weights, choose, path_weight, GreedyMode, GreedyTrace, StartEdgeRecord};
use crate::counting::{count_hamilton_cycles, HamiltonSearch, PathCount};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, WeightAssignment};

/// Greedy Hamilton cycle through `u0` in a cubic graph.
///
/// The first edge `u0 v` is the one lying on the most Hamilton cycles
/// (at least two thirds of those through `u0`, since each cycle uses two of
/// the three edges at `u0`). From there the heavy or light step rule runs
/// with `alpha` taken from Hamilton cycle counts: at path `P` with end
/// neighbors `w_1, w_2`, `alpha_i = h(G, P + w_i) / h(G, P)`. A neighbor
/// with `alpha = 0` is never taken, so the final path closes into a
/// Hamilton cycle.
///
/// The returned path has all `n` vertices; the trace reports both its weight
/// and the cycle weight including the closing edge back to `u0`.
pub fn run_greedy_hamilton(g: &Graph, w: &WeightAssignment, u0: usize, mode: GreedyMode) -> Result<(Path, GreedyTrace)> {
    g.check_vertex(u0)?;
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    check_weights(g, w)?;

    let counts: Vec<(usize, u128)> = g
        .neighbors(u0)
        .iter()
        .map(|&v| (v, HamiltonSearch::new(g, &[u0, v]).count(v)))
        .collect();
    let through_start = count_hamilton_cycles(g)?;
    let edge_sum: u128 = counts.iter().map(|c| c.1).sum();
    if edge_sum != 2 * through_start.to_u128().expect("small count") {
        return Err(Error::InvalidParameter(format!(
            "Hamilton edge counts at {u0} sum to {edge_sum}, expected twice {through_start}"
        )));
    }
    if edge_sum == 0 {
        return Err(Error::NoHamiltonCycle);
    }
    let (v1, _) = counts
        .iter()
        .copied()
        .fold(None, |best: Option<(usize, u128)>, c| match best {
            Some(b) if b.1 >= c.1 => Some(b),
            _ => Some(c),
        })
        .expect("cubic vertex has neighbors");

    let mut search = HamiltonSearch::new(g, &[u0, v1]);
    let mut path = vec![u0, v1];
    let mut steps = Vec::with_capacity(g.n().saturating_sub(2));
    while path.len() < g.n() {
        let end = *path.last().expect("nonempty");
        let candidates: Vec<usize> = g.neighbors(end).iter().copied().filter(|&v| !search.is_visited(v)).collect();
        let hs: Vec<u128> = candidates.iter().map(|&v| search.count_with(end, v)).collect();
        let total = (hs.iter().sum::<u128>() as f64).log2();
        let alphas: Vec<Option<f64>> = hs.iter().map(|&h| (h > 0).then(|| (h as f64).log2() - total)).collect();
        let step = choose(mode, end, &candidates, &alphas, w, steps.len())?;
        search.push(step.chosen);
        path.push(step.chosen);
        steps.push(step);
    }

    let path = Path::from_vec_unchecked(path);
    let weight = path_weight(&path, w)?;
    let closing = w.weight(path.end(), u0)?;
    let mut trace = GreedyTrace::new(mode, u0, g.n(), None, steps, path.clone(), weight);
    trace.start_edge = Some(StartEdgeRecord {
        cycles_through_start: through_start,
        counts: counts.into_iter().map(|(v, c)| (v, PathCount::from(c))).collect(),
        chosen: v1,
    });
    trace.cycle_weight = Some(weight + closing);
    Ok((path, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, random_cubic, sample_weights};
    use crate::greedy::brute_force_extreme_hamilton;
    use crate::rng::RngSeed;

    fn is_hamilton_cycle(g: &Graph, p: &Path) -> bool {
        p.len() == g.n() && Path::new(g, p.vertices().to_vec()).is_ok() && g.has_edge(p.end(), p.start())
    }

    #[test]
    fn k4_cycles() {
        let k4 = complete_graph(4);
        for s in 0..20 {
            let w = sample_weights(&k4, RngSeed::new(s));
            let (hp, ht) = run_greedy_hamilton(&k4, &w, 0, GreedyMode::Heavy).unwrap();
            let (lp, lt) = run_greedy_hamilton(&k4, &w, 0, GreedyMode::Light).unwrap();
            assert!(is_hamilton_cycle(&k4, &hp) && is_hamilton_cycle(&k4, &lp));
            let recomputed = path_weight(&hp, &w).unwrap() + w.weight(hp.end(), 0).unwrap();
            assert_eq!(ht.cycle_weight.unwrap(), recomputed);
            assert_eq!(lt.cycle_weight.unwrap(), path_weight(&lp, &w).unwrap() + w.weight(lp.end(), 0).unwrap());
            let start = ht.start_edge.as_ref().unwrap();
            assert_eq!(start.chosen, 1);
            assert_eq!(start.cycles_through_start.to_u128(), Some(3));
        }
    }

    #[test]
    fn rejects_non_cubic() {
        let c6 = cycle_graph(6).unwrap();
        let w = WeightAssignment::uniform(&c6, 1.0);
        assert_eq!(run_greedy_hamilton(&c6, &w, 0, GreedyMode::Heavy).unwrap_err(), Error::NotCubic);
    }

    #[test]
    fn rejects_non_hamiltonian() {
        // Two K4s with one edge subdivided each, joined by a bridge, is cubic
        // after adding the bridge between the subdivision vertices; a bridge
        // rules out Hamilton cycles.
        let mut edges = vec![];
        for base in [0usize, 5] {
            edges.extend([(base, base + 2), (base, base + 3), (base + 1, base + 2), (base + 1, base + 3), (base + 2, base + 3)]);
            edges.extend([(base, base + 4), (base + 1, base + 4)]);
        }
        edges.push((4, 9));
        let g = Graph::new(10, edges).unwrap();
        assert!(g.is_cubic());
        let w = WeightAssignment::uniform(&g, 1.0);
        assert_eq!(run_greedy_hamilton(&g, &w, 0, GreedyMode::Light).unwrap_err(), Error::NoHamiltonCycle);
    }

    #[test]
    fn sandwich_on_random_cubic() {
        let g = random_cubic(10, RngSeed::new(5)).unwrap();
        for s in 0..30 {
            let w = sample_weights(&g, RngSeed::new(s));
            let (_, ht) = run_greedy_hamilton(&g, &w, 0, GreedyMode::Heavy).unwrap();
            let (_, lt) = run_greedy_hamilton(&g, &w, 0, GreedyMode::Light).unwrap();
            let (_, max) = brute_force_extreme_hamilton(&g, &w, GreedyMode::Heavy).unwrap();
            let (_, min) = brute_force_extreme_hamilton(&g, &w, GreedyMode::Light).unwrap();
            assert!(ht.cycle_weight.unwrap() <= max + 1e-9);
            assert!(lt.cycle_weight.unwrap() >= min - 1e-9);
        }
    }
}
