//! Counting self-avoiding paths and Hamilton cycles.
//!
//! `f(G, u0, k)` is the number of vertex sequences `(u0, ..., u_{k-1})` of
//! distinct vertices with consecutive ones adjacent; path length is counted
//! in vertices throughout, so `f(G, u0, 1) = 1`. The counters enumerate by
//! depth-first backtracking. There is no memoization: a partial path's
//! continuation count depends on the whole visited set.

mod hamilton;
mod sampling;
mod search;

pub use hamilton::{count_hamilton_cycles, count_hamilton_through};
pub(crate) use hamilton::HamiltonSearch;
pub use sampling::{estimate_paths_sampling, estimate_paths_sampling_in_residual, CountEstimate};
pub(crate) use search::PathSearch;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on search nodes for the budgeted counters.
pub const DEFAULT_COUNT_BUDGET: u64 = 200_000_000;

/// An exact path or cycle count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathCount(BigUint);

impl PathCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `log2` of the count, `-inf` for zero. Uses the top 64 bits of the
    /// integer and its exact bit length, so it is accurate to double
    /// precision at any size.
    pub fn log2(&self) -> f64 {
        log2_big(&self.0)
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }
}

impl From<u128> for PathCount {
    fn from(v: u128) -> Self {
        PathCount(BigUint::from(v))
    }
}

impl From<BigUint> for PathCount {
    fn from(v: BigUint) -> Self {
        PathCount(v)
    }
}

impl fmt::Display for PathCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Serialized as a decimal string so no precision is lost.
impl Serialize for PathCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return (x.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("fits in 64 bits");
    (top as f64).log2() + shift as f64
}

fn check_length(g: &Graph, k: usize) -> Result<()> {
    if k < 1 || k > g.n() {
        return Err(Error::InvalidLength { k, n: g.n() });
    }
    Ok(())
}

/// Exact `f(G, u0, k)`.
pub fn count_paths_exact(g: &Graph, u0: usize, k: usize) -> Result<PathCount> {
    count_paths_in_residual(g, &[], u0, k)
}

/// Exact count that gives up after `budget` search nodes.
pub fn count_paths_budgeted(g: &Graph, u0: usize, k: usize, budget: u64) -> Result<PathCount> {
    g.check_vertex(u0)?;
    check_length(g, k)?;
    let mut search = PathSearch::with_budget(g, budget);
    Ok(search.count_from(u0, k)?.into())
}

/// `f(G \ removed, u0, k)`: paths that avoid every vertex in `removed`.
pub fn count_paths_in_residual(g: &Graph, removed: &[usize], u0: usize, k: usize) -> Result<PathCount> {
    g.check_vertex(u0)?;
    check_length(g, k)?;
    let mut search = PathSearch::new(g);
    for &r in removed {
        g.check_vertex(r)?;
        search.block(r);
    }
    if search.is_blocked(u0) {
        return Ok(PathCount::default());
    }
    Ok(search.count_from(u0, k)?.into())
}

/// Whether `G \ removed` has at least one path of `k` vertices from `u0`.
pub fn path_exists(g: &Graph, removed: &[usize], u0: usize, k: usize) -> Result<bool> {
    g.check_vertex(u0)?;
    check_length(g, k)?;
    let mut search = PathSearch::new(g);
    for &r in removed {
        search.block(r);
    }
    Ok(!search.is_blocked(u0) && search.exists_from(u0, k))
}

/// One neighbor's share of the paths leaving a vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaEntry {
    pub neighbor: usize,
    pub count: PathCount,
    #[serde(serialize_with = "ser_ratio")]
    pub alpha: BigRational,
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// The fractions `alpha_i = f(G \ u0, v_i, k - 1) / f(G, u0, k)` for every
/// neighbor `v_i` of `u0`, in ascending neighbor order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaSplit {
    pub vertex: usize,
    pub k: usize,
    pub total: PathCount,
    pub entries: Vec<AlphaEntry>,
}

impl AlphaSplit {
    /// `log2 alpha_i`, or `-inf` when the neighbor carries no path.
    pub fn log2_alpha(&self, i: usize) -> f64 {
        let c = &self.entries[i].count;
        if c.is_zero() {
            f64::NEG_INFINITY
        } else {
            c.log2() - self.total.log2()
        }
    }

    pub fn alpha_sum(&self) -> BigRational {
        self.entries.iter().map(|e| e.alpha.clone()).sum()
    }
}

pub fn alpha_split(g: &Graph, u0: usize, k: usize) -> Result<AlphaSplit> {
    alpha_split_in_residual(g, &[], u0, k)
}

/// [`alpha_split`] on `G \ removed`; neighbors inside `removed` are skipped.
pub fn alpha_split_in_residual(g: &Graph, removed: &[usize], u0: usize, k: usize) -> Result<AlphaSplit> {
    g.check_vertex(u0)?;
    check_length(g, k)?;
    if k < 2 {
        return Err(Error::InvalidLength { k, n: g.n() });
    }
    let mut search = PathSearch::new(g);
    for &r in removed {
        g.check_vertex(r)?;
        search.block(r);
    }
    if search.is_blocked(u0) {
        return Err(Error::NoSuchPath { from: u0, k });
    }
    search.block(u0);
    let live: Vec<usize> = g.neighbors(u0).iter().copied().filter(|&v| !search.is_blocked(v)).collect();
    let counts: Vec<(usize, u128)> = live
        .into_iter()
        .map(|v| search.count_from(v, k - 1).map(|c| (v, c)))
        .collect::<Result<_>>()?;
    let total: u128 = counts.iter().map(|c| c.1).sum();
    if total == 0 {
        return Err(Error::NoSuchPath { from: u0, k });
    }
    let denom = num_bigint::BigInt::from(total);
    let entries = counts
        .into_iter()
        .map(|(neighbor, c)| AlphaEntry {
            neighbor,
            count: c.into(),
            alpha: BigRational::new(num_bigint::BigInt::from(c), denom.clone()),
        })
        .collect();
    Ok(AlphaSplit {
        vertex: u0,
        k,
        total: total.into(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{binary_tree, complete_graph, cycle_graph, path_graph};
    use num_traits::One;

    fn f(g: &Graph, u0: usize, k: usize) -> u128 {
        count_paths_exact(g, u0, k).unwrap().to_u128().unwrap()
    }

    /// Plain enumeration of all vertex sequences, no pruning.
    fn brute(g: &Graph, u0: usize, k: usize) -> u128 {
        fn go(g: &Graph, path: &mut Vec<usize>, k: usize) -> u128 {
            if path.len() == k {
                return 1;
            }
            let end = *path.last().unwrap();
            let mut total = 0;
            for &v in g.neighbors(end) {
                if !path.contains(&v) {
                    path.push(v);
                    total += go(g, path, k);
                    path.pop();
                }
            }
            total
        }
        go(g, &mut vec![u0], k)
    }

    #[test]
    fn worked_examples() {
        let (p5, end) = path_graph(5);
        assert_eq!(f(&p5, end, 5), 1);
        let k4 = complete_graph(4);
        assert_eq!(brute(&k4, 0, 4), 6);
        for u in 0..4 {
            assert_eq!(f(&k4, u, 4), 6);
        }
        let (t3, root) = binary_tree(3);
        assert_eq!(brute(&t3, root, 4), 8);
        assert_eq!(f(&t3, root, 4), 8);
        let c6 = cycle_graph(6).unwrap();
        assert_eq!(f(&c6, 2, 4), 2);
    }

    #[test]
    fn single_vertex_path_counts_once() {
        let (t, _) = binary_tree(2);
        for u in 0..t.n() {
            assert_eq!(f(&t, u, 1), 1);
        }
    }

    #[test]
    fn invalid_arguments() {
        let k4 = complete_graph(4);
        assert!(matches!(count_paths_exact(&k4, 0, 0), Err(Error::InvalidLength { .. })));
        assert!(matches!(count_paths_exact(&k4, 0, 5), Err(Error::InvalidLength { .. })));
        assert!(matches!(count_paths_exact(&k4, 4, 2), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn budget_is_enforced() {
        let g = crate::graph::random_cubic(30, crate::rng::RngSeed::new(1)).unwrap();
        assert!(matches!(count_paths_budgeted(&g, 0, 30, 1000), Err(Error::BudgetExceeded(1000))));
        assert_eq!(count_paths_budgeted(&g, 0, 4, 1000).unwrap(), count_paths_exact(&g, 0, 4).unwrap());
    }

    #[test]
    fn alpha_examples() {
        let (t3, root) = binary_tree(3);
        let a = alpha_split(&t3, root, 4).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(a.entries.iter().map(|e| e.alpha.clone()).collect::<Vec<_>>(), vec![half.clone(), half]);

        // P5 from interior vertex 1: neighbor 0 is a dead end for 3 more vertices.
        let (p5, _) = path_graph(5);
        let a = alpha_split(&p5, 1, 4).unwrap();
        assert_eq!(a.entries[0].neighbor, 0);
        assert!(a.entries[0].alpha.is_zero());
        assert!(a.entries[1].alpha.is_one());
        assert_eq!(a.log2_alpha(0), f64::NEG_INFINITY);
        assert_eq!(a.log2_alpha(1), 0.0);

        let a = alpha_split(&complete_graph(4), 0, 4).unwrap();
        let third = BigRational::new(1.into(), 3.into());
        assert!(a.entries.iter().all(|e| e.alpha == third));
        assert!(a.alpha_sum().is_one());
    }

    #[test]
    fn alpha_needs_a_path() {
        let (p3, _) = path_graph(3);
        assert_eq!(alpha_split(&p3, 1, 3).unwrap_err(), Error::NoSuchPath { from: 1, k: 3 });
    }

    #[test]
    fn residual_counts() {
        let k4 = complete_graph(4);
        assert_eq!(count_paths_in_residual(&k4, &[0], 1, 3).unwrap().to_u128(), Some(2));
        assert!(count_paths_in_residual(&k4, &[1], 1, 1).unwrap().is_zero());
        assert!(path_exists(&k4, &[0], 1, 3).unwrap());
        assert!(!path_exists(&k4, &[0], 1, 4).unwrap());
    }

    #[test]
    fn log2_of_large_counts() {
        let big = PathCount::from(BigUint::one() << 200u32);
        assert_eq!(big.log2(), 200.0);
        let x = PathCount::from((BigUint::one() << 100u32) * BigUint::from(3u32));
        assert!((x.log2() - (100.0 + 3f64.log2())).abs() < 1e-12);
        assert_eq!(PathCount::default().log2(), f64::NEG_INFINITY);
    }

    #[test]
    fn matches_brute_force_on_random_subcubic() {
        for s in 0..40 {
            let g = crate::graph::random_subcubic(9, 0.7, crate::rng::RngSeed::new(s));
            for u in 0..g.n() {
                for k in 1..=g.n() {
                    assert_eq!(f(&g, u, k), brute(&g, u, k), "seed {s} u {u} k {k}");
                }
            }
        }
    }
}
