use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Edge, Graph};
use crate::error::{Error, Result};
use crate::rng::RngSeed;

/// Nonnegative weights on the edges of a graph, stored in normalized edge
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightAssignment {
    edges: Vec<Edge>,
    weights: Vec<f64>,
}

impl WeightAssignment {
    /// Pairs each edge of `g` (in [`Graph::edges`] order) with a weight.
    pub fn new(g: &Graph, weights: Vec<f64>) -> Result<WeightAssignment> {
        let edges: Vec<Edge> = g.edges().collect();
        if edges.len() != weights.len() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} edges",
                weights.len(),
                edges.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
            return Err(Error::InvalidParameter(format!("weight {w} is not a finite nonnegative number")));
        }
        Ok(WeightAssignment { edges, weights })
    }

    /// Every edge of `g` gets the same weight.
    pub fn uniform(g: &Graph, w: f64) -> WeightAssignment {
        Self::new(g, vec![w; g.edge_count()]).expect("uniform weights")
    }

    pub fn get(&self, u: usize, v: usize) -> Option<f64> {
        self.edges.binary_search(&Edge::new(u, v)).ok().map(|i| self.weights[i])
    }

    pub fn weight(&self, u: usize, v: usize) -> Result<f64> {
        self.get(u, v).ok_or_else(|| {
            let e = Edge::new(u, v);
            Error::MissingWeight(e.0, e.1)
        })
    }

    pub fn set(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        let e = Edge::new(u, v);
        let i = self.edges.binary_search(&e).map_err(|_| Error::MissingWeight(e.0, e.1))?;
        self.weights[i] = w;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.edges.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn values(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn max_weight(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }

    /// True when this assignment is defined on exactly the edges of `g`.
    pub fn covers(&self, g: &Graph) -> bool {
        self.edges.len() == g.edge_count() && self.edges.iter().copied().eq(g.edges())
    }
}

/// One exp(1) draw per edge by inverse transform, `-ln(1 - U)` with `U`
/// uniform on `[0, 1)`. Edges are drawn in normalized order.
pub fn sample_weights(g: &Graph, seed: RngSeed) -> WeightAssignment {
    sample_weights_with(g, seed, |rng| -(1.0 - rng.gen::<f64>()).ln())
}

/// Like [`sample_weights`] with a caller-supplied sampler.
pub fn sample_weights_with<F>(g: &Graph, seed: RngSeed, mut sampler: F) -> WeightAssignment
where
    F: FnMut(&mut ChaCha8Rng) -> f64,
{
    let mut rng = seed.rng();
    let weights = (0..g.edge_count()).map(|_| sampler(&mut rng)).collect();
    WeightAssignment::new(g, weights).expect("sampler produced an invalid weight")
}
