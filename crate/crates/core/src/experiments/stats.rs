use serde::Serialize;

use crate::error::{Error, Result};

/// Summary of a Monte Carlo weight series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialStats {
    pub trials: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    pub std_error: f64,
    pub min: f64,
    pub max: f64,
}

impl TrialStats {
    /// Welford's one-pass mean and variance. Needs at least two values.
    pub fn from_series(values: &[f64]) -> Result<TrialStats> {
        if values.len() < 2 {
            return Err(Error::InvalidParameter(format!("M >= 2 required, got {}", values.len())));
        }
        let (mut mean, mut m2) = (0.0, 0.0);
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        for (i, &x) in values.iter().enumerate() {
            let delta = x - mean;
            mean += delta / (i + 1) as f64;
            m2 += delta * (x - mean);
            min = min.min(x);
            max = max.max(x);
        }
        let m = values.len() as f64;
        let variance = m2 / (m - 1.0);
        Ok(TrialStats {
            trials: values.len(),
            mean,
            variance,
            std_error: (variance / m).sqrt(),
            min,
            max,
        })
    }

    pub fn std_dev(&self) -> f64 {
        self.variance.sqrt()
    }
}
