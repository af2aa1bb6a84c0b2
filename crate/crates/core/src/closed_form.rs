//! One-step expectations behind the greedy bounds, and the bound calculators.
//!
//! At a vertex with two live continuations carrying fractions `a` and
//! `1 - a` of the remaining paths, the heavy rule takes the larger of
//! `X1 + log2(a)/2` and `X2 + log2(1-a)/2` for independent exp(1) weights.
//! Writing `c(a) = (log2(1-a) - log2(a))/2`, the expected maximum is
//!
//! ```text
//! g(a) = log2(a)/2 + E max{X1, X2 + c(a)} = log2(1-a)/2 + 1 + e^(-c(a))/2,
//! ```
//!
//! which is at least 1 on `[0, 1/2]`, with equality only at the endpoints.
//! This is what makes the heavy bound `k + log2(f)/2 - 1` go through, one
//! step at a time.
//!
//! Functions taking `a` are defined on `[0, 1/2]` (or `(0, 1/2]`); the
//! `*_symmetric` variants extend them to `[0, 1]` through `a -> 1 - a`.

use serde::Serialize;
use std::f64::consts::LN_2;

use crate::error::{Error, Result};

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

/// `c(a) = (log2(1 - a) - log2(a)) / 2` on `(0, 1)`.
pub fn c_alpha(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(domain(format!("c(a) needs 0 < a < 1, got {a}")));
    }
    Ok(((1.0 - a).log2() - a.log2()) / 2.0)
}

/// `E max{X1, X2 + c}` for independent exp(1) variables and `c >= 0`:
/// `c + 1 + e^(-c)/2`.
pub fn expected_max_shifted(c: f64) -> Result<f64> {
    if c.is_nan() || c < 0.0 {
        return Err(domain(format!("shift must be nonnegative, got {c}")));
    }
    Ok(c + 1.0 + (-c).exp() / 2.0)
}

/// `(a / (1 - a))^(1 / ln 4) / 2`, which equals `e^(-c(a)) / 2`.
fn half_ratio_power(a: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    ((a / (1.0 - a)).ln() / (2.0 * LN_2)).exp() / 2.0
}

/// `e^(-c(a)) / 2` on `(0, 1/2]`.
///
/// This is the closed form used for the light rule's one-step expectation
/// in the original derivation of the light bound. It agrees with the true
/// expectation `E min{X1 - log2(a)/2, X2 - log2(1-a)/2}` minus the offset
/// `-log2(1-a)/2` only at `a = 1/2`; see [`expected_light_step`] for the
/// exact value.
pub fn expected_min_shifted_pair(a: f64) -> Result<f64> {
    if !(a > 0.0 && a <= 0.5) {
        return Err(domain(format!("expected 0 < a <= 1/2, got {a}")));
    }
    Ok((-c_alpha(a)?).exp() / 2.0)
}

/// `g(a) = log2(1 - a)/2 + 1 + (a/(1-a))^(1/ln 4)/2` on `[0, 1/2]`, the
/// expected score of one heavy step. `g(0) = g(1/2) = 1`.
pub fn g_heavy(a: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&a) {
        return Err(domain(format!("g(a) needs 0 <= a <= 1/2, got {a}")));
    }
    if a == 0.0 {
        return Ok(1.0);
    }
    Ok((1.0 - a).log2() / 2.0 + 1.0 + half_ratio_power(a))
}

/// `g~(a) = (a/(1-a))^(1/ln 4) / 2` on `[0, 1/2]`; `g~(0) = 0`,
/// `g~(1/2) = 1/2`.
pub fn g_light(a: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&a) {
        return Err(domain(format!("g~(a) needs 0 <= a <= 1/2, got {a}")));
    }
    Ok(half_ratio_power(a))
}

/// Exact `E min{X1 - log2(a)/2, X2 - log2(1-a)/2}` on `[0, 1/2]`:
/// `1 - log2(1-a)/2 - e^(-c(a))/2`. It equals `2 - g(a)`, so it never
/// exceeds 1, which is the condition the light bound's induction needs.
pub fn expected_light_step(a: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&a) {
        return Err(domain(format!("expected 0 <= a <= 1/2, got {a}")));
    }
    Ok(1.0 - (1.0 - a).log2() / 2.0 - half_ratio_power(a))
}

fn fold(a: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&a) {
        return Err(domain(format!("expected 0 <= a <= 1, got {a}")));
    }
    Ok(a.min(1.0 - a))
}

/// [`g_heavy`] on `[0, 1]`.
pub fn g_heavy_symmetric(a: f64) -> Result<f64> {
    g_heavy(fold(a)?)
}

/// [`g_light`] on `[0, 1]`.
pub fn g_light_symmetric(a: f64) -> Result<f64> {
    g_light(fold(a)?)
}

/// Per-vertex Hamilton path rates for random cubic graphs:
/// `1 +- log2(2/sqrt 3)/2`.
pub fn hamilton_rates() -> (f64, f64) {
    let gain = (2.0 / 3f64.sqrt()).log2() / 2.0;
    (1.0 + gain, 1.0 - gain)
}

/// Expected-weight bounds for a `k`-vertex path with `log2 f` given.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub log2f: f64,
    /// `k + log2f/2 - 1`, a lower bound on the heavy greedy's mean weight.
    pub heavy_bound: f64,
    /// `k - log2f/2`, an upper bound on the light greedy's mean weight.
    pub light_bound: f64,
    pub asymptotic_heavy: f64,
    pub asymptotic_light: f64,
}

pub fn bound_report(k: usize, log2f: f64) -> Result<BoundReport> {
    if k < 1 {
        return Err(domain("k must be at least 1".into()));
    }
    if !(log2f >= 0.0 && log2f.is_finite()) {
        return Err(domain(format!("log2 f must be finite and nonnegative, got {log2f}")));
    }
    Ok(BoundReport::unchecked(k, log2f))
}

impl BoundReport {
    /// Same formulas without the domain checks. Hamilton campaigns feed in
    /// `log2(h/3)`, which is negative when `h < 3`.
    pub(crate) fn unchecked(k: usize, log2f: f64) -> BoundReport {
        let k_f = k as f64;
        BoundReport {
            k,
            log2f,
            heavy_bound: k_f + log2f / 2.0 - 1.0,
            light_bound: k_f - log2f / 2.0,
            asymptotic_heavy: k_f + log2f / 2.0,
            asymptotic_light: k_f - log2f / 2.0,
        }
    }
}
