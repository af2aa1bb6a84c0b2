//! Step-by-step records of a greedy run.
//!
//! The JSON form is `serde_json` of [`GreedyTrace`]; `-inf` values of
//! `log2_alpha` and infinite scores come out as `null`. The text log is one
//! line per step:
//!
//! ```text
//! # heavy start=0 k=4
//! step 0 end=0 | 1 w=0.5 log2a=-1 score=0 | 2 w=1.25 log2a=-1 score=0.75 | chosen=2
//! path 0 2 5 12
//! weight 2.75
//! ```
//!
//! Candidates with no completion are marked `dead` after their score. Runs
//! of the Hamilton variant add a `start` line and a `cycle_weight` line.

use serde::Serialize;
use std::fmt::Write as _;

use super::GreedyMode;
use crate::counting::PathCount;
use crate::graph::{Edge, Path};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub vertex: usize,
    pub weight: f64,
    pub log2_alpha: f64,
    pub score: f64,
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepRecord {
    pub index: usize,
    pub end: usize,
    pub candidates: Vec<Candidate>,
    pub chosen: usize,
}

impl StepRecord {
    pub fn chosen_candidate(&self) -> &Candidate {
        self.candidates
            .iter()
            .find(|c| c.vertex == self.chosen)
            .expect("chosen vertex is a candidate")
    }

    /// A step offered a real choice when two or more candidates were live.
    pub fn had_choice(&self) -> bool {
        self.candidates.iter().filter(|c| c.admissible).count() >= 2
    }
}

/// How the Hamilton variant picked its first edge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StartEdgeRecord {
    /// `h(G, {u0})`, counted independently of `counts`.
    pub cycles_through_start: PathCount,
    /// `h(G, {u0 v})` per neighbor `v`.
    pub counts: Vec<(usize, PathCount)>,
    pub chosen: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreedyTrace {
    pub mode: GreedyMode,
    pub start: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed_edge: Option<Edge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start_edge: Option<StartEdgeRecord>,
    pub steps: Vec<StepRecord>,
    pub path: Path,
    /// Weight of the path's `k - 1` edges.
    pub weight: f64,
    pub choice_steps: usize,
    /// Path weight plus the closing edge, for Hamilton cycles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_weight: Option<f64>,
}

impl GreedyTrace {
    pub(crate) fn new(
        mode: GreedyMode,
        start: usize,
        k: usize,
        removed_edge: Option<Edge>,
        steps: Vec<StepRecord>,
        path: Path,
        weight: f64,
    ) -> Self {
        let choice_steps = steps.iter().filter(|s| s.had_choice()).count();
        GreedyTrace {
            mode,
            start,
            k,
            removed_edge,
            start_edge: None,
            steps,
            path,
            weight,
            choice_steps,
            cycle_weight: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn to_text_log(&self) -> String {
        let mut out = format!("# {} start={} k={}\n", self.mode, self.start, self.k);
        if let Some(e) = self.removed_edge {
            writeln!(out, "removed {} {}", e.0, e.1).unwrap();
        }
        if let Some(s) = &self.start_edge {
            write!(out, "start h={}", s.cycles_through_start).unwrap();
            for (v, h) in &s.counts {
                write!(out, " | {v} h={h}").unwrap();
            }
            writeln!(out, " | chosen={}", s.chosen).unwrap();
        }
        for step in &self.steps {
            write!(out, "step {} end={}", step.index, step.end).unwrap();
            for c in &step.candidates {
                write!(out, " | {} w={} log2a={} score={}", c.vertex, c.weight, c.log2_alpha, c.score).unwrap();
                if !c.admissible {
                    out.push_str(" dead");
                }
            }
            writeln!(out, " | chosen={}", step.chosen).unwrap();
        }
        writeln!(out, "path {}", self.path).unwrap();
        writeln!(out, "weight {}", self.weight).unwrap();
        if let Some(cw) = self.cycle_weight {
            writeln!(out, "cycle_weight {cw}").unwrap();
        }
        out
    }
}
