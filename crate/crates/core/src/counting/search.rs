use crate::error::{Error, Result};
use crate::graph::Graph;

/// Backtracking search over self-avoiding paths in `G \ blocked`.
///
/// A branch is cut as soon as fewer unblocked vertices are reachable from the
/// current end than the path still needs. Counts are accumulated in `u128`;
/// since every counted path is a separate leaf of the search, no feasible run
/// can overflow it.
pub(crate) struct PathSearch<'g> {
    g: &'g Graph,
    blocked: Vec<bool>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'g> PathSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_budget(g, u64::MAX)
    }

    pub fn with_budget(g: &'g Graph, budget: u64) -> Self {
        PathSearch {
            g,
            blocked: vec![false; g.n()],
            stamp: vec![0; g.n()],
            epoch: 0,
            queue: Vec::with_capacity(g.n()),
            nodes: 0,
            budget,
        }
    }

    pub fn block(&mut self, v: usize) {
        self.blocked[v] = true;
    }

    pub fn is_blocked(&self, v: usize) -> bool {
        self.blocked[v]
    }

    /// Paths of `len` vertices starting at the unblocked vertex `start`.
    pub fn count_from(&mut self, start: usize, len: usize) -> Result<u128> {
        debug_assert!(!self.blocked[start] && len >= 1);
        self.blocked[start] = true;
        let r = self.extend(start, len - 1);
        self.blocked[start] = false;
        r
    }

    pub fn exists_from(&mut self, start: usize, len: usize) -> bool {
        debug_assert!(!self.blocked[start] && len >= 1);
        self.blocked[start] = true;
        let r = self.any_extension(start, len - 1);
        self.blocked[start] = false;
        r
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn extend(&mut self, end: usize, remaining: usize) -> Result<u128> {
        self.tick()?;
        let g = self.g;
        if remaining == 0 {
            return Ok(1);
        }
        if remaining == 1 {
            return Ok(g.neighbors(end).iter().filter(|&&v| !self.blocked[v]).count() as u128);
        }
        if !self.can_reach(end, remaining) {
            return Ok(0);
        }
        let mut total = 0;
        for &v in g.neighbors(end) {
            if !self.blocked[v] {
                self.blocked[v] = true;
                let r = self.extend(v, remaining - 1);
                self.blocked[v] = false;
                total += r?;
            }
        }
        Ok(total)
    }

    fn any_extension(&mut self, end: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        if !self.can_reach(end, remaining) {
            return false;
        }
        let g = self.g;
        for &v in g.neighbors(end) {
            if !self.blocked[v] {
                self.blocked[v] = true;
                let found = self.any_extension(v, remaining - 1);
                self.blocked[v] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }

    /// Whether at least `needed` unblocked vertices are reachable from `end`
    /// through unblocked vertices. Stops as soon as the answer is yes.
    fn can_reach(&mut self, end: usize, needed: usize) -> bool {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(end);
        self.stamp[end] = epoch;
        let mut found = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &v in self.g.neighbors(u) {
                if !self.blocked[v] && self.stamp[v] != epoch {
                    self.stamp[v] = epoch;
                    found += 1;
                    if found >= needed {
                        return true;
                    }
                    self.queue.push(v);
                }
            }
        }
        false
    }
}
