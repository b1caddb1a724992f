//! Forest Fire generator.
//!
//! The graph grows one node at a time on a directed scaffold and is returned
//! undirected. Node 0 starts alone. Each new node `a`:
//!
//! 1. picks `min(ambs, a)` distinct uniform ambassadors among `0..a` and
//!    links `a -> ambassador`;
//! 2. burns breadth-first from every newly linked node `b`: it draws
//!    `x ~ Geom` with mean `fw_prob / (1 - fw_prob)` and links to `x` uniform
//!    not-yet-visited out-neighbours of `b`, then draws `y ~ Geom` with mean
//!    `fw_prob·bw_factor / (1 - fw_prob·bw_factor)` and links to `y` uniform
//!    not-yet-visited in-neighbours of `b`. Each burned node joins the queue.
//!
//! Visited marks are per new node, so burning always terminates. Every node
//! links to at least one older node, so the output is connected.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::{geometric_failures, sample_indices, stream, RngSeed};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FfParams {
    pub n: usize,
    /// Forward burning probability.
    pub fw_prob: f64,
    /// Backward burning ratio; backward probability is `fw_prob·bw_factor`.
    pub bw_factor: f64,
    /// Ambassadors per new node.
    pub ambs: usize,
}

impl Default for FfParams {
    fn default() -> Self {
        FfParams { n: 1000, fw_prob: 0.37, bw_factor: 0.9, ambs: 1 }
    }
}

impl FfParams {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidParams(msg));
        if self.n < 1 {
            return invalid("ff needs n >= 1".into());
        }
        if self.ambs < 1 {
            return invalid("ff needs ambs >= 1".into());
        }
        if !(0.0..1.0).contains(&self.fw_prob) {
            return invalid(format!("fw_prob must lie in [0, 1), got {}", self.fw_prob));
        }
        let backward_ok = self.bw_factor >= 0.0 && self.fw_prob * self.bw_factor < 1.0;
        if !backward_ok {
            return invalid(format!("bw_factor must be >= 0 with fw_prob*bw_factor < 1, got {}", self.bw_factor));
        }
        Ok(())
    }
}

pub fn generate_ff(params: &FfParams, seed: RngSeed) -> Result<Graph> {
    params.validate()?;
    let n = params.n;
    let backward = params.fw_prob * params.bw_factor;
    let mut rng = seed.stream(stream::GENERATOR);

    let mut out_links: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut in_links: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    // visited_by[v] == a + 1 marks v as visited while node a burns.
    let mut visited_by = vec![0usize; n];
    let mut queue = VecDeque::new();
    let mut candidates = Vec::new();

    for a in 1..n {
        let stamp = a + 1;
        visited_by[a] = stamp;
        queue.clear();

        for b in sample_indices(&mut rng, a, params.ambs.min(a)) {
            visited_by[b] = stamp;
            out_links[a].push(b);
            in_links[b].push(a);
            edges.push((a, b));
            queue.push_back(b);
        }

        while let Some(b) = queue.pop_front() {
            for direction in [Direction::Out, Direction::In] {
                let (count, list) = match direction {
                    Direction::Out => (geometric_failures(&mut rng, params.fw_prob), &out_links[b]),
                    Direction::In => (geometric_failures(&mut rng, backward), &in_links[b]),
                };
                if count == 0 {
                    continue;
                }
                candidates.clear();
                candidates.extend(list.iter().copied().filter(|&c| visited_by[c] != stamp));
                if candidates.is_empty() {
                    continue;
                }
                let take = count.min(candidates.len());
                for i in sample_indices(&mut rng, candidates.len(), take) {
                    let c = candidates[i];
                    visited_by[c] = stamp;
                    out_links[a].push(c);
                    in_links[c].push(a);
                    edges.push((a, c));
                    queue.push_back(c);
                }
            }
        }
    }

    Graph::new(n, edges)
}

#[derive(Clone, Copy)]
enum Direction {
    Out,
    In,
}
