//! Simple Interconnected Islands: Erdős–Rényi islands joined pairwise by a
//! fixed number of random inter-island edges.
//!
//! Island `i` owns nodes `i·size .. (i+1)·size`. Draw order: islands in
//! order, each testing its pairs `(u, v)`, `u < v`, lexicographically with one
//! `f64` draw per pair; then island pairs `(a, b)`, `a < b`, lexicographically,
//! each drawing `n_inter` edges as (node in `a`, node in `b`) and redrawing
//! any duplicate.

use std::collections::HashSet;

use super::check_probability;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{bernoulli, stream, uniform_index, RngSeed};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiiParams {
    pub n_islands: usize,
    pub island_size: usize,
    /// Intra-island edge probability.
    pub p_in: f64,
    /// Edges per pair of islands.
    pub n_inter: usize,
}

impl Default for SiiParams {
    fn default() -> Self {
        SiiParams { n_islands: 24, island_size: 42, p_in: 0.235, n_inter: 1 }
    }
}

impl SiiParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_islands < 1 || self.island_size < 1 || self.n_inter < 1 {
            return Err(Error::InvalidParams(format!(
                "sii needs positive n_islands, island_size and n_inter, got {}, {}, {}",
                self.n_islands, self.island_size, self.n_inter
            )));
        }
        if self.n_inter > self.island_size * self.island_size {
            return Err(Error::InvalidParams(format!(
                "n_inter={} exceeds island_size^2={}",
                self.n_inter,
                self.island_size * self.island_size
            )));
        }
        check_probability("p_in", self.p_in)
    }

    /// Island of a node id.
    pub fn island_of(&self, node: usize) -> usize {
        node / self.island_size
    }
}

pub fn generate_sii(params: &SiiParams, seed: RngSeed) -> Result<Graph> {
    params.validate()?;
    let size = params.island_size;
    let mut rng = seed.stream(stream::GENERATOR);
    let mut edges = Vec::new();

    for island in 0..params.n_islands {
        let base = island * size;
        for u in 0..size {
            for v in u + 1..size {
                if bernoulli(&mut rng, params.p_in) {
                    edges.push((base + u, base + v));
                }
            }
        }
    }

    let mut inter = HashSet::new();
    for a in 0..params.n_islands {
        for b in a + 1..params.n_islands {
            for _ in 0..params.n_inter {
                loop {
                    let u = a * size + uniform_index(&mut rng, size);
                    let v = b * size + uniform_index(&mut rng, size);
                    if inter.insert((u, v)) {
                        edges.push((u, v));
                        break;
                    }
                }
            }
        }
    }

    Graph::new(params.n_islands * size, edges)
}
