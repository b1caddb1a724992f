//! Watts-Strogatz small-world generator.
//!
//! Draw order: lattice edges are visited as `(i, i+d mod n)` for `d = 1..=nei`
//! (outer) and `i = 0..n` (inner). For each edge, the clockwise endpoint
//! `i+d` is rewired with probability `p_rewire`, then the other endpoint is
//! rewired with probability `p_rewire`, each trial using one `f64` draw. A
//! rewire draws a uniform replacement node, rejecting self-loops and existing
//! neighbours, and keeps the edge unchanged after 100 rejected draws. The edge
//! count therefore stays at exactly `n·nei`.

use rand::Rng;

use super::check_probability;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::{bernoulli, stream, uniform_index, RngSeed};

const MAX_REWIRE_DRAWS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WsParams {
    pub n: usize,
    /// Lattice neighbours on each side.
    pub nei: usize,
    pub p_rewire: f64,
}

impl Default for WsParams {
    fn default() -> Self {
        WsParams { n: 1000, nei: 5, p_rewire: 0.055 }
    }
}

impl WsParams {
    pub fn validate(&self) -> Result<()> {
        if self.nei < 1 || self.n <= 2 * self.nei {
            return Err(Error::InvalidParams(format!("ws needs n > 2*nei >= 2, got n={} nei={}", self.n, self.nei)));
        }
        check_probability("p_rewire", self.p_rewire)
    }
}

pub fn generate_ws(params: &WsParams, seed: RngSeed) -> Result<Graph> {
    params.validate()?;
    let n = params.n;
    let mut rng = seed.stream(stream::GENERATOR);

    let mut edges: Vec<(NodeId, NodeId)> =
        (1..=params.nei).flat_map(|d| (0..n).map(move |i| (i, (i + d) % n))).collect();
    let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::with_capacity(2 * params.nei + 4); n];
    for &(u, v) in &edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }

    for edge in edges.iter_mut() {
        // Clockwise endpoint first, then the anchor.
        if bernoulli(&mut rng, params.p_rewire) {
            if let Some(t) = pick_target(&mut rng, &adjacency, edge.0) {
                replace(&mut adjacency, edge.0, edge.1, t);
                edge.1 = t;
            }
        }
        if bernoulli(&mut rng, params.p_rewire) {
            if let Some(t) = pick_target(&mut rng, &adjacency, edge.1) {
                replace(&mut adjacency, edge.1, edge.0, t);
                edge.0 = t;
            }
        }
    }

    Graph::new(n, edges)
}

fn pick_target<R: Rng>(rng: &mut R, adjacency: &[Vec<NodeId>], keep: NodeId) -> Option<NodeId> {
    (0..MAX_REWIRE_DRAWS)
        .map(|_| uniform_index(rng, adjacency.len()))
        .find(|&t| t != keep && !adjacency[keep].contains(&t))
}

/// Moves edge `keep–old` to `keep–new`.
fn replace(adjacency: &mut [Vec<NodeId>], keep: NodeId, old: NodeId, new: NodeId) {
    remove(&mut adjacency[keep], old);
    remove(&mut adjacency[old], keep);
    adjacency[keep].push(new);
    adjacency[new].push(keep);
}

fn remove(list: &mut Vec<NodeId>, value: NodeId) {
    let pos = list.iter().position(|&x| x == value).expect("edge present");
    list.swap_remove(pos);
}
