//! Seeded random-network generators.
//!
//! Each generator is a pure function of its parameters and an [`RngSeed`];
//! it draws from the seed's [`stream::GENERATOR`](crate::rng::stream) stream
//! in a fixed, documented order so the same inputs give the same edge set on
//! every platform.

mod ff;
mod sii;
mod ws;

pub use ff::{generate_ff, FfParams};
pub use sii::{generate_sii, SiiParams};
pub use ws::{generate_ws, WsParams};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{self, GraphMetrics};
use crate::rng::RngSeed;

/// Generator family plus its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NetworkModel {
    Ws(WsParams),
    Ff(FfParams),
    Sii(SiiParams),
}

impl NetworkModel {
    /// Short identifier used in CSV files and file names.
    pub fn label(&self) -> &'static str {
        match self {
            NetworkModel::Ws(_) => "ws",
            NetworkModel::Ff(_) => "ff",
            NetworkModel::Sii(_) => "sii",
        }
    }

    /// Default parameters for a model label (`ws`, `ff` or `sii`).
    pub fn default_for(label: &str) -> Option<NetworkModel> {
        match label {
            "ws" => Some(NetworkModel::Ws(WsParams::default())),
            "ff" => Some(NetworkModel::Ff(FfParams::default())),
            "sii" => Some(NetworkModel::Sii(SiiParams::default())),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            NetworkModel::Ws(p) => p.validate(),
            NetworkModel::Ff(p) => p.validate(),
            NetworkModel::Sii(p) => p.validate(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            NetworkModel::Ws(p) => p.n,
            NetworkModel::Ff(p) => p.n,
            NetworkModel::Sii(p) => p.n_islands * p.island_size,
        }
    }
}

impl std::fmt::Display for NetworkModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NetworkModel::Ws(p) => write!(f, "ws(n={}, nei={}, p_rewire={})", p.n, p.nei, p.p_rewire),
            NetworkModel::Ff(p) => {
                write!(f, "ff(n={}, fw_prob={}, bw_factor={}, ambs={})", p.n, p.fw_prob, p.bw_factor, p.ambs)
            }
            NetworkModel::Sii(p) => write!(
                f,
                "sii(n_islands={}, island_size={}, p_in={}, n_inter={})",
                p.n_islands, p.island_size, p.p_in, p.n_inter
            ),
        }
    }
}

/// Dispatches to the family's generator after validating the parameters.
pub fn generate(model: &NetworkModel, seed: RngSeed) -> Result<Graph> {
    match model {
        NetworkModel::Ws(p) => generate_ws(p, seed),
        NetworkModel::Ff(p) => generate_ff(p, seed),
        NetworkModel::Sii(p) => generate_sii(p, seed),
    }
}

#[derive(Debug, Clone)]
pub struct ValidatedGraph {
    pub graph: Graph,
    pub metrics: GraphMetrics,
    pub attempts: u32,
    /// Seed of the attempt that produced `graph`.
    pub seed: RngSeed,
}

/// Generates with `seed`, `seed + 1`, ... until the graph is connected,
/// giving up after `max_retries` attempts. Disconnected output is discarded
/// rather than patched, so accepted graphs keep the generator's statistics.
pub fn generate_validated(model: &NetworkModel, seed: RngSeed, max_retries: u32) -> Result<ValidatedGraph> {
    if max_retries == 0 {
        return Err(Error::InvalidParams("max_retries must be at least 1".into()));
    }
    model.validate()?;
    for attempt in 0..max_retries {
        let attempt_seed = seed.offset(attempt as u64);
        let graph = generate(model, attempt_seed)?;
        if metrics::is_connected(&graph) {
            let metrics = metrics::compute_metrics(&graph)?;
            return Ok(ValidatedGraph { graph, metrics, attempts: attempt + 1, seed: attempt_seed });
        }
    }
    Err(Error::GenerationFailed {
        model: model.to_string(),
        first_seed: seed.0,
        last_seed: seed.offset(max_retries as u64 - 1).0,
    })
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("{name} must lie in [0, 1], got {p}")));
    }
    Ok(())
}
