//! Shared fixtures for the benchmarks.

use womlab_core::{generate, Graph, NetworkModel, RngSeed, SimConfig};

pub const FIXTURE_SEED: u64 = 42;

/// The default-parameter graph of each family, generated once per bench.
pub fn default_graph(label: &str) -> Graph {
    let model = NetworkModel::default_for(label).expect("known model label");
    generate(&model, RngSeed(FIXTURE_SEED)).expect("default parameters are valid")
}

/// The reference cell: one percent experts, thirty percent curious and enthusiastic.
pub fn reference_config(seed: u64) -> SimConfig {
    SimConfig::new(0.01, 0.3, 0.3, 0.0, RngSeed(seed))
}
