//! Seeded simulation laboratory for word-of-mouth diffusion with information
//! seeking (the USA/IPK agent model) over generated interaction networks.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] and [`metrics`]: immutable undirected simple graphs and the
//!   indicators used to characterise them (density, average path length,
//!   transitivity, diameter).
//! - [`generators`]: Watts-Strogatz, Forest Fire and Simple Interconnected
//!   Islands generators, all driven by a deterministic [`RngSeed`].
//! - [`model`]: the agent model itself (awareness x expertise states, traits,
//!   advertisement, information gathering chains, proactive promotion).
//! - [`sweep`]: the Cartesian experiment grid, executed in parallel with
//!   scheduling-independent output, plus per-cell aggregation.
//! - [`io`]: GraphML, CSV and heatmap (CSV matrix + PPM) serialization.

pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod model;
pub mod rng;
pub mod sweep;

pub use error::{Error, Result};
pub use generators::{
    generate, generate_ff, generate_sii, generate_validated, generate_ws, FfParams, NetworkModel, SiiParams,
    ValidatedGraph, WsParams,
};
pub use graph::{Graph, NodeId};
pub use metrics::GraphMetrics;
pub use model::{
    Agent, AwarenessCause, AwarenessState, ExpertiseState, SimConfig, SimResult, StateCounts, Traits, World,
};
pub use rng::RngSeed;
pub use sweep::{
    aggregate, enumerate_cells, run_sweep, Cell, CellSummary, RunFailure, RunRecord, RunSpec, SweepGrid, SweepOutput,
};
