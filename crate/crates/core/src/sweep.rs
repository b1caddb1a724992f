//! Cartesian experiment grid, parallel execution and per-cell aggregation.
//!
//! Runs are enumerated in lexicographic order over
//! `(k, supporters, curious, enthusiastic, replicate)`; run `i` uses network
//! seed `base_seed + i` and simulation seed `network_seed ^ SIM_SEED_MASK`.
//! Every run generates its own network. The output order is the enumeration
//! order whatever the number of workers.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{generate_validated, NetworkModel};
use crate::metrics::GraphMetrics;
use crate::model::{run, SimConfig};
use crate::rng::RngSeed;

pub const SIM_SEED_MASK: u64 = 0x9E37_79B9_7F4A_7C15;

/// Proportions 0.00, 0.05, ..., 1.00.
pub fn default_axis() -> Vec<f64> {
    (0..=20).map(|i| i as f64 / 20.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub network: NetworkModel,
    pub k_values: Vec<f64>,
    pub supporter_values: Vec<f64>,
    pub curious_values: Vec<f64>,
    pub enthusiastic_values: Vec<f64>,
    pub replications: u32,
    pub base_seed: u64,
    /// Template for the non-swept model settings; its proportions and seed
    /// are overwritten per run.
    pub sim: SimConfig,
    pub max_retries: u32,
}

impl SweepGrid {
    /// The full default grid for one network model: 3 × 3 × 21 × 21 cells, 10 replications.
    pub fn full(network: NetworkModel, base_seed: u64) -> Self {
        SweepGrid {
            network,
            k_values: vec![0.01, 0.1, 0.5],
            supporter_values: vec![0.0, 0.1, 0.5],
            curious_values: default_axis(),
            enthusiastic_values: default_axis(),
            replications: 10,
            base_seed,
            sim: SimConfig::default(),
            max_retries: 10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let axes = [
            ("k", &self.k_values),
            ("supporters", &self.supporter_values),
            ("curious", &self.curious_values),
            ("enthusiastic", &self.enthusiastic_values),
        ];
        for (name, values) in axes {
            if values.is_empty() {
                return Err(Error::InvalidParams(format!("{name} axis is empty")));
            }
            if let Some(v) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
                return Err(Error::InvalidParams(format!("{name} value {v} outside [0, 1]")));
            }
        }
        if self.replications < 1 {
            return Err(Error::InvalidParams("replications must be at least 1".into()));
        }
        if self.max_retries < 1 {
            return Err(Error::InvalidParams("max_retries must be at least 1".into()));
        }
        self.network.validate()
    }

    pub fn cell_count(&self) -> usize {
        self.k_values.len() * self.supporter_values.len() * self.curious_values.len() * self.enthusiastic_values.len()
    }

    pub fn run_count(&self) -> usize {
        self.cell_count() * self.replications as usize
    }
}

/// One point of the parameter space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub k: f64,
    pub supporters: f64,
    pub curious: f64,
    pub enthusiastic: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSpec {
    pub index: usize,
    pub cell: Cell,
    pub replicate: u32,
    pub network_seed: u64,
    pub sim_seed: u64,
}

pub fn enumerate_cells(grid: &SweepGrid) -> Vec<RunSpec> {
    let mut runs = Vec::with_capacity(grid.run_count());
    for &k in &grid.k_values {
        for &supporters in &grid.supporter_values {
            for &curious in &grid.curious_values {
                for &enthusiastic in &grid.enthusiastic_values {
                    for replicate in 0..grid.replications {
                        let index = runs.len();
                        let network_seed = grid.base_seed.wrapping_add(index as u64);
                        runs.push(RunSpec {
                            index,
                            cell: Cell { k, supporters, curious, enthusiastic },
                            replicate,
                            network_seed,
                            sim_seed: network_seed ^ SIM_SEED_MASK,
                        });
                    }
                }
            }
        }
    }
    runs
}

/// One simulation and the network it ran on, flattened.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub network_model: String,
    pub network_seed: u64,
    pub sim_seed: u64,
    pub k: f64,
    pub curious: f64,
    pub enthusiastic: f64,
    pub supporters: f64,
    pub final_aware: f64,
    pub final_both: f64,
    pub rounds: u32,
    pub hit_max_rounds: bool,
    pub metrics: GraphMetrics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunFailure {
    pub index: usize,
    pub cell: Cell,
    pub network_seed: u64,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepOutput {
    /// Successful runs in enumeration order.
    pub records: Vec<RunRecord>,
    pub failures: Vec<RunFailure>,
}

pub fn execute_run(grid: &SweepGrid, spec: &RunSpec) -> Result<RunRecord> {
    let network = generate_validated(&grid.network, RngSeed(spec.network_seed), grid.max_retries)?;
    let cfg = SimConfig {
        k: spec.cell.k,
        p_curious: spec.cell.curious,
        p_enthusiastic: spec.cell.enthusiastic,
        p_supporter: spec.cell.supporters,
        seed: RngSeed(spec.sim_seed),
        ..grid.sim
    };
    let result = run(&network.graph, cfg)?;
    Ok(RunRecord {
        network_model: grid.network.label().to_string(),
        network_seed: spec.network_seed,
        sim_seed: spec.sim_seed,
        k: spec.cell.k,
        curious: spec.cell.curious,
        enthusiastic: spec.cell.enthusiastic,
        supporters: spec.cell.supporters,
        final_aware: result.final_aware_fraction,
        final_both: result.final_both_fraction,
        rounds: result.rounds_to_quiescence,
        hit_max_rounds: result.hit_max_rounds,
        metrics: network.metrics,
    })
}

/// Executes every run of the grid on `worker_count` threads. A run whose
/// network cannot be generated is reported in `failures` and the sweep
/// carries on.
pub fn run_sweep(grid: &SweepGrid, worker_count: usize) -> Result<SweepOutput> {
    if worker_count < 1 {
        return Err(Error::InvalidParams("worker_count must be at least 1".into()));
    }
    grid.validate()?;
    let runs = enumerate_cells(grid);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<RunRecord>> =
        pool.install(|| runs.par_iter().map(|spec| execute_run(grid, spec)).collect());

    let mut output = SweepOutput::default();
    for (spec, outcome) in runs.iter().zip(outcomes) {
        match outcome {
            Ok(record) => output.records.push(record),
            Err(e) => output.failures.push(RunFailure {
                index: spec.index,
                cell: spec.cell,
                network_seed: spec.network_seed,
                message: e.to_string(),
            }),
        }
    }
    Ok(output)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub network_model: String,
    pub k: f64,
    pub supporters: f64,
    pub curious: f64,
    pub enthusiastic: f64,
    pub mean_final_both: f64,
    /// Sample standard deviation; 0 for a single replicate.
    pub sd_final_both: f64,
    pub mean_final_aware: f64,
    pub mean_rounds: f64,
    pub n: usize,
}

/// Grouping key: model and parameters formatted to 6 decimals.
fn cell_key(r: &RunRecord) -> String {
    format!("{}|{:.6}|{:.6}|{:.6}|{:.6}", r.network_model, r.k, r.supporters, r.curious, r.enthusiastic)
}

/// Per-cell statistics, in order of each cell's first record. Every cell
/// must hold the same number of records.
pub fn aggregate(records: &[RunRecord]) -> Result<Vec<CellSummary>> {
    let mut order: Vec<String> = Vec::new();
    let mut groups: HashMap<String, Vec<&RunRecord>> = HashMap::new();
    for r in records {
        let key = cell_key(r);
        groups
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(r);
    }

    let sizes: Vec<usize> = order.iter().map(|k| groups[k].len()).collect();
    if let (Some(min), Some(max)) = (sizes.iter().min(), sizes.iter().max()) {
        if min != max {
            let short: Vec<&str> =
                order.iter().zip(&sizes).filter(|(_, &s)| s != *max).map(|(k, _)| k.as_str()).take(5).collect();
            return Err(Error::Aggregation(format!(
                "ragged groups: sizes range {min}..={max}; short cells include {}",
                short.join(", ")
            )));
        }
    }

    Ok(order
        .iter()
        .map(|key| {
            let group = &groups[key];
            let first = group[0];
            let both: Vec<f64> = group.iter().map(|r| r.final_both).collect();
            let (mean_both, sd_both) = mean_sd(&both);
            let n = group.len() as f64;
            CellSummary {
                network_model: first.network_model.clone(),
                k: first.k,
                supporters: first.supporters,
                curious: first.curious,
                enthusiastic: first.enthusiastic,
                mean_final_both: mean_both,
                sd_final_both: sd_both,
                mean_final_aware: group.iter().map(|r| r.final_aware).sum::<f64>() / n,
                mean_rounds: group.iter().map(|r| r.rounds as f64).sum::<f64>() / n,
                n: group.len(),
            }
        })
        .collect())
}

fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::WsParams;

    fn small_grid() -> SweepGrid {
        SweepGrid {
            network: NetworkModel::Ws(WsParams { n: 60, nei: 3, p_rewire: 0.1 }),
            k_values: vec![0.1],
            supporter_values: vec![0.0, 0.5],
            curious_values: vec![0.3],
            enthusiastic_values: vec![0.2, 0.8],
            replications: 3,
            base_seed: 100,
            sim: SimConfig::default(),
            max_retries: 10,
        }
    }

    fn record(both: f64) -> RunRecord {
        RunRecord {
            network_model: "ws".into(),
            network_seed: 0,
            sim_seed: 0,
            k: 0.01,
            curious: 0.3,
            enthusiastic: 0.3,
            supporters: 0.0,
            final_aware: 1.0,
            final_both: both,
            rounds: 10,
            hit_max_rounds: false,
            metrics: GraphMetrics {
                node_count: 2,
                edge_count: 1,
                density: 1.0,
                avg_path_length: Some(1.0),
                global_clustering: 0.0,
                diameter: Some(1),
                connected: true,
            },
        }
    }

    #[test]
    fn full_grid_size() {
        let grid = SweepGrid::full(NetworkModel::Ws(WsParams::default()), 0);
        assert_eq!(grid.run_count(), 39_690);
        assert_eq!(enumerate_cells(&grid).len(), 39_690);
    }

    #[test]
    fn single_run_grid() {
        let mut grid = small_grid();
        grid.supporter_values = vec![0.0];
        grid.enthusiastic_values = vec![0.5];
        grid.replications = 1;
        let runs = enumerate_cells(&grid);
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].network_seed, 100);
        assert_eq!(runs[0].sim_seed, 100 ^ SIM_SEED_MASK);
    }

    #[test]
    fn lexicographic_order_and_distinct_seeds() {
        let runs = enumerate_cells(&small_grid());
        assert_eq!(runs.len(), 12);
        assert_eq!(runs[0].cell.supporters, 0.0);
        assert_eq!(runs[0].cell.enthusiastic, 0.2);
        assert_eq!(runs[3].cell.enthusiastic, 0.8);
        assert_eq!(runs[6].cell.supporters, 0.5);
        assert_eq!((runs[2].replicate, runs[3].replicate), (2, 0));
        let mut pairs: Vec<_> = runs.iter().map(|r| (r.network_seed, r.sim_seed)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), 12);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let grid = small_grid();
        let one = run_sweep(&grid, 1).unwrap();
        let four = run_sweep(&grid, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.records.len(), 12);
        assert!(one.failures.is_empty());
    }

    #[test]
    fn failures_are_reported_not_fatal() {
        let mut grid = small_grid();
        grid.network = NetworkModel::Sii(crate::SiiParams { n_islands: 2, island_size: 3, p_in: 0.0, n_inter: 1 });
        grid.max_retries = 2;
        let out = run_sweep(&grid, 2).unwrap();
        assert!(out.records.is_empty());
        assert_eq!(out.failures.len(), 12);
        assert_eq!(out.failures[5].index, 5);
    }

    #[test]
    fn aggregate_examples() {
        let s = aggregate(&[record(0.5), record(0.5)]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].mean_final_both, s[0].sd_final_both, s[0].n), (0.5, 0.0, 2));

        let s = aggregate(&[record(0.0), record(1.0)]).unwrap();
        assert_eq!(s[0].mean_final_both, 0.5);
        assert!((s[0].sd_final_both - 0.5f64.sqrt()).abs() < 1e-12);

        assert!(aggregate(&[]).unwrap().is_empty());

        let single = aggregate(&[record(0.7)]).unwrap();
        assert_eq!(single[0].sd_final_both, 0.0);
    }

    #[test]
    fn ragged_groups_rejected() {
        let mut other = record(0.1);
        other.curious = 0.35;
        let r = aggregate(&[record(0.0), record(1.0), other]);
        assert!(matches!(r, Err(Error::Aggregation(_))));
    }

    #[test]
    fn tiny_float_noise_groups_together() {
        let mut a = record(0.2);
        a.curious = 0.1 + 0.2;
        let mut b = record(0.4);
        b.curious = 0.3;
        let s = aggregate(&[a, b]).unwrap();
        assert_eq!(s.len(), 1);
    }
}
