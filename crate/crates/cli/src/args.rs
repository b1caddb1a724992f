use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use womlab_core::{FfParams, NetworkModel, SiiParams, SimConfig, WsParams};

#[derive(Debug, Parser)]
#[command(name = "womlab", version, about = "Word-of-mouth diffusion with information seeking on generated networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a connected network and write it as GraphML; prints its metrics as one CSV line
    Generate(GenerateArgs),
    /// Print the metrics of a GraphML network as CSV (header + one row)
    Metrics(MetricsArgs),
    /// Run one simulation on a GraphML network; prints a records CSV (header + one row)
    Simulate(SimulateArgs),
    /// Run the parameter grid (one fresh network per run) and write a records CSV
    Sweep(SweepArgs),
    /// Aggregate a records CSV and render one heatmap (CSV + PPM) per panel
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Ws,
    Ff,
    Sii,
}

/// Network generator and its parameters.
#[derive(Debug, Args)]
pub struct NetworkArgs {
    /// Generator family
    #[arg(long, value_enum)]
    pub model: ModelKind,
    /// Node count (ws, ff)
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    /// Lattice neighbours on each side (ws)
    #[arg(long, default_value_t = 5)]
    pub nei: usize,
    /// Rewiring probability per edge endpoint (ws)
    #[arg(long = "p-rewire", visible_alias = "p", default_value_t = 0.055)]
    pub p_rewire: f64,
    /// Forward burning probability (ff)
    #[arg(long = "fw", visible_alias = "fw-prob", default_value_t = 0.37)]
    pub fw_prob: f64,
    /// Backward burning ratio (ff)
    #[arg(long = "bw", visible_alias = "bw-factor", default_value_t = 0.9)]
    pub bw_factor: f64,
    /// Ambassadors per new node (ff)
    #[arg(long, default_value_t = 1)]
    pub ambs: usize,
    /// Number of islands (sii)
    #[arg(long, default_value_t = 24)]
    pub islands: usize,
    /// Nodes per island (sii)
    #[arg(long, default_value_t = 42)]
    pub size: usize,
    /// Intra-island edge probability (sii)
    #[arg(long = "p-in", default_value_t = 0.235)]
    pub p_in: f64,
    /// Edges between each pair of islands (sii)
    #[arg(long = "inter", visible_alias = "n-inter", default_value_t = 1)]
    pub n_inter: usize,
    /// Attempts (seed, seed+1, ...) before giving up on a connected graph
    #[arg(long, default_value_t = 10)]
    pub max_retries: u32,
}

impl NetworkArgs {
    pub fn network(&self) -> NetworkModel {
        match self.model {
            ModelKind::Ws => NetworkModel::Ws(WsParams { n: self.n, nei: self.nei, p_rewire: self.p_rewire }),
            ModelKind::Ff => NetworkModel::Ff(FfParams {
                n: self.n,
                fw_prob: self.fw_prob,
                bw_factor: self.bw_factor,
                ambs: self.ambs,
            }),
            ModelKind::Sii => NetworkModel::Sii(SiiParams {
                n_islands: self.islands,
                island_size: self.size,
                p_in: self.p_in,
                n_inter: self.n_inter,
            }),
        }
    }
}

/// Model settings that are not swept.
#[derive(Debug, Args)]
pub struct DynamicsArgs {
    /// Rounds of advertisement
    #[arg(long, default_value_t = SimConfig::DEFAULT_AD_ROUNDS)]
    pub ad_rounds: u32,
    /// Share of the population reached per advertisement round
    #[arg(long, default_value_t = SimConfig::DEFAULT_AD_SHARE)]
    pub ad_share: f64,
    /// Rounds a proactive agent keeps promoting
    #[arg(long, default_value_t = SimConfig::DEFAULT_T_PROMOTE)]
    pub t_promote: u32,
    /// Round limit
    #[arg(long, default_value_t = SimConfig::DEFAULT_MAX_ROUNDS)]
    pub max_rounds: u32,
    /// Seekers who ran out of neighbours keep seeking instead of becoming Aware
    #[arg(long)]
    pub no_give_up: bool,
}

impl DynamicsArgs {
    pub fn apply(&self, cfg: SimConfig) -> SimConfig {
        SimConfig {
            ad_rounds: self.ad_rounds,
            ad_share: self.ad_share,
            t_promote: self.t_promote,
            max_rounds: self.max_rounds,
            seeker_gives_up: !self.no_give_up,
            ..cfg
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub network: NetworkArgs,
    /// Random seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output GraphML path
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    /// Input GraphML path
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Input GraphML network
    #[arg(long)]
    pub network: PathBuf,
    /// Initial proportion of experts
    #[arg(long, default_value_t = 0.01)]
    pub k: f64,
    /// Proportion of curious agents
    #[arg(long, default_value_t = 0.3)]
    pub curious: f64,
    /// Proportion of enthusiastic agents
    #[arg(long, default_value_t = 0.3)]
    pub enthusiastic: f64,
    /// Proportion of supporters
    #[arg(long, default_value_t = 0.0)]
    pub supporters: f64,
    /// Simulation seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub dynamics: DynamicsArgs,
    /// Write per-round counts of the nine (awareness, expertise) states here
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

fn default_axis() -> Vec<f64> {
    womlab_core::sweep::default_axis()
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub network: NetworkArgs,
    /// Initial expert proportions (comma list)
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.01, 0.1, 0.5])]
    pub k: Vec<f64>,
    /// Supporter proportions (comma list)
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.0, 0.1, 0.5])]
    pub supporters: Vec<f64>,
    /// Curious proportions (comma list) [default: 0.00..1.00 step 0.05]
    #[arg(long, value_delimiter = ',', default_values_t = default_axis(), hide_default_value = true)]
    pub curious: Vec<f64>,
    /// Enthusiastic proportions (comma list) [default: 0.00..1.00 step 0.05]
    #[arg(long, value_delimiter = ',', default_values_t = default_axis(), hide_default_value = true)]
    pub enthusiastic: Vec<f64>,
    /// Replicates per cell
    #[arg(long, default_value_t = 10)]
    pub reps: u32,
    /// Seed of run 0; run i uses base-seed + i
    #[arg(long, default_value_t = 0)]
    pub base_seed: u64,
    /// Worker threads [default: available cores]
    #[arg(long)]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub dynamics: DynamicsArgs,
    /// Output records CSV path
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Records CSV produced by `sweep`
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Directory for heatmap_<model>_k<k>_s<supporters>.{csv,ppm}
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Also write the per-cell summaries CSV here
    #[arg(long)]
    pub summaries: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Command {
        Cli::try_parse_from(std::iter::once("womlab").chain(args.iter().copied())).unwrap().command
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn network_defaults_match_the_library_defaults() {
        for (label, kind) in [("ws", "ws"), ("ff", "ff"), ("sii", "sii")] {
            let Command::Generate(g) = parse(&["generate", "--model", kind, "--out", "x"]) else {
                panic!("generate expected");
            };
            assert_eq!(g.network.network(), NetworkModel::default_for(label).unwrap());
        }
    }

    #[test]
    fn sweep_lists_split_on_commas() {
        let Command::Sweep(s) =
            parse(&["sweep", "--model", "ws", "--k", "0.1,0.5", "--curious", "0.3", "--out", "r.csv"])
        else {
            panic!("sweep expected");
        };
        assert_eq!(s.k, vec![0.1, 0.5]);
        assert_eq!(s.curious, vec![0.3]);
        assert_eq!(s.enthusiastic.len(), 21);
        assert_eq!(s.supporters, vec![0.0, 0.1, 0.5]);
    }

    #[test]
    fn dynamics_flags_override_defaults() {
        let Command::Simulate(s) = parse(&["simulate", "--network", "g", "--t-promote", "4", "--no-give-up"]) else {
            panic!("simulate expected");
        };
        let cfg = s.dynamics.apply(SimConfig::default());
        assert_eq!(cfg.t_promote, 4);
        assert!(!cfg.seeker_gives_up);
        assert_eq!(cfg.ad_rounds, SimConfig::DEFAULT_AD_ROUNDS);
    }

    #[test]
    fn aliases_are_accepted() {
        let Command::Generate(g) =
            parse(&["generate", "--model", "ff", "--fw-prob", "0.2", "--bw-factor", "0.5", "--out", "x"])
        else {
            panic!("generate expected");
        };
        assert_eq!((g.network.fw_prob, g.network.bw_factor), (0.2, 0.5));
    }
}
