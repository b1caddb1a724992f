use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use womlab_core::io::{self, graphml};
use womlab_core::metrics::{self, GraphMetrics};
use womlab_core::sweep::{self, RunRecord, SweepGrid};
use womlab_core::{generate_validated, RngSeed, SimConfig, StateCounts};

use crate::args::{GenerateArgs, MetricsArgs, ReportArgs, SimulateArgs, SweepArgs};

pub fn generate(args: GenerateArgs) -> Result<ExitCode> {
    let model = args.network.network();
    let validated = generate_validated(&model, RngSeed(args.seed), args.network.max_retries)?;
    let file = fs::File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    graphml::write_graphml(&validated.graph, std::io::BufWriter::new(file))?;
    println!("{}", io::metrics_csv_row(&validated.metrics));
    Ok(ExitCode::SUCCESS)
}

pub fn metrics(args: MetricsArgs) -> Result<ExitCode> {
    let parsed =
        graphml::read_graphml_file(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let m = metrics::compute_metrics(&parsed.graph)?;
    println!("{}\n{}", io::metrics_csv_header(), io::metrics_csv_row(&m));
    Ok(ExitCode::SUCCESS)
}

pub fn simulate(args: SimulateArgs) -> Result<ExitCode> {
    let parsed =
        graphml::read_graphml_file(&args.network).with_context(|| format!("reading {}", args.network.display()))?;
    let graph = parsed.graph;
    let cfg = args.dynamics.apply(SimConfig::new(
        args.k,
        args.curious,
        args.enthusiastic,
        args.supporters,
        RngSeed(args.seed),
    ));
    let result = womlab_core::model::run(&graph, cfg)?;

    if let Some(path) = &args.trace {
        fs::write(path, trace_csv(&result.time_series)).with_context(|| format!("writing {}", path.display()))?;
    }

    let record = RunRecord {
        network_model: "file".into(),
        network_seed: 0,
        sim_seed: args.seed,
        k: args.k,
        curious: args.curious,
        enthusiastic: args.enthusiastic,
        supporters: args.supporters,
        final_aware: result.final_aware_fraction,
        final_both: result.final_both_fraction,
        rounds: result.rounds_to_quiescence,
        hit_max_rounds: result.hit_max_rounds,
        metrics: metrics::compute_metrics(&graph).unwrap_or(GraphMetrics {
            node_count: graph.node_count(),
            edge_count: graph.edge_count(),
            density: 0.0,
            avg_path_length: None,
            global_clustering: 0.0,
            diameter: None,
            connected: metrics::is_connected(&graph),
        }),
    };
    print!("{}", io::records_csv(&[record]));
    Ok(ExitCode::SUCCESS)
}

fn trace_csv(series: &[StateCounts]) -> String {
    let mut out = String::from("round");
    for name in StateCounts::column_names() {
        out.push(',');
        out.push_str(&name);
    }
    out.push('\n');
    for (round, counts) in series.iter().enumerate() {
        let _ = write!(out, "{round}");
        for c in counts.0 {
            let _ = write!(out, ",{c}");
        }
        out.push('\n');
    }
    out
}

pub fn sweep(args: SweepArgs) -> Result<ExitCode> {
    let jobs = args.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let grid = SweepGrid {
        network: args.network.network(),
        k_values: args.k,
        supporter_values: args.supporters,
        curious_values: args.curious,
        enthusiastic_values: args.enthusiastic,
        replications: args.reps,
        base_seed: args.base_seed,
        sim: args.dynamics.apply(SimConfig::default()),
        max_retries: args.network.max_retries,
    };
    let output = sweep::run_sweep(&grid, jobs)?;
    let file = fs::File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    io::write_records_csv(&output.records, std::io::BufWriter::new(file))?;

    eprintln!("runs: {}, failures: {}", grid.run_count(), output.failures.len());
    for f in output.failures.iter().take(10) {
        eprintln!("  run {} (network seed {}): {}", f.index, f.network_seed, f.message);
    }
    if !output.failures.is_empty() {
        return Ok(ExitCode::from(crate::EXIT_RUNTIME));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn report(args: ReportArgs) -> Result<ExitCode> {
    let file = fs::File::open(&args.input).with_context(|| format!("opening {}", args.input.display()))?;
    let records = io::read_records_csv(std::io::BufReader::new(file))?;
    if records.is_empty() {
        bail!("{} holds no records", args.input.display());
    }
    let summaries = sweep::aggregate(&records)?;

    // Render everything before writing anything, so an incomplete grid leaves no partial output.
    let rendered = io::panels(&summaries)
        .into_iter()
        .map(|panel| io::render_heatmap(&summaries, &panel).map(|r| (panel, r)))
        .collect::<Result<Vec<_>, _>>()?;

    fs::create_dir_all(&args.out_dir).with_context(|| format!("creating {}", args.out_dir.display()))?;
    for (panel, heatmap) in &rendered {
        let stem = panel.file_stem();
        fs::write(args.out_dir.join(format!("{stem}.csv")), &heatmap.csv)?;
        fs::write(args.out_dir.join(format!("{stem}.ppm")), &heatmap.ppm)?;
    }
    if let Some(path) = &args.summaries {
        fs::write(path, io::summaries_csv(&summaries))?;
    }
    println!("{} panels written to {}", rendered.len(), args.out_dir.display());
    Ok(ExitCode::SUCCESS)
}
