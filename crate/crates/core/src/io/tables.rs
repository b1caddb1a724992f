//! CSV files for run records, cell summaries and graph metrics.
//!
//! Comma-separated, `.` decimal point, `\n` line endings, reals with six
//! decimals and `NA` for undefined path statistics. No field ever needs
//! quoting.

use std::fmt::Write as _;
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::metrics::GraphMetrics;
use crate::sweep::{CellSummary, RunRecord};

pub const RECORDS_HEADER: &str = "network_model,network_seed,sim_seed,k,curious,enthusiastic,supporters,final_aware,final_both,rounds,hit_max_rounds,nodes,edges,density,avg_path_length,clustering,diameter";
pub const SUMMARIES_HEADER: &str =
    "network_model,k,supporters,curious,enthusiastic,mean_final_both,sd_final_both,mean_final_aware,mean_rounds,n";
const METRICS_HEADER: &str = "nodes,edges,density,avg_path_length,clustering,diameter,connected";

fn opt_real(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| format!("{x:.6}"))
}

fn opt_int(v: Option<usize>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| x.to_string())
}

pub fn metrics_csv_header() -> &'static str {
    METRICS_HEADER
}

pub fn metrics_csv_row(m: &GraphMetrics) -> String {
    format!(
        "{},{},{:.6},{},{:.6},{},{}",
        m.node_count,
        m.edge_count,
        m.density,
        opt_real(m.avg_path_length),
        m.global_clustering,
        opt_int(m.diameter),
        m.connected
    )
}

pub fn records_csv(records: &[RunRecord]) -> String {
    let mut out = String::with_capacity(RECORDS_HEADER.len() + 1 + records.len() * 160);
    out.push_str(RECORDS_HEADER);
    out.push('\n');
    for r in records {
        let m = &r.metrics;
        let _ = writeln!(
            out,
            "{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{},{},{},{},{:.6},{},{:.6},{}",
            r.network_model,
            r.network_seed,
            r.sim_seed,
            r.k,
            r.curious,
            r.enthusiastic,
            r.supporters,
            r.final_aware,
            r.final_both,
            r.rounds,
            r.hit_max_rounds,
            m.node_count,
            m.edge_count,
            m.density,
            opt_real(m.avg_path_length),
            m.global_clustering,
            opt_int(m.diameter),
        );
    }
    out
}

pub fn summaries_csv(summaries: &[CellSummary]) -> String {
    let mut out = String::new();
    out.push_str(SUMMARIES_HEADER);
    out.push('\n');
    for s in summaries {
        let _ = writeln!(
            out,
            "{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{}",
            s.network_model,
            s.k,
            s.supporters,
            s.curious,
            s.enthusiastic,
            s.mean_final_both,
            s.sd_final_both,
            s.mean_final_aware,
            s.mean_rounds,
            s.n
        );
    }
    out
}

/// Returns the number of bytes written.
pub fn write_records_csv<W: Write>(records: &[RunRecord], mut destination: W) -> Result<usize> {
    let text = records_csv(records);
    destination.write_all(text.as_bytes())?;
    Ok(text.len())
}

/// Returns the number of bytes written.
pub fn write_summaries_csv<W: Write>(summaries: &[CellSummary], mut destination: W) -> Result<usize> {
    let text = summaries_csv(summaries);
    destination.write_all(text.as_bytes())?;
    Ok(text.len())
}

struct Row<'a> {
    record: &'a csv::StringRecord,
    line: u64,
}

impl Row<'_> {
    fn text(&self, i: usize) -> &str {
        self.record.get(i).unwrap_or("")
    }

    fn parse<T: std::str::FromStr>(&self, i: usize, name: &str) -> Result<T> {
        self.text(i).parse().map_err(|_| Error::Csv(format!("line {}: bad {name} value {:?}", self.line, self.text(i))))
    }

    fn parse_opt<T: std::str::FromStr>(&self, i: usize, name: &str) -> Result<Option<T>> {
        if self.text(i) == "NA" {
            Ok(None)
        } else {
            self.parse(i, name).map(Some)
        }
    }
}

fn read_rows<R: Read>(source: R, header: &str, mut each: impl FnMut(&Row) -> Result<()>) -> Result<()> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(source);
    let found: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if found.join(",") != header {
        return Err(Error::Csv(format!("unexpected header {:?}", found.join(","))));
    }
    let width = found.len();
    for result in reader.records() {
        let record = result?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != width {
            return Err(Error::Csv(format!("line {line}: expected {width} fields, found {}", record.len())));
        }
        each(&Row { record: &record, line })?;
    }
    Ok(())
}

pub fn read_records_csv<R: Read>(source: R) -> Result<Vec<RunRecord>> {
    let mut records = Vec::new();
    read_rows(source, RECORDS_HEADER, |row| {
        let avg_path_length = row.parse_opt(14, "avg_path_length")?;
        let diameter = row.parse_opt(16, "diameter")?;
        records.push(RunRecord {
            network_model: row.text(0).to_string(),
            network_seed: row.parse(1, "network_seed")?,
            sim_seed: row.parse(2, "sim_seed")?,
            k: row.parse(3, "k")?,
            curious: row.parse(4, "curious")?,
            enthusiastic: row.parse(5, "enthusiastic")?,
            supporters: row.parse(6, "supporters")?,
            final_aware: row.parse(7, "final_aware")?,
            final_both: row.parse(8, "final_both")?,
            rounds: row.parse(9, "rounds")?,
            hit_max_rounds: row.parse(10, "hit_max_rounds")?,
            metrics: GraphMetrics {
                node_count: row.parse(11, "nodes")?,
                edge_count: row.parse(12, "edges")?,
                density: row.parse(13, "density")?,
                avg_path_length,
                global_clustering: row.parse(15, "clustering")?,
                diameter,
                connected: avg_path_length.is_some(),
            },
        });
        Ok(())
    })?;
    Ok(records)
}

pub fn read_summaries_csv<R: Read>(source: R) -> Result<Vec<CellSummary>> {
    let mut summaries = Vec::new();
    read_rows(source, SUMMARIES_HEADER, |row| {
        summaries.push(CellSummary {
            network_model: row.text(0).to_string(),
            k: row.parse(1, "k")?,
            supporters: row.parse(2, "supporters")?,
            curious: row.parse(3, "curious")?,
            enthusiastic: row.parse(4, "enthusiastic")?,
            mean_final_both: row.parse(5, "mean_final_both")?,
            sd_final_both: row.parse(6, "sd_final_both")?,
            mean_final_aware: row.parse(7, "mean_final_aware")?,
            mean_rounds: row.parse(8, "mean_rounds")?,
            n: row.parse(9, "n")?,
        });
        Ok(())
    })?;
    Ok(summaries)
}
