//! Heatmaps of mean final "aware and expert" proportion over the
//! curious x enthusiastic plane, one panel per (model, k, supporters).
//!
//! The CSV matrix has curious values as columns and enthusiastic values as
//! rows, both ascending. The PPM image (plain `P3`) draws each cell as a
//! `CELL_PX`-square block with enthusiastic increasing upwards and curious
//! increasing to the right; a value `v` maps to
//! `(round(255v), round(255v), round(64 + 191v))`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sweep::CellSummary;

pub const CELL_PX: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct PanelKey {
    pub network_model: String,
    pub k: f64,
    pub supporters: f64,
}

impl PanelKey {
    pub fn of(s: &CellSummary) -> Self {
        PanelKey { network_model: s.network_model.clone(), k: s.k, supporters: s.supporters }
    }

    fn matches(&self, s: &CellSummary) -> bool {
        self.network_model == s.network_model
            && key6(self.k) == key6(s.k)
            && key6(self.supporters) == key6(s.supporters)
    }

    /// `heatmap_<model>_k<k>_s<supporters>`.
    pub fn file_stem(&self) -> String {
        format!("heatmap_{}_k{}_s{}", self.network_model, self.k, self.supporters)
    }
}

impl std::fmt::Display for PanelKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} k={} supporters={}", self.network_model, self.k, self.supporters)
    }
}

fn key6(x: f64) -> String {
    format!("{x:.6}")
}

/// Distinct panels in order of first appearance.
pub fn panels(summaries: &[CellSummary]) -> Vec<PanelKey> {
    let mut out: Vec<PanelKey> = Vec::new();
    for s in summaries {
        if !out.iter().any(|p| p.matches(s)) {
            out.push(PanelKey::of(s));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Heatmap {
    pub curious: Vec<f64>,
    pub enthusiastic: Vec<f64>,
    /// `values[row][col]`: row indexes `enthusiastic`, col indexes `curious`.
    pub values: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderedHeatmap {
    pub csv: String,
    pub ppm: String,
}

fn sorted_axis(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut axis: Vec<f64> = values.collect();
    axis.sort_by(f64::total_cmp);
    axis.dedup_by(|a, b| key6(*a) == key6(*b));
    axis
}

impl Heatmap {
    pub fn build(summaries: &[CellSummary], panel: &PanelKey) -> Result<Self> {
        let cells: Vec<&CellSummary> = summaries.iter().filter(|s| panel.matches(s)).collect();
        if cells.is_empty() {
            return Err(Error::IncompleteGrid { panel: panel.to_string(), holes: "no cells".into() });
        }
        let curious = sorted_axis(cells.iter().map(|s| s.curious));
        let enthusiastic = sorted_axis(cells.iter().map(|s| s.enthusiastic));
        let col = |x: f64| curious.iter().position(|c| key6(*c) == key6(x)).expect("axis value");
        let row = |x: f64| enthusiastic.iter().position(|e| key6(*e) == key6(x)).expect("axis value");

        let mut grid: Vec<Vec<Option<f64>>> = vec![vec![None; curious.len()]; enthusiastic.len()];
        for s in &cells {
            if !(0.0..=1.0).contains(&s.mean_final_both) {
                return Err(Error::InvalidParams(format!("heatmap value {} outside [0, 1]", s.mean_final_both)));
            }
            let slot = &mut grid[row(s.enthusiastic)][col(s.curious)];
            if slot.is_some() {
                return Err(Error::InvalidParams(format!(
                    "duplicate cell curious={} enthusiastic={} in panel {panel}",
                    s.curious, s.enthusiastic
                )));
            }
            *slot = Some(s.mean_final_both);
        }

        let holes: Vec<String> = grid
            .iter()
            .enumerate()
            .flat_map(|(r, cols)| cols.iter().enumerate().filter(|(_, v)| v.is_none()).map(move |(c, _)| (r, c)))
            .map(|(r, c)| format!("(curious={}, enthusiastic={})", curious[c], enthusiastic[r]))
            .collect();
        if !holes.is_empty() {
            return Err(Error::IncompleteGrid { panel: panel.to_string(), holes: holes.join(", ") });
        }

        let values =
            grid.into_iter().map(|cols| cols.into_iter().map(|v| v.expect("hole checked")).collect()).collect();
        Ok(Heatmap { curious, enthusiastic, values })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("enthusiastic\\curious");
        for c in &self.curious {
            let _ = write!(out, ",{c:.6}");
        }
        out.push('\n');
        for (e, row) in self.enthusiastic.iter().zip(&self.values) {
            let _ = write!(out, "{e:.6}");
            for v in row {
                let _ = write!(out, ",{v:.6}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_ppm(&self) -> String {
        let (w, h) = (self.curious.len() * CELL_PX, self.enthusiastic.len() * CELL_PX);
        let mut out = format!("P3\n{w} {h}\n255\n");
        for row in self.values.iter().rev() {
            let line: Vec<String> = row
                .iter()
                .map(|&v| {
                    let (r, g, b) = color(v);
                    format!("{r} {g} {b}")
                })
                .collect();
            for _ in 0..CELL_PX {
                for pixel in &line {
                    for _ in 0..CELL_PX {
                        out.push_str(pixel);
                        out.push('\n');
                    }
                }
            }
        }
        out
    }
}

/// Dark blue for 0, white for 1.
pub fn color(v: f64) -> (u8, u8, u8) {
    let v = v.clamp(0.0, 1.0);
    let c = (255.0 * v).round() as u8;
    (c, c, (64.0 + 191.0 * v).round() as u8)
}

pub fn render_heatmap(summaries: &[CellSummary], panel: &PanelKey) -> Result<RenderedHeatmap> {
    let map = Heatmap::build(summaries, panel)?;
    Ok(RenderedHeatmap { csv: map.to_csv(), ppm: map.to_ppm() })
}
