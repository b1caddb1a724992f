//! Serialization: GraphML graphs, CSV run records and summaries, and
//! heatmaps rendered as a CSV matrix plus a plain-text PPM image.
//!
//! Writers are strict and byte-stable; the GraphML reader is tolerant of
//! foreign keys and data.

pub mod graphml;
pub mod heatmap;
pub mod tables;

pub use graphml::{read_graphml, read_graphml_file, to_graphml_string, write_graphml, ParsedGraph};
pub use heatmap::{panels, render_heatmap, Heatmap, PanelKey, RenderedHeatmap};
pub use tables::{
    metrics_csv_header, metrics_csv_row, read_records_csv, read_summaries_csv, records_csv, summaries_csv,
    write_records_csv, write_summaries_csv, RECORDS_HEADER, SUMMARIES_HEADER,
};
