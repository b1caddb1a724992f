use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node id {id} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { id: usize, node_count: usize },

    #[error("self-loop on node {0} is not allowed")]
    SelfLoop(usize),

    #[error("{0} requires at least 2 nodes")]
    TooFewNodes(&'static str),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{model} produced no connected graph for seeds {first_seed}..={last_seed}")]
    GenerationFailed { model: String, first_seed: u64, last_seed: u64 },

    #[error("unknown agent id {0}")]
    UnknownAgent(usize),

    #[error("aggregation error: {0}")]
    Aggregation(String),

    #[error("GraphML parse error at line {line}: {message}")]
    GraphMl { line: u32, message: String },

    #[error("CSV error: {0}")]
    Csv(String),

    #[error("heatmap panel {panel} is missing cells: {holes}")]
    IncompleteGrid { panel: String, holes: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
