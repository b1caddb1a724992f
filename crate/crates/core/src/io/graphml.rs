//! Minimal GraphML: one undirected graph, plain nodes and edges.
//!
//! The writer emits nodes `n0..n{N-1}` in order and edges `(min, max)` in
//! lexicographic order, so a graph always serializes to the same bytes.
//! The reader accepts any GraphML whose first `<graph>` is undirected,
//! ignores keys, data and other attributes, and maps node ids to dense
//! indices in document order.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = concat!(
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
    "  <graph id=\"G\" edgedefault=\"undirected\">\n",
);
const FOOTER: &str = "  </graph>\n</graphml>\n";

pub fn to_graphml_string(g: &Graph) -> String {
    use std::fmt::Write as _;
    let mut out = String::with_capacity(HEADER.len() + 24 * g.node_count() + 40 * g.edge_count());
    out.push_str(HEADER);
    for v in 0..g.node_count() {
        let _ = writeln!(out, "    <node id=\"n{v}\"/>");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "    <edge source=\"n{u}\" target=\"n{v}\"/>");
    }
    out.push_str(FOOTER);
    out
}

/// Returns the number of bytes written.
pub fn write_graphml<W: Write>(g: &Graph, mut destination: W) -> Result<usize> {
    let text = to_graphml_string(g);
    destination.write_all(text.as_bytes())?;
    Ok(text.len())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Original id of each dense node index.
    pub node_ids: Vec<String>,
    /// True when the original ids were not exactly `n0..n{N-1}` in order.
    pub remapped: bool,
}

pub fn read_graphml_file(path: impl AsRef<Path>) -> Result<ParsedGraph> {
    let text = std::fs::read_to_string(path)?;
    read_graphml(&text)
}

pub fn read_graphml(source: &str) -> Result<ParsedGraph> {
    let doc =
        roxmltree::Document::parse(source).map_err(|e| Error::GraphMl { line: e.pos().row, message: e.to_string() })?;
    let line_of = |node: roxmltree::Node| doc.text_pos_at(node.range().start).row;
    let fail = |node: roxmltree::Node, message: String| Error::GraphMl { line: line_of(node), message };

    let root = doc.root_element();
    if root.tag_name().name() != "graphml" {
        return Err(fail(root, format!("expected <graphml> root, found <{}>", root.tag_name().name())));
    }
    let graph_el = root
        .children()
        .find(|n| n.is_element() && n.tag_name().name() == "graph")
        .ok_or_else(|| fail(root, "no <graph> element".into()))?;
    if graph_el.attribute("edgedefault") == Some("directed") {
        return Err(fail(graph_el, "directed graphs are not supported".into()));
    }

    let mut node_ids = Vec::new();
    let mut index = std::collections::HashMap::new();
    for node in graph_el.children().filter(|n| n.is_element() && n.tag_name().name() == "node") {
        let id = node.attribute("id").ok_or_else(|| fail(node, "<node> without id".into()))?;
        if index.insert(id.to_string(), node_ids.len()).is_some() {
            return Err(fail(node, format!("duplicate node id {id:?}")));
        }
        node_ids.push(id.to_string());
    }

    let mut edges = Vec::new();
    for edge in graph_el.children().filter(|n| n.is_element() && n.tag_name().name() == "edge") {
        if edge.attribute("directed") == Some("true") {
            return Err(fail(edge, "directed edge in undirected graph".into()));
        }
        let endpoint = |attr: &str| -> Result<usize> {
            let id = edge.attribute(attr).ok_or_else(|| fail(edge, format!("<edge> without {attr}")))?;
            index.get(id).copied().ok_or_else(|| fail(edge, format!("edge {attr} {id:?} is not a declared node")))
        };
        let (u, v) = (endpoint("source")?, endpoint("target")?);
        if u == v {
            return Err(fail(edge, format!("self-loop on node {:?}", node_ids[u])));
        }
        edges.push((u, v));
    }

    let remapped = node_ids.iter().enumerate().any(|(i, id)| *id != format!("n{i}"));
    let graph = Graph::new(node_ids.len(), edges)?;
    Ok(ParsedGraph { graph, node_ids, remapped })
}
