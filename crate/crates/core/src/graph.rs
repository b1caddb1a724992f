//! Immutable undirected simple graph over dense node ids `0..node_count`.

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Undirected simple graph. Adjacency lists are sorted ascending and the edge
/// list holds each edge once as `(min, max)`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edges: Vec<(NodeId, NodeId)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into a single edge; self-loops are rejected.
    pub fn new<I>(node_count: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            for id in [u, v] {
                if id >= node_count {
                    return Err(Error::NodeOutOfRange { id, node_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, edges })
    }

    pub fn empty(node_count: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); node_count], edges: Vec::new() }
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` nodes.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 nodes");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Ring lattice: node i linked to i±1..=i±nei (mod n). Requires n > 2·nei.
    pub fn ring_lattice(n: usize, nei: usize) -> Self {
        assert!(n > 2 * nei, "ring lattice needs n > 2*nei");
        let edges = (1..=nei).flat_map(|d| (0..n).map(move |i| (i, (i + d) % n)));
        Graph::new(n, edges).expect("lattice edges are valid")
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, node: NodeId) -> &[NodeId] {
        &self.adjacency[node]
    }

    #[inline]
    pub fn degree(&self, node: NodeId) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Checks the structural invariants. Construction guarantees them; this
    /// exists for tests and for graphs arriving from outside.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.node_count();
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u == v {
                return Err(format!("self-loop at {u}"));
            }
            if u >= n || v >= n {
                return Err(format!("edge ({u},{v}) out of range"));
            }
            if !seen.insert((u, v)) {
                return Err(format!("duplicate edge ({u},{v})"));
            }
        }
        let mut half_edges = 0;
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                half_edges += 1;
                if !self.adjacency[v].contains(&u) {
                    return Err(format!("asymmetric adjacency {u}->{v}"));
                }
            }
        }
        if half_edges != 2 * self.edges.len() {
            return Err("adjacency and edge list disagree".into());
        }
        Ok(())
    }
}
