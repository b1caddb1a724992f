//! Network indicators: density, average path length, global clustering
//! (transitivity), diameter and connectivity.
//!
//! All-pairs distances come from breadth-first searches run 64 sources at a
//! time, one bit lane per source, so each level is a single pass over the
//! adjacency lists. Average path length and diameter are `None` on
//! disconnected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphMetrics {
    pub node_count: usize,
    pub edge_count: usize,
    pub density: f64,
    pub avg_path_length: Option<f64>,
    pub global_clustering: f64,
    pub diameter: Option<usize>,
    pub connected: bool,
}

/// `2m / (n(n-1))`.
pub fn density(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::TooFewNodes("density"));
    }
    Ok(2.0 * g.edge_count() as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// Fills `dist` with hop distances from `source` (`usize::MAX` = unreachable)
/// and returns (number of reached nodes, sum of distances, eccentricity).
fn bfs(g: &Graph, source: NodeId, dist: &mut [usize], queue: &mut VecDeque<NodeId>) -> (usize, u64, usize) {
    dist.fill(usize::MAX);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    let (mut reached, mut sum, mut ecc) = (1usize, 0u64, 0usize);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = next;
                reached += 1;
                sum += next as u64;
                ecc = next;
                queue.push_back(v);
            }
        }
    }
    (reached, sum, ecc)
}

/// True iff a BFS from node 0 reaches every node. Empty and single-node
/// graphs count as connected.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.node_count();
    if n <= 1 {
        return true;
    }
    let mut dist = vec![0; n];
    let (reached, _, _) = bfs(g, 0, &mut dist, &mut VecDeque::new());
    reached == n
}

/// Average path length and diameter in one all-pairs pass.
fn distance_summary(g: &Graph) -> Option<(f64, usize)> {
    let n = g.node_count();
    if n <= 1 {
        // No pairs of distinct nodes: nothing to average.
        return if n == 1 { Some((0.0, 0)) } else { None };
    }
    let mut seen = vec![0u64; n];
    let mut frontier = vec![0u64; n];
    let mut next = vec![0u64; n];
    let mut total = 0u64;
    let mut diameter = 0;
    for base in (0..n).step_by(64) {
        let lanes = (n - base).min(64);
        let all_lanes = if lanes == 64 { u64::MAX } else { (1u64 << lanes) - 1 };
        seen.fill(0);
        frontier.fill(0);
        for lane in 0..lanes {
            seen[base + lane] = 1 << lane;
            frontier[base + lane] = 1 << lane;
        }
        let mut level = 0;
        loop {
            level += 1;
            let mut advanced = false;
            for v in 0..n {
                let reached = g.neighbors(v).iter().fold(0u64, |acc, &u| acc | frontier[u]) & !seen[v];
                next[v] = reached;
                if reached != 0 {
                    seen[v] |= reached;
                    total += level as u64 * u64::from(reached.count_ones());
                    advanced = true;
                }
            }
            if !advanced {
                break;
            }
            diameter = diameter.max(level);
            std::mem::swap(&mut frontier, &mut next);
        }
        if seen.iter().any(|&lanes_seen| lanes_seen != all_lanes) {
            return None;
        }
    }
    // Every unordered pair was counted twice.
    let pairs = n as f64 * (n as f64 - 1.0);
    Some((total as f64 / pairs, diameter))
}

/// Mean shortest-path length over unordered pairs of distinct nodes.
pub fn average_path_length(g: &Graph) -> Option<f64> {
    distance_summary(g).map(|(apl, _)| apl)
}

pub fn diameter(g: &Graph) -> Option<usize> {
    distance_summary(g).map(|(_, d)| d)
}

/// Triangles counted once each, via sorted-adjacency intersection over
/// `u < v < w`.
pub fn triangle_count(g: &Graph) -> u64 {
    let mut count = 0u64;
    for &(u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (a.partition_point(|&x| x <= v), b.partition_point(|&x| x <= v));
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    count
}

/// Paths of length two, centred anywhere: `Σ C(deg, 2)`.
pub fn connected_triples(g: &Graph) -> u64 {
    (0..g.node_count())
        .map(|v| {
            let d = g.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum()
}

/// Transitivity: `3·triangles / connected triples`, 0 without triples.
pub fn global_clustering(g: &Graph) -> f64 {
    let triples = connected_triples(g);
    if triples == 0 {
        return 0.0;
    }
    3.0 * triangle_count(g) as f64 / triples as f64
}

pub fn compute_metrics(g: &Graph) -> Result<GraphMetrics> {
    let density = density(g)?;
    let summary = distance_summary(g);
    Ok(GraphMetrics {
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        density,
        avg_path_length: summary.map(|s| s.0),
        global_clustering: global_clustering(g),
        diameter: summary.map(|s| s.1),
        connected: summary.is_some(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(&Graph::complete(5)).unwrap(), 1.0);
        assert_eq!(density(&Graph::empty(10)).unwrap(), 0.0);
        let lattice = Graph::ring_lattice(1000, 5);
        assert_eq!(lattice.edge_count(), 5000);
        assert!((density(&lattice).unwrap() - 10.0 / 999.0).abs() < 1e-15);
        assert!(density(&Graph::empty(1)).is_err());
    }

    #[test]
    fn density_of_complete_graphs_is_one() {
        for n in 2..=20 {
            assert_eq!(density(&Graph::complete(n)).unwrap(), 1.0, "K{n}");
        }
    }

    #[test]
    fn path_length_examples() {
        assert_eq!(average_path_length(&Graph::complete(4)), Some(1.0));
        assert!((average_path_length(&Graph::path(3)).unwrap() - 4.0 / 3.0).abs() < 1e-12);
        assert!((average_path_length(&star(4)).unwrap() - 1.6).abs() < 1e-12);
        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(average_path_length(&disconnected), None);
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(global_clustering(&Graph::complete(3)), 1.0);
        assert_eq!(global_clustering(&Graph::path(3)), 0.0);
        assert_eq!(global_clustering(&Graph::empty(5)), 0.0);
        assert!((global_clustering(&Graph::ring_lattice(10, 2)) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&Graph::complete(4)), Some(1));
        assert_eq!(diameter(&Graph::path(5)), Some(4));
        assert_eq!(diameter(&Graph::cycle(10)), Some(5));
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&Graph::complete(4)));
        assert!(!is_connected(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()));
        assert!(is_connected(&Graph::cycle(10)));
        assert!(is_connected(&Graph::empty(0)));
        assert!(is_connected(&Graph::empty(1)));
    }

    #[test]
    fn metrics_bundle() {
        let m = compute_metrics(&Graph::complete(5)).unwrap();
        assert_eq!((m.density, m.avg_path_length, m.global_clustering, m.diameter), (1.0, Some(1.0), 1.0, Some(1)));

        let m = compute_metrics(&Graph::path(3)).unwrap();
        assert!((m.density - 2.0 / 3.0).abs() < 1e-12);
        assert!((m.avg_path_length.unwrap() - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(m.global_clustering, 0.0);
        assert_eq!(m.diameter, Some(2));
        assert!(m.connected);

        let m = compute_metrics(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).unwrap();
        assert!(!m.connected);
        assert_eq!((m.avg_path_length, m.diameter), (None, None));
    }

    #[test]
    fn distances_span_several_source_batches() {
        let n = 150;
        let path = Graph::path(n);
        assert!((average_path_length(&path).unwrap() - (n as f64 + 1.0) / 3.0).abs() < 1e-12);
        assert_eq!(diameter(&path), Some(n - 1));
        assert_eq!(diameter(&Graph::cycle(129)), Some(64));

        let split = Graph::new(n, (0..n - 1).filter(|&i| i != 140).map(|i| (i, i + 1))).unwrap();
        assert_eq!(average_path_length(&split), None);
        assert!(!is_connected(&split));
    }
}
