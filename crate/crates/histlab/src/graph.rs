//! Core graph representation: simple undirected graphs with canonical edge
//! indexing, edge subsets as bitsets, and structural classification.
//!
//! Vertices are dense integers `0..n`. Edges are stored as pairs `(u, v)` with
//! `u < v`, sorted lexicographically; the position of an edge in this list is
//! its canonical index, used by every `EdgeSet` over the graph.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("edge index {0} out of range (m = {1})")]
    EdgeIndexOutOfRange(usize, usize),
    #[error("edge set belongs to a different host graph")]
    HostMismatch,
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// Incident edge indices per vertex, sorted.
    inc: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in any order and
    /// orientation; they are normalized to `(min, max)` and sorted.
    pub fn from_edges(n: usize, raw: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(raw.len());
        for &(a, b) in raw {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            inc[u].push(i);
            inc[v].push(i);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(Graph { n, edges, adj, inc })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edge indices incident to `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    /// Canonical index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// The endpoint of edge `e` that is not `v`.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.connected_with_edge_filter(|_| true)
    }

    /// Connectivity of the spanning subgraph keeping only edges accepted by
    /// the filter.
    pub fn connected_with_edge_filter<F: Fn(usize) -> bool>(&self, keep: F) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.inc[v] {
                if !keep(e) {
                    continue;
                }
                let w = self.other_endpoint(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Connectivity after deleting a vertex subset.
    pub fn connected_without_vertices(&self, removed: &[bool]) -> bool {
        let start = match (0..self.n).find(|&v| !removed[v]) {
            Some(v) => v,
            None => return true,
        };
        let total = removed.iter().filter(|&&r| !r).count();
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !removed[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == total
    }
}

/// A subset of the edges of a host graph, as a bitset over edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: Vec<u64>,
    host_m: usize,
    host_n: usize,
}

impl EdgeSet {
    pub fn new(host: &Graph) -> EdgeSet {
        EdgeSet {
            bits: vec![0; host.m().div_ceil(64)],
            host_m: host.m(),
            host_n: host.n(),
        }
    }

    pub fn from_indices(host: &Graph, indices: &[usize]) -> Result<EdgeSet, GraphError> {
        let mut s = EdgeSet::new(host);
        for &i in indices {
            s.insert(i)?;
        }
        Ok(s)
    }

    pub fn matches_host(&self, host: &Graph) -> bool {
        self.host_m == host.m() && self.host_n == host.n()
    }

    pub fn insert(&mut self, i: usize) -> Result<(), GraphError> {
        if i >= self.host_m {
            return Err(GraphError::EdgeIndexOutOfRange(i, self.host_m));
        }
        self.bits[i / 64] |= 1 << (i % 64);
        Ok(())
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.host_m {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.host_m && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Set bits in increasing edge-index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.host_m).filter(move |&i| self.contains(i))
    }

    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self, host: &Graph) -> EdgeSet {
        let mut out = EdgeSet::new(host);
        for i in 0..host.m() {
            if !self.contains(i) {
                out.insert(i).unwrap();
            }
        }
        out
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &EdgeSet) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted edge-index sequences.
impl Ord for EdgeSet {
    fn cmp(&self, other: &EdgeSet) -> std::cmp::Ordering {
        self.to_sorted_vec().cmp(&other.to_sorted_vec())
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Shortest cycle length, or none at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Acyclic,
    Finite(usize),
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphProfile {
    pub n: usize,
    pub m: usize,
    pub is_cubic: bool,
    pub is_connected: bool,
    pub is_bipartite: bool,
    /// A proper 2-coloring when bipartite.
    pub bipartition: Option<Vec<u8>>,
    pub girth: Girth,
}

/// Computes the full structural profile: degrees, connectivity, bipartiteness
/// with an explicit 2-coloring, and girth by BFS from every vertex.
pub fn classify(g: &Graph) -> GraphProfile {
    GraphProfile {
        n: g.n(),
        m: g.m(),
        is_cubic: g.is_cubic(),
        is_connected: g.is_connected(),
        is_bipartite: bipartition(g).is_some(),
        bipartition: bipartition(g),
        girth: girth(g),
    }
}

/// A proper 2-coloring, or `None` when some component has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n()];
    for start in 0..g.n() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Exact girth: the minimum, over BFS trees rooted at every vertex, of the
/// shortest closed walk witnessed by a non-tree edge.
pub fn girth(g: &Graph) -> Girth {
    let mut best = usize::MAX;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent_edge = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if dist[v] * 2 >= best {
                break;
            }
            for &e in g.incident_edges(v) {
                if e == parent_edge[v] {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// The subgraph induced by an edge subset: its vertex set is exactly the set
/// of end vertices of edges in `s`. Returns the new graph together with the
/// original index of each new vertex.
pub fn induced_edge_subgraph(g: &Graph, s: &EdgeSet) -> Result<(Graph, Vec<usize>), GraphError> {
    if !s.matches_host(g) {
        return Err(GraphError::HostMismatch);
    }
    let mut present = vec![false; g.n()];
    for e in s.iter() {
        let (u, v) = g.edge(e);
        present[u] = true;
        present[v] = true;
    }
    let vertex_map: Vec<usize> = (0..g.n()).filter(|&v| present[v]).collect();
    let mut new_index = vec![usize::MAX; g.n()];
    for (i, &v) in vertex_map.iter().enumerate() {
        new_index[v] = i;
    }
    let edges: Vec<(usize, usize)> = s
        .iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            (new_index[u], new_index[v])
        })
        .collect();
    let sub = Graph::from_edges(vertex_map.len(), &edges)?;
    Ok((sub, vertex_map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k33() -> Graph {
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_parallels() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::ParallelEdge(0, 1)
        );
    }

    #[test]
    fn adjacency_consistent_with_edges() {
        let g = k4();
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
        assert_eq!(g.edge_index(3, 2), Some(5));
        assert_eq!(g.other_endpoint(5, 2), 3);
    }

    #[test]
    fn classify_k33() {
        let p = classify(&k33());
        assert!(p.is_cubic && p.is_connected && p.is_bipartite);
        assert_eq!(p.girth, Girth::Finite(4));
        let coloring = p.bipartition.unwrap();
        assert_eq!(coloring[0], coloring[1]);
        assert_eq!(coloring[0], coloring[2]);
        assert_ne!(coloring[0], coloring[3]);
    }

    #[test]
    fn classify_k4() {
        let p = classify(&k4());
        assert!(p.is_cubic && p.is_connected && !p.is_bipartite);
        assert_eq!(p.girth, Girth::Finite(3));
    }

    #[test]
    fn classify_petersen() {
        let g = catalog::catalog("petersen").unwrap().graph;
        let p = classify(&g);
        assert!(p.is_cubic && p.is_connected && !p.is_bipartite);
        assert_eq!(p.girth, Girth::Finite(5));
    }

    #[test]
    fn girth_of_tree_is_acyclic() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(girth(&g), Girth::Acyclic);
    }

    #[test]
    fn induced_subgraph_single_edge() {
        let g = k4();
        let s = EdgeSet::from_indices(&g, &[0]).unwrap();
        let (sub, map) = induced_edge_subgraph(&g, &s).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.m(), 1);
        assert_eq!(map, vec![0, 1]);
    }

    #[test]
    fn induced_subgraph_full_is_identity() {
        let g = k4();
        let s = EdgeSet::from_indices(&g, &(0..6).collect::<Vec<_>>()).unwrap();
        let (sub, map) = induced_edge_subgraph(&g, &s).unwrap();
        assert_eq!(sub, g);
        assert_eq!(map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_subgraph_four_cycle_in_k33() {
        let g = k33();
        // 0-3, 3-1, 1-4, 4-0 is a 4-cycle.
        let ids: Vec<usize> = [(0, 3), (1, 3), (1, 4), (0, 4)]
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let s = EdgeSet::from_indices(&g, &ids).unwrap();
        let (sub, map) = induced_edge_subgraph(&g, &s).unwrap();
        assert_eq!(sub.n(), 4);
        assert_eq!(sub.m(), 4);
        assert!(sub.is_connected());
        assert!((0..4).all(|v| sub.degree(v) == 2));
        assert_eq!(map, vec![0, 1, 3, 4]);
    }

    #[test]
    fn edge_set_order_is_lexicographic() {
        let g = k4();
        let a = EdgeSet::from_indices(&g, &[0, 5]).unwrap();
        let b = EdgeSet::from_indices(&g, &[1, 2]).unwrap();
        assert!(a < b);
    }
}
