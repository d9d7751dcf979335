//! Hists in cubic graphs: certification, the complement correspondence with
//! non-separating 2-regular subgraphs, the mod-4 bipartite filter, an exact
//! backtracking solver, and an independent enumeration oracle.
//!
//! A Hist (homeomorphically irreducible spanning tree) is a spanning tree
//! without a vertex of degree two; in a cubic graph every tree degree is 1 or
//! 3. The complement of a Hist is a 2-regular subgraph H with `n/2 + 1`
//! vertices whose edge removal leaves the graph connected, and conversely:
//! if H is 2-regular with `n/2 + 1` vertices and `G - E(H)` is connected,
//! then `|E(H)| = |V(H)|` so `G - E(H)` has `n - 1` edges and, being
//! connected and spanning, is a spanning tree; vertices of H have tree
//! degree 1 and all others degree 3, so the tree is a Hist.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeSet, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HistError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set does not span all vertices")]
    NotSpanning,
    #[error("edge set contains a cycle")]
    ContainsCycle,
    #[error("edge set is not connected")]
    TreeDisconnected,
    #[error("vertex {0} has tree degree two")]
    DegreeTwoVertex(usize),
    #[error("certificate failed verification: {0}")]
    InvalidCertificate(Box<HistError>),
    #[error("removing the subgraph disconnects the graph")]
    NotNonSeparating,
    #[error("subgraph covers {got} vertices, expected n/2 + 1 = {expected}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("edge set is not a disjoint union of cycles")]
    NotTwoRegular,
    #[error("instance with {n} vertices exceeds the oracle cap {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("edge set belongs to a different host graph")]
    HostMismatch,
}

/// A verified Hist: the tree edge set with its leaf/branch counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HistCertificate {
    pub tree_edges: EdgeSet,
    /// Number of leaves (t1).
    pub leaf_count: usize,
    /// Number of degree-3 vertices (t3).
    pub branch_count: usize,
}

/// A vertex-disjoint union of cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRegularSubgraph {
    /// Cycles as vertex sequences, each in canonical rotation (smallest
    /// vertex first, then its smaller neighbor), sorted by first vertex.
    pub cycles: Vec<Vec<usize>>,
    /// Sorted list of covered vertices.
    pub covered_vertices: Vec<usize>,
    pub edge_set: EdgeSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    HasHist,
    NoHist,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    Decide,
    First,
    Count,
    EnumerateAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FilterUsed {
    None,
    Mod4,
    Facial,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub verdict: Verdict,
    pub certificates: Vec<HistCertificate>,
    pub count: Option<u64>,
    pub nodes_explored: u64,
    pub filter_used: FilterUsed,
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
pub const DEFAULT_ORACLE_CAP: usize = 24;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub mode: SolveMode,
    pub node_budget: u64,
    pub use_mod4_filter: bool,
}

impl SolveOptions {
    pub fn new(mode: SolveMode) -> SolveOptions {
        SolveOptions {
            mode,
            node_budget: DEFAULT_NODE_BUDGET,
            use_mod4_filter: true,
        }
    }
}

fn require_connected_cubic(g: &Graph) -> Result<(), HistError> {
    if !g.is_cubic() {
        return Err(HistError::NotCubic);
    }
    if !g.is_connected() {
        return Err(HistError::Disconnected);
    }
    Ok(())
}

/// Checks that `t` is a Hist of `g` and returns its certificate.
pub fn verify_hist(g: &Graph, t: &EdgeSet) -> Result<HistCertificate, HistError> {
    require_connected_cubic(g)?;
    if !t.matches_host(g) {
        return Err(HistError::HostMismatch);
    }
    let mut deg = vec![0usize; g.n()];
    for e in t.iter() {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if let Some(v) = (0..g.n()).find(|&v| deg[v] == 2) {
        return Err(HistError::DegreeTwoVertex(v));
    }
    if deg.contains(&0) {
        return Err(HistError::NotSpanning);
    }
    // Acyclicity via union-find.
    let mut uf = UnionFind::new(g.n());
    for e in t.iter() {
        let (u, v) = g.edge(e);
        if !uf.union(u, v) {
            return Err(HistError::ContainsCycle);
        }
    }
    if t.len() != g.n() - 1 {
        return Err(HistError::TreeDisconnected);
    }
    let leaf_count = deg.iter().filter(|&&d| d == 1).count();
    let branch_count = deg.iter().filter(|&&d| d == 3).count();
    Ok(HistCertificate {
        tree_edges: t.clone(),
        leaf_count,
        branch_count,
    })
}

/// Decomposes an edge set into vertex-disjoint cycles. Fails unless every
/// covered vertex has degree exactly two in the set.
pub fn two_regular_from_edge_set(g: &Graph, s: &EdgeSet) -> Result<TwoRegularSubgraph, HistError> {
    if !s.matches_host(g) {
        return Err(HistError::HostMismatch);
    }
    let mut deg = vec![0usize; g.n()];
    for e in s.iter() {
        let (u, v) = g.edge(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return Err(HistError::NotTwoRegular);
    }
    let covered_vertices: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 2).collect();
    let mut visited = vec![false; g.n()];
    let mut cycles = Vec::new();
    for &start in &covered_vertices {
        if visited[start] {
            continue;
        }
        // Walk the cycle, preferring the smaller neighbor first so the
        // rotation is canonical.
        let mut cycle = vec![start];
        visited[start] = true;
        let mut prev = start;
        let mut cur = *g
            .neighbors(start)
            .iter()
            .filter(|&&w| s.contains(g.edge_index(start, w).unwrap()))
            .min()
            .unwrap();
        while cur != start {
            visited[cur] = true;
            cycle.push(cur);
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev && s.contains(g.edge_index(cur, w).unwrap()))
                .unwrap();
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    Ok(TwoRegularSubgraph {
        cycles,
        covered_vertices,
        edge_set: s.clone(),
    })
}

/// The complement of a Hist: the 2-regular subgraph on the leaves of the
/// tree, with `n/2 + 1` vertices.
pub fn complement_of_hist(
    g: &Graph,
    cert: &HistCertificate,
) -> Result<TwoRegularSubgraph, HistError> {
    verify_hist(g, &cert.tree_edges).map_err(|e| HistError::InvalidCertificate(Box::new(e)))?;
    let comp = cert.tree_edges.complement(g);
    let h = two_regular_from_edge_set(g, &comp)?;
    debug_assert_eq!(h.covered_vertices.len(), g.n() / 2 + 1);
    Ok(h)
}

/// Converse direction: a non-separating 2-regular subgraph with `n/2 + 1`
/// vertices determines a Hist, namely the complement edge set.
pub fn hist_from_two_regular(
    g: &Graph,
    h: &TwoRegularSubgraph,
) -> Result<HistCertificate, HistError> {
    require_connected_cubic(g)?;
    // Re-derive the structure from the edge set rather than trusting the
    // cycle list.
    let checked = two_regular_from_edge_set(g, &h.edge_set)?;
    let expected = g.n() / 2 + 1;
    if checked.covered_vertices.len() != expected {
        return Err(HistError::WrongVertexCount {
            expected,
            got: checked.covered_vertices.len(),
        });
    }
    if !g.connected_with_edge_filter(|e| !h.edge_set.contains(e)) {
        return Err(HistError::NotNonSeparating);
    }
    let tree = h.edge_set.complement(g);
    verify_hist(g, &tree)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mod4Verdict {
    NoHist,
    Inconclusive,
}

/// Bipartite parity filter: a bipartite cubic graph with `n ≡ 0 (mod 4)` has
/// no Hist. All other cases are inconclusive.
pub fn mod4_filter(g: &Graph) -> Result<Mod4Verdict, HistError> {
    if !g.is_cubic() {
        return Err(HistError::NotCubic);
    }
    if crate::graph::bipartition(g).is_some() && g.n().is_multiple_of(4) {
        Ok(Mod4Verdict::NoHist)
    } else {
        Ok(Mod4Verdict::Inconclusive)
    }
}

// --- Backtracking solver -------------------------------------------------
//
// Every edge is labeled Tree or Cycle. A labeling yields a Hist iff the Tree
// edges form a spanning tree and every vertex carries 0 or 2 Cycle edges.
// Unit propagation: a vertex with two Cycle edges forces its third edge to
// Tree; a vertex with two Tree edges forces its third edge to Tree (tree
// degree two is forbidden); Tree edges stay acyclic (union-find); the graph
// restricted to Tree-or-undecided edges must stay connected.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Undecided,
    Tree,
    Cycle,
}

#[derive(Clone)]
struct SearchState {
    labels: Vec<Label>,
    tree_deg: Vec<u8>,
    cyc_deg: Vec<u8>,
    undecided_deg: Vec<u8>,
    uf: UnionFind,
    undecided: usize,
}

impl SearchState {
    fn new(g: &Graph) -> SearchState {
        SearchState {
            labels: vec![Label::Undecided; g.m()],
            tree_deg: vec![0; g.n()],
            cyc_deg: vec![0; g.n()],
            undecided_deg: vec![3; g.n()],
            uf: UnionFind::new(g.n()),
            undecided: g.m(),
        }
    }

    /// Assigns a label and propagates to fixpoint. Returns false on
    /// contradiction.
    fn assign(&mut self, g: &Graph, edge: usize, label: Label) -> bool {
        let mut queue = vec![(edge, label)];
        while let Some((e, l)) = queue.pop() {
            match self.labels[e] {
                Label::Undecided => {}
                prev if prev == l => continue,
                _ => return false,
            }
            self.labels[e] = l;
            self.undecided -= 1;
            let (u, v) = g.edge(e);
            if l == Label::Tree && !self.uf.union(u, v) {
                return false;
            }
            for x in [u, v] {
                self.undecided_deg[x] -= 1;
                match l {
                    Label::Tree => self.tree_deg[x] += 1,
                    Label::Cycle => self.cyc_deg[x] += 1,
                    Label::Undecided => unreachable!(),
                }
                if self.cyc_deg[x] > 2 {
                    return false;
                }
                if self.undecided_deg[x] == 0 && self.cyc_deg[x] == 1 {
                    return false;
                }
                // Two decided Cycle edges, or two decided Tree edges: the
                // remaining edge must be Tree.
                if (self.cyc_deg[x] == 2 || self.tree_deg[x] == 2) && self.undecided_deg[x] > 0 {
                    for &f in g.incident_edges(x) {
                        if self.labels[f] == Label::Undecided {
                            queue.push((f, Label::Tree));
                        }
                    }
                }
            }
        }
        true
    }

    fn connectivity_ok(&self, g: &Graph) -> bool {
        g.connected_with_edge_filter(|e| self.labels[e] != Label::Cycle)
    }

    /// Branching heuristic: the undecided edge incident to the vertex with
    /// the most decided edges; ties by smallest edge index.
    fn pick_branch_edge(&self, g: &Graph) -> usize {
        let mut best: Option<(usize, usize)> = None; // (decided count, edge)
        for v in 0..g.n() {
            if self.undecided_deg[v] == 0 {
                continue;
            }
            let decided = 3 - self.undecided_deg[v] as usize;
            let e = *g
                .incident_edges(v)
                .iter()
                .find(|&&e| self.labels[e] == Label::Undecided)
                .unwrap();
            let better = match best {
                None => true,
                Some((d, be)) => decided > d || (decided == d && e < be),
            };
            if better {
                best = Some((decided, e));
            }
        }
        best.unwrap().1
    }
}

struct SearchDriver<'a> {
    g: &'a Graph,
    mode: SolveMode,
    budget: u64,
    nodes: u64,
    exceeded: bool,
    done: bool,
    count: u64,
    trees: Vec<EdgeSet>,
}

impl SearchDriver<'_> {
    fn record(&mut self, state: &SearchState) {
        self.count += 1;
        match self.mode {
            SolveMode::Decide => self.done = true,
            SolveMode::First => {
                let mut t = EdgeSet::new(self.g);
                for (e, &l) in state.labels.iter().enumerate() {
                    if l == Label::Tree {
                        t.insert(e).unwrap();
                    }
                }
                self.trees.push(t);
                self.done = true;
            }
            SolveMode::Count => {}
            SolveMode::EnumerateAll => {
                let mut t = EdgeSet::new(self.g);
                for (e, &l) in state.labels.iter().enumerate() {
                    if l == Label::Tree {
                        t.insert(e).unwrap();
                    }
                }
                self.trees.push(t);
            }
        }
    }

    fn search(&mut self, state: SearchState) {
        if self.done || self.exceeded {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exceeded = true;
            return;
        }
        if !state.connectivity_ok(self.g) {
            return;
        }
        if state.undecided == 0 {
            self.record(&state);
            return;
        }
        let e = state.pick_branch_edge(self.g);
        for label in [Label::Tree, Label::Cycle] {
            let mut child = state.clone();
            if child.assign(self.g, e, label) {
                self.search(child);
            }
            if self.done || self.exceeded {
                return;
            }
        }
    }
}

pub fn solve(g: &Graph, mode: SolveMode) -> Result<SolveReport, HistError> {
    solve_with_options(g, &SolveOptions::new(mode))
}

pub fn solve_with_options(g: &Graph, opts: &SolveOptions) -> Result<SolveReport, HistError> {
    require_connected_cubic(g)?;
    if opts.use_mod4_filter && mod4_filter(g)? == Mod4Verdict::NoHist {
        return Ok(SolveReport {
            verdict: Verdict::NoHist,
            certificates: Vec::new(),
            count: Some(0),
            nodes_explored: 0,
            filter_used: FilterUsed::Mod4,
        });
    }
    let mut driver = SearchDriver {
        g,
        mode: opts.mode,
        budget: opts.node_budget,
        nodes: 0,
        exceeded: false,
        done: false,
        count: 0,
        trees: Vec::new(),
    };
    driver.search(SearchState::new(g));
    let mut trees = driver.trees;
    trees.sort();
    let certificates: Vec<HistCertificate> = trees
        .iter()
        .map(|t| verify_hist(g, t).expect("solver produced an invalid tree"))
        .collect();
    let verdict = if driver.exceeded {
        Verdict::BudgetExceeded
    } else if driver.count > 0 {
        Verdict::HasHist
    } else {
        Verdict::NoHist
    };
    let count = match (verdict, opts.mode) {
        (Verdict::BudgetExceeded, _) => None,
        (_, SolveMode::Count | SolveMode::EnumerateAll) => Some(driver.count),
        (Verdict::NoHist, _) => Some(0),
        _ => None,
    };
    Ok(SolveReport {
        verdict,
        certificates,
        count,
        nodes_explored: driver.nodes,
        filter_used: FilterUsed::None,
    })
}

// --- Independent oracle ---------------------------------------------------

/// All simple cycles, each reported once with its minimal vertex first.
pub fn all_simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    let mut in_path = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        for &w in g.neighbors(u) {
            if w == start {
                // Close only in one direction: second vertex below last.
                if path.len() >= 3 && path[1] < u {
                    cycles.push(path.clone());
                }
            } else if w > start && !in_path[w] {
                in_path[w] = true;
                path.push(w);
                dfs(g, start, path, in_path, cycles);
                path.pop();
                in_path[w] = false;
            }
        }
    }

    for start in 0..g.n() {
        in_path[start] = true;
        path.push(start);
        dfs(g, start, &mut path, &mut in_path, &mut cycles);
        path.pop();
        in_path[start] = false;
    }
    cycles
}

/// Enumerates every Hist of `g` by the complement characterization: all
/// vertex-disjoint unions of cycles covering exactly `n/2 + 1` vertices whose
/// removal keeps `g` connected. Entirely independent of the backtracking
/// solver; intended for small instances.
pub fn oracle_enumerate(g: &Graph) -> Result<Vec<HistCertificate>, HistError> {
    oracle_enumerate_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn oracle_enumerate_capped(g: &Graph, cap: usize) -> Result<Vec<HistCertificate>, HistError> {
    require_connected_cubic(g)?;
    if g.n() > cap {
        return Err(HistError::InstanceTooLarge { n: g.n(), cap });
    }
    let target = g.n() / 2 + 1;
    let cycles = all_simple_cycles(g);
    let masks: Vec<u64> = cycles
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut certs = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        cycles: &[Vec<usize>],
        masks: &[u64],
        from: usize,
        used: u64,
        covered: usize,
        target: usize,
        chosen: &mut Vec<usize>,
        certs: &mut Vec<HistCertificate>,
    ) {
        if covered == target {
            let mut s = EdgeSet::new(g);
            for &ci in chosen.iter() {
                let c = &cycles[ci];
                for i in 0..c.len() {
                    let e = g.edge_index(c[i], c[(i + 1) % c.len()]).unwrap();
                    s.insert(e).unwrap();
                }
            }
            if g.connected_with_edge_filter(|e| !s.contains(e)) {
                let h = two_regular_from_edge_set(g, &s).unwrap();
                certs.push(hist_from_two_regular(g, &h).unwrap());
            }
            return;
        }
        for ci in from..cycles.len() {
            let len = cycles[ci].len();
            if covered + len > target || masks[ci] & used != 0 {
                continue;
            }
            chosen.push(ci);
            rec(
                g,
                cycles,
                masks,
                ci + 1,
                used | masks[ci],
                covered + len,
                target,
                chosen,
                certs,
            );
            chosen.pop();
        }
    }

    rec(
        g, &cycles, &masks, 0, 0, 0, target, &mut chosen, &mut certs,
    );
    certs.sort();
    certs.dedup();
    Ok(certs)
}

// --- Union-find -----------------------------------------------------------

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when the two elements were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

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
    fn star_of_k4_is_a_hist() {
        let g = k4();
        let star = EdgeSet::from_indices(&g, &[0, 1, 2]).unwrap();
        let cert = verify_hist(&g, &star).unwrap();
        assert_eq!(cert.leaf_count, 3);
        assert_eq!(cert.branch_count, 1);
    }

    #[test]
    fn path_of_k4_is_rejected() {
        let g = k4();
        // 0-1, 1-2, 2-3.
        let ids: Vec<usize> = [(0, 1), (1, 2), (2, 3)]
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let path = EdgeSet::from_indices(&g, &ids).unwrap();
        assert!(matches!(
            verify_hist(&g, &path),
            Err(HistError::DegreeTwoVertex(_))
        ));
    }

    #[test]
    fn complement_of_k4_star_is_a_triangle() {
        let g = k4();
        let star = EdgeSet::from_indices(&g, &[0, 1, 2]).unwrap();
        let cert = verify_hist(&g, &star).unwrap();
        let h = complement_of_hist(&g, &cert).unwrap();
        assert_eq!(h.covered_vertices, vec![1, 2, 3]);
        assert_eq!(h.cycles, vec![vec![1, 2, 3]]);
        assert_eq!(h.covered_vertices.len(), g.n() / 2 + 1);
    }

    #[test]
    fn complement_rejects_a_path() {
        let g = k4();
        let ids: Vec<usize> = [(0, 1), (1, 2), (2, 3)]
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let path = EdgeSet::from_indices(&g, &ids).unwrap();
        let fake = HistCertificate {
            tree_edges: path,
            leaf_count: 2,
            branch_count: 0,
        };
        assert!(matches!(
            complement_of_hist(&g, &fake),
            Err(HistError::InvalidCertificate(_))
        ));
    }

    #[test]
    fn triangle_complement_recovers_the_star() {
        let g = k4();
        let ids: Vec<usize> = [(1, 2), (1, 3), (2, 3)]
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let tri = EdgeSet::from_indices(&g, &ids).unwrap();
        let h = two_regular_from_edge_set(&g, &tri).unwrap();
        let cert = hist_from_two_regular(&g, &h).unwrap();
        assert_eq!(
            cert.tree_edges.to_sorted_vec(),
            vec![
                g.edge_index(0, 1).unwrap(),
                g.edge_index(0, 2).unwrap(),
                g.edge_index(0, 3).unwrap()
            ]
        );
    }

    #[test]
    fn k33_double_star_from_four_cycle() {
        let g = k33();
        // 4-cycle avoiding vertices 2 and 5.
        let ids: Vec<usize> = [(0, 3), (3, 1), (1, 4), (4, 0)]
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).unwrap())
            .collect();
        let s = EdgeSet::from_indices(&g, &ids).unwrap();
        let h = two_regular_from_edge_set(&g, &s).unwrap();
        let cert = hist_from_two_regular(&g, &h).unwrap();
        assert_eq!(cert.leaf_count, 4);
        assert_eq!(cert.branch_count, 2);
        // Centers are the two uncovered vertices, 2 and 5.
        let back = complement_of_hist(&g, &cert).unwrap();
        assert_eq!(back.covered_vertices, vec![0, 1, 3, 4]);
    }

    #[test]
    fn wrong_vertex_count_on_petersen_pentagon() {
        let g = catalog("petersen").unwrap().graph;
        let ids: Vec<usize> = (0..5)
            .map(|i| g.edge_index(i, (i + 1) % 5).unwrap())
            .collect();
        let s = EdgeSet::from_indices(&g, &ids).unwrap();
        let h = two_regular_from_edge_set(&g, &s).unwrap();
        assert_eq!(
            hist_from_two_regular(&g, &h),
            Err(HistError::WrongVertexCount {
                expected: 6,
                got: 5
            })
        );
    }

    #[test]
    fn mod4_filter_cases() {
        let cube = catalog("cube").unwrap().graph;
        assert_eq!(mod4_filter(&cube).unwrap(), Mod4Verdict::NoHist);
        assert_eq!(mod4_filter(&k33()).unwrap(), Mod4Verdict::Inconclusive);
        let petersen = catalog("petersen").unwrap().graph;
        assert_eq!(mod4_filter(&petersen).unwrap(), Mod4Verdict::Inconclusive);
    }

    #[test]
    fn k4_has_exactly_four_hists() {
        let g = k4();
        let report = solve(&g, SolveMode::Count).unwrap();
        assert_eq!(report.verdict, Verdict::HasHist);
        assert_eq!(report.count, Some(4));
    }

    #[test]
    fn k33_has_exactly_nine_hists() {
        let g = k33();
        let report = solve(&g, SolveMode::Count).unwrap();
        assert_eq!(report.count, Some(9));
    }

    #[test]
    fn dodecahedron_has_no_hist() {
        let g = catalog("dodecahedron").unwrap().graph;
        let report = solve(&g, SolveMode::Decide).unwrap();
        assert_eq!(report.verdict, Verdict::NoHist);
        assert_eq!(report.filter_used, FilterUsed::None);
    }

    #[test]
    fn oracle_matches_solver_on_small_graphs() {
        for g in [k4(), k33(), catalog("petersen").unwrap().graph] {
            let solved = solve(&g, SolveMode::EnumerateAll).unwrap();
            let oracle = oracle_enumerate(&g).unwrap();
            assert_eq!(solved.certificates, oracle);
        }
    }

    #[test]
    fn oracle_on_cube_is_empty() {
        let g = catalog("cube").unwrap().graph;
        assert!(oracle_enumerate(&g).unwrap().is_empty());
        // Filterless search agrees.
        let mut opts = SolveOptions::new(SolveMode::Decide);
        opts.use_mod4_filter = false;
        let report = solve_with_options(&g, &opts).unwrap();
        assert_eq!(report.verdict, Verdict::NoHist);
    }

    #[test]
    fn counting_identities_hold() {
        let g = k33();
        let report = solve(&g, SolveMode::EnumerateAll).unwrap();
        for cert in &report.certificates {
            assert_eq!(cert.leaf_count, cert.branch_count + 2);
            assert_eq!(cert.leaf_count, g.n() / 2 + 1);
            assert_eq!(cert.tree_edges.len(), g.n() - 1);
        }
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let g = catalog("dodecahedron").unwrap().graph;
        let mut opts = SolveOptions::new(SolveMode::Decide);
        opts.node_budget = 2;
        let report = solve_with_options(&g, &opts).unwrap();
        assert_eq!(report.verdict, Verdict::BudgetExceeded);
        assert_eq!(report.count, None);
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let g = catalog("dodecahedron").unwrap().graph;
        assert!(matches!(
            oracle_enumerate_capped(&g, 16),
            Err(HistError::InstanceTooLarge { n: 20, cap: 16 })
        ));
    }

    #[test]
    fn all_simple_cycles_of_k4() {
        let g = k4();
        let cycles = all_simple_cycles(&g);
        // 4 triangles and 3 four-cycles.
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(cycles.len(), 7);
    }
}
