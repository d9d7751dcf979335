//! Graph constructions: vertex inflations, Eulerian orientations, bipartite
//! cubic inflations of 2k-regular graphs, random regular graphs via the
//! pairing model, honeycomb torus hexangulations, and ring insertion.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::graph::{EdgeSet, Graph};
use crate::hist::{two_regular_from_edge_set, TwoRegularSubgraph};
use crate::topology::{self, RotationSystem};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("vertex {vertex} has degree {degree}, minimum degree 3 required")]
    MinDegreeTooLow { vertex: usize, degree: usize },
    #[error("graph is disconnected")]
    NotConnected,
    #[error("vertex {0} has odd degree, Eulerian orientation impossible")]
    OddDegreeVertex(usize),
    #[error("graph is not 2k-regular for any k >= 2")]
    NotRegularEven,
    #[error("k = {0} too small, need k >= 2")]
    KTooSmall(usize),
    #[error("n*d = {n}*{d} is odd, no {d}-regular graph on {n} vertices")]
    ParityViolation { n: usize, d: usize },
    #[error("degree {d} too large for {n} vertices")]
    DegreeTooLarge { n: usize, d: usize },
    #[error("pairing model rejected {0} samples without finding a simple graph")]
    RejectionLimitExceeded(usize),
    #[error("honeycomb parameters ({m}, {n}) too small, need m >= 2 and n >= 2")]
    ParameterTooSmall { m: usize, n: usize },
    #[error("degenerate torus wrap for m = {0}")]
    DegenerateWrap(usize),
    #[error("the given vertices do not form a chordless 6-cycle")]
    NotChordlessSixCycle,
    #[error("cut is not well defined: attachment sides along the cycle do not alternate")]
    CutNotWellDefined,
    #[error("ring insertion produced a non-hexangulation (internal bug)")]
    ResultNotHexangulation,
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// An edge orientation: `forward[e]` means the edge points from its lower
/// endpoint to its higher endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub forward: Vec<bool>,
    pub indegree: Vec<usize>,
    pub outdegree: Vec<usize>,
}

impl Orientation {
    pub fn from_directed_edges(g: &Graph, forward: Vec<bool>) -> Orientation {
        let mut indegree = vec![0; g.n()];
        let mut outdegree = vec![0; g.n()];
        for (e, &fwd) in forward.iter().enumerate() {
            let (lo, hi) = g.edge(e);
            let (tail, head) = if fwd { (lo, hi) } else { (hi, lo) };
            outdegree[tail] += 1;
            indegree[head] += 1;
        }
        Orientation {
            forward,
            indegree,
            outdegree,
        }
    }

    pub fn head(&self, g: &Graph, e: usize) -> usize {
        let (lo, hi) = g.edge(e);
        if self.forward[e] {
            hi
        } else {
            lo
        }
    }

    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (lo, hi) = g.edge(e);
        if self.forward[e] {
            lo
        } else {
            hi
        }
    }

    pub fn reversed(&self, g: &Graph) -> Orientation {
        Orientation::from_directed_edges(g, self.forward.iter().map(|&b| !b).collect())
    }
}

/// How the incident edges are arranged around each expansion cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationChoice {
    /// Ascending neighbor index.
    Deterministic,
    /// Seeded shuffle of the deterministic arrangement.
    Seeded(u64),
}

#[derive(Debug, Clone)]
pub struct InflationResult {
    pub inflated: Graph,
    /// The 2-factor of expansion cycles (chordless by construction).
    pub factor: TwoRegularSubgraph,
    /// For each inflated vertex: the base vertex it came from and its
    /// position on that vertex's cycle.
    pub vertex_map: Vec<(usize, usize)>,
    /// Present for bipartite inflations: 2-coloring of the inflated graph.
    pub coloring: Option<Vec<u8>>,
}

impl InflationResult {
    /// Contracts each factor cycle back to its base vertex and returns the
    /// resulting adjacency as a sorted edge list.
    pub fn contracted_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .inflated
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, _)| !self.factor.edge_set.contains(e))
            .map(|(_, &(u, v))| {
                let (x, y) = (self.vertex_map[u].0, self.vertex_map[v].0);
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

fn check_base(h: &Graph) -> Result<(), ConstructError> {
    if !h.is_connected() {
        return Err(ConstructError::NotConnected);
    }
    for v in 0..h.n() {
        if h.degree(v) < 3 {
            return Err(ConstructError::MinDegreeTooLow {
                vertex: v,
                degree: h.degree(v),
            });
        }
    }
    Ok(())
}

/// Arrangement of incident edges around each vertex, default ascending by
/// the neighboring vertex.
fn edge_arrangements(h: &Graph, choice: RotationChoice) -> Vec<Vec<usize>> {
    let mut arrangements: Vec<Vec<usize>> = (0..h.n())
        .map(|x| {
            let mut inc: Vec<usize> = h.incident_edges(x).to_vec();
            inc.sort_by_key(|&e| h.other_endpoint(e, x));
            inc
        })
        .collect();
    if let RotationChoice::Seeded(seed) = choice {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for arr in arrangements.iter_mut() {
            arr.shuffle(&mut rng);
        }
    }
    arrangements
}

struct InflationSkeleton {
    inflated: Graph,
    vertex_map: Vec<(usize, usize)>,
    offsets: Vec<usize>,
}

fn build_inflation(h: &Graph, arrangements: Vec<Vec<usize>>) -> Result<InflationSkeleton, ConstructError> {
    let mut offsets = Vec::with_capacity(h.n());
    let mut total = 0;
    let mut vertex_map = Vec::new();
    for x in 0..h.n() {
        offsets.push(total);
        for p in 0..h.degree(x) {
            vertex_map.push((x, p));
        }
        total += h.degree(x);
    }
    let mut edges = Vec::new();
    // Expansion cycle edges.
    for (x, &offset) in offsets.iter().enumerate() {
        let d = h.degree(x);
        for p in 0..d {
            edges.push((offset + p, offset + (p + 1) % d));
        }
    }
    // One inflated edge per base edge, joining the designated cycle ports.
    for (e, &(x, y)) in h.edges().iter().enumerate() {
        let px = arrangements[x].iter().position(|&f| f == e).unwrap();
        let py = arrangements[y].iter().position(|&f| f == e).unwrap();
        edges.push((offsets[x] + px, offsets[y] + py));
    }
    let inflated = Graph::from_edges(total, &edges)?;
    Ok(InflationSkeleton {
        inflated,
        vertex_map,
        offsets,
    })
}

fn factor_of(skel: &InflationSkeleton, h: &Graph) -> TwoRegularSubgraph {
    let g = &skel.inflated;
    let mut s = EdgeSet::new(g);
    for x in 0..h.n() {
        let d = h.degree(x);
        for p in 0..d {
            let a = skel.offsets[x] + p;
            let b = skel.offsets[x] + (p + 1) % d;
            s.insert(g.edge_index(a, b).unwrap()).unwrap();
        }
    }
    two_regular_from_edge_set(g, &s).expect("expansion cycles are 2-regular")
}

/// Expands every vertex of `h` into a chordless cycle, one cycle vertex per
/// incident edge. The result is cubic with `2|E(h)|` vertices.
pub fn inflate(h: &Graph, choice: RotationChoice) -> Result<InflationResult, ConstructError> {
    check_base(h)?;
    let skel = build_inflation(h, edge_arrangements(h, choice))?;
    let factor = factor_of(&skel, h);
    Ok(InflationResult {
        inflated: skel.inflated,
        factor,
        vertex_map: skel.vertex_map,
        coloring: None,
    })
}

/// Orients every edge so indegree equals outdegree at each vertex, by
/// orienting an Eulerian circuit of each component along its traversal.
pub fn eulerian_orientation(h: &Graph) -> Result<Orientation, ConstructError> {
    for v in 0..h.n() {
        if !h.degree(v).is_multiple_of(2) {
            return Err(ConstructError::OddDegreeVertex(v));
        }
    }
    let mut forward = vec![false; h.m()];
    let mut used = vec![false; h.m()];
    let mut next_edge = vec![0usize; h.n()];
    for start in 0..h.n() {
        if h.degree(start) == 0 || h.incident_edges(start).iter().all(|&e| used[e]) {
            continue;
        }
        // Hierholzer, iterative. Each edge is oriented in the direction the
        // circuit traverses it.
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            let inc = h.incident_edges(v);
            while next_edge[v] < inc.len() && used[inc[next_edge[v]]] {
                next_edge[v] += 1;
            }
            if next_edge[v] == inc.len() {
                stack.pop();
                continue;
            }
            let e = inc[next_edge[v]];
            used[e] = true;
            let w = h.other_endpoint(e, v);
            let (lo, _) = h.edge(e);
            forward[e] = v == lo;
            stack.push(w);
        }
    }
    let o = Orientation::from_directed_edges(h, forward);
    debug_assert!((0..h.n()).all(|v| o.indegree[v] == o.outdegree[v]));
    Ok(o)
}

/// Bipartite cubic inflation of a connected 2k-regular graph, k >= 2.
///
/// Around each expansion cycle the external arcs alternate between directed
/// towards and away from the cycle (interleaving the sorted in-arc and
/// out-arc lists of an Eulerian orientation); each cycle edge is then
/// oriented from its outward-external endpoint to its inward-external
/// endpoint, leaving every vertex with indegree 3 or outdegree 3. The two
/// classes are the 2-coloring.
pub fn bipartite_inflate(h: &Graph, k: usize) -> Result<InflationResult, ConstructError> {
    if k < 2 {
        return Err(ConstructError::KTooSmall(k));
    }
    if h.n() == 0 || (0..h.n()).any(|v| h.degree(v) != 2 * k) {
        return Err(ConstructError::NotRegularEven);
    }
    check_base(h)?;
    let orientation = eulerian_orientation(h)?;
    // Interleave: even cycle positions take in-arcs, odd take out-arcs.
    let arrangements: Vec<Vec<usize>> = (0..h.n())
        .map(|x| {
            let ins: Vec<usize> = h
                .incident_edges(x)
                .iter()
                .copied()
                .filter(|&e| orientation.head(h, e) == x)
                .collect();
            let outs: Vec<usize> = h
                .incident_edges(x)
                .iter()
                .copied()
                .filter(|&e| orientation.tail(h, e) == x)
                .collect();
            debug_assert_eq!(ins.len(), k);
            debug_assert_eq!(outs.len(), k);
            let mut arr = Vec::with_capacity(2 * k);
            for i in 0..k {
                arr.push(ins[i]);
                arr.push(outs[i]);
            }
            arr
        })
        .collect();
    let skel = build_inflation(h, arrangements)?;
    let factor = factor_of(&skel, h);
    // Even positions carry an inward external arc and become indegree-3
    // vertices; odd positions outdegree-3.
    let coloring: Vec<u8> = skel
        .vertex_map
        .iter()
        .map(|&(_, p)| (p % 2) as u8)
        .collect();
    // Orientation of the inflated graph, for the indegree/outdegree witness.
    let g = &skel.inflated;
    let forward: Vec<bool> = (0..g.m())
        .map(|e| {
            let (lo, hi) = g.edge(e);
            // Tail is the outward (odd-position) endpoint for external
            // edges, and the odd-position endpoint for cycle edges too.
            let tail_is_lo = skel.vertex_map[lo].1 % 2 == 1;
            debug_assert_ne!(skel.vertex_map[lo].1 % 2, skel.vertex_map[hi].1 % 2);
            tail_is_lo
        })
        .collect();
    let o = Orientation::from_directed_edges(g, forward);
    debug_assert!((0..g.n()).all(|v| o.indegree[v] == 3 || o.outdegree[v] == 3));
    Ok(InflationResult {
        inflated: skel.inflated,
        factor,
        vertex_map: skel.vertex_map,
        coloring: Some(coloring),
    })
}

const PAIRING_RETRY_CAP: usize = 10_000;

/// Random simple d-regular graph on n vertices via the configuration model
/// with full-resample rejection. Deterministic for a fixed seed.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, ConstructError> {
    if d >= n {
        return Err(ConstructError::DegreeTooLarge { n, d });
    }
    if !(n * d).is_multiple_of(2) {
        return Err(ConstructError::ParityViolation { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n * d).collect();
    for attempt in 0..PAIRING_RETRY_CAP {
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(n * d / 2);
        let mut ok = true;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0] / d, pair[1] / d);
            if u == v {
                ok = false;
                break;
            }
            edges.push((u.min(v), u.max(v)));
        }
        if !ok {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let _ = attempt;
        return Ok(Graph::from_edges(n, &edges)?);
    }
    Err(ConstructError::RejectionLimitExceeded(PAIRING_RETRY_CAP))
}

/// A graph with an orientable embedding and the generator that produced it.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    pub graph: Graph,
    pub rotation: RotationSystem,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub generator: String,
    pub params: serde_json::Value,
}

/// Brick-wall hexangulation of the torus: m column cycles of length 2n,
/// with horizontal edges alternating by height. Column i sends a horizontal
/// edge to column i + 1 at heights j with j ≡ i (mod 2); the wrap from the
/// last column back to column 0 is twisted up by one when m is odd, which
/// keeps every vertex on exactly one horizontal edge. Cubic, bipartite,
/// 2mn vertices, mn hexagonal faces, genus 1.
pub fn honeycomb_torus(m: usize, n: usize) -> Result<EmbeddedGraph, ConstructError> {
    if m < 2 || n < 2 {
        return Err(ConstructError::ParameterTooSmall { m, n });
    }
    let h = 2 * n;
    let id = |i: usize, j: usize| (i % m) * h + (j % h);
    let twist = m % 2;
    // Height of the right-hand endpoint of the horizontal edge at (i, j).
    let right_of = |i: usize, j: usize| if i == m - 1 { j + twist } else { j };
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..h {
            edges.push((id(i, j), id(i, j + 1)));
            if j % 2 == i % 2 {
                edges.push((id(i, j), id(i + 1, right_of(i, j))));
            }
        }
    }
    let g = Graph::from_edges(m * h, &edges)?;
    // Counterclockwise rotation with columns drawn upward: a rightward
    // horizontal sits between up and down, a leftward one after up.
    let mut rotations = vec![Vec::new(); g.n()];
    for i in 0..m {
        for j in 0..h {
            let v = id(i, j);
            let up = g.edge_index(v, id(i, j + 1)).unwrap();
            let down = g.edge_index(v, id(i, j + h - 1)).unwrap();
            let goes_right = j % 2 == i % 2;
            let horizontal = if goes_right {
                g.edge_index(v, id(i + 1, right_of(i, j))).unwrap()
            } else {
                let left = (i + m - 1) % m;
                // The left neighbor aimed here, possibly through the twist.
                let src_j = if left == m - 1 { j + h - twist } else { j };
                g.edge_index(v, id(left, src_j)).unwrap()
            };
            rotations[v] = if goes_right {
                vec![horizontal, up, down]
            } else {
                vec![up, horizontal, down]
            };
        }
    }
    let rotation = RotationSystem::new(rotations);
    let report = topology::is_hexangulation(&g, &rotation)
        .map_err(|_| ConstructError::DegenerateWrap(m))?;
    if !report.is_hexangulation || report.genus != Some(1) {
        return Err(ConstructError::DegenerateWrap(m));
    }
    Ok(EmbeddedGraph {
        graph: g,
        rotation,
        provenance: Provenance {
            generator: "honeycomb_torus".into(),
            params: json!({ "m": m, "n": n }),
        },
    })
}

/// Side of the third edge at a cycle vertex, relative to the traversal
/// direction: true when the rotation at v reads (prev, third, next)
/// cyclically.
fn third_edge_side(rot: &RotationSystem, v: usize, e_prev: usize, e_third: usize) -> bool {
    let r = &rot.rotations[v];
    debug_assert_eq!(r.len(), 3);
    let pos = |e: usize| r.iter().position(|&f| f == e).unwrap();
    // Cyclic order (prev, third, next) iff third follows prev.
    (pos(e_prev) + 1) % 3 == pos(e_third)
}

/// Cuts a hexangulation along a chordless 6-cycle whose attachments
/// alternate sides, and glues in a 12-vertex hexagonal cylinder (two new
/// 6-cycles joined by an alternating matching). Vertex count grows by 12;
/// genus is preserved.
pub fn insert_ring(g: &EmbeddedGraph, c: &[usize]) -> Result<EmbeddedGraph, ConstructError> {
    let host = &g.graph;
    let n = host.n();
    if c.len() != 6 || !host.is_cubic() {
        return Err(ConstructError::NotChordlessSixCycle);
    }
    let mut seen = std::collections::HashSet::new();
    for &v in c {
        if v >= n || !seen.insert(v) {
            return Err(ConstructError::NotChordlessSixCycle);
        }
    }
    let mut cycle_edges = Vec::with_capacity(6);
    for i in 0..6 {
        match host.edge_index(c[i], c[(i + 1) % 6]) {
            Some(e) => cycle_edges.push(e),
            None => return Err(ConstructError::NotChordlessSixCycle),
        }
    }
    // Chordless: no further edges among the cycle vertices.
    for i in 0..6 {
        for j in i + 1..6 {
            if let Some(e) = host.edge_index(c[i], c[j]) {
                if !cycle_edges.contains(&e) {
                    return Err(ConstructError::NotChordlessSixCycle);
                }
            }
        }
    }
    // Third edge and its side for each cycle vertex.
    let mut third = Vec::with_capacity(6);
    let mut sides = Vec::with_capacity(6);
    for i in 0..6 {
        let e_prev = cycle_edges[(i + 5) % 6];
        let e_next = cycle_edges[i];
        let e_third = *host
            .incident_edges(c[i])
            .iter()
            .find(|&&e| e != e_prev && e != e_next)
            .unwrap();
        third.push(e_third);
        sides.push(third_edge_side(&g.rotation, c[i], e_prev, e_third));
    }
    if (0..6).any(|i| sides[i] == sides[(i + 1) % 6]) {
        return Err(ConstructError::CutNotWellDefined);
    }

    // Detach the third edges on the side of c[0]; they will reattach through
    // the new rings A (adjacent to the cycle) and B (adjacent to the old
    // neighbors).
    let detach: Vec<bool> = sides.iter().map(|&s| s == sides[0]).collect();
    let a = |i: usize| n + i % 6;
    let b = |i: usize| n + 6 + i % 6;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(host.m() + 18);
    let mut detached_neighbor = [usize::MAX; 6];
    for (e, &(u, v)) in host.edges().iter().enumerate() {
        let as_detached = (0..6).find(|&i| detach[i] && third[i] == e);
        match as_detached {
            Some(i) => {
                let other = host.other_endpoint(e, c[i]);
                detached_neighbor[i] = other;
                edges.push((c[i], a(i)));
                edges.push((b(i), other));
            }
            None => edges.push((u, v)),
        }
    }
    for (i, &detached) in detach.iter().enumerate() {
        edges.push((a(i), a(i + 1)));
        edges.push((b(i), b(i + 1)));
        if !detached {
            edges.push((a(i), b(i)));
        }
    }
    let new_graph = Graph::from_edges(n + 12, &edges)?;

    // Rebuild rotations: old edge ids are remapped through vertex pairs,
    // with the detached edges substituted in place.
    let old_pair_to_new = |v: usize, e: usize| -> usize {
        if let Some(i) = (0..6).find(|&i| detach[i] && third[i] == e) {
            if v == c[i] {
                return new_graph.edge_index(c[i], a(i)).unwrap();
            }
            return new_graph.edge_index(b(i), detached_neighbor[i]).unwrap();
        }
        let (x, y) = host.edge(e);
        new_graph.edge_index(x, y).unwrap()
    };
    let base_rotations: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.rotation.rotations[v]
                .iter()
                .map(|&e| old_pair_to_new(v, e))
                .collect()
        })
        .collect();
    // New-vertex rotations follow the honeycomb pattern (next, up, prev) /
    // (next, prev, down); the consistent orientation relative to the host is
    // found by trying the reversed variants.
    let ring_rotation = |i: usize, flip: bool, is_a: bool| -> Vec<usize> {
        let (me, next, prev) = if is_a {
            (a(i), a(i + 1), a(i + 5))
        } else {
            (b(i), b(i + 1), b(i + 5))
        };
        let up_third = if is_a { detach[i] } else { !detach[i] };
        let vertical = if is_a {
            if detach[i] {
                new_graph.edge_index(me, c[i]).unwrap()
            } else {
                new_graph.edge_index(me, b(i)).unwrap()
            }
        } else if detach[i] {
            new_graph.edge_index(me, detached_neighbor[i]).unwrap()
        } else {
            new_graph.edge_index(me, a(i)).unwrap()
        };
        let e_next = new_graph.edge_index(me, next).unwrap();
        let e_prev = new_graph.edge_index(me, prev).unwrap();
        let mut r = if up_third {
            vec![e_next, vertical, e_prev]
        } else {
            vec![e_next, e_prev, vertical]
        };
        if flip {
            r.reverse();
        }
        r
    };
    let original_genus = topology::euler_genus(host, &g.rotation)
        .map_err(|_| ConstructError::ResultNotHexangulation)?;
    for (flip_a, flip_b) in [(false, false), (true, true), (false, true), (true, false)] {
        let mut rotations = base_rotations.clone();
        for i in 0..6 {
            rotations.push(ring_rotation(i, flip_a, true));
        }
        for i in 0..6 {
            rotations.push(ring_rotation(i, flip_b, false));
        }
        let rotation = RotationSystem::new(rotations);
        if let Ok(report) = topology::is_hexangulation(&new_graph, &rotation) {
            if report.is_hexangulation && report.genus == Some(original_genus) {
                return Ok(EmbeddedGraph {
                    graph: new_graph,
                    rotation,
                    provenance: Provenance {
                        generator: "insert_ring".into(),
                        params: json!({ "base": g.provenance.generator, "cycle": c }),
                    },
                });
            }
        }
    }
    Err(ConstructError::ResultNotHexangulation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::graph::classify;

    fn k5() -> Graph {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(5, &edges).unwrap()
    }

    fn k7() -> Graph {
        let mut edges = Vec::new();
        for u in 0..7 {
            for v in u + 1..7 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(7, &edges).unwrap()
    }

    fn octahedron() -> Graph {
        // K_{2,2,2}: complement of a perfect matching on 6 vertices.
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn inflate_k4_gives_twelve_vertices() {
        let g = catalog("k4").unwrap().graph;
        let result = inflate(&g, RotationChoice::Deterministic).unwrap();
        assert_eq!(result.inflated.n(), 12);
        assert!(result.inflated.is_cubic());
        assert_eq!(result.factor.cycles.len(), 4);
        assert!(result.factor.cycles.iter().all(|c| c.len() == 3));
        assert_eq!(result.contracted_edges(), g.edges());
    }

    #[test]
    fn inflate_petersen_gives_thirty_vertices() {
        let g = catalog("petersen").unwrap().graph;
        let result = inflate(&g, RotationChoice::Deterministic).unwrap();
        assert_eq!(result.inflated.n(), 30);
        assert!(result.inflated.is_cubic());
        assert_eq!(result.contracted_edges(), g.edges());
    }

    #[test]
    fn inflate_rejects_low_degree() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            inflate(&g, RotationChoice::Deterministic),
            Err(ConstructError::MinDegreeTooLow { .. })
        ));
    }

    #[test]
    fn factor_cycles_are_chordless() {
        let g = k5();
        let result = inflate(&g, RotationChoice::Seeded(11)).unwrap();
        for cycle in &result.factor.cycles {
            for (i, &u) in cycle.iter().enumerate() {
                for (j, &v) in cycle.iter().enumerate() {
                    let adjacent_on_cycle =
                        (i + 1) % cycle.len() == j || (j + 1) % cycle.len() == i;
                    if i != j && !adjacent_on_cycle {
                        assert!(!result.inflated.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn eulerian_orientation_of_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let o = eulerian_orientation(&g).unwrap();
        for v in 0..3 {
            assert_eq!(o.indegree[v], 1);
            assert_eq!(o.outdegree[v], 1);
        }
        let rev = o.reversed(&g);
        for v in 0..3 {
            assert_eq!(rev.indegree[v], 1);
        }
    }

    #[test]
    fn eulerian_orientation_of_k5() {
        let o = eulerian_orientation(&k5()).unwrap();
        for v in 0..5 {
            assert_eq!(o.indegree[v], 2);
            assert_eq!(o.outdegree[v], 2);
        }
    }

    #[test]
    fn eulerian_orientation_rejects_odd_degree() {
        let g = catalog("k4").unwrap().graph;
        assert!(matches!(
            eulerian_orientation(&g),
            Err(ConstructError::OddDegreeVertex(_))
        ));
    }

    #[test]
    fn bipartite_inflate_k5() {
        let result = bipartite_inflate(&k5(), 2).unwrap();
        let p = classify(&result.inflated);
        assert_eq!(p.n, 20);
        assert!(p.is_cubic && p.is_connected && p.is_bipartite);
        // The interleaved orientation coloring is a proper 2-coloring.
        let coloring = result.coloring.as_ref().unwrap();
        for &(u, v) in result.inflated.edges() {
            assert_ne!(coloring[u], coloring[v]);
        }
        assert_eq!(result.contracted_edges(), k5().edges());
    }

    #[test]
    fn bipartite_inflate_octahedron() {
        let result = bipartite_inflate(&octahedron(), 2).unwrap();
        let p = classify(&result.inflated);
        assert_eq!(p.n, 24);
        assert!(p.is_cubic && p.is_bipartite && p.is_connected);
    }

    #[test]
    fn bipartite_inflate_k7() {
        let result = bipartite_inflate(&k7(), 3).unwrap();
        let p = classify(&result.inflated);
        assert_eq!(p.n, 42);
        assert_eq!(p.n % 4, 2);
        assert!(p.is_cubic && p.is_bipartite && p.is_connected);
    }

    #[test]
    fn bipartite_inflate_rejects_wrong_degree() {
        assert!(matches!(
            bipartite_inflate(&catalog("k4").unwrap().graph, 2),
            Err(ConstructError::NotRegularEven)
        ));
        assert!(matches!(
            bipartite_inflate(&k5(), 1),
            Err(ConstructError::KTooSmall(1))
        ));
    }

    #[test]
    fn random_regular_basic() {
        let g = random_regular(8, 4, 1).unwrap();
        assert_eq!(g.n(), 8);
        assert!((0..8).all(|v| g.degree(v) == 4));
        // Deterministic for a fixed seed.
        assert_eq!(random_regular(8, 4, 1).unwrap(), g);
    }

    #[test]
    fn random_regular_on_six_vertices_is_matching_complement() {
        let g = random_regular(6, 4, 7).unwrap();
        // The only simple 4-regular graphs on 6 vertices are complements of
        // perfect matchings: each vertex misses exactly one other.
        for v in 0..6 {
            assert_eq!(g.degree(v), 4);
        }
        let mut missing = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if !g.has_edge(u, v) {
                    missing.push((u, v));
                }
            }
        }
        assert_eq!(missing.len(), 3);
        let mut covered: Vec<usize> = missing.iter().flat_map(|&(u, v)| [u, v]).collect();
        covered.sort_unstable();
        assert_eq!(covered, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn random_regular_parity_violation() {
        assert!(matches!(
            random_regular(7, 3, 42),
            Err(ConstructError::ParityViolation { n: 7, d: 3 })
        ));
    }

    #[test]
    fn honeycomb_3_3() {
        let emb = honeycomb_torus(3, 3).unwrap();
        let p = classify(&emb.graph);
        assert_eq!(p.n, 18);
        assert_eq!(p.m, 27);
        assert!(p.is_cubic && p.is_bipartite && p.is_connected);
        let faces = topology::trace_faces(&emb.graph, &emb.rotation).unwrap();
        assert_eq!(faces.faces.len(), 9);
        assert!(faces.faces.iter().all(|f| f.len() == 6));
        assert_eq!(topology::euler_genus(&emb.graph, &emb.rotation).unwrap(), 1);
    }

    #[test]
    fn honeycomb_3_2_is_mod4_no_hist() {
        let emb = honeycomb_torus(3, 2).unwrap();
        assert_eq!(emb.graph.n(), 12);
        assert_eq!(
            crate::hist::mod4_filter(&emb.graph).unwrap(),
            crate::hist::Mod4Verdict::NoHist
        );
    }

    #[test]
    fn honeycomb_rejects_small_parameters() {
        assert!(matches!(
            honeycomb_torus(1, 3),
            Err(ConstructError::ParameterTooSmall { m: 1, n: 3 })
        ));
    }

    #[test]
    fn insert_ring_grows_by_twelve() {
        let emb = honeycomb_torus(3, 3).unwrap();
        // Row 0 is a chordless 6-cycle with alternating attachments.
        let row: Vec<usize> = (0..6).collect();
        let bigger = insert_ring(&emb, &row).unwrap();
        assert_eq!(bigger.graph.n(), 30);
        let report = topology::is_hexangulation(&bigger.graph, &bigger.rotation).unwrap();
        assert!(report.is_hexangulation);
        assert_eq!(report.genus, Some(1));
        // Apply again on the same cycle.
        let biggest = insert_ring(&bigger, &row).unwrap();
        assert_eq!(biggest.graph.n(), 42);
        let report = topology::is_hexangulation(&biggest.graph, &biggest.rotation).unwrap();
        assert!(report.is_hexangulation);
        assert_eq!(report.genus, Some(1));
    }

    #[test]
    fn insert_ring_rejects_facial_cycles() {
        let emb = honeycomb_torus(3, 3).unwrap();
        let faces = topology::trace_faces(&emb.graph, &emb.rotation).unwrap();
        let face = faces.faces[0].clone();
        assert!(matches!(
            insert_ring(&emb, &face),
            Err(ConstructError::CutNotWellDefined)
        ));
    }

    #[test]
    fn insert_ring_rejects_non_cycles() {
        let emb = honeycomb_torus(3, 3).unwrap();
        assert!(matches!(
            insert_ring(&emb, &[0, 1, 2, 3, 4, 7]),
            Err(ConstructError::NotChordlessSixCycle)
        ));
    }
}
