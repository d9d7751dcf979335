//! Orientable embeddings via rotation systems: face tracing, Euler genus,
//! fullerene and hexangulation predicates, and the facial-cycle-restricted
//! Hist search for plane cubic graphs.
//!
//! Face-tracing convention: the arc (u, v) is followed by the arc (v, w)
//! where the edge {v, w} is the cyclic successor of the edge {u, v} in the
//! rotation at v. Worked example on K4 with rotations
//! 0: [01 02 03], 1: [01 13 12], 2: [02 12 23], 3: [03 23 13]:
//! starting from the arc 0→1, the successor of edge 01 at vertex 1 is edge
//! 13, giving the arc 1→3; at 3 the successor of 13 is 03, giving 3→0; at 0
//! the successor of 03 is 01, closing the triangular face 0-1-3. The four
//! faces are the triangles 013, 032, 021 and the outer face 123.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formats::FormatError;
use crate::graph::{EdgeSet, Graph};
use crate::hist::{
    self, FilterUsed, HistCertificate, HistError, SolveMode, SolveReport, Verdict,
    DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    InvalidRotation(usize),
    #[error("V - E + F = {0} is odd; not an orientable rotation system (internal bug)")]
    OddEulerDefect(isize),
    #[error("embedding has genus {0}, expected a planar embedding")]
    NotPlanarEmbedding(usize),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("connectivity parameter {0} out of range (cubic graphs never exceed 3)")]
    KOutOfRange(usize),
    #[error(transparent)]
    Hist(#[from] HistError),
}

/// Per-vertex cyclic order of incident edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<usize>>) -> RotationSystem {
        RotationSystem { rotations }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), TopologyError> {
        if self.rotations.len() != g.n() {
            return Err(TopologyError::InvalidRotation(self.rotations.len()));
        }
        for v in 0..g.n() {
            let mut sorted = self.rotations[v].clone();
            sorted.sort_unstable();
            if sorted != g.incident_edges(v) {
                return Err(TopologyError::InvalidRotation(v));
            }
        }
        Ok(())
    }

    /// Builds a rotation system from a 2D drawing: neighbors are ordered
    /// counterclockwise around each vertex.
    pub fn from_coordinates(g: &Graph, coords: &[(f64, f64)]) -> RotationSystem {
        let rotations = (0..g.n())
            .map(|v| {
                let mut inc: Vec<usize> = g.incident_edges(v).to_vec();
                let angle = |e: &usize| {
                    let w = g.other_endpoint(*e, v);
                    let dx = coords[w].0 - coords[v].0;
                    let dy = coords[w].1 - coords[v].1;
                    dy.atan2(dx)
                };
                inc.sort_by(|a, b| angle(a).partial_cmp(&angle(b)).unwrap());
                inc
            })
            .collect();
        RotationSystem { rotations }
    }
}

/// The faces of an embedding, as closed vertex walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    /// Each face is the vertex sequence of its boundary walk; the walk
    /// length (number of arcs) equals the sequence length.
    pub faces: Vec<Vec<usize>>,
}

impl FaceSet {
    pub fn lengths_histogram(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut h = std::collections::BTreeMap::new();
        for f in &self.faces {
            *h.entry(f.len()).or_insert(0) += 1;
        }
        h
    }
}

/// Traces all faces. Every directed arc is consumed exactly once.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<FaceSet, TopologyError> {
    rot.validate(g)?;
    // Arc id: 2*e + 0 for low->high, 2*e + 1 for high->low.
    let arc_id = |g: &Graph, e: usize, tail: usize| {
        let (a, _) = g.edge(e);
        if tail == a {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut pos_of = vec![std::collections::HashMap::new(); g.n()];
    for (slot, rotation) in pos_of.iter_mut().zip(&rot.rotations) {
        for (i, &e) in rotation.iter().enumerate() {
            slot.insert(e, i);
        }
    }
    let mut used = vec![false; 2 * g.m()];
    let mut faces = Vec::new();
    for e0 in 0..g.m() {
        for dir in 0..2 {
            let start_arc = 2 * e0 + dir;
            if used[start_arc] {
                continue;
            }
            let (a, b) = g.edge(e0);
            let (mut tail, mut head, mut e) = if dir == 0 { (a, b, e0) } else { (b, a, e0) };
            let mut walk = Vec::new();
            loop {
                let id = arc_id(g, e, tail);
                if used[id] {
                    break;
                }
                used[id] = true;
                walk.push(tail);
                // Successor of the arriving edge in the rotation at head.
                let rotation = &rot.rotations[head];
                let pos = pos_of[head][&e];
                let e2 = rotation[(pos + 1) % rotation.len()];
                let w = g.other_endpoint(e2, head);
                tail = head;
                head = w;
                e = e2;
            }
            if !walk.is_empty() {
                faces.push(walk);
            }
        }
    }
    Ok(FaceSet { faces })
}

/// Euler genus from V - E + F = 2 - 2g.
pub fn euler_genus(g: &Graph, rot: &RotationSystem) -> Result<usize, TopologyError> {
    if !g.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let faces = trace_faces(g, rot)?;
    let chi = g.n() as isize - g.m() as isize + faces.faces.len() as isize;
    let defect = 2 - chi;
    if defect < 0 || defect % 2 != 0 {
        return Err(TopologyError::OddEulerDefect(chi));
    }
    Ok(defect as usize / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullereneReport {
    pub is_fullerene: bool,
    pub is_cubic: bool,
    pub genus: Option<usize>,
    pub three_connected: bool,
    pub pentagon_count: usize,
    pub hexagon_count: usize,
    pub other_face_count: usize,
}

/// Fullerene predicate: plane 3-connected cubic with faces of length 5 and 6
/// only. A true report always carries exactly 12 pentagons.
pub fn is_fullerene(g: &Graph, rot: &RotationSystem) -> Result<FullereneReport, TopologyError> {
    let faces = trace_faces(g, rot)?;
    let genus = if g.is_connected() {
        Some(euler_genus(g, rot)?)
    } else {
        None
    };
    let pentagon_count = faces.faces.iter().filter(|f| f.len() == 5).count();
    let hexagon_count = faces.faces.iter().filter(|f| f.len() == 6).count();
    let other_face_count = faces.faces.len() - pentagon_count - hexagon_count;
    let is_cubic = g.is_cubic();
    let three_connected = is_cubic && vertex_connectivity_at_least(g, 3)?;
    let is_fullerene =
        is_cubic && genus == Some(0) && three_connected && other_face_count == 0;
    if is_fullerene {
        debug_assert_eq!(pentagon_count, 12);
    }
    Ok(FullereneReport {
        is_fullerene,
        is_cubic,
        genus,
        three_connected,
        pentagon_count,
        hexagon_count,
        other_face_count,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexangulationReport {
    pub is_hexangulation: bool,
    pub two_connected: bool,
    pub genus: Option<usize>,
    pub face_count: usize,
}

/// Hexangulation predicate: 2-connected with every face of length 6.
pub fn is_hexangulation(
    g: &Graph,
    rot: &RotationSystem,
) -> Result<HexangulationReport, TopologyError> {
    let faces = trace_faces(g, rot)?;
    let genus = if g.is_connected() {
        Some(euler_genus(g, rot)?)
    } else {
        None
    };
    let two_connected = g.is_connected() && vertex_connectivity_at_least(g, 2)?;
    let all_hex = faces.faces.iter().all(|f| f.len() == 6);
    Ok(HexangulationReport {
        is_hexangulation: two_connected && all_hex && !faces.faces.is_empty(),
        two_connected,
        genus,
        face_count: faces.faces.len(),
    })
}

/// True iff removing any k-1 vertices leaves the graph connected (brute
/// force; k <= 3 since cubic graphs never exceed connectivity 3).
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> Result<bool, TopologyError> {
    if k == 0 || k > 3 {
        return Err(TopologyError::KOutOfRange(k));
    }
    if !g.is_connected() {
        return Ok(false);
    }
    if g.n() <= k {
        // Removing k-1 vertices leaves at most one vertex.
        return Ok(true);
    }
    let mut removed = vec![false; g.n()];
    match k {
        1 => Ok(true),
        2 => {
            for v in 0..g.n() {
                removed[v] = true;
                if !g.connected_without_vertices(&removed) {
                    return Ok(false);
                }
                removed[v] = false;
            }
            Ok(true)
        }
        _ => {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    removed[u] = true;
                    removed[v] = true;
                    let ok = g.connected_without_vertices(&removed);
                    removed[u] = false;
                    removed[v] = false;
                    if !ok {
                        return Ok(false);
                    }
                }
            }
            // 2-connectivity is implied only if single removals also pass.
            Ok(vertex_connectivity_at_least(g, 2)?)
        }
    }
}

/// Hist search over facial cycles of a plane cubic graph: any Hist complement
/// consists of vertex-disjoint facial cycles covering n/2 + 1 vertices, so
/// only face subsets need to be searched. Verdicts agree exactly with the
/// edge-branching solver.
pub fn planar_hist_solve(
    g: &Graph,
    rot: &RotationSystem,
    mode: SolveMode,
) -> Result<SolveReport, TopologyError> {
    planar_hist_solve_with_budget(g, rot, mode, DEFAULT_NODE_BUDGET)
}

pub fn planar_hist_solve_with_budget(
    g: &Graph,
    rot: &RotationSystem,
    mode: SolveMode,
    budget: u64,
) -> Result<SolveReport, TopologyError> {
    if !g.is_cubic() {
        return Err(TopologyError::NotCubic);
    }
    let genus = euler_genus(g, rot)?;
    if genus != 0 {
        return Err(TopologyError::NotPlanarEmbedding(genus));
    }
    let faces = trace_faces(g, rot)?;
    let target = g.n() / 2 + 1;

    // Arithmetic short-circuit: is the target reachable as a sum of face
    // lengths at all? (Faces with repeated vertices cannot be facial cycles
    // and are excluded outright.)
    let simple_faces: Vec<&Vec<usize>> = faces
        .faces
        .iter()
        .filter(|f| {
            let mut vs = (*f).clone();
            vs.sort_unstable();
            vs.windows(2).all(|w| w[0] != w[1])
        })
        .collect();
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for f in &simple_faces {
        let len = f.len();
        for t in (len..=target).rev() {
            if reachable[t - len] {
                reachable[t] = true;
            }
        }
    }
    if !reachable[target] {
        return Ok(SolveReport {
            verdict: Verdict::NoHist,
            certificates: Vec::new(),
            count: Some(0),
            nodes_explored: 0,
            filter_used: FilterUsed::Facial,
        });
    }

    let words = g.n().div_ceil(64);
    let masks: Vec<Vec<u64>> = simple_faces
        .iter()
        .map(|f| {
            let mut m = vec![0u64; words];
            for &v in f.iter() {
                m[v / 64] |= 1 << (v % 64);
            }
            m
        })
        .collect();

    struct Ctx<'a> {
        g: &'a Graph,
        faces: Vec<&'a Vec<usize>>,
        masks: Vec<Vec<u64>>,
        target: usize,
        mode: SolveMode,
        budget: u64,
        nodes: u64,
        exceeded: bool,
        done: bool,
        trees: std::collections::BTreeSet<EdgeSet>,
    }

    fn rec(ctx: &mut Ctx, from: usize, used: &mut [u64], covered: usize, chosen: &mut Vec<usize>) {
        if ctx.done || ctx.exceeded {
            return;
        }
        ctx.nodes += 1;
        if ctx.nodes > ctx.budget {
            ctx.exceeded = true;
            return;
        }
        if covered == ctx.target {
            let mut s = EdgeSet::new(ctx.g);
            for &fi in chosen.iter() {
                let f = ctx.faces[fi];
                for i in 0..f.len() {
                    let e = ctx.g.edge_index(f[i], f[(i + 1) % f.len()]).unwrap();
                    s.insert(e).unwrap();
                }
            }
            if ctx.g.connected_with_edge_filter(|e| !s.contains(e)) {
                let tree = s.complement(ctx.g);
                ctx.trees.insert(tree);
                if matches!(ctx.mode, SolveMode::Decide | SolveMode::First) {
                    ctx.done = true;
                }
            }
            return;
        }
        for fi in from..ctx.faces.len() {
            let len = ctx.faces[fi].len();
            if covered + len > ctx.target {
                continue;
            }
            if ctx.masks[fi].iter().zip(used.iter()).any(|(a, b)| a & b != 0) {
                continue;
            }
            for (w, m) in used.iter_mut().zip(ctx.masks[fi].iter()) {
                *w |= m;
            }
            chosen.push(fi);
            rec(ctx, fi + 1, used, covered + len, chosen);
            chosen.pop();
            for (w, m) in used.iter_mut().zip(ctx.masks[fi].iter()) {
                *w &= !m;
            }
            if ctx.done || ctx.exceeded {
                return;
            }
        }
    }

    let mut ctx = Ctx {
        g,
        faces: simple_faces,
        masks,
        target,
        mode,
        budget,
        nodes: 0,
        exceeded: false,
        done: false,
        trees: std::collections::BTreeSet::new(),
    };
    let mut used = vec![0u64; words];
    let mut chosen = Vec::new();
    rec(&mut ctx, 0, &mut used, 0, &mut chosen);

    let found = ctx.trees.len() as u64;
    let certificates: Vec<HistCertificate> = match mode {
        SolveMode::Decide | SolveMode::Count => Vec::new(),
        SolveMode::First => ctx
            .trees
            .iter()
            .take(1)
            .map(|t| hist::verify_hist(g, t).expect("facial search produced an invalid tree"))
            .collect(),
        SolveMode::EnumerateAll => ctx
            .trees
            .iter()
            .map(|t| hist::verify_hist(g, t).expect("facial search produced an invalid tree"))
            .collect(),
    };
    let verdict = if ctx.exceeded {
        Verdict::BudgetExceeded
    } else if found > 0 {
        Verdict::HasHist
    } else {
        Verdict::NoHist
    };
    let count = match (verdict, mode) {
        (Verdict::BudgetExceeded, _) => None,
        (_, SolveMode::Count | SolveMode::EnumerateAll) => Some(found),
        (Verdict::NoHist, _) => Some(0),
        _ => None,
    };
    Ok(SolveReport {
        verdict,
        certificates,
        count,
        nodes_explored: ctx.nodes,
        filter_used: FilterUsed::Facial,
    })
}

// --- Embedding file format ------------------------------------------------

/// Parses the embedding format: an edge-list block, a line `rotations`, then
/// one line `v: e1 e2 e3 ...` per vertex with edge indices in cyclic order.
pub fn parse_embedded(text: &str) -> Result<(Graph, RotationSystem), FormatError> {
    let marker = text
        .lines()
        .position(|l| l.trim() == "rotations")
        .ok_or_else(|| FormatError::Parse {
            line: 0,
            msg: "missing \"rotations\" section".into(),
        })?;
    let lines: Vec<&str> = text.lines().collect();
    let graph_part = lines[..marker].join("\n");
    let g = crate::formats::parse_edge_list(&graph_part)?;
    let mut rotations = vec![Vec::new(); g.n()];
    for (off, line) in lines[marker + 1..].iter().enumerate() {
        let lineno = marker + 2 + off;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| FormatError::Parse {
            line: lineno,
            msg: "expected \"v: e1 e2 ...\"".into(),
        })?;
        let v: usize = head.trim().parse().map_err(|_| FormatError::Parse {
            line: lineno,
            msg: format!("bad vertex {head:?}"),
        })?;
        if v >= g.n() {
            return Err(FormatError::Parse {
                line: lineno,
                msg: format!("vertex {v} out of range"),
            });
        }
        for tok in rest.split_whitespace() {
            let e: usize = tok.parse().map_err(|_| FormatError::Parse {
                line: lineno,
                msg: format!("bad edge index {tok:?}"),
            })?;
            rotations[v].push(e);
        }
    }
    Ok((g, RotationSystem::new(rotations)))
}

pub fn write_embedded(g: &Graph, rot: &RotationSystem) -> String {
    let mut out = crate::formats::write_edge_list(g);
    out.push_str("rotations\n");
    for (v, r) in rot.rotations.iter().enumerate() {
        let items: Vec<String> = r.iter().map(|e| e.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", items.join(" ")));
    }
    out
}
