//! Named graphs with canonical vertex numbering.
//!
//! Canonical numberings:
//! - `k4`: vertices 0..4, all pairs adjacent.
//! - `k33`: classes {0,1,2} and {3,4,5}.
//! - `cube`: outer square 0..4, inner square 4..8, spokes i - (4+i).
//! - `petersen`: outer pentagon 0..5, inner pentagram 5..10 (5+i adjacent to
//!   5+((i+2) mod 5)), spokes i - (5+i).
//! - `dodecahedron`: outer pentagon 0..5, middle 10-cycle 5..15 (even
//!   positions joined to the outer pentagon, odd to the inner), inner
//!   pentagon 15..20.
//! - `heawood`, `moebius_kantor`, `pappus`, `desargues`: LCF notation on a
//!   Hamiltonian cycle 0..n.
//! - `prism(k)`: outer cycle 0..k, inner cycle k..2k, spokes i - (k+i).
//!
//! `k4`, `cube`, `dodecahedron` and `prism(k)` carry planar rotation
//! systems derived from symmetric straight-line drawings. `buckminster` and
//! `grinberg` load from optional data files (`HISTLAB_DATA_DIR`, default
//! `./data`), in embedding, edge-list, or graph6 format.

use std::collections::BTreeSet;
use std::path::PathBuf;

use thiserror::Error;

use crate::formats;
use crate::graph::Graph;
use crate::topology::{self, RotationSystem};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("missing data file for {name:?}: looked for {searched:?}")]
    MissingDataFile { name: String, searched: Vec<PathBuf> },
    #[error("bad data file {path:?}: {msg}")]
    BadDataFile { path: PathBuf, msg: String },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub rotation: Option<RotationSystem>,
}

fn ring_coords(count: usize, radius: f64, angle_offset: f64) -> Vec<(f64, f64)> {
    (0..count)
        .map(|i| {
            let a = angle_offset + 2.0 * std::f64::consts::PI * i as f64 / count as f64;
            (radius * a.cos(), radius * a.sin())
        })
        .collect()
}

fn lcf(n: usize, pattern: &[i64]) -> Graph {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..n {
        edges.insert((i.min((i + 1) % n), i.max((i + 1) % n)));
        let j = ((i as i64 + pattern[i % pattern.len()]).rem_euclid(n as i64)) as usize;
        edges.insert((i.min(j), i.max(j)));
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("LCF pattern produced an invalid graph")
}

fn k4() -> CatalogEntry {
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let mut coords = vec![(0.0, 0.0)];
    coords.extend(ring_coords(3, 10.0, std::f64::consts::FRAC_PI_2));
    let rot = RotationSystem::from_coordinates(&g, &coords);
    CatalogEntry {
        name: "k4".into(),
        graph: g,
        rotation: Some(rot),
    }
}

fn k33() -> CatalogEntry {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    CatalogEntry {
        name: "k33".into(),
        graph: Graph::from_edges(6, &edges).unwrap(),
        rotation: None,
    }
}

fn prism(k: usize) -> CatalogEntry {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    let g = Graph::from_edges(2 * k, &edges).unwrap();
    let mut coords = ring_coords(k, 10.0, 0.0);
    coords.extend(ring_coords(k, 5.0, 0.0));
    let rot = RotationSystem::from_coordinates(&g, &coords);
    CatalogEntry {
        name: format!("prism({k})"),
        graph: g,
        rotation: Some(rot),
    }
}

fn petersen() -> CatalogEntry {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    CatalogEntry {
        name: "petersen".into(),
        graph: Graph::from_edges(10, &edges).unwrap(),
        rotation: None,
    }
}

fn dodecahedron() -> CatalogEntry {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer pentagon
        edges.push((i, 5 + 2 * i)); // outer spokes
        edges.push((15 + i, 15 + (i + 1) % 5)); // inner pentagon
        edges.push((15 + i, 6 + 2 * i)); // inner spokes
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10)); // middle 10-cycle
    }
    let g = Graph::from_edges(20, &edges).unwrap();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut coords = ring_coords(5, 10.0, half_pi);
    coords.extend(ring_coords(10, 6.0, half_pi));
    // Inner vertex 15+i sits at the angle of its middle neighbor 6+2i.
    let step = 2.0 * std::f64::consts::PI / 10.0;
    for i in 0..5 {
        let a = half_pi + step * (2 * i + 1) as f64;
        coords.push((3.0 * a.cos(), 3.0 * a.sin()));
    }
    let rot = RotationSystem::from_coordinates(&g, &coords);
    CatalogEntry {
        name: "dodecahedron".into(),
        graph: g,
        rotation: Some(rot),
    }
}

fn data_dir() -> PathBuf {
    std::env::var_os("HISTLAB_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"))
}

fn load_from_data(name: &str) -> Result<CatalogEntry, CatalogError> {
    let dir = data_dir();
    let candidates = [
        dir.join(format!("{name}.emb")),
        dir.join(format!("{name}.el")),
        dir.join(format!("{name}.g6")),
    ];
    for path in &candidates {
        let Ok(text) = std::fs::read_to_string(path) else {
            continue;
        };
        let bad = |msg: String| CatalogError::BadDataFile {
            path: path.clone(),
            msg,
        };
        let entry = match path.extension().and_then(|e| e.to_str()) {
            Some("emb") => {
                let (g, rot) = topology::parse_embedded(&text).map_err(|e| bad(e.to_string()))?;
                CatalogEntry {
                    name: name.into(),
                    graph: g,
                    rotation: Some(rot),
                }
            }
            Some("el") => CatalogEntry {
                name: name.into(),
                graph: formats::parse_edge_list(&text).map_err(|e| bad(e.to_string()))?,
                rotation: None,
            },
            _ => CatalogEntry {
                name: name.into(),
                graph: formats::parse_graph6(&text).map_err(|e| bad(e.to_string()))?,
                rotation: None,
            },
        };
        return Ok(entry);
    }
    Err(CatalogError::MissingDataFile {
        name: name.into(),
        searched: candidates.to_vec(),
    })
}

pub fn catalog(name: &str) -> Result<CatalogEntry, CatalogError> {
    if let Some(rest) = name.strip_prefix("prism(") {
        if let Some(k) = rest
            .strip_suffix(')')
            .and_then(|t| t.parse::<usize>().ok())
        {
            if k >= 3 {
                return Ok(prism(k));
            }
        }
        return Err(CatalogError::UnknownName(name.into()));
    }
    match name {
        "k4" => Ok(k4()),
        "k33" => Ok(k33()),
        "cube" => Ok(prism_named("cube", 4)),
        "petersen" => Ok(petersen()),
        "dodecahedron" => Ok(dodecahedron()),
        "heawood" => Ok(CatalogEntry {
            name: "heawood".into(),
            graph: lcf(14, &[5, -5]),
            rotation: None,
        }),
        "moebius_kantor" => Ok(CatalogEntry {
            name: "moebius_kantor".into(),
            graph: lcf(16, &[5, -5]),
            rotation: None,
        }),
        "pappus" => Ok(CatalogEntry {
            name: "pappus".into(),
            graph: lcf(18, &[5, 7, -7, 7, -7, -5]),
            rotation: None,
        }),
        "desargues" => Ok(CatalogEntry {
            name: "desargues".into(),
            graph: lcf(20, &[5, -5, 9, -9]),
            rotation: None,
        }),
        "buckminster" | "grinberg" => load_from_data(name),
        other => Err(CatalogError::UnknownName(other.into())),
    }
}

fn prism_named(name: &str, k: usize) -> CatalogEntry {
    let mut entry = prism(k);
    entry.name = name.into();
    entry
}

/// All names constructible without data files, for corpus-wide tests.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "k4",
        "k33",
        "cube",
        "petersen",
        "dodecahedron",
        "heawood",
        "moebius_kantor",
        "pappus",
        "desargues",
        "prism(3)",
        "prism(5)",
        "prism(6)",
    ]
}
