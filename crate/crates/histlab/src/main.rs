//! Command-line front end: single-graph analysis, filters, generation of
//! graph families, cyclic edge-connectivity, and batch corpus processing.
//!
//! Exit codes: 0 = tree found (or check inconclusive), 3 = provably none,
//! 4 = search budget exceeded, 2 = input or parameter error. Stdout carries
//! machine-readable output only; diagnostics go to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use histlab::construct::{self, RotationChoice};
use histlab::cyclic::{self, CecValue};
use histlab::formats;
use histlab::graph::{EdgeSet, Graph, GraphProfile};
use histlab::hist::{self, FilterUsed, Mod4Verdict, SolveMode, SolveOptions, Verdict};
use histlab::topology::{self, RotationSystem};
use histlab::{catalog, classify};

#[derive(Parser)]
#[command(name = "histlab", version, about = "Spanning trees without degree-2 vertices in cubic graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact search for a spanning tree with no degree-2 vertex.
    Solve(SolveArgs),
    /// Fast non-existence filters only, no search.
    Check(CheckArgs),
    /// Generate graphs from built-in families.
    Gen(GenArgs),
    /// Cyclic edge-connectivity.
    Cec(CecArgs),
    /// Process a corpus of graph6 inputs.
    Batch(BatchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Graph6,
    Edgelist,
    Embedded,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Decide,
    First,
    Count,
    All,
}

impl From<ModeArg> for SolveMode {
    fn from(m: ModeArg) -> SolveMode {
        match m {
            ModeArg::Decide => SolveMode::Decide,
            ModeArg::First => SolveMode::First,
            ModeArg::Count => SolveMode::Count,
            ModeArg::All => SolveMode::EnumerateAll,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Input file, or the name of a built-in graph.
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "decide")]
    mode: ModeArg,
    /// Search node budget.
    #[arg(long, default_value_t = hist::DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Use the facial-cycle solver (requires an embedded input with genus 0).
    #[arg(long)]
    use_embedding: bool,
    /// Emit the full run report as JSON on stdout.
    #[arg(long)]
    json: bool,
    /// Write the first certificate to this file.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    /// Write a DOT drawing with tree and cycle edges distinguished.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Write to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit generator provenance as JSON on stderr.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum GenFamily {
    /// A built-in named graph.
    Catalog { name: String },
    /// Toroidal brick-wall hexangulation with 2mn vertices.
    Honeycomb { m: usize, n: usize },
    /// Replace every vertex of the input by a cycle.
    Inflate {
        file: String,
        /// Bipartite variant for 2k-regular inputs.
        #[arg(long)]
        bipartite: Option<usize>,
        /// Randomize the cycle arrangements.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Random simple d-regular graph (configuration model).
    RandomRegular { n: usize, d: usize, seed: u64 },
    /// Grow an embedded hexangulation by twelve vertices along a 6-cycle.
    InsertRing {
        file: String,
        /// Six comma-separated vertices of a chordless cycle.
        cycle: String,
    },
}

#[derive(Args)]
struct CecArgs {
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Cap on induced cycle length (marks the result as an upper bound).
    #[arg(long)]
    max_cycle_len: Option<usize>,
    /// Check the connectivity lower bound against this base graph, which
    /// must deterministically inflate to the input.
    #[arg(long)]
    verify_inflation: Option<String>,
}

#[derive(Args)]
struct BatchArgs {
    /// Directory of .g6 files (one or more graph6 lines each).
    #[arg(long, conflicts_with = "input")]
    dir: Option<PathBuf>,
    /// Single multi-line graph6 file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "decide")]
    mode: ModeArg,
    #[arg(long, default_value_t = hist::DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Directory of companion embeddings: for line j of stem.g6, the first
    /// of stem_<j>.emb and stem.emb that exists is used to record the genus
    /// and apply the facial arithmetic filter.
    #[arg(long)]
    embedding_dir: Option<PathBuf>,
}

/// Run report, one per analyzed graph. Serialized verbatim as JSON.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
struct RunReport {
    input: String,
    format: String,
    version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<GraphProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mod4_filter: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    facial_filter: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    filter_used: Option<FilterUsed>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    wall_time_ms: u64,
}

impl RunReport {
    fn new(input: &str, format: &str) -> RunReport {
        RunReport {
            input: input.to_string(),
            format: format.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            profile: None,
            mod4_filter: None,
            facial_filter: None,
            verdict: None,
            count: None,
            nodes_explored: None,
            filter_used: None,
            certificate: None,
            genus: None,
            error: None,
            wall_time_ms: 0,
        }
    }
}

struct LoadedInput {
    graph: Graph,
    rotation: Option<RotationSystem>,
    descriptor: String,
    format_name: &'static str,
}

fn fail(msg: String) -> String {
    msg
}

fn load_input(input: &str, format: FormatArg) -> Result<LoadedInput, String> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
        let effective = match format {
            FormatArg::Auto => match path.extension().and_then(|e| e.to_str()) {
                Some("el") | Some("txt") => FormatArg::Edgelist,
                Some("emb") => FormatArg::Embedded,
                _ => FormatArg::Graph6,
            },
            f => f,
        };
        let (graph, rotation, format_name) = match effective {
            FormatArg::Graph6 | FormatArg::Auto => (
                formats::parse_graph6(&text).map_err(|e| fail(format!("{input}: {e}")))?,
                None,
                "graph6",
            ),
            FormatArg::Edgelist => (
                formats::parse_edge_list(&text).map_err(|e| fail(format!("{input}: {e}")))?,
                None,
                "edgelist",
            ),
            FormatArg::Embedded => {
                let (g, rot) =
                    topology::parse_embedded(&text).map_err(|e| fail(format!("{input}: {e}")))?;
                (g, Some(rot), "embedded")
            }
        };
        return Ok(LoadedInput {
            graph,
            rotation,
            descriptor: input.to_string(),
            format_name,
        });
    }
    let entry = catalog::catalog(input)
        .map_err(|e| fail(format!("{input}: no such file, and {e}")))?;
    Ok(LoadedInput {
        graph: entry.graph,
        rotation: entry.rotation,
        descriptor: format!("catalog:{}", entry.name),
        format_name: "catalog",
    })
}

fn emit_report(report: &RunReport, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string(report).unwrap());
    } else {
        match (&report.verdict, &report.error) {
            (_, Some(e)) => println!("error {e}"),
            (Some(v), _) => match report.count {
                Some(c) => println!("{v:?} count={c}"),
                None => println!("{v:?}"),
            },
            (None, None) => println!("inconclusive"),
        }
    }
}

fn verdict_exit(v: Verdict) -> ExitCode {
    match v {
        Verdict::HasHist => ExitCode::SUCCESS,
        Verdict::NoHist => ExitCode::from(3),
        Verdict::BudgetExceeded => ExitCode::from(4),
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<ExitCode, String> {
    let start = Instant::now();
    let loaded = load_input(&args.input, args.format)?;
    let mut report = RunReport::new(&loaded.descriptor, loaded.format_name);
    report.profile = Some(classify(&loaded.graph));
    let mode = SolveMode::from(args.mode);
    let solve_report = if args.use_embedding {
        let rot = loaded
            .rotation
            .as_ref()
            .ok_or_else(|| "--use-embedding requires an embedded input".to_string())?;
        report.genus = topology::euler_genus(&loaded.graph, rot).ok();
        topology::planar_hist_solve_with_budget(&loaded.graph, rot, mode, args.budget)
            .map_err(|e| e.to_string())?
    } else {
        let opts = SolveOptions {
            mode,
            node_budget: args.budget,
            use_mod4_filter: true,
        };
        hist::solve_with_options(&loaded.graph, &opts).map_err(|e| e.to_string())?
    };
    report.verdict = Some(solve_report.verdict);
    report.count = solve_report.count;
    report.nodes_explored = Some(solve_report.nodes_explored);
    report.filter_used = Some(solve_report.filter_used);
    if let Some(cert) = solve_report.certificates.first() {
        let edges: Vec<(usize, usize)> = cert
            .tree_edges
            .iter()
            .map(|e| loaded.graph.edge(e))
            .collect();
        report.certificate = Some(edges);
        if let Some(path) = &args.cert_out {
            std::fs::write(path, formats::write_certificate(&loaded.graph, &cert.tree_edges))
                .map_err(|e| e.to_string())?;
        }
    }
    if let Some(path) = &args.dot {
        let tree: Option<&EdgeSet> = solve_report
            .certificates
            .first()
            .map(|c| &c.tree_edges);
        std::fs::write(path, formats::write_dot(&loaded.graph, tree))
            .map_err(|e| e.to_string())?;
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    emit_report(&report, args.json);
    Ok(verdict_exit(solve_report.verdict))
}

/// Subset-sum filter over facial cycle lengths: a planar input has no
/// qualifying tree unless n/2 + 1 is a sum of simple-face lengths.
fn facial_filter(g: &Graph, rot: &RotationSystem) -> Option<&'static str> {
    if topology::euler_genus(g, rot) != Ok(0) {
        return None;
    }
    let faces = topology::trace_faces(g, rot).ok()?;
    let target = g.n() / 2 + 1;
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for f in &faces.faces {
        let mut vs = f.clone();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        for t in (f.len()..=target).rev() {
            if reachable[t - f.len()] {
                reachable[t] = true;
            }
        }
    }
    Some(if reachable[target] {
        "inconclusive"
    } else {
        "no_hist"
    })
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode, String> {
    let start = Instant::now();
    let loaded = load_input(&args.input, args.format)?;
    let mut report = RunReport::new(&loaded.descriptor, loaded.format_name);
    report.profile = Some(classify(&loaded.graph));
    let mod4 = hist::mod4_filter(&loaded.graph).map_err(|e| e.to_string())?;
    report.mod4_filter = Some(
        match mod4 {
            Mod4Verdict::NoHist => "no_hist",
            Mod4Verdict::Inconclusive => "inconclusive",
        }
        .to_string(),
    );
    if let Some(rot) = &loaded.rotation {
        report.facial_filter = facial_filter(&loaded.graph, rot).map(str::to_string);
    }
    let provably_none = mod4 == Mod4Verdict::NoHist
        || report.facial_filter.as_deref() == Some("no_hist");
    if provably_none {
        report.verdict = Some(Verdict::NoHist);
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    emit_report(&report, args.json);
    Ok(if provably_none {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| e.to_string()),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode, String> {
    let (content, provenance) = match &args.family {
        GenFamily::Catalog { name } => {
            let entry = catalog::catalog(name).map_err(|e| e.to_string())?;
            let content = match &entry.rotation {
                Some(rot) => topology::write_embedded(&entry.graph, rot),
                None => format!("{}\n", formats::write_graph6(&entry.graph).map_err(|e| e.to_string())?),
            };
            (content, json!({ "generator": "catalog", "params": { "name": entry.name } }))
        }
        GenFamily::Honeycomb { m, n } => {
            let emb = construct::honeycomb_torus(*m, *n).map_err(|e| e.to_string())?;
            (
                topology::write_embedded(&emb.graph, &emb.rotation),
                serde_json::to_value(&emb.provenance).unwrap(),
            )
        }
        GenFamily::Inflate {
            file,
            bipartite,
            seed,
        } => {
            let loaded = load_input(file, FormatArg::Auto)?;
            let result = match bipartite {
                Some(k) => construct::bipartite_inflate(&loaded.graph, *k)
                    .map_err(|e| e.to_string())?,
                None => {
                    let choice = match seed {
                        Some(s) => RotationChoice::Seeded(*s),
                        None => RotationChoice::Deterministic,
                    };
                    construct::inflate(&loaded.graph, choice).map_err(|e| e.to_string())?
                }
            };
            let line = formats::write_graph6(&result.inflated).map_err(|e| e.to_string())?;
            (
                format!("{line}\n"),
                json!({
                    "generator": if bipartite.is_some() { "bipartite_inflate" } else { "inflate" },
                    "params": { "base": loaded.descriptor, "k": bipartite, "seed": seed },
                }),
            )
        }
        GenFamily::RandomRegular { n, d, seed } => {
            let g = construct::random_regular(*n, *d, *seed).map_err(|e| e.to_string())?;
            let line = formats::write_graph6(&g).map_err(|e| e.to_string())?;
            (
                format!("{line}\n"),
                json!({ "generator": "random_regular", "params": { "n": n, "d": d, "seed": seed } }),
            )
        }
        GenFamily::InsertRing { file, cycle } => {
            let loaded = load_input(file, FormatArg::Auto)?;
            let rot = loaded
                .rotation
                .ok_or_else(|| "insert-ring requires an embedded input".to_string())?;
            let cycle: Vec<usize> = cycle
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| format!("bad cycle vertex {t:?}")))
                .collect::<Result<_, _>>()?;
            let emb = construct::EmbeddedGraph {
                graph: loaded.graph,
                rotation: rot,
                provenance: construct::Provenance {
                    generator: loaded.descriptor.clone(),
                    params: json!({}),
                },
            };
            let grown = construct::insert_ring(&emb, &cycle).map_err(|e| e.to_string())?;
            (
                topology::write_embedded(&grown.graph, &grown.rotation),
                serde_json::to_value(&grown.provenance).unwrap(),
            )
        }
    };
    write_output(&args.out, &content)?;
    if args.json {
        eprintln!("{provenance}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cec(args: &CecArgs) -> Result<ExitCode, String> {
    let loaded = load_input(&args.input, args.format)?;
    let report = match args.max_cycle_len {
        Some(cap) => cyclic::cyclic_edge_connectivity_capped(&loaded.graph, cap),
        None => cyclic::cyclic_edge_connectivity(&loaded.graph),
    }
    .map_err(|e| e.to_string())?;
    let payload = json!({
        "input": loaded.descriptor,
        "cec": match report.value {
            CecValue::Finite(v) => json!(v),
            CecValue::Undefined => json!("undefined"),
        },
        "witness_cut": report.witness_cut.as_ref().map(|c| c.to_sorted_vec()),
        "witness_cycles": report.witness_cycle_pair,
        "method": "induced-cycle-pair-flow",
        "capped": report.capped,
    });
    println!("{payload}");
    if let Some(base_input) = &args.verify_inflation {
        let base = load_input(base_input, FormatArg::Auto)?;
        let inflation = construct::inflate(&base.graph, RotationChoice::Deterministic)
            .map_err(|e| e.to_string())?;
        if inflation.inflated != loaded.graph {
            return Err(format!(
                "{} is not the deterministic inflation of {}; regenerate with gen inflate",
                loaded.descriptor, base.descriptor
            ));
        }
        let check = cyclic::check_inflation_theorem(&base.graph, &inflation)
            .map_err(|e| e.to_string())?;
        eprintln!(
            "inflation bound: connectivity {} girth {} k* {} -> cec >= k*: {}",
            check.connectivity, check.girth, check.k_star, check.holds
        );
        if !check.holds {
            // A violation of a proven bound indicates a bug somewhere.
            return Ok(ExitCode::FAILURE);
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct BatchItem {
    descriptor: String,
    line: String,
    embedding: Option<PathBuf>,
}

/// First existing companion embedding for line `lineno` of `source`:
/// `<dir>/<stem>_<lineno>.emb`, then `<dir>/<stem>.emb`.
fn companion_embedding(dir: &Option<PathBuf>, source: &Path, lineno: usize) -> Option<PathBuf> {
    let dir = dir.as_ref()?;
    let stem = source.file_stem()?.to_str()?;
    [format!("{stem}_{lineno}.emb"), format!("{stem}.emb")]
        .into_iter()
        .map(|name| dir.join(name))
        .find(|p| p.exists())
}

fn batch_items(args: &BatchArgs) -> Result<Vec<BatchItem>, String> {
    let mut items = Vec::new();
    let mut push_file = |file: &Path| -> Result<(), String> {
        let text = std::fs::read_to_string(file).map_err(|e| e.to_string())?;
        for (i, line) in text.lines().enumerate() {
            if !line.trim().is_empty() {
                items.push(BatchItem {
                    descriptor: format!("{}:{}", file.display(), i + 1),
                    line: line.to_string(),
                    embedding: companion_embedding(&args.embedding_dir, file, i + 1),
                });
            }
        }
        Ok(())
    };
    if let Some(dir) = &args.dir {
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?
            .filter_map(|entry| entry.ok().map(|d| d.path()))
            .filter(|p| p.extension().and_then(|e| e.to_str()) == Some("g6"))
            .collect();
        files.sort();
        for file in files {
            push_file(&file)?;
        }
    } else if let Some(input) = &args.input {
        push_file(input)?;
    } else {
        return Err("batch requires --dir or --input".to_string());
    }
    Ok(items)
}

/// Attach a companion embedding to a batch report: verify it describes the
/// same graph, record the genus, and apply the facial arithmetic filter. A
/// conclusive filter settles the verdict with no search.
fn batch_apply_embedding(
    g: &Graph,
    item: &BatchItem,
    report: &mut RunReport,
) -> Result<(), String> {
    let Some(path) = &item.embedding else {
        return Ok(());
    };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (eg, rot) =
        topology::parse_embedded(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if &eg != g {
        return Err(format!(
            "{}: embedding does not match the graph6 input",
            path.display()
        ));
    }
    report.genus = topology::euler_genus(g, &rot).ok();
    report.facial_filter = facial_filter(g, &rot).map(str::to_string);
    if report.facial_filter.as_deref() == Some("no_hist") {
        report.verdict = Some(Verdict::NoHist);
        report.count = Some(0);
        report.nodes_explored = Some(0);
        report.filter_used = Some(FilterUsed::Facial);
    }
    Ok(())
}

fn cmd_batch(args: &BatchArgs) -> Result<ExitCode, String> {
    use rayon::prelude::*;
    let items = batch_items(args)?;
    let mode = SolveMode::from(args.mode);
    let budget = args.budget;
    // Work fans out per graph; output stays in input order.
    let reports: Vec<RunReport> = items
        .par_iter()
        .map(|item| {
            let start = Instant::now();
            let mut report = RunReport::new(&item.descriptor, "graph6");
            match formats::parse_graph6(&item.line) {
                Ok(g) => {
                    report.profile = Some(classify(&g));
                    if let Err(e) = batch_apply_embedding(&g, item, &mut report) {
                        report.error = Some(e);
                    } else if report.verdict.is_none() {
                        let opts = SolveOptions {
                            mode,
                            node_budget: budget,
                            use_mod4_filter: true,
                        };
                        match hist::solve_with_options(&g, &opts) {
                            Ok(sr) => {
                                report.verdict = Some(sr.verdict);
                                report.count = sr.count;
                                report.nodes_explored = Some(sr.nodes_explored);
                                report.filter_used = Some(sr.filter_used);
                            }
                            Err(e) => report.error = Some(e.to_string()),
                        }
                    }
                }
                Err(e) => report.error = Some(e.to_string()),
            }
            report.wall_time_ms = start.elapsed().as_millis() as u64;
            report
        })
        .collect();
    let mut has = 0u64;
    let mut none = 0u64;
    let mut exceeded = 0u64;
    let mut errors = 0u64;
    for report in &reports {
        println!("{}", serde_json::to_string(report).unwrap());
        match (report.verdict, &report.error) {
            (_, Some(_)) => errors += 1,
            (Some(Verdict::HasHist), _) => has += 1,
            (Some(Verdict::NoHist), _) => none += 1,
            (Some(Verdict::BudgetExceeded), _) => exceeded += 1,
            (None, None) => errors += 1,
        }
    }
    let summary = json!({
        "summary": {
            "graphs": reports.len(),
            "has_hist": has,
            "no_hist": none,
            "budget_exceeded": exceeded,
            "errors": errors,
        }
    });
    println!("{summary}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("HISTLAB_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Check(a) => cmd_check(a),
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Cec(a) => cmd_cec(a),
        Cmd::Batch(a) => cmd_batch(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
