//! The `ccode` command line.
//!
//! Exit codes: 0 success, 1 negative verdict (not connected, non-planar,
//! failed verification), 2 not realizable in the requested dimension,
//! 64 unreadable input, 70 internal failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::code::{is_connected_code, parse_code, Code, Connectivity};
use crate::dimension::{d_star, verify_certificate, Certificate, DimensionError, DimensionVerdict, Exactness};
use crate::enumerate::{classify_all_with, Status, MAX_CENSUS_NEURONS};
use crate::graph::{canonical_graph, validate, AdmissibleGraph};
use crate::grid::{audit, GridRealization};
use crate::line::{search_word, verify_word, word_to_grid, AtomWord, WordSearch};
use crate::plane::fatten_embedding;
use crate::planarity::{is_planar, planar_coordinates, verify_straight_line, Planarity};
use crate::render::{scene_document, svg};
use crate::search::{search_planar_admissible, SearchOptions, SearchOutcome};
use crate::space::build_3d;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_NOT_REALIZABLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "ccode", version, about = "Connected receptive-field codes: connectivity, minimal dimension, realizations")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the code can be realized by connected sets.
    Check(CodeArg),
    /// Minimal embedding dimension with a verified certificate.
    Dim {
        #[command(flatten)]
        code: CodeArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the certificate bundle into this directory.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a grid realization in a given dimension.
    Realize {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        dim: u8,
        #[arg(short, long, default_value = ".")]
        output: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Canonical admissible graph: one vertex per codeword, edges for containments.
    Graph {
        #[command(flatten)]
        code: CodeArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Planarity of a graph file: an embedding or a Kuratowski subgraph.
    Planar { graph: PathBuf },
    /// Classify every code on a few neurons.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the table here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Store one certificate bundle per connected code in this directory.
        #[arg(long)]
        certs: Option<PathBuf>,
    },
    /// Draw a grid file: SVG for 1D/2D, cube list for 3D.
    Render {
        grid: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Re-check a word, grid, graph or bundle file against a code.
    Verify {
        #[command(flatten)]
        code: CodeArg,
        cert: PathBuf,
    },
}

#[derive(clap::Args, Debug)]
struct CodeArg {
    /// Code as "e,1,12", "{},{1},{1,2}" or a JSON document.
    code: String,
    /// Number of neurons (default: largest index used, at least 1).
    #[arg(long = "neurons")]
    neurons: Option<usize>,
}

#[derive(clap::Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 2)]
    dup_bound: usize,
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            dup_bound: self.dup_bound,
            budget: self.budget,
        }
    }
}

struct Failure(i32, String);

type Outcome = Result<i32, Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn internal(msg: impl ToString) -> Failure {
    Failure(EXIT_INTERNAL, msg.to_string())
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn say(&mut self, text: &str, doc: Value) -> Result<(), Failure> {
        let r = if self.json { writeln!(self.out, "{doc}") } else { writeln!(self.out, "{text}") };
        r.map_err(internal)
    }

    fn warn(&mut self, text: &str) {
        let _ = writeln!(self.err, "warning: {text}");
    }
}

/// Runs the command line on `args` (program name first) against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { out, err, json: cli.json };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Outcome {
    match cmd {
        Command::Check(c) => check(&load_code(&c, io)?, io),
        Command::Dim { code, search, output } => dim(&load_code(&code, io)?, search.options(), output.as_deref(), io),
        Command::Realize {
            code,
            dim,
            output,
            search,
        } => realize(&load_code(&code, io)?, dim, &output, search.options(), io),
        Command::Graph { code, output } => graph(&load_code(&code, io)?, output.as_deref(), io),
        Command::Planar { graph } => planar(&graph, io),
        Command::Enumerate {
            n,
            search,
            output,
            certs,
        } => enumerate(n, search.options(), output.as_deref(), certs.as_deref(), io),
        Command::Render { grid, output } => render(&grid, &output, io),
        Command::Verify { mut code, cert } => {
            if code.neurons.is_none() {
                let inferred = parse_code(&code.code, None).map(|p| p.code.n()).unwrap_or(0);
                code.neurons = declared_neurons(&cert).filter(|&d| d > inferred);
            }
            verify(&load_code(&code, io)?, &cert, io)
        }
    }
}

fn load_code(arg: &CodeArg, io: &mut Io) -> Result<Code, Failure> {
    let parsed = parse_code(&arg.code, arg.neurons).map_err(usage)?;
    for w in &parsed.warnings {
        io.warn(&w.to_string());
    }
    Ok(parsed.code)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| internal(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| internal(format!("{}: {e}", path.display())))
}

fn doc(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(internal)
}

fn check(code: &Code, io: &mut Io) -> Outcome {
    match is_connected_code(code) {
        Connectivity::Connected => {
            io.say("CONNECTED", json!({ "connected": true }))?;
            Ok(EXIT_OK)
        }
        Connectivity::Disconnected(w) => {
            io.say(&format!("NOT CONNECTED: {w}"), json!({ "connected": false, "witness": w }))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn exactness_json(e: Exactness) -> Value {
    match e {
        Exactness::Exact => json!({ "exactness": "exact" }),
        Exactness::ConditionalOnBound(k) => json!({ "exactness": "conditional_on_bound", "dup_bound": k }),
    }
}

/// Certificate bundle: the code, the verdict, the certificate parts and the grid.
fn bundle(code: &Code, verdict: &DimensionVerdict) -> Result<Value, Failure> {
    let mut b = json!({
        "code": code.to_string(),
        "d_star": verdict.value,
        "grid": doc(&verdict.certificate.grid().to_json())?,
    });
    b["exactness"] = exactness_json(verdict.exactness)["exactness"].clone();
    match &verdict.certificate {
        Certificate::Word { word, .. } => b["word"] = json!(word.word),
        Certificate::Planar {
            graph, embedding, coords, ..
        } => {
            b["graph"] = doc(&graph.to_json())?;
            b["rotation"] = json!(embedding.rotation());
            b["coords"] = json!(coords);
        }
        Certificate::Space(r) => b["tubes"] = json!(r.tubes.len()),
    }
    if let Exactness::ConditionalOnBound(k) = verdict.exactness {
        b["dup_bound"] = json!(k);
    }
    Ok(b)
}

fn dim(code: &Code, options: SearchOptions, output: Option<&Path>, io: &mut Io) -> Outcome {
    let silent = code.silent_neurons();
    if !silent.is_empty() {
        io.warn(&format!("neurons with empty receptive fields: {silent:?}"));
    }
    match d_star(code, options) {
        Ok(v) => {
            let mut files = Vec::new();
            if let Some(dir) = output {
                let path = dir.join("certificate.json");
                write(&path, &bundle(code, &v)?.to_string())?;
                let grid = dir.join("grid.json");
                write(&grid, &v.certificate.grid().to_json())?;
                files.push(path.display().to_string());
                files.push(grid.display().to_string());
            }
            let mut text = v.to_string();
            for f in &files {
                text.push_str(&format!("\ncertificate: {f}"));
            }
            let mut d = exactness_json(v.exactness);
            d["d_star"] = json!(v.value);
            d["search_nodes"] = json!(v.search_nodes);
            d["files"] = json!(files);
            io.say(&text, d)?;
            Ok(EXIT_OK)
        }
        Err(DimensionError::NotConnected(w)) => {
            io.say(&format!("NOT CONNECTED: {w}"), json!({ "connected": false, "witness": w }))?;
            Ok(EXIT_NEGATIVE)
        }
        Err(DimensionError::BudgetExceeded { nodes, .. }) => {
            io.say(
                &format!("d* in {{2,3}} (planar search budget exhausted after {nodes} nodes)"),
                json!({ "d_star": null, "range": [2, 3], "search_nodes": nodes }),
            )?;
            Ok(EXIT_OK)
        }
        Err(e) => Err(internal(e)),
    }
}

fn not_connected(code: &Code, io: &mut Io) -> Outcome {
    let w = is_connected_code(code).witness().expect("caller saw a disconnected code");
    io.say(&format!("NOT CONNECTED: {w}"), json!({ "connected": false, "witness": w }))?;
    Ok(EXIT_NEGATIVE)
}

fn realize(code: &Code, dim: u8, dir: &Path, options: SearchOptions, io: &mut Io) -> Outcome {
    if !is_connected_code(code).is_connected() {
        return not_connected(code, io);
    }
    let grid_path = dir.join("grid.json");
    match dim {
        1 => match search_word(code).map_err(internal)? {
            WordSearch::Found(word) => {
                let grid = word_to_grid(code, &word).map_err(internal)?;
                write(&grid_path, &grid.to_json())?;
                let word_path = dir.join("word.json");
                write(&word_path, &word.to_json())?;
                let files = [grid_path.display().to_string(), word_path.display().to_string()];
                io.say(
                    &format!("{word}\ngrid: {}\nword: {}", files[0], files[1]),
                    json!({ "dim": 1, "realizable": true, "word": word.word, "files": files }),
                )?;
                Ok(EXIT_OK)
            }
            WordSearch::NotRealizable => {
                io.say(
                    "not realizable in dimension 1",
                    json!({ "dim": 1, "realizable": false }),
                )?;
                Ok(EXIT_NOT_REALIZABLE)
            }
        },
        2 => {
            let report = search_planar_admissible(code, options).map_err(internal)?;
            let (graph, embedding) = match report.outcome {
                SearchOutcome::Found { graph, embedding } => (graph, embedding),
                SearchOutcome::ExhaustedNotFound => {
                    io.say(
                        &format!("no planar admissible graph with at most {} copies per codeword", options.dup_bound),
                        json!({ "dim": 2, "realizable": false, "dup_bound": options.dup_bound, "search_nodes": report.nodes }),
                    )?;
                    return Ok(EXIT_NOT_REALIZABLE);
                }
                SearchOutcome::BudgetExceeded => {
                    io.say(
                        &format!("undecided: planar search budget exhausted after {} nodes", report.nodes),
                        json!({ "dim": 2, "realizable": null, "search_nodes": report.nodes }),
                    )?;
                    return Ok(EXIT_NOT_REALIZABLE);
                }
            };
            let coords = planar_coordinates(&embedding).map_err(internal)?;
            let grid = fatten_embedding(code, &graph, &coords).map_err(internal)?;
            if !audit(&grid, code).passed() {
                return Err(internal("2D grid failed its audit"));
            }
            let svg_path = dir.join("grid.svg");
            let graph_path = dir.join("graph.json");
            write(&grid_path, &grid.to_json())?;
            write(&svg_path, &svg(&grid).expect("2D grid"))?;
            write(&graph_path, &graph.to_json())?;
            let files = [grid_path, svg_path, graph_path].map(|p| p.display().to_string());
            io.say(
                &format!(
                    "planar graph with {} vertices and {} edges; grid {}x{}\ngrid: {}\nsvg: {}\ngraph: {}",
                    graph.vertex_count(),
                    graph.edge_count(),
                    grid.extents()[0],
                    grid.extents()[1],
                    files[0],
                    files[1],
                    files[2]
                ),
                json!({ "dim": 2, "realizable": true, "vertices": graph.vertex_count(), "edges": graph.edge_count(), "extents": grid.extents(), "files": files }),
            )?;
            Ok(EXIT_OK)
        }
        _ => {
            let r = build_3d(code).map_err(internal)?;
            if !audit(&r.grid, code).passed() {
                return Err(internal("3D grid failed its audit"));
            }
            let scene_path = dir.join("scene.json");
            write(&grid_path, &r.grid.to_json())?;
            write(&scene_path, &scene_document(&r.grid).expect("3D grid"))?;
            let files = [grid_path, scene_path].map(|p| p.display().to_string());
            let e = r.grid.extents();
            io.say(
                &format!(
                    "{} balls, {} tubes; grid {}x{}x{}\ngrid: {}\nscene: {}",
                    r.balls.len(),
                    r.tubes.len(),
                    e[0],
                    e[1],
                    e[2],
                    files[0],
                    files[1]
                ),
                json!({ "dim": 3, "realizable": true, "balls": r.balls.len(), "tubes": r.tubes.len(), "extents": e, "files": files }),
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn graph(code: &Code, output: Option<&Path>, io: &mut Io) -> Outcome {
    let Ok(g) = canonical_graph(code) else {
        return not_connected(code, io);
    };
    let text = g.to_json();
    match output {
        Some(path) => {
            write(path, &text)?;
            io.say(&path.display().to_string(), json!({ "file": path.display().to_string() }))?;
        }
        None => io.say(&text, doc(&text)?)?,
    }
    Ok(EXIT_OK)
}

fn planar(path: &Path, io: &mut Io) -> Outcome {
    let g = AdmissibleGraph::from_json(&read(path)?).map_err(usage)?;
    match is_planar(&g.to_simple()) {
        Planarity::Planar(e) => {
            let mut text = String::from("PLANAR");
            for (v, rot) in e.rotation().iter().enumerate() {
                text.push_str(&format!("\n{v}: {rot:?}"));
            }
            io.say(&text, json!({ "planar": true, "rotation": e.rotation() }))?;
            Ok(EXIT_OK)
        }
        Planarity::NonPlanar(w) => {
            io.say(
                &format!("NON-PLANAR: {} subdivision on edges {:?}", w.kind, w.edges),
                json!({ "planar": false, "kind": w.kind.to_string(), "edges": w.edges }),
            )?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

/// Stable 64-bit FNV-1a, used to name certificate files.
fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn enumerate(n: usize, options: SearchOptions, output: Option<&Path>, certs: Option<&Path>, io: &mut Io) -> Outcome {
    if !(1..=MAX_CENSUS_NEURONS).contains(&n) {
        return Err(usage(format!("census needs 1 <= n <= {MAX_CENSUS_NEURONS}")));
    }
    if let Some(dir) = certs {
        fs::create_dir_all(dir).map_err(|e| internal(format!("{}: {e}", dir.display())))?;
    }
    let census = classify_all_with(n, options, |code, verdict| {
        if let Some(dir) = certs {
            let name = format!("{:016x}.json", fnv1a(&code.to_string()));
            let b = bundle(code, verdict).unwrap_or(Value::Null).to_string();
            fs::write(dir.join(name), b).expect("certificate directory is writable");
        }
    });
    let text = census.to_table();
    let rows: Vec<Value> = census
        .rows
        .iter()
        .map(|r| match r.status {
            Status::NotConnected => json!({ "code": r.code.to_string(), "connected": false }),
            Status::Dimension(d, e) => {
                let mut v = exactness_json(e);
                v["code"] = json!(r.code.to_string());
                v["connected"] = json!(true);
                v["d_star"] = json!(d);
                v
            }
            Status::Undecided => json!({ "code": r.code.to_string(), "connected": true, "d_star": null, "range": [2, 3] }),
        })
        .collect();
    let d = json!({ "n": n, "rows": rows });
    match output {
        Some(path) => {
            write(path, &if io.json { d.to_string() } else { text })?;
            io.say(&path.display().to_string(), json!({ "file": path.display().to_string() }))?;
        }
        None => {
            let trimmed = text.trim_end_matches('\n').to_string();
            io.say(&trimmed, d)?;
        }
    }
    Ok(EXIT_OK)
}

fn render(input: &Path, output: &Path, io: &mut Io) -> Outcome {
    let grid = GridRealization::from_json(&read(input)?).map_err(usage)?;
    let (kind, text) = match grid.dim() {
        3 => ("scene", scene_document(&grid).expect("3D grid")),
        _ => ("svg", svg(&grid).expect("1D or 2D grid")),
    };
    write(output, &text)?;
    io.say(
        &format!("{kind}: {}", output.display()),
        json!({ "kind": kind, "file": output.display().to_string() }),
    )?;
    Ok(EXIT_OK)
}

fn verify(code: &Code, path: &Path, io: &mut Io) -> Outcome {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let (kind, result) = if value.get("grid").is_some() {
        ("bundle", verify_bundle(code, &value)?)
    } else if value.get("word").is_some() {
        let word = AtomWord::from_json(&text).map_err(usage)?;
        ("word", verify_word(code, &word).then_some(()).ok_or("word".to_string()))
    } else if value.get("cells").is_some() {
        let grid = GridRealization::from_json(&text).map_err(usage)?;
        ("grid", grid_ok(code, &grid))
    } else if value.get("vertices").is_some() {
        let g = AdmissibleGraph::from_json(&text).map_err(usage)?;
        ("graph", validate(&g, code).map_err(|v| v.to_string()))
    } else {
        return Err(usage("unrecognized certificate: expected word, cells, vertices or grid"));
    };
    match result {
        Ok(()) => {
            io.say(&format!("VALID {kind}"), json!({ "valid": true, "kind": kind }))?;
            Ok(EXIT_OK)
        }
        Err(why) => {
            io.say(
                &format!("INVALID {kind}: {why}"),
                json!({ "valid": false, "kind": kind, "reason": why }),
            )?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

/// Neuron count stated by a certificate file; widens the code when `--neurons` is absent.
fn declared_neurons(path: &Path) -> Option<usize> {
    let value: Value = serde_json::from_str(&fs::read_to_string(path).ok()?).ok()?;
    let n = value.get("n").or_else(|| value.get("grid").and_then(|g| g.get("n")))?;
    n.as_u64().map(|n| n as usize)
}

fn grid_ok(code: &Code, grid: &GridRealization) -> Result<(), String> {
    let a = audit(grid, code);
    if a.passed() {
        return Ok(());
    }
    let mut why = Vec::new();
    if !a.code_matches {
        why.push("extracted code differs".to_string());
    }
    if !a.violations.is_empty() {
        why.push(format!("{} incomparable contacts", a.violations.len()));
    }
    if !a.disconnected_fields.is_empty() {
        why.push(format!("disconnected fields {:?}", a.disconnected_fields));
    }
    Err(why.join(", "))
}

fn verify_bundle(code: &Code, value: &Value) -> Result<Result<(), String>, Failure> {
    let grid = GridRealization::from_json(&value["grid"].to_string()).map_err(usage)?;
    let certificate = if let Some(w) = value.get("word") {
        let word: AtomWord = serde_json::from_value(json!({ "word": w })).map_err(usage)?;
        Certificate::Word { word, grid }
    } else if let Some(g) = value.get("graph") {
        let graph = AdmissibleGraph::from_json(&g.to_string()).map_err(usage)?;
        let rotation: Vec<Vec<usize>> = serde_json::from_value(value["rotation"].clone()).map_err(usage)?;
        let coords: Vec<(i64, i64)> = serde_json::from_value(value["coords"].clone()).map_err(usage)?;
        if !verify_straight_line(&graph.to_simple(), &coords) {
            return Ok(Err("drawing".to_string()));
        }
        Certificate::Planar {
            graph,
            embedding: crate::planarity::Embedding::new(rotation),
            coords,
            grid,
        }
    } else {
        return Ok(grid_ok(code, &grid));
    };
    Ok(verify_certificate(code, &certificate).map_err(|s| s.to_string()))
}
