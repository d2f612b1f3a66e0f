//! `thrackle` command-line tool.
//!
//! Exit status: 0 for a positive answer, 1 for a valid run whose answer is
//! "no", 2 for unreadable or invalid input. Verdicts are printed to
//! standard output as JSON.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use thrackle::construct::{
    construct_caterpillar_straight_line, construct_spider_3_2_gc, construct_star_polygon_cycle,
    SpiderConstructionParams,
};
use thrackle::drawing::{deserialize, render_svg, serialize, Drawing, DrawingDocument, Meta, Projection};
use thrackle::graph::{
    classify_spider, contains_spider_3_3, diameter_paths, edge_bound_holds, is_augmented_caterpillar,
    is_caterpillar, is_straight_line_thrackleable, parse_graph_text, Graph,
};
use thrackle::search::{search, summarize, SearchConfig};
use thrackle::verify::{conjecture3_audit, lemma_audit, thrackle_report, AuditMode, VerifyError};
use thrackle::Tolerances;

#[derive(Parser)]
#[command(name = "thrackle", version, about = "Thrackle drawings on the sphere and in the plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the primary output to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the tree (or graph) in a graph file.
    Classify {
        graph: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Verify that a drawing document is a thrackle.
    Verify {
        drawing: PathBuf,
        /// Override the document's side tolerance.
        #[arg(long)]
        eps_side: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Audit separation structure of a spherical drawing.
    Audit {
        drawing: PathBuf,
        #[arg(long)]
        eps_side: Option<f64>,
        /// Evaluate even if the drawing is not a general-position thrackle.
        #[arg(long)]
        forced: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Build an explicit thrackle drawing.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Search for a great-circle thrackle drawing of a tree.
    Search {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = SearchConfig::default().restarts)]
        restarts: usize,
        #[arg(long, default_value_t = SearchConfig::default().iterations)]
        iters: usize,
        #[arg(long, default_value_t = SearchConfig::default().margin)]
        margin: f64,
        #[arg(long)]
        eps_side: Option<f64>,
        /// Write the found drawing here on success.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the statistics report here as well as to standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Render a drawing document as SVG.
    Render {
        drawing: PathBuf,
        /// `orthographic[:x|y|z|-x|...|a,b,c]` or `planar`.
        #[arg(long, default_value = "orthographic:z")]
        projection: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Odd cycle drawn as a star polygon.
    StarCycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Straight-line thrackle of a caterpillar.
    Caterpillar {
        graph: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Great-circle thrackle of the spider with three legs of length two.
    Spider32 {
        #[command(flatten)]
        output: Output,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// Reads a graph file, or the graph embedded in a drawing document.
fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        Ok(deserialize(&text)?.graph().clone())
    } else {
        Ok(parse_graph_text(&text)?)
    }
}

fn read_document(path: &Path, eps_side: Option<f64>) -> Result<DrawingDocument, Failure> {
    let mut doc = deserialize(&read(path)?)?;
    if let Some(eps) = eps_side {
        doc.meta.tolerances.side = eps;
    }
    Ok(doc)
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data") + "\n"
}

/// Prints a verdict and optionally saves a copy.
fn report(out: &Option<PathBuf>, v: &impl serde::Serialize) -> Result<(), Failure> {
    let text = pretty(v);
    print!("{text}");
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn classify(graph: &Path, output: &Output) -> Run {
    let g = read_graph(graph)?;
    let tree = g.is_tree();
    let opt = |r: Result<bool, _>| r.ok();
    let v = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "is_tree": tree,
        "is_caterpillar": opt(is_caterpillar(&g)),
        "spider": classify_spider(&g).ok().flatten(),
        "is_augmented_caterpillar": opt(is_augmented_caterpillar(&g)),
        "contains_spider_3_3": opt(contains_spider_3_3(&g)),
        "straight_line_thrackleable": is_straight_line_thrackleable(&g),
        "edge_bound_holds": edge_bound_holds(&g),
    });
    report(&output.out, &v)?;
    Ok(0)
}

fn verify(drawing: &Path, eps_side: Option<f64>, output: &Output) -> Run {
    let doc = read_document(drawing, eps_side)?;
    let r = thrackle_report(&doc);
    report(&output.out, &r)?;
    Ok(if r.is_thrackle { 0 } else { 1 })
}

fn audit(drawing: &Path, eps_side: Option<f64>, forced: bool, output: &Output) -> Run {
    let doc = read_document(drawing, eps_side)?;
    let Drawing::Spherical(d) = &doc.drawing else {
        return Err(Failure("audit needs a spherical drawing".into()));
    };
    let tol = doc.tolerances();
    let mode = if forced { AuditMode::Forced } else { AuditMode::Strict };
    let lemmas = match lemma_audit(d, tol, mode) {
        Ok(r) => r,
        Err(VerifyError::NotAThrackle) => {
            report(&output.out, &json!({ "error": "not a general-position thrackle" }))?;
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let spine = diameter_paths(d.graph())
        .ok()
        .and_then(|paths| paths.into_iter().next());
    let conjecture = match &spine {
        Some(s) => Some(conjecture3_audit(d, s, tol)?),
        None => None,
    };
    let holds = lemmas.all_hold();
    report(
        &output.out,
        &json!({ "lemmas": lemmas, "spine_alternation": conjecture, "all_lemmas_hold": holds }),
    )?;
    Ok(if holds { 0 } else { 1 })
}

fn construct(kind: &ConstructKind) -> Run {
    let (doc, out) = match kind {
        ConstructKind::StarCycle { n, output } => (
            DrawingDocument::planar(construct_star_polygon_cycle(*n)?, Meta::named(format!("star-cycle-{n}"))),
            &output.out,
        ),
        ConstructKind::Caterpillar { graph, output } => {
            let g = read_graph(graph)?;
            (
                DrawingDocument::planar(construct_caterpillar_straight_line(&g)?, Meta::named("caterpillar")),
                &output.out,
            )
        }
        ConstructKind::Spider32 { output } => (
            DrawingDocument::spherical(
                construct_spider_3_2_gc(&SpiderConstructionParams::default())?,
                Meta::named("spider-3-2"),
            ),
            &output.out,
        ),
    };
    write_or_print(out, &serialize(&doc))?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn run_search(
    graph: &Path,
    seed: u64,
    restarts: usize,
    iters: usize,
    margin: f64,
    eps_side: Option<f64>,
    out: &Option<PathBuf>,
    report_path: &Option<PathBuf>,
) -> Run {
    let g = read_graph(graph)?;
    let mut cfg = SearchConfig {
        seed,
        restarts,
        iterations: iters,
        margin,
        ..SearchConfig::default()
    };
    if let Some(eps) = eps_side {
        cfg.tolerances = Tolerances::default().with_side(eps);
    }
    let outcome = search(&g, &cfg)?;
    let summary = summarize(&g, &cfg, &outcome);
    let v: Value = json!({ "summary": summary, "restarts": outcome.restarts });
    report(report_path, &v)?;
    if let (Some(d), Some(path)) = (outcome.drawing(), out) {
        let meta = Meta {
            name: Some("search".into()),
            seed: Some(seed),
            tolerances: cfg.tolerances,
        };
        let doc = DrawingDocument::spherical(d.clone(), meta);
        fs::write(path, serialize(&doc)).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(if outcome.success { 0 } else { 1 })
}

fn render(drawing: &Path, projection: &str, output: &Output) -> Run {
    let doc = read_document(drawing, None)?;
    let projection: Projection = projection.parse().map_err(Failure)?;
    write_or_print(&output.out, &render_svg(&doc, projection))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { graph, output } => classify(graph, output),
        Command::Verify { drawing, eps_side, output } => verify(drawing, *eps_side, output),
        Command::Audit { drawing, eps_side, forced, output } => audit(drawing, *eps_side, *forced, output),
        Command::Construct { kind } => construct(kind),
        Command::Search {
            graph,
            seed,
            restarts,
            iters,
            margin,
            eps_side,
            out,
            report,
        } => run_search(graph, *seed, *restarts, *iters, *margin, *eps_side, out, report),
        Command::Render { drawing, projection, output } => render(drawing, projection, output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
