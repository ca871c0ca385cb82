mod json;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use json::{
    parse_rational, rational_string, sha256_hex, CancellationJson, CobordismJson, DiagramJson,
    GraphFile, GroupJson, PackageJson, ProfileJson, ReducedSummandJson, Report,
};
use protocork_core::cobordism::{
    build_c, build_q, build_t, build_w, check_trivial, compose, protocork_as_cobordism,
    CobordismError, GammaKind,
};
use protocork_core::floer::{
    bar_gr, dimension_additivity_check, formal_dimension, ms_gate, split_package, CyclicSummand,
    FiniteUModule, Flavor, FloerError,
};
use protocork_core::graph::{enumerate, EnumerateError, GraphError, ProtocorkGraph};
use protocork_core::homology::{boundary_homology, protocork_homology};
use protocork_core::kirby::{build_diagram, diagram_counts, render, RenderFormat, Stage};
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "protocork",
    version,
    about = "Plumbing graphs, Kirby diagrams, homology, cobordisms, and graded Floer bookkeeping"
)]
struct Cli {
    /// Fill the timing_ms field of the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file against the plumbing constraints.
    Validate { path: PathBuf },
    /// Graph statistics, stage homology, and boundary H1.
    Info { path: PathBuf },
    /// Write a diagram artifact for one handle stage.
    Kirby {
        path: PathBuf,
        /// Handle stage: 0, half, or 1.
        #[arg(long)]
        stage: String,
        /// Artifact format: json, text, or svg.
        #[arg(long)]
        format: String,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Standard-plus-reduced Floer package of a boundary.
    Floer {
        /// Graph file; its boundary b1 is used.
        path: Option<PathBuf>,
        /// Use this b1 directly instead of a graph file.
        #[arg(long)]
        b1: Option<u32>,
        /// Flavor: hat, check, or bar.
        #[arg(long)]
        flavor: String,
        /// JSON file with the reduced summands [{"gr": "1/2", "order": 2}].
        #[arg(long)]
        reduced: Option<PathBuf>,
    },
    /// Arithmetic gate for invariance under a twist.
    Msgate {
        #[arg(long, allow_negative_numbers = true)]
        c1sq: i64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        #[arg(long, allow_negative_numbers = true)]
        sigma: i64,
        #[arg(long)]
        ddelta: u32,
    },
    /// Formal dimension and grading bookkeeping for a reducible level.
    Dims {
        #[arg(long)]
        b1: u32,
        #[arg(long)]
        indexf: u32,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
    },
    /// Build and verify a cobordism composition.
    Cobordism {
        path: PathBuf,
        /// QW, C0, C1, or T.
        #[arg(long)]
        check: String,
    },
    /// Enumerate isomorphism classes of graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_edges: usize,
        /// Give up beyond this many classes.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// Output directory for the class files.
        #[arg(long)]
        out: PathBuf,
    },
}

enum CmdError {
    Usage(String),
    Io(String),
    Parse(String),
    Domain { digest: String, command: &'static str, detail: Value },
}

type CmdOutput = (String, &'static str, Value, u8);

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let benign =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if benign { 0 } else { 4 });
        }
    };
    match run(&cli.command) {
        Ok((digest, command, results, code)) => {
            let mut report = Report::new(digest, command, results);
            if cli.timing {
                report.timing_ms = Some(started.elapsed().as_millis());
            }
            report.print();
            ExitCode::from(code)
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(4)
        }
        Err(CmdError::Io(msg)) => {
            eprintln!("io error: {msg}");
            ExitCode::from(3)
        }
        Err(CmdError::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(3)
        }
        Err(CmdError::Domain { digest, command, detail }) => {
            let mut report = Report::new(digest, command, detail);
            if cli.timing {
                report.timing_ms = Some(started.elapsed().as_millis());
            }
            report.print();
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> Result<CmdOutput, CmdError> {
    match command {
        Command::Validate { path } => cmd_validate(path),
        Command::Info { path } => cmd_info(path),
        Command::Kirby { path, stage, format, out } => cmd_kirby(path, stage, format, out),
        Command::Floer { path, b1, flavor, reduced } => {
            cmd_floer(path.as_deref(), *b1, flavor, reduced.as_deref())
        }
        Command::Msgate { c1sq, chi, sigma, ddelta } => cmd_msgate(*c1sq, *chi, *sigma, *ddelta),
        Command::Dims { b1, indexf, i } => cmd_dims(*b1, *indexf, *i),
        Command::Cobordism { path, check } => cmd_cobordism(path, check),
        Command::Enumerate { n, max_edges, cap, out } => cmd_enumerate(*n, *max_edges, *cap, out),
    }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, CmdError> {
    fs::read(path).map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))
}

fn parse_graph_file(path: &Path, bytes: &[u8]) -> Result<GraphFile, CmdError> {
    serde_json::from_slice(bytes).map_err(|e| CmdError::Parse(format!("{}: {e}", path.display())))
}

fn violation_json(err: &GraphError) -> Value {
    let violations: Vec<Value> = match err {
        GraphError::DeltaConstraintViolated { violations } => violations
            .iter()
            .map(|v| {
                json!({
                    "a": v.a,
                    "b": v.b,
                    "expected": v.expected,
                    "actual": v.actual,
                })
            })
            .collect(),
        _ => Vec::new(),
    };
    json!({ "error": err.to_string(), "violations": violations })
}

fn load_graph(
    path: &Path,
    command: &'static str,
) -> Result<(ProtocorkGraph, String), CmdError> {
    let bytes = read_bytes(path)?;
    let digest = sha256_hex(&bytes);
    let gf = parse_graph_file(path, &bytes)?;
    match ProtocorkGraph::new(gf.n, &gf.edges) {
        Ok(g) => Ok((g, digest)),
        Err(err) => Err(CmdError::Domain { digest, command, detail: violation_json(&err) }),
    }
}

fn cmd_validate(path: &Path) -> Result<CmdOutput, CmdError> {
    let bytes = read_bytes(path)?;
    let digest = sha256_hex(&bytes);
    let gf = parse_graph_file(path, &bytes)?;
    match ProtocorkGraph::new(gf.n, &gf.edges) {
        Ok(g) => {
            let results = json!({
                "valid": true,
                "n": g.n(),
                "edge_count": g.edge_count(),
                "component_count": g.component_count(),
                "violations": [],
            });
            Ok((digest, "validate", results, 0))
        }
        Err(err) => {
            let mut results = violation_json(&err);
            results["valid"] = json!(false);
            Ok((digest, "validate", results, 2))
        }
    }
}

fn cmd_info(path: &Path) -> Result<CmdOutput, CmdError> {
    let (g, digest) = load_graph(path, "info")?;
    let st = g.stats();
    let profile = |stage| serde_json::to_value(ProfileJson::of(&protocork_homology(&g, stage)));
    let results = json!({
        "n": g.n(),
        "edge_count": st.edge_count,
        "component_count": st.component_count,
        "connected": g.is_connected(),
        "b1_boundary": st.b1_boundary,
        "excess_edges": st.excess_edges,
        "symmetric": st.is_symmetric,
        "trivial": st.is_trivial,
        "canonical": g.canonical_hex(),
        "stages": {
            "0": profile(Stage::Zero).expect("profile serializes"),
            "1/2": profile(Stage::Half).expect("profile serializes"),
            "1": profile(Stage::One).expect("profile serializes"),
        },
        "boundary_h1": serde_json::to_value(GroupJson::of(&boundary_homology(&g)))
            .expect("group serializes"),
    });
    Ok((digest, "info", results, 0))
}

fn stage_file_label(stage: Stage) -> &'static str {
    match stage {
        Stage::Zero => "0",
        Stage::Half => "half",
        Stage::One => "1",
    }
}

fn cmd_kirby(
    path: &Path,
    stage_name: &str,
    format_name: &str,
    out: &Path,
) -> Result<CmdOutput, CmdError> {
    let stage = Stage::from_name(stage_name)
        .ok_or_else(|| CmdError::Usage(format!("unknown stage {stage_name:?}")))?;
    let known_format = matches!(format_name, "json" | "text" | "svg");
    if !known_format {
        return Err(CmdError::Usage(format!("unknown format {format_name:?}")));
    }
    let (g, digest) = load_graph(path, "kirby")?;
    let d = build_diagram(&g, stage);
    let counts = diagram_counts(&d);
    let (extension, contents): (&str, Vec<u8>) = match format_name {
        "json" => {
            let mut body =
                serde_json::to_string_pretty(&DiagramJson::of(&d)).expect("diagram serializes");
            body.push('\n');
            ("json", body.into_bytes())
        }
        "text" => ("txt", render(&d, RenderFormat::Text)),
        _ => ("svg", render(&d, RenderFormat::Svg)),
    };
    fs::create_dir_all(out).map_err(|e| CmdError::Io(format!("{}: {e}", out.display())))?;
    let file_name = format!(
        "kirby-{}-stage-{}.{}",
        g.canonical_hex(),
        stage_file_label(stage),
        extension
    );
    let file_path = out.join(&file_name);
    fs::write(&file_path, &contents)
        .map_err(|e| CmdError::Io(format!("{}: {e}", file_path.display())))?;
    let results = json!({
        "stage": stage.label(),
        "format": format_name,
        "file": file_name,
        "bytes": contents.len(),
        "counts": {
            "framed": counts.framed,
            "dotted": counts.dotted,
            "clasps": counts.clasps,
        },
    });
    Ok((digest, "kirby", results, 0))
}

fn load_reduced(path: &Path) -> Result<(FiniteUModule, Vec<u8>), CmdError> {
    let bytes = read_bytes(path)?;
    let raw: Vec<ReducedSummandJson> = serde_json::from_slice(&bytes)
        .map_err(|e| CmdError::Parse(format!("{}: {e}", path.display())))?;
    let mut summands = Vec::with_capacity(raw.len());
    for entry in &raw {
        let grading = parse_rational(&entry.gr).ok_or_else(|| {
            CmdError::Parse(format!("{}: bad rational {:?}", path.display(), entry.gr))
        })?;
        if entry.order == 0 {
            return Err(CmdError::Parse(format!(
                "{}: order must be at least 1",
                path.display()
            )));
        }
        summands.push(CyclicSummand { grading, order: entry.order });
    }
    Ok((FiniteUModule::new(summands), bytes))
}

fn cmd_floer(
    path: Option<&Path>,
    b1_flag: Option<u32>,
    flavor_name: &str,
    reduced_path: Option<&Path>,
) -> Result<CmdOutput, CmdError> {
    let flavor = Flavor::from_name(flavor_name)
        .ok_or_else(|| CmdError::Usage(format!("unknown flavor {flavor_name:?}")))?;
    let mut digest_input: Vec<u8> = Vec::new();
    let b1 = match (path, b1_flag) {
        (Some(_), Some(_)) => {
            return Err(CmdError::Usage("pass a graph file or --b1, not both".into()))
        }
        (None, None) => {
            return Err(CmdError::Usage("pass a graph file or --b1".into()))
        }
        (Some(p), None) => {
            let (g, _) = load_graph(p, "floer")?;
            digest_input.extend_from_slice(&read_bytes(p)?);
            u32::try_from(g.stats().b1_boundary).expect("b1 fits")
        }
        (None, Some(b)) => {
            digest_input.extend_from_slice(format!("floer:b1={b}").as_bytes());
            b
        }
    };
    digest_input.push(0);
    digest_input.extend_from_slice(flavor.label().as_bytes());
    let reduced = match reduced_path {
        Some(p) => {
            let (module, bytes) = load_reduced(p)?;
            digest_input.push(0);
            digest_input.extend_from_slice(&bytes);
            module
        }
        None => FiniteUModule::empty(),
    };
    let digest = sha256_hex(&digest_input);
    match split_package(b1, flavor, reduced) {
        Ok(package) => {
            let results =
                serde_json::to_value(PackageJson::of(&package)).expect("package serializes");
            Ok((digest, "floer", results, 0))
        }
        Err(FloerError::BarHasReduced) => Err(CmdError::Domain {
            digest,
            command: "floer",
            detail: json!({ "error": "bar flavor carries no reduced part" }),
        }),
        Err(other) => Err(CmdError::Domain {
            digest,
            command: "floer",
            detail: json!({ "error": other.to_string() }),
        }),
    }
}

fn cmd_msgate(c1sq: i64, chi: i64, sigma: i64, ddelta: u32) -> Result<CmdOutput, CmdError> {
    let digest = sha256_hex(
        format!("msgate:c1sq={c1sq}:chi={chi}:sigma={sigma}:ddelta={ddelta}").as_bytes(),
    );
    let gate = ms_gate(c1sq, chi, sigma, ddelta);
    let results = json!({
        "c1sq": c1sq,
        "chi": chi,
        "sigma": sigma,
        "ddelta": ddelta,
        "d": rational_string(gate.d),
        "passes": gate.passes,
    });
    Ok((digest, "msgate", results, 0))
}

fn cmd_dims(b1: u32, indexf: u32, i: i64) -> Result<CmdOutput, CmdError> {
    let digest = sha256_hex(format!("dims:b1={b1}:indexf={indexf}:i={i}").as_bytes());
    if indexf > b1 {
        return Err(CmdError::Domain {
            digest,
            command: "dims",
            detail: json!({ "error": format!("indexf {indexf} exceeds b1 {b1}") }),
        });
    }
    let results = json!({
        "b1": b1,
        "indexf": indexf,
        "i": i,
        "formal_dimension": formal_dimension(b1, indexf, i),
        "bar_gr_from_top": bar_gr(b1, 0, indexf, i),
        "additivity_ok": dimension_additivity_check(b1, indexf, i),
    });
    Ok((digest, "dims", results, 0))
}

fn cobordism_domain(digest: String, err: CobordismError) -> CmdError {
    CmdError::Domain {
        digest,
        command: "cobordism",
        detail: json!({ "error": err.to_string() }),
    }
}

fn cmd_cobordism(path: &Path, check: &str) -> Result<CmdOutput, CmdError> {
    if !matches!(check, "QW" | "C0" | "C1" | "T") {
        return Err(CmdError::Usage(format!(
            "unknown check {check:?}; expected QW, C0, C1, or T"
        )));
    }
    let (g, digest) = load_graph(path, "cobordism")?;
    let mut gamma = Value::Null;
    let composed = match check {
        "QW" => {
            let w = build_w(&g).map_err(|e| cobordism_domain(digest.clone(), e))?;
            let q = build_q(&g).map_err(|e| cobordism_domain(digest.clone(), e))?;
            compose(&w, &q).map_err(|e| cobordism_domain(digest.clone(), e))?
        }
        "C0" | "C1" => {
            let stage = if check == "C0" { Stage::Zero } else { Stage::One };
            let end = protocork_as_cobordism(&g, stage)
                .map_err(|e| cobordism_domain(digest.clone(), e))?;
            let c = build_c(&g).map_err(|e| cobordism_domain(digest.clone(), e))?;
            compose(&end, &c).map_err(|e| cobordism_domain(digest.clone(), e))?
        }
        _ => {
            let end = protocork_as_cobordism(&g, Stage::Zero)
                .map_err(|e| cobordism_domain(digest.clone(), e))?;
            let t = build_t(&g).map_err(|e| cobordism_domain(digest.clone(), e))?;
            gamma = json!({
                "curves": t
                    .curves
                    .iter()
                    .map(|c| {
                        json!({
                            "edge": c.edge,
                            "kind": match c.kind {
                                GammaKind::Zigzag => "zigzag",
                                GammaKind::EightLoop => "eight-loop",
                            },
                            "threads": c.threads,
                        })
                    })
                    .collect::<Vec<_>>(),
                "tau_pairing": t.tau_pairing,
            });
            compose(&end, &t.cobordism).map_err(|e| cobordism_domain(digest.clone(), e))?
        }
    };
    let report = check_trivial(&composed);
    let results = json!({
        "check": check,
        "composition": serde_json::to_value(CobordismJson::of(&composed))
            .expect("cobordism serializes"),
        "gamma": gamma,
        "cancellation": serde_json::to_value(CancellationJson::of(&report))
            .expect("cancellation serializes"),
    });
    let code = if report.trivial { 0 } else { 2 };
    Ok((digest, "cobordism", results, code))
}

fn cmd_enumerate(
    n: usize,
    max_edges: usize,
    cap: usize,
    out: &Path,
) -> Result<CmdOutput, CmdError> {
    let digest =
        sha256_hex(format!("enumerate:n={n}:max-edges={max_edges}:cap={cap}").as_bytes());
    if n == 0 {
        return Err(CmdError::Usage("n must be at least 1".into()));
    }
    let graphs = match enumerate(n, max_edges, cap) {
        Ok(graphs) => graphs,
        Err(EnumerateError::BudgetExceeded { cap }) => {
            return Err(CmdError::Domain {
                digest,
                command: "enumerate",
                detail: json!({ "error": format!("class budget of {cap} exceeded") }),
            })
        }
    };
    fs::create_dir_all(out).map_err(|e| CmdError::Io(format!("{}: {e}", out.display())))?;
    let mut files = Vec::with_capacity(graphs.len());
    let mut by_edge_count: Vec<(usize, usize)> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let file_name = format!("graph-{i:03}.json");
        let mut body =
            serde_json::to_string_pretty(&GraphFile::of(g)).expect("graph serializes");
        body.push('\n');
        let file_path = out.join(&file_name);
        fs::write(&file_path, body)
            .map_err(|e| CmdError::Io(format!("{}: {e}", file_path.display())))?;
        files.push(file_name);
        match by_edge_count.last_mut() {
            Some((edges, count)) if *edges == g.edge_count() => *count += 1,
            _ => by_edge_count.push((g.edge_count(), 1)),
        }
    }
    let results = json!({
        "n": n,
        "max_edges": max_edges,
        "cap": cap,
        "classes": graphs.len(),
        "by_edge_count": by_edge_count,
        "files": files,
    });
    Ok((digest, "enumerate", results, 0))
}
