//! The `edgedim` command line: `compute`, `construct`, `verify`, `survey`.
//!
//! Exit codes: 0 success, 2 input error, 3 unmet precondition (e.g. a
//! disconnected graph), 4 a theorem check failed.

mod manifest;
pub mod spec;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{cartesian_path, join, LabeledConstruction};
use crate::error::Error;
use crate::experiments::{survey, survey_csv, MAX_SURVEY_N};
use crate::format::{parse_graph, to_graph6, write_graph, Format};
use crate::resolver::{dimension, min_joint_cover, Kind};
use crate::theorems::{
    check_family, check_graph, sweep, Summary, TheoremId, TheoremReport, Verdict,
};

pub use manifest::{sha256_hex, RunManifest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "edgedim",
    version,
    about = "Exact metric and edge metric dimension toolkit"
)]
pub struct Cli {
    /// Worker threads; 1 is the sequential reference. Defaults to all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeKind {
    Dim,
    Edim,
    Joint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Auto,
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructName {
    #[value(name = "F")]
    F,
    #[value(name = "H")]
    H,
    Join,
    Prod,
    Family,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute dim, edim, or the minimum joint cover of one graph.
    Compute {
        kind: ComputeKind,
        /// Edge-list or graph6 file.
        input: Option<PathBuf>,
        /// Inline graph instead of a file, e.g. `--construct F 2` or `--construct path 5`.
        #[arg(long, num_args = 1.., value_name = "NAME PARAMS")]
        construct: Option<Vec<String>>,
        /// Inline spec such as `path:5`, `F:2` or `g6:Bw`.
        #[arg(long = "g", value_name = "SPEC")]
        spec: Option<String>,
        /// Also list every minimum basis.
        #[arg(long)]
        all_bases: bool,
        #[arg(long, value_enum, default_value = "auto")]
        format: FormatArg,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Build a named graph and write it out with a label map.
    Construct {
        name: ConstructName,
        /// k for F/H; family name and parameters for `family`.
        params: Vec<String>,
        /// First operand for `join`, the factor for `prod`.
        #[arg(long = "g", value_name = "SPEC")]
        g: Option<String>,
        /// Second operand for `join`.
        #[arg(long = "h", value_name = "SPEC")]
        h: Option<String>,
        /// Number of copies for `prod`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Output format; defaults to graph6 for `.g6` outputs, else edge list.
        #[arg(long, value_enum, default_value = "auto")]
        format: FormatArg,
    },
    /// Check a theorem on one graph, a sweep of all small graphs, or F_k/H_k.
    Verify {
        theorem: String,
        /// Graph file to check.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Inline graph spec to check.
        #[arg(long = "g", value_name = "SPEC")]
        spec: Option<String>,
        /// Check every labeled connected graph with nmin..=N vertices.
        #[arg(long, value_name = "N")]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 1)]
        nmin: usize,
        /// Check k = 1..=K for fk / hk.
        #[arg(long, value_name = "K")]
        kmax: Option<usize>,
        /// Path copies for `product`; repeatable. Defaults to 2 and 3.
        #[arg(long)]
        m: Vec<usize>,
        /// Only print failing instances and the summary.
        #[arg(long)]
        failures_only: bool,
        /// Also write a JSON report document here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Tabulate realised (n, dim, edim) triples over all connected graphs on n vertices.
    Survey {
        n: usize,
        /// CSV destination; a manifest is written next to it.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write a JSON document with rows and ratio extremes.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

/// A failure that ends the run with a specific exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected | Error::NoEdges => EXIT_PRECONDITION,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// What a successful run produced: text for stdout and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses `args`, runs the command on a pool of the requested size, and
/// returns the exit code. Output is buffered and written once at the end.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(input_failure("--threads must be at least 1"));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| input_failure(format!("cannot start worker pool: {e}")))?;
    pool.install(|| dispatch(cli.command))
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Compute {
            kind,
            input,
            construct,
            spec,
            all_bases,
            format,
            json,
        } => {
            let (g, _) = load_graph(
                input.as_deref(),
                construct.as_deref(),
                spec.as_deref(),
                format,
            )?;
            compute(kind, &g.graph, all_bases, json)
        }
        Command::Construct {
            name,
            params,
            g,
            h,
            m,
            out,
            format,
        } => construct(
            name,
            &params,
            g.as_deref(),
            h.as_deref(),
            m,
            out.as_deref(),
            format,
        ),
        Command::Verify {
            theorem,
            graph,
            spec,
            sweep,
            nmin,
            kmax,
            m,
            failures_only,
            json,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let scope = Scope {
                graph,
                spec,
                sweep,
                nmin,
                kmax,
                ms: m,
            };
            verify(theorem, scope, failures_only, json.as_deref())
        }
        Command::Survey { n, out, json } => run_survey(n, out.as_deref(), json.as_deref()),
    }
}

fn to_format(f: FormatArg) -> Option<Format> {
    match f {
        FormatArg::Auto => None,
        FormatArg::Edgelist => Some(Format::EdgeList),
        FormatArg::Graph6 => Some(Format::Graph6),
    }
}

/// Loads the graph named by exactly one of a file, `--construct` tokens, or
/// an inline spec. Also returns the bytes that identify the input.
fn load_graph(
    input: Option<&Path>,
    construct: Option<&[String]>,
    spec_str: Option<&str>,
    format: FormatArg,
) -> Result<(LabeledConstruction, Vec<u8>), Failure> {
    match (input, construct, spec_str) {
        (Some(path), None, None) => {
            let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| input_failure(format!("{}: not UTF-8", path.display())))?;
            let format = to_format(format).or_else(|| {
                matches!(
                    path.extension().and_then(|e| e.to_str()),
                    Some("g6" | "graph6")
                )
                .then_some(Format::Graph6)
            });
            let g = parse_graph(&text, format).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("{}: {e}", path.display()),
            })?;
            Ok((spec::plain(g), bytes))
        }
        (None, Some(tokens), None) => {
            let c = spec::resolve_tokens(tokens)?;
            let id = to_graph6(&c.graph).into_bytes();
            Ok((c, id))
        }
        (None, None, Some(s)) => {
            let c = spec::resolve(s)?;
            let id = to_graph6(&c.graph).into_bytes();
            Ok((c, id))
        }
        (None, None, None) => Err(input_failure(
            "no graph given: pass a file, --construct or --g",
        )),
        _ => Err(input_failure(
            "give exactly one of a file, --construct or --g",
        )),
    }
}

fn fmt_set(s: &[usize]) -> String {
    let items: Vec<_> = s.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn compute(
    kind: ComputeKind,
    g: &crate::graph::Graph,
    all_bases: bool,
    json: bool,
) -> Result<Outcome, Failure> {
    let mut out = String::new();
    let id = to_graph6(g);
    match kind {
        ComputeKind::Dim | ComputeKind::Edim => {
            let k = if kind == ComputeKind::Dim {
                Kind::Vertex
            } else {
                Kind::Edge
            };
            let r = dimension(g, k, all_bases)?;
            if json {
                #[derive(Serialize)]
                struct Doc<'a> {
                    kind: Kind,
                    graph: &'a str,
                    #[serde(flatten)]
                    result: &'a crate::resolver::DimensionResult,
                }
                let doc = Doc {
                    kind: k,
                    graph: &id,
                    result: &r,
                };
                out = serde_json::to_string_pretty(&doc).expect("serialises") + "\n";
            } else {
                let label = if kind == ComputeKind::Dim {
                    "dim"
                } else {
                    "edim"
                };
                writeln!(out, "kind: {label}").unwrap();
                writeln!(out, "graph: {id}").unwrap();
                writeln!(out, "n: {}", g.vertex_count()).unwrap();
                writeln!(out, "edges: {}", g.edge_count()).unwrap();
                writeln!(out, "value: {}", r.value).unwrap();
                writeln!(out, "witness: {}", fmt_set(&r.witness)).unwrap();
                if let Some(all) = &r.all_bases {
                    writeln!(out, "bases: {}", all.len()).unwrap();
                    for b in all {
                        writeln!(out, "basis: {}", fmt_set(b)).unwrap();
                    }
                }
            }
        }
        ComputeKind::Joint => {
            let j = min_joint_cover(g)?;
            if json {
                out = serde_json::to_string_pretty(&j).expect("serialises") + "\n";
            } else {
                writeln!(out, "kind: joint").unwrap();
                writeln!(out, "graph: {id}").unwrap();
                writeln!(out, "k: {}", j.k).unwrap();
                writeln!(out, "vertex_basis: {}", fmt_set(&j.vertex_basis)).unwrap();
                writeln!(out, "edge_basis: {}", fmt_set(&j.edge_basis)).unwrap();
                writeln!(out, "union: {}", fmt_set(&j.union())).unwrap();
            }
        }
    }
    Ok(Outcome {
        stdout: out,
        code: EXIT_OK,
    })
}

fn construct(
    name: ConstructName,
    params: &[String],
    g: Option<&str>,
    h: Option<&str>,
    m: Option<usize>,
    out: Option<&Path>,
    format: FormatArg,
) -> Result<Outcome, Failure> {
    let (built, command) = match name {
        ConstructName::F | ConstructName::H => {
            let letter = if name == ConstructName::F { "F" } else { "H" };
            let [k] = params else {
                return Err(input_failure(format!(
                    "{letter} takes exactly one parameter k"
                )));
            };
            (
                spec::resolve(&format!("{letter}:{k}"))?,
                format!("construct {letter} {k}"),
            )
        }
        ConstructName::Family => (
            spec::resolve_tokens(params)?,
            format!("construct family {}", params.join(" ")),
        ),
        ConstructName::Join => {
            let (gs, hs) = (need(g, "--g")?, need(h, "--h")?);
            let (a, b) = (spec::resolve(gs)?, spec::resolve(hs)?);
            let graph = join(&a.graph, &b.graph)?;
            let labels = a
                .labels
                .iter()
                .map(|l| format!("g.{l}"))
                .chain(b.labels.iter().map(|l| format!("h.{l}")))
                .collect();
            (
                LabeledConstruction { graph, labels },
                format!("construct join --g {gs} --h {hs}"),
            )
        }
        ConstructName::Prod => {
            let gs = need(g, "--g")?;
            let m = m.ok_or_else(|| input_failure("`--m` is required for prod"))?;
            (
                cartesian_path(&spec::resolve(gs)?.graph, m)?,
                format!("construct prod --g {gs} --m {m}"),
            )
        }
    };

    let format = to_format(format).unwrap_or_else(|| match out.and_then(|p| p.extension()) {
        Some(e) if e == "g6" || e == "graph6" => Format::Graph6,
        _ => Format::EdgeList,
    });
    let text = write_graph(&built.graph, format);
    let Some(path) = out else {
        return Ok(Outcome {
            stdout: text,
            code: EXIT_OK,
        });
    };

    let labels_path = sidecar(path, "labels.json");
    let manifest_path = sidecar(path, "manifest.json");
    #[derive(Serialize)]
    struct LabelDoc<'a> {
        graph6: String,
        labels: &'a [String],
    }
    let doc = LabelDoc {
        graph6: to_graph6(&built.graph),
        labels: &built.labels,
    };
    let manifest = RunManifest::new(
        command,
        doc.graph6.as_bytes(),
        vec![file_name(path), file_name(&labels_path)],
    );
    write_file(path, &text)?;
    write_file(
        &labels_path,
        &(serde_json::to_string_pretty(&doc).expect("serialises") + "\n"),
    )?;
    write_file(&manifest_path, &manifest.to_json())?;
    Ok(Outcome {
        stdout: format!(
            "wrote {} ({} vertices, {} edges)\n",
            path.display(),
            built.graph.vertex_count(),
            built.graph.edge_count()
        ),
        code: EXIT_OK,
    })
}

fn need<'a>(s: Option<&'a str>, flag: &str) -> Result<&'a str, Failure> {
    s.ok_or_else(|| input_failure(format!("`{flag}` is required for this construction")))
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |f| f.to_string_lossy().into_owned(),
    )
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

struct Scope {
    graph: Option<PathBuf>,
    spec: Option<String>,
    sweep: Option<usize>,
    nmin: usize,
    kmax: Option<usize>,
    ms: Vec<usize>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    theorem_id: TheoremId,
    scope: String,
    summary: Summary,
    reports: &'a [TheoremReport],
}

fn verify(
    theorem: TheoremId,
    scope: Scope,
    failures_only: bool,
    json: Option<&Path>,
) -> Result<Outcome, Failure> {
    let ms = if scope.ms.is_empty() {
        vec![2, 3]
    } else {
        scope.ms.clone()
    };
    let (reports, scope_desc, input): (Vec<TheoremReport>, String, Vec<u8>) = if theorem.is_family()
    {
        if scope.graph.is_some() || scope.spec.is_some() || scope.sweep.is_some() {
            return Err(input_failure(format!(
                "{theorem} takes --kmax, not a graph"
            )));
        }
        let kmax = scope.kmax.unwrap_or(3);
        let reports = (1..=kmax)
            .map(|k| check_family(theorem, k))
            .collect::<Result<_, _>>()?;
        (reports, format!("kmax {kmax}"), Vec::new())
    } else if let Some(nmax) = scope.sweep {
        if scope.graph.is_some() || scope.spec.is_some() {
            return Err(input_failure("give either a graph or --sweep, not both"));
        }
        let reports = sweep(&[theorem], scope.nmin, nmax, &ms)?;
        (
            reports,
            format!("sweep {}..={nmax}", scope.nmin),
            Vec::new(),
        )
    } else {
        if scope.kmax.is_some() {
            return Err(input_failure(format!(
                "{theorem} is checked per graph; --kmax does not apply"
            )));
        }
        let (c, input) = load_graph(
            scope.graph.as_deref(),
            None,
            scope.spec.as_deref(),
            FormatArg::Auto,
        )?;
        let reports = if theorem == TheoremId::Product {
            ms.iter()
                .map(|&m| check_graph(theorem, &c.graph, m))
                .collect::<Result<_, _>>()?
        } else {
            vec![check_graph(theorem, &c.graph, 0)?]
        };
        (reports, format!("graph {}", to_graph6(&c.graph)), input)
    };

    let summary = Summary::of(&reports);
    let mut out = String::new();
    for r in &reports {
        if !failures_only || r.verdict == Verdict::Fails {
            writeln!(out, "{}", r.to_record()).unwrap();
        }
    }
    writeln!(
        out,
        "summary: theorem={theorem} scope=\"{scope_desc}\" instances={} holds={} fails={} not_applicable={}",
        summary.instances, summary.holds, summary.fails, summary.not_applicable
    )
    .unwrap();

    if let Some(path) = json {
        let doc = ReportDoc {
            theorem_id: theorem,
            scope: scope_desc.clone(),
            summary,
            reports: &reports,
        };
        write_file(
            path,
            &(serde_json::to_string_pretty(&doc).expect("serialises") + "\n"),
        )?;
        let mut command = format!("verify {theorem} {scope_desc}");
        if theorem == TheoremId::Product {
            write!(command, " m={ms:?}").unwrap();
        }
        let manifest = RunManifest::new(command, &input, vec![file_name(path)]);
        write_file(&sidecar(path, "manifest.json"), &manifest.to_json())?;
    }
    let code = if summary.fails > 0 {
        EXIT_FAILED
    } else {
        EXIT_OK
    };
    Ok(Outcome { stdout: out, code })
}

fn run_survey(n: usize, out: Option<&Path>, json: Option<&Path>) -> Result<Outcome, Failure> {
    if !(1..=MAX_SURVEY_N).contains(&n) {
        return Err(Error::NTooLarge {
            n,
            max: MAX_SURVEY_N,
        }
        .into());
    }
    let s = survey(n)?;
    let csv = survey_csv(&s.rows);
    let mut outputs = Vec::new();
    if let Some(path) = json {
        write_file(
            path,
            &(serde_json::to_string_pretty(&s).expect("serialises") + "\n"),
        )?;
        outputs.push(path);
    }
    let Some(path) = out else {
        return Ok(Outcome {
            stdout: csv,
            code: EXIT_OK,
        });
    };
    write_file(path, &csv)?;
    outputs.insert(0, path);
    let command = format!("survey {n}");
    let manifest = RunManifest::new(
        command.clone(),
        command.as_bytes(),
        outputs.iter().map(|p| file_name(p)).collect(),
    );
    write_file(&sidecar(path, "manifest.json"), &manifest.to_json())?;

    let mut text = format!("wrote {} ({} rows)\n", path.display(), s.rows.len());
    if let Some(r) = &s.ratio {
        writeln!(
            text,
            "max edim/dim: {} ({} graphs)",
            r.max_ratio,
            r.witnesses.len()
        )
        .unwrap();
    }
    Ok(Outcome {
        stdout: text,
        code: EXIT_OK,
    })
}
