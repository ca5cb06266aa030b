//! `elc`: command-line front end for edge-local complementation.
//!
//! Exit status: 0 success, 1 usage error, 2 parse or domain error,
//! 3 negative decision (not equivalent, singular).

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use elc_core::graphstate::check_local_hadamard;
use elc_core::interlace::{evenness_sufficient, interlace_poly_with, EvennessReason};
use elc_core::invariants::{delta_count_with, invariant_report_with, sigma_space, Enumeration, DEFAULT_SUBSET_CAP};
use elc_core::io::{self as gio, Format, JsonGraph};
use elc_core::orbit::{orbit, MoveKind, DEFAULT_ORBIT_CAP};
use elc_core::{equivalence, BitMatrix, BitVector, Error, Graph, GraphKind, VertexSet};
use serde::Serialize;
use serde_json::json;

const CAP_ENV: &str = "ELC_SUBSET_CAP";

#[derive(Parser, Debug)]
#[command(name = "elc", version, about = "Edge-local complementation toolkit")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = OutputMode::Human, global = true)]
    output: OutputMode,

    /// Input format; detected from the extension or content by default.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto, global = true)]
    input_format: InputFormat,

    /// Format for graphs printed in human mode.
    #[arg(long, value_enum, default_value_t = GraphFormat::Adj, global = true)]
    emit: GraphFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Human,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    G6,
    Adj,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Adj,
    G6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Elc,
    Lc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    Petersen,
    Clebsch,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Local complement at vertex I.
    Lc {
        graph: PathBuf,
        #[arg(short = 'v', long = "vertex", value_parser = parse_vertex)]
        vertex: usize,
    },
    /// Edge-local complement along edge {I,J}.
    Elc {
        graph: PathBuf,
        #[arg(short = 'e', long = "edge", value_parser = parse_edge)]
        edge: (usize, usize),
    },
    /// Decide edge-local equivalence (exit 3 if not equivalent).
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Also print an explicit sequence of edge moves.
        #[arg(long)]
        sequence: bool,
    },
    /// Nonsingular subsets, stabiliser dimension and class size.
    Count { graph: PathBuf },
    /// Full invariant report.
    Invariants { graph: PathBuf },
    /// Global interlace polynomial.
    Interlace {
        graph: PathBuf,
        /// Also evaluate at this integer.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
    },
    /// Inverse adjacency matrix reached by edge moves (exit 3 if singular).
    Invert { graph: PathBuf },
    /// Enumerate the orbit under edge-local or local complementation.
    Orbit {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Elc)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
        /// Print every member (graph6 in human mode).
        #[arg(long)]
        list: bool,
    },
    /// Compare the local Hadamard image of the graph state with H^A(Γ).
    GsCheck {
        graph: PathBuf,
        /// Vertex set, e.g. 1,2; empty string for the empty set.
        #[arg(long, value_parser = parse_vertex_list, allow_hyphen_values = true)]
        omega: VertexList,
    },
    /// Generate a named graph.
    Gen {
        #[arg(value_enum)]
        kind: Family,
        /// Number of vertices for path, cycle, complete and empty.
        n: Option<usize>,
    },
}

fn parse_vertex(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(0) => Err("vertices are numbered from 1".into()),
        Ok(v) => Ok(v - 1),
        Err(_) => Err(format!("'{s}' is not a vertex number")),
    }
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or_else(|| format!("expected I,J but got '{s}'"))?;
    Ok((parse_vertex(i)?, parse_vertex(j)?))
}

/// 0-based vertices parsed from `I,J,...`.
#[derive(Clone, Debug)]
struct VertexList(Vec<usize>);

fn parse_vertex_list(s: &str) -> Result<VertexList, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_vertex)
        .collect::<Result<_, _>>()
        .map(VertexList)
}

/// Library errors carry 0-based vertices; shift them for display.
fn describe(e: &Error) -> String {
    match *e {
        Error::VertexOutOfRange { vertex, n } => {
            format!("vertex {} out of range for a graph on {n} vertices", vertex + 1)
        }
        Error::NotAnEdge { i, j } => format!("{{{},{}}} is not an edge", i + 1, j + 1),
        Error::IllegalMove { step, i, j } => format!(
            "move {} on {{{},{}}} is not an edge of the current graph",
            step + 1,
            i + 1,
            j + 1
        ),
        Error::SymmetryViolation { i, j } => {
            format!("adjacency matrix is not symmetric at ({}, {})", i + 1, j + 1)
        }
        Error::DiagonalViolation { i } => {
            format!("adjacency matrix has a nonzero diagonal entry at {}", i + 1)
        }
        Error::TooLarge { n, cap } if n <= 63 => {
            format!("{n} vertices exceeds the limit of {cap} (raise it with {CAP_ENV})")
        }
        _ => e.to_string(),
    }
}

fn lib<T>(r: elc_core::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| anyhow!(describe(&e)))
}

/// Outcome of a successful run; errors become exit status 2.
enum Verdict {
    Yes,
    No(String),
}

struct Ctx {
    output: OutputMode,
    input_format: InputFormat,
    emit: GraphFormat,
}

impl Ctx {
    fn read_graph(&self, path: &Path) -> anyhow::Result<Graph> {
        let stdin = path.as_os_str() == "-";
        let text = if stdin {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        let format = match self.input_format {
            InputFormat::G6 => Format::Graph6,
            InputFormat::Adj => Format::AdjText,
            InputFormat::Json => Format::Json,
            InputFormat::Auto => (!stdin)
                .then(|| Format::from_extension(path))
                .flatten()
                .unwrap_or_else(|| Format::sniff(&text)),
        };
        let name = if stdin { "<stdin>".to_string() } else { path.display().to_string() };
        gio::parse(&text, format).map_err(|e| anyhow!("{name}: {}", describe(&e)))
    }

    fn graph_text(&self, g: &Graph) -> String {
        match self.emit {
            GraphFormat::Adj => gio::write_adjtext(g),
            GraphFormat::G6 => gio::write_graph6(g),
        }
    }

    fn json(&self, value: impl Serialize) -> anyhow::Result<()> {
        println!("{}", serde_json::to_string_pretty(&value)?);
        Ok(())
    }

    fn print_graph(&self, g: &Graph) -> anyhow::Result<()> {
        match self.output {
            OutputMode::Json => self.json(JsonGraph::from(g)),
            OutputMode::Human => {
                print!("{}", self.graph_text(g));
                Ok(())
            }
        }
    }
}

fn enumeration() -> anyhow::Result<Enumeration> {
    let cap = match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .with_context(|| format!("{CAP_ENV}={v} is not a number"))?,
        Err(_) => DEFAULT_SUBSET_CAP,
    };
    Ok(Enumeration::with_cap(cap).parallel())
}

fn check_vertex(g: &Graph, v: usize) -> anyhow::Result<()> {
    if v >= g.n() {
        bail!("{}", describe(&Error::VertexOutOfRange { vertex: v, n: g.n() }));
    }
    Ok(())
}

fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn pairs_one_based(pairs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
}

fn columns(m: &BitMatrix) -> Vec<String> {
    m.columns().iter().map(BitVector::to_string).collect()
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let ctx = Ctx {
        output: cli.output,
        input_format: cli.input_format,
        emit: cli.emit,
    };
    let human = ctx.output == OutputMode::Human;
    match cli.command {
        Command::Lc { graph, vertex } => {
            let g = ctx.read_graph(&graph)?;
            check_vertex(&g, vertex)?;
            ctx.print_graph(&lib(g.local_complement(vertex))?)?;
        }
        Command::Elc { graph, edge: (i, j) } => {
            let g = ctx.read_graph(&graph)?;
            check_vertex(&g, i)?;
            check_vertex(&g, j)?;
            ctx.print_graph(&lib(g.edge_local_complement(i, j))?)?;
        }
        Command::Equiv { first, second, sequence } => {
            let g = ctx.read_graph(&first)?;
            let h = ctx.read_graph(&second)?;
            if g.n() != h.n() {
                bail!("graphs have {} and {} vertices", g.n(), h.n());
            }
            let Some(a) = lib(equivalence::recognize_elc(&g, &h))? else {
                if human {
                    println!("not equivalent");
                } else {
                    ctx.json(json!({ "equivalent": false }))?;
                }
                return Ok(Verdict::No("graphs are not edge-locally equivalent".into()));
            };
            let seq = if sequence {
                Some(lib(equivalence::decompose_h(&g, &a))?)
            } else {
                None
            };
            if human {
                println!("equivalent A={a}");
                if let Some(seq) = &seq {
                    println!("sequence={}", if seq.is_empty() { "-".to_string() } else { seq.to_string() });
                }
            } else {
                let mut v = json!({ "equivalent": true, "support": one_based(&a) });
                if let Some(seq) = &seq {
                    v["sequence"] = json!(pairs_one_based(seq.pairs()));
                }
                ctx.json(v)?;
            }
        }
        Command::Count { graph } => {
            let g = ctx.read_graph(&graph)?;
            let delta = lib(delta_count_with(&g, &enumeration()?))?;
            let sigma = sigma_space(&g);
            let class = delta / sigma.size();
            if human {
                println!("delta={delta} sigma_dim={} class_size={class}", sigma.dim());
            } else {
                ctx.json(json!({ "delta": delta, "sigma_dim": sigma.dim(), "class_size": class }))?;
            }
        }
        Command::Invariants { graph } => {
            let g = ctx.read_graph(&graph)?;
            let r = invariant_report_with(&g, &enumeration()?);
            let evenness = match evenness_sufficient(&g) {
                Some(EvennessReason::Twins(..)) => "twins",
                Some(EvennessReason::OddDegreeEvenIntersections) => "odd-degree-even-intersections",
                None => "none",
            };
            let twins = pairs_one_based(&r.twin_pairs);
            if human {
                let opt = |v: Option<u128>| v.map_or("n/a".to_string(), |x| x.to_string());
                println!("n={}", r.n);
                println!("delta={}", opt(r.delta_count));
                println!("sigma_dim={}", r.sigma_dim);
                println!("sigma_basis={}", list_or_dash(&columns(&r.sigma_basis)));
                println!("class_size={}", opt(r.class_size));
                println!("rank_gamma_plus_i={}", r.rank_gamma_plus_i);
                println!("kernel_basis={}", list_or_dash(&columns(&r.kernel_basis)));
                let tw: Vec<String> = twins.iter().map(|[i, j]| format!("{{{i},{j}}}")).collect();
                println!("twins={}", list_or_dash(&tw));
                println!("orthogonal={}", r.orthogonal);
                println!("evenness={evenness}");
            } else {
                ctx.json(json!({
                    "n": r.n,
                    "delta_count": r.delta_count,
                    "sigma_dim": r.sigma_dim,
                    "sigma_basis": columns(&r.sigma_basis),
                    "class_size": r.class_size,
                    "rank_gamma_plus_i": r.rank_gamma_plus_i,
                    "kernel_basis": columns(&r.kernel_basis),
                    "twin_pairs": twins,
                    "orthogonal": r.orthogonal,
                    "evenness": evenness,
                }))?;
            }
        }
        Command::Interlace { graph, at } => {
            let g = ctx.read_graph(&graph)?;
            let q = lib(interlace_poly_with(&g, &enumeration()?))?;
            let value = at.map(|x| lib(q.evaluate(x as i128))).transpose()?;
            if human {
                println!("q = {q}");
                if let (Some(x), Some(v)) = (at, value) {
                    println!("q({x}) = {v}");
                }
            } else {
                let mut v = json!({ "basis": "monomial", "coeffs": q.coefficients() });
                if let (Some(x), Some(val)) = (at, value) {
                    v["at"] = json!(x);
                    v["value"] = json!(val);
                }
                ctx.json(v)?;
            }
        }
        Command::Invert { graph } => {
            let g = ctx.read_graph(&graph)?;
            let (seq, inv) = match equivalence::invert_via_elc(&g) {
                Err(Error::Singular) => {
                    if human {
                        println!("singular");
                    } else {
                        ctx.json(json!({ "invertible": false }))?;
                    }
                    return Ok(Verdict::No("adjacency matrix is singular".into()));
                }
                other => lib(other)?,
            };
            if human {
                println!("sequence={}", if seq.is_empty() { "-".to_string() } else { seq.to_string() });
                print!("{}", ctx.graph_text(&inv));
            } else {
                ctx.json(json!({
                    "invertible": true,
                    "sequence": pairs_one_based(seq.pairs()),
                    "inverse": JsonGraph::from(&inv),
                }))?;
            }
        }
        Command::Orbit { graph, mode, cap, list } => {
            let g = ctx.read_graph(&graph)?;
            let kind = match mode {
                Mode::Elc => MoveKind::Elc,
                Mode::Lc => MoveKind::Lc,
            };
            let o = lib(orbit(&g, kind, cap))?;
            if human {
                println!("mode={kind} size={}", o.len());
                if list {
                    for m in o.graphs() {
                        print!("{}", gio::write_graph6(m));
                    }
                }
            } else {
                let mut v = json!({ "mode": kind.to_string(), "size": o.len() });
                if list {
                    v["members"] = json!(o.graphs().map(JsonGraph::from).collect::<Vec<_>>());
                }
                ctx.json(v)?;
            }
        }
        Command::GsCheck { graph, omega } => {
            let g = ctx.read_graph(&graph)?;
            for &v in &omega.0 {
                check_vertex(&g, v)?;
            }
            let set = lib(VertexSet::from_indices(g.n(), omega.0))?;
            let c = lib(check_local_hadamard(&g, &set))?;
            let signs = c.observed_signed.as_ref().map(|(_, s)| one_based(&VertexSet::from_bits(s.clone())));
            if human {
                println!(
                    "in_domain={} holds={} holds_up_to_signs={}",
                    c.in_domain, c.holds, c.holds_up_to_signs
                );
                if let Some(p) = &c.predicted {
                    print!("predicted={}", gio::write_graph6(p));
                }
                if let Some((o, _)) = &c.observed_signed {
                    print!("observed={}", gio::write_graph6(o));
                    let s: Vec<String> = signs.iter().flatten().map(ToString::to_string).collect();
                    println!("sign_flips={{{}}}", s.join(","));
                }
            } else {
                ctx.json(json!({
                    "in_domain": c.in_domain,
                    "holds": c.holds,
                    "holds_up_to_signs": c.holds_up_to_signs,
                    "predicted": c.predicted.as_ref().map(JsonGraph::from),
                    "observed": c.observed_signed.as_ref().map(|(o, _)| JsonGraph::from(o)),
                    "sign_flips": signs,
                }))?;
            }
        }
        Command::Gen { kind, n } => {
            let need = |n: Option<usize>| n.ok_or_else(|| anyhow!("{kind:?} needs a vertex count"));
            let gk = match kind {
                Family::Path => GraphKind::Path(need(n)?),
                Family::Cycle => GraphKind::Cycle(need(n)?),
                Family::Complete => GraphKind::Complete(need(n)?),
                Family::Empty => GraphKind::Empty(need(n)?),
                Family::Petersen => GraphKind::Petersen,
                Family::Clebsch => GraphKind::Clebsch,
            };
            ctx.print_graph(&lib(Graph::generate(gk))?)?;
        }
    }
    Ok(Verdict::Yes)
}

fn list_or_dash(items: &[String]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        items.join(" ")
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("usage error");
            eprintln!("elc: {}", line.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No(msg)) => {
            eprintln!("elc: {msg}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("elc: {e:#}");
            ExitCode::from(2)
        }
    }
}
