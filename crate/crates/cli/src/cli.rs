//! Argument parsing and subcommand dispatch for the `linetw` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use linetw_core::bramble::HITTING_SET_BUDGET;
use linetw_core::constructions::{construct, OrderingFlavour};
use linetw_core::decomp::validate;
use linetw_core::oracle::{exact_pathwidth_within, exact_treewidth_within, OracleResult, ORACLE_BUDGET};
use linetw_core::{complete_multipartite, line_graph, Graph, MultipartiteSpec};
use serde_json::json;

use crate::gr::{parse_gr, write_gr};
use crate::report::bramble_report;
use crate::sidecar::{write_edge_map, write_partition};
use crate::spec::parse_spec;
use crate::td::{parse_td, write_path_td};
use crate::verify::{default_flavour, regular_table, render_table, sweep, Budgets};
use crate::{CliError, ExitCode};

#[derive(Debug, Parser)]
#[command(
    name = "linetw",
    version,
    about = "Treewidth of line graphs of complete multipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write K_{n1,...,nk} as a .gr file.
    Gen(GenArgs),
    /// Write the line graph of a .gr file, with an edge-map sidecar.
    Linegraph(LinegraphArgs),
    /// Write the explicit path decomposition of L(K_{n1,...,nk}) as .td.
    Construct(ConstructArgs),
    /// Check a .td file against a graph.
    Validate(ValidateArgs),
    /// Exact treewidth and pathwidth of a small graph.
    Oracle(OracleArgs),
    /// Canonical line-bramble order as a JSON report.
    Bramble(BrambleArgs),
    /// Cross-check formula, construction, oracles and bramble order.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flavour {
    /// Complete graph bags; a single-number spec `n` means K_n.
    Kn,
    Red,
    Blue,
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Colour class sizes "n1,n2,...".
    #[arg(long)]
    spec: String,
    #[arg(long, value_enum)]
    flavour: Option<Flavour>,
}

impl SpecArgs {
    fn parse(&self) -> Result<MultipartiteSpec, CliError> {
        spec_from(&self.spec, self.flavour)
    }
}

fn spec_from(text: &str, flavour: Option<Flavour>) -> Result<MultipartiteSpec, CliError> {
    let spec = parse_spec(text, flavour == Some(Flavour::Kn))?;
    if flavour == Some(Flavour::Kn) && !spec.is_complete() {
        return Err(CliError::Usage(format!(
            "--flavour kn needs a complete graph, got spec {text:?}"
        )));
    }
    Ok(spec)
}

fn ordering_flavour(f: Option<Flavour>) -> Option<OrderingFlavour> {
    match f {
        Some(Flavour::Red) => Some(OrderingFlavour::Red),
        Some(Flavour::Blue) => Some(OrderingFlavour::Blue),
        _ => None,
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LinegraphArgs {
    /// Input .gr file.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Edge-map sidecar path; defaults to `<out>.map` when --out is given.
    #[arg(long)]
    map: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Partition sidecar path; defaults to `<out>.partition` when --out is given.
    #[arg(long)]
    partition: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    /// Decomposition to check.
    #[arg(long)]
    td: PathBuf,
    /// Graph as a .gr file.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    graph: Option<PathBuf>,
    /// Check against L(K_{n1,...,nk}) instead of a .gr file.
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, value_enum)]
    flavour: Option<Flavour>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Tw,
    Pw,
    Both,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Graph as a .gr file.
    #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
    graph: Option<PathBuf>,
    /// Use L(K_{n1,...,nk}).
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, value_enum)]
    flavour: Option<Flavour>,
    /// Largest vertex count to attempt.
    #[arg(long, default_value_t = ORACLE_BUDGET)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Which::Both)]
    width: Which,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct BrambleArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Distinguished vertex (1-indexed); defaults to the first vertex of a
    /// largest class.
    #[arg(long)]
    vertex: Option<usize>,
    /// Largest vertex count of G to search.
    #[arg(long, default_value_t = HITTING_SET_BUDGET)]
    budget: usize,
    /// Accepted for uniformity; the report is always JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Colour class sizes "n1,n2,...".
    #[arg(long, required_unless_present = "table")]
    spec: Option<String>,
    #[arg(long, value_enum)]
    flavour: Option<Flavour>,
    /// Sweep the regular specs K_{c,...,c} over --c and --k and print one
    /// table row per spec instead.
    #[arg(long, conflicts_with = "spec")]
    table: bool,
    /// Class sizes for --table, "lo..hi" or a single value.
    #[arg(long, default_value = "1..4")]
    c: String,
    /// Class counts for --table, "lo..hi" or a single value.
    #[arg(long, default_value = "2..7")]
    k: String,
    /// Oracle vertex budget; the hitting-set search keeps its own.
    #[arg(long, default_value_t = ORACLE_BUDGET)]
    budget: usize,
    #[arg(long)]
    json: bool,
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad range {text:?}: expected \"lo..hi\" or a number"));
    let (lo, hi) = text.split_once("..").unwrap_or((text, text));
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return ExitCode::Usage as i32;
            }
            let _ = write!(out, "{text}");
            return ExitCode::Ok as i32;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code as i32,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code() as i32
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: &mut dyn Write, target: Option<&Path>, text: &str) -> Result<(), CliError> {
    match target {
        Some(path) => write_file(path, text),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn say(out: &mut dyn Write, text: String) -> Result<(), CliError> {
    emit(out, None, &text)
}

fn spec_line_graph(spec: &MultipartiteSpec) -> Graph {
    line_graph(&complete_multipartite(spec)).0
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<ExitCode, CliError> {
    match command {
        Command::Gen(a) => {
            let g = complete_multipartite(&a.spec.parse()?);
            emit(out, a.out.as_deref(), &write_gr(&g))?;
            Ok(ExitCode::Ok)
        }
        Command::Linegraph(a) => {
            let g = parse_gr(&read(&a.graph)?)?;
            let (lg, map) = line_graph(&g);
            emit(out, a.out.as_deref(), &write_gr(&lg))?;
            if let Some(path) = a.map.or_else(|| a.out.as_deref().map(|o| with_suffix(o, ".map"))) {
                write_file(&path, &write_edge_map(&map))?;
            }
            Ok(ExitCode::Ok)
        }
        Command::Construct(a) => {
            let spec = a.spec.parse()?;
            let c = construct(
                &spec,
                ordering_flavour(a.spec.flavour).unwrap_or(default_flavour(&spec)),
            )?;
            emit(
                out,
                a.out.as_deref(),
                &write_path_td(&c.decomposition, spec.cross_pairs()),
            )?;
            let sidecar = a
                .partition
                .or_else(|| a.out.as_deref().map(|o| with_suffix(o, ".partition")));
            if let (Some(path), Some(p), Some(ord)) = (sidecar, &c.partition, &c.ordering) {
                write_file(&path, &write_partition(&spec, p, ord))?;
            }
            if let Some(path) = &a.out {
                let width = c.decomposition.width()?.value;
                say(
                    out,
                    format!(
                        "{}: {} bags, width {width}\n",
                        path.display(),
                        c.decomposition.bags().len()
                    ),
                )?;
            }
            Ok(ExitCode::Ok)
        }
        Command::Validate(a) => {
            let g = match (&a.graph, &a.spec) {
                (Some(path), _) => parse_gr(&read(path)?)?,
                (None, Some(text)) => spec_line_graph(&spec_from(text, a.flavour)?),
                (None, None) => unreachable!("clap requires one of --graph and --spec"),
            };
            let (td, n) = parse_td(&read(&a.td)?)?;
            if n != g.vertex_count() {
                return Err(CliError::Usage(format!(
                    "decomposition is for {n} vertices, graph has {}",
                    g.vertex_count()
                )));
            }
            let report = validate(&g, &td)?;
            let width = td.width().ok();
            if a.json {
                let body = json!({
                    "valid": report.is_valid(),
                    "vertex_coverage_ok": report.vertex_coverage_ok(),
                    "connectivity_ok": report.connectivity_ok(),
                    "edge_coverage_ok": report.edge_coverage_ok(),
                    "uncovered_vertex": report.uncovered_vertex.map(|x| x + 1),
                    "disconnected_vertex": report.disconnected_vertex.map(|x| x + 1),
                    "uncovered_edge": report.uncovered_edge.map(|e| [e.u + 1, e.v + 1]),
                    "width": width.map(|w| w.value),
                    "degenerate": width.map(|w| w.degenerate),
                });
                say(out, format!("{body}\n"))?;
            } else {
                let flag = |ok: bool, witness: Option<String>| match witness {
                    _ if ok => "ok".to_string(),
                    Some(w) => format!("FAILED {w}"),
                    None => "FAILED".to_string(),
                };
                let mut text = String::new();
                text += &format!(
                    "vertex coverage {}\n",
                    flag(
                        report.vertex_coverage_ok(),
                        report.uncovered_vertex.map(|x| format!("vertex {}", x + 1))
                    )
                );
                text += &format!(
                    "connectivity {}\n",
                    flag(
                        report.connectivity_ok(),
                        report.disconnected_vertex.map(|x| format!("vertex {}", x + 1))
                    )
                );
                text += &format!(
                    "edge coverage {}\n",
                    flag(
                        report.edge_coverage_ok(),
                        report.uncovered_edge.map(|e| format!("edge {} {}", e.u + 1, e.v + 1))
                    )
                );
                text += &format!("valid {}\n", if report.is_valid() { "yes" } else { "no" });
                match width {
                    Some(w) if w.degenerate => text += &format!("width {} (degenerate)\n", w.value),
                    Some(w) => text += &format!("width {}\n", w.value),
                    None => text += "width none\n",
                }
                say(out, text)?;
            }
            Ok(if report.is_valid() {
                ExitCode::Ok
            } else {
                ExitCode::Mismatch
            })
        }
        Command::Oracle(a) => {
            let g = match (&a.graph, &a.spec) {
                (Some(path), _) => parse_gr(&read(path)?)?,
                (None, Some(text)) => spec_line_graph(&spec_from(text, a.flavour)?),
                (None, None) => unreachable!("clap requires one of --graph and --spec"),
            };
            let tw = match a.width {
                Which::Tw | Which::Both => Some(exact_treewidth_within(&g, a.budget)?),
                Which::Pw => None,
            };
            let pw = match a.width {
                Which::Pw | Which::Both => Some(exact_pathwidth_within(&g, a.budget)?),
                Which::Tw => None,
            };
            let one_indexed = |r: &OracleResult| r.witness.iter().map(|x| x + 1).collect::<Vec<_>>();
            if a.json {
                let entry =
                    |r: &Option<OracleResult>| r.as_ref().map(|r| json!({"value": r.value, "witness": one_indexed(r)}));
                let body = json!({"vertices": g.vertex_count(), "tw": entry(&tw), "pw": entry(&pw)});
                say(out, format!("{body}\n"))?;
            } else {
                let join = |r: &OracleResult| {
                    one_indexed(r)
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let mut text = String::new();
                if let Some(r) = &tw {
                    text += &format!("tw {}\nwitness {}\n", r.value, join(r));
                }
                if let Some(r) = &pw {
                    text += &format!("pw {}\nlayout {}\n", r.value, join(r));
                }
                say(out, text)?;
            }
            Ok(ExitCode::Ok)
        }
        Command::Bramble(a) => {
            let spec = a.spec.parse()?;
            let v = match a.vertex {
                Some(0) => return Err(CliError::Usage("vertices are 1-indexed".into())),
                Some(v) if v > spec.n() => return Err(CliError::Usage(format!("vertex {v} out of range"))),
                v => v.map(|v| v - 1),
            };
            let report = bramble_report(&spec, v, a.budget)?;
            say(
                out,
                format!("{}\n", serde_json::to_string(&report).expect("report serializes")),
            )?;
            Ok(ExitCode::Ok)
        }
        Command::Verify(a) => {
            let budgets = Budgets {
                oracle: a.budget,
                ..Budgets::default()
            };
            if a.table {
                let (cs, ks) = (parse_range(&a.c)?, parse_range(&a.k)?);
                if *cs.start() == 0 || *ks.start() < 2 {
                    return Err(CliError::Usage("--table needs c >= 1 and k >= 2".into()));
                }
                let table = regular_table(cs, ks, budgets)?;
                if a.json {
                    say(
                        out,
                        format!("{}\n", serde_json::to_string(&table).expect("table serializes")),
                    )?;
                } else {
                    say(out, render_table(&table))?;
                }
                return Ok(if table.iter().all(|r| r.passed()) {
                    ExitCode::Ok
                } else {
                    ExitCode::Mismatch
                });
            }
            let text = a.spec.as_deref().expect("clap requires --spec without --table");
            let spec = spec_from(text, a.flavour)?;
            let s = sweep(&spec, ordering_flavour(a.flavour), budgets)?;
            if a.json {
                say(
                    out,
                    format!("{}\n", serde_json::to_string(&s).expect("sweep serializes")),
                )?;
            } else {
                say(out, s.render())?;
            }
            Ok(if s.passed() { ExitCode::Ok } else { ExitCode::Mismatch })
        }
    }
}
