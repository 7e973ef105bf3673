//! Command-line front end. `run` is what the `powergraph` binary calls.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::classify::{classify, ClassifyError, DiameterPrediction, Witness};
use crate::graphs::{complement, export_graph, star, ExportFormat, GraphError, GraphKind};
use crate::group::io::{parse_cay, parse_perm, write_cay};
use crate::group::{build_group, parse_group_expr, GroupError, GroupTable};
use crate::subgroups::sylow_profile;
use crate::verify::{build_catalog, search_phi, sweep, write_report, CatalogSpec, GroupAnalysis};

#[derive(Debug, Parser)]
#[command(name = "powergraph", version, about = "Power graphs of finite groups and the diameters of their complements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, order statistics, |M(G)|, |Cyc(G)| and Sylow profiles
    Info(SourceArgs),
    /// Export a graph (by default the star of the complement)
    Graph(GraphArgs),
    /// Measured diameter of the star of the complement, then its isolated set
    Diam(DiamArgs),
    /// Recognizers and predicted diameters with witnesses
    Classify(SourceArgs),
    /// Sweep the catalog and print one JSON line per record
    Verify(VerifyArgs),
    /// List catalog groups admitting a Φ witness
    SearchPhi(CatalogArgs),
    /// Write the Cayley table of a group in .cay format
    Make(MakeArgs),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct SourceArgs {
    /// Group expression, e.g. `product(quaternion:8,cyclic:3)`
    #[arg(long, group = "source")]
    pub group: Option<String>,
    /// Cayley table file
    #[arg(long, group = "source")]
    pub cay: Option<PathBuf>,
    /// Permutation generators file
    #[arg(long, group = "source")]
    pub perm: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Power,
    Enhanced,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Power => GraphKind::Power,
            KindArg::Enhanced => GraphKind::Enhanced,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dot,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value = "power")]
    pub kind: KindArg,
    /// Export the graph itself instead of the star of its complement
    #[arg(long, conflicts_with = "complement")]
    pub raw: bool,
    /// Export the full complement, isolated vertices included
    #[arg(long)]
    pub complement: bool,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiamArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value = "power")]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, default_value_t = 100)]
    pub max_order: usize,
    /// Extra group expressions appended to the catalog
    #[arg(long = "extra")]
    pub extra: Vec<String>,
    /// Use only the extra groups
    #[arg(long)]
    pub only_extra: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub catalog: CatalogArgs,
    /// Also write the JSON-lines report to this file
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MakeArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    TheoremViolation(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Group(GroupError::OrderCap { .. }) => 3,
            CliError::Group(_) => 2,
            CliError::Classify(_) => 3,
            CliError::Graph(GraphError::Empty) => 3,
            CliError::Graph(GraphError::Disconnected(..)) | CliError::TheoremViolation(_) => 4,
            CliError::Io { .. } => 5,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source }
}

fn load(source: &SourceArgs) -> Result<GroupTable, CliError> {
    if let Some(text) = &source.group {
        return Ok(build_group(&parse_group_expr(text)?)?);
    }
    if let Some(path) = &source.cay {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        return Ok(parse_cay(&text)?.with_name(path.display().to_string()));
    }
    let path = source.perm.as_ref().expect("clap enforces one source");
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    Ok(parse_perm(&text)?.with_name(path.display().to_string()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(io_err(p)),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn catalog_spec(args: &CatalogArgs) -> Result<CatalogSpec, CliError> {
    let extra = args.extra.iter().map(|e| parse_group_expr(e)).collect::<Result<Vec<_>, _>>()?;
    Ok(if args.only_extra {
        CatalogSpec::only_extra(extra)
    } else {
        CatalogSpec { max_order: args.max_order.max(4), ..CatalogSpec::default() }.with_extra(extra)
    })
}

fn describe_prediction(group: &GroupTable, p: &Result<DiameterPrediction, ClassifyError>) -> String {
    match p {
        Err(e) => format!("n/a ({e})"),
        Ok(p) => {
            let mut s = format!("predicted {} ({})", p.value, p.reason);
            match p.witness {
                Some(Witness::Psi(w)) => {
                    s += &format!(" witness {} (o={})", w.element, group.orders()[w.element.0]);
                }
                Some(Witness::Phi(w)) => {
                    s += &format!(
                        " witness {} (o={}), {} (o={})",
                        w.x,
                        group.orders()[w.x.0],
                        w.y,
                        group.orders()[w.y.0]
                    );
                }
                None => {}
            }
            s
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Info(src) => {
            let g = load(&src)?;
            let a = GroupAnalysis::new(&g);
            let mut s = format!("name: {}\norder: {}\norders:", g.name(), g.order());
            for (o, c) in g.order_multiset() {
                s += &format!(" {o}:{c}");
            }
            s += &format!("\nmaximal_cyclic: {}\ncyc: {}\n", a.family.len(), a.cyc.count_ones(..));
            for (p, _) in crate::factor::factorize(g.order() as u64).pairs() {
                let sp = sylow_profile(&g, *p).expect("p divides |G|");
                s += &format!(
                    "sylow {}: exponent={} unique={} cyclic={} generalized_quaternion={}\n",
                    sp.prime, sp.exponent, sp.unique, sp.cyclic, sp.generalized_quaternion
                );
            }
            emit(out, None, &s)?;
        }
        Command::Graph(args) => {
            let g = load(&args.source)?;
            let graph = GroupAnalysis::new(&g).graph(args.kind.into());
            let graph = if args.raw {
                graph
            } else if args.complement {
                complement(&graph)
            } else {
                star(&complement(&graph)).graph
            };
            let format = match args.format {
                FormatArg::Dot => ExportFormat::Dot,
                FormatArg::Edgelist => ExportFormat::EdgeList,
            };
            emit(out, args.out.as_deref(), &export_graph(&graph, format))?;
        }
        Command::Diam(args) => {
            let g = load(&args.source)?;
            let kind: GraphKind = args.kind.into();
            let s = star(&complement(&GroupAnalysis::new(&g).graph(kind)));
            if s.kept.is_empty() {
                return Err(ClassifyError::EdgelessComplement(kind).into());
            }
            let d = crate::graphs::diameter(&s.graph)?;
            let isolated: Vec<String> = s.isolated.iter().map(|v| v.to_string()).collect();
            emit(out, None, &format!("{d}\nisolated: {}\n", isolated.join(" ")))?;
        }
        Command::Classify(src) => {
            let g = load(&src)?;
            let c = classify(&g);
            let mut s = format!("elementary_abelian_2: {}\nnilpotent: {}\n", c.elementary_abelian_2, c.nilpotent);
            match c.psi {
                Some(w) => {
                    s += &format!(
                        "psi: true (prime={} beta={} element={} o={})\n",
                        w.prime,
                        w.beta,
                        w.element,
                        g.orders()[w.element.0]
                    )
                }
                None => s += "psi: false\n",
            }
            match c.phi {
                Some(w) => s += &format!("phi: true (x={} y={})\n", w.x, w.y),
                None => s += "phi: false\n",
            }
            s += &format!("q2m_times_odd_cyclic: {}\n", c.q2m_times_odd_cyclic);
            s += &format!("power: {}\n", describe_prediction(&g, &c.power));
            s += &format!("enhanced: {}\n", describe_prediction(&g, &c.enhanced));
            emit(out, None, &s)?;
        }
        Command::Verify(args) => {
            let catalog = build_catalog(&catalog_spec(&args.catalog)?)?;
            let report = sweep(&catalog);
            emit(out, None, &report.to_jsonl())?;
            if let Some(path) = &args.report {
                write_report(&report.records, path).map_err(io_err(path))?;
            }
            for v in &report.violations {
                let _ = writeln!(err, "FAIL {v}");
            }
            let _ = writeln!(
                err,
                "{} groups, {} records, {} mismatches, {} violations",
                catalog.len(),
                report.records.len(),
                report.mismatches(),
                report.violations.len()
            );
            if !report.success() {
                return Err(CliError::TheoremViolation(format!(
                    "{} group(s) violate the predictions",
                    report.violations.len()
                )));
            }
        }
        Command::SearchPhi(args) => {
            let catalog = build_catalog(&catalog_spec(&args)?)?;
            let hits = search_phi(&catalog);
            let mut s = String::new();
            for h in &hits {
                let g = &catalog.iter().find(|e| e.name == h.name).expect("hit from catalog").group;
                s += &format!(
                    "{} x={} (o={}) y={} (o={}) measured={}\n",
                    h.name,
                    h.witness.x,
                    g.orders()[h.witness.x.0],
                    h.witness.y,
                    g.orders()[h.witness.y.0],
                    h.measured.map_or("-".to_string(), |d| d.to_string())
                );
            }
            emit(out, None, &s)?;
            let _ = writeln!(err, "{} of {} groups admit a Phi witness", hits.len(), catalog.len());
            if hits.iter().any(|h| h.measured != Some(3)) {
                return Err(CliError::TheoremViolation("a Phi witness without diameter 3".into()));
            }
        }
        Command::Make(args) => {
            let g = build_group(&parse_group_expr(&args.group)?)?;
            emit(out, args.out.as_deref(), &write_cay(&g))?;
        }
    }
    Ok(0)
}

/// Parses `argv` (program name first), runs the command, and returns the exit status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
            } else {
                let _ = write!(out, "{}", e.render());
            }
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
