mod output;

use std::fs::File;
use std::io::{self, BufReader};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use distspec::verify::{
    check_cut_order_bound, check_degree_r_reduction, check_edge_monotonicity, check_hub_equation,
    check_perron_order, check_quadratic_difference, check_transformation,
};
use distspec::{
    bridge_graph, enumerate_connected, extremal_search, extremal_search_all, graph6, graph_report,
    verify_all, with_threads, BridgeFamilyParams, Error, Graph, VerifyConfig,
};
use serde_json::Value;

use output::{combine, emit, render, to_value, Format};

#[derive(Parser)]
#[command(
    name = "distspec",
    version,
    about = "Distance spectral radius and edge connectivity of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radius, Perron vector and edge connectivity of each input graph.
    Compute(ComputeArgs),
    /// Minimum radius over connected graphs of order n and edge connectivity r.
    Search(SearchArgs),
    /// Check one structural claim on a single instance.
    Check(CheckArgs),
    /// Run every verification suite and write the full report as JSON.
    VerifyAll(VerifyAllArgs),
    /// Write all connected graphs of order n (up to isomorphism) in graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GraphSource {
    /// Graphs in graph6 format.
    graphs: Vec<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Inline edge list such as "0-1,1-2".
    #[arg(long)]
    edges: Option<String>,
    /// Order for --edges; defaults to one more than the largest vertex.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Edge connectivity; every r in 1..=n-2 when omitted.
    #[arg(long)]
    r: Option<usize>,
    /// graph6 corpus to scan instead of the built-in enumeration.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CheckArgs {
    #[command(subcommand)]
    claim: CheckCommand,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Adding a non-bridge edge strictly lowers the radius (toggles u-v).
    Edge {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Nested neighbourhoods order the Perron entries.
    Order {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Completing the graph around a degree-r vertex lowers the radius.
    Reduce {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        v: usize,
    },
    /// Two-clique minimum cuts have sides of order at least r + 2.
    Cut {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Two cliques joined by r bridge edges, t of them at the hub.
    Bridge {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        r: usize,
        /// Bridge edges at the hub; defaults to r.
        #[arg(long)]
        t: Option<usize>,
        /// Non-hub bridge edges as 1-based "i-j" pairs; drawn from --seed when omitted.
        #[arg(long)]
        cross: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest order for the exhaustive suites (3..=8).
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Full JSON report.
    #[arg(long, default_value = "verify-all.json")]
    out: PathBuf,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotConvergent { .. }
            | Error::DimensionMismatch { .. }
            | Error::NotUnit(_)
            | Error::NotPartition(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn parse_pairs(text: &str, what: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let parsed = pair
                .split_once('-')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            parsed.ok_or_else(|| {
                Failure::Usage(format!("{what}: cannot parse '{pair}', expected a-b"))
            })
        })
        .collect()
}

fn read_corpus_file(path: &Path) -> Result<Vec<Graph>, Failure> {
    let file = File::open(path).map_err(|e| io_failure(path, e))?;
    graph6::read_corpus(BufReader::new(file))
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

impl GraphSource {
    fn load(&self) -> Result<Vec<Graph>, Failure> {
        let mut graphs = Vec::new();
        for (i, text) in self.graphs.iter().enumerate() {
            let g = graph6::decode_str(text)
                .map_err(|e| Failure::Usage(format!("argument {}: {e}", i + 1)))?;
            graphs.push(g);
        }
        if let Some(path) = &self.input {
            graphs.extend(read_corpus_file(path)?);
        }
        if let Some(text) = &self.edges {
            let edges = parse_pairs(text, "--edges")?;
            let n = match self.n {
                Some(n) => n,
                None => edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1),
            };
            graphs.push(Graph::from_edge_list(n, &edges)?);
        } else if self.n.is_some() {
            return Err(Failure::Usage(
                "--n applies only together with --edges".into(),
            ));
        }
        if graphs.is_empty() {
            return Err(Failure::Usage(
                "no input graph: pass graph6 strings, --input or --edges".into(),
            ));
        }
        Ok(graphs)
    }

    fn load_one(&self) -> Result<Graph, Failure> {
        let mut graphs = self.load()?;
        if graphs.len() != 1 {
            return Err(Failure::Usage(format!(
                "expected exactly one graph, got {}",
                graphs.len()
            )));
        }
        Ok(graphs.remove(0))
    }
}

fn write_records(records: &[Value], out: &OutputArgs) -> Result<(), Failure> {
    let bytes = render(records, out.format).map_err(|e| Failure::Internal(e.to_string()))?;
    emit(&bytes, out.out.as_deref()).map_err(|e| Failure::Internal(format!("writing output: {e}")))
}

fn pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    with_threads(threads, f).map_err(|e| Failure::Internal(e.to_string()))
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), Failure> {
    let graphs = args.source.load()?;
    let mut records = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let rep = graph_report(g).map_err(|e| match Failure::from(e) {
            Failure::Usage(m) => Failure::Usage(format!("graph {}: {m}", i + 1)),
            other => other,
        })?;
        records.push(to_value(&rep));
    }
    write_records(&records, &args.output)
}

fn cmd_search(args: &SearchArgs) -> Result<(), Failure> {
    if let Some(r) = args.r {
        if r < 1 || r + 2 > args.n {
            return Err(Failure::Usage(format!(
                "--r must satisfy 1 <= r <= n - 2 (got n = {}, r = {r})",
                args.n
            )));
        }
    }
    let corpus = args.corpus.as_deref().map(read_corpus_file).transpose()?;
    let reports = pool(args.threads, || match args.r {
        Some(r) => extremal_search(args.n, r, corpus.as_deref()).map(|rep| vec![rep]),
        None => extremal_search_all(args.n, corpus.as_deref()),
    })??;
    let records: Vec<Value> = reports.iter().map(to_value).collect();
    write_records(&records, &args.output)?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|rep| !rep.confirms_kpq())
        .map(|rep| format!("n={} r={} minimizer {}", rep.n, rep.r, rep.minimizer_graph6))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "COUNTEREXAMPLE: the minimizer is not a unique K(n-1, r) for {}",
            bad.join("; ")
        )))
    }
}

fn cmd_check(args: &CheckArgs) -> Result<(), Failure> {
    let (record, holds) = match &args.claim {
        CheckCommand::Edge { source, u, v } => {
            let vd = check_edge_monotonicity(&source.load_one()?, *u, *v)?;
            (to_value(&vd), vd.holds)
        }
        CheckCommand::Order { source, u, v } => {
            let vd = check_perron_order(&source.load_one()?, *u, *v)?;
            (to_value(&vd), vd.holds)
        }
        CheckCommand::Reduce { source, v } => {
            let vd = check_degree_r_reduction(&source.load_one()?, *v)?;
            (to_value(&vd), vd.holds())
        }
        CheckCommand::Cut { source } => {
            let vd = check_cut_order_bound(&source.load_one()?)?;
            (to_value(&vd), vd.holds())
        }
        CheckCommand::Bridge {
            n1,
            n2,
            r,
            t,
            cross,
            seed,
        } => {
            let t = t.unwrap_or(*r);
            let params = match cross {
                Some(text) => {
                    BridgeFamilyParams::new(*n1, *n2, *r, t, parse_pairs(text, "--cross")?)?
                }
                None => BridgeFamilyParams::with_seeded_cross_edges(*n1, *n2, *r, t, *seed)?,
            };
            let transform = check_transformation(&params)?;
            let hub = check_hub_equation(&params)?;
            let cut = check_cut_order_bound(&bridge_graph(&params)?)?;
            let mut holds = transform.holds() && hub.holds() && cut.holds();
            let mut parts = vec![
                ("params", to_value(&params)),
                ("transformation", to_value(&transform)),
                ("hub_equation", to_value(&hub)),
                ("cut_order", to_value(&cut)),
            ];
            if t == *r {
                let quad = check_quadratic_difference(&params)?;
                holds &= quad.holds();
                parts.push(("quadratic_difference", to_value(&quad)));
            }
            (combine(parts), holds)
        }
    };
    write_records(&[record], &args.output)?;
    if holds {
        Ok(())
    } else {
        Err(Failure::Verification(
            "the checked claim does not hold on this instance".into(),
        ))
    }
}

fn cmd_verify_all(args: &VerifyAllArgs) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        seed: args.seed,
        max_n: args.max_n,
        inject_fault: args.inject_fault,
        ..VerifyConfig::default()
    };
    let report = pool(args.threads, || verify_all(&cfg))??;
    let json = distspec::report::to_json_pretty(&report) + "\n";
    emit(json.as_bytes(), Some(&args.out))
        .map_err(|e| Failure::Internal(format!("writing {}: {e}", args.out.display())))?;
    emit(report.summary_table().as_bytes(), None).map_err(|e| Failure::Internal(e.to_string()))?;
    if report.passed {
        return Ok(());
    }
    for s in report.suites.iter().filter(|s| !s.passed()) {
        for f in &s.first_failures {
            eprintln!("{}: {f}", s.name);
        }
    }
    Err(Failure::Verification(format!(
        "verification failed, full report in {}",
        args.out.display()
    )))
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<(), Failure> {
    let graphs = enumerate_connected(args.n)?;
    let mut text = String::new();
    for g in &graphs {
        text.push_str(&graph6::encode(g));
        text.push('\n');
    }
    emit(text.as_bytes(), args.out.as_deref())
        .map_err(|e| Failure::Internal(format!("writing output: {e}")))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("DSR_LOG", "warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Search(a) => cmd_search(a),
        Command::Check(a) => cmd_check(a),
        Command::VerifyAll(a) => cmd_verify_all(a),
        Command::Enumerate(a) => cmd_enumerate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("distspec: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
