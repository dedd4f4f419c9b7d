//! `turan`: command-line front end for constructions, counting, bounds and
//! exhaustive verification.
//!
//! Exit codes: 0 on success, 1 when a verification or check fails, 2 on a
//! usage or parameter error (with a one-line diagnosis on stderr).

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use turan_core::construct::ConstructionParams;
use turan_core::count::{count_copies, count_copies_through, Count, PartSpec};
use turan_core::formulas::{bound, bound_terms, f_formula, g_formula_closed, g_formula_sum, h_formula, FormulaInputs, TheoremId};
use turan_core::invariants::{circumference, matching_number, InvariantProfile};
use turan_core::lemmas::{
    check_closure_order_independence, check_core_order_independence, check_lemma, check_saturation_fixed_points, default_specs,
    CheckReport, LemmaGrid, LemmaId,
};
use turan_core::reduction::{closure_with, disintegrate_with, saturate_circumference, saturate_matching, Order};
use turan_core::verify::{stream_graph6, verify_bounds, BoundSource, FamilyFilter, GraphSource, ParseMode, ScanOptions, DEFAULT_WITNESS_CAP};
use turan_core::{to_graph6, Error, Graph};

#[derive(Parser)]
#[command(name = "turan", version, about = "Count complete multipartite subgraphs and certify generalized Turán bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an extremal construction as graph6.
    Construct(ConstructArgs),
    /// Print the invariant profile of every input graph.
    Invariants(InputArgs),
    /// Count copies of K_R in every input graph.
    Count(CountArgs),
    /// Evaluate a closed-form count.
    Formula(FormulaArgs),
    /// Evaluate the upper bound of a statement.
    Bound(BoundArgs),
    /// Reduce every input graph to its (t+1)-core.
    Core(CoreArgs),
    /// Replace every input graph by its degree-sum closure.
    Closure(ClosureArgs),
    /// Saturate every input graph with respect to a parameter.
    Saturate(SaturateArgs),
    /// Certify a bound by scanning a family of graphs.
    Verify(VerifyArgs),
    /// Run the lemma and reduction property checks.
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnError {
    Skip,
    Abort,
}

impl From<OnError> for ParseMode {
    fn from(e: OnError) -> Self {
        match e {
            OnError::Skip => ParseMode::Skip,
            OnError::Abort => ParseMode::Abort,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// graph6 input file, `-` for standard input.
    #[arg(long = "graph6", value_name = "PATH", default_value = "-")]
    graph6: String,
    /// What to do with a malformed line.
    #[arg(long, value_enum, default_value_t = OnError::Abort)]
    on_error: OnError,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    G,
    F,
    H,
    Krs,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    /// Part sizes, e.g. `2,1,1`.
    #[arg(long)]
    spec: PartSpec,
    /// Only count copies through this vertex.
    #[arg(long)]
    through: Option<usize>,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    GSum,
    GClosed,
    F,
    H,
}

#[derive(Args)]
struct FormulaArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    spec: PartSpec,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long)]
    n: usize,
    /// The structural parameter: c, p or the matching number.
    #[arg(long, visible_aliases = ["c", "p", "alpha"])]
    param: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long)]
    spec: PartSpec,
    /// Print both terms of the maximum as well.
    #[arg(long)]
    terms: bool,
}

#[derive(Args)]
struct CoreArgs {
    #[arg(long)]
    t: usize,
    /// Break deletion ties at random from this seed instead of lowest index first.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct ClosureArgs {
    #[arg(long)]
    threshold: usize,
    /// Scan pairs in a random order from this seed instead of lexicographically.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parameter {
    Circumference,
    Matching,
}

#[derive(Args)]
struct SaturateArgs {
    #[arg(long, value_enum)]
    by: Parameter,
    /// Required parameter value; defaults to each graph's own value.
    #[arg(long)]
    value: Option<usize>,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement whose bound is certified. Without it, `--bound` is required.
    #[arg(long)]
    theorem: Option<TheoremId>,
    /// An explicit bound to certify instead of a statement's.
    #[arg(long, conflicts_with = "theorem")]
    bound: Option<Count>,
    #[arg(long)]
    n: usize,
    /// The statement's structural parameter: c, p or the matching number.
    #[arg(long, visible_aliases = ["c", "p", "alpha"])]
    param: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Template part sizes; repeat to scan once for several templates.
    #[arg(long, required = true)]
    spec: Vec<PartSpec>,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    biconnected: bool,
    #[arg(long)]
    nonhamiltonian: bool,
    #[arg(long)]
    nontraceable: bool,
    #[arg(long)]
    circumference: Option<usize>,
    #[arg(long)]
    detour: Option<usize>,
    #[arg(long)]
    matching: Option<usize>,
    #[arg(long)]
    min_degree: Option<usize>,
    /// Scan graph6 input (file or `-`) instead of every labeled graph.
    #[arg(long = "graph6", value_name = "PATH")]
    graph6: Option<String>,
    #[arg(long, value_enum, default_value_t = OnError::Abort)]
    on_error: OnError,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    witness_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Property {
    CoreOrder,
    ClosureOrder,
    Saturation,
}

#[derive(Args)]
struct CheckArgs {
    /// Lemma to check (L6, L7, L11, L12, L13, L15, L16); repeatable.
    #[arg(long)]
    lemma: Vec<LemmaId>,
    /// Reduction property to check; repeatable.
    #[arg(long, value_enum)]
    property: Vec<Property>,
    /// Run every lemma and property check.
    #[arg(long)]
    all: bool,
    /// Largest order for the exhaustive checks.
    #[arg(long, default_value_t = 6)]
    max_order: usize,
    /// Largest order for the saturation check.
    #[arg(long, default_value_t = 7)]
    saturation_order: usize,
    #[arg(long, default_value_t = 6)]
    max_t: usize,
    #[arg(long, default_value_t = 9)]
    max_param: usize,
    #[arg(long, default_value_t = 12)]
    max_block_order: usize,
    #[arg(long, default_value_t = 8)]
    max_summand: usize,
    /// Template for the counting lemmas; repeatable. Defaults to a fixed set.
    #[arg(long)]
    spec: Vec<PartSpec>,
    /// Random orders per graph in the order-independence checks.
    #[arg(long, default_value_t = 20)]
    rounds: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Why a run did not succeed.
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

fn read_graphs(input: &InputArgs) -> Result<Vec<Graph>, Failure> {
    read_graph_source(&input.graph6, input.on_error)
}

fn read_graph_source(path: &str, on_error: OnError) -> Result<Vec<Graph>, Failure> {
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(File::open(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?))
    };
    let mut graphs = Vec::new();
    let summary = stream_graph6(reader, on_error.into(), |g| graphs.push(g))?;
    for w in summary.warnings {
        eprintln!("turan: skipped {w}");
    }
    Ok(graphs)
}

fn emit_graphs(out: &mut impl Write, graphs: impl IntoIterator<Item = Graph>) -> io::Result<()> {
    for g in graphs {
        writeln!(out, "{}", to_graph6(&g))?;
    }
    Ok(())
}

fn order_from(seed: Option<u64>) -> Order {
    seed.map_or(Order::Lexicographic, Order::Seeded)
}

fn run_construct(a: ConstructArgs, out: &mut impl Write) -> Outcome {
    let params = match a.family {
        Family::G => ConstructionParams::G { n: require(a.n, "n", "g")?, c: require(a.c, "c", "g")?, k: require(a.k, "k", "g")? },
        Family::F => ConstructionParams::F { n: require(a.n, "n", "f")?, c: require(a.c, "c", "f")? },
        Family::H => ConstructionParams::H { n: require(a.n, "n", "h")?, p: require(a.p, "p", "h")? },
        Family::Krs => ConstructionParams::KrsStar { r: require(a.r, "r", "krs")?, s: require(a.s, "s", "krs")? },
    };
    writeln!(out, "{}", to_graph6(&params.build()?))?;
    Ok(())
}

fn run_invariants(a: InputArgs, out: &mut impl Write) -> Outcome {
    for g in read_graphs(&a)? {
        let fields = InvariantProfile::of(&g).fields();
        match a.format {
            Format::Text => {
                let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
            Format::Kv => {
                writeln!(out, "graph6={}", to_graph6(&g))?;
                for (k, v) in fields {
                    writeln!(out, "{k}={v}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

fn run_count(a: CountArgs, out: &mut impl Write) -> Outcome {
    for g in read_graphs(&a.input)? {
        let n = match a.through {
            Some(v) => count_copies_through(&g, &a.spec, v)?,
            None => count_copies(&g, &a.spec),
        };
        writeln!(out, "{n}")?;
    }
    Ok(())
}

fn run_formula(a: FormulaArgs, out: &mut impl Write) -> Outcome {
    let value = match a.which {
        Which::GSum => g_formula_sum(a.n, require(a.c, "c", "g-sum")?, require(a.k, "k", "g-sum")?, &a.spec)?,
        Which::GClosed => g_formula_closed(a.n, require(a.c, "c", "g-closed")?, require(a.k, "k", "g-closed")?, &a.spec)?,
        Which::F => f_formula(a.n, require(a.c, "c", "f")?, &a.spec)?,
        Which::H => h_formula(a.n, require(a.p, "p", "h")?, &a.spec)?,
    };
    writeln!(out, "{value}")?;
    Ok(())
}

fn run_bound(a: BoundArgs, out: &mut impl Write) -> Outcome {
    let inputs = FormulaInputs::new(a.n, a.param, a.k, a.spec);
    if a.terms {
        let (first, second) = bound_terms(a.theorem, &inputs)?;
        writeln!(out, "{}", first.clone().max(second.clone()))?;
        writeln!(out, "{first}")?;
        writeln!(out, "{second}")?;
    } else {
        writeln!(out, "{}", bound(a.theorem, &inputs)?)?;
    }
    Ok(())
}

fn run_core(a: CoreArgs, out: &mut impl Write) -> Outcome {
    let order = order_from(a.seed);
    let cores: Vec<Graph> = read_graphs(&a.input)?.iter().map(|g| disintegrate_with(g, a.t, order).core).collect();
    emit_graphs(out, cores)?;
    Ok(())
}

fn run_closure(a: ClosureArgs, out: &mut impl Write) -> Outcome {
    let order = order_from(a.seed);
    let closed: Vec<Graph> = read_graphs(&a.input)?.iter().map(|g| closure_with(g, a.threshold, order)).collect();
    emit_graphs(out, closed)?;
    Ok(())
}

fn run_saturate(a: SaturateArgs, out: &mut impl Write) -> Outcome {
    for g in read_graphs(&a.input)? {
        let s = match a.by {
            Parameter::Circumference => saturate_circumference(&g, a.value.unwrap_or_else(|| circumference(&g)))?,
            Parameter::Matching => saturate_matching(&g, a.value.unwrap_or_else(|| matching_number(&g)))?,
        };
        writeln!(out, "{}", to_graph6(&s))?;
    }
    Ok(())
}

fn run_verify(a: VerifyArgs, out: &mut impl Write) -> Outcome {
    let mut filter = match a.theorem {
        Some(t) => {
            let param = a.param.ok_or_else(|| Failure::Usage(format!("--theorem {t} needs --param")))?;
            FamilyFilter::for_theorem(t, a.n, param, a.k.unwrap_or(0))
        }
        None => FamilyFilter::new(a.n),
    };
    filter.require_connected |= a.connected;
    filter.require_biconnected |= a.biconnected;
    filter.require_nonhamiltonian |= a.nonhamiltonian;
    filter.require_nontraceable |= a.nontraceable;
    filter.circumference_eq = a.circumference.or(filter.circumference_eq);
    filter.detour_eq = a.detour.or(filter.detour_eq);
    filter.matching_eq = a.matching.or(filter.matching_eq);
    filter.min_degree_ge = a.min_degree.or(filter.min_degree_ge);

    let source = match (a.theorem, a.bound) {
        (Some(t), _) => BoundSource::Theorem(t),
        (None, Some(value)) => BoundSource::Explicit { label: format!("explicit bound {value}"), value },
        (None, None) => return Err(Failure::Usage("verify needs --theorem or --bound".into())),
    };
    let listed = a.graph6.as_deref().map(|p| read_graph_source(p, a.on_error)).transpose()?;
    let graphs = listed.as_deref().map_or(GraphSource::Labeled, GraphSource::Graphs);
    let opts = ScanOptions { jobs: a.jobs, witness_cap: a.witness_cap };
    let reports = verify_bounds(&filter, &a.spec, &source, graphs, opts)?;
    let mut all_pass = true;
    for (i, r) in reports.iter().enumerate() {
        all_pass &= r.pass;
        match a.format {
            Format::Text => write!(out, "{r}")?,
            Format::Kv => {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", r.to_kv())?;
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn write_check(out: &mut impl Write, r: &CheckReport, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{} {r}", if r.holds() { "PASS" } else { "FAIL" }),
        Format::Kv => {
            writeln!(out, "check={}", r.name)?;
            writeln!(out, "points_checked={}", r.points_checked)?;
            writeln!(out, "violations={}", r.violations)?;
            writeln!(out, "examples={}", r.examples.join(" | "))?;
            writeln!(out, "pass={}", r.holds())?;
            writeln!(out)
        }
    }
}

fn run_check(a: CheckArgs, out: &mut impl Write) -> Outcome {
    let (lemmas, properties) = if a.all {
        (LemmaId::ALL.to_vec(), vec![Property::CoreOrder, Property::ClosureOrder, Property::Saturation])
    } else {
        (a.lemma.clone(), a.property.clone())
    };
    if lemmas.is_empty() && properties.is_empty() {
        return Err(Failure::Usage("check needs --lemma, --property or --all".into()));
    }
    let grid = LemmaGrid {
        max_order: a.max_order,
        max_t: a.max_t,
        max_param: a.max_param,
        max_block_order: a.max_block_order,
        max_summand: a.max_summand,
        specs: if a.spec.is_empty() { default_specs() } else { a.spec.clone() },
    };
    let mut all_hold = true;
    for id in lemmas {
        let r = check_lemma(id, &grid)?;
        all_hold &= r.holds();
        write_check(out, &r, a.format)?;
    }
    for p in properties {
        let r = match p {
            Property::CoreOrder => check_core_order_independence(a.max_order, 3, a.rounds, a.seed)?,
            Property::ClosureOrder => check_closure_order_independence(a.max_order, a.rounds, a.seed)?,
            Property::Saturation => check_saturation_fixed_points(a.saturation_order)?,
        };
        all_hold &= r.holds();
        write_check(out, &r, a.format)?;
    }
    if all_hold {
        Ok(())
    } else {
        Err(Failure::Check)
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
            let first = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("turan: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Construct(a) => run_construct(a, &mut out),
        Command::Invariants(a) => run_invariants(a, &mut out),
        Command::Count(a) => run_count(a, &mut out),
        Command::Formula(a) => run_formula(a, &mut out),
        Command::Bound(a) => run_bound(a, &mut out),
        Command::Core(a) => run_core(a, &mut out),
        Command::Closure(a) => run_closure(a, &mut out),
        Command::Saturate(a) => run_saturate(a, &mut out),
        Command::Verify(a) => run_verify(a, &mut out),
        Command::Check(a) => run_check(a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Check), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("turan: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("turan: {e}");
            ExitCode::from(2)
        }
    }
}
