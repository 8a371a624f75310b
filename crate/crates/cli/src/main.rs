//! `cobweb`: generate cobweb posets, check and decide orderability of DAGs,
//! emit realizers and export graphs.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cobweb_poset::format::{self, GraphFormat};
use cobweb_poset::oracle::{order_dimension, Dimension, FinitePoset};
use cobweb_poset::{
    build_cobweb, decide_odag, is_acyclic, is_admissible, is_regular, topological_order, verify_realizer,
    Check, Digraph, Error, LevelSequence, OrderabilityVerdict, SearchMode, DEFAULT_SEARCH_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "cobweb",
    version,
    about = "Cobweb posets and two-chain realizers of orderable DAGs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a cobweb poset's Hasse digraph
    Gen(GenArgs),
    /// Report acyclicity, regularity and admissibility of a digraph
    Check(SourceArgs),
    /// Decide orderability and emit a two-chain realizer
    Realize(RealizeArgs),
    /// Compute the order dimension of a small poset by brute force
    Dim(DimArgs),
    /// Convert a digraph between formats
    Export(ExportArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Level-size sequence: `fib`, `const:K` or `list:a,b,c`
    #[arg(long, conflicts_with = "input")]
    seq: Option<String>,
    /// Highest level kept (inclusive)
    #[arg(long)]
    max_level: Option<usize>,
    /// Edge-list or JSON graph file; `-` reads standard input
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct GenArgs {
    /// Level-size sequence: `fib`, `const:K` or `list:a,b,c`
    #[arg(value_name = "SEQ", required_unless_present = "seq")]
    sequence: Option<String>,
    #[arg(long, conflicts_with = "sequence")]
    seq: Option<String>,
    #[arg(long)]
    max_level: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest number of topological orders examined
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    search_budget: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest dimension tried (at most 3)
    #[arg(long, default_value_t = 3)]
    max_k: usize,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
    Edgelist,
}

impl From<OutputFormat> for GraphFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => GraphFormat::Json,
            OutputFormat::Dot => GraphFormat::Dot,
            OutputFormat::Edgelist => GraphFormat::EdgeList,
        }
    }
}

/// A failure that ends the process with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_sequence_error() { 3 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn cobweb_graph(seq: &str, max_level: Option<usize>) -> Result<Digraph, Failure> {
    let seq: LevelSequence = seq.parse()?;
    let max_level = max_level.ok_or_else(|| usage("--seq requires --max-level"))?;
    Ok(build_cobweb(seq, max_level)?.hasse().clone())
}

impl SourceArgs {
    fn load(&self) -> Result<Digraph, Failure> {
        match (&self.seq, &self.input) {
            (Some(seq), _) => cobweb_graph(seq, self.max_level),
            (None, Some(path)) => {
                let text = if path == "-" {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                } else {
                    fs::read_to_string(path)?
                };
                Ok(format::parse_graph(&text)?)
            }
            (None, None) => Err(usage("one of --seq or --input is required")),
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) if path.as_os_str() != "-" => fs::write(path, text)?,
        _ => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run_gen(args: &GenArgs) -> Result<u8, Failure> {
    let seq = args
        .sequence
        .as_deref()
        .or(args.seq.as_deref())
        .expect("clap requires one");
    let g = cobweb_graph(seq, Some(args.max_level))?;
    emit(args.output.as_ref(), &format::write_graph(&g, args.format.into()))?;
    Ok(0)
}

fn run_check(args: &SourceArgs) -> Result<u8, Failure> {
    let g = args.load()?;
    if !is_acyclic(&g) {
        return Err(Error::CyclicInput.into());
    }
    let mut report = String::from("PASS acyclic\n");
    let mut all_pass = true;
    match is_regular(&g)? {
        Check::Pass => report.push_str("PASS regular\n"),
        Check::Fail((u, v)) => {
            all_pass = false;
            report.push_str(&format!(
                "FAIL regular: arc {u} -> {v} is bypassed by a longer path\n"
            ));
        }
    }
    let chain = topological_order(&g)?;
    match is_admissible(&chain, &g)? {
        Check::Pass => report.push_str("PASS admissible (canonical topological order)\n"),
        Check::Fail([a, b, c]) => {
            all_pass = false;
            report.push_str(&format!(
                "FAIL admissible (canonical topological order): inadmissible triple {a} ; {b} ; {c}\n"
            ));
        }
    }
    io::stdout().write_all(report.as_bytes())?;
    Ok(if all_pass { 0 } else { 1 })
}

fn run_realize(args: &RealizeArgs) -> Result<u8, Failure> {
    if args.search_budget == 0 {
        return Err(usage("--search-budget must be positive"));
    }
    let g = args.source.load()?;
    let verdict = decide_odag(&g, args.search_budget)?;
    let code = match &verdict {
        OrderabilityVerdict::Orderable { realizer, mode } => {
            emit(args.output.as_ref(), &format::write_realizer_json(realizer))?;
            let mode = match mode {
                SearchMode::Exhaustive => "exhaustive",
                SearchMode::Heuristic => "heuristic",
            };
            let verified = if verify_realizer(realizer).is_pass() {
                "PASS"
            } else {
                "FAIL"
            };
            eprintln!("Orderable ({mode} search); verify_realizer: {verified}");
            return Ok(0);
        }
        OrderabilityVerdict::NotRegular { .. } => 4,
        OrderabilityVerdict::NoAdmissibleChain => 5,
        OrderabilityVerdict::NonTransitiveConjugate { .. } => 6,
    };
    emit(args.output.as_ref(), &format::write_verdict_json(&verdict))?;
    match verdict {
        OrderabilityVerdict::NonTransitiveConjugate { .. } => {
            eprintln!("NonTransitiveConjugate (inconclusive: heuristic search)")
        }
        other => eprintln!("{}", other.kind()),
    }
    Ok(code)
}

fn run_dim(args: &DimArgs) -> Result<u8, Failure> {
    let g = args.source.load()?;
    let poset = FinitePoset::from_digraph(&g)?;
    match order_dimension(&poset, args.max_k)? {
        Dimension::Exactly(d) => println!("dimension: {d}"),
        Dimension::ExceedsMax => println!("dimension: > {}", args.max_k),
    }
    Ok(0)
}

fn run_export(args: &ExportArgs) -> Result<u8, Failure> {
    let g = args.source.load()?;
    emit(args.output.as_ref(), &format::write_graph(&g, args.format.into()))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Check(a) => run_check(a),
        Command::Realize(a) => run_realize(a),
        Command::Dim(a) => run_dim(a),
        Command::Export(a) => run_export(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
