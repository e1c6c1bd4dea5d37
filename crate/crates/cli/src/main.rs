//! `cfcolor`: build, verify and measure conflict-free edge colorings.
//!
//! Exit codes: 0 ok, 1 unsatisfied edges, 2 bad input or violated
//! precondition, 3 internal verification failure, 4 oracle budget exceeded.

mod source;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cfcolor::format::{parse_coloring, write_coloring, write_dot, write_edge_list, write_edge_set};
use cfcolor::general::scf_bound;
use cfcolor::generators;
use cfcolor::oracle::{exact_cf_index, exact_scf_index, OracleBudget, OracleOutcome};
use cfcolor::{
    bipartite_cf_coloring, coloring_from_f, cycle_cf_coloring, decide_tree_two,
    general_cf_coloring, greedy_vertex_coloring, tree_cf_index, verify_cf, BipartiteError,
    EdgeColoring, GeneralError, Graph,
};

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }

    fn soundness(msg: impl Into<String>) -> Self {
        CliError { code: 3, msg: msg.into() }
    }

    fn budget() -> Self {
        CliError {
            code: 4,
            msg: "oracle budget exceeded".into(),
        }
    }
}

impl From<BipartiteError> for CliError {
    fn from(e: BipartiteError) -> Self {
        match e {
            BipartiteError::ExtensionUnsatisfied(_) => CliError::soundness(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<GeneralError> for CliError {
    fn from(e: GeneralError) -> Self {
        match e {
            GeneralError::Bipartite(b) => b.into(),
            _ => CliError::input(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "cfcolor", version, about = "Conflict-free edge colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a conflict-free coloring and verify it.
    Color(ColorArgs),
    /// Check a coloring against a graph.
    Verify(VerifyArgs),
    /// Compute the conflict-free index of a tree.
    DecideTree(DecideTreeArgs),
    /// Exact indices by exhaustive search (small graphs).
    Oracle(OracleArgs),
    /// Tree indices for every labeled tree on N vertices, as CSV.
    SurveyTrees(SurveyArgs),
    /// Write a generated graph in edge-list format.
    Generate(GenerateArgs),
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct InputSource {
    /// Edge-list file.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Generator spec.
    #[arg(long = "gen", long_help = source::GENERATOR_HELP)]
    generator: Option<String>,
}

#[derive(Args)]
struct SeedArg {
    /// Seed for random generators.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Bipartite,
    General,
    Tree,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Coloring,
    Dot,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[command(flatten)]
    source: InputSource,
    #[command(flatten)]
    seed: SeedArg,
    /// Cycle length, for `--mode cycle`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "coloring")]
    format: OutputFormat,
    /// Write the coloring here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
}

#[derive(Args)]
struct DecideTreeArgs {
    #[command(flatten)]
    source: InputSource,
    #[command(flatten)]
    seed: SeedArg,
    /// Write the witness edge set here.
    #[arg(long)]
    f_out: Option<PathBuf>,
    /// Write the witness 2-coloring here.
    #[arg(long)]
    coloring_out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    source: InputSource,
    #[command(flatten)]
    seed: SeedArg,
    /// Largest color count tried; defaults to the edge count.
    #[arg(long)]
    k_max: Option<u32>,
    /// Search-node budget per index.
    #[arg(long, default_value_t = OracleBudget::DEFAULT_STATES)]
    budget: u64,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = OracleBudget::DEFAULT_STATES)]
    budget: u64,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long = "gen", long_help = source::GENERATOR_HELP)]
    generator: String,
    #[command(flatten)]
    seed: SeedArg,
}

fn load(src: &InputSource, seed: u64) -> Result<Graph, CliError> {
    match (&src.input, &src.generator) {
        (Some(path), None) => source::read_graph(path),
        (None, Some(spec)) => source::generate(spec, seed),
        _ => Err(CliError::input("give exactly one of --input or --gen")),
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_out(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_color(args: &ColorArgs) -> Result<(), CliError> {
    let (g, coloring, bound) = match args.mode {
        Mode::Cycle => {
            if args.source.input.is_some() || args.source.generator.is_some() {
                return Err(CliError::input("--mode cycle takes --n instead of a graph"));
            }
            let n = args.n.ok_or_else(|| CliError::input("--mode cycle needs --n"))?;
            let c = cycle_cf_coloring(n)?;
            let g = generators::cycle(n).map_err(|e| CliError::input(e.to_string()))?;
            (g, c, "=2".to_string())
        }
        mode => {
            if args.n.is_some() {
                return Err(CliError::input("--n only applies to --mode cycle"));
            }
            let g = load(&args.source, args.seed.seed)?;
            match mode {
                Mode::Bipartite => {
                    let c = bipartite_cf_coloring(&g)?;
                    (g, c, "<=3".to_string())
                }
                Mode::General => {
                    let k = greedy_vertex_coloring(&g).k();
                    let c = general_cf_coloring(&g)?;
                    (g, c, format!("<={} (k={k})", scf_bound(k) + 1))
                }
                Mode::Tree => {
                    let index = tree_cf_index(&g).map_err(|e| CliError::input(e.to_string()))?;
                    let c = match index {
                        1 => EdgeColoring::total(&[1]).unwrap(),
                        2 => {
                            let f = decide_tree_two(&g)
                                .map_err(|e| CliError::input(e.to_string()))?
                                .expect("index 2 has a witness");
                            coloring_from_f(&g, &f).map_err(|e| CliError::soundness(e.to_string()))?
                        }
                        _ => bipartite_cf_coloring(&g)?,
                    };
                    (g, c, format!("={index}"))
                }
                Mode::Cycle => unreachable!(),
            }
        }
    };
    let report = verify_cf(&g, &coloring).map_err(|e| CliError::soundness(e.to_string()))?;
    if !report.all_satisfied() || !coloring.is_total() {
        return Err(CliError::soundness(format!(
            "constructed coloring failed verification on edges {:?}",
            report.unsatisfied
        )));
    }
    let text = match args.format {
        OutputFormat::Coloring => write_coloring(&coloring),
        OutputFormat::Dot => write_dot(&g, &coloring),
    };
    emit(args.output.as_deref(), &text)?;
    eprintln!("colors={} bound{bound}", coloring.colors_used());
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let g = source::read_graph(&args.graph)?;
    let text = fs::read_to_string(&args.coloring)
        .map_err(|e| CliError::input(format!("{}: {e}", args.coloring.display())))?;
    let c = parse_coloring(&text).map_err(|e| CliError::input(format!("{}: {e}", args.coloring.display())))?;
    let report = verify_cf(&g, &c).map_err(|e| CliError::input(e.to_string()))?;
    if report.all_satisfied() {
        println!("ok: all {} edges satisfied", g.edge_count());
        Ok(true)
    } else {
        let ids: Vec<String> = report.unsatisfied.iter().map(usize::to_string).collect();
        println!("unsatisfied: {}", ids.join(" "));
        Ok(false)
    }
}

fn cmd_decide_tree(args: &DecideTreeArgs) -> Result<(), CliError> {
    let t = load(&args.source, args.seed.seed)?;
    let index = tree_cf_index(&t).map_err(|e| CliError::input(e.to_string()))?;
    println!("index={index}");
    if index == 2 {
        let f = decide_tree_two(&t)
            .map_err(|e| CliError::input(e.to_string()))?
            .expect("index 2 has a witness");
        let c = coloring_from_f(&t, &f).map_err(|e| CliError::soundness(e.to_string()))?;
        match &args.f_out {
            Some(p) => write_out(p, &write_edge_set(&f))?,
            None => print!("F: {}", write_edge_set(&f)),
        }
        if let Some(p) = &args.coloring_out {
            write_out(p, &write_coloring(&c))?;
        }
    }
    Ok(())
}

fn show(label: &str, outcome: &OracleOutcome, k_max: u32) -> Result<String, CliError> {
    match outcome {
        OracleOutcome::Exact { k, .. } => Ok(format!("{label}={k}")),
        OracleOutcome::AboveLimit => Ok(format!("{label}>{k_max}")),
        OracleOutcome::Exceeded => Err(CliError::budget()),
    }
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let g = load(&args.source, args.seed.seed)?;
    let budget = OracleBudget::new(args.budget).ok_or_else(|| CliError::input("--budget must be at least 1"))?;
    let k_max = args.k_max.unwrap_or(g.edge_count().max(1) as u32);
    let scf = exact_scf_index(&g, k_max, budget).map_err(|e| CliError::input(e.to_string()))?;
    let cf = exact_cf_index(&g, k_max, budget).map_err(|e| CliError::input(e.to_string()))?;
    let verdict = match (scf.value(), cf.value()) {
        (Some(s), Some(c)) if s <= c && c <= s + 1 => "ok",
        (Some(_), Some(_)) => "violated",
        _ => "unknown",
    };
    println!(
        "{} {} sandwich={verdict}",
        show("scf", &scf, k_max)?,
        show("cf", &cf, k_max)?
    );
    Ok(())
}

fn cmd_survey(args: &SurveyArgs) -> Result<(), CliError> {
    let trees = generators::all_labeled_trees(args.n).map_err(|e| CliError::input(e.to_string()))?;
    let budget = OracleBudget::new(args.budget).ok_or_else(|| CliError::input("--budget must be at least 1"))?;
    let mut out = BufWriter::new(io::stdout().lock());
    let written = writeln!(out, "tree,edges,index,agree");
    if stop_writing(written)? {
        return Ok(());
    }
    let (mut total, mut index3) = (0usize, 0usize);
    for (code, t) in trees {
        let index = tree_cf_index(&t).map_err(|e| CliError::input(e.to_string()))?;
        let exact = match exact_cf_index(&t, 3, budget).map_err(|e| CliError::input(e.to_string()))? {
            OracleOutcome::Exceeded => return Err(CliError::budget()),
            o => o.value(),
        };
        let id: Vec<String> = code.iter().map(usize::to_string).collect();
        let agree = exact == Some(index as u32);
        let written = writeln!(out, "{},{},{index},{agree}", id.join("-"), t.edge_count());
        if stop_writing(written)? {
            return Ok(());
        }
        total += 1;
        index3 += usize::from(index == 3);
    }
    if stop_writing(out.flush())? {
        return Ok(());
    }
    eprintln!("index-3 trees: {index3} of {total}");
    Ok(())
}

/// True when the reader went away; other write errors are reported.
fn stop_writing(r: io::Result<()>) -> Result<bool, CliError> {
    match r {
        Ok(()) => Ok(false),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(true),
        Err(e) => Err(CliError::input(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Color(a) => cmd_color(&a).map(|_| 0),
        Command::Verify(a) => cmd_verify(&a).map(|ok| if ok { 0 } else { 1 }),
        Command::DecideTree(a) => cmd_decide_tree(&a).map(|_| 0),
        Command::Oracle(a) => cmd_oracle(&a).map(|_| 0),
        Command::SurveyTrees(a) => cmd_survey(&a).map(|_| 0),
        Command::Generate(a) => {
            let g = source::generate(&a.generator, a.seed.seed)?;
            print!("{}", write_edge_list(&g));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
