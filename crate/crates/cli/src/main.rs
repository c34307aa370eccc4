use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mcf_cli::cache::Cache;
use mcf_cli::corpus::{self, CorpusArgs};
use mcf_cli::fusion::{EssentialMode, FusionArgs, SylowSource};
use mcf_cli::report::to_json;
use mcf_cli::{analyze, classify, fusion, rep, CliError, Options, Result};
use mcf_groupkernel::Caps;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "mcf", version, about = "Maximal-class p-groups, their fusion systems and SL2(p)-modules")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest group order scanned element by element.
    #[arg(long, global = true, default_value_t = Caps::default().max_scan)]
    max_scan: u128,
    /// Largest number of subgroups produced by a lattice enumeration.
    #[arg(long, global = true, default_value_t = Caps::default().max_subgroup_enum)]
    max_subgroup_enum: usize,
    /// Largest order tabulated as a multiplication table.
    #[arg(long, global = true, default_value_t = Caps::default().table)]
    max_table: usize,
    /// Write the JSON output to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Abort with exit code 2 on the first cap violation.
    #[arg(long, global = true)]
    strict: bool,
    /// Neither read nor write the on-disk cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Add `timing_ms` to analysis reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a p-group given as permutations or a PC presentation.
    Analyze {
        /// Group file, or `-` for stdin.
        file: String,
    },
    /// Essential subgroups, focal data and theorem dispatch for F_S(G).
    Fusion {
        file: String,
        #[arg(short, long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        sylow: SylowSource,
        #[arg(long, value_enum, default_value_t)]
        mode: EssentialMode,
    },
    /// Modules of SL2(p) over GF(p).
    #[command(subcommand)]
    Rep(RepCommand),
    /// Theorem dispatch, table lookups and the monomial family.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// The built-in corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum RepCommand {
    /// Decompose V_d ⊗ V_e.
    Tensor {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        e: usize,
        /// Include the projection matrices.
        #[arg(long)]
        projections: bool,
    },
    /// Decompose Λ²(V_d).
    Lambda2 {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        d: usize,
        #[arg(long)]
        projections: bool,
    },
    /// Decompose S²(V_d).
    S2 {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        d: usize,
        #[arg(long)]
        projections: bool,
    },
    /// The r-th transvectant of two forms such as `x4` and `2x^2y^2`.
    Transvect {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        r: usize,
        f: String,
        g: String,
    },
    /// Θ_{(p−3)/2}(x^{p−3} ⊗ y^{p−3}).
    Nonzero {
        #[arg(short)]
        p: u64,
    },
    /// Fixed points of the diagonal torus on V_e.
    Torus {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        e: usize,
    },
    /// Jordan blocks of a transvection on V_d, or on V_d ⊗ V_e.
    Jordan {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        e: Option<usize>,
    },
    /// The degree bound for faithful indecomposable modules.
    Feit {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        d: usize,
        /// The module is of L2(p) type.
        #[arg(long)]
        l2p: bool,
    },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Dispatch a fusion summary (JSON) to its theorem case.
    Case { file: String },
    /// Rows of Table 1 matching a group, `m` and μ-image.
    Table1 {
        #[arg(short)]
        p: u64,
        #[arg(short = 'y', long = "group")]
        y: String,
        #[arg(short)]
        m: u32,
        /// `none`, `square`, `pair:A,B` or `delta:K/L:I`.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Pearl constellations for a μ₁-image of Aut_F(S).
    Table21 {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        m: u32,
        /// `full`, `delta:I`, or a μ spec.
        #[arg(long)]
        image: String,
    },
    /// Rows of Table 3 for a group family.
    Table3 {
        #[arg(long)]
        family: String,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: Option<u64>,
    },
    /// The monomial family T₁/Z(M) and its certificate.
    Family {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        r: u64,
        #[arg(short, default_value_t = 1)]
        a: u32,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Run every check on the selected corpus entries.
    Run {
        /// Entry names or run ids (`name@p`); an empty list selects nothing.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        only: Option<Vec<String>>,
        /// Negative control: add a fake essential to every fusion run.
        #[arg(long)]
        inject_fake_essential: bool,
    },
    /// List the corpus entries.
    List,
}

fn read_input(file: &str) -> Result<String> {
    if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(file)?)
    }
}

fn emit<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<()> {
    let text = to_json(value)?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    let caps = Caps { max_scan: g.max_scan, max_subgroup_enum: g.max_subgroup_enum, table: g.max_table, ..Caps::default() };
    let cache = if g.no_cache { Cache::off() } else { Cache::from_env() };
    let opts = Options { caps, strict: g.strict, cache, timing: g.timing };
    let start = Instant::now();
    let timed = |mut r: mcf_cli::AnalysisReport| {
        if opts.timing {
            r.timing_ms = Some(start.elapsed().as_millis());
        }
        r
    };
    match cli.command {
        Command::Analyze { file } => emit(&timed(analyze::cmd_analyze(&read_input(&file)?, &opts)?), &g.json),
        Command::Fusion { file, p, sylow, mode } => {
            let args = FusionArgs { p, sylow, mode };
            emit(&timed(fusion::cmd_fusion(&read_input(&file)?, &args, &opts)?), &g.json)
        }
        Command::Rep(c) => {
            let v = match c {
                RepCommand::Tensor { p, d, e, projections } => rep::tensor(p, d, e, projections)?,
                RepCommand::Lambda2 { p, d, projections } => rep::square(p, d, true, projections)?,
                RepCommand::S2 { p, d, projections } => rep::square(p, d, false, projections)?,
                RepCommand::Transvect { p, r, f, g } => rep::transvect(p, r, &f, &g)?,
                RepCommand::Nonzero { p } => rep::nonzero(p)?,
                RepCommand::Torus { p, e } => rep::torus(p, e)?,
                RepCommand::Jordan { p, d, e } => serde_json::to_value(rep::jordan(p, d, e)?)?,
                RepCommand::Feit { p, d, l2p } => rep::feit(p, d, l2p)?,
            };
            emit(&v, &g.json)
        }
        Command::Classify(c) => match c {
            ClassifyCommand::Case { file } => emit(&classify::case(&read_input(&file)?)?, &g.json),
            ClassifyCommand::Table1 { p, y, m, mu } => emit(&classify::table1(p, &y, m, mu.as_deref())?, &g.json),
            ClassifyCommand::Table21 { p, m, image } => emit(&classify::table21(p, m, &image)?, &g.json),
            ClassifyCommand::Table3 { family, p, q } => emit(&classify::table3(&family, p, q)?, &g.json),
            ClassifyCommand::Family { p, r, a } => emit(&classify::family(p, r, a, &opts)?, &g.json),
        },
        Command::Corpus(CorpusCommand::List) => emit(&corpus::list(), &g.json),
        Command::Corpus(CorpusCommand::Run { only, inject_fake_essential }) => {
            let rep = corpus::run(&CorpusArgs { only, inject_fake_essential }, &opts)?;
            emit(&rep, &g.json)?;
            if rep.all_pass {
                Ok(())
            } else {
                Err(CliError::Property(format!("{} of {} checks failed", rep.failed, rep.passed + rep.failed)))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Exit code 2 is reserved for cap violations.
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mcf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
