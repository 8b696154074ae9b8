//! `pslab`: enumerate avoidance classes, print statistic distributions and
//! closed forms, exercise the bijections and run the verification suite.

mod commands;
mod config;

use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pslab::{PatternSet, StatKind};

use config::Config;

#[derive(Parser, Debug)]
#[command(
    name = "pslab",
    version,
    about = "Pattern avoidance in set partitions and the lb/ls/rb/rs statistics"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest n accepted for enumeration (default 14).
    #[arg(long, global = true)]
    limit: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the words of R_n, or of R_n(P) with --avoid.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-separated patterns in block form, e.g. "13/2,12/3".
        #[arg(long, value_parser = parse_patterns)]
        avoid: Option<PatternSet>,
        /// Print block forms instead of words.
        #[arg(long)]
        blocks: bool,
        /// Generate all of R_n and filter instead of pruning prefixes.
        #[arg(long)]
        no_prune: bool,
    },
    /// Joint distribution of lb, ls, rb, rs, or of one statistic with --stat.
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_patterns)]
        avoid: Option<PatternSet>,
        #[arg(long, value_parser = parse_stat)]
        stat: Option<StatKind>,
        #[arg(long)]
        no_prune: bool,
    },
    /// Evaluate a closed form at n.
    Formula {
        /// Formula id such as f.13_2, lb.12_3 or lb.123.facts.
        #[arg(long, required_unless_present = "list")]
        id: Option<String>,
        #[arg(long, required_unless_present = "list")]
        n: Option<usize>,
        /// Add the pattern 1/2/.../t to the formula's pattern set.
        #[arg(long)]
        t: Option<usize>,
        /// List the registered formula ids.
        #[arg(long)]
        list: bool,
    },
    /// Apply a bijection to a word, or verify it exhaustively at size n.
    Bijection {
        #[arg(long)]
        id: String,
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        word: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the verification suite up to max-n.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Only run checks whose id contains this text.
        #[arg(long)]
        filter: Option<String>,
    },
}

fn parse_patterns(s: &str) -> Result<PatternSet, String> {
    s.parse().map_err(|e: pslab::Error| e.to_string())
}

fn parse_stat(s: &str) -> Result<StatKind, String> {
    s.parse().map_err(|e: pslab::Error| e.to_string())
}

/// Settings shared by every command once flags and config are merged.
pub struct Settings {
    pub format: Format,
    pub jobs: usize,
    pub limit: usize,
}

pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// The verification suite found a failing check: exit code 1.
    Verification,
    /// Stdout was closed early, as by `| head`: exit quietly.
    Closed,
}

impl From<pslab::Error> for Failure {
    fn from(e: pslab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match Config::load(Path::new("pslab.toml")) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let settings = Settings {
        format: cli.global.format,
        jobs: cli
            .global
            .jobs
            .or(config.jobs)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1),
        limit: cli
            .global
            .limit
            .or(config.limit)
            .unwrap_or(pslab::rgf::DEFAULT_LIMIT),
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(settings.jobs)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = dispatch(cli.command, &settings, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) | (Err(Failure::Closed), _) => ExitCode::SUCCESS,
        (Err(Failure::Verification), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, s: &Settings, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            n,
            avoid,
            blocks,
            no_prune,
        } => commands::enumerate(s, out, n, avoid.as_ref(), blocks, !no_prune),
        Command::Distribution {
            n,
            avoid,
            stat,
            no_prune,
        } => commands::distribution(s, out, n, avoid.as_ref(), stat, !no_prune),
        Command::Formula { list: true, .. } => commands::list_formulas(s, out),
        Command::Formula { id, n, t, .. } => {
            let (id, n) = id.zip(n).expect("clap enforces --id and --n");
            commands::formula(s, out, &id, n, t)
        }
        Command::Bijection { id, word, n } => commands::bijection(s, out, &id, word.as_deref(), n),
        Command::Verify { max_n, filter } => commands::verify(s, out, max_n, filter.as_deref()),
    }
}
