use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invsegal::filtration::Variant;
use invsegal::index::Category;
use invsegal::segal::ConditionKind;

mod commands;
mod inputs;
mod report;

use commands::{Common, ConditionArgs, FiltrationArgs, GammaArgs, NerveArgs};
use report::SuiteResult;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input, unknown names, or inconsistent flags.
    Input(String),
    /// A bound beyond what the checks are sized for.
    Capability(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Capability(m) => write!(f, "bound too large: {m}"),
        }
    }
}

/// Exact checks of Segal-type conditions on nerves, invertible nerves and
/// Γ-diagrams of finite algebraic structures.
#[derive(Debug, Parser)]
#[command(name = "invsegal", version, after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON report here ("-" for standard output).
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    /// No human-readable output; the exit status still reports the verdict.
    #[arg(long, global = true)]
    quiet: bool,

    /// Record wall-clock times. Reports with timings are not reproducible.
    #[arg(long, global = true)]
    timings: bool,
}

const AFTER_HELP: &str = "Exit status: 0 if every check passes, 1 if a check fails, 2 on invalid input.\n\
Catalogs: monoids3, abelian3, groups3, curated, corpus, abelian-corpus, groups-corpus (all @v1).";

#[derive(Debug, Args)]
struct Source {
    /// A structure as JSON.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// A named catalog, e.g. monoids3@v1.
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,

    /// Only this catalog entry.
    #[arg(long, value_name = "NAME", requires = "catalog")]
    entry: Option<String>,
}

#[derive(Debug, Args)]
struct ConditionFlags {
    #[command(flatten)]
    source: Source,

    /// Check levels 2..=NMAX.
    #[arg(long, default_value_t = 3)]
    nmax: usize,

    /// Also require a single vertex.
    #[arg(long)]
    reduced: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Invertible,
    Bousfield,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Category laws for Δ, IΔ, Γ and pointed maps, and the IΔ generator closure.
    Laws {
        /// Largest rank (Γ is capped at 3).
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// Enumerate a hom-set.
    Hom {
        /// delta, idelta, gamma or gammaop.
        category: String,
        m: usize,
        n: usize,
        /// Include every morphism in the report.
        #[arg(long)]
        list: bool,
    },
    /// Build a nerve and audit its functoriality.
    Nerve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        /// The ordinary nerve even for groups and groupoids.
        #[arg(long)]
        simplicial: bool,
        /// The nerve of the free group on this many generators instead.
        #[arg(long, value_name = "N", conflicts_with_all = ["input", "catalog"])]
        free: Option<usize>,
        /// Word-length bound for --free.
        #[arg(long, default_value_t = 3)]
        wordbound: usize,
    },
    /// Strict Segal condition on nerves.
    Segal(ConditionFlags),
    /// Strict Bousfield-Segal condition on nerves.
    Bousfield {
        #[command(flatten)]
        flags: ConditionFlags,
        /// Pass when the verdict matches whether the input is a group.
        #[arg(long)]
        iff_group: bool,
    },
    /// The ξ condition on invertible nerves of groups and groupoids.
    Xi(ConditionFlags),
    /// The Γ-diagram t(A) of a commutative monoid: round trip, Bousfield group, restriction.
    Gamma {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        /// Strictness of t(A) and extraction back to A.
        #[arg(long)]
        roundtrip: bool,
        /// The Bousfield condition and the extracted inverses.
        #[arg(long)]
        bousfield: bool,
        /// Restriction along Δ → Γ against the nerve.
        #[arg(long)]
        restriction: bool,
    },
    /// Word-length filtrations of free nerves.
    Filtration {
        #[arg(long, value_enum, default_value_t = VariantArg::Invertible)]
        variant: VariantArg,
        /// Free generators (invertible variant only).
        #[arg(long, default_value_t = 1)]
        generators: usize,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
        #[arg(long, default_value_t = 4)]
        wordbound: usize,
        /// Only compare the attachment producing stage K+1.
        #[arg(long, value_name = "K")]
        attach: Option<usize>,
        /// Only list the elements of stage K.
        #[arg(long, value_name = "K", conflicts_with = "attach")]
        stage: Option<usize>,
    },
    /// Every catalog-level check.
    Sweep {
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        trunc: usize,
    },
}

fn run(cli: &Cli) -> Result<SuiteResult, CliError> {
    let common = Common { timings: cli.timings };
    let sources = |s: &Source| inputs::resolve(s.input.as_deref(), s.catalog.as_deref(), s.entry.as_deref());
    let condition = |kind, flags: &ConditionFlags, iff_group| {
        let args = ConditionArgs {
            kind,
            n_max: flags.nmax,
            reduced: flags.reduced,
            iff_group,
        };
        commands::condition(&sources(&flags.source)?, &args, &common)
    };
    match &cli.command {
        Command::Laws { nmax } => commands::laws(*nmax, &common),
        Command::Hom { category, m, n, list } => {
            let category: Category = category.parse().map_err(|e| CliError::Input(format!("{e}")))?;
            commands::hom(category, *m, *n, *list)
        }
        Command::Nerve {
            source,
            trunc,
            simplicial,
            free,
            wordbound,
        } => {
            let args = NerveArgs {
                truncation: *trunc,
                simplicial: *simplicial,
                free: *free,
                word_bound: *wordbound,
            };
            let inputs = if free.is_some() { Vec::new() } else { sources(source)? };
            commands::nerve_cmd(&inputs, args, &common)
        }
        Command::Segal(flags) => condition(ConditionKind::Segal, flags, false),
        Command::Bousfield { flags, iff_group } => condition(ConditionKind::Bousfield, flags, *iff_group),
        Command::Xi(flags) => condition(ConditionKind::Xi, flags, false),
        Command::Gamma {
            source,
            trunc,
            roundtrip,
            bousfield,
            restriction,
        } => {
            let all = !(*roundtrip || *bousfield || *restriction);
            let args = GammaArgs {
                truncation: *trunc,
                roundtrip: all || *roundtrip,
                bousfield: all || *bousfield,
                restriction: all || *restriction,
            };
            commands::gamma(&sources(source)?, args, &common)
        }
        Command::Filtration {
            variant,
            generators,
            trunc,
            wordbound,
            attach,
            stage,
        } => {
            let variant = match variant {
                VariantArg::Invertible => Variant::Invertible { generators: *generators },
                VariantArg::Bousfield => Variant::Bousfield,
            };
            let args = FiltrationArgs {
                variant,
                truncation: *trunc,
                word_bound: *wordbound,
                attach: *attach,
                stage: *stage,
            };
            commands::filtration(args, &common)
        }
        Command::Sweep { nmax, trunc } => commands::sweep(*nmax, *trunc, &common),
    }
}

fn emit(cli: &Cli, suite: &SuiteResult) -> std::io::Result<()> {
    let json_to_stdout = cli.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if let Some(path) = cli.json.as_deref().filter(|_| !json_to_stdout) {
        fs::write(path, suite.to_json())?;
    }
    let mut stdout = std::io::stdout().lock();
    if json_to_stdout {
        stdout.write_all(suite.to_json().as_bytes())?;
    } else if !cli.quiet {
        stdout.write_all(suite.to_text().as_bytes())?;
    }
    stdout.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(suite) => {
            if let Err(e) = emit(&cli, &suite) {
                eprintln!("invsegal: {e}");
                return ExitCode::from(2);
            }
            if suite.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("invsegal: {e}");
            ExitCode::from(2)
        }
    }
}
