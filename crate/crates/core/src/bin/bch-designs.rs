use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bch_designs::app::{self, BlocksMode, CommandOutput, VerifyTarget, WeightsWhich};
use bch_designs::combinatorics::DEFAULT_BUDGET;
use bch_designs::{Error, FieldRecord};

#[derive(Parser)]
#[command(name = "bch-designs", version, about = "Block designs from unit-circle ESPs and the codes that support them")]
struct Cli {
    /// Subfield degree: q = 2^m.
    #[arg(long, global = true, default_value_t = 4)]
    m: u32,
    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true, env = "BCH_DESIGNS_THREADS")]
    threads: Option<usize>,
    /// Largest enumeration a command may start.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Where to write the command's artifact.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Field record file (`m=..,reduction_poly=0x..`) pinning the polynomial.
    #[arg(long, global = true)]
    field: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    FieldInfo,
    Blocks {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        t: Option<usize>,
    },
    Weights {
        #[arg(long, value_enum)]
        which: Which,
    },
    AmCheck {
        #[arg(long)]
        t: usize,
    },
    Nmds {
        #[arg(long, default_value_t = 100)]
        sample: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Classify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Brute,
    Constructive,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    B63,
    #[value(name = "b63-b0")]
    B63B0,
    #[value(name = "b63-b1")]
    B63B1,
    Steiner,
    CodeW5,
    CodeW6,
    DualMin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    DualTrace,
    DualFormula,
    PrimalMacwilliams,
    LowWeightScan,
}

fn run(cli: &Cli) -> bch_designs::Result<CommandOutput> {
    let record = match &cli.field {
        Some(path) => Some(std::fs::read_to_string(path)?.trim().parse::<FieldRecord>()?),
        None => None,
    };
    let field = app::make_field(cli.m, record.as_ref())?;
    let budget = cli.budget;
    if budget == 0 {
        return Err(Error::Precondition("budget must be positive".into()));
    }
    eprintln!("q = {}, running ...", field.q());
    match &cli.command {
        Command::FieldInfo => Ok(app::cmd_field_info(&field)),
        Command::Blocks { k, ell, mode } => {
            let mode = match mode {
                Mode::Brute => BlocksMode::Brute,
                Mode::Constructive => BlocksMode::Constructive,
                Mode::Both => BlocksMode::Both,
            };
            app::cmd_blocks(&field, *k, *ell, mode, budget)
        }
        Command::Verify { target, t } => {
            let target = match target {
                Target::B63 => VerifyTarget::B63,
                Target::B63B0 => VerifyTarget::B63B0,
                Target::B63B1 => VerifyTarget::B63B1,
                Target::Steiner => VerifyTarget::Steiner,
                Target::CodeW5 => VerifyTarget::CodeW5,
                Target::CodeW6 => VerifyTarget::CodeW6,
                Target::DualMin => VerifyTarget::DualMin,
            };
            app::cmd_verify(&field, target, *t, budget)
        }
        Command::Weights { which } => {
            let which = match which {
                Which::DualTrace => WeightsWhich::DualTrace,
                Which::DualFormula => WeightsWhich::DualFormula,
                Which::PrimalMacwilliams => WeightsWhich::PrimalMacwilliams,
                Which::LowWeightScan => WeightsWhich::LowWeightScan,
            };
            app::cmd_weights(&field, which, budget)
        }
        Command::AmCheck { t } => app::cmd_am_check(&field, *t, budget),
        Command::Nmds { sample, seed } => app::cmd_nmds(&field, *sample, *seed, budget),
        Command::Classify => app::cmd_classify(&field, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let output = match run(&cli) {
        Ok(o) => o,
        Err(e @ Error::BudgetExceeded { .. }) => {
            eprintln!("error: {e}; nothing was written, raise --budget to continue");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let (Some(path), Some(artifact)) = (&cli.out, &output.artifact) {
        if let Err(e) = std::fs::write(path, artifact) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
        eprintln!("wrote {}", path.display());
    }
    let r = &output.report;
    match cli.format {
        Format::Json => println!("{}", r.to_json()),
        Format::Csv => print!("{}", r.to_csv()),
        Format::Text => print!("{}", r.to_text()),
    }
    if r.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
