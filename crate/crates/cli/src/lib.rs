//! Command-line front end: evaluate closed forms, run the check suites and
//! manage the constant store.
//!
//! Exit codes: `0` success, `1` a check or operation failed, `2` usage
//! error.

pub mod record;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mahler_measure::formulas::evaluate;
use mahler_measure::oracle::{reduced_integral, MAX_REDUCED_TRANSFORMS};
use mahler_measure::special::{combination_value_with, ConstantStore};
use mahler_measure::{Error, Family, FamilySpec, Precision};

pub use record::OutputRecord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the constant store.
pub const STORE_ENV: &str = "MAHLER_STORE";

#[derive(Debug, Parser)]
#[command(name = "mahler", version, about = "Closed forms for Mahler measures of three polynomial families")]
pub struct Cli {
    /// Constant-store file; values computed once are reused across runs.
    #[arg(long, global = true, env = STORE_ENV)]
    pub store: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the closed form for one family member and its numerical value.
    Eval(EvalArgs),
    /// Run check suites; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// List or precompute the stored constants.
    Constants {
        #[command(subcommand)]
        action: ConstantsAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    I,
    Ii,
    Iii,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::I => Family::I,
            FamilyArg::Ii => Family::II,
            FamilyArg::Iii => Family::III,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Number of (1 − x)/(1 + x) factors.
    #[arg(long)]
    pub n: u32,
    /// Decimal digits of the numerical value.
    #[arg(long, default_value_t = 30)]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also compute m by quadrature of the reduced integrals.
    #[arg(long)]
    pub oracle: bool,
    /// Agreement tolerance for --oracle.
    #[arg(long, default_value_t = 1e-7)]
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Tables,
    Oracle,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 20)]
    pub max_n: u32,
    #[arg(long, default_value_t = 1e-7)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum ConstantsAction {
    /// Print every stored record.
    List,
    /// Compute the standard constants to the given precision.
    Warm {
        digits: u32,
        /// Largest odd b for which i𝓛_{3,b}(i,i) is stored.
        #[arg(long, default_value_t = 3)]
        l3_max: u32,
    },
}

/// Errors that end a command, tagged with the exit code they map to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OutOfRange(_) | Error::InvalidArgument(_) | Error::UnsupportedSpec(_) | Error::Divergent(_) => {
                EXIT_USAGE
            }
            Error::Store(_) | Error::Io(_) => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe (`mahler ... | head`) is not worth reporting
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure { code: EXIT_OK, message: String::new() };
        }
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

fn open_store(path: &Option<PathBuf>) -> Result<ConstantStore, Failure> {
    Ok(match path {
        Some(p) => ConstantStore::open(p)?,
        None => ConstantStore::in_memory(),
    })
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Eval(args) => eval(&args, &cli.store, out),
        Command::Verify(args) => verify_cmd(&args, out),
        Command::Constants { action } => constants(action, &cli.store, out),
    }
}

/// Builds the record for `mahler eval`.
pub fn eval_record(args: &EvalArgs, store: &ConstantStore) -> Result<OutputRecord, Failure> {
    let family: Family = args.family.into();
    let spec = FamilySpec::new(family, args.n).map_err(|_| Failure {
        code: EXIT_USAGE,
        message: format!("n >= {} required for family {family}", family.min_transforms()),
    })?;
    let precision = Precision::new(args.digits)?;
    let result = evaluate(spec)?;
    let value = combination_value_with(&result.combination, precision, store)?;
    let mut record = OutputRecord::new(&result, value.to_decimal(args.digits), args.digits);
    if args.oracle {
        if spec.n_transforms() > MAX_REDUCED_TRANSFORMS {
            return Err(Failure {
                code: EXIT_USAGE,
                message: format!("--oracle supports n <= {MAX_REDUCED_TRANSFORMS}"),
            });
        }
        let numeric = reduced_integral(spec, Precision::new(12)?)?;
        let closed = result.measure(Precision::new(25)?)?.to_f64();
        record.oracle_value = Some(format!("{:.15e}", numeric.value));
        record.oracle_method = Some(numeric.method.to_string());
        record.agreement = Some((numeric.value - closed).abs() <= args.tolerance);
    }
    Ok(record)
}

fn eval(args: &EvalArgs, store: &Option<PathBuf>, out: &mut impl Write) -> Result<i32, Failure> {
    let store = open_store(store)?;
    let record = eval_record(args, &store)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?,
        Format::Text => {
            let result = record.to_result()?;
            writeln!(out, "{result} ≈ {}", record.numeric_value)?;
            if let (Some(v), Some(method), Some(ok)) = (&record.oracle_value, &record.oracle_method, record.agreement) {
                writeln!(out, "m ≈ {v} by {method}: {}", if ok { "agrees" } else { "DISAGREES" })?;
            }
        }
    }
    Ok(if record.agreement == Some(false) { EXIT_FAILURE } else { EXIT_OK })
}

fn verify_cmd(args: &VerifyArgs, out: &mut impl Write) -> Result<i32, Failure> {
    let mut outcomes = Vec::new();
    if matches!(args.suite, Suite::Identities | Suite::All) {
        outcomes.extend(verify::identities(args.max_n));
    }
    if matches!(args.suite, Suite::Tables | Suite::All) {
        outcomes.extend(verify::tables()?);
    }
    if matches!(args.suite, Suite::Oracle | Suite::All) {
        outcomes.extend(verify::oracle(args.max_n, args.tolerance, args.seed)?);
    }
    let failed: Vec<&verify::Outcome> = outcomes.iter().filter(|o| !o.passed).collect();
    match args.format {
        Format::Json => {
            let report = serde_json::json!({
                "checks": outcomes.len(),
                "passed": outcomes.len() - failed.len(),
                "failures": failed,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        }
        Format::Text => {
            for o in &outcomes {
                writeln!(out, "{} {}/{}: {}", if o.passed { "PASS" } else { "FAIL" }, o.suite, o.name, o.detail)?;
            }
            writeln!(out, "{} of {} checks passed", outcomes.len() - failed.len(), outcomes.len())?;
            if !failed.is_empty() {
                let names: Vec<String> = failed.iter().map(|o| format!("{}/{}", o.suite, o.name)).collect();
                writeln!(out, "failures: {}", serde_json::to_string(&names)?)?;
            }
        }
    }
    Ok(if failed.is_empty() { EXIT_OK } else { EXIT_FAILURE })
}

fn constants(action: ConstantsAction, store: &Option<PathBuf>, out: &mut impl Write) -> Result<i32, Failure> {
    let Some(path) = store else {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("constants needs a store: pass --store PATH or set {STORE_ENV}"),
        });
    };
    let store = ConstantStore::open(path)?;
    match action {
        ConstantsAction::List => {
            for record in store.records() {
                writeln!(out, "{record}")?;
            }
        }
        ConstantsAction::Warm { digits, l3_max } => {
            let added = store.warm(Precision::new(digits)?, l3_max)?;
            writeln!(out, "{added} constants added to {}", path.display())?;
        }
    }
    Ok(EXIT_OK)
}
