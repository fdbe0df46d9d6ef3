//! `bnses` command-line front end.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 domain error
//! (bad literal, bad flag value, usage), 3 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::dataset::{self, Dataset};
use crate::decision;
use crate::error::{Error, ErrorCategory, Result};
use crate::number::{ordering_label, Bnn, Tolerance};

#[derive(Debug, Parser)]
#[command(
    name = "bnses",
    version,
    about = "Bipolar neutrosophic soft expert set toolkit"
)]
pub struct Cli {
    /// Absolute tolerance for equality, subset and comparison tests.
    #[arg(
        long,
        global = true,
        default_value_t = 1e-9,
        allow_negative_numbers = true
    )]
    pub tolerance: f64,

    /// Write results here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a dataset parses and validates.
    Validate(Input),
    /// Negate every parameter and swap truth with falsity.
    Complement(Input),
    Union(Pair),
    Intersect(Pair),
    /// Keep only agree records.
    Agree(Input),
    /// Keep only disagree records.
    Disagree(Input),
    /// Score of every stored value.
    Score(Input),
    /// Compare two inline values, e.g. "0.3,0.5,0.7,-0.2,-0.3,-0.4".
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Rank the universe by net score.
    Rank(Input),
}

#[derive(Debug, Args)]
pub struct Input {
    #[arg(required_unless_present = "input", conflicts_with = "input")]
    path: Option<PathBuf>,
    #[arg(long = "input", short = 'i')]
    input: Option<PathBuf>,
}

impl Input {
    fn path(&self) -> &Path {
        self.path
            .as_deref()
            .or(self.input.as_deref())
            .expect("clap enforces one input")
    }
}

#[derive(Debug, Args)]
pub struct Pair {
    first: PathBuf,
    second: PathBuf,
}

pub fn exit_code(category: ErrorCategory) -> u8 {
    match category {
        ErrorCategory::Parse | ErrorCategory::Validation => 1,
        ErrorCategory::Domain => 2,
        ErrorCategory::Io => 3,
    }
}

fn load(path: &Path) -> Result<Dataset> {
    let bytes = fs::read(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    dataset::parse(&bytes).map_err(|e| match e {
        Error::Io(_) => e,
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other.at(path.display().to_string()),
    })
}

fn literal(text: &str) -> Result<Bnn> {
    text.parse::<Bnn>().map_err(|e| match e {
        Error::OutOfRange { .. } => Error::Domain(format!("value {text:?}: {e}")),
        other => other,
    })
}

/// Runs one command, returning the bytes destined for the output.
pub fn execute(cli: &Cli) -> Result<Vec<u8>> {
    let tol = Tolerance::new(cli.tolerance)?;
    let out = match &cli.command {
        Command::Validate(input) => {
            load(input.path())?;
            Vec::new()
        }
        Command::Complement(input) => {
            let ds = load(input.path())?;
            dataset::serialize(&ds.with_set(ds.set().complement())?)
        }
        Command::Agree(input) => {
            let ds = load(input.path())?;
            dataset::serialize(&ds.with_set(ds.set().restrict_agree())?)
        }
        Command::Disagree(input) => {
            let ds = load(input.path())?;
            dataset::serialize(&ds.with_set(ds.set().restrict_disagree())?)
        }
        Command::Union(pair) => {
            let (a, b) = (load(&pair.first)?, load(&pair.second)?);
            dataset::serialize(&Dataset::merged(&a, &b, a.set().union(b.set()))?)
        }
        Command::Intersect(pair) => {
            let (a, b) = (load(&pair.first)?, load(&pair.second)?);
            dataset::serialize(&Dataset::merged(&a, &b, a.set().intersection(b.set()))?)
        }
        Command::Score(input) => dataset::export_scores(load(input.path())?.set()),
        Command::Compare { left, right } => {
            let ord = decision::compare_values(literal(left)?, literal(right)?, tol);
            format!("{}\n", ordering_label(ord)).into_bytes()
        }
        Command::Rank(input) => dataset::export_ranking(&decision::rank(&load(input.path())?)?),
    };
    Ok(out)
}

/// Parses `args`, executes, and reports on the given streams. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let first = e.to_string();
                    let line = first.lines().next().unwrap_or("usage error");
                    let _ = writeln!(stderr, "{line}");
                    2
                }
            };
        }
    };
    let result = execute(&cli).and_then(|bytes| {
        if bytes.is_empty() {
            return Ok(());
        }
        match &cli.output {
            Some(path) => fs::write(path, &bytes).map_err(|e| {
                Error::Io(std::io::Error::new(
                    e.kind(),
                    format!("{}: {e}", path.display()),
                ))
            }),
            None => stdout.write_all(&bytes).map_err(Error::Io),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let category = e.category();
            let _ = writeln!(stderr, "error ({category}): {e}");
            exit_code(category)
        }
    }
}
