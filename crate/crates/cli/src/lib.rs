//! `permclass` command-line interface.
//!
//! The binary is a thin wrapper around [`run`], which takes explicit streams
//! so the whole interface can be driven in-process from tests.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::panic::{self, AssertUnwindSafe};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use permclass::text::{InputKind, ParseOptions, DEFAULT_MAX_DENSE_ORDER};

mod commands;
pub mod verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "permclass",
    version,
    about = "Canonical forms, cycle decompositions and class counts for permutation matrices"
)]
pub struct Cli {
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Read inputs as one-line permutations (`n` followed by the images)
    #[arg(long, global = true, conflicts_with = "matrix")]
    pub perm: bool,

    /// Read inputs as dense 0-1 matrices
    #[arg(long, global = true)]
    pub matrix: bool,

    /// Largest dense matrix order accepted
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_DENSE_ORDER)]
    pub max_order: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form B and conjugator T with T⁻¹AT = B
    Canon(Input),
    /// Split A into disjoint cycle summands plus the fixed-point diagonal
    Decompose(Input),
    /// Factor A into commuting single-cycle permutations
    Factor(Input),
    /// Decide whether two permutations are similar and give a witness
    Similar {
        /// First input file, or `-` for standard input
        a: String,
        /// Second input file, or `-` for standard input
        b: String,
    },
    /// Partition numbers and their estimates
    Pcount(Pcount),
    /// Stream one canonical representative per similarity class
    Classes { n: u64 },
    /// Monomial matrices: split into P and diagonals, or canonicalize
    Monomial {
        #[arg(value_enum)]
        action: MonomialAction,
        /// Input file, or `-` for standard input
        input: String,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file, or `-` for standard input
    pub input: String,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").args(["exact", "hr", "small", "large", "table"])))]
pub struct Pcount {
    pub n: u64,
    /// Exact value (default)
    #[arg(long)]
    pub exact: bool,
    /// Hardy-Ramanujan asymptotic estimate
    #[arg(long)]
    pub hr: bool,
    /// Corrected estimate for 3 <= n <= 80
    #[arg(long)]
    pub small: bool,
    /// Corrected estimate for n >= 80
    #[arg(long)]
    pub large: bool,
    /// CSV table for 1..=n
    #[arg(long)]
    pub table: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MonomialAction {
    Split,
    Canon,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Verification(String),
    Io(io::Error),
}

impl From<permclass::Error> for CliError {
    fn from(e: permclass::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<verify::Failure> for CliError {
    fn from(f: verify::Failure) -> Self {
        CliError::Verification(f.0)
    }
}

impl Cli {
    pub(crate) fn parse_options(&self) -> ParseOptions {
        ParseOptions {
            kind: if self.perm {
                InputKind::Permutation
            } else if self.matrix {
                InputKind::Matrix
            } else {
                InputKind::Auto
            },
            max_dense_order: self.max_order,
        }
    }
}

/// Shared stdin: `-` may be named more than once, and later reads see the
/// same text.
pub(crate) struct Source<'a> {
    stdin: &'a mut dyn Read,
    cached: Option<String>,
}

impl Source<'_> {
    pub(crate) fn read(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            if self.cached.is_none() {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
                self.cached = Some(text);
            }
            return Ok(self.cached.clone().unwrap_or_default());
        }
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

/// Parses `args` (program name first), executes the command and returns the
/// process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut source = Source {
        stdin,
        cached: None,
    };
    let mut out = io::BufWriter::new(stdout);
    // library post-conditions are assertions; a tripped one is a defect
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        commands::execute(&cli, &mut source, &mut out)
    }));
    let result = match outcome {
        Ok(r) => r.and_then(|()| out.flush().map_err(CliError::Io)),
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal check failed".into());
            Err(CliError::Verification(message))
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Verification(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            EXIT_VERIFY
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}
