//! Command dispatch for the `janet` binary.
//!
//! [`run`] takes the argument vector and returns the rendered output and
//! exit status instead of touching the process, so it can be driven from
//! tests. Exit status is 0 on success, 1 when a verification finds a
//! failure witness, and 2 on usage or input errors.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::{janet_partition, Partition, SimplicialComplex};
use crate::decomposition::{janet_decompose, StanleyDecomposition, Target};
use crate::monomial::MonomialIdeal;
use crate::oracle::{self, VerificationReport};
use crate::text::{self, FaceStyle, InputDocument};

/// Witness lines printed before the rest are summarized.
const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "janet",
    version,
    about = "Janet's algorithm for Stanley decompositions and partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stanley decomposition of an ideal or of its complement
    Decompose(DecomposeArgs),
    /// Janet partition of a simplicial complex
    Partition(PartitionArgs),
    /// Check an engine's output against the brute-force oracle
    Verify(VerifyArgs),
    /// Summary of an input document
    Info(InputArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input document; standard input when omitted or `-`
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = TargetArg::Complement)]
    target: TargetArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Split on x1 first instead of xn
    #[arg(long)]
    reverse_vars: bool,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Report whether the upper endpoints are exactly the facets
    #[arg(long)]
    check_nice: bool,
    #[arg(long)]
    r_vector: bool,
    /// Split on vertex 1 first instead of vertex n
    #[arg(long)]
    reverse_vars: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Defaults to `complement` for ideals and `partition` for complexes
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Monomial degree bound; defaults to max generator degree + n + 1
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    reverse_vars: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Ideal,
    Complement,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Ideal => Target::Ideal,
            TargetArg::Complement => Target::Complement,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Ideal,
    Complement,
    Partition,
    Correspondence,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    /// Writes the streams and returns the exit status.
    pub fn emit(self) -> i32 {
        print!("{}", self.stdout);
        eprint!("{}", self.stderr);
        self.code
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::usage(message),
    }
}

fn read_input(args: &InputArgs) -> Result<InputDocument, String> {
    let text = match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            s
        }
    };
    let name = args
        .input
        .as_ref()
        .map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    text::parse_document(&text).map_err(|e| format!("{name}:{e}"))
}

fn expect_ideal(doc: InputDocument, command: &str) -> Result<MonomialIdeal, String> {
    match doc {
        InputDocument::Ideal(i) => Ok(i),
        InputDocument::Complex(..) => {
            Err(format!("`{command}` expects an ideal (`vars n`) document"))
        }
    }
}

fn expect_complex(
    doc: InputDocument,
    command: &str,
) -> Result<(SimplicialComplex, FaceStyle), String> {
    match doc {
        InputDocument::Complex(c, style) => Ok((c, style)),
        InputDocument::Ideal(_) => Err(format!(
            "`{command}` expects a complex (`vertices n`) document"
        )),
    }
}

/// Runs the engine, optionally on reversed variables, and reports the
/// result in the caller's labels.
fn decompose(ideal: &MonomialIdeal, target: Target, reverse: bool) -> StanleyDecomposition {
    if reverse {
        janet_decompose(&ideal.reversed(), target).reversed()
    } else {
        janet_decompose(ideal, target)
    }
}

fn partition(complex: &SimplicialComplex, reverse: bool) -> Result<Partition, String> {
    let p = if reverse {
        janet_partition(&complex.reversed()).map(|p| p.reversed())
    } else {
        janet_partition(complex)
    };
    p.map_err(|e| e.to_string())
}

fn dispatch(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Decompose(args) => {
            let ideal = expect_ideal(read_input(&args.input)?, "decompose")?;
            let d = decompose(&ideal, args.target.into(), args.reverse_vars);
            Ok(Outcome::ok(match args.format {
                Format::Text => text::render_decomposition(&d),
                Format::Json => text::decomposition_json(&d),
            }))
        }
        Command::Partition(args) => {
            let (complex, style) = expect_complex(read_input(&args.input)?, "partition")?;
            let p = partition(&complex, args.reverse_vars)?;
            Ok(Outcome::ok(match args.format {
                Format::Text => text::render_partition(&p, style, args.r_vector, args.check_nice),
                Format::Json => text::partition_json(&p),
            }))
        }
        Command::Verify(args) => verify(args),
        Command::Info(args) => Ok(Outcome::ok(info(&read_input(&args)?))),
    }
}

fn verify(args: VerifyArgs) -> Result<Outcome, String> {
    let doc = read_input(&args.input)?;
    let mode = args.mode.unwrap_or(match doc {
        InputDocument::Ideal(_) => Mode::Complement,
        InputDocument::Complex(..) => Mode::Partition,
    });
    let (label, report) = match mode {
        Mode::Ideal | Mode::Complement => {
            let ideal = expect_ideal(doc, "verify --mode ideal|complement")?;
            let target = if mode == Mode::Ideal {
                Target::Ideal
            } else {
                Target::Complement
            };
            let d = decompose(&ideal, target, args.reverse_vars);
            let bound = args
                .max_degree
                .unwrap_or_else(|| oracle::default_degree_bound(&ideal));
            let report = oracle::verify_cover_for(&ideal, &d, bound).map_err(|e| e.to_string())?;
            (target.as_str(), report)
        }
        Mode::Partition => {
            let (complex, _) = expect_complex(doc, "verify --mode partition")?;
            let p = partition(&complex, args.reverse_vars)?;
            ("partition", oracle::verify_partition(&complex, &p))
        }
        Mode::Correspondence => {
            let (complex, _) = expect_complex(doc, "verify --mode correspondence")?;
            let complex = if args.reverse_vars {
                complex.reversed()
            } else {
                complex
            };
            let ideal = complex.stanley_reisner().map_err(|e| e.to_string())?;
            let bound = args
                .max_degree
                .unwrap_or_else(|| oracle::default_degree_bound(&ideal));
            let report =
                oracle::verify_correspondence(&complex, bound).map_err(|e| e.to_string())?;
            ("correspondence", report)
        }
    };
    let stdout = render_report(label, &report);
    Ok(Outcome {
        code: if report.is_ok() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn render_report(label: &str, report: &VerificationReport) -> String {
    let mut out = format!(
        "mode: {label}\nchecked: {}\nfailures: {}\n",
        report.checked,
        report.failures.len()
    );
    for f in report.failures.iter().take(MAX_REPORTED_FAILURES) {
        out.push_str(&format!("  {f}\n"));
    }
    if report.failures.len() > MAX_REPORTED_FAILURES {
        out.push_str(&format!(
            "  ... {} more\n",
            report.failures.len() - MAX_REPORTED_FAILURES
        ));
    }
    out.push_str(if report.is_ok() { "ok\n" } else { "FAILED\n" });
    out
}

fn info(doc: &InputDocument) -> String {
    match doc {
        InputDocument::Ideal(i) => format!(
            "kind: ideal\narity: {}\ngenerators: {}\nsquarefree: {}\nmax degree: {}\n",
            i.arity(),
            i.generators().len(),
            i.is_squarefree(),
            i.max_generator_degree()
        ),
        InputDocument::Complex(c, _) => {
            let dim = c
                .dimension()
                .map_or_else(|| "void".to_string(), |d| d.to_string());
            format!(
                "kind: complex\nvertices: {}\nfacets: {}\ndimension: {dim}\nfaces: {}\n",
                c.vertex_count(),
                c.facets().len(),
                c.all_faces().len()
            )
        }
    }
}
