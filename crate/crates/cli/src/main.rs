mod commands;
mod error;
mod input;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::input::VecKind;

#[derive(Parser, Debug)]
#[command(
    name = "fcompare",
    version,
    about = "Exact face-number comparisons for simplicial polytopes"
)]
struct Cli {
    /// Run verifiers on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between f-, h- and g-vectors.
    Transform(TransformArgs),
    /// Face numbers of a cyclic, stacked or centrally symmetric stacked polytope.
    Family(FamilyArgs),
    /// Test a sequence predicate.
    Check(CheckArgs),
    /// Compare two polytopes given by g-vectors from index r on.
    Compare(CompareArgs),
    /// Guaranteed face-number intervals from a single f_r value.
    Bounds(BoundsArgs),
    /// Exhaustive verifiers.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VecSource {
    /// Inline JSON array or {"d", "f"|"h"|"g"} object.
    #[arg(long = "vec")]
    vec: Option<String>,
    /// File holding the same JSON.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(long)]
    d: Option<i64>,
    #[arg(long, value_enum)]
    from: VecKind,
    #[arg(long, value_enum)]
    to: VecKind,
    #[command(flatten)]
    source: VecSource,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Cyclic,
    Stacked,
    CsStacked,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    F,
    G,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    #[arg(long)]
    d: i64,
    /// Vertex count; for cs-stacked the polytope has 2n vertices.
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "f")]
    emit: Emit,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    #[value(name = "m-sequence")]
    MSequence,
    #[value(name = "M-sequence")]
    MacaulaySequence,
    Nonnegative,
    DehnSommerville,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(value_enum)]
    kind: CheckKind,
    #[arg(long)]
    d: Option<i64>,
    #[command(flatten)]
    source: VecSource,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    d: Option<i64>,
    #[arg(long, required_unless_present = "g1_file", conflicts_with = "g1_file")]
    g1: Option<String>,
    #[arg(long)]
    g1_file: Option<PathBuf>,
    #[arg(long, required_unless_present = "g2_file", conflicts_with = "g2_file")]
    g2: Option<String>,
    #[arg(long)]
    g2_file: Option<PathBuf>,
    #[arg(long)]
    r: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundsKind {
    Simplicial,
    Cs,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(value_enum)]
    kind: BoundsKind,
    #[arg(long)]
    d: i64,
    #[arg(long)]
    r: usize,
    /// Known value of f_r; any size.
    #[arg(long, allow_hyphen_values = true)]
    value: String,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Nonnegativity of the minors of M_d.
    Minors {
        #[arg(long)]
        d: i64,
        /// Largest order to scan, or `all`.
        #[arg(long, default_value = "all", conflicts_with = "only")]
        order: String,
        /// Scan only this order.
        #[arg(long)]
        only: Option<usize>,
    },
    /// Lattice-path determinant identity for all p, q, t, u <= max.
    Gv {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(0..))]
        max: i64,
    },
    /// The path-pair injection for every instance in dimension d.
    Phi {
        #[arg(long)]
        d: i64,
    },
    /// Ratio chain of columns r and s of M_d.
    RatioChain {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
}

/// What a subcommand prints and how the process exits.
pub struct Output {
    pub json: String,
    pub holds: bool,
}

fn run<I, T>(argv: I) -> (String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return (e.render().to_string(), 0);
        }
        Err(e) => {
            eprint!("{}", e.render());
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let message = first.strip_prefix("error: ").unwrap_or(first).to_owned();
            return (CliError::usage(message).to_json(), 2);
        }
    };
    match commands::dispatch(cli) {
        Ok(out) => (out.json, if out.holds { 0 } else { 1 }),
        Err(e) => {
            eprintln!("error: {}", e.message);
            (e.to_json(), 2)
        }
    }
}

fn main() -> ExitCode {
    let (text, code) = run(std::env::args_os());
    println!("{}", text.trim_end());
    ExitCode::from(code)
}
