use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qalg::cli::{self, AnyAlgebra, Options, Output};
use qalg::exactla::FieldSpec;
use qalg::tautilt::DEFAULT_CAP;

const FORMAT_HELP: &str = "\
Algebra files (.alg), one statement per line, `#` starts a comment:
  field Q | field GF(p)
  vertex 1 2 3
  arrow alpha1: 1 -> 2
  relation alpha1.alpha2 - 2 * beta.gamma
  zero-paths-of-length 3
  bound 3
Paths are written left to right (`a.b` is a followed by b); `e(v)` is the
trivial path at v. `bound N` must kill every path of length N.

Representation files (.rep):
  dim 1 2
  map alpha1 1x2: 1 0
Rows of a map are separated by `;`.

Exit status: 0 definite answer, 2 inconclusive or incomplete, 1 errors.";

#[derive(Parser)]
#[command(name = "qalg", version, about = "Exact computations with bound quiver algebras", after_help = FORMAT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Read every algebra over this field instead (Q or GF(p))
    #[arg(long, global = true, value_parser = parse_field)]
    field_override: Option<FieldSpec>,
    /// Seed for randomized checks; always recorded in reports
    #[arg(long, global = true, default_value_t = cli::DEFAULT_SEED)]
    seed: u64,
    /// Record wall-clock time in reports
    #[arg(long, global = true)]
    timing: bool,
    /// Write the main output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Presentation of the tensor product of two algebras
    Tensor {
        a: PathBuf,
        b: PathBuf,
        /// Also write a JSON report
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Certify τ-tilting infiniteness of A ⊗ B with a family of bricks
    Certify {
        a: PathBuf,
        b: PathBuf,
        /// Comma-separated nonzero parameters (default 1,2,3)
        #[arg(long, value_delimiter = ',')]
        lambdas: Option<Vec<String>>,
    },
    /// Enumerate support τ-tilting pairs by mutation
    Sttilt {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write the Hasse diagram in DOT format
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compare the support τ-tilting posets of two algebras
    PosetCompare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Brick, socle and τ-rigidity checks for one representation
    Module { algebra: PathBuf, rep: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    cli::parse_field(s).ok_or_else(|| format!("expected Q or GF(p) with p prime, got `{s}`"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path, field: Option<FieldSpec>) -> Result<AnyAlgebra> {
    let text = read(path)?;
    cli::parse_algebra(&text, field).with_context(|| format!("{}", path.display()))
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile_in(dir)?;
    tmp.1.write_all(contents.as_bytes())?;
    tmp.1.sync_all()?;
    fs::rename(&tmp.0, path).with_context(|| format!("cannot write {}", path.display()))
}

fn tempfile_in(dir: &Path) -> Result<(PathBuf, fs::File)> {
    for i in 0..1000u32 {
        let p = dir.join(format!(".qalg-{}-{i}.tmp", std::process::id()));
        if let Ok(f) = fs::OpenOptions::new().write(true).create_new(true).open(&p) {
            return Ok((p, f));
        }
    }
    anyhow::bail!("cannot create a temporary file in {}", dir.display())
}

fn emit(out: &Option<PathBuf>, contents: &str) -> Result<()> {
    match out {
        Some(p) => write_atomic(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn names(paths: &[&PathBuf]) -> Vec<String> {
    paths.iter().map(|p| p.display().to_string()).collect()
}

fn run(cli: Cli) -> Result<i32> {
    let c = &cli.common;
    let opts = Options { seed: c.seed, timing: c.timing };
    let f = c.field_override;
    let out: Output = match &cli.command {
        Command::Tensor { a, b, report } => {
            let out = cli::tensor(&load(a, f)?, &load(b, f)?, &names(&[a, b]), opts)?;
            emit(&c.out, out.artifact.as_deref().unwrap_or_default())?;
            if let Some(r) = report {
                write_atomic(r, &out.report)?;
            }
            if c.out.is_some() {
                println!("{}", out.summary);
            } else {
                eprintln!("{}", out.summary);
            }
            return Ok(out.status.exit_code());
        }
        Command::Certify { a, b, lambdas } => cli::certify(&load(a, f)?, &load(b, f)?, lambdas.as_deref(), &names(&[a, b]), opts)?,
        Command::Sttilt { file, cap, dot } => {
            let out = cli::sttilt(&load(file, f)?, *cap, &names(&[file]), opts)?;
            if let (Some(d), Some(text)) = (dot, &out.artifact) {
                write_atomic(d, text)?;
            }
            out
        }
        Command::PosetCompare { a, b, cap } => cli::poset_compare(&load(a, f)?, &load(b, f)?, *cap, &names(&[a, b]), opts)?,
        Command::Module { algebra, rep } => {
            let text = read(rep)?;
            cli::module(&load(algebra, f)?, &text, &names(&[algebra, rep]), opts).with_context(|| format!("{}", rep.display()))?
        }
    };
    emit(&c.out, &out.report)?;
    eprintln!("{}", out.summary);
    Ok(out.status.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
