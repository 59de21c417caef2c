//! The `mnn` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
//! error, 3 a cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::classify::{ved_decomposition, MnnProfile};
use crate::corpus::{corpus_generate, CorpusId};
use crate::dsl::parse_expr;
use crate::error::Error;
use crate::group::{Caps, FiniteGroup};
use crate::harness::{run_suite, CheckId};
use crate::lattice::SubgroupLattice;
use crate::report::{analyze, MnnReport, VedReport};
use crate::series;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mnn",
    version,
    about = "Non-nilpotent subgroup structure of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, prime divisors, series, structural flags, m and the F(p,d) decomposition
    Analyze {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// The non-nilpotent subgroups and the Schmidt subgroups
    Mnn {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition of G/Z_inf(G) into F(p,d) factors
    Ved {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// List the subgroup lattice
    Subgroups {
        expr: String,
        /// Write a Graphviz Hasse diagram to this file
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Run the structural checks over a corpus
    Verify {
        #[arg(long, value_name = "ID")]
        corpus: String,
        /// Comma-separated check ids (default: all)
        #[arg(long, value_name = "LIST")]
        checks: Option<String>,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the syntax tree of an expression
    Parse { expr: String },
}

enum Failure {
    Usage(String),
    Cap(String),
    Internal(String),
    /// The output stream was closed by the reader.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            e if e.is_cap_exceeded() => Failure::Cap(e.to_string()),
            Error::OracleMismatch(m) => Failure::Internal(format!("oracle mismatch: {m}")),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        match e.kind() {
            std::io::ErrorKind::BrokenPipe => Failure::Closed,
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn build(expr: &str, caps: &Caps) -> Result<FiniteGroup, Failure> {
    let ast = parse_expr(expr).map_err(|e| Failure::Usage(e.render(expr)))?;
    Ok(ast.to_spec().build_with_cap(caps.elements)?)
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn execute(command: Command, caps: &Caps, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Analyze { expr, json } => {
            let g = build(&expr, caps)?;
            let report = analyze(&expr, &g, caps)?;
            if json {
                json_line(out, &report)?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::Mnn { expr, json } => {
            let g = build(&expr, caps)?;
            let lattice = SubgroupLattice::build_with_caps(&g, caps)?;
            let report = MnnReport::new(&g, &MnnProfile::compute(&g, &lattice));
            if json {
                json_line(out, &report)?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::Ved { expr, json } => {
            let g = build(&expr, caps)?;
            let report = VedReport::new(&ved_decomposition(&g)?);
            if json {
                json_line(out, &report)?;
            } else {
                write!(out, "{}", report.to_text())?;
            }
        }
        Command::Subgroups { expr, dot } => {
            let g = build(&expr, caps)?;
            let lattice = SubgroupLattice::build_with_caps(&g, caps)?;
            writeln!(
                out,
                "{} subgroups in {} conjugacy classes",
                lattice.len(),
                lattice.conjugacy_classes().len()
            )?;
            for (i, s) in lattice.subgroups().iter().enumerate() {
                let mut tags = Vec::new();
                if lattice.is_normal(i) {
                    tags.push("normal");
                }
                if lattice.is_maximal(i) {
                    tags.push("maximal");
                }
                if !series::subgroup_is_nilpotent(&g, s) {
                    tags.push("non-nilpotent");
                }
                let gens: Vec<String> = s
                    .generators()
                    .iter()
                    .map(|&e| g.element(e).to_string())
                    .collect();
                writeln!(
                    out,
                    "#{i:<4} order {:>4}  class {:>3}  <{}>  {}",
                    s.order(),
                    lattice.conjugacy_class_of(i),
                    gens.join(", "),
                    tags.join(" ")
                )?;
            }
            if let Some(path) = dot {
                std::fs::write(&path, lattice.to_dot(&g))?;
            }
        }
        Command::Verify {
            corpus,
            checks,
            jobs,
            json,
        } => {
            let id: CorpusId = corpus.parse()?;
            let checks = match checks {
                Some(list) => CheckId::parse_list(&list)?,
                None => CheckId::ALL.to_vec(),
            };
            let entries = corpus_generate(id, caps)?;
            let report = run_suite(&entries, &checks, jobs, *caps);
            if json {
                json_line(out, &report)?;
            } else {
                writeln!(out, "corpus {id}: {} groups", report.groups)?;
                write!(out, "{}", report.summary())?;
                writeln!(out, "wall time {:.2?}", report.wall_time)?;
            }
            if report.failed() {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Parse { expr } => {
            let ast = parse_expr(&expr).map_err(|e| Failure::Usage(e.render(&expr)))?;
            writeln!(out, "{ast}")?;
            write!(out, "{}", ast.tree())?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the command line with results on `out` and diagnostics on `err`,
/// returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let caps = Caps::from_env();
    match execute(cli.command, &caps, out) {
        Ok(code) => code,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Cap(m) => (EXIT_CAP, m),
                Failure::Internal(m) => (EXIT_CHECK_FAILED, m),
                Failure::Closed => return EXIT_OK,
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
