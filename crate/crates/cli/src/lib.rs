//! Command-line front end for `bisolve-core`: polynomial file formats, report
//! rendering and the scaling benchmark.

pub mod bench;
pub mod clock;
pub mod error;
pub mod input;
pub mod parse;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use bisolve_core::arith::{Integer, Rational};
use bisolve_core::bisolve::{solve_with_clock, Clock, NoClock, SolveConfig};
use bisolve_core::isolate::isolate_real_roots;
use bisolve_core::poly::{resultant, squarefree_part, BiPoly, Var};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use parse::parse_poly;

#[derive(Debug, Parser)]
#[command(name = "bisolve", version, about = "Certified real solutions of bivariate integer polynomial systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Isolate the real solutions of f = g = 0.
    Solve {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Read inputs as JSON monomial lists.
        #[arg(long)]
        json: bool,
        /// Include wall-clock phase times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Isolate the real roots of a univariate polynomial (in x or in y).
    Isolate {
        p: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        json: bool,
    },
    /// Print the resultant of f and g with respect to a variable.
    Resultant {
        f: PathBuf,
        g: PathBuf,
        /// Variable to eliminate.
        #[arg(long, value_enum)]
        var: VarArg,
        #[arg(long)]
        json: bool,
    },
    /// Solve random dense systems and write one CSV row per system.
    Bench {
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        /// Coefficient bitlengths, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "16")]
        tau: Vec<u32>,
        /// Systems per (n, tau) cell.
        #[arg(long, default_value_t = 3)]
        count: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Measure wall time per phase. Without it the time columns are zero.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        solve: SolveArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    /// Maximum number of refinement rounds.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_depth: u32,
    /// Initial refinement width as P/Q or an integer.
    #[arg(long, default_value = "1/65536", value_parser = parse_width)]
    pub target_width: Rational,
    /// Batch sign evaluations with multipoint evaluation.
    #[arg(long)]
    pub fast_eval: bool,
}

impl SolveArgs {
    pub fn config(&self) -> SolveConfig {
        SolveConfig {
            max_depth: self.max_depth,
            target_width: self.target_width.clone(),
            fast_eval: self.fast_eval,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VarArg {
    X,
    Y,
}

fn parse_width(s: &str) -> Result<Rational, String> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: Integer = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let q: Integer = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if q == Integer::from(0) {
        return Err("zero denominator".into());
    }
    let w = Rational::new(p, q);
    if w <= Rational::from_integer(0.into()) {
        return Err("target width must be positive".into());
    }
    Ok(w)
}

/// Exit status: all decided.
pub const EXIT_OK: i32 = 0;
/// Exit status: an error was reported.
pub const EXIT_ERROR: i32 = 1;
/// Exit status: some boxes are undecided.
pub const EXIT_UNDECIDED: i32 = 2;

/// Runs a command, writing its report to `out`. Returns the exit status on
/// success; errors map to [`EXIT_ERROR`] in the binary.
pub fn run<W: Write>(cli: &Cli, out: &mut W, clock: &dyn Clock) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match &cli.command {
        Command::Solve { f, g, solve, format, json, timings } => {
            let f = input::read_poly(f, *json)?;
            let g = input::read_poly(g, *json)?;
            let clock: &dyn Clock = if *timings { clock } else { &NoClock };
            let r = solve_with_clock(&f, &g, &solve.config(), clock)?;
            match format {
                Format::Json => {
                    let j = report::SolveReportJson::new(&f, &g, &r, *timings);
                    serde_json::to_writer_pretty(&mut *out, &j).map_err(|e| CliError::Io(e.to_string()))?;
                    writeln!(out).map_err(io)?;
                }
                Format::Text => out.write_all(report::solve_text(&f, &g, &r, *timings).as_bytes()).map_err(io)?,
            }
            Ok(if r.undecided.is_empty() { EXIT_OK } else { EXIT_UNDECIDED })
        }
        Command::Isolate { p, format, json } => {
            let p = input::read_poly(p, *json)?;
            let u = match (p.deg_x(), p.deg_y()) {
                (_, 0) => p.coeffs_in(Var::Y).swap_remove(0),
                (0, _) => p.coeffs_in(Var::X).swap_remove(0),
                _ => return Err(CliError::Input("isolate needs a polynomial in one variable".into())),
            };
            let sf = squarefree_part(&u)?;
            let roots = isolate_real_roots(&sf)?;
            match format {
                Format::Json => {
                    let j = report::IsolateReportJson {
                        format_version: report::FORMAT_VERSION,
                        input: p.to_string(),
                        squarefree_part: sf.to_string(),
                        roots: roots.iter().map(Into::into).collect(),
                    };
                    serde_json::to_writer_pretty(&mut *out, &j).map_err(|e| CliError::Io(e.to_string()))?;
                    writeln!(out).map_err(io)?;
                }
                Format::Text => out.write_all(report::isolate_text(&roots).as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Resultant { f, g, var, json } => {
            let f = input::read_poly(f, *json)?;
            let g = input::read_poly(g, *json)?;
            let v = match var {
                VarArg::X => Var::X,
                VarArg::Y => Var::Y,
            };
            let r = resultant(&f, &g, v)?;
            writeln!(out, "{}", BiPoly::from_uni(&r, v.other())).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Bench { n_min, n_max, tau, count, seed, out: path, timings, solve } => {
            let cfg = bench::BenchConfig {
                n_min: *n_min,
                n_max: *n_max,
                taus: tau.clone(),
                count: *count,
                seed: *seed,
                solve: solve.config(),
                timings: *timings,
            };
            let rows = bench::run_bench(&cfg, clock)?;
            match path {
                Some(p) => {
                    let file = std::fs::File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
                    bench::write_csv(&rows, std::io::BufWriter::new(file))?;
                }
                None => bench::write_csv(&rows, &mut *out)?,
            }
            Ok(if rows.iter().any(|r| r.undecided > 0) { EXIT_UNDECIDED } else { EXIT_OK })
        }
    }
}
