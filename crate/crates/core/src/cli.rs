//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure or failed law check, 2 parse or
//! validation error, 3 shape error, 64 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::format::{display, full};
use crate::identify::{column_min, fourier_identify, maxmin_decision};
use crate::io;
use crate::oracle::{check_proposition_laws, check_submatrix_order, LawReport};
use crate::signal::{dft, idft};

pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "cfsm", version, about = "Complex fuzzy soft matrices and reference-signal identification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Identify the candidate closest to a reference signal
    #[command(subcommand)]
    Identify(IdentifyCommand),
    /// Apply a matrix operation to CSV matrix files
    Matrix(MatrixArgs),
    /// Discrete Fourier transform of a sequence file
    Dft(DftArgs),
    /// Algebraic law checks
    #[command(subcommand)]
    Laws(LawsCommand),
}

#[derive(Debug, Subcommand)]
enum IdentifyCommand {
    /// Cross-product scoring of DFT sample expansions
    Fourier {
        /// Signal file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Write per-sample score series (TSV) to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Max-min decision over the usual product of two magnitude matrices
    Maxmin {
        /// Samples × signals matrix A (CSV)
        #[arg(long)]
        a: PathBuf,
        /// Samples × signals matrix B (CSV)
        #[arg(long)]
        b: PathBuf,
        /// Comma-separated signal labels, one per column
        #[arg(long)]
        labels: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixOp {
    /// Complex fuzzy sum (elementwise max)
    Add,
    /// Complex max-min product
    Maxmin,
    /// Complex trace
    Trace,
    /// Conjugate transpose
    Ctrans,
    /// Union
    Union,
    /// Intersection
    Inter,
    /// Complement
    Comp,
    /// And-product, m × n²
    And,
    /// Or-product, m × n²
    Or,
    /// AndNot-product, m × n²
    Andnot,
    /// OrNot-product, m × n²
    Ornot,
    /// Ordinary sum-of-products
    Usual,
}

impl MatrixOp {
    fn is_binary(self) -> bool {
        !matches!(self, MatrixOp::Trace | MatrixOp::Ctrans | MatrixOp::Comp)
    }
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(value_enum)]
    op: MatrixOp,
    /// Left operand (CSV)
    #[arg(long)]
    a: PathBuf,
    /// Right operand (CSV); required by binary operations
    #[arg(long)]
    b: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DftArgs {
    /// Sequence file: one `re` or `re,im` per line
    #[arg(long)]
    input: PathBuf,
    /// Apply the 1/N-scaled inverse transform instead
    #[arg(long)]
    inverse: bool,
}

#[derive(Debug, Subcommand)]
enum LawsCommand {
    /// Randomized check of the set-operation laws and the submatrix order
    Check {
        /// Random triples per law
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Matrix shape, ROWSxCOLS
        #[arg(long, default_value = "4x4", value_parser = parse_shape)]
        shape: (usize, usize),
    },
}

fn parse_shape(s: &str) -> std::result::Result<(usize, usize), String> {
    let (m, n) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected MxN, found {s:?}"))?;
    let m: usize = m.trim().parse().map_err(|_| format!("bad row count in {s:?}"))?;
    let n: usize = n.trim().parse().map_err(|_| format!("bad column count in {s:?}"))?;
    if m == 0 || n == 0 {
        return Err("dimensions must be positive".into());
    }
    Ok((m, n))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Identify(IdentifyCommand::Fourier { input, report }) => {
            identify_fourier(&input, report.as_deref(), out)
        }
        Command::Identify(IdentifyCommand::Maxmin { a, b, labels }) => identify_maxmin(&a, &b, &labels, out),
        Command::Matrix(args) => matrix(args, out),
        Command::Dft(args) => transform(&args.input, args.inverse, out),
        Command::Laws(LawsCommand::Check { trials, seed, shape }) => laws_check(trials, seed, shape, out),
    }
}

fn identify_fourier(input: &Path, report: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let set = io::parse_signal_file(&read(input)?)?;
    let reference = set
        .reference
        .ok_or_else(|| Error::Validation("signal file has no reference signal".into()))?;
    let result = fourier_identify(&set.candidates, &reference)?;
    writeln!(out, "signal\tn\tscore\tdisplay")?;
    for sv in &result.scores {
        for (n, &s) in sv.scores.iter().enumerate() {
            writeln!(out, "{}\t{n}\t{}\t{}", sv.signal_id, full(s), display(s))?;
        }
        writeln!(out, "{}\tbest\t{}\t{}", sv.signal_id, full(sv.best), display(sv.best))?;
    }
    write!(out, "winner\t{}\t{}\t{}", result.winner, full(result.best), display(result.best))?;
    if result.tie {
        write!(out, "\ttie")?;
    }
    writeln!(out)?;
    if let Some(path) = report {
        io::emit_plot_series(&result.scores, path)?;
    }
    Ok(0)
}

fn identify_maxmin(a: &Path, b: &Path, labels: &str, out: &mut dyn Write) -> Result<i32> {
    let a = io::parse_magnitude_matrix(&read(a)?)?;
    let b = io::parse_magnitude_matrix(&read(b)?)?;
    let labels: Vec<&str> = labels.split(',').map(str::trim).collect();
    let optimum = maxmin_decision(&a, &b, &labels)?;
    let product = a.usual_product(&b)?;
    debug_assert_eq!(column_min(&product), optimum.degrees);

    writeln!(out, "# product")?;
    write!(out, "{}", io::real_csv(&product, false))?;
    writeln!(out, "# product (display)")?;
    write!(out, "{}", io::real_csv(&product, true))?;
    writeln!(out, "# decision")?;
    writeln!(out, "label\tdegree\tdisplay")?;
    for (label, &d) in labels.iter().zip(&optimum.degrees) {
        writeln!(out, "{label}\t{}\t{}", full(d), display(d))?;
    }
    let set: Vec<String> = optimum
        .memberships
        .iter()
        .map(|(u, d)| format!("{}/{u}", display(*d)))
        .collect();
    writeln!(out, "optimum\t{}", set.join(", "))?;
    write!(
        out,
        "winner\t{}\t{}\t{}",
        optimum.winner,
        full(optimum.winner_degree),
        display(optimum.winner_degree)
    )?;
    if optimum.tie {
        write!(out, "\ttie")?;
    }
    if optimum.is_degenerate() {
        write!(out, "\tdegenerate")?;
    }
    writeln!(out)?;
    Ok(0)
}

fn matrix(args: MatrixArgs, out: &mut dyn Write) -> Result<i32> {
    let a_text = read(&args.a)?;
    let b_text = match (&args.b, args.op.is_binary()) {
        (Some(path), true) => Some(read(path)?),
        (None, true) => return Err(Error::Usage(format!("{:?} needs --b", args.op).to_lowercase())),
        (_, false) => None,
    };
    let b_text = b_text.as_deref().unwrap_or_default();

    enum Output {
        Complex(crate::complex_fuzzy::ComplexFuzzyMatrix),
        Magnitude(crate::soft_matrix::MagnitudeMatrix),
        Real(crate::soft_matrix::RealMatrix),
    }

    let result = match args.op {
        MatrixOp::Add | MatrixOp::Maxmin => {
            let a = io::parse_complex_matrix(&a_text)?;
            let b = io::parse_complex_matrix(b_text)?;
            Output::Complex(match args.op {
                MatrixOp::Add => a.fuzzy_add(&b)?,
                _ => a.maxmin_product(&b)?,
            })
        }
        MatrixOp::Trace => {
            let t = io::parse_complex_matrix(&a_text)?.trace()?;
            writeln!(out, "amplitude\t{}\t{}", full(t.amplitude()), display(t.amplitude()))?;
            writeln!(out, "phase\t{}\t{}", full(t.phase()), display(t.phase()))?;
            return Ok(0);
        }
        MatrixOp::Ctrans => Output::Complex(io::parse_complex_matrix(&a_text)?.conjugate_transpose()),
        MatrixOp::Comp => Output::Magnitude(io::parse_magnitude_matrix(&a_text)?.complement()),
        MatrixOp::Usual => {
            let a = io::parse_magnitude_matrix(&a_text)?;
            let b = io::parse_magnitude_matrix(b_text)?;
            Output::Real(a.usual_product(&b)?)
        }
        op => {
            let a = io::parse_magnitude_matrix(&a_text)?;
            let b = io::parse_magnitude_matrix(b_text)?;
            Output::Magnitude(match op {
                MatrixOp::Union => a.union(&b)?,
                MatrixOp::Inter => a.intersection(&b)?,
                MatrixOp::And => a.and_product(&b)?,
                MatrixOp::Or => a.or_product(&b)?,
                MatrixOp::Andnot => a.and_not_product(&b)?,
                MatrixOp::Ornot => a.or_not_product(&b)?,
                _ => unreachable!("handled above"),
            })
        }
    };
    let (full_csv, display_csv) = match &result {
        Output::Complex(m) => (io::complex_csv(m, false), io::complex_csv(m, true)),
        Output::Magnitude(m) => (io::magnitude_csv(m, false), io::magnitude_csv(m, true)),
        Output::Real(m) => (io::real_csv(m, false), io::real_csv(m, true)),
    };
    writeln!(out, "# result")?;
    write!(out, "{full_csv}")?;
    writeln!(out, "# display")?;
    write!(out, "{display_csv}")?;
    Ok(0)
}

fn transform(input: &Path, inverse: bool, out: &mut dyn Write) -> Result<i32> {
    let seq = io::parse_sequence(&read(input)?)?;
    let result = if inverse { idft(&seq)? } else { dft(&seq)? };
    writeln!(out, "k\tre\tim\tre_display\tim_display")?;
    for (k, v) in result.iter().enumerate() {
        writeln!(out, "{k}\t{}\t{}\t{}\t{}", full(v.re), full(v.im), display(v.re), display(v.im))?;
    }
    Ok(0)
}

fn laws_check(trials: usize, seed: u64, shape: (usize, usize), out: &mut dyn Write) -> Result<i32> {
    if trials == 0 {
        return Err(Error::Argument("--trials must be at least 1".into()));
    }
    let mut reports: Vec<LawReport> = check_proposition_laws(trials, shape, seed);
    reports.extend(check_submatrix_order(trials, shape, seed));
    let mut all_passed = true;
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        all_passed &= r.passed();
        writeln!(out, "{status}\t{}\ttrials={}\tfailures={}", r.law, r.trials, r.failures.len())?;
        if let Some(f) = r.failures.first() {
            writeln!(out, "\tfirst failure: inputs {} max deviation {}", f.inputs_digest, full(f.max_deviation))?;
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}
