//! Command-line front end.
//!
//! Exit codes: 0 when every check passed, 1 when a check or a numerical
//! certificate failed, 2 for usage errors, 3 for I/O and parse errors.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value as Json};

use crate::error::Error;
use crate::lab::{self, SzegoCase, TestFunction};
use crate::linalg::{skew_spectrum, symmetric_eigen, SpectrumSet};
use crate::report::{self, Record, Row, Table};
use crate::scalar::Real;
use crate::zeta::{self, ZerosTable};
use crate::zoo::{build, validate_structure, FamilyKind, MatrixFamily};
use crate::{exact, trace};

pub const THREADS_ENV: &str = "HILBERT_SPECTRA_THREADS";

#[derive(Debug, Parser)]
#[command(name = "hilbert-spectra", version, about = "Spectra of alternating and symmetric Hilbert-type matrices")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one matrix and check its structure.
    Build(FamilyArgs),
    /// Eigenvalues of one matrix.
    Spectrum {
        #[command(flatten)]
        family: FamilyArgs,
        /// Hermitian and residual tolerance, relative to the Frobenius norm.
        #[arg(long, default_value_t = <f64 as Real>::DEFAULT_TOL)]
        tol: f64,
    },
    /// Closed-form spectra, determinants and finite identities over a range of n.
    Verify {
        #[arg(long, value_enum)]
        theorem: VerifyTarget,
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        theta: Option<Angle>,
        /// Overrides the target's default tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// `trace(M^2)`: matrix oracle, closed form and limit.
    Trace {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        theta: Option<Angle>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Lattice fits (1), quantized spectrum (2), eigenvalue splits (3).
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        theta: Option<Angle>,
        /// Family for the split: cos (alternating) or sin (symmetric).
        #[arg(long, value_enum, default_value_t = CaseArg::Cos)]
        case: CaseArg,
        /// Gap tolerance for the quantized spectrum.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Eigenvalue averages against the Szegő limit.
    Szego {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long = "F", value_enum, default_value_t = FunctionArg::Sq)]
        function: FunctionArg,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<f64>,
        #[arg(long)]
        n: NRange,
        #[arg(long)]
        theta: Angle,
    },
    /// Zeta constants, zero sums and the prime-scaled limit.
    Zeta(ZetaArgs),
    /// Parallel grid over n (and theta) for one experiment.
    Sweep {
        #[arg(long, value_enum)]
        task: SweepTask,
        #[arg(long)]
        n: NRange,
        /// Comma-separated angles, e.g. `0.3,pi/4,pi/2`.
        #[arg(long)]
        theta: Option<AngleList>,
        /// Family for the radius and trace tasks.
        #[arg(long)]
        family: Option<FamilyKind>,
        #[arg(long = "F", value_enum, default_value_t = FunctionArg::Sq)]
        function: FunctionArg,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: FamilyKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub theta: Option<Angle>,
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct ZetaArgs {
    #[arg(long, value_enum, default_value_t = ZetaOp::Zerosum)]
    pub op: ZetaOp,
    /// Accuracy target for `catalan`.
    #[arg(long, default_value_t = 1e-10)]
    pub eps: f64,
    /// Use exactly this many Catalan terms instead of `eps`.
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long, default_value_t = 2)]
    pub k2: u32,
    /// Zeros file (one ordinate per line); the bundled 100 zeros otherwise.
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    #[arg(long)]
    pub n: Option<NRange>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    /// Alternating quantized spectrum.
    #[value(alias = "4")]
    AltQuant,
    /// Symmetric and cosecant quantized spectra with both eigenvector identities.
    HankelQuant,
    /// Sign and magnitude of det Q.
    DetQ,
    /// Root-of-unity and trigonometric sums.
    Identities,
    /// Closed form of trace(A^2) for the alternating quantized matrix.
    #[value(alias = "2")]
    TraceQuant,
    /// trace(B^2) - trace(A^2) for the oscillating pair.
    Difference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Cos,
    Sin,
}

impl From<CaseArg> for SzegoCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Cos => SzegoCase::Cos,
            CaseArg::Sin => SzegoCase::Sin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    Sq,
    Quartic,
    Abs,
    Indicator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaOp {
    Catalan,
    Alpha,
    Trigamma,
    Zerosum,
    Identity,
    Primelimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepTask {
    /// Spectral radius of alt or sym-hilbert.
    Radius,
    /// Lattice fit of the alternating spectrum.
    Fit,
    /// Zero eigenvalue present iff n is odd.
    Parity,
    /// Cosine-family split with KS distance.
    Split,
    /// Sine-family near-pi counts.
    SinSplit,
    /// trace(M^2) reports.
    Trace,
    /// Szegő moment, cosine case.
    Moment,
}

/// Ascending list of sizes: `5`, `1..128` (inclusive), or comma-separated items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub Vec<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out: Vec<usize> = Vec::new();
        for item in s.split(',').map(str::trim) {
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad size {t:?}: {e}"));
            if let Some((a, b)) = item.split_once("..") {
                let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range {item}"));
                }
                out.extend(a..=b);
            } else {
                out.push(parse(item)?);
            }
        }
        if out.is_empty() {
            return Err("empty size list".into());
        }
        if out.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("sizes in {s:?} are not strictly ascending"));
        }
        Ok(NRange(out))
    }
}

/// An angle: a number, or `pi`, `pi/d`, `a*pi`, `a*pi/d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle(pub f64);

impl FromStr for Angle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("bad angle {s:?}: {e}"));
        let Some(pos) = t.find("pi") else {
            return num(t).map(Angle);
        };
        let (head, tail) = (&t[..pos], &t[pos + 2..]);
        let factor = match head.trim().strip_suffix('*') {
            Some(a) => num(a)?,
            None if head.trim().is_empty() => 1.0,
            None => return Err(format!("bad angle {s:?}")),
        };
        let divisor = match tail.trim().strip_prefix('/') {
            Some(d) => num(d)?,
            None if tail.trim().is_empty() => 1.0,
            None => return Err(format!("bad angle {s:?}")),
        };
        Ok(Angle(factor * PI / divisor))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AngleList(pub Vec<f64>);

impl FromStr for AngleList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',').map(|t| t.parse::<Angle>().map(|a| a.0)).collect::<Result<_, _>>().map(AngleList)
    }
}

/// Why a run ended unsuccessfully.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Check(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidParameter(_) | Error::DimensionMismatch { .. } => Failure::Usage(msg),
            Error::Io(_) | Error::Parse { .. } | Error::NotIncreasing { .. } | Error::EmptyTable => Failure::Io(msg),
            Error::NotHermitian { .. }
            | Error::NotSkew { .. }
            | Error::NoConvergence { .. }
            | Error::NonFinite { .. }
            | Error::StructureViolation { .. } => Failure::Check(msg),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn thread_pool() -> Outcome<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        match raw.trim().parse::<usize>() {
            Ok(t) if t > 0 => builder = builder.num_threads(t),
            _ => return Err(usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))),
        }
    }
    builder.build().map_err(|e| usage(e.to_string()))
}

/// Evaluates `f` on every key in parallel; results keep key order.
fn par_map<K: Sync, R: Send>(keys: &[K], f: impl Fn(&K) -> crate::Result<R> + Sync + Send) -> Outcome<Vec<R>> {
    let pool = thread_pool()?;
    Ok(pool.install(|| keys.par_iter().map(&f).collect::<crate::Result<Vec<R>>>())?)
}

fn params(v: Json) -> Map<String, Json> {
    v.as_object().cloned().unwrap_or_default()
}

fn family_of(kind: FamilyKind, n: usize, theta: Option<Angle>, p: Option<u64>) -> MatrixFamily<f64> {
    MatrixFamily { kind, n, theta: theta.map(|a| a.0), p }
}

/// What a command produced.
enum Output {
    Table(Table),
    Bytes(Vec<u8>),
}

/// Parses `args`, runs the command and writes its output. Errors go to
/// standard error; the return value is the process exit code.
pub fn run_from<I, S>(args: I) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Check(m) | Failure::Io(m) => m,
            };
            eprintln!("hilbert-spectra: {msg}");
            f.exit_code()
        }
    }
}

pub fn main() -> ExitCode {
    ExitCode::from(run_from(std::env::args_os()))
}

/// Runs a parsed command line; `Ok` carries 0 or 1 (some check failed).
pub fn run(cli: &Cli) -> Outcome<u8> {
    let output = execute(&cli.command, cli.format)?;
    let (bytes, failures) = match output {
        Output::Table(t) => {
            let bytes = match cli.format {
                Format::Csv => t.to_csv()?,
                Format::Json => t.to_json()?,
            };
            (bytes, t.failures)
        }
        Output::Bytes(b) => (b, 0),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(&bytes).map_err(|e| Failure::Io(e.to_string()))?,
    }
    if failures > 0 {
        eprintln!("hilbert-spectra: {failures} check(s) failed");
        return Ok(1);
    }
    Ok(0)
}

fn execute(command: &Command, format: Format) -> Outcome<Output> {
    match command {
        Command::Build(args) => run_build(args, format),
        Command::Spectrum { family, tol } => run_spectrum(family, *tol),
        Command::Verify { theorem, n, theta, tol } => run_verify(*theorem, n, *theta, *tol),
        Command::Trace { family, n, theta, p } => {
            let mut t = Table::new(
                "trace",
                params(json!({"family": family.slug(), "n": n.0, "theta": theta.map(|a| a.0), "p": p})),
                &[],
            );
            let reports = par_map(&n.0, |&k| trace::trace_report(&family_of(*family, k, *theta, *p)))?;
            reports.iter().for_each(|r| t.push(r));
            Ok(Output::Table(t))
        }
        Command::Conjecture { which, n, theta, case, tol } => run_conjecture(*which, n, *theta, *case, *tol),
        Command::Szego { case, function, a, b, n, theta } => {
            let f = test_function(*function, *a, *b)?;
            let case = SzegoCase::from(*case);
            let mut t = Table::new(
                "szego",
                params(json!({"case": case.as_str(), "F": f.to_string(), "n": n.0, "theta": theta.0})),
                &[],
            );
            let reports = par_map(&n.0, |&k| lab::szego_moment_test(k, theta.0, case, f))?;
            reports.iter().for_each(|r| t.push(r));
            Ok(Output::Table(t))
        }
        Command::Zeta(args) => run_zeta(args),
        Command::Sweep { task, n, theta, family, function } => {
            run_sweep(*task, n, theta.as_ref(), *family, test_function(*function, None, None).ok())
        }
    }
}

fn test_function(f: FunctionArg, a: Option<f64>, b: Option<f64>) -> Outcome<TestFunction> {
    Ok(match f {
        FunctionArg::Sq => TestFunction::Sq,
        FunctionArg::Quartic => TestFunction::Quartic,
        FunctionArg::Abs => TestFunction::Abs,
        FunctionArg::Indicator => match (a, b) {
            (Some(a), Some(b)) => TestFunction::Indicator { a, b },
            _ => return Err(usage("--F indicator needs --a and --b")),
        },
    })
}

fn run_build(args: &FamilyArgs, format: Format) -> Outcome<Output> {
    let family = family_of(args.family, args.n, args.theta, args.p);
    let m = build(&family)?;
    validate_structure(&m, &family)?;
    Ok(Output::Bytes(match format {
        Format::Csv => report::matrix_csv(&m)?,
        Format::Json => report::matrix_json(&m, family.kind.slug())?,
    }))
}

fn run_spectrum(args: &FamilyArgs, tol: f64) -> Outcome<Output> {
    let family = family_of(args.family, args.n, args.theta, args.p);
    let m = build(&family)?;
    let spectrum = if family.kind.is_skew() {
        skew_spectrum(&m, tol)?
    } else {
        let eig = symmetric_eigen(&m, tol)?;
        SpectrumSet::from_hermitian(&eig.values, Some(eig.residual))
    };
    let mut t = Table::new(
        "spectrum",
        params(json!({
            "family": family.kind.slug(),
            "n": family.n,
            "theta": family.theta,
            "p": family.p,
            "tol": tol,
            "kind": spectrum.kind.as_str(),
            "residual": spectrum.residual,
        })),
        &["index", "re", "im"],
    );
    report::spectrum_rows(&spectrum).into_iter().for_each(|r| t.push_row(r));
    Ok(Output::Table(t))
}

struct RowRecord(Row);

impl Record for RowRecord {
    fn fields(&self) -> Row {
        self.0.clone()
    }
}

fn run_verify(target: VerifyTarget, n: &NRange, theta: Option<Angle>, tol: Option<f64>) -> Outcome<Output> {
    let name = target.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let mut t = Table::new("verify", params(json!({"theorem": name, "n": n.0, "tol": tol})), &[]);
    match target {
        VerifyTarget::AltQuant => {
            let tol = tol.unwrap_or(1e-8);
            par_map(&n.0, |&k| lab::conjecture2_check(k, tol))?.iter().for_each(|r| t.push(r));
        }
        VerifyTarget::HankelQuant => {
            par_map(&n.0, |&k| lab::quant_family_check(k))?.iter().for_each(|r| t.push(r));
        }
        VerifyTarget::DetQ => {
            par_map(&n.0, |&k| exact::det_q_check(k))?.iter().for_each(|r| t.push(r));
        }
        VerifyTarget::Identities => {
            let tol = tol.unwrap_or(1e-10);
            for checks in par_map(&n.0, |&k| exact::identity_checks(k, tol))? {
                checks.iter().for_each(|r| t.push(r));
            }
        }
        VerifyTarget::TraceQuant => {
            let tol = tol.unwrap_or(1e-9);
            let rows = par_map(&n.0, |&k| {
                let m = build(&MatrixFamily::<f64>::alternating_quant(k))?;
                let oracle = trace::trace_sq(&m);
                let closed = trace::trace_sq_quant_closed::<f64>(k);
                let gap = (oracle - closed).abs();
                Ok(RowRecord(vec![
                    ("n", k.into()),
                    ("trace_sq_matrix", oracle.into()),
                    ("trace_sq_closed", closed.into()),
                    ("gap", gap.into()),
                    ("pass", (gap <= tol * (k * k) as f64).into()),
                ]))
            })?;
            rows.iter().for_each(|r| t.push(r));
        }
        VerifyTarget::Difference => {
            let theta = theta.ok_or_else(|| usage("--theorem difference needs --theta"))?.0;
            let tol = tol.unwrap_or(1e-9);
            let rows = par_map(&n.0, |&k| {
                let c = trace::difference_identity_check(k, theta)?;
                let mut row = c.fields();
                row.push(("pass", (c.gap <= tol * k as f64).into()));
                Ok(RowRecord(row))
            })?;
            rows.iter().for_each(|r| t.push(r));
        }
    }
    Ok(Output::Table(t))
}

fn require_theta(theta: Option<Angle>, what: &str) -> Outcome<f64> {
    theta.map(|a| a.0).ok_or_else(|| usage(format!("{what} needs --theta")))
}

fn run_conjecture(which: u8, n: &NRange, theta: Option<Angle>, case: CaseArg, tol: f64) -> Outcome<Output> {
    let mut t = Table::new(
        "conjecture",
        params(json!({"which": which, "n": n.0, "theta": theta.map(|a| a.0), "case": SzegoCase::from(case).as_str(), "tol": tol})),
        &[],
    );
    match which {
        1 => par_map(&n.0, |&k| lab::conjecture1_fit(k))?.iter().for_each(|r| t.push(r)),
        2 => par_map(&n.0, |&k| lab::conjecture2_check(k, tol))?.iter().for_each(|r| t.push(r)),
        _ => {
            let theta = require_theta(theta, "--which 3")?;
            let reports = match case {
                CaseArg::Cos => par_map(&n.0, |&k| lab::conjecture3_split(k, theta))?,
                CaseArg::Sin => par_map(&n.0, |&k| lab::conjecture3_sin_split(k, theta))?,
            };
            reports.iter().for_each(|r| t.push(r));
        }
    }
    Ok(Output::Table(t))
}

fn load_zeros(path: Option<&PathBuf>) -> Outcome<ZerosTable> {
    let table = match path {
        Some(p) => zeta::parse_zeros(p)?,
        None => ZerosTable::bundled(),
    };
    if let Some(w) = table.sanity_warning() {
        eprintln!("hilbert-spectra: warning: {w}");
    }
    Ok(table)
}

fn run_zeta(args: &ZetaArgs) -> Outcome<Output> {
    let op = args.op.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let zeros_path = args.zeros.as_ref().map(|p| p.display().to_string());
    let mut t = Table::new(
        "zeta",
        params(json!({
            "op": op,
            "eps": args.eps,
            "terms": args.terms,
            "k": args.k,
            "k2": args.k2,
            "zeros": zeros_path,
            "p": args.p,
            "n": args.n.as_ref().map(|r| r.0.clone()),
        })),
        &[],
    );
    match args.op {
        ZetaOp::Catalan => t.push(&match args.terms {
            Some(terms) => zeta::catalan_partial(terms)?,
            None => zeta::catalan(args.eps)?,
        }),
        ZetaOp::Alpha => t.push(&zeta::alpha(args.k)?),
        ZetaOp::Trigamma => t.push(&zeta::trigamma_quarter()?),
        ZetaOp::Zerosum => t.push(&zeta::zero_sum(args.k2, &load_zeros(args.zeros.as_ref())?)?),
        ZetaOp::Identity => t.push(&zeta::zero_identity_check(&load_zeros(args.zeros.as_ref())?)?),
        ZetaOp::Primelimit => {
            let n = args.n.as_ref().ok_or_else(|| usage("--op primelimit needs --n"))?;
            let p = args.p;
            par_map(&n.0, |&k| zeta::prime_limit_check(p, k))?.iter().for_each(|r| t.push(r));
        }
    }
    Ok(Output::Table(t))
}

fn run_sweep(
    task: SweepTask,
    n: &NRange,
    thetas: Option<&AngleList>,
    family: Option<FamilyKind>,
    function: Option<TestFunction>,
) -> Outcome<Output> {
    let task_name = task.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let theta_values = thetas.map(|l| l.0.clone());
    let mut t = Table::new(
        "sweep",
        params(json!({
            "task": task_name,
            "n": n.0,
            "theta": theta_values,
            "family": family.map(|f| f.slug()),
        })),
        &[],
    );
    // grid in (theta, n) order, so rows come out sorted by that key
    let grid = |need_theta: bool| -> Outcome<Vec<(Option<f64>, usize)>> {
        match (need_theta, thetas) {
            (true, None) => Err(usage(format!("--task {task_name} needs --theta"))),
            (true, Some(l)) => Ok(l.0.iter().flat_map(|&th| n.0.iter().map(move |&k| (Some(th), k))).collect()),
            (false, _) => Ok(n.0.iter().map(|&k| (None, k)).collect()),
        }
    };
    match task {
        SweepTask::Radius => {
            let family = family.unwrap_or(FamilyKind::Alternating);
            par_map(&n.0, |&k| lab::schur_radius_check(k, family))?.iter().for_each(|r| t.push(r));
        }
        SweepTask::Fit => par_map(&n.0, |&k| lab::conjecture1_fit(k))?.iter().for_each(|r| t.push(r)),
        SweepTask::Parity => {
            let rows = par_map(&n.0, |&k| {
                let zero = lab::alternating_has_zero(k)?;
                Ok(RowRecord(vec![
                    ("n", k.into()),
                    ("zero_present", zero.into()),
                    ("pass", (zero == (k % 2 == 1)).into()),
                ]))
            })?;
            rows.iter().for_each(|r| t.push(r));
        }
        SweepTask::Split | SweepTask::SinSplit => {
            let points = grid(true)?;
            let sin = task == SweepTask::SinSplit;
            let reports = par_map(&points, |&(th, k)| {
                let th = th.expect("grid has theta");
                if sin {
                    lab::conjecture3_sin_split(k, th)
                } else {
                    lab::conjecture3_split(k, th)
                }
            })?;
            reports.iter().for_each(|r| t.push(r));
        }
        SweepTask::Trace => {
            let family = family.unwrap_or(FamilyKind::Alternating);
            let points = grid(family.uses_theta())?;
            let reports = par_map(&points, |&(th, k)| {
                trace::trace_report(&MatrixFamily { kind: family, n: k, theta: th, p: None })
            })?;
            reports.iter().for_each(|r| t.push(r));
        }
        SweepTask::Moment => {
            let f = function.ok_or_else(|| usage("--task moment supports sq, quartic and abs"))?;
            let points = grid(true)?;
            let reports = par_map(&points, |&(th, k)| {
                lab::szego_moment_test(k, th.expect("grid has theta"), SzegoCase::Cos, f)
            })?;
            reports.iter().for_each(|r| t.push(r));
        }
    }
    Ok(Output::Table(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("5".parse::<NRange>().unwrap().0, vec![5]);
        assert_eq!("1..4".parse::<NRange>().unwrap().0, vec![1, 2, 3, 4]);
        assert_eq!("100,200,400".parse::<NRange>().unwrap().0, vec![100, 200, 400]);
        assert_eq!("1..=2,5".parse::<NRange>().unwrap().0, vec![1, 2, 5]);
        assert!("4..1".parse::<NRange>().is_err());
        assert!("3,2".parse::<NRange>().is_err());
        assert!("".parse::<NRange>().is_err());
    }

    #[test]
    fn angles() {
        assert_eq!("0.3".parse::<Angle>().unwrap().0, 0.3);
        assert_eq!("pi".parse::<Angle>().unwrap().0, PI);
        assert_eq!("pi/4".parse::<Angle>().unwrap().0, PI / 4.0);
        assert_eq!("2*pi/3".parse::<Angle>().unwrap().0, 2.0 * PI / 3.0);
        assert!("pix".parse::<Angle>().is_err());
        assert_eq!("0.3,pi/2".parse::<AngleList>().unwrap().0, vec![0.3, PI / 2.0]);
    }

    #[test]
    fn error_mapping() {
        assert_eq!(Failure::from(Error::invalid("x")).exit_code(), 2);
        assert_eq!(Failure::from(Error::Io("x".into())).exit_code(), 3);
        assert_eq!(Failure::from(Error::EmptyTable).exit_code(), 3);
        assert_eq!(Failure::from(Error::NoConvergence { sweeps: 1, residual: 1.0 }).exit_code(), 1);
    }
}
