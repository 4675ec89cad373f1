use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use diagsynth::io::{load_circuit, load_diagonal, save_circuit};
use diagsynth::qasm::to_qasm;
use diagsynth::{
    residual, synthesize, Algorithm, DiagonalUnitary, SynthesisReport, XorStyle, DEFAULT_TOL,
};
use rand::{rngs::StdRng, SeedableRng};

#[derive(Parser)]
#[command(
    name = "diagsynth",
    version,
    about = "Compile diagonal unitaries into CNOT + Rz circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a circuit for a diagonal read from a JSON file.
    Synth(SynthArgs),
    /// Check a circuit file against a diagonal file, up to global phase.
    Verify(VerifyArgs),
    /// Tabulate gate counts and residuals over random diagonals.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Xor,
    Lambda,
    Twolevel,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Xor => Algorithm::Xor,
            AlgoArg::Lambda => Algorithm::Lambda,
            AlgoArg::Twolevel => Algorithm::TwoLevel,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Fan,
    Chain,
}

impl From<StyleArg> for XorStyle {
    fn from(s: StyleArg) -> Self {
        match s {
            StyleArg::Fan => XorStyle::Fan,
            StyleArg::Chain => XorStyle::Chain,
        }
    }
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    algo: AlgoArg,
    /// Diagonal document (JSON).
    #[arg(long = "in")]
    input: PathBuf,
    /// Circuit document to write (JSON).
    #[arg(long)]
    out: PathBuf,
    /// Also export OpenQASM 2.0 (rz/cx/x circuits only).
    #[arg(long)]
    qasm: Option<PathBuf>,
    /// Simulate the result and fail if it deviates by more than --tol.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "fan")]
    style: StyleArg,
    /// Print gate counts.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    circuit: PathBuf,
    #[arg(long)]
    diag: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    algo: AlgoArg,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Synth(args) => synth(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
    }
}

fn synth(args: SynthArgs) -> Result<()> {
    let u =
        load_diagonal(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let (circuit, mut report) = synthesize(args.algo.into(), &u, args.tol, args.style.into())?;
    if args.verify {
        let r = residual(&circuit, &u)?;
        report.residual = Some(r);
        if r > args.tol {
            bail!(
                "verification failed: residual {r:e} exceeds tol {:e}",
                args.tol
            );
        }
    }
    save_circuit(&args.out, &circuit).with_context(|| format!("writing {}", args.out.display()))?;
    if args.stats {
        println!("algorithm:    {}", Algorithm::from(args.algo));
        println!("{report}");
    }
    if let Some(path) = args.qasm {
        let text = to_qasm(&circuit)?;
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<()> {
    let circuit = load_circuit(&args.circuit)
        .with_context(|| format!("reading {}", args.circuit.display()))?;
    let u =
        load_diagonal(&args.diag).with_context(|| format!("reading {}", args.diag.display()))?;
    let r = residual(&circuit, &u)?;
    println!("residual: {r:e}");
    if r > args.tol {
        bail!(
            "verification failed: residual {r:e} exceeds tol {:e}",
            args.tol
        );
    }
    Ok(())
}

/// The count each algorithm guarantees for generic input, and how it is measured.
fn predicted(algo: Algorithm, n: usize) -> usize {
    match algo {
        Algorithm::Xor => (1 << (n + 1)) - 3,
        Algorithm::Lambda => (1 << n) - 1,
        Algorithm::TwoLevel => 1 << n,
    }
}

fn measured(algo: Algorithm, report: &SynthesisReport) -> usize {
    let c = &report.counts;
    match algo {
        Algorithm::Xor => c.elementary(),
        Algorithm::Lambda => c.mcrz + c.rz,
        Algorithm::TwoLevel => c.x + c.cdiag,
    }
}

fn range(values: &[usize]) -> String {
    let lo = values.iter().min().copied().unwrap_or(0);
    let hi = values.iter().max().copied().unwrap_or(0);
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    }
}

fn bench(args: BenchArgs) -> Result<()> {
    let algo = Algorithm::from(args.algo);
    let n_min = if algo == Algorithm::TwoLevel {
        args.n_min.max(2)
    } else {
        args.n_min.max(1)
    };
    if args.n_max < n_min {
        bail!("--n-max must be at least {n_min}");
    }
    let mut rng = StdRng::seed_from_u64(args.seed);
    println!(
        "{:>3} {:>7} {:>7} {:>7} {:>7} {:>7} {:>8} {:>9} {:>12}",
        "n", "x", "cnot", "rz", "mcrz", "cdiag", "count", "predicted", "residual"
    );
    let mut failures = 0;
    for n in n_min..=args.n_max {
        let mut columns: [Vec<usize>; 6] = Default::default();
        let mut worst: f64 = 0.0;
        for _ in 0..args.trials {
            let u = DiagonalUnitary::random(n, &mut rng)?;
            let (circuit, report) = synthesize(algo, &u, DEFAULT_TOL, XorStyle::Fan)?;
            worst = worst.max(residual(&circuit, &u)?);
            let c = report.counts;
            for (col, v) in columns.iter_mut().zip([
                c.x,
                c.cnot,
                c.rz,
                c.mcrz,
                c.cdiag,
                measured(algo, &report),
            ]) {
                col.push(v);
            }
        }
        if worst > args.tol {
            failures += 1;
        }
        println!(
            "{:>3} {:>7} {:>7} {:>7} {:>7} {:>7} {:>8} {:>9} {:>12.3e}",
            n,
            range(&columns[0]),
            range(&columns[1]),
            range(&columns[2]),
            range(&columns[3]),
            range(&columns[4]),
            range(&columns[5]),
            predicted(algo, n),
            worst
        );
    }
    if failures > 0 {
        bail!("{failures} row(s) exceeded residual tol {:e}", args.tol);
    }
    Ok(())
}
