use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use bnflow::bnfp::{solve, Algorithm, SolveError, SolveResult, SolverConfig, Status};
use bnflow::io::{
    disagreements, generate_instance, parse_instance, parse_solution, run_bench, write_csv, write_instance,
    write_solution, BenchFile, Family, GeneratorSpec,
};
use bnflow::oracle::{oracle_solve, verify_solution};
use clap::{Parser, Subcommand};

/// Bottleneck network flow solver.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        /// threshold, augment, largecap, abst-edge, abst-node or abst-simple
        #[arg(long)]
        algo: Algorithm,
        #[arg(long)]
        input: PathBuf,
        /// Defaults to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Depth D for the abst algorithms, replacing the rule's default.
        #[arg(long = "d")]
        depth: Option<usize>,
    },
    /// Check a solution file against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Generate a random instance on standard output.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        arcs: usize,
        #[arg(long, default_value_t = GeneratorSpec::DEFAULT_BALANCE)]
        balance: i64,
        #[arg(long, default_value_t = GeneratorSpec::DEFAULT_WEIGHT_MAX)]
        wmax: i64,
        #[arg(long, default_value_t = GeneratorSpec::DEFAULT_CAPACITY_MAX)]
        umax: i64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        infeasible: bool,
    },
    /// Run solvers over the instances of a TOML spec and write a CSV.
    Bench {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated algorithm names.
        #[arg(long, value_delimiter = ',', required = true)]
        algos: Vec<Algorithm>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long)]
        csv: PathBuf,
    },
}

enum Failure {
    /// Unreadable or invalid input, or an algorithm that does not apply.
    Input(anyhow::Error),
    /// A solver produced something its own checks reject.
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::Input(err)
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Optimal | Status::ZeroDemand => 0,
        Status::Infeasible => 1,
    }
}

fn run_solve(algo: Algorithm, input: &Path, output: Option<&Path>, depth: Option<usize>) -> Result<u8, Failure> {
    let instance = parse_instance(&read(input)?).with_context(|| input.display().to_string())?;
    let mut config = SolverConfig::new(algo);
    config.depth = depth;
    let result = solve(&instance, &config).map_err(|err| match err {
        SolveError::NotUnitCapacity | SolveError::NotSimple | SolveError::InvalidDepth => {
            Failure::Input(anyhow!("{algo}: {err}"))
        }
        other => Failure::Internal(anyhow!("{algo}: {other}")),
    })?;
    if result.is_optimal() {
        let report = verify_solution(&instance, &result);
        if !report.passes() {
            return Err(Failure::Internal(anyhow!("{algo} returned a flow that fails verification")));
        }
    }
    emit(output, &write_solution(&instance, &result))?;
    let stats = &result.stats;
    eprintln!(
        "{algo}: {} probes, {} max-flow calls, {} augmentations",
        stats.thresholds_probed, stats.maxflow_calls, stats.augmentations
    );
    Ok(status_code(result.status))
}

fn run_verify(input: &Path, solution: &Path) -> Result<u8, Failure> {
    let instance = parse_instance(&read(input)?).with_context(|| input.display().to_string())?;
    let file = parse_solution(&read(solution)?).with_context(|| solution.display().to_string())?;
    let claimed: SolveResult = file
        .into_result(&instance)
        .with_context(|| solution.display().to_string())?;
    let mut problems = Vec::new();
    match claimed.status {
        Status::Optimal => {
            let report = verify_solution(&instance, &claimed);
            for c in report.node_failures() {
                problems.push(format!(
                    "node {}: net outflow {} but balance {}",
                    c.node, c.net_outflow, c.balance
                ));
            }
            for c in report.arc_failures() {
                let a = instance.arc(c.arc);
                problems.push(format!(
                    "arc ({}, {}): flow {} outside [0, {}]",
                    a.tail, a.head, c.flow, c.capacity
                ));
            }
            if !report.objective_consistent() {
                problems.push(format!(
                    "claimed bottleneck {:?} but the largest weight carrying flow is {:?}",
                    claimed.bottleneck, report.recomputed_bottleneck
                ));
            }
        }
        Status::ZeroDemand => {
            if instance.total_supply() != 0 {
                problems.push(format!("total supply is {}, not 0", instance.total_supply()));
            }
        }
        Status::Infeasible => {
            if oracle_solve(&instance).status != Status::Infeasible {
                problems.push("instance is feasible".to_string());
            }
        }
    }
    if problems.is_empty() {
        println!("ok");
        Ok(0)
    } else {
        for p in &problems {
            println!("FAIL {p}");
        }
        Ok(1)
    }
}

fn run_bench_command(spec: &Path, algos: &[Algorithm], reps: usize, csv: &Path) -> Result<u8, Failure> {
    let file = BenchFile::parse(&read(spec)?).with_context(|| spec.display().to_string())?;
    let records = run_bench(&file.instance, algos, reps);
    let out = fs::File::create(csv).with_context(|| format!("cannot write {}", csv.display()))?;
    write_csv(&records, out).with_context(|| format!("cannot write {}", csv.display()))?;
    for r in records.iter().filter(|r| r.is_failure()) {
        eprintln!("{} n={} seed={} {}: {}", r.family, r.n, r.seed, r.algo, r.status);
    }
    let bad = disagreements(&records);
    for (family, n, m, b, seed) in &bad {
        eprintln!("solvers disagree on {family} n={n} m={m} B={b} seed={seed}");
    }
    if bad.is_empty() {
        Ok(0)
    } else {
        Err(Failure::Internal(anyhow!("{} instances with disagreeing solvers", bad.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve {
            algo,
            input,
            output,
            depth,
        } => run_solve(algo, &input, output.as_deref(), depth),
        Command::Verify { input, solution } => run_verify(&input, &solution),
        Command::Gen {
            family,
            nodes,
            arcs,
            balance,
            wmax,
            umax,
            seed,
            infeasible,
        } => {
            let spec = GeneratorSpec {
                family,
                nodes,
                arcs,
                balance,
                weight_max: wmax,
                capacity_max: umax,
                seed,
                infeasible,
            };
            generate_instance(&spec)
                .map_err(anyhow::Error::from)
                .and_then(|instance| emit(None, &write_instance(&instance)))
                .map(|()| 0)
                .map_err(Failure::Input)
        }
        Command::Bench { spec, algos, reps, csv } => run_bench_command(&spec, &algos, reps, &csv),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(err)) => {
            eprintln!("internal error: {err:#}");
            ExitCode::from(3)
        }
    }
}
