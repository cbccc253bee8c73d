use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;
mod suite;

use report::{CheckResult, CheckStatus, InputError, RunReport};
use suite::SuiteConfig;

#[derive(Parser, Debug)]
#[command(name = "eadhm", version, about = "Exact checks for enhanced ADHM quiver representations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    max_attempts: usize,
    /// Check exactness of the long exact sequence at every node.
    #[arg(long, global = true)]
    deep: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate shapes and relations of a representation file.
    Check { file: PathBuf },
    /// Classify a stability parameter and decide stability.
    Stability {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, allow_hyphen_values = true)]
        theta_prime: String,
    },
    /// Cohomology of the deformation complex.
    Cohomology { file: PathBuf },
    /// Strictly semistable witnesses on both walls.
    Walls { r: usize, c: usize, cprime: usize },
    /// Solve the lifting system over an ADHM base and sample lifts.
    Lift {
        base: PathBuf,
        aprime: PathBuf,
        bprime: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Diagonal Vandermonde family, comma-separated eigenvalues.
    Vandermonde { r: usize, c: usize, lambdas: String },
    /// The full acceptance battery.
    Suite {
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, default_value_t = 6)]
        max_c: usize,
        /// Run checks one after another.
        #[arg(long)]
        sequential: bool,
    },
    /// Search for a stable point with nonzero obstruction space.
    SearchObstructed { r: usize, c: usize, cprime: usize },
    /// Write a JSON-lines corpus of sampled representations.
    Sample {
        r: usize,
        c: usize,
        cprime: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Keep only Δ-stable samples.
        #[arg(long)]
        stable: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Stability { .. } => "stability",
            Command::Cohomology { .. } => "cohomology",
            Command::Walls { .. } => "walls",
            Command::Lift { .. } => "lift",
            Command::Vandermonde { .. } => "vandermonde",
            Command::Suite { .. } => "suite",
            Command::SearchObstructed { .. } => "search-obstructed",
            Command::Sample { .. } => "sample",
        }
    }
}

enum Output {
    Report(serde_json::Value, Vec<CheckResult>),
    /// Corpus already written to stdout.
    Streamed,
}

fn sample(
    g: &Global,
    r: usize,
    c: usize,
    cprime: usize,
    count: usize,
    stable: bool,
    output: Option<PathBuf>,
) -> Result<Output, InputError> {
    let d = commands::dims(r, c, cprime)?;
    let (text, written) = commands::sample_corpus(d, count, g.seed, stable);
    let target = match &output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| InputError::new("io_error", format!("cannot write {}: {e}", path.display())))?;
            path.display().to_string()
        }
        None => {
            print!("{text}");
            return Ok(Output::Streamed);
        }
    };
    let inputs = serde_json::json!({"dims": d, "count": count, "stable": stable, "seed": g.seed});
    let result = CheckResult::new(
        "corpus",
        CheckStatus::Pass,
        format!("{written} representations written to {target}"),
        serde_json::json!({"written": written, "output": target}),
    );
    Ok(Output::Report(inputs, vec![result]))
}

fn run(cli: Cli) -> Result<Output, InputError> {
    let g = &cli.global;
    let (inputs, results) = match cli.command {
        Command::Check { file } => commands::check(&file)?,
        Command::Stability { file, theta, theta_prime } => commands::stability(&file, &theta, &theta_prime)?,
        Command::Cohomology { file } => commands::cohomology_cmd(&file, g.deep)?,
        Command::Walls { r, c, cprime } => commands::walls(commands::dims(r, c, cprime)?)?,
        Command::Lift { base, aprime, bprime, samples } => commands::lift(&base, &aprime, &bprime, samples, g.seed)?,
        Command::Vandermonde { r, c, lambdas } => commands::vandermonde(r, c, &lambdas)?,
        Command::Suite { max_r, max_c, sequential } => {
            if max_r == 0 || max_c == 0 {
                return Err(InputError::new("invalid_dims", "max_r and max_c must be positive"));
            }
            let cfg = SuiteConfig {
                max_r,
                max_c,
                seed: g.seed,
                max_attempts: g.max_attempts,
                deep: g.deep,
                parallel: !sequential,
            };
            (cfg.inputs(), suite::run_suite(&cfg))
        }
        Command::SearchObstructed { r, c, cprime } => {
            commands::search(commands::dims(r, c, cprime)?, g.max_attempts, g.seed)?
        }
        Command::Sample { r, c, cprime, count, stable, output } => {
            return sample(g, r, c, cprime, count, stable, output)
        }
    };
    Ok(Output::Report(inputs, results))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = cli.global.pretty || cli.global.format == Format::Text;
    let command = cli.command.name();
    let start = Instant::now();
    let outcome = run(cli);
    let timing_ms = start.elapsed().as_millis();
    let mut stdout = std::io::stdout().lock();
    match outcome {
        Ok(Output::Report(inputs, results)) => {
            let report = RunReport::new(command, inputs, results, timing_ms);
            let rendered =
                if text { report.to_text() } else { serde_json::to_string(&report).expect("report serializes") + "\n" };
            let _ = stdout.write_all(rendered.as_bytes());
            ExitCode::from(report.exit_code())
        }
        Ok(Output::Streamed) => ExitCode::SUCCESS,
        Err(e) => {
            let rendered = if text {
                format!("{command}: ERROR {}: {}\n", e.code, e.message)
            } else {
                e.to_json(command).to_string() + "\n"
            };
            let _ = stdout.write_all(rendered.as_bytes());
            ExitCode::from(2)
        }
    }
}
