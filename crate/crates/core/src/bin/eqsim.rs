use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use eqsim::experiment::{
    compile_for, crossover, output, run_costs, run_crosstalk, run_simulate, run_verify, CostSweep,
    ExperimentConfig, SweepReport,
};
use eqsim::Error;

#[derive(Parser)]
#[command(
    name = "eqsim",
    version,
    about = "Embedding quantum simulator experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Experiment config file (TOML).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Shipped preset: fig2a, fig2b, fig2c, fig2d or costs.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Monotone curves under depolarizing noise.
    Simulate(Common),
    /// Monotone curves under crosstalk, plus shape distortion per Δ₀.
    Crosstalk(Common),
    /// Repetition costs of the embedding versus tomography.
    Costs(Common),
    /// Cross-module property suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the ε^n suite with a wrong mitigation exponent.
        #[arg(long)]
        negative_control: bool,
    },
    /// Dump the compiled preparation circuit.
    Compile {
        #[command(flatten)]
        common: Common,
        /// Evolution time; defaults to the end of the time grid.
        #[arg(long)]
        time: Option<f64>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 3,
        _ => 2,
    }
}

fn load_experiment(c: &Common) -> eqsim::Result<ExperimentConfig> {
    let mut cfg = match (&c.config, &c.preset) {
        (Some(path), None) => ExperimentConfig::load(path)?,
        (None, Some(name)) => ExperimentConfig::preset(name)?,
        _ => {
            return Err(Error::Config(
                "give exactly one of --config or --preset".into(),
            ))
        }
    };
    if let Some(seed) = c.seed {
        cfg.seed = seed;
    }
    if let Some(w) = c.workers {
        cfg.workers = w.max(1);
    }
    if c.out.is_some() {
        cfg.output = c.out.clone();
    }
    Ok(cfg)
}

fn sink(path: Option<&Path>) -> eqsim::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn sweep_meta(cfg: &ExperimentConfig) -> Vec<(&'static str, String)> {
    vec![
        ("monotone", cfg.monotone.name().to_string()),
        ("seed", cfg.seed.to_string()),
        ("shots", cfg.shots.to_string()),
        ("noisy_readout", cfg.noisy_readout.to_string()),
        ("mitigate", cfg.mitigate.to_string()),
    ]
}

fn write_sweep(kind: &str, cfg: &ExperimentConfig, report: &SweepReport) -> eqsim::Result<()> {
    let meta = sweep_meta(cfg);
    output::write_curve(sink(cfg.output.as_deref())?, kind, &meta, &report.rows)?;
    if let Some(out) = &cfg.output {
        let mut name = out.clone().into_os_string();
        name.push(".distortion.csv");
        output::write_distortion(sink(Some(Path::new(&name)))?, &meta, &report.distortion)?;
    }
    for d in &report.distortion {
        eprintln!(
            "epsilon={} delta0={} steps={} scale={:.6} D={:.3e}",
            d.epsilon, d.delta0, d.trotter_steps, d.scale, d.distance
        );
    }
    Ok(())
}

fn run(cli: Cli) -> eqsim::Result<u8> {
    match cli.command {
        Command::Simulate(c) => {
            let cfg = load_experiment(&c)?;
            write_sweep("simulate", &cfg, &run_simulate(&cfg)?)?;
        }
        Command::Crosstalk(c) => {
            let cfg = load_experiment(&c)?;
            write_sweep("crosstalk", &cfg, &run_crosstalk(&cfg)?)?;
        }
        Command::Costs(c) => {
            let sweep = match (&c.config, &c.preset) {
                (Some(path), None) => CostSweep::load(path)?,
                (None, Some(name)) => CostSweep::preset(name)?,
                (None, None) => CostSweep::preset("costs")?,
                _ => {
                    return Err(Error::Config(
                        "give at most one of --config or --preset".into(),
                    ))
                }
            };
            let rows = run_costs(&sweep)?;
            output::write_costs(sink(c.out.as_deref())?, &[], &rows)?;
            match crossover(&rows) {
                Some(n) => eprintln!("ratio below one from n_qubits={n}"),
                None => eprintln!("ratio never stays below one in range"),
            }
        }
        Command::Verify {
            seed,
            negative_control,
        } => {
            let report = run_verify(seed, negative_control)?;
            print!("{report}");
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Compile { common, time } => {
            let cfg = load_experiment(&common)?;
            let seq = compile_for(&cfg, time.unwrap_or(cfg.time.end))?;
            let mut out = sink(cfg.output.as_deref())?;
            write!(out, "{seq}")?;
            out.flush()?;
            eprintln!("gates={}", seq.gate_count());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("eqsim: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
