//! `spintel`: two-qubit Heisenberg XYZ chain under intrinsic dephasing.
//! Spectra, evolution, negativity, and teleportation sweeps as CSV.

use clap::{Args, Parser, Subcommand};
use spintel_cli::{
    load_preset, parse_config, preset_names, render_evolution_csv, render_scenario_csv,
    render_spectrum_csv, ConfigError, Protocol, Scenario, ScenarioError,
};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(
    name = "spintel",
    about = "Two-qubit Heisenberg XYZ chain under intrinsic dephasing: \
             spectra, negativity, and teleportation quality as CSV",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues and eigenvectors of the scenario Hamiltonian
    Spectrum(SourceArgs),
    /// Density-matrix trajectory over the time grid
    Evolve(SourceArgs),
    /// Sweep reporting channel negativity only
    Negativity(SourceArgs),
    /// Sweep reporting Bell probabilities and the maximal fidelity
    T0(SourceArgs),
    /// Sweep reporting entanglement-teleportation figures of merit
    T1(SourceArgs),
    /// Run the scenario with its configured protocol
    Sweep(SourceArgs),
    /// List the bundled presets
    Presets,
}

#[derive(Args)]
struct SourceArgs {
    /// Path to a `key = value` scenario config
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Name of a bundled preset (see `spintel presets`)
    #[arg(long)]
    preset: Option<String>,
    /// Output path, or `-` for stdout
    #[arg(long, default_value = "-")]
    out: String,
    /// Output format; only `csv` is supported
    #[arg(long, default_value = "csv")]
    format: String,
}

enum RunError {
    Config(String),
    Numeric(String),
    Io(String),
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e.to_string())
    }
}

impl From<ScenarioError> for RunError {
    fn from(e: ScenarioError) -> Self {
        match e {
            ScenarioError::Invalid(msg) => RunError::Config(msg),
            ScenarioError::Numeric(err) => RunError::Numeric(err.to_string()),
        }
    }
}

fn load_scenario(args: &SourceArgs) -> Result<Scenario, RunError> {
    if args.format != "csv" {
        return Err(RunError::Config(format!(
            "unsupported format `{}` (only csv)",
            args.format
        )));
    }
    match (&args.config, &args.preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
            Ok(parse_config(&text)?)
        }
        (None, Some(name)) => Ok(load_preset(name)?),
        (None, None) => Err(RunError::Config(
            "one of --config or --preset is required".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

fn emit(args: &SourceArgs, text: &str) -> Result<(), RunError> {
    if args.out == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| RunError::Io(e.to_string()))
    } else {
        std::fs::write(&args.out, text).map_err(|e| RunError::Io(format!("{}: {e}", args.out)))
    }
}

fn run(command: &Command) -> Result<(), RunError> {
    match command {
        Command::Presets => {
            let mut stdout = std::io::stdout();
            for name in preset_names() {
                writeln!(stdout, "{name}").map_err(|e| RunError::Io(e.to_string()))?;
            }
            Ok(())
        }
        Command::Spectrum(args) => {
            let scenario = load_scenario(args)?;
            emit(args, &render_spectrum_csv(&scenario)?)
        }
        Command::Evolve(args) => {
            let scenario = load_scenario(args)?;
            emit(args, &render_evolution_csv(&scenario)?)
        }
        Command::Negativity(args)
        | Command::T0(args)
        | Command::T1(args)
        | Command::Sweep(args) => {
            let mut scenario = load_scenario(args)?;
            match command {
                Command::Negativity(_) => scenario.protocol = Protocol::None,
                Command::T0(_) => scenario.protocol = Protocol::T0,
                Command::T1(_) => scenario.protocol = Protocol::T1,
                _ => {}
            }
            emit(args, &render_scenario_csv(&scenario)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
        Err(RunError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_NUMERIC)
        }
        Err(RunError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
