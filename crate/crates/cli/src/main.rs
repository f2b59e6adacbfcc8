mod commands;
mod config;
mod error;
mod output;
mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vibronic::Preset;

use crate::config::{OutputFormat, RunConfig, DEFAULT_ORACLE_DIM};
use crate::error::CliError;
use crate::output::{emit, meta};

#[derive(Parser)]
#[command(
    name = "vibronic",
    version,
    about = "Vibronic dynamics and absorption spectra with linear and quadratic phonon coupling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derived coupling constants.
    Couplings(Options),
    /// Overlap and phonon numbers of an evolving ground-phonon Fock state.
    Evolve(Options),
    /// Thermal dipole correlation function.
    Correlation(Options),
    /// Absorption spectrum: line list at T = 0, sampled A(w) otherwise.
    Spectrum(Options),
    /// Compare closed forms against the truncated Fock-space solver.
    Validate(Options),
}

fn parse_preset(name: &str) -> Result<Preset, String> {
    name.parse().map_err(|_| {
        let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
        format!("unknown preset `{name}` (expected one of {})", names.join(", "))
    })
}

#[derive(clap::Args)]
struct Options {
    /// Run configuration file (flat TOML).
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in parameter set.
    #[arg(long, value_parser = parse_preset)]
    preset: Option<Preset>,
    /// Add columns computed by the Fock-space solver.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Truncation of the Fock-space solver.
    #[arg(long)]
    oracle_dim: Option<usize>,
    /// Damping rate for the finite-temperature spectrum.
    #[arg(long)]
    eta: Option<f64>,
}

impl Options {
    fn load(&self) -> Result<Option<RunConfig>, CliError> {
        let mut config = match (&self.config, self.preset) {
            (Some(path), _) => RunConfig::from_file(path)?,
            (None, Some(preset)) => RunConfig::from_preset(preset),
            (None, None) => return Ok(None),
        };
        if let Some(format) = self.format {
            config.format = format;
        }
        if let Some(out) = &self.out {
            config.output = Some(out.clone());
        }
        if let Some(dim) = self.oracle_dim {
            config.set_oracle_dim(dim)?;
        }
        if let Some(eta) = self.eta {
            config.set_eta(eta)?;
        }
        Ok(Some(config))
    }

    fn require(&self) -> Result<RunConfig, CliError> {
        self.load()?
            .ok_or_else(|| CliError::config("one of --config or --preset is required"))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (name, options) = match &cli.command {
        Command::Couplings(o) => ("couplings", o),
        Command::Evolve(o) => ("evolve", o),
        Command::Correlation(o) => ("correlation", o),
        Command::Spectrum(o) => ("spectrum", o),
        Command::Validate(o) => ("validate", o),
    };

    if let Command::Validate(_) = cli.command {
        let config = options.load()?;
        let dim = config
            .as_ref()
            .map_or(options.oracle_dim.unwrap_or(DEFAULT_ORACLE_DIM), |c| c.oracle_dim);
        let report = validate::validate(config.as_ref(), dim)?;
        print!("{}", report.render());
        let format = config
            .as_ref()
            .map_or(options.format.unwrap_or(OutputFormat::Csv), |c| c.format);
        let out = config
            .as_ref()
            .and_then(|c| c.output.clone())
            .or_else(|| options.out.clone());
        if let Some(path) = out {
            let echo = config
                .as_ref()
                .map_or(serde_json::json!({ "oracle_dim": dim }), RunConfig::echo);
            let mut m = meta(name, echo);
            m["pass"] = serde_json::json!(report.pass());
            emit(&report.to_table(), m, format, Some(&path))?;
        }
        return if report.pass() {
            Ok(())
        } else {
            Err(CliError::Validation(format!(
                "{} of {} rows failed",
                report.failures(),
                report.rows.len()
            )))
        };
    }

    let config = options.require()?;
    let table = match cli.command {
        Command::Couplings(_) => commands::couplings(&config)?,
        Command::Evolve(_) => commands::evolve(&config, options.oracle)?,
        Command::Correlation(_) => commands::correlation(&config, options.oracle)?,
        Command::Spectrum(_) => commands::spectrum(&config, options.oracle)?,
        Command::Validate(_) => unreachable!(),
    };
    emit(
        &table,
        meta(name, config.echo()),
        config.format,
        config.output.as_deref(),
    )
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vibronic: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
