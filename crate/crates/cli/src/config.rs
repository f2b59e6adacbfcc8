use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use vibronic::{derive_couplings, ModelParams, Preset, ThermalParams};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// Uniform grid of `points` values from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid {
    fn checked(name: &str, min: f64, max: f64, points: usize) -> Result<Self, CliError> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(CliError::config(format!("{name} grid bounds must be finite")));
        }
        if points == 0 {
            return Err(CliError::config(format!("{name}_points must be at least 1")));
        }
        if points > 1 && max <= min {
            return Err(CliError::config(format!("{name}_max must be greater than {name}_min")));
        }
        Ok(Self { min, max, points })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|k| {
                if k + 1 == self.points {
                    self.max
                } else {
                    self.min + step * k as f64
                }
            })
            .collect()
    }

    fn echo(&self) -> Value {
        json!({ "min": self.min, "max": self.max, "points": self.points })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Preset name or config file path.
    pub source: String,
    pub model: ModelParams,
    pub thermal: ThermalParams,
    pub initial_p: usize,
    pub time_grid: Grid,
    pub freq_grid: Grid,
    pub eta: f64,
    pub oracle_dim: usize,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Beta {
    Number(f64),
    Text(String),
}

/// On-disk configuration: a flat table of keys, all optional except the
/// frequencies and exactly one of `shift_l` / `lambda_g`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    omega_g: Option<f64>,
    omega_e: Option<f64>,
    shift_l: Option<f64>,
    lambda_g: Option<f64>,
    epsilon_g: Option<f64>,
    epsilon_e: Option<f64>,
    beta: Option<Beta>,
    initial_p: Option<usize>,
    t_min: Option<f64>,
    t_max: Option<f64>,
    t_points: Option<usize>,
    w_min: Option<f64>,
    w_max: Option<f64>,
    w_points: Option<usize>,
    eta: Option<f64>,
    oracle_dim: Option<usize>,
    format: Option<OutputFormat>,
    output: Option<PathBuf>,
}

pub const DEFAULT_ORACLE_DIM: usize = 128;
const DEFAULT_TIME_POINTS: usize = 400;
const DEFAULT_FREQ_POINTS: usize = 1201;

fn parse_beta(beta: Option<Beta>) -> Result<ThermalParams, CliError> {
    let value = match beta {
        None => return Ok(ThermalParams::zero_temperature()),
        Some(Beta::Number(v)) => v,
        Some(Beta::Text(s)) if s == "inf" => f64::INFINITY,
        Some(Beta::Text(s)) => {
            return Err(CliError::config(format!(
                "beta: expected a positive number or \"inf\", found \"{s}\""
            )))
        }
    };
    ThermalParams::new(value).map_err(|e| CliError::config(format!("beta: {e}")))
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml(&text, &path.display().to_string())
    }

    pub fn from_toml(text: &str, source: &str) -> Result<Self, CliError> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::config(format!("{source}: {e}")))?;
        let require = |value: Option<f64>, field: &str| {
            value.ok_or_else(|| CliError::config(format!("{source}: missing required field `{field}`")))
        };
        let omega_g = require(raw.omega_g, "omega_g")?;
        let omega_e = require(raw.omega_e, "omega_e")?;
        let epsilon_g = raw.epsilon_g.unwrap_or(0.0);
        let epsilon_e = raw.epsilon_e.unwrap_or(0.0);
        let model = match (raw.shift_l, raw.lambda_g) {
            (Some(l), None) => ModelParams::new(epsilon_g, epsilon_e, omega_g, omega_e, l),
            (None, Some(lambda_g)) => ModelParams::from_lambda_g(epsilon_g, epsilon_e, omega_g, omega_e, lambda_g),
            _ => {
                return Err(CliError::config(format!(
                    "{source}: exactly one of `shift_l` and `lambda_g` must be given"
                )))
            }
        }
        .map_err(|e| CliError::config(format!("{source}: {e}")))?;
        let thermal = parse_beta(raw.beta).map_err(|e| CliError::config(format!("{source}: {e}")))?;

        let mut config = Self::defaults(source.to_string(), model, thermal);
        let t = config.time_grid;
        config.time_grid = Grid::checked(
            "t",
            raw.t_min.unwrap_or(t.min),
            raw.t_max.unwrap_or(t.max),
            raw.t_points.unwrap_or(t.points),
        )?;
        let w = config.freq_grid;
        config.freq_grid = Grid::checked(
            "w",
            raw.w_min.unwrap_or(w.min),
            raw.w_max.unwrap_or(w.max),
            raw.w_points.unwrap_or(w.points),
        )?;
        config.initial_p = raw.initial_p.unwrap_or(0);
        if let Some(eta) = raw.eta {
            config.set_eta(eta)?;
        }
        if let Some(dim) = raw.oracle_dim {
            config.set_oracle_dim(dim)?;
        }
        if let Some(format) = raw.format {
            config.format = format;
        }
        config.output = raw.output;
        Ok(config)
    }

    pub fn from_preset(preset: Preset) -> Self {
        Self::defaults(preset.name().to_string(), preset.params(), preset.thermal())
    }

    fn defaults(source: String, model: ModelParams, thermal: ThermalParams) -> Self {
        let c = derive_couplings(&model).expect("validated parameters");
        let zero_point = 0.5 * (model.omega_e - model.omega_g);
        let centre = c.omega_eg + zero_point;
        Self {
            source,
            model,
            thermal,
            initial_p: 0,
            time_grid: Grid {
                min: 0.0,
                max: 4.0 * PI / model.omega_e,
                points: DEFAULT_TIME_POINTS,
            },
            freq_grid: Grid {
                min: centre - 4.0 * model.omega_g,
                max: centre + 8.0 * model.omega_e,
                points: DEFAULT_FREQ_POINTS,
            },
            eta: 0.05 * model.omega_g.min(model.omega_e),
            oracle_dim: DEFAULT_ORACLE_DIM,
            format: OutputFormat::Csv,
            output: None,
        }
    }

    pub fn set_eta(&mut self, eta: f64) -> Result<(), CliError> {
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(CliError::config(format!("eta: damping must be positive, found {eta}")));
        }
        self.eta = eta;
        Ok(())
    }

    pub fn set_oracle_dim(&mut self, dim: usize) -> Result<(), CliError> {
        if dim < 2 {
            return Err(CliError::config(format!("oracle_dim: must be at least 2, found {dim}")));
        }
        self.oracle_dim = dim;
        Ok(())
    }

    /// Configuration echo for output metadata.
    pub fn echo(&self) -> Value {
        let beta = if self.thermal.is_zero_temperature() {
            json!("inf")
        } else {
            json!(self.thermal.beta)
        };
        json!({
            "source": self.source,
            "omega_g": self.model.omega_g,
            "omega_e": self.model.omega_e,
            "shift_l": self.model.shift_l,
            "epsilon_g": self.model.epsilon_g,
            "epsilon_e": self.model.epsilon_e,
            "beta": beta,
            "initial_p": self.initial_p,
            "time_grid": self.time_grid.echo(),
            "freq_grid": self.freq_grid.echo(),
            "eta": self.eta,
            "oracle_dim": self.oracle_dim,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let c = RunConfig::from_toml("omega_g = 1.0\nomega_e = 2\nlambda_g = 1.0\n", "test").unwrap();
        assert_eq!(c.model, Preset::Fig2Both.params());
        assert!(c.thermal.is_zero_temperature());
        assert_eq!(c.time_grid.values().len(), DEFAULT_TIME_POINTS);
        assert_eq!(*c.time_grid.values().last().unwrap(), 2.0 * PI);
    }

    #[test]
    fn missing_frequency_names_the_field() {
        let err = RunConfig::from_toml("omega_g = 1.0\nlambda_g = 0.5\n", "cfg.toml").unwrap_err();
        assert!(err.to_string().contains("omega_e"), "{err}");
    }

    #[test]
    fn shift_and_lambda_are_exclusive() {
        let both = RunConfig::from_toml("omega_g = 1\nomega_e = 1\nlambda_g = 1\nshift_l = 1\n", "x");
        let neither = RunConfig::from_toml("omega_g = 1\nomega_e = 1\n", "x");
        assert!(both.is_err() && neither.is_err());
    }

    #[test]
    fn beta_accepts_inf_and_numbers() {
        let hot = RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nbeta = 0.5\n", "x").unwrap();
        assert_eq!(hot.thermal.beta, 0.5);
        let cold = RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nbeta = \"inf\"\n", "x").unwrap();
        assert!(cold.thermal.is_zero_temperature());
        assert!(RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nbeta = \"hot\"\n", "x").is_err());
        assert!(RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nbeta = -1\n", "x").is_err());
    }

    #[test]
    fn rejects_unknown_keys_and_bad_grids() {
        assert!(RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nomega = 2\n", "x").is_err());
        let err =
            RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nt_min = 2\nt_max = 1\n", "x").unwrap_err();
        assert!(err.to_string().contains("t_max"));
        assert!(RunConfig::from_toml("omega_g = 1\nomega_e = 1\nshift_l = 1\nw_points = 0\n", "x").is_err());
    }
}
