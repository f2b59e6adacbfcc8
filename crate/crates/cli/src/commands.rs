use std::f64::consts::TAU;

use vibronic::analytic::{
    correlation_linear, correlation_quadratic, excited_phonon_number, lorentzian_profile, overlap_linear,
    overlap_quadratic, phonon_number_linear, phonon_number_quadratic, spectrum_finite_t, spectrum_zero_t_auto,
    FiniteTemperatureOptions,
};
use vibronic::oracle::{
    build_excited_hamiltonian, franck_condon_weights, observable, return_overlaps, thermal_correlation,
    thermal_line_list, Propagator, TruncatedBasis,
};
use vibronic::{derive_couplings, CorrelationSample, Couplings, SpectralLine};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{Column, Table, Values};

const TIME: &str = "1/energy";
const ENERGY: &str = "energy";
const PURE: &str = "1";

pub fn couplings(config: &RunConfig) -> Result<Table, CliError> {
    let c = derive_couplings(&config.model)?;
    let rows: [(&str, f64); 12] = [
        ("omega_g", c.omega_g),
        ("omega_e", c.omega_e),
        ("shift_l", config.model.shift_l),
        ("gamma_plus", c.gamma_plus),
        ("gamma_minus", c.gamma_minus),
        ("lambda_g", c.lambda_g),
        ("lambda_e", c.lambda_e),
        ("lambda1", c.lambda1),
        ("lambda2", c.lambda2),
        ("huang_rhys", c.huang_rhys()),
        ("epsilon_e_prime", c.epsilon_e_prime),
        ("omega_eg", c.omega_eg),
    ];
    let mut table = Table::default();
    table.push(Column {
        name: "quantity",
        unit: "-",
        values: Values::Labels(rows.iter().map(|(n, _)| n.to_string()).collect()),
    });
    table.push(Column::numbers("value", "natural", rows.iter().map(|r| r.1).collect()));
    Ok(table)
}

fn oracle_basis(config: &RunConfig) -> Result<TruncatedBasis, CliError> {
    Ok(TruncatedBasis::new(config.oracle_dim)?)
}

pub fn evolve(config: &RunConfig, with_oracle: bool) -> Result<Table, CliError> {
    let c = derive_couplings(&config.model)?;
    let p = config.initial_p;
    let times = config.time_grid.values();
    let linear = c.equal_frequencies();

    let mut overlap = Vec::with_capacity(times.len());
    let mut ground = Vec::with_capacity(times.len());
    for &t in &times {
        if linear {
            overlap.push(overlap_linear(p, c.lambda_g, c.omega_g, t).probability());
            ground.push(phonon_number_linear(p, c.lambda_g, c.omega_g, t));
        } else {
            overlap.push(overlap_quadratic(p, &c, t)?.probability());
            ground.push(phonon_number_quadratic(p, &c, t)?);
        }
    }

    let mut table = Table::default();
    table.push(Column::numbers("t", TIME, times.clone()));
    table.push(Column::numbers("overlap_sq", PURE, overlap));
    table.push(Column::numbers("ground_phonons", PURE, ground));
    if linear {
        let excited = excited_phonon_number(p, &c)?;
        table.push(Column::numbers("excited_phonons", PURE, vec![excited; times.len()]));
    }

    if with_oracle {
        let basis = oracle_basis(config)?;
        let amplitudes = return_overlaps(&config.model, &basis, p, &times)?;
        let propagator = Propagator::new(&build_excited_hamiltonian(&config.model, &basis)?)?;
        let initial = basis.fock(p)?;
        let number = basis.number();
        let phonons = times
            .iter()
            .map(|&t| observable(&propagator.evolve(&initial, t)?, &number))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(Column::numbers(
            "oracle_overlap_sq",
            PURE,
            amplitudes.iter().map(|a| a.norm_sqr()).collect(),
        ));
        table.push(Column::numbers("oracle_ground_phonons", PURE, phonons));
    }
    Ok(table)
}

pub fn correlation_at(config: &RunConfig, c: &Couplings, t: f64) -> Result<CorrelationSample, CliError> {
    Ok(if c.equal_frequencies() {
        correlation_linear(&config.thermal, c, t)?
    } else {
        correlation_quadratic(&config.thermal, c, t)?
    })
}

/// Thermal traces need room for the hot initial states; the oracle runs
/// at twice the configured dimension for them.
pub fn thermal_oracle_dim(config: &RunConfig) -> usize {
    if config.thermal.is_zero_temperature() {
        config.oracle_dim
    } else {
        2 * config.oracle_dim
    }
}

pub fn correlation(config: &RunConfig, with_oracle: bool) -> Result<Table, CliError> {
    let c = derive_couplings(&config.model)?;
    let times = config.time_grid.values();
    let samples = times
        .iter()
        .map(|&t| correlation_at(config, &c, t))
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::default();
    table.push(Column::numbers("t", TIME, times.clone()));
    table.push(Column::numbers(
        "re_g",
        PURE,
        samples.iter().map(|s| s.value.re).collect(),
    ));
    table.push(Column::numbers(
        "im_g",
        PURE,
        samples.iter().map(|s| s.value.im).collect(),
    ));
    table.push(Column::numbers(
        "abs_g_sq",
        PURE,
        samples.iter().map(|s| s.value.norm_sqr()).collect(),
    ));
    if with_oracle {
        let basis = TruncatedBasis::new(thermal_oracle_dim(config))?;
        let oracle = thermal_correlation(&config.model, &config.thermal, &basis, &times)?;
        table.push(Column::numbers(
            "oracle_re_g",
            PURE,
            oracle.iter().map(|s| s.value.re).collect(),
        ));
        table.push(Column::numbers(
            "oracle_im_g",
            PURE,
            oracle.iter().map(|s| s.value.im).collect(),
        ));
    }
    Ok(table)
}

pub fn spectrum(config: &RunConfig, with_oracle: bool) -> Result<Table, CliError> {
    let c = derive_couplings(&config.model)?;
    let mut table = Table::default();

    if config.thermal.is_zero_temperature() {
        let mut lines = spectrum_zero_t_auto(&c)?;
        let oracle = if with_oracle {
            // only the lowest quarter of the truncated spectrum is reliable
            lines.truncate((config.oracle_dim / 4).max(1));
            Some(franck_condon_weights(&config.model, &oracle_basis(config)?)?)
        } else {
            None
        };
        table.push(Column::numbers("n", PURE, (0..lines.len()).map(|n| n as f64).collect()));
        table.push(Column::numbers(
            "offset",
            ENERGY,
            lines.iter().map(|l| l.offset).collect(),
        ));
        table.push(Column::numbers(
            "frequency",
            ENERGY,
            lines.iter().map(|l| c.omega_eg + l.offset).collect(),
        ));
        table.push(Column::numbers(
            "weight",
            PURE,
            lines.iter().map(|l| l.weight).collect(),
        ));
        table.push(Column::numbers(
            "weight_over_2pi",
            PURE,
            lines.iter().map(|l| l.weight / TAU).collect(),
        ));
        if let Some(fc) = oracle {
            table.push(Column::numbers(
                "oracle_weight_over_2pi",
                PURE,
                fc[..lines.len()].to_vec(),
            ));
        }
        return Ok(table);
    }

    let grid = config.freq_grid.values();
    let absorption = spectrum_finite_t(
        &config.thermal,
        &c,
        &grid,
        &FiniteTemperatureOptions::with_eta(config.eta),
    )?;
    table.push(Column::numbers("w", ENERGY, grid.clone()));
    table.push(Column::numbers("absorption", TIME, absorption));
    if with_oracle {
        let basis = TruncatedBasis::new(thermal_oracle_dim(config))?;
        let lines: Vec<SpectralLine> = thermal_line_list(&config.model, &config.thermal, &basis)?
            .into_iter()
            .map(|l| SpectralLine {
                offset: l.offset,
                weight: l.weight,
            })
            .collect();
        table.push(Column::numbers(
            "oracle_absorption",
            TIME,
            lorentzian_profile(&lines, c.omega_eg, config.eta, &grid),
        ));
    }
    Ok(table)
}
