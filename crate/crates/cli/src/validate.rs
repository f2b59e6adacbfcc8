//! Analytic results against the Fock-space oracle, row by row.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;

use vibronic::analytic::{overlap_quadratic, phonon_number_quadratic, spectrum_zero_t, vacuum_ground_phonon_number};
use vibronic::oracle::{
    build_excited_hamiltonian, excited_vacuum, franck_condon_weights, observable, return_overlaps, thermal_correlation,
    Propagator, TruncatedBasis,
};
use vibronic::{derive_couplings, Preset};

use crate::commands::{correlation_at, thermal_oracle_dim};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{Column, Table, Values};

pub const TOLERANCE: f64 = 1e-6;

/// Sample points in units of `ω_e t`.
const PHASES: [f64; 5] = [0.3, 1.1, FRAC_PI_2, 2.9, 5.0];
const LINES: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub name: String,
    pub params: String,
    pub analytic: f64,
    pub oracle: Option<f64>,
    pub tolerance: f64,
    pub note: String,
}

impl Row {
    pub fn abs_diff(&self) -> Option<f64> {
        self.oracle.map(|o| (self.analytic - o).abs())
    }

    pub fn pass(&self) -> bool {
        self.abs_diff().is_some_and(|d| d <= self.tolerance)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub rows: Vec<Row>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(Row::pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass()).count()
    }

    /// Adds one row per `(name, analytic)` pair; when the oracle failed,
    /// every row records the failure.
    fn extend(&mut self, params: &str, analytic: Vec<(String, f64)>, oracle: Result<Vec<f64>, CliError>) {
        match oracle {
            Ok(values) => {
                for ((name, a), o) in analytic.into_iter().zip(values) {
                    self.rows.push(Row {
                        name,
                        params: params.to_string(),
                        analytic: a,
                        oracle: Some(o),
                        tolerance: TOLERANCE,
                        note: String::new(),
                    });
                }
            }
            Err(e) => {
                let note = e.to_string();
                for (name, a) in analytic {
                    self.rows.push(Row {
                        name,
                        params: params.to_string(),
                        analytic: a,
                        oracle: None,
                        tolerance: TOLERANCE,
                        note: note.clone(),
                    });
                }
            }
        }
    }

    pub fn to_table(&self) -> Table {
        let mut table = Table::default();
        let rows = &self.rows;
        table.push(Column {
            name: "name",
            unit: "-",
            values: Values::Labels(rows.iter().map(|r| r.name.clone()).collect()),
        });
        table.push(Column {
            name: "params",
            unit: "-",
            values: Values::Labels(rows.iter().map(|r| r.params.clone()).collect()),
        });
        table.push(Column::numbers(
            "analytic",
            "natural",
            rows.iter().map(|r| r.analytic).collect(),
        ));
        table.push(Column {
            name: "oracle",
            unit: "natural",
            values: Values::Optional(rows.iter().map(|r| r.oracle).collect()),
        });
        table.push(Column {
            name: "abs_diff",
            unit: "natural",
            values: Values::Optional(rows.iter().map(Row::abs_diff).collect()),
        });
        table.push(Column::numbers(
            "tolerance",
            "natural",
            rows.iter().map(|r| r.tolerance).collect(),
        ));
        table.push(Column {
            name: "pass",
            unit: "-",
            values: Values::Flags(rows.iter().map(Row::pass).collect()),
        });
        table.push(Column {
            name: "note",
            unit: "-",
            values: Values::Labels(rows.iter().map(|r| r.note.clone()).collect()),
        });
        table
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let oracle = r.oracle.map_or_else(|| "-".to_string(), |o| format!("{o:.12}"));
            let diff = r.abs_diff().map_or_else(|| "-".to_string(), |d| format!("{d:.2e}"));
            let status = if r.pass() { "pass" } else { "FAIL" };
            let _ = write!(
                out,
                "{status}  {:<15} {:<22} analytic {:>16.12}  oracle {:>16}  diff {:>9}",
                r.params, r.name, r.analytic, oracle, diff
            );
            if !r.note.is_empty() {
                let _ = write!(out, "  ({})", r.note);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "overall: {} ({} of {} rows failed, tolerance {TOLERANCE:e})",
            if self.pass() { "PASS" } else { "FAIL" },
            self.failures(),
            self.rows.len()
        );
        out
    }
}

fn check_parameter_set(report: &mut ValidationReport, config: &RunConfig) -> Result<(), CliError> {
    let params = &config.model;
    let label = config.source.as_str();
    let c = derive_couplings(params)?;
    let p = config.initial_p;
    let times: Vec<f64> = PHASES.iter().map(|&phase| phase / c.omega_e).collect();
    let basis = TruncatedBasis::new(config.oracle_dim)?;

    report.extend(
        label,
        vec![("vacuum_phonons".into(), vacuum_ground_phonon_number(&c))],
        excited_vacuum(params, &basis)
            .and_then(|v| observable(&v, &basis.number()))
            .map(|n| vec![n])
            .map_err(CliError::from),
    );

    let mut analytic = Vec::new();
    for &t in &times {
        analytic.push((
            format!("overlap_sq(t={t:.4})"),
            overlap_quadratic(p, &c, t)?.probability(),
        ));
    }
    let oracle = return_overlaps(params, &basis, p, &times)
        .map(|a| a.iter().map(|z| z.norm_sqr()).collect())
        .map_err(CliError::from);
    report.extend(label, analytic, oracle);

    let mut analytic = Vec::new();
    for &t in &times {
        analytic.push((format!("ground_phonons(t={t:.4})"), phonon_number_quadratic(p, &c, t)?));
    }
    let oracle = (|| {
        let propagator = Propagator::new(&build_excited_hamiltonian(params, &basis)?)?;
        let initial = basis.fock(p)?;
        times
            .iter()
            .map(|&t| observable(&propagator.evolve(&initial, t)?, &basis.number()))
            .collect::<Result<Vec<_>, _>>()
    })()
    .map_err(CliError::from);
    report.extend(label, analytic, oracle);

    let lines = spectrum_zero_t(&c, LINES - 1)?;
    let analytic = lines
        .iter()
        .enumerate()
        .map(|(n, l)| (format!("line_weight(n={n})"), l.weight / TAU))
        .collect();
    let oracle = franck_condon_weights(params, &basis)
        .map(|fc| fc.into_iter().take(LINES).collect())
        .map_err(CliError::from);
    report.extend(label, analytic, oracle);

    let mut analytic = Vec::new();
    for &t in &times {
        let g = correlation_at(config, &c, t)?.value;
        analytic.push((format!("re_g(t={t:.4})"), g.re));
        analytic.push((format!("im_g(t={t:.4})"), g.im));
    }
    let oracle = TruncatedBasis::new(thermal_oracle_dim(config))
        .and_then(|b| thermal_correlation(params, &config.thermal, &b, &times))
        .map(|g| g.iter().flat_map(|s| [s.value.re, s.value.im]).collect())
        .map_err(CliError::from);
    report.extend(label, analytic, oracle);
    Ok(())
}

/// Runs the comparison for `config` (if any) and for the built-in presets,
/// all at `oracle_dim`.
pub fn validate(config: Option<&RunConfig>, oracle_dim: usize) -> Result<ValidationReport, CliError> {
    let mut sets: Vec<RunConfig> = config.into_iter().cloned().collect();
    for preset in Preset::ALL {
        if sets.iter().all(|s| s.source != preset.name()) {
            sets.push(RunConfig::from_preset(preset));
        }
    }
    let mut report = ValidationReport::default();
    for mut set in sets {
        set.set_oracle_dim(oracle_dim)?;
        check_parameter_set(&mut report, &set)?;
    }
    Ok(report)
}
