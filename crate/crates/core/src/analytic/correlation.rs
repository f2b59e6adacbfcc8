use num_complex::Complex64;

use super::overlap::generating_function;
use super::CorrelationSample;
use crate::error::{Error, Result};
use crate::model::{time_coeffs, Couplings, ThermalParams};

/// Thermal correlation function for a pure shift,
/// `e^{-iΩ_eg t} e^{-ΛΛ_t*} e^{-p̄|Λ_t|²}`.
pub fn correlation_linear(th: &ThermalParams, c: &Couplings, t: f64) -> Result<CorrelationSample> {
    c.require_equal_frequencies("correlation_linear")?;
    if t == 0.0 {
        return Ok(CorrelationSample {
            t,
            value: Complex64::new(1.0, 0.0),
        });
    }
    let lam_t = time_coeffs(c, t)?.lam_t;
    let occupation = th.mean_occupation(c.omega_g);
    let exponent = -c.lambda_g * lam_t.conj() - occupation * lam_t.norm_sqr();
    Ok(CorrelationSample {
        t,
        value: Complex64::cis(-c.omega_eg * t) * exponent.exp(),
    })
}

/// Argument at which the generating function resums the thermal average,
/// `e^{-βω_g} (γ+² e^{i(ω_g-ω_e)t} - γ-² e^{i(ω_g+ω_e)t})`.
pub fn thermal_argument(th: &ThermalParams, c: &Couplings, t: f64) -> Complex64 {
    let ratio = th.boltzmann_ratio(c.omega_g);
    if ratio == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let (gp, gm) = (c.gamma_plus, c.gamma_minus);
    ratio
        * (gp * gp * Complex64::cis((c.omega_g - c.omega_e) * t)
            - gm * gm * Complex64::cis((c.omega_g + c.omega_e) * t))
}

/// Thermal correlation function for arbitrary frequencies and shift,
/// `Z_g^{-1} e^{-iΩ_eg t} e^{i(ω_g-ω_e)t/2} K̃(x_β(t))`.
pub fn correlation_quadratic(th: &ThermalParams, c: &Couplings, t: f64) -> Result<CorrelationSample> {
    if t == 0.0 {
        return Ok(CorrelationSample {
            t,
            value: Complex64::new(1.0, 0.0),
        });
    }
    let x = thermal_argument(th, c, t);
    let k = generating_function(x, c, t).map_err(|source| Error::Thermal {
        beta: th.beta,
        t,
        source: Box::new(source),
    })?;
    let phase = Complex64::cis(-c.omega_eg * t + 0.5 * (c.omega_g - c.omega_e) * t);
    Ok(CorrelationSample {
        t,
        value: phase * k / th.partition(c.omega_g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::tilde_zero;
    use crate::model::{derive_couplings, ModelParams};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn couplings(omega_e: f64, lambda_g: f64, epsilon_e: f64) -> Couplings {
        derive_couplings(&ModelParams::from_lambda_g(0.0, epsilon_e, 1.0, omega_e, lambda_g).unwrap()).unwrap()
    }

    #[test]
    fn normalized_at_origin() {
        let th = ThermalParams::new(0.7).unwrap();
        for c in [
            couplings(1.0, 1.0, 3.0),
            couplings(2.0, 1.0, 3.0),
            couplings(0.4, 2.0, -1.0),
        ] {
            assert_eq!(
                correlation_quadratic(&th, &c, 0.0).unwrap().value,
                Complex64::new(1.0, 0.0)
            );
        }
        let c = couplings(1.0, 1.0, 3.0);
        assert_eq!(
            correlation_linear(&th, &c, 0.0).unwrap().value,
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn zero_temperature_linear() {
        let c = couplings(1.0, 1.0, 0.0);
        let g = correlation_linear(&ThermalParams::zero_temperature(), &c, PI).unwrap();
        assert_abs_diff_eq!(g.value.norm(), (-2.0f64).exp(), epsilon = 1e-15);
    }

    #[test]
    fn finite_temperature_linear() {
        let c = couplings(1.0, 1.0, 0.0);
        let th = ThermalParams::new(1.0).unwrap();
        let occupation = 1.0 / (1f64.exp() - 1.0);
        let g = correlation_linear(&th, &c, PI).unwrap();
        assert_abs_diff_eq!(g.value.norm(), (-2.0 - 4.0 * occupation).exp(), epsilon = 1e-14);
    }

    #[test]
    fn linear_requires_equal_frequencies() {
        let c = couplings(2.0, 1.0, 0.0);
        assert!(correlation_linear(&ThermalParams::zero_temperature(), &c, 1.0).is_err());
    }

    #[test]
    fn quadratic_reduces_to_linear() {
        let c = couplings(1.0, 0.8, 1.5);
        for beta in [f64::INFINITY, 2.0, 0.6] {
            let th = ThermalParams::new(beta).unwrap();
            for k in 1..50 {
                let t = 0.29 * k as f64;
                let a = correlation_quadratic(&th, &c, t).unwrap().value;
                let b = correlation_linear(&th, &c, t).unwrap().value;
                assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn zero_temperature_quadratic() {
        let c = couplings(2.0, 0.0, 0.0);
        let g = correlation_quadratic(&ThermalParams::zero_temperature(), &c, PI / 4.0).unwrap();
        assert_abs_diff_eq!(g.value.norm_sqr(), 0.8, epsilon = 1e-14);

        let c = couplings(2.0, 1.0, 0.5);
        let t = 1.3;
        let g = correlation_quadratic(&ThermalParams::zero_temperature(), &c, t).unwrap();
        let expected = Complex64::cis(-0.5 * t - 0.5 * t) * tilde_zero(&c, t);
        assert_abs_diff_eq!((g.value - expected).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn thermal_argument_stays_inside_the_disc() {
        // |x| = e^{-βω_g} |1 ± Q̃_t| holds identically
        for (omega_e, beta) in [(25.0, 0.01), (0.04, 0.05), (2.0, 0.5)] {
            let c = couplings(omega_e, 1.0, 0.0);
            let th = ThermalParams::new(beta).unwrap();
            for k in 0..200 {
                let t = 0.0137 * k as f64;
                let x = thermal_argument(&th, &c, t);
                let radius = (1.0 - time_coeffs(&c, t).unwrap().q_tilde).norm();
                assert_abs_diff_eq!(x.norm(), (-beta).exp() * radius, epsilon = 1e-12 * radius);
                assert!(correlation_quadratic(&th, &c, t).is_ok());
            }
        }
    }
}
