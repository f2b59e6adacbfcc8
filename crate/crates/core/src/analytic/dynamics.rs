use crate::error::Result;
use crate::model::{time_coeffs, Couplings};

/// Ground-phonon number of `|p_{g;t}>` for a pure shift, `p + 4Λ² sin²(ωt/2)`.
pub fn phonon_number_linear(p: usize, lambda: f64, omega: f64, t: f64) -> f64 {
    let s = (0.5 * omega * t).sin();
    p as f64 + 4.0 * lambda * lambda * s * s
}

/// Ground-phonon number of `|p_{g;t}>`, `p|D̃'|² + (p+1)|Q̃'|² + |Λ̃'|²`.
pub fn phonon_number_quadratic(p: usize, c: &Couplings, t: f64) -> Result<f64> {
    let tc = time_coeffs(c, t)?;
    let p = p as f64;
    Ok(p * tc.d_tilde_prime.norm_sqr() + (p + 1.0) * tc.q_tilde_prime.norm_sqr() + tc.lam_tilde_prime.norm_sqr())
}

/// Same quantity written as two beating `sin²` terms at `ω_e/2` and `ω_e`.
pub fn phonon_number_quadratic_expanded(p: usize, c: &Couplings, t: f64) -> f64 {
    let (wg, we) = (c.omega_g, c.omega_e);
    let p = p as f64;
    let asym = (we * we - wg * wg) / (we * wg);
    let half = (0.5 * we * t).sin();
    let full = (we * t).sin();
    p + 4.0 * c.lambda_g * c.lambda_g * half * half
        + asym * (c.lambda_e * c.lambda_e + (2.0 * p + 1.0) * asym / 4.0) * full * full
}

/// Constant number of excited phonons in `|p_{g;t}>`, `p + Λ²`. Defined for
/// equal frequencies only.
pub fn excited_phonon_number(p: usize, c: &Couplings) -> Result<f64> {
    c.require_equal_frequencies("excited_phonon_number")?;
    Ok(p as f64 + c.lambda_g * c.lambda_g)
}

/// Mean excited-level energy of the evolving state, `ε_e + ω (p + Λ² + 1/2)`.
/// Defined for equal frequencies only.
pub fn excited_level_energy(p: usize, c: &Couplings) -> Result<f64> {
    let n = excited_phonon_number(p, c)?;
    let epsilon_e = c.epsilon_e_prime - c.omega_e * c.lambda_e * c.lambda_e;
    Ok(epsilon_e + c.omega_e * (n + 0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::model::{derive_couplings, ModelParams};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn couplings(omega_e: f64, lambda_g: f64) -> Couplings {
        derive_couplings(&ModelParams::from_lambda_g(0.0, 0.0, 1.0, omega_e, lambda_g).unwrap()).unwrap()
    }

    #[test]
    fn linear_number_extremes() {
        assert_eq!(phonon_number_linear(3, 1.0, 1.0, 0.0), 3.0);
        assert_abs_diff_eq!(phonon_number_linear(0, 1.0, 1.0, PI), 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(phonon_number_linear(2, 1.0, 1.0, PI / 3.0), 3.0, epsilon = 1e-14);
    }

    #[test]
    fn quadratic_number_quarter_period() {
        let c = couplings(2.0, 0.0);
        assert_abs_diff_eq!(
            phonon_number_quadratic(0, &c, PI / 4.0).unwrap(),
            0.5625,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            phonon_number_quadratic_expanded(0, &c, PI / 4.0),
            0.5625,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(phonon_number_quadratic(4, &c, 0.0).unwrap(), 4.0, epsilon = 1e-14);
    }

    #[test]
    fn both_forms_agree() {
        for (omega_e, lambda_g) in [(2.0, 1.0), (0.5, 0.7), (3.0, 0.0), (1.0, 1.5)] {
            let c = couplings(omega_e, lambda_g);
            for p in 0..5 {
                for k in 0..40 {
                    let t = 0.173 * k as f64;
                    let a = phonon_number_quadratic(p, &c, t).unwrap();
                    let b = phonon_number_quadratic_expanded(p, &c, t);
                    assert_abs_diff_eq!(a, b, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn reduces_to_linear_for_equal_frequencies() {
        let c = couplings(1.0, 1.2);
        for p in 0..4 {
            for k in 0..30 {
                let t = 0.31 * k as f64;
                assert_abs_diff_eq!(
                    phonon_number_quadratic(p, &c, t).unwrap(),
                    phonon_number_linear(p, 1.2, 1.0, t),
                    epsilon = 1e-13
                );
            }
        }
    }

    #[test]
    fn excited_phonons() {
        assert_eq!(excited_phonon_number(0, &couplings(1.0, 0.0)).unwrap(), 0.0);
        assert_abs_diff_eq!(
            excited_phonon_number(1, &couplings(1.0, 1.0)).unwrap(),
            2.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            excited_phonon_number(3, &couplings(1.0, 0.5)).unwrap(),
            3.25,
            epsilon = 1e-14
        );
        assert!(matches!(
            excited_phonon_number(0, &couplings(2.0, 1.0)),
            Err(Error::UnequalFrequencies { .. })
        ));
    }
}
