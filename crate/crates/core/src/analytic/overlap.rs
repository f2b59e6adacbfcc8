use num_complex::Complex64;

use super::series::Series;
use super::OverlapValue;
use crate::error::{Error, Result};
use crate::model::{time_coeffs, Couplings, TimeCoeffs};
use crate::specfun::{laguerre_half_seq, laguerre_seq};

/// `|1 ± Q̃_t|` below this switches the closed form to series extraction.
pub const DEGENERATE_DENOMINATOR_TOL: f64 = 1e-12;

/// Distance from a singularity of the generating function treated as a pole.
pub const POLE_TOL: f64 = 1e-9;

const UNIT_BOUND_TOL: f64 = 1e-9;

/// Overlap for a pure shift with equal frequencies,
/// `e^{-ΛΛ_t*} e^{-iωt(p+1/2)} L_p(|Λ_t|²)` with `Λ_t = Λ(1 - e^{iωt})`.
pub fn overlap_linear(p: usize, lambda: f64, omega: f64, t: f64) -> OverlapValue {
    let lam_t = lambda * (1.0 - Complex64::cis(omega * t));
    let laguerre = laguerre_seq(p, Complex64::new(lam_t.norm_sqr(), 0.0))[p];
    let value = (-lambda * lam_t.conj()).exp() * Complex64::cis(-omega * t * (p as f64 + 0.5)) * laguerre;
    debug_assert!(value.norm() <= 1.0 + UNIT_BOUND_TOL, "|overlap| = {} > 1", value.norm());
    OverlapValue { p, t, value }
}

/// `T̃_0 = (γ+² - γ-² e^{-2iω_e t})^{-1/2} exp(-Λ_g Λ_e (1 - e^{-iω_e t}) / (γ+ - γ- e^{-iω_e t}))`.
pub fn tilde_zero(c: &Couplings, t: f64) -> Complex64 {
    let z = Complex64::cis(-c.omega_e * t);
    let (gp, gm) = (c.gamma_plus, c.gamma_minus);
    let prefactor = (gp * gp - gm * gm * z * z).sqrt().inv();
    prefactor * (-c.lambda_g * c.lambda_e * (1.0 - z) / (gp - gm * z)).exp()
}

fn is_degenerate(tc: &TimeCoeffs) -> bool {
    (1.0 - tc.q_tilde).norm() < DEGENERATE_DENOMINATOR_TOL || (1.0 + tc.q_tilde).norm() < DEGENERATE_DENOMINATOR_TOL
}

/// Closed-form `T̃_p` for `p = 0..=p_max`:
/// `T̃_0 (1+Q̃)^{-p} Σ_k r^k L_{p-k}^{(-1/2)}(0) L_k^{(-1/2)}(y)` with
/// `r = (1+Q̃)/(1-Q̃)` and `y = -Λ̃²/(D̃(1-Q̃))`.
pub fn tilde_coefficients(c: &Couplings, t: f64, p_max: usize) -> Result<Vec<Complex64>> {
    let tc = time_coeffs(c, t)?;
    if is_degenerate(&tc) {
        return tilde_coefficients_series(c, t, p_max);
    }
    Ok(closed_form_tilde(c, &tc, p_max))
}

fn closed_form_tilde(c: &Couplings, tc: &TimeCoeffs, p_max: usize) -> Vec<Complex64> {
    let q = tc.q_tilde;
    let ratio = (1.0 + q) / (1.0 - q);
    let y = -tc.lam_tilde * tc.lam_tilde / (tc.d_tilde * (1.0 - q));
    let at_zero = laguerre_half_seq(p_max, Complex64::new(0.0, 0.0));
    let at_y = laguerre_half_seq(p_max, y);
    let t0 = tilde_zero(c, tc.t);

    // ratio^k L_k(y), reused across p
    let mut weighted = Vec::with_capacity(p_max + 1);
    let mut power = Complex64::new(1.0, 0.0);
    for k in 0..=p_max {
        weighted.push(power * at_y[k]);
        power *= ratio;
    }

    let shrink = (1.0 + q).inv();
    let mut scale = t0;
    (0..=p_max)
        .map(|p| {
            let sum: Complex64 = (0..=p).map(|k| at_zero[p - k] * weighted[k]).sum();
            let value = scale * sum;
            scale *= shrink;
            value
        })
        .collect()
}

/// `T̃_p` for `p = 0..=p_max` by expanding the generating function as a
/// truncated power series, independently of the Laguerre closed form.
pub fn tilde_coefficients_series(c: &Couplings, t: f64, p_max: usize) -> Result<Vec<Complex64>> {
    let tc = time_coeffs(c, t)?;
    let one = Complex64::new(1.0, 0.0);
    let q = tc.q_tilde;

    // sqrt((1 - Q²) / ((x - 1)² - Q²))
    let denominator = Series::from_coeffs(&[one - q * q, -2.0 * one, one], p_max);
    let root = denominator.recip()?.scale(one - q * q).powf(0.5)?;

    // exp(-x Λ̃²/D̃ / ((x - 1 + Q̃)(1 - Q̃)))
    let linear = Series::from_coeffs(&[q - 1.0, one], p_max);
    let numerator = Series::from_coeffs(&[Complex64::new(0.0, 0.0), one], p_max)
        .scale(-tc.lam_tilde * tc.lam_tilde / (tc.d_tilde * (1.0 - q)));
    let exponent = numerator.mul(&linear.recip()?);

    let k = root.mul(&exponent.exp()).scale(tilde_zero(c, t));
    Ok(k.into_coeffs())
}

/// Overlap for arbitrary frequencies and shift,
/// `<p_g|p_{g;t}> = e^{-iω_e t/2} D̃_t^p T̃_p`.
pub fn overlap_quadratic(p: usize, c: &Couplings, t: f64) -> Result<OverlapValue> {
    let tc = time_coeffs(c, t)?;
    let tilde = if is_degenerate(&tc) {
        tilde_coefficients_series(c, t, p)?
    } else {
        closed_form_tilde(c, &tc, p)
    };
    let value = Complex64::cis(-0.5 * c.omega_e * t) * tc.d_tilde.powu(p as u32) * tilde[p];
    debug_assert!(value.norm() <= 1.0 + UNIT_BOUND_TOL, "|overlap| = {} > 1", value.norm());
    Ok(OverlapValue { p, t, value })
}

/// Generating function `K̃(x) = Σ_p x^p T̃_p` in closed form.
///
/// Fails with [`Error::Pole`] within [`POLE_TOL`] of the singularities
/// `x = 1 ± Q̃_t` and with [`Error::Divergence`] outside the disc of
/// convergence `|x| < min |1 ± Q̃_t|`.
pub fn generating_function(x: Complex64, c: &Couplings, t: f64) -> Result<Complex64> {
    let tc = time_coeffs(c, t)?;
    let q = tc.q_tilde;
    let minus = 1.0 - q;
    let plus = 1.0 + q;
    for singularity in [minus, plus] {
        let distance = (x - singularity).norm();
        if distance < POLE_TOL {
            return Err(Error::Pole {
                x,
                singularity,
                distance,
            });
        }
    }
    let radius = minus.norm().min(plus.norm());
    if x.norm() >= radius {
        return Err(Error::Divergence {
            x,
            modulus: x.norm(),
            radius,
        });
    }

    // Each factor has positive real part inside the disc, so principal
    // square roots continue the branch fixed by K̃(0) = T̃_0.
    let root = ((1.0 - x / minus).sqrt() * (1.0 - x / plus).sqrt()).inv();
    let exponent = -x * tc.lam_tilde * tc.lam_tilde / tc.d_tilde / ((x - minus) * minus);
    Ok(tilde_zero(c, t) * root * exponent.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{derive_couplings, ModelParams};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn couplings(omega_g: f64, omega_e: f64, lambda_g: f64) -> Couplings {
        derive_couplings(&ModelParams::from_lambda_g(0.0, 0.0, omega_g, omega_e, lambda_g).unwrap()).unwrap()
    }

    #[test]
    fn linear_overlap_values() {
        assert_abs_diff_eq!(
            (overlap_linear(3, 1.0, 1.0, 0.0).value - 1.0).norm(),
            0.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            overlap_linear(0, 1.0, 1.0, PI).probability(),
            (-4.0f64).exp(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            overlap_linear(1, 1.0, 1.0, PI).probability(),
            9.0 * (-4.0f64).exp(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn quadratic_overlap_values() {
        let c = couplings(1.0, 2.0, 0.0);
        assert_abs_diff_eq!(
            (overlap_quadratic(2, &c, 0.0).unwrap().value - 1.0).norm(),
            0.0,
            epsilon = 1e-14
        );
        // ω_e t = π/2: |T̃_0|² = 1/(γ+² + γ-²)
        assert_abs_diff_eq!(
            overlap_quadratic(0, &c, PI / 4.0).unwrap().probability(),
            0.8,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            overlap_quadratic(0, &c, PI / 2.0).unwrap().probability(),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn generating_function_basics() {
        let c = couplings(1.0, 2.0, 1.0);
        let t = 0.35;
        let k0 = generating_function(Complex64::new(0.0, 0.0), &c, t).unwrap();
        assert_abs_diff_eq!((k0 - tilde_zero(&c, t)).norm(), 0.0, epsilon = 1e-15);

        let x = Complex64::new(0.3, -0.4);
        let k = generating_function(x, &c, 0.0).unwrap();
        assert_abs_diff_eq!((k - 1.0 / (1.0 - x)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn generating_function_errors() {
        let c = couplings(1.0, 2.0, 1.0);
        let t = 0.4;
        let q = time_coeffs(&c, t).unwrap().q_tilde;
        let near_pole = 1.0 - q + Complex64::new(1e-11, 0.0);
        assert!(matches!(generating_function(near_pole, &c, t), Err(Error::Pole { .. })));
        let far = Complex64::new(0.0, 3.0);
        assert!(matches!(generating_function(far, &c, t), Err(Error::Divergence { .. })));
    }

    #[test]
    fn series_route_matches_closed_form() {
        let c = couplings(1.0, 2.0, 1.0);
        let t = 0.7 / 2.0;
        let closed = tilde_coefficients(&c, t, 10).unwrap();
        let series = tilde_coefficients_series(&c, t, 10).unwrap();
        for (a, b) in closed.iter().zip(&series) {
            assert!((a - b).norm() < 1e-12 * a.norm().max(1e-3), "{a} vs {b}");
        }
    }

    #[test]
    fn generating_function_resums_the_coefficients() {
        let c = couplings(1.0, 0.5, 0.8);
        let t = 1.9;
        let x = Complex64::new(0.2, 0.25);
        let coeffs = tilde_coefficients(&c, t, 120).unwrap();
        let mut power = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for coeff in coeffs {
            sum += coeff * power;
            power *= x;
        }
        let direct = generating_function(x, &c, t).unwrap();
        assert_abs_diff_eq!((sum - direct).norm(), 0.0, epsilon = 1e-12);
    }
}
