use crate::model::Couplings;

/// Ground-phonon amplitudes of the excited-phonon vacuum for a pure shift,
/// `e^{-Λ²/2} Λ^p / sqrt(p!)` for `p = 0..=p_max`.
pub fn vacuum_expansion_linear(lambda: f64, p_max: usize) -> Vec<f64> {
    let mut coeffs = Vec::with_capacity(p_max + 1);
    coeffs.push((-0.5 * lambda * lambda).exp());
    for p in 1..=p_max {
        let prev = coeffs[p - 1];
        coeffs.push(prev * lambda / (p as f64).sqrt());
    }
    coeffs
}

/// Mean number of ground phonons in the excited-phonon vacuum, `Λ_g² + γ-²`.
pub fn vacuum_ground_phonon_number(c: &Couplings) -> f64 {
    c.lambda_g * c.lambda_g + c.gamma_minus * c.gamma_minus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{derive_couplings, ModelParams};
    use approx::assert_abs_diff_eq;

    #[test]
    fn expansion_without_shift_is_the_vacuum() {
        assert_eq!(vacuum_expansion_linear(0.0, 3), vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn expansion_is_poissonian() {
        assert_abs_diff_eq!(vacuum_expansion_linear(1.0, 0)[0], 0.6065306597126334, epsilon = 1e-15);
        let coeffs = vacuum_expansion_linear(1.3, 60);
        let norm: f64 = coeffs.iter().map(|c| c * c).sum();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-14);
        let short: f64 = vacuum_expansion_linear(1.3, 3).iter().map(|c| c * c).sum();
        assert!(short < 1.0);
    }

    #[test]
    fn ground_phonon_number() {
        let number = |omega_e: f64, lambda_g: f64| {
            let p = ModelParams::from_lambda_g(0.0, 0.0, 1.0, omega_e, lambda_g).unwrap();
            vacuum_ground_phonon_number(&derive_couplings(&p).unwrap())
        };
        assert_abs_diff_eq!(number(1.0, 1.0), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(number(2.0, 0.0), 0.125, epsilon = 1e-15);
        assert_abs_diff_eq!(number(2.0, 1.0), 1.125, epsilon = 1e-14);
    }
}
