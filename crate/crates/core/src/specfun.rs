//! Laguerre and Hermite polynomials over complex arguments.
//!
//! Every routine returns the whole sequence of orders `0..=order_max` from
//! an upward three-term recurrence, since each consumer needs all of them.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct PolySequence {
    values: Vec<Complex64>,
}

impl PolySequence {
    pub fn order_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }
}

impl std::ops::Index<usize> for PolySequence {
    type Output = Complex64;

    fn index(&self, order: usize) -> &Complex64 {
        &self.values[order]
    }
}

/// Generalized Laguerre polynomials `L_k^{(alpha)}(x)` for `k = 0..=p_max`.
fn generalized_laguerre(p_max: usize, alpha: f64, x: Complex64) -> PolySequence {
    let mut values = Vec::with_capacity(p_max + 1);
    values.push(Complex64::new(1.0, 0.0));
    if p_max >= 1 {
        values.push(1.0 + alpha - x);
    }
    for k in 1..p_max {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * values[k] - (kf + alpha) * values[k - 1]) / (kf + 1.0);
        values.push(next);
    }
    PolySequence { values }
}

/// Ordinary Laguerre polynomials `L_p(x)`.
pub fn laguerre_seq(p_max: usize, x: Complex64) -> PolySequence {
    generalized_laguerre(p_max, 0.0, x)
}

/// Generalized Laguerre polynomials `L_p^{(-1/2)}(x)`.
pub fn laguerre_half_seq(p_max: usize, x: Complex64) -> PolySequence {
    generalized_laguerre(p_max, -0.5, x)
}

/// Physicists' Hermite polynomials `H_n(z)`.
pub fn hermite_seq(n_max: usize, z: Complex64) -> PolySequence {
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(Complex64::new(1.0, 0.0));
    if n_max >= 1 {
        values.push(2.0 * z);
    }
    for n in 1..n_max {
        let next = 2.0 * z * values[n] - 2.0 * n as f64 * values[n - 1];
        values.push(next);
    }
    PolySequence { values }
}

/// Rescaled Hermite polynomials `s^n H_n(z) / sqrt(n!)`.
///
/// Stays representable where `H_n` and `n!` individually overflow, which
/// the line-weight sums need for long line lists.
pub fn hermite_scaled_seq(n_max: usize, z: Complex64, s: Complex64) -> PolySequence {
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(Complex64::new(1.0, 0.0));
    if n_max >= 1 {
        values.push(2.0 * z * s);
    }
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 * z * s / (nf + 1.0).sqrt()) * values[n]
            - (2.0 * nf * s * s / ((nf + 1.0) * nf).sqrt()) * values[n - 1];
        values.push(next);
    }
    PolySequence { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};
    use proptest::prelude::*;

    // Exact Gaussian-rational arithmetic for the series oracles.
    #[derive(Clone, Debug)]
    struct Exact {
        re: BigRational,
        im: BigRational,
    }

    impl Exact {
        fn zero() -> Self {
            Self {
                re: BigRational::zero(),
                im: BigRational::zero(),
            }
        }
        fn from_rational(r: BigRational) -> Self {
            Self {
                re: r,
                im: BigRational::zero(),
            }
        }
        fn from_c64(z: Complex64) -> Self {
            Self {
                re: BigRational::from_float(z.re).unwrap(),
                im: BigRational::from_float(z.im).unwrap(),
            }
        }
        fn add(&self, o: &Self) -> Self {
            Self {
                re: &self.re + &o.re,
                im: &self.im + &o.im,
            }
        }
        fn mul(&self, o: &Self) -> Self {
            Self {
                re: &self.re * &o.re - &self.im * &o.im,
                im: &self.re * &o.im + &self.im * &o.re,
            }
        }
        fn scale(&self, r: &BigRational) -> Self {
            Self {
                re: &self.re * r,
                im: &self.im * r,
            }
        }
        fn pow(&self, n: usize) -> Self {
            let mut acc = Self::from_rational(BigRational::one());
            for _ in 0..n {
                acc = acc.mul(self);
            }
            acc
        }
        fn to_c64(&self) -> Complex64 {
            Complex64::new(self.re.to_f64().unwrap(), self.im.to_f64().unwrap())
        }
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn factorial(n: usize) -> BigRational {
        (1..=n as i64).fold(BigRational::one(), |acc, k| acc * int(k))
    }

    /// `L_p^{(alpha)}(x) = sum_k (-1)^k binom(p + alpha, p - k) x^k / k!`
    /// with `alpha = num / den`.
    fn laguerre_series(p: usize, alpha: &BigRational, x: &Exact) -> Exact {
        let mut total = Exact::zero();
        for k in 0..=p {
            // binom(p + alpha, p - k) = prod_{j=k+1}^{p} (alpha + j) / (p - k)!
            let mut binom = BigRational::one();
            for j in (k + 1)..=p {
                binom *= alpha + int(j as i64);
            }
            binom /= factorial(p - k);
            let mut coeff = binom / factorial(k);
            if k % 2 == 1 {
                coeff = -coeff;
            }
            total = total.add(&x.pow(k).scale(&coeff));
        }
        total
    }

    /// `H_n(z) = n! sum_m (-1)^m (2z)^{n-2m} / (m! (n-2m)!)`
    fn hermite_series(n: usize, z: &Exact) -> Exact {
        let two_z = z.scale(&int(2));
        let mut total = Exact::zero();
        for m in 0..=n / 2 {
            let mut coeff = factorial(n) / (factorial(m) * factorial(n - 2 * m));
            if m % 2 == 1 {
                coeff = -coeff;
            }
            total = total.add(&two_z.pow(n - 2 * m).scale(&coeff));
        }
        total
    }

    fn rel_err(got: Complex64, exact: Complex64) -> f64 {
        (got - exact).norm() / exact.norm().max(1.0)
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn laguerre_low_orders() {
        let s = laguerre_seq(1, c(0.0, 0.0));
        assert_eq!(s.values(), &[c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(laguerre_seq(1, c(4.0, 0.0))[1], c(-3.0, 0.0));
        assert_eq!(laguerre_seq(0, c(3.0, 1.0)).order_max(), 0);
    }

    #[test]
    fn laguerre_matches_exact_series() {
        let x = Exact::from_rational(int(5) / int(2));
        let seq = laguerre_seq(30, c(2.5, 0.0));
        for p in 0..=30 {
            let exact = laguerre_series(p, &BigRational::zero(), &x).to_c64();
            assert!(rel_err(seq[p], exact) < 1e-10, "p = {p}: {} vs {}", seq[p], exact);
        }
    }

    #[test]
    fn half_laguerre_at_zero() {
        let s = laguerre_half_seq(2, c(0.0, 0.0));
        assert_eq!(s.values(), &[c(1.0, 0.0), c(0.5, 0.0), c(0.375, 0.0)]);
        assert_eq!(laguerre_half_seq(0, c(7.0, -2.0)).values(), &[c(1.0, 0.0)]);
        assert_eq!(laguerre_half_seq(1, c(2.0, 0.0))[1], c(-1.5, 0.0));
    }

    #[test]
    fn hermite_low_orders() {
        let zeros = hermite_seq(4, c(0.0, 0.0));
        assert_eq!(
            zeros.values(),
            &[c(1.0, 0.0), c(0.0, 0.0), c(-2.0, 0.0), c(0.0, 0.0), c(12.0, 0.0)]
        );
        assert_eq!(hermite_seq(1, c(1.0, 0.0)).values(), &[c(1.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn hermite_imaginary_argument_matches_exact_series() {
        let z = c(0.0, 0.7);
        let seq = hermite_seq(20, z);
        let exact_z = Exact::from_c64(z);
        for n in 0..=20 {
            let exact = hermite_series(n, &exact_z).to_c64();
            assert!(rel_err(seq[n], exact) < 1e-10, "n = {n}: {} vs {}", seq[n], exact);
        }
    }

    #[test]
    fn scaled_hermite_matches_plain() {
        let z = c(0.3, -1.1);
        let s = c(0.2, 0.4);
        let plain = hermite_seq(25, z);
        let scaled = hermite_scaled_seq(25, z, s);
        let mut fact = 1.0f64;
        for n in 0..=25 {
            if n > 0 {
                fact *= n as f64;
            }
            let expected = s.powu(n as u32) * plain[n] / fact.sqrt();
            assert!((scaled[n] - expected).norm() <= 1e-12 * expected.norm().max(1e-300));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn recurrences_match_exact_series(
            r in 0.0f64..10.0,
            theta in 0.0f64..std::f64::consts::TAU,
            order in 0usize..=30,
        ) {
            let x = Complex64::from_polar(r, theta);
            let exact_x = Exact::from_c64(x);
            let half = -(int(1) / int(2));

            let lag = laguerre_seq(order, x);
            let exact = laguerre_series(order, &BigRational::zero(), &exact_x).to_c64();
            prop_assert!(rel_err(lag[order], exact) < 1e-10, "L_{}({}) = {} vs {}", order, x, lag[order], exact);

            let lag_half = laguerre_half_seq(order, x);
            let exact = laguerre_series(order, &half, &exact_x).to_c64();
            prop_assert!(rel_err(lag_half[order], exact) < 1e-10);

            let herm = hermite_seq(order, x);
            let exact = hermite_series(order, &exact_x).to_c64();
            prop_assert!(rel_err(herm[order], exact) < 1e-10);
        }

        #[test]
        fn laguerre_addition_identity(
            r in 0.0f64..10.0,
            theta in 0.0f64..std::f64::consts::TAU,
            p in 0usize..=30,
        ) {
            let x = Complex64::from_polar(r, theta);
            let at_zero = laguerre_half_seq(p, c(0.0, 0.0));
            let at_x = laguerre_half_seq(p, x);
            let sum: Complex64 = (0..=p).map(|k| at_zero[p - k] * at_x[k]).sum();
            let direct = laguerre_seq(p, x)[p];
            prop_assert!((sum - direct).norm() <= 1e-9 * direct.norm().max(1.0));
        }
    }
}
