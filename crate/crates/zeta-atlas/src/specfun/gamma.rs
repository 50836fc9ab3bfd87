//! Gamma, digamma and polygamma on the positive axis (gamma also on negative non-integers).

use std::f64::consts::PI;

use crate::error::{domain, MathError, MathResult};
use crate::numerics::{bernoulli_f64, CompensatedSum};

use super::zeta::hurwitz_zeta;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_FROM: f64 = 8.0;
const DIGAMMA_FROM: f64 = 10.0;

/// `sin(pi x)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    let (r, sign) = if r > 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    if r == 0.0 {
        return 0.0;
    }
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (PI * r).sin()
}

/// `cos(pi x)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

pub fn log_gamma(x: f64) -> MathResult<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("log_gamma requires x > 0, got {x}"));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    let mut z = x;
    let mut prod = 1.0f64;
    let mut log_shift = 0.0f64;
    while z < STIRLING_FROM {
        prod *= z;
        z += 1.0;
        if prod > 1e280 {
            log_shift += prod.ln();
            prod = 1.0;
        }
    }
    log_shift += prod.ln();
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for k in 1..=9usize {
        let b = bernoulli_f64(2 * k);
        corr += b / ((2 * k) as f64 * (2 * k - 1) as f64) * p;
        p *= inv2;
    }
    let stirling = (z - 0.5) * z.ln() - z + HALF_LN_2PI + corr;
    Ok(stirling - log_shift)
}

/// `Gamma(x)` for `x > 0` and for negative non-integers via reflection.
pub fn gamma(x: f64) -> MathResult<f64> {
    if x.is_nan() {
        return domain("gamma of NaN");
    }
    if x > 0.0 {
        if x == x.floor() && x <= 25.0 {
            let mut f = 1.0;
            for k in 2..(x as u32) {
                f *= k as f64;
            }
            return Ok(f);
        }
        if x > 171.6 {
            return Err(MathError::Numerics(crate::numerics::NumericsError::Overflow(format!("gamma({x})"))));
        }
        return Ok(log_gamma(x)?.exp());
    }
    if x == x.floor() {
        return Err(MathError::Pole(format!("gamma at non-positive integer {x}")));
    }
    Ok(PI / (sin_pi(x) * gamma(1.0 - x)?))
}

pub fn digamma(x: f64) -> MathResult<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("digamma requires x > 0, got {x}"));
    }
    let mut acc = CompensatedSum::new();
    let mut z = x;
    while z < DIGAMMA_FROM {
        acc.add(-1.0 / z);
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut p = inv2;
    let mut asym = 0.0;
    for k in 1..=9usize {
        asym += bernoulli_f64(2 * k) / (2 * k) as f64 * p;
        p *= inv2;
    }
    acc.add(z.ln());
    acc.add(-0.5 / z);
    acc.add(-asym);
    Ok(acc.value())
}

/// `psi^(k)(x)`: digamma for `k = 0`, otherwise `(-1)^{k+1} k! zeta(k+1, x)`.
pub fn polygamma(k: u32, x: f64) -> MathResult<f64> {
    if k == 0 {
        return digamma(x);
    }
    if !(x > 0.0) {
        return domain(format!("polygamma requires x > 0, got {x}"));
    }
    let mut fact = 1.0;
    for j in 2..=k {
        fact *= j as f64;
    }
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * fact * hurwitz_zeta(k as f64 + 1.0, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::EULER_GAMMA;
    use std::f64::consts::LN_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn log_gamma_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert!(close(log_gamma(0.5).unwrap(), 0.5 * PI.ln(), 1e-14));
        assert!(close(log_gamma(10.0).unwrap(), 362_880f64.ln(), 1e-15));
        assert!(close(log_gamma(1e-8).unwrap(), 18.420_680_738_180_21, 1e-14));
        assert!(close(log_gamma(100.5).unwrap(), 361.435_540_467_777_6, 1e-15));
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn reflection_at_one_third() {
        let t = 1.0 / 3.0;
        let lhs = gamma(t).unwrap() * gamma(1.0 - t).unwrap();
        assert!(close(lhs, PI / sin_pi(t), 1e-14));
    }

    #[test]
    fn gamma_negative_and_poles() {
        assert!(close(gamma(-0.5).unwrap(), -2.0 * PI.sqrt(), 1e-14));
        assert!(matches!(gamma(-2.0), Err(MathError::Pole(_))));
        assert_eq!(gamma(5.0).unwrap(), 24.0);
    }

    #[test]
    fn digamma_values() {
        assert!(close(digamma(1.0).unwrap(), -EULER_GAMMA, 1e-15));
        assert!(close(digamma(0.5).unwrap(), -EULER_GAMMA - 2.0 * LN_2, 1e-15));
        assert!(close(digamma(1.0 / 3.0).unwrap(), -EULER_GAMMA - PI / (2.0 * 3f64.sqrt()) - 1.5 * 3f64.ln(), 1e-14));
    }

    #[test]
    fn trigamma_values() {
        assert!(close(polygamma(1, 0.5).unwrap(), PI * PI / 2.0, 1e-13));
        let s = polygamma(1, 1.0 / 3.0).unwrap() + polygamma(1, 2.0 / 3.0).unwrap();
        assert!(close(s, 4.0 * PI * PI / 3.0, 1e-13));
        for x in [1.0 / 3.0, 0.25] {
            let lhs = polygamma(1, 1.0 - x).unwrap() + polygamma(1, x).unwrap();
            assert!(close(lhs, PI * PI / sin_pi(x).powi(2), 1e-13));
        }
    }

    #[test]
    fn sin_pi_exact_zeros() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(-2.0), 0.0);
        assert_eq!(cos_pi(0.5), 0.0);
        assert!((sin_pi(1.0 / 6.0) - 0.5).abs() < 1e-16);
    }
}
