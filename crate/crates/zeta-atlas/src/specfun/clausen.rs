//! Clausen functions `Cl_n`: sine series `sum sin(k t)/k^n` for even `n`,
//! cosine series `sum cos(k t)/k^n` for odd `n`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{domain, MathError, MathResult};
use crate::numerics::{bernoulli_over_factorial, tanh_sinh_integrate, CompensatedSum, EndpointTag, QuadratureProblem};

use super::zeta::riemann_zeta;

const TWO_PI: f64 = 2.0 * PI;
const SERIES_TERMS: usize = 40;

/// `zeta(2k) / (2 pi)^{2k}` for `k = 1..=40`, from Bernoulli numbers.
fn even_zeta_scaled() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| (1..=SERIES_TERMS).map(|k| 0.5 * bernoulli_over_factorial(2 * k).abs()).collect())
}

/// Reduce to `[0, pi]`; returns the reduced angle and the parity sign.
fn reduce(n: u32, theta: f64) -> (f64, f64) {
    let r = theta.rem_euclid(TWO_PI);
    if r > PI {
        let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
        (TWO_PI - r, sign)
    } else {
        (r, 1.0)
    }
}

pub fn clausen(n: u32, theta: f64) -> MathResult<f64> {
    if n == 0 {
        return domain("Clausen order must be at least 1");
    }
    if !theta.is_finite() {
        return domain(format!("Clausen argument must be finite, got {theta}"));
    }
    let (r, sign) = reduce(n, theta);
    if r == 0.0 {
        return match n {
            1 => Err(MathError::Pole("Cl_1 at a multiple of 2 pi".into())),
            _ if n.is_multiple_of(2) => Ok(0.0),
            _ => riemann_zeta(n as f64),
        };
    }
    let v = match n {
        1 => -(2.0 * (0.5 * r).sin()).ln(),
        2 => clausen2_quadrature(r)?,
        _ => clausen_power_series(n, r)?,
    };
    Ok(sign * v)
}

/// `Cl_2(t) = -int_0^t log(2 sin(u/2)) du`.
fn clausen2_quadrature(t: f64) -> MathResult<f64> {
    let p = QuadratureProblem::new(|u: f64| -(2.0 * (0.5 * u).sin()).ln(), 0.0, t)
        .left(EndpointTag::Log)
        .tol(1e-15);
    Ok(tanh_sinh_integrate(&p)?.value)
}

/// Power series on `(0, pi]` obtained by integrating
/// `Cl_1(t) = -log t + sum_k zeta(2k)/k (t/2pi)^{2k}` repeatedly:
/// `Cl_{2m} = int Cl_{2m-1}`, `Cl_{2m+1} = zeta(2m+1) - int Cl_{2m}`.
pub fn clausen_power_series(n: u32, t: f64) -> MathResult<f64> {
    if n == 0 || !(t > 0.0 && t <= PI) {
        return domain(format!("power series needs n >= 1 and 0 < t <= pi, got n={n}, t={t}"));
    }
    // a t^p + b t^p log t
    let mut monomials: Vec<(i32, f64, f64)> = vec![(0, 0.0, -1.0)];
    for m in 2..=n {
        for mono in monomials.iter_mut() {
            let q = (mono.0 + 1) as f64;
            *mono = (mono.0 + 1, mono.1 / q - mono.2 / (q * q), mono.2 / q);
        }
        if m % 2 == 1 {
            for mono in monomials.iter_mut() {
                mono.1 = -mono.1;
                mono.2 = -mono.2;
            }
            monomials.push((0, riemann_zeta(m as f64)?, 0.0));
        }
    }
    let lt = t.ln();
    let mut acc = CompensatedSum::new();
    for &(p, a, b) in &monomials {
        let tp = t.powi(p);
        acc.add(a * tp);
        acc.add(b * tp * lt);
    }
    let sign = if ((n - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    let t2 = t * t;
    let mut tp = t.powi(n as i32 - 1);
    for (idx, &e) in even_zeta_scaled().iter().enumerate() {
        let k = idx + 1;
        tp *= t2;
        let mut denom = k as f64;
        for j in 1..n {
            denom *= (2 * k + j as usize) as f64;
        }
        let term = sign * e * tp / denom;
        acc.add(term);
        if term.abs() <= 1e-18 * acc.value().abs() {
            break;
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{CATALAN, ZETA3};

    fn brute(n: u32, t: f64, terms: usize) -> f64 {
        let mut acc = CompensatedSum::new();
        for k in 1..=terms {
            let kf = k as f64;
            let trig = if n.is_multiple_of(2) { (kf * t).sin() } else { (kf * t).cos() };
            acc.add(trig / kf.powi(n as i32));
        }
        acc.value()
    }

    #[test]
    fn special_values() {
        assert!((clausen(2, PI / 2.0).unwrap() - CATALAN).abs() < 1e-15);
        assert!((clausen(3, PI).unwrap() + 0.75 * ZETA3).abs() < 1e-15);
        assert!(clausen(2, PI).unwrap().abs() < 1e-15);
        assert!(clausen(4, PI).unwrap().abs() < 1e-15);
        assert!(clausen(4, 2.0 * PI).unwrap().abs() < 1e-15);
        assert!((clausen(3, 0.0).unwrap() - ZETA3).abs() < 1e-15);
        // Cl_3(pi/2) = -(3/32) zeta(3)
        assert!((clausen(3, PI / 2.0).unwrap() + 3.0 * ZETA3 / 32.0).abs() < 1e-15);
        // Cl_3(pi/3) = zeta(3)/3
        assert!((clausen(3, PI / 3.0).unwrap() - ZETA3 / 3.0).abs() < 1e-15);
        // Cl_3(2 pi/3) = -(4/9) zeta(3)
        assert!((clausen(3, 2.0 * PI / 3.0).unwrap() + 4.0 * ZETA3 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn clausen2_quadrature_matches_power_series() {
        for &t in &[1e-3, 0.3, 1.0, PI / 3.0, 2.0, 3.0, PI] {
            let q = clausen(2, t).unwrap();
            let s = clausen_power_series(2, t).unwrap();
            assert!((q - s).abs() < 2e-15, "t={t}: {q} vs {s}");
        }
    }

    #[test]
    fn duplication() {
        for &x in &[PI / 6.0, PI / 5.0, PI / 3.0] {
            let lhs = 0.5 * clausen(2, 2.0 * x).unwrap();
            let rhs = clausen(2, x).unwrap() - clausen(2, PI - x).unwrap();
            assert!((lhs - rhs).abs() < 1e-14);
        }
    }

    #[test]
    fn odd_orders_against_brute_force() {
        // cosine series of order >= 3 converge absolutely
        for n in [3u32, 5] {
            for &t in &[0.4, PI / 3.0, 2.5] {
                let b = brute(n, t, 200_000);
                assert!((clausen(n, t).unwrap() - b).abs() < 1e-11, "n={n} t={t}");
            }
        }
        for &t in &[0.4, 2.5] {
            let b = brute(4, t, 100_000);
            assert!((clausen(4, t).unwrap() - b).abs() < 1e-13);
        }
    }

    #[test]
    fn reduction_and_symmetry() {
        let t = 1.1;
        assert!((clausen(2, -t).unwrap() + clausen(2, t).unwrap()).abs() < 1e-15);
        assert!((clausen(3, -t).unwrap() - clausen(3, t).unwrap()).abs() < 1e-15);
        assert!((clausen(2, t + 4.0 * PI).unwrap() - clausen(2, t).unwrap()).abs() < 1e-13);
        assert!((clausen(1, PI / 3.0).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn lewin_half_angle() {
        // Cl_{2n+1}(pi/2) = -2^{-2n-1} (1 - 2^{-2n}) zeta(2n+1), n = 1
        let expected = -0.125 * 0.75 * ZETA3;
        assert!((clausen(3, PI / 2.0).unwrap() - expected).abs() < 1e-15);
    }
}
