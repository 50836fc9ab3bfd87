//! Hurwitz-Lerch transcendent and the real polylogarithm.

use std::f64::consts::LN_2;

use crate::error::{domain, MathError, MathResult};
use crate::numerics::{sum_series, SeriesEval};

use super::gamma::gamma;
use super::zeta::{alt_hurwitz_zeta, alt_zeta, hurwitz_zeta, riemann_zeta};

const MAX_TERMS: usize = 2_000_000;

/// Arguments of `Phi(x, s, y) = sum_{k>=0} x^k (k+y)^{-s}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchTriple {
    x: f64,
    s: f64,
    y: f64,
}

impl LerchTriple {
    pub fn new(x: f64, s: f64, y: f64) -> MathResult<Self> {
        if !(x.abs() <= 1.0) {
            return domain(format!("Lerch argument |x| <= 1 required, got {x}"));
        }
        if !(s > 0.0) || !s.is_finite() {
            return domain(format!("Lerch order s > 0 required, got {s}"));
        }
        if !(y > 0.0) || !y.is_finite() {
            return domain(format!("Lerch shift y > 0 required, got {y}"));
        }
        if x == 1.0 && s <= 1.0 {
            return Err(MathError::Pole(format!("Lerch transcendent at x = 1, s = {s}")));
        }
        Ok(LerchTriple { x, s, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

/// Direct series for `|x| < 1` with the geometric tail bound
/// `|x|^N / ((N+y)^s (1-|x|))`.
pub fn lerch_phi_series(p: LerchTriple, abs_tol: f64) -> MathResult<SeriesEval> {
    let LerchTriple { x, s, y } = p;
    if x.abs() >= 1.0 {
        return domain("series form needs |x| < 1");
    }
    let ax = x.abs();
    let bound = move |n: usize| ax.powi(n as i32) / ((n as f64 + y).powf(s) * (1.0 - ax));
    let mut xp = 1.0f64;
    let term = |k: usize| {
        let t = xp / (k as f64 + y).powf(s);
        xp *= x;
        t
    };
    Ok(sum_series(term, Some(&bound), abs_tol, MAX_TERMS)?)
}

pub fn lerch_phi(p: LerchTriple) -> MathResult<f64> {
    let LerchTriple { x, s, y } = p;
    if x == 1.0 {
        return hurwitz_zeta(s, y);
    }
    if x == -1.0 {
        return alt_hurwitz_zeta(s, y);
    }
    let tol = 1e-17 * y.powf(-s);
    Ok(lerch_phi_series(p, tol)?.value)
}

/// `Li_s(x) = sum_{n>=1} x^n n^{-s}` for `|x| <= 1`.
pub fn polylog(s: f64, x: f64) -> MathResult<f64> {
    if !(x.abs() <= 1.0) || s.is_nan() {
        return domain(format!("polylog requires |x| <= 1, got {x}"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        if s > 1.0 {
            return riemann_zeta(s);
        }
        return Err(MathError::Pole(format!("polylog at x = 1 with s = {s}")));
    }
    if x == -1.0 {
        return Ok(-alt_zeta(s)?);
    }
    if s == 1.0 {
        return Ok(-(-x).ln_1p());
    }
    if x.abs() <= 0.5 {
        return polylog_direct(s, x);
    }
    if x > 0.0 {
        return polylog_near_one(s, x);
    }
    // square relation: Li_s(x) + Li_s(-x) = 2^{1-s} Li_s(x^2)
    let scale = ((1.0 - s) * LN_2).exp();
    Ok(scale * polylog(s, x * x)? - polylog(s, -x)?)
}

fn polylog_direct(s: f64, x: f64) -> MathResult<f64> {
    let ax = x.abs();
    let mut xp = x;
    let term = |k: usize| {
        let n = (k + 1) as f64;
        let t = xp / n.powf(s);
        xp *= x;
        t
    };
    let tol = 1e-17 * ax;
    let eval = if s >= 0.0 {
        let bound = move |n: usize| ax.powi(n as i32 + 1) / (((n + 1) as f64).powf(s) * (1.0 - ax));
        sum_series(term, Some(&bound), tol, MAX_TERMS)?
    } else {
        sum_series(term, None, tol, MAX_TERMS)?
    };
    Ok(eval.value)
}

/// Expansion in `mu = log x` for `1/2 < x < 1`:
/// `sum_k zeta(s-k) mu^k / k!` plus the singular part, which is
/// `mu^{s-1}/(s-1)! (H_{s-1} - log(-mu))` for integer `s >= 2`
/// and `Gamma(1-s) (-mu)^{s-1}` otherwise.
fn polylog_near_one(s: f64, x: f64) -> MathResult<f64> {
    let mu = x.ln();
    let integer_order = s == s.floor() && s >= 2.0;
    let skip = if integer_order { Some(s as usize - 1) } else { None };
    let mut acc = crate::numerics::CompensatedSum::new();
    let mut pow = 1.0f64;
    for k in 0..48usize {
        if k > 0 {
            pow *= mu / k as f64;
        }
        if Some(k) == skip {
            continue;
        }
        let z = riemann_zeta(s - k as f64)?;
        acc.add(z * pow);
    }
    if integer_order {
        let m = s as usize - 1;
        let mut harmonic = 0.0;
        let mut fact = 1.0;
        for j in 1..=m {
            harmonic += 1.0 / j as f64;
            fact *= j as f64;
        }
        acc.add(mu.powi(m as i32) / fact * (harmonic - (-mu).ln()));
    } else {
        acc.add(gamma(1.0 - s)? * (-mu).powf(s - 1.0));
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate, QuadratureProblem, tanh_sinh_integrate};
    use crate::specfun::log_gamma;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn triple_validation() {
        assert!(LerchTriple::new(1.5, 2.0, 1.0).is_err());
        assert!(LerchTriple::new(0.5, 0.0, 1.0).is_err());
        assert!(LerchTriple::new(0.5, 2.0, 0.0).is_err());
        assert!(matches!(LerchTriple::new(1.0, 1.0, 1.0), Err(MathError::Pole(_))));
        assert!(LerchTriple::new(-1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn phi_special_cases() {
        assert_eq!(lerch_phi(LerchTriple::new(0.0, 2.5, 3.0).unwrap()).unwrap(), 3f64.powf(-2.5));
        let p = lerch_phi(LerchTriple::new(0.5, 2.0, 1.0).unwrap()).unwrap();
        assert!(close(p, polylog(2.0, 0.5).unwrap() / 0.5, 1e-15));
        let a = lerch_phi(LerchTriple::new(-1.0, 1.0, 0.5).unwrap()).unwrap();
        assert!(close(a, PI / 2.0, 1e-15));
    }

    #[test]
    fn phi_matches_integral_representation() {
        // Phi(x, s, y) = (1/Gamma(s)) int_0^inf u^{s-1} e^{-yu} / (1 - x e^{-u}) du
        let (x, s, y) = (0.5, 2.0, 1.0 / 3.0);
        let q = tanh_sinh_integrate(&QuadratureProblem::new(
            |u: f64| u.powf(s - 1.0) * (-y * u).exp() / (1.0 - x * (-u).exp()),
            0.0,
            f64::INFINITY,
        ))
        .unwrap();
        let series = lerch_phi_series(LerchTriple::new(x, s, y).unwrap(), 1e-16).unwrap();
        let q = q.value / log_gamma(s).unwrap().exp();
        assert!((series.value - q).abs() < 1e-13 + series.tail_bound);
    }

    #[test]
    fn recurrence_in_y() {
        for &(x, s, y) in &[(0.3, 1.5, 0.7), (-0.6, 2.0, 1.25), (0.9, 3.0, 0.2)] {
            let lhs = lerch_phi(LerchTriple::new(x, s, y).unwrap()).unwrap();
            let rhs = y.powf(-s) + x * lerch_phi(LerchTriple::new(x, s, y + 1.0).unwrap()).unwrap();
            assert!(close(lhs, rhs, 1e-14));
        }
    }

    #[test]
    fn polylog_values() {
        assert!(close(polylog(2.0, 1.0).unwrap(), PI * PI / 6.0, 1e-15));
        assert!(close(polylog(1.0, 0.5).unwrap(), LN_2, 1e-16));
        assert_eq!(polylog(2.0, 0.0).unwrap(), 0.0);
        let li2_half = PI * PI / 12.0 - 0.5 * LN_2 * LN_2;
        assert!(close(polylog(2.0, 0.5).unwrap(), li2_half, 1e-15));
        assert!(close(polylog(2.0, -1.0).unwrap(), -PI * PI / 12.0, 1e-15));
        assert!(close(polylog(0.0, 0.75).unwrap(), 3.0, 1e-14));
        assert!(close(polylog(-1.0, 0.5).unwrap(), 2.0, 1e-14));
        assert!(close(polylog(-1.0, 0.8).unwrap(), 0.8 / (0.2 * 0.2), 1e-13));
        // Li_3(1/2) = 7 zeta(3)/8 - pi^2 log 2/12 + log^3 2 / 6
        let li3 = 7.0 * 1.202_056_903_159_594_2 / 8.0 - PI * PI * LN_2 / 12.0 + LN_2.powi(3) / 6.0;
        assert!(close(polylog(3.0, 0.5).unwrap(), li3, 1e-15));
    }

    #[test]
    fn polylog_continuity_across_branches() {
        for &s in &[2.0, 3.0, 2.5, 0.5, 4.0] {
            for &x in &[0.5, -0.5] {
                let lo = polylog(s, x * (1.0 - 1e-12)).unwrap();
                let hi = polylog(s, x * (1.0 + 1e-12)).unwrap();
                assert!((lo - hi).abs() < 1e-11, "s={s} x={x}: {lo} vs {hi}");
            }
        }
        // Li_2(x) + Li_2(1-x) = pi^2/6 - log x log(1-x)
        let x = 0.8;
        let lhs = polylog(2.0, x).unwrap() + polylog(2.0, 1.0 - x).unwrap();
        assert!(close(lhs, PI * PI / 6.0 - x.ln() * (1.0 - x).ln(), 1e-15));
    }

    #[test]
    fn polylog_near_one_matches_quadrature() {
        // Li_s(x) = (x / Gamma(s)) int_0^inf u^{s-1} / (e^u - x) du
        for &(s, x) in &[(2.5, 0.9), (0.5, 0.7), (3.0, -0.95)] {
            let q = integrate(|u: f64| u.powf(s - 1.0) / (u.exp() - x), 0.0, f64::INFINITY, 1e-15).unwrap();
            let expected = x * q.value / log_gamma(s).unwrap().exp();
            assert!(close(polylog(s, x).unwrap(), expected, 1e-13), "s={s} x={x}");
        }
    }
}
