//! Hurwitz zeta and its s-derivative by Euler-Maclaurin, plus the Riemann and
//! alternating zeta functions built on it.

use std::f64::consts::{LN_2, PI};

use crate::error::{domain, MathError, MathResult};
use crate::numerics::{bernoulli_f64, bernoulli_over_factorial, CompensatedSum};

use super::bernoulli_poly;
use super::gamma::{digamma, log_gamma, sin_pi};

const MAX_CORRECTION_PAIRS: usize = 40;

fn explicit_terms(s: f64) -> usize {
    if s < 0.0 {
        5
    } else {
        10 + s.ceil() as usize
    }
}

/// `(zeta(s, a), d/ds zeta(s, a))` from one Euler-Maclaurin pass.
fn euler_maclaurin(s: f64, a: f64) -> (f64, f64) {
    let n = explicit_terms(s);
    let mut val = CompensatedSum::new();
    let mut der = CompensatedSum::new();
    for j in 0..n {
        let q = j as f64 + a;
        let lq = q.ln();
        let p = q.powf(-s);
        val.add(p);
        der.add(-lq * p);
    }
    let w = n as f64 + a;
    let lw = w.ln();
    let wms = w.powf(-s);
    let w1s = w * wms;
    let sm1 = s - 1.0;
    val.add(w1s / sm1);
    der.add(-lw * w1s / sm1 - w1s / (sm1 * sm1));
    val.add(0.5 * wms);
    der.add(-0.5 * lw * wms);

    // T_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * w^{-s-2k+1}
    let mut poch = s;
    let mut dpoch = 1.0;
    let mut wpow = wms / w;
    let inv_w2 = 1.0 / (w * w);
    let mut prev_mag = f64::INFINITY;
    for k in 1..=MAX_CORRECTION_PAIRS {
        let c = bernoulli_over_factorial(2 * k);
        let t = c * poch * wpow;
        let dt = c * (dpoch - lw * poch) * wpow;
        let mag = t.abs() + dt.abs();
        if mag > prev_mag {
            break;
        }
        val.add(t);
        der.add(dt);
        let small_v = t.abs() <= 1e-18 * val.value().abs();
        let small_d = dt.abs() <= 1e-18 * der.value().abs();
        if small_v && small_d {
            break;
        }
        prev_mag = mag;
        let u = s + (2 * k - 1) as f64;
        let v = s + (2 * k) as f64;
        let q = u * v;
        let dq = u + v;
        dpoch = dpoch * q + poch * dq;
        poch *= q;
        wpow *= inv_w2;
    }
    (val.value(), der.value())
}

fn check_args(s: f64, a: f64) -> MathResult<()> {
    if s.is_nan() || !a.is_finite() {
        return domain("hurwitz_zeta arguments must be finite");
    }
    if s == 1.0 {
        return Err(MathError::Pole("hurwitz_zeta at s = 1".into()));
    }
    if !(a > 0.0) {
        return domain(format!("hurwitz_zeta requires a > 0, got {a}"));
    }
    Ok(())
}

fn nonpositive_integer(s: f64) -> Option<usize> {
    (s <= 0.0 && s == s.floor() && s >= -60.0).then(|| (-s) as usize)
}

/// `zeta(s, a) = sum_{k>=0} (k+a)^{-s}`, continued to all real `s != 1`.
pub fn hurwitz_zeta(s: f64, a: f64) -> MathResult<f64> {
    check_args(s, a)?;
    if let Some(m) = nonpositive_integer(s) {
        if a == 1.0 && m >= 1 {
            return Ok(-bernoulli_f64(m + 1) / (m + 1) as f64);
        }
        return Ok(-bernoulli_poly(m + 1, a) / (m + 1) as f64);
    }
    Ok(euler_maclaurin(s, a).0)
}

/// `d/ds zeta(s, a)` by differentiating the Euler-Maclaurin formula term by term.
pub fn hurwitz_zeta_sderiv(s: f64, a: f64) -> MathResult<f64> {
    check_args(s, a)?;
    Ok(euler_maclaurin(s, a).1)
}

pub fn riemann_zeta(s: f64) -> MathResult<f64> {
    if s == 0.0 {
        return Ok(-0.5);
    }
    if s < -5.0 && s != s.floor() {
        return riemann_zeta_reflected(s);
    }
    hurwitz_zeta(s, 1.0)
}

pub fn riemann_zeta_sderiv(s: f64) -> MathResult<f64> {
    hurwitz_zeta_sderiv(s, 1.0)
}

/// `zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)`.
fn riemann_zeta_reflected(s: f64) -> MathResult<f64> {
    let t = 1.0 - s;
    let mag = s * LN_2 + (s - 1.0) * PI.ln() + log_gamma(t)?;
    Ok(mag.exp() * sin_pi(0.5 * s) * hurwitz_zeta(t, 1.0)?)
}

/// `zeta_a(s) = sum (-1)^k (k+1)^{-s} = (1 - 2^{1-s}) zeta(s)`, with the limit `log 2` at `s = 1`.
pub fn alt_zeta(s: f64) -> MathResult<f64> {
    let e = s - 1.0;
    if e.abs() < 1e-5 {
        const EULER_GAMMA: f64 = super::EULER_GAMMA;
        return Ok(LN_2 + e * (EULER_GAMMA * LN_2 - 0.5 * LN_2 * LN_2));
    }
    let factor = -(-e * LN_2).exp_m1();
    Ok(factor * riemann_zeta(s)?)
}

/// `zeta_a(s, y) = sum (-1)^k (k+y)^{-s} = 2^{-s}[zeta(s, y/2) - zeta(s, (y+1)/2)]`.
pub fn alt_hurwitz_zeta(s: f64, y: f64) -> MathResult<f64> {
    if !(y > 0.0) {
        return domain(format!("alt_hurwitz_zeta requires y > 0, got {y}"));
    }
    if s == 1.0 {
        return Ok(0.5 * (digamma(0.5 * (y + 1.0))? - digamma(0.5 * y)?));
    }
    let scale = (-s * LN_2).exp();
    Ok(scale * (hurwitz_zeta(s, 0.5 * y)? - hurwitz_zeta(s, 0.5 * (y + 1.0))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{log_gamma, CATALAN, EULER_GAMMA, ZETA3};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn riemann_values() {
        assert!(close(riemann_zeta(2.0).unwrap(), PI * PI / 6.0, 1e-15));
        assert!(close(riemann_zeta(3.0).unwrap(), ZETA3, 1e-15));
        assert!(close(riemann_zeta(4.0).unwrap(), PI.powi(4) / 90.0, 1e-15));
        assert!(close(riemann_zeta(0.5).unwrap(), -1.460_354_508_809_586_8, 1e-14));
        assert!(close(riemann_zeta(-1.0).unwrap(), -1.0 / 12.0, 1e-15));
        assert!(close(riemann_zeta(-3.0).unwrap(), 1.0 / 120.0, 1e-15));
        assert_eq!(riemann_zeta(-4.0).unwrap(), 0.0);
        assert!(close(riemann_zeta(-7.5).unwrap(), 0.003_269_039_572_600_22, 1e-12));
        assert!(close(riemann_zeta(1.0 + 1e-8).unwrap(), 1e8 + EULER_GAMMA, 1e-8));
        assert!(matches!(riemann_zeta(1.0), Err(MathError::Pole(_))));
    }

    #[test]
    fn hurwitz_values() {
        assert!(close(hurwitz_zeta(2.0, 1.0).unwrap(), PI * PI / 6.0, 1e-15));
        // zeta(2, 1/4) = pi^2 + 8G
        assert!(close(hurwitz_zeta(2.0, 0.25).unwrap(), PI * PI + 8.0 * CATALAN, 1e-14));
        // zeta(1-n, t) = -B_n(t)/n
        let b2 = 0.0625 - 0.25 + 1.0 / 6.0;
        assert!(close(hurwitz_zeta(-1.0, 0.25).unwrap(), -b2 / 2.0, 1e-15));
        // non-integer s < 0 goes through Euler-Maclaurin
        assert!(close(hurwitz_zeta(-1.0 + 1e-9, 0.25).unwrap(), -b2 / 2.0, 1e-8));
        let shifted = 12f64.powi(12) + hurwitz_zeta(12.0, 13.0 / 12.0).unwrap();
        assert!(close(hurwitz_zeta(12.0, 1.0 / 12.0).unwrap(), shifted, 1e-15));
        assert!(matches!(hurwitz_zeta(2.0, 0.0), Err(MathError::Domain(_))));
    }

    #[test]
    fn negative_integers_match_bernoulli() {
        for n in 1..=3usize {
            for t in [1.0 / 6.0, 0.25, 0.5] {
                let expected = -bernoulli_poly(n, t) / n as f64;
                let em = euler_maclaurin(1.0 - n as f64, t).0;
                assert!((em - expected).abs() < 1e-13, "n={n} t={t}: {em} vs {expected}");
            }
        }
    }

    #[test]
    fn derivative_values() {
        // Lerch: zeta'(0, t) = log Gamma(t) - log(2 pi)/2
        let t = 0.25;
        let lhs = hurwitz_zeta_sderiv(0.0, t).unwrap();
        assert!((lhs - (log_gamma(t).unwrap() - 0.5 * (2.0 * PI).ln())).abs() < 1e-14);
        let v = hurwitz_zeta_sderiv(-2.0, 0.5).unwrap();
        assert!((v - 3.0 * ZETA3 / (16.0 * PI * PI)).abs() < 1e-13);
        let d = hurwitz_zeta_sderiv(-1.0, 0.25).unwrap() - hurwitz_zeta_sderiv(-1.0, 0.75).unwrap();
        assert!((d - CATALAN / (2.0 * PI)).abs() < 1e-14);
        assert!((riemann_zeta_sderiv(-2.0).unwrap() + ZETA3 / (4.0 * PI * PI)).abs() < 1e-14);
        assert!((riemann_zeta_sderiv(2.0).unwrap() + 0.937_548_254_315_843_8).abs() < 1e-14);
        assert!((riemann_zeta_sderiv(0.0).unwrap() + 0.5 * (2.0 * PI).ln()).abs() < 1e-15);
    }

    #[test]
    fn derivative_against_central_difference() {
        for &s in &[-5.5, -3.0, -0.5, 0.5, 2.5, 6.0] {
            for &a in &[1.0 / 6.0, 0.5, 1.0, 2.5] {
                let h = 1e-5;
                let fd = (euler_maclaurin(s + h, a).0 - euler_maclaurin(s - h, a).0) / (2.0 * h);
                let an = hurwitz_zeta_sderiv(s, a).unwrap();
                assert!((fd - an).abs() < 1e-6 * an.abs().max(1.0), "s={s} a={a}: {fd} vs {an}");
            }
        }
    }

    #[test]
    fn alternating() {
        assert!(close(alt_zeta(1.0).unwrap(), LN_2, 1e-16));
        assert!(close(alt_zeta(2.0).unwrap(), PI * PI / 12.0, 1e-15));
        assert!(close(alt_zeta(1.0 + 1e-4).unwrap(), alt_zeta(1.0).unwrap() + 1e-4 * (EULER_GAMMA * LN_2 - 0.5 * LN_2 * LN_2), 1e-9));
        assert!(close(alt_hurwitz_zeta(1.0, 0.5).unwrap(), PI / 2.0, 1e-15));
        let y = 1.0 / 3.0;
        let s = alt_hurwitz_zeta(1.0, y).unwrap() + alt_hurwitz_zeta(1.0, 1.0 - y).unwrap();
        assert!(close(s, PI / sin_pi(y), 1e-14));
        assert!(close(alt_hurwitz_zeta(2.0, 0.5).unwrap(), 4.0 * CATALAN, 1e-14));
        assert!(close(alt_hurwitz_zeta(3.0, 1.0).unwrap(), 0.75 * ZETA3, 1e-15));
    }
}
