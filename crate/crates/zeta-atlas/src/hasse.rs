//! Finite binomial sums `S_n(x, y) = sum_k C(n,k) x^k (k+y)^{-s}` and the
//! double series built from them.
//!
//! Inner sums go through a precision ladder (binary64, double-double, then
//! the integral representation over the half-line). Outer sums that converge
//! only algebraically are summed explicitly to a fixed index and finished with
//! an Euler-Maclaurin tail over the continuous extension `n -> nu` of the
//! integral representation.

use std::f64::consts::LN_2;

use crate::error::{domain, MathError, MathResult};
use crate::numerics::{
    abel_mean, euler_maclaurin_tail, geometric_schedule, tanh_sinh_integrate, CompensatedSum, DoubleDouble,
    EndpointTag, Method, QuadratureProblem, SeriesEval,
};
use crate::specfun::{gamma, polylog};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Binary64,
    DoubleDouble,
}

const DD_MAX_N: usize = 120;
const DD_UNIT: f64 = 1e-31;
const SLOW_EXPLICIT_TERMS: usize = 40;
const GEOMETRIC_MAX_TERMS: usize = 4000;
const INNER_REL_TOL: f64 = 1e-13;

fn check_shift(y: f64) -> MathResult<()> {
    if !(y > 0.0) || !y.is_finite() {
        return domain(format!("binomial sum shift y must be positive, got {y}"));
    }
    Ok(())
}

/// `S_n(x, y)` summed left to right in the requested precision.
///
/// Fails with `PrecisionLoss` when the rounding estimate (sum of absolute
/// terms times the working unit) exceeds `tol`.
pub fn finite_binomial_sum(n: usize, x: f64, y: f64, s: f64, precision: Precision, tol: f64) -> MathResult<f64> {
    check_shift(y)?;
    if !x.is_finite() || !s.is_finite() {
        return domain("binomial sum arguments must be finite");
    }
    if x == 0.0 {
        return Ok(y.powf(-s));
    }
    let (value, estimate) = match precision {
        Precision::Binary64 => direct_binary64(n, x, y, s),
        Precision::DoubleDouble => {
            if n > DD_MAX_N {
                return domain(format!("double-double binomial sum supports n <= {DD_MAX_N}, got {n}"));
            }
            direct_double_double(n, x, y, s)
        }
    };
    if !(estimate <= tol) {
        return Err(MathError::PrecisionLoss { estimate, tolerance: tol });
    }
    Ok(value)
}

fn direct_binary64(n: usize, x: f64, y: f64, s: f64) -> (f64, f64) {
    let mut acc = CompensatedSum::new();
    let mut magnitude = 0.0;
    let mut binom = 1.0f64;
    let mut xp = 1.0f64;
    for k in 0..=n {
        let t = binom * xp * (k as f64 + y).powf(-s);
        acc.add(t);
        magnitude += t.abs();
        binom = binom * (n - k) as f64 / (k + 1) as f64;
        xp *= x;
    }
    (acc.value(), magnitude * (n as f64 + 4.0) * f64::EPSILON)
}

fn direct_double_double(n: usize, x: f64, y: f64, s: f64) -> (f64, f64) {
    let integer_order = s == s.floor() && s.abs() < 64.0;
    let mut acc = DoubleDouble::ZERO;
    let mut magnitude = 0.0;
    let mut binom: u128 = 1;
    let mut xp = DoubleDouble::ONE;
    for k in 0..=n {
        let power = if integer_order {
            (DoubleDouble::from_f64(k as f64) + y).powi(-(s as i32))
        } else {
            DoubleDouble::from_f64((k as f64 + y).powf(-s))
        };
        let t = DoubleDouble::from_u128(binom) * xp * power;
        acc += t;
        magnitude += t.to_f64().abs();
        binom = binom * (n - k) as u128 / (k + 1) as u128;
        xp = xp.mul_f64(x);
    }
    // binomials and powers of x are exact; only the reciprocal power rounds
    let estimate = if integer_order { magnitude * 4.0 * DD_UNIT } else { magnitude * 4.0 * f64::EPSILON };
    (acc.to_f64(), estimate)
}

/// `1 + x e^{-u}`, accurate near `u = 0` when `x = -1`.
fn base(x: f64, u: f64) -> f64 {
    (1.0 + x) + x * (-u).exp_m1()
}

/// `log(t (1 + x e^{-u}))`, through `ln_1p` whenever the argument is near 1.
fn log_scaled_base(t: f64, x: f64, u: f64) -> f64 {
    // t(1 + x e^{-u}) - 1, grouped to avoid cancellation at whichever end is close to 1
    let at_zero = t * (1.0 + x) - 1.0;
    let at_infinity = t - 1.0;
    let z = if at_zero.abs() <= at_infinity.abs() {
        at_zero + t * x * (-u).exp_m1()
    } else {
        at_infinity + t * x * (-u).exp()
    };
    if z.abs() < 0.5 {
        z.ln_1p()
    } else {
        (t * base(x, u)).ln()
    }
}

/// Integral representation
/// `S_n = (1/Gamma(s)) int_0^inf u^{s-1} e^{-yu} (1 + x e^{-u})^n du`, for `s > 0`.
pub fn binomial_sum_integral(n: usize, x: f64, y: f64, s: f64) -> MathResult<f64> {
    check_shift(y)?;
    if !(s > 0.0) {
        return domain(format!("integral representation needs s > 0, got {s}"));
    }
    let exponent = n as i32;
    let integrand = |u: f64| u.powf(s - 1.0) * (-y * u).exp() * base(x, u).powi(exponent);
    Ok(half_line(integrand, s)? / gamma(s)?)
}

/// Continuous extension in `n`: `(1/Gamma(s)) int u^{s-1} e^{-yu} t^nu (1 + x e^{-u})^nu du`,
/// for `x >= -1` and `t > 0`.
pub fn continuous_extension(nu: f64, log_t: f64, x: f64, y: f64, s: f64) -> MathResult<f64> {
    let t = log_t.exp();
    let integrand = |u: f64| {
        if base(x, u) <= 0.0 {
            return 0.0;
        }
        u.powf(s - 1.0) * (-y * u + nu * log_scaled_base(t, x, u)).exp()
    };
    Ok(half_line(integrand, s)? / gamma(s)?)
}

fn half_line<F: Fn(f64) -> f64>(integrand: F, s: f64) -> MathResult<f64> {
    let tag = if s < 1.0 { EndpointTag::InverseSqrt } else { EndpointTag::None };
    let p = QuadratureProblem::new(integrand, 0.0, f64::INFINITY)
        .left(tag)
        .tol(0.0)
        .rel_tol(INNER_REL_TOL);
    Ok(tanh_sinh_integrate(&p)?.value)
}

/// Ladder: binary64, double-double, then the integral representation.
pub fn binomial_sum_auto(n: usize, x: f64, y: f64, s: f64, tol: f64) -> MathResult<f64> {
    match finite_binomial_sum(n, x, y, s, Precision::Binary64, tol) {
        Err(MathError::PrecisionLoss { .. }) => {}
        other => return other,
    }
    if n <= DD_MAX_N {
        match finite_binomial_sum(n, x, y, s, Precision::DoubleDouble, tol) {
            Err(MathError::PrecisionLoss { estimate, tolerance }) if !(s > 0.0) => {
                return Err(MathError::PrecisionLoss { estimate, tolerance });
            }
            Err(MathError::PrecisionLoss { .. }) => {}
            other => return other,
        }
    }
    binomial_sum_integral(n, x, y, s)
}

/// `sum_{n>=0} t^n weight(n) S_n(x, y)` where `log weight = log_w` is smooth
/// and the terms decay algebraically; `x >= -1`, `t > 0`.
fn algebraic_outer_sum<W>(log_t: f64, log_w: W, x: f64, y: f64, s: f64, tol: f64) -> MathResult<SeriesEval>
where
    W: Fn(f64) -> f64,
{
    let mut acc = CompensatedSum::new();
    for n in 0..SLOW_EXPLICIT_TERMS {
        let inner = binomial_sum_auto(n, x, y, s, 1e-16)?;
        acc.add((n as f64 * log_t + log_w(n as f64)).exp() * inner);
    }
    let tail = euler_maclaurin_tail(
        |nu| {
            continuous_extension(nu, log_t, x, y, s)
                .map(|v| log_w(nu).exp() * v)
                .unwrap_or(f64::NAN)
        },
        SLOW_EXPLICIT_TERMS,
        tol * 1e-3,
    )?;
    acc.add(tail.value);
    Ok(SeriesEval {
        value: acc.value(),
        terms_used: SLOW_EXPLICIT_TERMS + tail.terms_used,
        tail_bound: tail.tail_bound,
        method: Method::EulerMaclaurin,
        converged: tail.converged,
    })
}

/// `sum_n w(n) S_n(x, y)` with `|w(n)| <= w0 * |t|^n` and ratio `r = |t| max(1, |1+x|) < 1`.
fn geometric_outer_sum<W>(weight: W, w0: f64, t: f64, x: f64, y: f64, s: f64, tol: f64) -> MathResult<SeriesEval>
where
    W: Fn(usize) -> f64,
{
    let r = t.abs() * (1.0 + x).abs().max(1.0);
    if !(r < 1.0) || !(s > 0.0) {
        return domain(format!("geometric bound needs s > 0 and |t| max(1, |1+x|) < 1, got {r}"));
    }
    let scale = w0 * y.powf(-s) / (1.0 - r);
    let mut acc = CompensatedSum::new();
    let mut rn = 1.0f64;
    for n in 0..GEOMETRIC_MAX_TERMS {
        let w = weight(n);
        if w != 0.0 {
            acc.add(w * binomial_sum_auto(n, x, y, s, 1e-17 * y.powf(-s))?);
        }
        rn *= r;
        let bound = scale * rn;
        if bound <= tol {
            return Ok(SeriesEval {
                value: acc.value(),
                terms_used: n + 1,
                tail_bound: bound,
                method: Method::Direct,
                converged: true,
            });
        }
    }
    Err(MathError::Numerics(crate::numerics::NumericsError::ConvergenceFailure {
        partial: SeriesEval {
            value: acc.value(),
            terms_used: GEOMETRIC_MAX_TERMS,
            tail_bound: scale * rn,
            method: Method::Direct,
            converged: false,
        },
    }))
}

/// `(1/(s-1)) sum_n 1/(n+1) sum_k C(n,k) (-1)^k (k+1)^{1-s}`, an estimate of `zeta(s)`.
pub fn hasse_zeta(s: f64) -> MathResult<SeriesEval> {
    if s == 1.0 {
        return Err(MathError::Pole("Hasse series at s = 1".into()));
    }
    let sigma = s - 1.0;
    if s > 1.0 {
        let inner = algebraic_outer_sum(0.0, |nu| -(nu + 1.0).ln(), -1.0, 1.0, sigma, 1e-12)?;
        return Ok(inner.scale(1.0 / sigma));
    }
    // 1 - s >= 0: inner sums are finite differences of (k+1)^{1-s}; exact
    // for integer s, where they vanish beyond n = 1 - s
    let mut acc = CompensatedSum::new();
    let integer_order = s == s.floor();
    let last = if integer_order { (1.0 - s) as usize + 1 } else { DD_MAX_N };
    let mut last_term = 0.0f64;
    for n in 0..=last.min(DD_MAX_N) {
        let inner = finite_binomial_sum(n, -1.0, 1.0, sigma, Precision::DoubleDouble, 1e-10)?;
        last_term = inner / (n + 1) as f64;
        acc.add(last_term);
    }
    let tail = if integer_order { 0.0 } else { last_term.abs() * DD_MAX_N as f64 };
    Ok(SeriesEval {
        value: acc.value() / sigma,
        terms_used: last + 1,
        tail_bound: tail / sigma.abs(),
        method: Method::Direct,
        converged: integer_order,
    })
}

/// `sum_n 1/(n+1) sum_k C(n,k) (-1)^k x^k (k+y)^{-s}` for `0 < x <= 1`.
pub fn hasse_lerch_lhs(x: f64, s: f64, y: f64) -> MathResult<SeriesEval> {
    if !(x > 0.0 && x <= 1.0) {
        return domain(format!("hasse_lerch_lhs needs 0 < x <= 1, got {x}"));
    }
    if !(s > 0.0) {
        return domain(format!("hasse_lerch_lhs needs s > 0, got {s}"));
    }
    check_shift(y)?;
    algebraic_outer_sum(0.0, |nu| -(nu + 1.0).ln(), -x, y, s, 1e-12)
}

/// `sum_n t^n S_n(x, y)`.
///
/// Geometric when `|t| max(1, |1+x|) < 1`; `t = 1/2` with `x = 1` is summed with
/// an Euler-Maclaurin tail; `t = -1` is taken as the Abel mean.
pub fn geometric_weighted_sum(t: f64, x: f64, s: f64, y: f64) -> MathResult<SeriesEval> {
    check_shift(y)?;
    if !(s > 0.0) {
        return domain(format!("geometric_weighted_sum needs s > 0, got {s}"));
    }
    if t == -1.0 {
        return abel_at_minus_one(x, s, y);
    }
    let r = t.abs() * (1.0 + x).abs().max(1.0);
    if r < 1.0 {
        return geometric_outer_sum(
            |n| t.powi(n as i32),
            1.0,
            t,
            x,
            y,
            s,
            1e-16,
        );
    }
    if t == 0.5 && x == 1.0 {
        return algebraic_outer_sum(-LN_2, |_| 0.0, 1.0, y, s, 1e-13);
    }
    domain(format!("sum_n t^n S_n diverges for t = {t}, x = {x}"))
}

/// `sum_n v^{n+1} (n+1)^{-r} S_n(x, y)` with `|v| max(1, |1+x|) < 1`.
pub fn power_weighted_sum(v: f64, r: f64, x: f64, s: f64, y: f64) -> MathResult<SeriesEval> {
    check_shift(y)?;
    geometric_outer_sum(
        |n| v.powi(n as i32 + 1) * ((n + 1) as f64).powf(-r),
        v.abs(),
        v,
        x,
        y,
        s,
        1e-16,
    )
}

/// `(1/Gamma(s)) int_0^inf u^{s-1} e^{-yu} / (1 - t(1 + x e^{-u})) du`, the summed
/// form of `sum_n t^n S_n` wherever the denominator stays positive.
pub fn generating_integral(t: f64, x: f64, s: f64, y: f64) -> MathResult<f64> {
    check_shift(y)?;
    if !(s > 0.0) {
        return domain(format!("generating integral needs s > 0, got {s}"));
    }
    let lo = 1.0 - t * (1.0 + x).min(1.0).min(1.0 + x);
    let hi = 1.0 - t * (1.0 + x).max(1.0);
    if !(lo > 0.0 && hi > 0.0) {
        return domain(format!("1 - t(1 + x e^(-u)) vanishes on the half-line for t = {t}, x = {x}"));
    }
    let integrand = |u: f64| u.powf(s - 1.0) * (-y * u).exp() / (1.0 - t * base(x, u));
    Ok(half_line(integrand, s)? / gamma(s)?)
}

/// Abel mean `lim_{t -> -1+} sum_n t^n S_n(x, y)`, sampled at `t = -1 + 2^{-m}`,
/// `m = 4..=20`, with polynomial extrapolation in `t + 1`.
fn abel_at_minus_one(x: f64, s: f64, y: f64) -> MathResult<SeriesEval> {
    let schedule = geometric_schedule(-1.0, false, 4, 20);
    let eval = abel_mean(
        |t| generating_integral(t, x, s, y).map_err(|e| match e {
            MathError::Numerics(n) => n,
            other => crate::numerics::NumericsError::Domain(other.to_string()),
        }),
        &schedule,
        -1.0,
        true,
    )?;
    Ok(eval)
}

/// The sign-weighted sums evaluated by Abel means at `t = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlternatingVariant {
    /// `x = -2`, general `s` and `y`; target `Phi(1, s, y) / 2`.
    ShiftedZeta,
    /// `x = -2`, `y = 1`, `s = n + 1`; target `zeta(n+1) / 2`.
    IntegerZeta,
    /// `x = 2`, `y = 1`.
    AlternatingZeta,
    /// `x = 1/2`, `y = 1`; target `-2 Li_s(-1/4)`.
    QuarterPolylog,
}

/// `sum_n (-1)^n S_n(x, y)` for the variant's `x`; `s_or_n` is `s`, or `n` for
/// [`AlternatingVariant::IntegerZeta`]. `y` is used only by `ShiftedZeta`.
pub fn alternating_weight_series(variant: AlternatingVariant, s_or_n: f64, y: f64) -> MathResult<SeriesEval> {
    let (x, s, y) = match variant {
        AlternatingVariant::ShiftedZeta => (-2.0, s_or_n, y),
        AlternatingVariant::IntegerZeta => (-2.0, s_or_n + 1.0, 1.0),
        AlternatingVariant::AlternatingZeta => (2.0, s_or_n, 1.0),
        AlternatingVariant::QuarterPolylog => (0.5, s_or_n, 1.0),
    };
    abel_at_minus_one(x, s, y)
}

fn lerch_style_integral<F: Fn(f64) -> f64>(weight: F, x_sign: f64, x: f64, s: f64, y: f64) -> MathResult<f64> {
    // e^{-(y-1)u} / (e^u -+ x) written as e^{-yu} / (1 -+ x e^{-u})
    check_shift(y)?;
    if !(s > 0.0) {
        return domain(format!("integral form needs s > 0, got {s}"));
    }
    let integrand = |u: f64| {
        let denom = if x_sign < 0.0 { base(-x, u) } else { base(x, u) };
        u.powf(s - 1.0) * (-y * u).exp() * weight(u) / denom
    };
    Ok(half_line(integrand, s)? / gamma(s)?)
}

/// `(1/Gamma(s)) int_0^inf u^{s-1} e^{-(y-1)u} / (e^u - x) du`.
pub fn lerch_integral(x: f64, s: f64, y: f64) -> MathResult<f64> {
    lerch_style_integral(|_| 1.0, -1.0, x, s, y)
}

/// `-(1/Gamma(s)) int_0^inf u^{s-1} e^{-(y-1)u} log(x e^{-u}) / (e^u - x) du`, for `0 < x <= 1`.
pub fn log_lerch_integral(x: f64, s: f64, y: f64) -> MathResult<f64> {
    if !(x > 0.0) {
        return domain("log_lerch_integral needs x > 0");
    }
    let lx = x.ln();
    lerch_style_integral(|u| u - lx, -1.0, x, s, y)
}

/// `-(1/Gamma(s)) int_0^inf u^{s-1} e^{-(y-1)u} log(1 - w(1 + x e^{-u})) / (e^u + x) du`.
pub fn log_weighted_integral(w: f64, x: f64, s: f64, y: f64) -> MathResult<f64> {
    lerch_style_integral(|u| -(-w * base(x, u)).ln_1p(), 1.0, x, s, y)
}

/// `(1/Gamma(s)) int_0^inf u^{s-1} e^{-(y-1)u} Li_r(v(1 + x e^{-u})) / (e^u + x) du`.
pub fn polylog_weighted_integral(v: f64, r: f64, x: f64, s: f64, y: f64) -> MathResult<f64> {
    let failed = std::cell::Cell::new(None);
    let value = lerch_style_integral(
        |u| match polylog(r, v * base(x, u)) {
            Ok(l) => l,
            Err(e) => {
                failed.set(Some(e));
                0.0
            }
        },
        1.0,
        x,
        s,
        y,
    )?;
    if let Some(e) = failed.into_inner() {
        return Err(e);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{alt_hurwitz_zeta, hurwitz_zeta, lerch_phi, riemann_zeta, LerchTriple};
    use std::f64::consts::PI;

    #[test]
    fn trivial_binomial_sums() {
        assert_eq!(finite_binomial_sum(0, 0.7, 2.0, 1.5, Precision::Binary64, 1e-12).unwrap(), 2f64.powf(-1.5));
        let v = finite_binomial_sum(1, -1.0, 1.0, 1.0, Precision::Binary64, 1e-12).unwrap();
        assert_eq!(v, 0.5);
        for n in [0usize, 5, 50] {
            assert_eq!(finite_binomial_sum(n, 0.0, 3.0, 2.0, Precision::Binary64, 1e-12).unwrap(), 1.0 / 9.0);
        }
    }

    #[test]
    fn precision_ladder() {
        // sum_k C(n,k) (-1)^k / (k+1) = 1/(n+1)
        let r = finite_binomial_sum(60, -1.0, 1.0, 1.0, Precision::Binary64, 1e-14);
        assert!(matches!(r, Err(MathError::PrecisionLoss { .. })));
        let dd = finite_binomial_sum(60, -1.0, 1.0, 1.0, Precision::DoubleDouble, 1e-12).unwrap();
        assert!((dd - 1.0 / 61.0).abs() < 1e-16);
        let big = binomial_sum_auto(400, -1.0, 1.0, 1.0, 1e-14).unwrap();
        assert!((big - 1.0 / 401.0).abs() < 1e-16);
    }

    #[test]
    fn integral_representation_agrees() {
        let direct = finite_binomial_sum(10, -1.0, 1.0, 2.0, Precision::DoubleDouble, 1e-20).unwrap();
        let integral = binomial_sum_integral(10, -1.0, 1.0, 2.0).unwrap();
        assert!((direct - integral).abs() < 1e-16);
        let direct = finite_binomial_sum(25, 0.75, 1.5, 2.5, Precision::Binary64, 1e-6).unwrap();
        let integral = binomial_sum_integral(25, 0.75, 1.5, 2.5).unwrap();
        assert!((direct / integral - 1.0).abs() < 1e-14);
    }

    #[test]
    fn hasse_zeta_values() {
        for s in [2.0, 3.0, 4.0] {
            let h = hasse_zeta(s).unwrap();
            assert!((h.value - riemann_zeta(s).unwrap()).abs() < 1e-9, "s={s}: {}", h.value);
        }
        let z0 = hasse_zeta(0.0).unwrap();
        assert!((z0.value + 0.5).abs() < 1e-15);
        let zm3 = hasse_zeta(-3.0).unwrap();
        assert!((zm3.value - 1.0 / 120.0).abs() < 1e-15);
        assert!(matches!(hasse_zeta(1.0), Err(MathError::Pole(_))));
    }

    #[test]
    fn hasse_lerch_examples() {
        let v = hasse_lerch_lhs(1.0, 2.0, 1.0).unwrap();
        assert!((v.value - 2.0 * riemann_zeta(3.0).unwrap()).abs() < 1e-9);
        let (x, s, y) = (0.5, 1.0, 0.5);
        let lhs = hasse_lerch_lhs(x, s, y).unwrap();
        let phi = |s| lerch_phi(LerchTriple::new(x, s, y).unwrap()).unwrap();
        let rhs = s * phi(s + 1.0) - x.ln() * phi(s);
        assert!((lhs.value - rhs).abs() < 1e-9, "{} vs {rhs}", lhs.value);
    }

    #[test]
    fn euler_transform_forms() {
        // t = 1/2 gives 2 Phi(x, s, y)
        let v = geometric_weighted_sum(0.5, 0.5, 2.0, 1.0).unwrap();
        let phi = lerch_phi(LerchTriple::new(0.5, 2.0, 1.0).unwrap()).unwrap();
        assert!((0.5 * v.value - phi).abs() < 1e-14, "{} vs {phi}", 0.5 * v.value);
        let v = geometric_weighted_sum(0.5, -1.0, 1.0, 0.5).unwrap();
        assert!((0.5 * v.value - PI / 2.0).abs() < 1e-14);
        let v = geometric_weighted_sum(0.5, 1.0, 2.0, 1.5).unwrap();
        assert!((0.5 * v.value - hurwitz_zeta(2.0, 1.5).unwrap()).abs() < 1e-11, "{}", 0.5 * v.value);
    }

    #[test]
    fn abel_means() {
        let v = alternating_weight_series(AlternatingVariant::IntegerZeta, 2.0, 1.0).unwrap();
        assert!((v.value - 0.5 * riemann_zeta(3.0).unwrap()).abs() < 1e-8, "{}", v.value);
        let v = alternating_weight_series(AlternatingVariant::QuarterPolylog, 2.0, 1.0).unwrap();
        assert!((v.value + 2.0 * polylog(2.0, -0.25).unwrap()).abs() < 1e-12);
        let v = alternating_weight_series(AlternatingVariant::AlternatingZeta, 3.0, 1.0).unwrap();
        assert!((v.value - 0.5 * 0.75 * riemann_zeta(3.0).unwrap()).abs() < 1e-12);
        let v = alternating_weight_series(AlternatingVariant::ShiftedZeta, 3.0, 0.5).unwrap();
        assert!((v.value - 0.5 * hurwitz_zeta(3.0, 0.5).unwrap()).abs() < 1e-7, "{}", v.value);
    }

    #[test]
    fn integral_forms() {
        let (x, s, y) = (0.5, 2.0, 1.0 / 3.0);
        let phi = lerch_phi(LerchTriple::new(x, s, y).unwrap()).unwrap();
        assert!((lerch_integral(x, s, y).unwrap() - phi).abs() < 1e-13);
        let a = alt_hurwitz_zeta(2.0, 0.75).unwrap();
        assert!((lerch_integral(-1.0, 2.0, 0.75).unwrap() - a).abs() < 1e-13);
    }
}
