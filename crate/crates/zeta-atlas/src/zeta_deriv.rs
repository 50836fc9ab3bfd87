//! Identities for `zeta'(s, t) = d/ds zeta(s, t)` at negative integers: the
//! Clausen reflection formulas, Fourier forms, Barnes G, multiple sines and
//! the `zeta(2n)` generating series.
//!
//! All `zeta'` values come from [`hurwitz_zeta_sderiv`]; the trigonometric and
//! product forms here are checked against it, never used in its place.

use std::cell::RefCell;
use std::f64::consts::{LN_2, PI};

use crate::error::{domain, MathResult};
use crate::numerics::{
    bernoulli_f64, sum_series, sum_with_smooth_tail, tanh_sinh_integrate, CompensatedSum, EndpointTag, Method,
    QuadratureProblem, SeriesEval,
};
use crate::specfun::{
    bernoulli_poly, clausen, constants, hurwitz_zeta_sderiv, log_gamma, riemann_zeta, riemann_zeta_sderiv,
    EULER_GAMMA,
};

const TWO_PI: f64 = 2.0 * PI;
const QUAD_TOL: f64 = 1e-15;
const SERIES_TOL: f64 = 1e-17;
const MAX_TERMS: usize = 200_000;

/// `zeta(k)` for integer `k >= 0`, with `zeta(0) = -1/2`; large `k` summed directly.
fn zeta_integer(k: u32) -> MathResult<f64> {
    Ok(1.0 + zeta_minus_one(k)?)
}

/// `zeta(k) - 1`, accurate in relative terms for large `k`.
fn zeta_minus_one(k: u32) -> MathResult<f64> {
    match k {
        0 => Ok(-1.5),
        1 => Err(crate::MathError::Pole("zeta(1)".into())),
        2..=19 => Ok(riemann_zeta(k as f64)? - 1.0),
        _ => {
            let mut acc = CompensatedSum::new();
            for n in 2u32.. {
                let t = (n as f64).powi(-(k as i32));
                acc.add(t);
                if t <= 1e-18 * acc.value() {
                    break;
                }
            }
            Ok(acc.value())
        }
    }
}

fn check_open_unit(name: &str, t: f64) -> MathResult<()> {
    if !(t > 0.0 && t < 1.0) {
        return domain(format!("{name} = {t} must lie in (0, 1)"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReflectionParity {
    /// `zeta'(-2n-1, t) - zeta'(-2n-1, 1-t)` against `Cl_{2n+2}(2 pi t)`
    Odd,
    /// `zeta'(-2n, t) + zeta'(-2n, 1-t)` against `Cl_{2n+1}(2 pi t)`
    Even,
}

impl ReflectionParity {
    pub fn as_str(self) -> &'static str {
        match self {
            ReflectionParity::Odd => "odd",
            ReflectionParity::Even => "even",
        }
    }
}

/// (`zeta'` combination, Clausen side) of the reflection formulas.
///
/// Both parities carry the factor `(-1)^n`:
/// odd: `(-1)^n (2n+1)! / (2 pi)^{2n+1} Cl_{2n+2}(2 pi t)`;
/// even: `(-1)^n (2n)! / (2 pi)^{2n} Cl_{2n+1}(2 pi t)`.
pub fn adamchik_reflection(n: u32, t: f64, parity: ReflectionParity) -> MathResult<(f64, f64)> {
    check_open_unit("t", t)?;
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let m = match parity {
        ReflectionParity::Odd => 2 * n + 1,
        ReflectionParity::Even => 2 * n,
    };
    let s = -(m as f64);
    let a = hurwitz_zeta_sderiv(s, t)?;
    let b = hurwitz_zeta_sderiv(s, 1.0 - t)?;
    let lhs = match parity {
        ReflectionParity::Odd => a - b,
        ReflectionParity::Even => a + b,
    };
    let mut prefactor = 1.0;
    for k in 1..=m {
        prefactor *= k as f64 / TWO_PI;
    }
    let rhs = sign * prefactor * clausen(m + 1, TWO_PI * t)?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FourierOrder {
    /// `2 zeta'(-1, t) - B_2(t) (1 - gamma - log 2 pi)` against a cosine series
    MinusOne,
    /// `zeta'(-2, t) - B_3(t) c` against a sine series
    MinusTwo,
}

impl FourierOrder {
    pub fn as_str(self) -> &'static str {
        match self {
            FourierOrder::MinusOne => "minus1",
            FourierOrder::MinusTwo => "minus2",
        }
    }
}

/// Left side of the Fourier forms.
///
/// For `MinusTwo` the Bernoulli factor is `1/2 - gamma/3 - w log(2 pi)`, with
/// `w = 1/2` in the printed form and `w = 1/3` in the form that follows from
/// differentiating the Hurwitz Fourier series.
pub fn fourier_lhs(order: FourierOrder, t: f64, printed: bool) -> MathResult<f64> {
    let log_two_pi = TWO_PI.ln();
    match order {
        FourierOrder::MinusOne => {
            Ok(2.0 * hurwitz_zeta_sderiv(-1.0, t)? - bernoulli_poly(2, t) * (1.0 - EULER_GAMMA - log_two_pi))
        }
        FourierOrder::MinusTwo => {
            let w = if printed { 0.5 } else { 1.0 / 3.0 };
            let c = 0.5 - EULER_GAMMA / 3.0 - w * log_two_pi;
            Ok(hurwitz_zeta_sderiv(-2.0, t)? - bernoulli_poly(3, t) * c)
        }
    }
}

/// Smallest `q <= 96` with `q t` an integer, if any.
fn rational_period(t: f64) -> Option<usize> {
    (1..=96usize).find(|&q| {
        let v = t * q as f64;
        (v - v.round()).abs() <= 1e-12 * v.abs().max(1.0)
    })
}

/// (printed left side, trigonometric right side).
///
/// The right side is
/// `-4 sum log n cos(2 n pi t) / (2 pi n)^2 + Cl_2(2 pi t) / (2 pi)` or
/// `-4 sum log n sin(2 n pi t) / (2 pi n)^3 - Cl_3(2 pi t) / (2 pi)^2`.
/// For rational `t` the series is grouped by period and finished with an
/// Euler-Maclaurin tail over the period index; otherwise it is cut at
/// `term_budget` terms and the reported tail is the absolute bound
/// `4 (1 + log N) / ((2 pi)^k (k - 1) N^{k-1})`.
pub fn fourier_zeta_prime(t: f64, order: FourierOrder, term_budget: usize) -> MathResult<(f64, SeriesEval)> {
    if !(t > 0.0 && t <= 1.0) {
        return domain(format!("t = {t} must lie in (0, 1]"));
    }
    if term_budget == 0 {
        return domain("term_budget must be positive");
    }
    let (power, trig): (i32, fn(f64) -> f64) = match order {
        FourierOrder::MinusOne => (2, f64::cos),
        FourierOrder::MinusTwo => (3, f64::sin),
    };
    let scale = TWO_PI.powi(-power);
    let term = |n: f64, c: f64| c * n.ln() * scale * n.powi(-power);
    let series = match rational_period(t) {
        Some(q) => {
            let coeff: Vec<f64> = (1..=q).map(|j| trig(TWO_PI * t * j as f64)).collect();
            let block = |m: f64| {
                let mut acc = CompensatedSum::new();
                for (j, c) in coeff.iter().enumerate() {
                    if c.abs() > 1e-15 {
                        acc.add(term(m * q as f64 + (j + 1) as f64, *c));
                    }
                }
                acc.value()
            };
            let blocks = (term_budget / q).max(1);
            sum_with_smooth_tail(|m| block(m as f64), block, 0, blocks, SERIES_TOL)?
        }
        None => {
            let mut acc = CompensatedSum::new();
            for n in 1..=term_budget {
                let nf = n as f64;
                acc.add(term(nf, trig(TWO_PI * t * nf)));
            }
            let nf = term_budget as f64;
            let bound = (1.0 + nf.ln()) * scale / ((power - 1) as f64 * nf.powi(power - 1));
            SeriesEval {
                value: acc.value(),
                terms_used: term_budget,
                tail_bound: bound,
                method: Method::Direct,
                converged: 4.0 * bound <= 1e-5,
            }
        }
    };
    let closing = match order {
        FourierOrder::MinusOne => clausen(2, TWO_PI * t)? / TWO_PI,
        FourierOrder::MinusTwo => -clausen(3, TWO_PI * t)? / (TWO_PI * TWO_PI),
    };
    let rhs = SeriesEval { value: -4.0 * series.value + closing, tail_bound: 4.0 * series.tail_bound, ..series };
    Ok((fourier_lhs(order, t, true)?, rhs))
}

/// `log G(1 + x)` for `|x| < 1` from the Maclaurin series
/// `x/2 log 2 pi - (x + (1 + gamma) x^2)/2 + sum_{k>=2} (-1)^k zeta(k) x^{k+1}/(k+1)`.
///
/// The unit part of `zeta(k)` is summed in closed form, leaving a series in
/// `zeta(k) - 1` that converges like `(x/2)^k`.
pub fn log_barnes_g(x: f64) -> MathResult<f64> {
    if !(x.abs() < 1.0) {
        return domain(format!("log_barnes_g needs |x| < 1, got {x}"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    // sum_{k>=2} (-1)^k x^{k+1}/(k+1) = log(1+x) - x + x^2/2
    let unit_part = x.ln_1p() - x + 0.5 * x * x;
    let mut zeta_err = None;
    let mut pow = x * x;
    let rest = sum_series(
        |j| {
            let k = j as u32 + 2;
            pow *= x;
            let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
            match zeta_minus_one(k) {
                Ok(z) => sign * z * pow / (k + 1) as f64,
                Err(e) => {
                    zeta_err = Some(e);
                    f64::NAN
                }
            }
        },
        Some(&|n: usize| 2.0 * (x.abs() / 2.0).powi(n as i32 + 2) / (1.0 - x.abs() / 2.0)),
        SERIES_TOL,
        10_000,
    );
    if let Some(e) = zeta_err {
        return Err(e);
    }
    let rest = rest?;
    let mut acc = CompensatedSum::new();
    acc.add(0.5 * x * TWO_PI.ln());
    acc.add(-0.5 * (x + (1.0 + EULER_GAMMA) * x * x));
    acc.add(unit_part);
    acc.add(rest.value);
    Ok(acc.value())
}

/// `log G(1 + x) = zeta'(-1) - zeta'(-1, 1 + x) + x log Gamma(1 + x)` for `x > -1`.
pub fn log_barnes_g_gosper(x: f64) -> MathResult<f64> {
    if !(x > -1.0) {
        return domain(format!("log_barnes_g_gosper needs x > -1, got {x}"));
    }
    let k = constants();
    Ok(k.zeta_prime_minus1.value - hurwitz_zeta_sderiv(-1.0, 1.0 + x)? + x * log_gamma(1.0 + x)?)
}

/// `x/2 log 2 pi - x(1+x)/2 + gamma x^2/2 + sum_{k>=2} (-1)^{k+1} zeta(k) x^{k+1} / (k(k+1))`
/// for `|x| < 1`, the Maclaurin series of `zeta'(-1) - zeta'(-1, 1+x)`.
pub fn zeta_prime_shift_series(x: f64) -> MathResult<f64> {
    if !(x.abs() < 1.0) {
        return domain(format!("zeta_prime_shift_series needs |x| < 1, got {x}"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    // unit part of zeta(k): sum_{k>=2} (-1)^{k+1} x^{k+1} / (k(k+1))
    let unit_part = (1.0 + x) * x.ln_1p() - x - 0.5 * x * x;
    let mut zeta_err = None;
    let mut pow = x * x;
    let rest = sum_series(
        |j| {
            let k = j as u32 + 2;
            pow *= x;
            let sign = if k.is_multiple_of(2) { -1.0 } else { 1.0 };
            match zeta_minus_one(k) {
                Ok(z) => sign * z * pow / (k * (k + 1)) as f64,
                Err(e) => {
                    zeta_err = Some(e);
                    f64::NAN
                }
            }
        },
        Some(&|n: usize| 2.0 * (x.abs() / 2.0).powi(n as i32 + 2) / (1.0 - x.abs() / 2.0)),
        SERIES_TOL,
        10_000,
    );
    if let Some(e) = zeta_err {
        return Err(e);
    }
    let rest = rest?;
    let mut acc = CompensatedSum::new();
    acc.add(0.5 * x * TWO_PI.ln());
    acc.add(-0.5 * x * (1.0 + x));
    acc.add(0.5 * EULER_GAMMA * x * x);
    acc.add(unit_part);
    acc.add(rest.value);
    Ok(acc.value())
}

/// Order and argument of a multiple sine `S_r(x)`, `r` in 1..=3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultipleSineOrder {
    r: u32,
    x: f64,
}

impl MultipleSineOrder {
    /// `S_1` needs `0 < x < 1`; higher orders accept `0 <= x < 1`.
    pub fn new(r: u32, x: f64) -> MathResult<Self> {
        if !(1..=3).contains(&r) {
            return domain(format!("multiple sine order {r} not in 1..=3"));
        }
        let ok = if r == 1 { x > 0.0 && x < 1.0 } else { (0.0..1.0).contains(&x) };
        if !ok {
            return domain(format!("log S_{r}(x) is not real-valued at x = {x}"));
        }
        Ok(MultipleSineOrder { r, x })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// `log S_r(x) = int_0^x pi t^{r-1} cot(pi t) dt`; `log(2 sin pi x)` for `r = 1`.
pub fn log_multiple_sine(m: MultipleSineOrder) -> MathResult<f64> {
    let x = m.x;
    if m.r == 1 {
        return Ok((2.0 * (PI * x).sin()).ln());
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let power = (m.r - 1) as i32;
    let limit = if m.r == 2 { 1.0 } else { 0.0 };
    let p = QuadratureProblem::new(move |t: f64| PI * t.powi(power) / (PI * t).tan(), 0.0, x)
        .left(EndpointTag::Removable(limit))
        .tol(QUAD_TOL);
    Ok(tanh_sinh_integrate(&p)?.value)
}

/// `-sum_{k>=0} zeta(2k) x^{2k+2} / (k+1)` (with `zeta(0) = -1/2`) for `|x| < 1`, equal to `log S_3(x)`.
pub fn log_sine3_series(x: f64) -> MathResult<SeriesEval> {
    if !(x.abs() < 1.0) {
        return domain(format!("log_sine3_series needs |x| < 1, got {x}"));
    }
    let q = x * x;
    let mut err = None;
    let r = sum_series(
        |k| match zeta_integer(2 * k as u32) {
            Ok(z) => -z * q.powi(k as i32 + 1) / (k + 1) as f64,
            Err(e) => {
                err = Some(e);
                f64::NAN
            }
        },
        Some(&|n: usize| 2.0 * q.powi(n as i32 + 1) / ((n + 1) as f64 * (1.0 - q))),
        SERIES_TOL,
        MAX_TERMS,
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(r?)
}

/// (`int_0^t log(2 sin pi x) dx` by quadrature, `-[zeta'(-1, t) - zeta'(-1, 1-t)]`).
pub fn log_sin_integral_identity(t: f64) -> MathResult<(f64, f64)> {
    check_open_unit("t", t)?;
    let p = QuadratureProblem::new(|x: f64| (2.0 * (PI * x).sin()).ln(), 0.0, t)
        .left(EndpointTag::Log)
        .right(if t > 0.99 { EndpointTag::Log } else { EndpointTag::None })
        .tol(QUAD_TOL);
    let quad = tanh_sinh_integrate(&p)?.value;
    let closed = -(hurwitz_zeta_sderiv(-1.0, t)? - hurwitz_zeta_sderiv(-1.0, 1.0 - t)?);
    Ok((quad, closed))
}

/// `zeta'(1 - n, t)` for `0 < t`, shifting small `t` by one:
/// `zeta'(s, t) = -t^{-s} log t + zeta'(s, 1 + t)`.
fn zeta_sderiv_near_zero(s: f64, t: f64) -> MathResult<f64> {
    if t < 0.5 {
        Ok(-t.powf(-s) * t.ln() + hurwitz_zeta_sderiv(s, 1.0 + t)?)
    } else {
        hurwitz_zeta_sderiv(s, t)
    }
}

/// (`n int_0^v zeta'(1-n, t) dt`, `[B_{n+1} - B_{n+1}(v)]/(n(n+1)) + zeta'(-n, v) - zeta'(-n)`).
pub fn adamchik_integral(n: u32, v: f64) -> MathResult<(f64, f64)> {
    if n == 0 {
        return domain("adamchik_integral needs n >= 1");
    }
    if !(v > 0.0 && v <= 1.0) {
        return domain(format!("v = {v} must lie in (0, 1]"));
    }
    let s = 1.0 - n as f64;
    let left = if n == 1 { EndpointTag::Log } else { EndpointTag::Removable(riemann_zeta_sderiv(s)?) };
    let failure = RefCell::new(None);
    let p = QuadratureProblem::new(
        |t: f64| match zeta_sderiv_near_zero(s, t) {
            Ok(v) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        },
        0.0,
        v,
    )
    .left(left)
    .tol(1e-14);
    let quad = tanh_sinh_integrate(&p);
    let quad = match (quad, failure.into_inner()) {
        (Ok(q), _) => q.value,
        (Err(_), Some(e)) => return Err(e),
        (Err(e), None) => return Err(e.into()),
    };
    let nf = n as f64;
    let k = (n + 1) as usize;
    let rhs = (bernoulli_f64(k) - bernoulli_poly(k, v)) / (nf * (nf + 1.0)) + hurwitz_zeta_sderiv(-nf, v)?
        - riemann_zeta_sderiv(-nf)?;
    Ok((nf * quad, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvenZetaForm {
    /// `-2 sum_{n>=0} zeta(2n) t^{2n}` against `pi t cot(pi t)`
    Cot,
    /// `sum_{n>=1} zeta(2n) t^{2n} / n` against `log(pi t) - log sin(pi t)`
    LogSin,
    /// `(2 pi^2 / 7) [log pi - 1/2 - sum_{n>=1} zeta(2n) / (n (n+1) 4^n)]` against `zeta(3)`
    FujiiSuzuki,
    /// `-2 sum_{n>=0} zeta(2n) t^{2n+1} / (2n+1)` against `zeta'(-1, t) - zeta'(-1, 1-t) + t log(2 sin pi t)`
    OddPower,
}

impl EvenZetaForm {
    pub fn as_str(self) -> &'static str {
        match self {
            EvenZetaForm::Cot => "cot",
            EvenZetaForm::LogSin => "log_sin",
            EvenZetaForm::FujiiSuzuki => "fujii_suzuki",
            EvenZetaForm::OddPower => "odd_power",
        }
    }
}

/// Sums `zeta(2n) w(n) q^n` from `start` with the bound `zeta(2N) q^N / (1 - q)` on the tail.
fn even_zeta_sum(start: usize, q: f64, weight: impl Fn(usize) -> f64) -> MathResult<SeriesEval> {
    let mut err = None;
    let r = sum_series(
        |j| {
            let n = start + j;
            match zeta_integer(2 * n as u32) {
                Ok(z) => z * weight(n) * q.powi(n as i32),
                Err(e) => {
                    err = Some(e);
                    f64::NAN
                }
            }
        },
        Some(&|j: usize| 2.0 * q.powi((start + j) as i32) / (1.0 - q)),
        SERIES_TOL,
        MAX_TERMS,
    );
    if let Some(e) = err {
        return Err(e);
    }
    Ok(r?)
}

/// (series side, closed side); `t` is ignored by `FujiiSuzuki`.
pub fn zeta_even_series(t: f64, form: EvenZetaForm) -> MathResult<(f64, f64)> {
    if form != EvenZetaForm::FujiiSuzuki && !(t.abs() < 1.0) {
        return domain(format!("zeta_even_series needs |t| < 1, got {t}"));
    }
    let q = t * t;
    match form {
        EvenZetaForm::Cot => {
            let s = even_zeta_sum(0, q, |_| -2.0)?;
            let closed = if t == 0.0 { 1.0 } else { PI * t / (PI * t).tan() };
            Ok((s.value, closed))
        }
        EvenZetaForm::LogSin => {
            if t == 0.0 {
                return Ok((0.0, 0.0));
            }
            let s = even_zeta_sum(1, q, |n| 1.0 / n as f64)?;
            Ok((s.value, (PI * t / (PI * t).sin()).ln()))
        }
        EvenZetaForm::FujiiSuzuki => {
            let s = even_zeta_sum(1, 0.25, |n| 1.0 / (n * (n + 1)) as f64)?;
            let series = 2.0 * PI * PI / 7.0 * (PI.ln() - 0.5 - s.value);
            Ok((series, riemann_zeta(3.0)?))
        }
        EvenZetaForm::OddPower => {
            check_open_unit("t", t)?;
            let s = even_zeta_sum(0, q, |n| -2.0 / (2 * n + 1) as f64)?;
            let closed = hurwitz_zeta_sderiv(-1.0, t)? - hurwitz_zeta_sderiv(-1.0, 1.0 - t)?
                + t * (2.0 * (PI * t).sin()).ln();
            Ok((t * s.value, closed))
        }
    }
}

/// `n log((2n+1)/(2n-1)) - 1 = sum_{k>=1} (2n)^{-2k} / (2k+1)`; the expansion avoids cancellation.
fn bromwich_term(n: f64) -> f64 {
    if n < 4.0 {
        return n * ((2.0 * n + 1.0) / (2.0 * n - 1.0)).ln() - 1.0;
    }
    let z = 1.0 / (4.0 * n * n);
    let mut acc = 0.0;
    let mut pow = 1.0;
    for k in 1..=12 {
        pow *= z;
        acc += pow / (2 * k + 1) as f64;
    }
    acc
}

/// (`sum_{n>=1} [n log((2n+1)/(2n-1)) - 1]`, `(1 - log 2) / 2`).
pub fn bromwich_sum() -> MathResult<(SeriesEval, f64)> {
    let r = sum_with_smooth_tail(|n| bromwich_term(n as f64), bromwich_term, 1, 2000, SERIES_TOL)?;
    Ok((r, 0.5 * (1.0 - LN_2)))
}

/// Truncated infinite products, kept as logarithms of the first `factors` factors.
pub mod products {
    use super::*;

    /// `log[2 pi x prod (1 - x^2/n^2)]`, the product for `S_1(x) = 2 sin pi x`.
    pub fn log_sine1(x: f64, factors: usize) -> f64 {
        let mut acc = CompensatedSum::new();
        acc.add((TWO_PI * x).ln());
        for n in 1..=factors {
            let nf = n as f64;
            acc.add((-(x * x) / (nf * nf)).ln_1p());
        }
        acc.value()
    }

    /// `x + sum_n [n log((1 - x/n)/(1 + x/n)) + 2x]`, the product for `S_2(x)`.
    pub fn log_sine2(x: f64, factors: usize) -> f64 {
        let mut acc = CompensatedSum::new();
        acc.add(x);
        for n in 1..=factors {
            let nf = n as f64;
            acc.add(nf * ((-x / nf).ln_1p() - (x / nf).ln_1p()) + 2.0 * x);
        }
        acc.value()
    }

    /// `x^2/2 + sum_n [n^2 log(1 - x^2/n^2) + sign x^2]`, the product for `S_3(x)`.
    ///
    /// Only `sign = +1` gives a convergent product.
    pub fn log_sine3(x: f64, factors: usize, sign: f64) -> f64 {
        let mut acc = CompensatedSum::new();
        acc.add(0.5 * x * x);
        for n in 1..=factors {
            let nf = n as f64;
            acc.add(nf * nf * (-(x * x) / (nf * nf)).ln_1p() + sign * x * x);
        }
        acc.value()
    }

    /// Weierstrass product for `log G(1 + x)`, with per-factor exponent
    /// `x^2/(2k) - x` (`printed = false`) or `-x^2/(2k)` (`printed = true`).
    pub fn log_barnes_g(x: f64, factors: usize, printed: bool) -> f64 {
        let mut acc = CompensatedSum::new();
        acc.add(0.5 * x * TWO_PI.ln());
        acc.add(-0.5 * (EULER_GAMMA * x * x + x * x + x));
        for k in 1..=factors {
            let kf = k as f64;
            let exponent = if printed { -x * x / (2.0 * kf) } else { x * x / (2.0 * kf) - x };
            acc.add(kf * (x / kf).ln_1p() + exponent);
        }
        acc.value()
    }

    /// `x/2 log 2 pi - x(1+x)/2 - gamma x^2/2 + sum_n [x^2/(2n) - x + n log(1 + x/n)]`.
    pub fn log_barnes_g_sum(x: f64, terms: usize) -> f64 {
        let mut acc = CompensatedSum::new();
        acc.add(0.5 * x * TWO_PI.ln() - 0.5 * x * (1.0 + x) - 0.5 * EULER_GAMMA * x * x);
        for n in 1..=terms {
            let nf = n as f64;
            acc.add(x * x / (2.0 * nf) - x + nf * (x / nf).ln_1p());
        }
        acc.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{gamma, CATALAN, ZETA3};

    #[test]
    fn reflection_examples() {
        let (l, r) = adamchik_reflection(1, 0.5, ReflectionParity::Even).unwrap();
        assert!((l - 2.0 * 3.0 * ZETA3 / (16.0 * PI * PI)).abs() < 1e-13 && (l - r).abs() < 1e-13);
        let (l, r) = adamchik_reflection(0, 0.25, ReflectionParity::Odd).unwrap();
        assert!((l - CATALAN / TWO_PI).abs() < 1e-14 && (r - l).abs() < 1e-14);
        let (l, r) = adamchik_reflection(1, 1.0 / 6.0, ReflectionParity::Even).unwrap();
        let cl3 = -clausen(3, PI / 3.0).unwrap() / (2.0 * PI * PI);
        assert!((l - cl3).abs() < 1e-13 && (r - cl3).abs() < 1e-14);
        assert!((l + ZETA3 / (6.0 * PI * PI)).abs() < 1e-13);
    }

    #[test]
    fn reflection_grid() {
        for parity in [ReflectionParity::Odd, ReflectionParity::Even] {
            for n in 0..=2 {
                for t in [1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5] {
                    let (l, r) = adamchik_reflection(n, t, parity).unwrap();
                    assert!((l - r).abs() < 1e-10, "{} n = {n} t = {t}: {l} {r}", parity.as_str());
                }
            }
        }
    }

    #[test]
    fn fourier_forms() {
        for t in [0.25, 0.5, 1.0 / 3.0, 1.0] {
            let (l, r) = fourier_zeta_prime(t, FourierOrder::MinusOne, 10_000).unwrap();
            assert!((l - r.value).abs() < 1e-10, "t = {t}: {l} {}", r.value);
            let corrected = fourier_lhs(FourierOrder::MinusTwo, t, false).unwrap();
            let (_, r) = fourier_zeta_prime(t, FourierOrder::MinusTwo, 10_000).unwrap();
            assert!((corrected - r.value).abs() < 1e-10, "t = {t}");
        }
        // the printed weight only agrees where B_3 vanishes
        let (l, r) = fourier_zeta_prime(0.5, FourierOrder::MinusTwo, 1000).unwrap();
        assert!((l - r.value).abs() < 1e-10);
        let (l, r) = fourier_zeta_prime(1.0 / 6.0, FourierOrder::MinusTwo, 1000).unwrap();
        assert!((l - r.value).abs() > 1e-4);
        // irrational argument falls back to a truncated sum
        let (l, r) = fourier_zeta_prime(0.5f64.sqrt(), FourierOrder::MinusOne, 200_000).unwrap();
        assert!((l - r.value).abs() < 1e-5);
        assert!(r.converged);
    }

    #[test]
    fn adamchik_quarter_value() {
        let v = hurwitz_zeta_sderiv(-1.0, 0.25).unwrap();
        let k = constants();
        assert!((v - (CATALAN / (4.0 * PI) - k.zeta_prime_minus1.value / 8.0)).abs() < 1e-14);
    }

    #[test]
    fn barnes_g_forms() {
        assert_eq!(log_barnes_g(0.0).unwrap(), 0.0);
        for x in [-0.5, -0.25, 0.25, 0.5, 0.9, -0.9] {
            let a = log_barnes_g(x).unwrap();
            let b = log_barnes_g_gosper(x).unwrap();
            assert!((a - b).abs() < 1e-13, "x = {x}: {a} {b}");
        }
        assert!(log_barnes_g(1.0 - 1e-9).unwrap().abs() < 1e-8);
        assert!(log_barnes_g(1.0).is_err());
        // G(3/2) = G(1/2) Gamma(1/2)
        let lhs = log_barnes_g(0.5).unwrap();
        let rhs = log_barnes_g(-0.5).unwrap() + gamma(0.5).unwrap().ln();
        assert!((lhs - rhs).abs() < 1e-13);
    }

    #[test]
    fn multiple_sine() {
        let s1 = log_multiple_sine(MultipleSineOrder::new(1, 1.0 / 6.0).unwrap()).unwrap();
        assert!(s1.abs() < 1e-15);
        let s2 = log_multiple_sine(MultipleSineOrder::new(2, 0.5).unwrap()).unwrap();
        assert!((s2 - 0.5 * LN_2).abs() < 1e-15);
        for x in [0.25, 0.5] {
            let s3 = log_multiple_sine(MultipleSineOrder::new(3, x).unwrap()).unwrap();
            assert!((s3 - log_sine3_series(x).unwrap().value).abs() < 1e-14);
        }
        // Kinkelin
        for x in [1.0 / 6.0, 0.25, 1.0 / 3.0] {
            let s2 = log_multiple_sine(MultipleSineOrder::new(2, x).unwrap()).unwrap();
            let g = log_barnes_g(x).unwrap() - log_barnes_g(-x).unwrap();
            assert!((g - (x * TWO_PI.ln() - s2)).abs() < 1e-13, "x = {x}");
        }
        assert!(MultipleSineOrder::new(2, 1.0).is_err());
        assert!(MultipleSineOrder::new(4, 0.5).is_err());
    }

    #[test]
    fn log_sin_integral() {
        let (q, c) = log_sin_integral_identity(0.5).unwrap();
        assert!(q.abs() < 1e-15 && c.abs() < 1e-15);
        let (q, c) = log_sin_integral_identity(1.0 / 6.0).unwrap();
        assert!((q - c).abs() < 1e-13);
        let (q, c) = log_sin_integral_identity(1.0 - 1e-6).unwrap();
        assert!(q.abs() < 1e-4 && (q - c).abs() < 1e-12);
    }

    #[test]
    fn adamchik_integrals() {
        let (l, r) = adamchik_integral(2, 1.0).unwrap();
        assert!(l.abs() < 1e-13 && r.abs() < 1e-13);
        let (l, r) = adamchik_integral(2, 0.5).unwrap();
        let printed = -bernoulli_poly(3, 0.5) / 12.0
            + 0.5 * hurwitz_zeta_sderiv(-2.0, 0.5).unwrap()
            + ZETA3 / (8.0 * PI * PI);
        assert!((l - r).abs() < 1e-13 && (0.5 * l - printed).abs() < 1e-13);
        let (l, r) = adamchik_integral(1, 0.5).unwrap();
        assert!((l - r).abs() < 1e-12, "{l} {r}");
        for n in 1..=4 {
            let (l, r) = adamchik_integral(n, 0.3).unwrap();
            assert!((l - r).abs() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn even_zeta_series() {
        let (s, c) = zeta_even_series(0.0, EvenZetaForm::Cot).unwrap();
        assert_eq!((s, c), (1.0, 1.0));
        for t in [0.3, -0.6, 0.95] {
            let (s, c) = zeta_even_series(t, EvenZetaForm::Cot).unwrap();
            assert!((s - c).abs() < 1e-12, "t = {t}");
            let (s, c) = zeta_even_series(t, EvenZetaForm::LogSin).unwrap();
            assert!((s - c).abs() < 1e-12, "t = {t}");
        }
        let (s, c) = zeta_even_series(0.5, EvenZetaForm::LogSin).unwrap();
        assert!((c - (PI / 2.0).ln()).abs() < 1e-15 && (s - c).abs() < 1e-14);
        let (s, c) = zeta_even_series(0.0, EvenZetaForm::FujiiSuzuki).unwrap();
        assert!((s - c).abs() < 1e-13, "{s} {c}");
        assert!(zeta_even_series(1.0, EvenZetaForm::Cot).is_err());
    }

    #[test]
    fn bromwich() {
        let (s, c) = bromwich_sum().unwrap();
        assert!((s.value - c).abs() < 1e-14, "{}", s.value - c);
    }

    #[test]
    fn product_smoke() {
        let x: f64 = 0.3;
        assert!((products::log_sine1(x, 1000) - (2.0 * (PI * x).sin()).ln()).abs() < 1e-3);
        let s2 = log_multiple_sine(MultipleSineOrder::new(2, x).unwrap()).unwrap();
        assert!((products::log_sine2(x, 1000) - s2).abs() < 1e-4);
        let s3 = log_multiple_sine(MultipleSineOrder::new(3, x).unwrap()).unwrap();
        assert!((products::log_sine3(x, 1000, 1.0) - s3).abs() < 1e-4);
        assert!((products::log_sine3(x, 1000, -1.0) - s3).abs() > 1.0);
        let g = log_barnes_g(x).unwrap();
        assert!((products::log_barnes_g(x, 1000, false) - g).abs() < 1e-4);
        assert!((products::log_barnes_g(x, 1000, true) - g).abs() > 1.0);
        assert!((products::log_barnes_g_sum(x, 1000) - g).abs() < 1e-4);
    }
}
