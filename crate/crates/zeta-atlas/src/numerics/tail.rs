//! Tails of slowly convergent, non-oscillating series via the midpoint
//! Euler-Maclaurin formula on a smooth extension of the term.

use super::quad::{tanh_sinh_integrate, QuadratureProblem};
use super::series::CompensatedSum;
use super::{Method, NumResult, NumericsError, SeriesEval};

/// `sum_{n >= first} f(n)` for smooth, eventually monotone `f`:
/// `int_{first-1/2}^inf f + f'(m)/24 - 7 f'''(m)/5760` with `m = first - 1/2`.
///
/// Derivatives come from five-point central differences of `f` itself.
pub fn euler_maclaurin_tail<F: Fn(f64) -> f64>(f: F, first: usize, abs_tol: f64) -> NumResult<SeriesEval> {
    if first == 0 {
        return Err(NumericsError::Domain("tail must start at index >= 1".into()));
    }
    let m = first as f64 - 0.5;
    let integral = tanh_sinh_integrate(&QuadratureProblem::new(&f, m, f64::INFINITY).tol(abs_tol * 0.25))?;
    let h = 0.25f64.max(m * 1e-3).min(m * 0.2);
    let f2p = f(m + 2.0 * h);
    let f1p = f(m + h);
    let f1m = f(m - h);
    let f2m = f(m - 2.0 * h);
    if ![f2p, f1p, f1m, f2m].iter().all(|v| v.is_finite()) {
        return Err(NumericsError::NonfiniteIntegrand { x: m });
    }
    let d1 = (f2m - 8.0 * f1m + 8.0 * f1p - f2p) / (12.0 * h);
    let d3 = (f2p - 2.0 * f1p + 2.0 * f1m - f2m) / (2.0 * h * h * h);
    let c1 = d1 / 24.0;
    let c3 = -7.0 * d3 / 5760.0;
    let mut acc = CompensatedSum::new();
    acc.add(integral.value);
    acc.add(c1);
    acc.add(c3);
    // next correction is ~ f^(5)/ (m^2 ...) smaller again; bound it by |c3|
    let tail_bound = integral.tail_bound + c3.abs();
    Ok(SeriesEval {
        value: acc.value(),
        terms_used: integral.terms_used + 4,
        tail_bound,
        method: Method::EulerMaclaurin,
        converged: tail_bound <= abs_tol.max(1e-15 * acc.value().abs()) || integral.converged,
    })
}

/// `sum_{n = start}^{start + explicit - 1} term(n)` directly, plus the
/// smooth tail of `continuous` from `start + explicit` on.
pub fn sum_with_smooth_tail<T, C>(
    mut term: T,
    continuous: C,
    start: usize,
    explicit: usize,
    abs_tol: f64,
) -> NumResult<SeriesEval>
where
    T: FnMut(usize) -> f64,
    C: Fn(f64) -> f64,
{
    let mut acc = CompensatedSum::new();
    for n in start..start + explicit {
        let t = term(n);
        if !t.is_finite() {
            return Err(NumericsError::NonfiniteTerm { index: n });
        }
        acc.add(t);
    }
    let tail = euler_maclaurin_tail(continuous, start + explicit, abs_tol)?;
    acc.add(tail.value);
    Ok(SeriesEval {
        value: acc.value(),
        terms_used: explicit + tail.terms_used,
        tail_bound: tail.tail_bound,
        method: Method::EulerMaclaurin,
        converged: tail.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn basel_tail() {
        let r = sum_with_smooth_tail(|n| 1.0 / (n * n) as f64, |x| 1.0 / (x * x), 1, 50, 1e-14).unwrap();
        assert!((r.value - PI * PI / 6.0).abs() < 1e-12, "{}", r.value - PI * PI / 6.0);
    }

    #[test]
    fn three_halves() {
        // zeta(3/2)
        let r = sum_with_smooth_tail(|n| (n as f64).powf(-1.5), |x| x.powf(-1.5), 1, 200, 1e-14).unwrap();
        assert!((r.value - 2.612_375_348_685_488).abs() < 1e-12, "{}", r.value);
    }
}
