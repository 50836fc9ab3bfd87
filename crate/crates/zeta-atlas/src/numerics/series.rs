use super::dd::DoubleDouble;
use super::{Method, NumResult, NumericsError, SeriesEval};

/// Running sum kept in double-double, rounded once on read.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    acc: DoubleDouble,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        self.acc += x;
    }

    pub fn add_dd(&mut self, x: DoubleDouble) {
        self.acc += x;
    }

    pub fn value(&self) -> f64 {
        self.acc.to_f64()
    }

    pub fn dd(&self) -> DoubleDouble {
        self.acc
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

pub fn compensated_sum(values: &[f64]) -> f64 {
    let mut s = CompensatedSum::new();
    s.extend(values.iter().copied());
    s.value()
}

const HEURISTIC_RUN: usize = 8;

/// Sums `term(0) + term(1) + ...`.
///
/// With a `tail_bound`, stops as soon as `tail_bound(n) <= abs_tol`, where `n`
/// is the number of terms already summed. Without one, stops after eight
/// consecutive terms below `abs_tol / 8`; the reported tail then comes from a
/// power-law fit of the last terms, and `converged` is false whenever that
/// estimate exceeds `abs_tol`.
pub fn sum_series<F>(
    mut term: F,
    tail_bound: Option<&dyn Fn(usize) -> f64>,
    abs_tol: f64,
    max_terms: usize,
) -> NumResult<SeriesEval>
where
    F: FnMut(usize) -> f64,
{
    let mut acc = CompensatedSum::new();
    let mut run = 0usize;
    let mut run_start_mag = 0.0f64;
    let mut last_bound = f64::INFINITY;
    for k in 0..max_terms {
        let t = term(k);
        if !t.is_finite() {
            return Err(NumericsError::NonfiniteTerm { index: k });
        }
        acc.add(t);
        let n = k + 1;
        match tail_bound {
            Some(bound) => {
                last_bound = bound(n);
                if last_bound <= abs_tol {
                    return Ok(SeriesEval {
                        value: acc.value(),
                        terms_used: n,
                        tail_bound: last_bound.max(0.0),
                        method: Method::Direct,
                        converged: true,
                    });
                }
            }
            None => {
                if t.abs() < abs_tol / 8.0 {
                    if run == 0 {
                        run_start_mag = t.abs();
                    }
                    run += 1;
                    if run >= HEURISTIC_RUN {
                        let tail = power_law_tail(run_start_mag, t.abs(), n, HEURISTIC_RUN - 1);
                        return Ok(SeriesEval {
                            value: acc.value(),
                            terms_used: n,
                            tail_bound: tail,
                            method: Method::Direct,
                            converged: tail <= abs_tol,
                        });
                    }
                } else {
                    run = 0;
                }
            }
        }
    }
    Err(NumericsError::ConvergenceFailure {
        partial: SeriesEval {
            value: acc.value(),
            terms_used: max_terms,
            tail_bound: last_bound,
            method: Method::Direct,
            converged: false,
        },
    })
}

/// Tail estimate assuming |t_k| ~ C k^{-p}, fitted from two magnitudes `gap` terms apart.
fn power_law_tail(earlier: f64, later: f64, n: usize, gap: usize) -> f64 {
    if later == 0.0 {
        return 0.0;
    }
    if earlier <= later {
        return f64::INFINITY;
    }
    let k1 = (n - gap) as f64;
    let k2 = n as f64;
    let p = (earlier / later).ln() / (k2 / k1).ln();
    if p <= 1.0 {
        f64::INFINITY
    } else {
        later * k2 / (p - 1.0)
    }
}

/// Euler transform of the alternating series `sum (-1)^k a(k)`:
/// `sum_n (-1)^n Delta^n a(0) / 2^{n+1}`, with the difference table kept in
/// double-double.
pub fn euler_transform_sum<F>(mut a: F, abs_tol: f64, max_terms: usize) -> NumResult<SeriesEval>
where
    F: FnMut(usize) -> f64,
{
    // diag[j] = Delta^j a(n - j) after reading a(0..=n)
    let mut diag: Vec<DoubleDouble> = Vec::with_capacity(64);
    let mut acc = CompensatedSum::new();
    let mut weight = 0.5f64;
    let mut prev_mag = f64::INFINITY;
    for n in 0..max_terms {
        let v = a(n);
        if !v.is_finite() {
            return Err(NumericsError::NonfiniteTerm { index: n });
        }
        let mut carry = DoubleDouble::from_f64(v);
        for slot in diag.iter_mut() {
            let next = carry - *slot;
            *slot = carry;
            carry = next;
        }
        diag.push(carry);
        // Delta^n a(0) is the newest entry; sign (-1)^n
        let delta = diag[n];
        let term = if n % 2 == 0 { delta } else { -delta };
        let term = term.mul_f64(weight).to_f64();
        acc.add(term);
        weight *= 0.5;
        let mag = term.abs();
        if n >= 2 && mag <= abs_tol && prev_mag <= 2.0 * abs_tol {
            return Ok(SeriesEval {
                value: acc.value(),
                terms_used: n + 1,
                tail_bound: mag,
                method: Method::EulerAccel,
                converged: true,
            });
        }
        prev_mag = mag;
    }
    Err(NumericsError::ConvergenceFailure {
        partial: SeriesEval {
            value: acc.value(),
            terms_used: max_terms,
            tail_bound: prev_mag,
            method: Method::EulerAccel,
            converged: false,
        },
    })
}

/// Points `boundary -+ 2^{-m}` for `m` in `from..=to`, approaching from below when `from_below`.
pub fn geometric_schedule(boundary: f64, from_below: bool, from: i32, to: i32) -> Vec<f64> {
    (from..=to)
        .map(|m| {
            let h = 2f64.powi(-m);
            if from_below {
                boundary - h
            } else {
                boundary + h
            }
        })
        .collect()
}

const MAX_RICHARDSON_ORDER: usize = 6;

/// Limit of `limit_fn(t)` as `t -> boundary`, sampled on `schedule`.
///
/// With `extrapolate`, a Neville table in the step `h = |boundary - t|`
/// (polynomial extrapolation to `h = 0`) is built and the entry with the
/// smallest local increment is returned.
pub fn abel_mean<F>(
    mut limit_fn: F,
    schedule: &[f64],
    boundary: f64,
    extrapolate: bool,
) -> NumResult<SeriesEval>
where
    F: FnMut(f64) -> NumResult<f64>,
{
    if schedule.len() < 2 {
        return Err(NumericsError::Domain("abel_mean needs at least two schedule points".into()));
    }
    let mut steps = Vec::with_capacity(schedule.len());
    let mut samples = Vec::with_capacity(schedule.len());
    for &t in schedule {
        let h = (boundary - t).abs();
        if h == 0.0 {
            return Err(NumericsError::Domain("schedule point coincides with the boundary".into()));
        }
        let v = limit_fn(t)?;
        if !v.is_finite() {
            return Err(NumericsError::NonfiniteIntegrand { x: t });
        }
        steps.push(h);
        samples.push(v);
    }
    let n = samples.len();
    if !extrapolate {
        return Ok(SeriesEval {
            value: samples[n - 1],
            terms_used: n,
            tail_bound: (samples[n - 1] - samples[n - 2]).abs(),
            method: Method::AbelMean,
            converged: true,
        });
    }
    // table[i][j]: extrapolant of order j using samples i-j..=i
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut best = (samples[n - 1], (samples[n - 1] - samples[n - 2]).abs());
    let raw_increment = best.1;
    for i in 0..n {
        let mut row = vec![samples[i]];
        for j in 1..=i.min(MAX_RICHARDSON_ORDER) {
            let ratio = steps[i - j] / steps[i];
            let prev = &table[i - 1];
            let v = row[j - 1] + (row[j - 1] - prev[j - 1]) / (ratio - 1.0);
            row.push(v);
            let err = (v - row[j - 1]).abs().max((v - prev[j - 1]).abs());
            if err < best.1 {
                best = (v, err);
            }
        }
        table.push(row);
    }
    let (value, err) = best;
    let eval = SeriesEval {
        value,
        terms_used: n,
        tail_bound: err,
        method: Method::AbelMean,
        converged: err.is_finite(),
    };
    if !err.is_finite() || (err >= raw_increment && raw_increment > 0.0 && err > 0.0) {
        return Err(NumericsError::ConvergenceFailure { partial: SeriesEval { converged: false, ..eval } });
    }
    Ok(eval)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tenth_million_times() {
        let v = vec![0.1; 1_000_000];
        assert!((compensated_sum(&v) - 100_000.0).abs() < 1e-9);
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(compensated_sum(&[]), 0.0);
    }

    #[test]
    fn geometric_with_bound() {
        let bound = |n: usize| 2f64.powi(-(n as i32) + 1);
        let r = sum_series(|k| 2f64.powi(-(k as i32)), Some(&bound), 1e-15, 200).unwrap();
        assert!((r.value - 2.0).abs() < 1e-15);
        assert!(r.converged);
        assert!(r.tail_bound <= 1e-15);
    }

    #[test]
    fn basel_heuristic_is_flagged() {
        let r = sum_series(|k| 1.0 / ((k + 1) as f64).powi(2), None, 1e-10, 2_000_000);
        match r {
            Ok(ev) => {
                assert!(!ev.converged);
                assert!(ev.tail_bound > 1e-10);
            }
            Err(NumericsError::ConvergenceFailure { .. }) => {}
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let r = sum_series(|k| 1.0 / (k + 1) as f64, None, 1e-12, 1000);
        assert!(matches!(r, Err(NumericsError::ConvergenceFailure { .. })));
    }

    #[test]
    fn euler_log2() {
        let r = euler_transform_sum(|k| 1.0 / (k + 1) as f64, 1e-14, 200).unwrap();
        assert!((r.value - std::f64::consts::LN_2).abs() < 1e-13);
        assert_eq!(r.method, Method::EulerAccel);
    }

    #[test]
    fn euler_grandi() {
        let r = euler_transform_sum(|_| 1.0, 1e-14, 50).unwrap();
        assert_eq!(r.value, 0.5);
    }

    #[test]
    fn euler_leibniz() {
        let r = euler_transform_sum(|k| 1.0 / (2 * k + 1) as f64, 1e-15, 200).unwrap();
        assert!((r.value - std::f64::consts::FRAC_PI_4).abs() < 1e-14);
    }

    #[test]
    fn abel_grandi_limit() {
        // sum (-1)^n t^n = 1/(1+t) evaluated in closed form at each point
        let sched = geometric_schedule(1.0, true, 4, 20);
        let r = abel_mean(|t| Ok(1.0 / (1.0 + t)), &sched, 1.0, true).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn abel_without_extrapolation_takes_last_point() {
        let sched = geometric_schedule(1.0, true, 4, 20);
        let r = abel_mean(Ok, &sched, 1.0, false).unwrap();
        assert_eq!(r.value, 1.0 - 2f64.powi(-20));
    }
}
