//! Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on `[a, inf)`.

use std::f64::consts::FRAC_PI_2;

use super::series::CompensatedSum;
use super::{Method, NumResult, NumericsError, SeriesEval};

/// Behaviour of the integrand at an endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EndpointTag {
    None,
    /// Integrable logarithmic singularity.
    Log,
    /// Integrable `1/sqrt` singularity.
    InverseSqrt,
    /// Removable singularity with the given limiting value.
    Removable(f64),
}

impl EndpointTag {
    fn singular(self) -> bool {
        matches!(self, EndpointTag::Log | EndpointTag::InverseSqrt)
    }
}

pub struct QuadratureProblem<F: Fn(f64) -> f64> {
    pub integrand: F,
    pub a: f64,
    /// May be `f64::INFINITY`.
    pub b: f64,
    pub left: EndpointTag,
    pub right: EndpointTag,
    pub abs_tol: f64,
    /// Relative stopping threshold, never below `4 eps`.
    pub rel_tol: f64,
    pub max_level: usize,
}

impl<F: Fn(f64) -> f64> QuadratureProblem<F> {
    pub fn new(integrand: F, a: f64, b: f64) -> Self {
        QuadratureProblem {
            integrand,
            a,
            b,
            left: EndpointTag::None,
            right: EndpointTag::None,
            abs_tol: 1e-14,
            rel_tol: 4.0 * f64::EPSILON,
            max_level: 12,
        }
    }

    pub fn left(mut self, tag: EndpointTag) -> Self {
        self.left = tag;
        self
    }

    pub fn right(mut self, tag: EndpointTag) -> Self {
        self.right = tag;
        self
    }

    pub fn tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol.max(4.0 * f64::EPSILON);
        self
    }
}

/// Integrate with default tags and resolution.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> NumResult<SeriesEval> {
    tanh_sinh_integrate(&QuadratureProblem::new(f, a, b).tol(abs_tol))
}

const T_MAX: f64 = 6.5;
const NEGLIGIBLE: f64 = 1e-18;

struct Side {
    open: bool,
    quiet: u8,
    /// a non-negligible contribution has been seen, so small ones mean the tail
    seen_mass: bool,
}

impl Side {
    fn new() -> Self {
        Side { open: true, quiet: 0, seen_mass: false }
    }
}

/// A node on either side of the centre.
struct Node {
    x: f64,
    /// distance from the nearer endpoint (finite case) or from `a` (left, infinite case)
    gap: f64,
    weight: f64,
}

pub fn tanh_sinh_integrate<F: Fn(f64) -> f64>(p: &QuadratureProblem<F>) -> NumResult<SeriesEval> {
    if !(p.a.is_finite()) || p.b.is_nan() || p.b <= p.a {
        if p.b == p.a {
            return Ok(SeriesEval::exact(0.0, Method::Quadrature));
        }
        return Err(NumericsError::Domain(format!("invalid interval [{}, {}]", p.a, p.b)));
    }
    let infinite = p.b == f64::INFINITY;
    let mut evals = 0usize;
    let mut prev: Option<f64> = None;
    let mut total = 0.0f64;
    let mut last_err = f64::INFINITY;
    for level in 0..=p.max_level {
        let h = 0.5f64.powi(level as i32);
        let mut level_sum = CompensatedSum::new();
        if level == 0 {
            let (x0, w0) = if infinite {
                (p.a + 1.0, FRAC_PI_2)
            } else {
                (0.5 * (p.a + p.b), FRAC_PI_2 * 0.5 * (p.b - p.a))
            };
            let v = (p.integrand)(x0);
            evals += 1;
            if !v.is_finite() {
                return Err(NumericsError::NonfiniteIntegrand { x: x0 });
            }
            level_sum.add(w0 * v);
        }
        let mut left = Side::new();
        let mut right = Side::new();
        let mut k = 1usize;
        loop {
            // level 0 visits every integer multiple; later levels only odd multiples
            let t = if level == 0 { k as f64 } else { (2 * k - 1) as f64 * h };
            if t > T_MAX || (!left.open && !right.open) {
                break;
            }
            k += 1;
            let scale = total.abs().max(level_sum.value().abs()).max(f64::MIN_POSITIVE);
            for side_is_right in [false, true] {
                let side = if side_is_right { &mut right } else { &mut left };
                if !side.open {
                    continue;
                }
                let node = if infinite {
                    exp_sinh_node(p.a, t, side_is_right)
                } else {
                    tanh_sinh_node(p.a, p.b, t, side_is_right)
                };
                let tag = if side_is_right { p.right } else { p.left };
                let endpoint = if side_is_right { p.b } else { p.a };
                let at_endpoint = !infinite && (node.gap == 0.0 || node.x == endpoint);
                let at_left_limit = infinite && !side_is_right && (node.gap == 0.0 || node.x == p.a);
                if at_endpoint || at_left_limit || node.weight == 0.0 {
                    side.open = false;
                    continue;
                }
                if infinite && side_is_right && node.x > 1e300 {
                    side.open = false;
                    continue;
                }
                let mut v = (p.integrand)(node.x);
                evals += 1;
                if !v.is_finite() {
                    let near_end = if infinite {
                        if side_is_right {
                            node.x > 1e15
                        } else {
                            node.gap < 1e-8
                        }
                    } else {
                        node.gap < 1e-8 * (p.b - p.a)
                    };
                    match tag {
                        EndpointTag::Removable(limit) if near_end => v = limit,
                        _ if near_end && (tag.singular() || (infinite && side_is_right)) => {
                            side.open = false;
                            continue;
                        }
                        _ => return Err(NumericsError::NonfiniteIntegrand { x: node.x }),
                    }
                }
                let contrib = node.weight * v;
                level_sum.add(contrib);
                let negligible = contrib.abs() <= NEGLIGIBLE * scale;
                if !negligible {
                    side.seen_mass = true;
                }
                if negligible && side.seen_mass && t > 1.0 {
                    side.quiet += 1;
                    if side.quiet >= 3 {
                        side.open = false;
                    }
                } else {
                    side.quiet = 0;
                }
            }
        }
        let estimate = match prev {
            None => h * level_sum.value(),
            Some(prev_total) => 0.5 * prev_total + h * level_sum.value(),
        };
        if let Some(prev_total) = prev {
            last_err = (estimate - prev_total).abs();
            total = estimate;
            if level >= 3 && (last_err <= p.abs_tol || last_err <= p.rel_tol * estimate.abs()) {
                return Ok(SeriesEval {
                    value: estimate,
                    terms_used: evals,
                    tail_bound: last_err,
                    method: Method::Quadrature,
                    converged: true,
                });
            }
        } else {
            total = estimate;
        }
        prev = Some(estimate);
    }
    Err(NumericsError::ConvergenceFailure {
        partial: SeriesEval {
            value: total,
            terms_used: evals,
            tail_bound: last_err,
            method: Method::Quadrature,
            converged: false,
        },
    })
}

fn tanh_sinh_node(a: f64, b: f64, t: f64, right: bool) -> Node {
    let half = 0.5 * (b - a);
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u).exp();
    // q = 1 - tanh(u), computed without cancellation
    let q = 2.0 * e / (1.0 + e);
    let gap = half * q;
    let weight = half * FRAC_PI_2 * t.cosh() * q * (2.0 - q);
    let x = if right { b - gap } else { a + gap };
    Node { x, gap, weight }
}

fn exp_sinh_node(a: f64, t: f64, right: bool) -> Node {
    let s = if right { t } else { -t };
    let u = FRAC_PI_2 * s.sinh();
    let d = u.exp();
    let weight = FRAC_PI_2 * s.cosh() * d;
    Node { x: a + d, gap: d, weight }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI};

    #[test]
    fn polynomial() {
        let r = integrate(|x| x * x, 0.0, 1.0, 1e-15).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn log_sin_endpoint() {
        let p = QuadratureProblem::new(|x: f64| x.sin().ln(), 0.0, FRAC_PI_2).left(EndpointTag::Log);
        let r = tanh_sinh_integrate(&p).unwrap();
        assert!((r.value + FRAC_PI_2 * LN_2).abs() < 1e-14);
    }

    #[test]
    fn inverse_sqrt_endpoint() {
        let p = QuadratureProblem::new(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0).left(EndpointTag::InverseSqrt);
        let r = tanh_sinh_integrate(&p).unwrap();
        assert!((r.value - 2.0).abs() < 1e-13);
    }

    #[test]
    fn removable_x_over_sin() {
        let p = QuadratureProblem::new(|x: f64| x / x.sin(), 0.0, FRAC_PI_2).left(EndpointTag::Removable(1.0));
        let r = tanh_sinh_integrate(&p).unwrap();
        // 2G
        assert!((r.value - 1.831_931_188_354_438).abs() < 1e-13);
    }

    #[test]
    fn half_line_exponential() {
        let r = integrate(|u: f64| u * (-u).exp(), 0.0, f64::INFINITY, 1e-15).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn half_line_algebraic() {
        let r = integrate(|x: f64| 1.0 / (1.0 + x * x), 0.0, f64::INFINITY, 1e-15).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-13);
        let r = integrate(|x: f64| x.powf(-1.5), 10.0, f64::INFINITY, 1e-15).unwrap();
        assert!((r.value - 2.0 / 10f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn interior_nan_is_reported() {
        let r = integrate(|x: f64| if (x - 0.3).abs() < 0.2 { f64::NAN } else { 1.0 }, 0.0, 1.0, 1e-12);
        assert!(matches!(r, Err(NumericsError::NonfiniteIntegrand { .. })));
    }

    #[test]
    fn pi_from_sqrt() {
        let r = integrate(|x: f64| 4.0 * (1.0 - x * x).sqrt(), 0.0, 1.0, 1e-15).unwrap();
        assert!((r.value - PI).abs() < 1e-14);
    }
}
