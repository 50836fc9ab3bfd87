//! The registered identities, one record per numbered formula.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, LN_2, PI};
use std::sync::Arc;

use super::{audit_registry, compare_ids, EvalContext, Evaluator, Expected, IdentityRecord, Interval, Param, Sample, Side};
use crate::binom_series::{
    arcsin_fourth_series, arcsin_sq_derivative_series, arcsin_sq_series, batir_sum, catalan_series, cbc_power_sum,
    euler_sum_h2, fettis_alternating_series, fettis_integral, quartic_cot_series, ramanujan_cot, trig_zeta_sum,
    wallis_pair, wiener_integral, x_over_sin, x_over_sin_series, zucker_closed_form, zucker_sum, BatirVariant,
    CbcTerm, FettisKind, TrigZetaFamily,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::MathResult;
use crate::hasse::{
    alternating_weight_series, binomial_sum_integral, finite_binomial_sum, generating_integral,
    geometric_weighted_sum, hasse_lerch_lhs, hasse_zeta, lerch_integral, log_lerch_integral, log_weighted_integral,
    polylog_weighted_integral, power_weighted_sum, AlternatingVariant, Precision,
};
use crate::numerics::{
    bernoulli_over_factorial, euler_transform_sum, CompensatedSum, sum_with_smooth_tail, tanh_sinh_integrate, EndpointTag,
    QuadratureProblem, SeriesEval,
};
use crate::specfun::{
    alt_hurwitz_zeta, alt_zeta, bernoulli_poly, clausen, constants, digamma, gamma, hurwitz_zeta,
    hurwitz_zeta_sderiv, lerch_phi, log_gamma, polygamma, polylog, riemann_zeta, LerchTriple,
    CATALAN, EULER_GAMMA, ZETA3,
};
use crate::zeta_deriv::{
    adamchik_integral, adamchik_reflection, bromwich_sum, fourier_lhs, fourier_zeta_prime, log_barnes_g,
    log_barnes_g_gosper, log_multiple_sine, log_sin_integral_identity, log_sine3_series, products,
    zeta_even_series, zeta_prime_shift_series, EvenZetaForm, FourierOrder, MultipleSineOrder, ReflectionParity,
};

/// Quadrature against a closed form.
const QUADRATURE: f64 = 1e-10;
/// Geometrically convergent series.
const GEOMETRIC: f64 = 1e-10;
/// Reflection and Barnes G grids.
const REFLECTION: f64 = 1e-9;
/// Integrals of `zeta'` in the second argument.
const ZETA_INTEGRAL: f64 = 1e-8;
/// Central-binomial sums whose terms decay like a power of `n` times `sqrt(n)`.
const SQRT_TAIL: f64 = 1e-7;
/// Hasse-type double series.
const HASSE: f64 = 1e-6;
/// Fourier forms of `zeta'(-1, t)` and `zeta'(-2, t)`.
const FOURIER: f64 = 1e-5;
/// Truncated infinite products.
const PRODUCT: f64 = 1e-4;

const FOURIER_TERMS: usize = 200_000;
const PRODUCT_FACTORS: usize = 10_000;
const TWO_PI: f64 = 2.0 * PI;

const ANY: Interval = Interval::open(f64::NEG_INFINITY, f64::INFINITY);
const POSITIVE: Interval = Interval::open(0.0, f64::INFINITY);
const UNIT_OPEN: Interval = Interval::open(0.0, 1.0);
const HALF_PI: Interval = Interval::closed(0.0, FRAC_PI_2);

struct Rec {
    id: String,
    description: String,
    params: Vec<Param>,
    samples: Vec<Sample>,
    tolerance: f64,
    evaluator: Option<Evaluator>,
    corrected: Option<Evaluator>,
}

fn rec(id: &str, description: &str) -> Rec {
    Rec {
        id: id.to_string(),
        description: description.to_string(),
        params: Vec::new(),
        samples: Vec::new(),
        tolerance: QUADRATURE,
        evaluator: None,
        corrected: None,
    }
}

impl Rec {
    fn params(mut self, p: &[(&'static str, Interval)]) -> Self {
        self.params = p.iter().map(|&(name, range)| Param { name, range }).collect();
        self
    }

    fn at(mut self, label: &str, values: &[f64]) -> Self {
        self.samples.push(Sample { label: label.to_string(), values: values.to_vec() });
        self
    }

    /// A record without parameters has the single sample `-`.
    fn point(self) -> Self {
        self.at("-", &[])
    }

    fn tol(mut self, t: f64) -> Self {
        self.tolerance = t;
        self
    }

    fn eval<F>(mut self, f: F) -> Self
    where
        F: Fn(&[f64], &EvalContext) -> MathResult<(Side, Side)> + Send + Sync + 'static,
    {
        self.evaluator = Some(Arc::new(f));
        self
    }

    /// Marks the printed form as suspect and attaches the corrected one.
    fn corrected<F>(mut self, f: F) -> Self
    where
        F: Fn(&[f64], &EvalContext) -> MathResult<(Side, Side)> + Send + Sync + 'static,
    {
        self.corrected = Some(Arc::new(f));
        self
    }

    fn build(self) -> IdentityRecord {
        let expected = if self.corrected.is_some() { Expected::MisprintSuspect } else { Expected::Pass };
        IdentityRecord {
            evaluator: self.evaluator.unwrap_or_else(|| panic!("{} has no evaluator", self.id)),
            id: self.id,
            description: self.description,
            params: self.params,
            samples: self.samples,
            tolerance: self.tolerance,
            expected,
            corrected_form: self.corrected,
        }
    }
}

fn val(v: f64) -> Side {
    Side { value: v, terms: 0 }
}

fn ser(e: SeriesEval) -> Side {
    Side { value: e.value, terms: e.terms_used }
}

fn sides(l: Side, r: Side) -> MathResult<(Side, Side)> {
    Ok((l, r))
}

fn values(l: f64, r: f64) -> MathResult<(Side, Side)> {
    Ok((val(l), val(r)))
}

fn quad_tagged<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, left: EndpointTag, right: EndpointTag) -> MathResult<Side> {
    let p = QuadratureProblem::new(f, a, b).left(left).right(right).tol(1e-15).rel_tol(1e-15);
    Ok(ser(tanh_sinh_integrate(&p)?))
}

fn quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> MathResult<Side> {
    quad_tagged(f, a, b, EndpointTag::None, EndpointTag::None)
}

fn phi(x: f64, s: f64, y: f64) -> MathResult<f64> {
    lerch_phi(LerchTriple::new(x, s, y)?)
}

fn zp(s: f64, t: f64) -> MathResult<f64> {
    hurwitz_zeta_sderiv(s, t)
}

fn cl(n: u32, theta: f64) -> MathResult<f64> {
    clausen(n, theta)
}

fn int_arg(v: f64) -> u32 {
    v as u32
}

/// `sum_{n>=0} sin((2n+1) t) / (2n+1)^2 = Cl_2(t) - Cl_2(2t)/4`.
fn odd_sine_sum(t: f64) -> MathResult<f64> {
    Ok(cl(2, t)? - 0.25 * cl(2, 2.0 * t)?)
}

/// `sum_{n>=0} cos((2n+1) t) / (2n+1) = -(1/2) log tan(t/2)` for `0 < t < pi`.
fn odd_cosine_sum(t: f64) -> f64 {
    -0.5 * (0.5 * t).tan().ln()
}

/// The right side of the `zeta'(-2, t)` / `zeta'(-1, t)` form of the `S_3` integral.
fn triple_sine_hurwitz(t: f64) -> MathResult<f64> {
    Ok(-(zp(-2.0, t)? + zp(-2.0, 1.0 - t)?) + 2.0 * t * (zp(-1.0, t)? - zp(-1.0, 1.0 - t)?)
        + t * t * (2.0 * (PI * t).sin()).ln()
        - ZETA3 / (2.0 * PI * PI))
}

fn x_squared_cot(t: f64) -> MathResult<Side> {
    quad(|x: f64| if x == 0.0 { 0.0 } else { x * x / x.tan() }, 0.0, t)
}

fn x_over_sin_quad(t: f64) -> MathResult<Side> {
    quad_tagged(|x: f64| x / x.sin(), 0.0, t, EndpointTag::Removable(1.0), EndpointTag::None)
}

/// `sum_{n>=0} p^2 / ((2n+1)(p^2 - (2n+1)^2))`.
fn odd_reciprocal_sum(p: f64) -> MathResult<f64> {
    let f = |nu: f64| {
        let k = 2.0 * nu + 1.0;
        p * p / (k * (p * p - k * k))
    };
    Ok(sum_with_smooth_tail(|n| f(n as f64), f, 0, 2000, 1e-16)?.value)
}

/// `int_0^x Z(u) du - x zeta(3)` with `Z` the `sin^{2n}` central-binomial sum:
/// the double sum `sum_n C(2n,n)^{-1} n^{-3} sum_j (-1)^j C(2n,n-j) sin(2jx) / j`
/// after expanding each inner sum by Wiener's formula and integrating term by term.
fn wiener_double_sum(x: f64) -> MathResult<f64> {
    let failed = std::cell::Cell::new(None);
    let integral = quad(
        |u: f64| match zucker_sum(u) {
            Ok(z) => z.value,
            Err(e) => {
                failed.set(Some(e));
                f64::NAN
            }
        },
        0.0,
        x,
    );
    if let Some(e) = failed.take() {
        return Err(e);
    }
    Ok(integral?.value - x * ZETA3)
}

/// `3 Cl_4(2x) - 4x Cl_3(2x) - 2x^2 Cl_2(2x) - 3x zeta(3)`.
fn wiener_double_closed(x: f64) -> MathResult<f64> {
    Ok(3.0 * cl(4, 2.0 * x)? - 4.0 * x * cl(3, 2.0 * x)? - 2.0 * x * x * cl(2, 2.0 * x)? - 3.0 * x * ZETA3)
}

fn section_one() -> Vec<Rec> {
    let lerch_args: &[(&'static str, Interval)] = &[("x", ANY), ("s", POSITIVE), ("y", POSITIVE)];
    let mut grid = rec("eq-1.11", "Hasse-type double series equals s Phi(x, s+1, y) - log x Phi(x, s, y)")
        .params(&[("x", Interval::open_closed(0.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
        .tol(HASSE)
        .eval(|p, _| {
            let (x, s, y) = (p[0], p[1], p[2]);
            let l = hasse_lerch_lhs(x, s, y)?;
            sides(ser(l), val(s * phi(x, s + 1.0, y)? - x.ln() * phi(x, s, y)?))
        });
    for (xl, x) in [("1/4", 0.25), ("1/2", 0.5), ("3/4", 0.75)] {
        for (sl, s, yl, y) in [("1", 1.0, "1/2", 0.5), ("2", 2.0, "1", 1.0), ("3", 3.0, "3/2", 1.5)] {
            grid = grid.at(&format!("x={xl} s={sl} y={yl}"), &[x, s, y]);
        }
    }
    vec![
        rec("eq-1.1", "Hasse-type series for Li_s(y) - log y Li_{s-1}(y) / (s-1)")
            .params(&[("y", Interval::open_closed(0.0, 1.0)), ("s", Interval::open(1.0, f64::INFINITY))])
            .at("y=1/2 s=3", &[0.5, 3.0])
            .at("y=0.8 s=2.5", &[0.8, 2.5])
            .tol(HASSE)
            .eval(|p, _| {
                let (y, s) = (p[0], p[1]);
                let l = hasse_lerch_lhs(y, s - 1.0, 1.0)?.scale(y / (s - 1.0));
                sides(ser(l), val(polylog(s, y)? - y.ln() / (s - 1.0) * polylog(s - 1.0, y)?))
            }),
        rec("eq-1.2", "Hasse series for zeta(s)")
            .params(&[("s", Interval::closed(-10.0, 10.0))])
            .at("s=0", &[0.0])
            .at("s=2", &[2.0])
            .at("s=3", &[3.0])
            .at("s=4", &[4.0])
            .at("s=2.5", &[2.5])
            .tol(HASSE)
            .eval(|p, _| sides(ser(hasse_zeta(p[0])?), val(riemann_zeta(p[0])?))),
        rec("eq-1.5", "finite binomial sum S_n(x, y) against its Mellin integral")
            .params(&[("n", Interval::closed(0.0, 200.0)), ("x", Interval::closed(-1.0, 1.0)), ("y", POSITIVE), ("s", POSITIVE)])
            .at("n=10 x=-1 y=1 s=2", &[10.0, -1.0, 1.0, 2.0])
            .at("n=5 x=1/2 y=2 s=3", &[5.0, 0.5, 2.0, 3.0])
            .at("n=7 x=1 y=1/2 s=3/2", &[7.0, 1.0, 0.5, 1.5])
            .eval(|p, _| {
                let (n, x, y, s) = (p[0] as usize, p[1], p[2], p[3]);
                values(finite_binomial_sum(n, x, y, s, Precision::DoubleDouble, 1e-12)?, binomial_sum_integral(n, x, y, s)?)
            }),
        rec("eq-1.6", "generating function of S_n(x, y) against its integral")
            .params(&[("t", Interval::open(-1.0, 1.0)), ("x", Interval::closed(-1.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("t=0.3 x=1/2 s=2 y=1", &[0.3, 0.5, 2.0, 1.0])
            .at("t=-0.4 x=1 s=3 y=1/2", &[-0.4, 1.0, 3.0, 0.5])
            .at("t=1/4 x=-1 s=2 y=3/2", &[0.25, -1.0, 2.0, 1.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (t, x, s, y) = (p[0], p[1], p[2], p[3]);
                sides(ser(geometric_weighted_sum(t, x, s, y)?), val(generating_integral(t, x, s, y)?))
            }),
        rec("eq-1.7", "w^{n+1}/(n+1) weighted sum of S_n against a log-kernel integral")
            .params(&[("w", Interval::open(-0.5, 0.5)), ("x", Interval::closed(-1.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("w=0.3 x=1/2 s=2 y=3/2", &[0.3, 0.5, 2.0, 1.5])
            .at("w=-0.3 x=1 s=3 y=1", &[-0.3, 1.0, 3.0, 1.0])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (w, x, s, y) = (p[0], p[1], p[2], p[3]);
                sides(ser(power_weighted_sum(w, 1.0, x, s, y)?), val(log_weighted_integral(w, x, s, y)?))
            }),
        rec("eq-1.8", "Hasse-type double series against its log-kernel integral")
            .params(&[("x", Interval::open_closed(0.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("x=1/2 s=2 y=1", &[0.5, 2.0, 1.0])
            .at("x=3/4 s=3/2 y=1/2", &[0.75, 1.5, 0.5])
            .tol(HASSE)
            .eval(|p, _| {
                let (x, s, y) = (p[0], p[1], p[2]);
                sides(ser(hasse_lerch_lhs(x, s, y)?), val(log_lerch_integral(x, s, y)?))
            }),
        rec("eq-1.9", "Lerch transcendent series against its integral")
            .params(&[("x", Interval::closed(-1.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("x=1/2 s=2 y=1", &[0.5, 2.0, 1.0])
            .at("x=-0.7 s=3 y=1/2", &[-0.7, 3.0, 0.5])
            .at("x=0.9 s=3/2 y=2", &[0.9, 1.5, 2.0])
            .eval(|p, _| values(phi(p[0], p[1], p[2])?, lerch_integral(p[0], p[1], p[2])?)),
        rec("eq-1.10", "polylogarithm against its integral")
            .params(&[("s", POSITIVE), ("x", Interval::closed(-1.0, 1.0))])
            .at("s=2 x=1/2", &[2.0, 0.5])
            .at("s=3 x=-0.7", &[3.0, -0.7])
            .at("s=3/2 x=0.9", &[1.5, 0.9])
            .eval(|p, _| values(polylog(p[0], p[1])?, p[1] * lerch_integral(p[1], p[0], 1.0)?)),
        grid,
        rec("eq-1.12", "Hasse-type double series at y = 1 in polylogarithms")
            .params(&[("x", Interval::open_closed(0.0, 1.0)), ("s", POSITIVE)])
            .at("x=1/2 s=2", &[0.5, 2.0])
            .at("x=3/4 s=3/2", &[0.75, 1.5])
            .tol(HASSE)
            .eval(|p, _| {
                let (x, s) = (p[0], p[1]);
                let r = (s * polylog(s + 1.0, x)? - x.ln() * polylog(s, x)?) / x;
                sides(ser(hasse_lerch_lhs(x, s, 1.0)?), val(r))
            }),
        rec("eq-1.13", "geometric sum of S_n as a Lerch transcendent")
            .params(&[("t", Interval::open(-1.0, 1.0)), ("x", Interval::closed(-1.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("t=0.3 x=1/2 s=2 y=1", &[0.3, 0.5, 2.0, 1.0])
            .at("t=-0.4 x=1 s=2 y=1/2", &[-0.4, 1.0, 2.0, 0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (t, x, s, y) = (p[0], p[1], p[2], p[3]);
                sides(ser(geometric_weighted_sum(t, x, s, y)?), val(phi(t * x / (1.0 - t), s, y)? / (1.0 - t)))
            }),
        rec("eq-1.13.1", "sum 2^{-n-1} S_n(x, y) = Phi(x, s, y)")
            .params(&[("x", Interval::closed(-1.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("x=1/2 s=2 y=1", &[0.5, 2.0, 1.0])
            .at("x=-1/2 s=3 y=1/2", &[-0.5, 3.0, 0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (x, s, y) = (p[0], p[1], p[2]);
                sides(ser(geometric_weighted_sum(0.5, x, s, y)?.scale(0.5)), val(phi(x, s, y)?))
            }),
        rec("eq-1.14", "sum (w/(w+x))^n S_n(x, y) = ((w+x)/x) Phi(w, s, y)")
            .params(&[("w", Interval::open(0.0, 1.0)), ("x", Interval::open_closed(0.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("w=1/2 x=1 s=2 y=1", &[0.5, 1.0, 2.0, 1.0])
            .at("w=1/4 x=1/2 s=3 y=1/2", &[0.25, 0.5, 3.0, 0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (w, x, s, y) = (p[0], p[1], p[2], p[3]);
                let l = geometric_weighted_sum(w / (w + x), x, s, y)?;
                sides(ser(l), val((w + x) / x * phi(w, s, y)?))
            }),
        rec("eq-1.15", "sum (-w/(1-w))^n S_n(-1, y) = (1-w) Phi(w, s, y)")
            .params(&[("w", Interval::open(-1.0, 0.5)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("w=0.3 s=2 y=1", &[0.3, 2.0, 1.0])
            .at("w=-1/2 s=3 y=1/2", &[-0.5, 3.0, 0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (w, s, y) = (p[0], p[1], p[2]);
                let l = geometric_weighted_sum(-w / (1.0 - w), -1.0, s, y)?;
                sides(ser(l), val((1.0 - w) * phi(w, s, y)?))
            }),
        rec("eq-1.16", "Euler-transformed series for the alternating Hurwitz zeta function")
            .params(&[("s", POSITIVE), ("y", POSITIVE)])
            .at("s=2 y=1/2", &[2.0, 0.5])
            .at("s=3 y=1", &[3.0, 1.0])
            .at("s=1 y=1/2", &[1.0, 0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (s, y) = (p[0], p[1]);
                sides(ser(geometric_weighted_sum(0.5, -1.0, s, y)?.scale(0.5)), val(alt_hurwitz_zeta(s, y)?))
            }),
        rec("eq-1.17", "Euler-transformed series for the alternating zeta function")
            .params(&[("s", POSITIVE)])
            .at("s=1", &[1.0])
            .at("s=2", &[2.0])
            .at("s=3", &[3.0])
            .tol(GEOMETRIC)
            .eval(|p, _| sides(ser(geometric_weighted_sum(0.5, -1.0, p[0], 1.0)?.scale(0.5)), val(alt_zeta(p[0])?))),
        rec("eq-1.18", "Euler-transformed series for the Hurwitz zeta function")
            .params(&[("s", Interval::open(1.0, f64::INFINITY)), ("y", POSITIVE)])
            .at("s=2 y=1", &[2.0, 1.0])
            .at("s=3 y=1/2", &[3.0, 0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (s, y) = (p[0], p[1]);
                sides(ser(geometric_weighted_sum(0.5, 1.0, s, y)?.scale(0.5)), val(hurwitz_zeta(s, y)?))
            }),
        rec("eq-1.19", "v^{n+1}/(n+1)^2 weighted sum of S_n against a dilogarithm integral")
            .params(&[("v", Interval::open(-0.5, 0.5)), ("x", Interval::closed(-1.0, 1.0)), ("s", POSITIVE), ("y", POSITIVE)])
            .at("v=0.4 x=1/2 s=2 y=1", &[0.4, 0.5, 2.0, 1.0])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (v, x, s, y) = (p[0], p[1], p[2], p[3]);
                sides(ser(power_weighted_sum(v, 2.0, x, s, y)?), val(polylog_weighted_integral(v, 2.0, x, s, y)?))
            }),
        rec("eq-1.20", "v^{n+1}/(n+1)^r weighted sum of S_n against a polylogarithm integral")
            .params(&[
                ("v", Interval::open(-0.5, 0.5)),
                ("r", Interval::closed(1.0, 10.0)),
                ("x", Interval::closed(-1.0, 1.0)),
                ("s", POSITIVE),
                ("y", POSITIVE),
            ])
            .at("v=0.3 r=3 x=-1/2 s=2 y=3/2", &[0.3, 3.0, -0.5, 2.0, 1.5])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (v, r, x, s, y) = (p[0], p[1], p[2], p[3], p[4]);
                sides(ser(power_weighted_sum(v, r, x, s, y)?), val(polylog_weighted_integral(v, r, x, s, y)?))
            }),
        rec("eq-1.21", "Abel mean of sum (-1)^n S_n(-2, y) equals zeta(s, y)/2")
            .params(&[("s", Interval::open(1.0, f64::INFINITY)), ("y", POSITIVE)])
            .at("s=3 y=1", &[3.0, 1.0])
            .at("s=2 y=1/2", &[2.0, 0.5])
            .at("s=4 y=3/2", &[4.0, 1.5])
            .tol(HASSE)
            .eval(|p, _| {
                let (s, y) = (p[0], p[1]);
                let l = alternating_weight_series(AlternatingVariant::ShiftedZeta, s, y)?;
                sides(ser(l), val(0.5 * hurwitz_zeta(s, y)?))
            }),
        rec("eq-1.22", "Abel mean of sum (-1)^n S_n(-2, 1) at s = n+1 equals zeta(n+1)/2")
            .params(&[("n", Interval::closed(1.0, 20.0))])
            .at("n=1", &[1.0])
            .at("n=2", &[2.0])
            .at("n=3", &[3.0])
            .tol(HASSE)
            .eval(|p, _| {
                let l = alternating_weight_series(AlternatingVariant::IntegerZeta, p[0], 1.0)?;
                sides(ser(l), val(0.5 * riemann_zeta(p[0] + 1.0)?))
            }),
        rec("eq-1.23", "Abel mean of sum (-1)^n S_n(2, 1) against (1 - 2^{2-s}) zeta(s)/2")
            .params(&[("s", Interval::open(1.0, f64::INFINITY))])
            .at("s=2", &[2.0])
            .at("s=3", &[3.0])
            .at("s=4", &[4.0])
            .tol(HASSE)
            .eval(|p, _| {
                let s = p[0];
                let l = alternating_weight_series(AlternatingVariant::AlternatingZeta, s, 1.0)?;
                sides(ser(l), val(0.5 * (1.0 - 2f64.powf(2.0 - s)) * riemann_zeta(s)?))
            })
            .corrected(|p, _| {
                let s = p[0];
                let l = alternating_weight_series(AlternatingVariant::AlternatingZeta, s, 1.0)?;
                sides(ser(l), val(0.5 * (1.0 - 2f64.powf(1.0 - s)) * riemann_zeta(s)?))
            }),
        rec("eq-1.24", "zeta(s) against sum 2^{-n-1} sum C(n,k) 2^{-k} (k+1)^{-s}")
            .params(&[("s", Interval::open(1.0, f64::INFINITY))])
            .at("s=2", &[2.0])
            .at("s=3", &[3.0])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let r = geometric_weighted_sum(0.5, 0.5, p[0], 1.0)?.scale(0.5);
                sides(val(riemann_zeta(p[0])?), ser(r))
            })
            .corrected(|p, _| {
                let r = geometric_weighted_sum(0.5, 0.5, p[0], 1.0)?.scale(0.5);
                sides(val(2.0 * polylog(p[0], 0.5)?), ser(r))
            }),
        rec("eq-1.25", "Abel mean of sum (-1)^n S_n(1/2, 1) equals -2 Li_s(-1/4)")
            .params(&[("s", POSITIVE)])
            .at("s=3/2", &[1.5])
            .at("s=2", &[2.0])
            .at("s=3", &[3.0])
            .tol(HASSE)
            .eval(|p, _| {
                let l = alternating_weight_series(AlternatingVariant::QuarterPolylog, p[0], 1.0)?;
                sides(ser(l), val(-2.0 * polylog(p[0], -0.25)?))
            }),
        rec("eq-1.25-integral", "Abel mean of sum (-1)^n S_n(1/2, 1) against its integral")
            .params(&[("s", POSITIVE)])
            .at("s=3/2", &[1.5])
            .at("s=3", &[3.0])
            .tol(HASSE)
            .eval(|p, _| {
                let l = alternating_weight_series(AlternatingVariant::QuarterPolylog, p[0], 1.0)?;
                sides(ser(l), val(0.5 * lerch_integral(-0.25, p[0], 1.0)?))
            }),
    ]
    .into_iter()
    .map(|r| if r.params.is_empty() { r.params(lerch_args) } else { r })
    .collect()
}

fn section_two_binomial() -> Vec<Rec> {
    vec![
        rec("eq-2.0", "central-binomial series for (arcsin y)^2")
            .params(&[("y", Interval::closed(-1.0, 1.0))])
            .at("y=1/2", &[0.5])
            .at("y=0.9", &[0.9])
            .at("y=1", &[1.0])
            .tol(SQRT_TAIL)
            .eval(|p, _| sides(ser(arcsin_sq_series(p[0])?), val(p[0].asin().powi(2)))),
        rec("eq-2.1", "x^2 as a series in sin^{2n} x")
            .params(&[("x", Interval::closed(-FRAC_PI_2, FRAC_PI_2))])
            .at("x=pi/6", &[FRAC_PI_6])
            .at("x=pi/3", &[FRAC_PI_3])
            .at("x=pi/2", &[FRAC_PI_2])
            .at("x=-1", &[-1.0])
            .tol(SQRT_TAIL)
            .eval(|p, _| sides(ser(arcsin_sq_series(p[0].sin())?), val(p[0] * p[0]))),
        rec("eq-2.2", "int_0^t x^2 cot x dx as a central-binomial series")
            .params(&[("t", HALF_PI)])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/4", &[FRAC_PI_4])
            .at("t=1", &[1.0])
            .at("t=pi/2", &[FRAC_PI_2])
            .eval(|p, _| sides(x_squared_cot(p[0])?, ser(zucker_sum(p[0])?.scale(0.25)))),
        rec("eq-2.3", "int_0^t x log sin x dx as a central-binomial series")
            .params(&[("t", Interval::open_closed(0.0, FRAC_PI_2))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/3", &[FRAC_PI_3])
            .at("t=pi/2", &[FRAC_PI_2])
            .eval(|p, _| {
                let t = p[0];
                let l = quad_tagged(|x: f64| x * x.sin().ln(), 0.0, t, EndpointTag::Log, EndpointTag::None)?;
                let z = zucker_sum(t)?;
                sides(l, Side { value: 0.5 * t * t * t.sin().ln() - z.value / 8.0, terms: z.terms_used })
            }),
        rec("eq-2.4", "int_0^{pi/2} x log sin x dx = 7 zeta(3)/16 - pi^2 log 2 / 8")
            .point()
            .eval(|_, _| {
                let l = quad_tagged(|x: f64| x * x.sin().ln(), 0.0, FRAC_PI_2, EndpointTag::Log, EndpointTag::None)?;
                sides(l, val(7.0 * ZETA3 / 16.0 - PI * PI * LN_2 / 8.0))
            }),
        rec("eq-2.6", "int_0^t x^2 cot x dx in Clausen functions")
            .params(&[("t", Interval::open(0.0, PI))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/3", &[FRAC_PI_3])
            .at("t=2", &[2.0])
            .eval(|p, _| {
                let t = p[0];
                let r = 0.5 * cl(3, 2.0 * t)? + t * t * (2.0 * t.sin()).ln() + t * cl(2, 2.0 * t)? - 0.5 * ZETA3;
                sides(x_squared_cot(t)?, val(r))
            }),
        rec("eq-2.7", "int_0^{pi/2} x^2 cot x dx = -7 zeta(3)/8 + pi^2 log 2 / 4")
            .point()
            .eval(|_, _| sides(x_squared_cot(FRAC_PI_2)?, val(-7.0 * ZETA3 / 8.0 + PI * PI * LN_2 / 4.0))),
        rec("eq-2.9", "zeta(3) from sum 4^n / (n^3 C(2n,n))")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| {
                let s = cbc_power_sum(4.0, 3)?;
                sides(val(ZETA3), Side { value: 2.0 / 7.0 * (PI * PI * LN_2 - s.value), terms: s.terms_used })
            }),
        rec("eq-2.10", "B(n, 1/2) = 4^n / (n C(2n,n))")
            .params(&[("n", Interval::closed(1.0, 1000.0))])
            .at("n=1", &[1.0])
            .at("n=5", &[5.0])
            .at("n=20", &[20.0])
            .eval(|p, _| {
                let n = p[0];
                let beta = (log_gamma(n)? + log_gamma(0.5)? - log_gamma(n + 0.5)?).exp();
                values(beta, CbcTerm::at(n as usize).ratio() / n)
            }),
        rec("eq-2.11", "sum 1/(n^3 C(2n,n)) = -8 int_0^{pi/6} x log(2 sin x) dx")
            .point()
            .tol(REFLECTION)
            .eval(|_, _| {
                let q = quad_tagged(|x: f64| x * (2.0 * x.sin()).ln(), 0.0, FRAC_PI_6, EndpointTag::Log, EndpointTag::None)?;
                sides(ser(cbc_power_sum(1.0, 3)?), Side { value: -8.0 * q.value, terms: q.terms })
            }),
        rec("eq-2.12", "int_0^{pi/2} x^3 cot x dx = pi^3 log 2 / 8 - 9 pi zeta(3) / 16")
            .point()
            .eval(|_, _| {
                let l = quad(|x: f64| if x == 0.0 { 0.0 } else { x.powi(3) / x.tan() }, 0.0, FRAC_PI_2)?;
                sides(l, val(PI.powi(3) * LN_2 / 8.0 - 9.0 * PI * ZETA3 / 16.0))
            }),
        rec("eq-2.12.1", "double central-binomial sum with sin 2jt in Clausen functions")
            .params(&[("t", Interval::closed(0.0, 1.0))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/4", &[FRAC_PI_4])
            .at("t=1", &[1.0])
            .eval(|p, _| values(wiener_double_sum(p[0])?, wiener_double_closed(p[0])?)),
        rec("eq-2.13", "int_0^t pi x^2 cot(pi x) dx in zeta'(-2, t) and zeta'(-1, t)")
            .params(&[("t", UNIT_OPEN)])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/3", &[1.0 / 3.0])
            .at("t=1/2", &[0.5])
            .at("t=0.7", &[0.7])
            .eval(|p, _| values(log_multiple_sine(MultipleSineOrder::new(3, p[0])?)?, triple_sine_hurwitz(p[0])?)),
        rec("eq-2.13.1", "int_0^t pi x^2 cot(pi x) dx as a central-binomial series in sin(pi t)")
            .params(&[("t", Interval::closed(0.0, 0.5))])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/2", &[0.5])
            .eval(|p, _| {
                let z = zucker_sum(PI * p[0])?.scale(1.0 / (4.0 * PI * PI));
                sides(val(log_multiple_sine(MultipleSineOrder::new(3, p[0])?)?), ser(z))
            }),
        rec("eq-2.14", "central-binomial series in sin(pi t) against zeta' values, t <= 1/2")
            .params(&[("t", Interval::open_closed(0.0, 0.5))])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/3", &[1.0 / 3.0])
            .at("t=1/2", &[0.5])
            .at("t=0.4", &[0.4])
            .eval(|p, _| {
                let z = zucker_sum(PI * p[0])?.scale(1.0 / (4.0 * PI * PI));
                sides(ser(z), val(triple_sine_hurwitz(p[0])?))
            }),
        rec("eq-2.19", "sum 2^n/(n^3 C(2n,n)) in zeta' values at 1/4 and 3/4")
            .point()
            .eval(|_, _| {
                let s = cbc_power_sum(2.0, 3)?.scale(1.0 / (4.0 * PI * PI));
                let r = -(zp(-2.0, 0.25)? + zp(-2.0, 0.75)?) + 0.5 * (zp(-1.0, 0.25)? - zp(-1.0, 0.75)?) + LN_2 / 32.0
                    - ZETA3 / (2.0 * PI * PI);
                sides(ser(s), val(r))
            }),
        rec("eq-2.23", "sum 2^n/(n^3 C(2n,n)) = -35 zeta(3)/16 + pi^2 log 2 / 8 + pi G")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| {
                sides(ser(cbc_power_sum(2.0, 3)?), val(-35.0 * ZETA3 / 16.0 + PI * PI * LN_2 / 8.0 + PI * CATALAN))
            }),
        rec("eq-2.24", "int_0^{pi/4} x^2 cot x dx = -35 zeta(3)/64 + pi^2 log 2 / 32 + pi G / 4")
            .point()
            .eval(|_, _| {
                let r = -35.0 * ZETA3 / 64.0 + PI * PI * LN_2 / 32.0 + PI * CATALAN / 4.0;
                sides(x_squared_cot(FRAC_PI_4)?, val(r))
            }),
        rec("eq-2.25", "sum 1/(n^3 C(2n,n)) in zeta' values at 1/6 and 5/6")
            .point()
            .eval(|_, _| {
                let s = cbc_power_sum(1.0, 3)?.scale(1.0 / (4.0 * PI * PI));
                let r = -(zp(-2.0, 1.0 / 6.0)? - zp(-2.0, 5.0 / 6.0)?)
                    + (zp(-1.0, 1.0 / 6.0)? - zp(-1.0, 5.0 / 6.0)?) / 3.0
                    - ZETA3 / (2.0 * PI * PI);
                sides(ser(s), val(r))
            })
            .corrected(|_, _| {
                let s = cbc_power_sum(1.0, 3)?.scale(1.0 / (4.0 * PI * PI));
                let r = -(zp(-2.0, 1.0 / 6.0)? + zp(-2.0, 5.0 / 6.0)?)
                    + (zp(-1.0, 1.0 / 6.0)? - zp(-1.0, 5.0 / 6.0)?) / 3.0
                    - ZETA3 / (2.0 * PI * PI);
                sides(ser(s), val(r))
            }),
        rec("eq-2.27", "sum 1/(n^3 C(2n,n)) in zeta'(-2) values and Cl_2(pi/3)")
            .point()
            .eval(|_, _| {
                let s = cbc_power_sum(1.0, 3)?.scale(1.0 / (4.0 * PI * PI));
                let r = -(zp(-2.0, 1.0 / 6.0)? - zp(-2.0, 5.0 / 6.0)?) + cl(2, FRAC_PI_3)? / (6.0 * PI)
                    - ZETA3 / (2.0 * PI * PI);
                sides(ser(s), val(r))
            })
            .corrected(|_, _| {
                let s = cbc_power_sum(1.0, 3)?.scale(1.0 / (4.0 * PI * PI));
                let r = -(zp(-2.0, 1.0 / 6.0)? + zp(-2.0, 5.0 / 6.0)?) + cl(2, FRAC_PI_3)? / (6.0 * PI)
                    - ZETA3 / (2.0 * PI * PI);
                sides(ser(s), val(r))
            }),
        rec("eq-2.33", "zeta(3) from sum sin(n pi/3)/n^2 and sum 1/(n^3 C(2n,n))")
            .point()
            .eval(|_, _| {
                let (sin_sum, _) = trig_zeta_sum(TrigZetaFamily::SinPiThird, 2.0)?;
                let c = cbc_power_sum(1.0, 3)?;
                sides(val(ZETA3), Side { value: FRAC_PI_2 * sin_sum.value - 0.75 * c.value, terms: sin_sum.terms_used + c.terms_used })
            }),
        rec("eq-2.34", "sum sin(n pi/3)/n^2 as a period-6 character sum")
            .point()
            .eval(|_, _| {
                let (sin_sum, _) = trig_zeta_sum(TrigZetaFamily::SinPiThird, 2.0)?;
                let chi = (hurwitz_zeta(2.0, 1.0 / 6.0)? + hurwitz_zeta(2.0, 1.0 / 3.0)? - hurwitz_zeta(2.0, 2.0 / 3.0)?
                    - hurwitz_zeta(2.0, 5.0 / 6.0)?)
                    / 36.0;
                sides(ser(sin_sum), val(3f64.sqrt() / 2.0 * chi))
            }),
        rec("eq-2.35", "zeta(3) from sum 1/(3n-2)^2 and sum 1/(n^3 C(2n,n))")
            .point()
            .eval(|_, _| {
                let sqrt3 = 3f64.sqrt();
                let c = cbc_power_sum(1.0, 3)?;
                let r = -sqrt3 / 18.0 * PI.powi(3) + 0.75 * sqrt3 * PI * hurwitz_zeta(2.0, 1.0 / 3.0)? / 9.0 - 0.75 * c.value;
                sides(val(ZETA3), Side { value: r, terms: c.terms_used })
            }),
        rec("eq-2.36", "sum 1/(n^3 C(2n,n)) in trigamma values at 1/3 and 2/3")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| {
                let r = PI * 3f64.sqrt() / 18.0 * (polygamma(1, 1.0 / 3.0)? - polygamma(1, 2.0 / 3.0)?) - 4.0 * ZETA3 / 3.0;
                sides(ser(cbc_power_sum(1.0, 3)?), val(r))
            }),
        rec("eq-2.37", "sum 1/(n^3 C(2n,n)) in the trigamma value at 1/3")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| {
                let sqrt3 = 3f64.sqrt();
                let r = PI * sqrt3 / 9.0 * polygamma(1, 1.0 / 3.0)? - 4.0 * ZETA3 / 3.0 - 2.0 / 27.0 * PI.powi(3) * sqrt3;
                sides(ser(cbc_power_sum(1.0, 3)?), val(r))
            }),
    ]
}

fn trig_record(id: &str, family: TrigZetaFamily, exponents: &[f64]) -> Rec {
    let mut r = rec(id, &format!("Dirichlet series with {} coefficients in zeta and Hurwitz zeta", family.as_str()))
        .params(&[("s", Interval::open(1.0, f64::INFINITY))]);
    for &s in exponents {
        r = r.at(&format!("s={s}"), &[s]);
    }
    r.eval(move |p, _| {
        let (direct, closed) = trig_zeta_sum(family, p[0])?;
        sides(ser(direct), val(closed))
    })
}

fn section_two_clausen() -> Vec<Rec> {
    vec![
        trig_record("eq-2.38", TrigZetaFamily::CosPiThird, &[2.0, 3.0, 4.5]),
        trig_record("eq-2.39", TrigZetaFamily::SinPiThird, &[2.0, 3.0, 4.5]),
        rec("eq-2.40", "sum cos(n pi/3)/n^3 = zeta(3)/3")
            .point()
            .eval(|_, _| sides(ser(trig_zeta_sum(TrigZetaFamily::CosPiThird, 3.0)?.0), val(ZETA3 / 3.0))),
        trig_record("eq-2.41", TrigZetaFamily::SinPiThird, &[2.0]),
        trig_record("eq-2.42", TrigZetaFamily::CosTwoPiThird, &[2.0, 3.0, 4.5]),
        trig_record("eq-2.43", TrigZetaFamily::SinTwoPiThird, &[2.0, 3.0, 4.5]),
        trig_record("eq-2.44", TrigZetaFamily::CosPiHalf, &[2.0, 3.0, 4.5]),
        trig_record("eq-2.45", TrigZetaFamily::SinPiHalf, &[2.0, 3.0, 4.5]),
        rec("eq-2.46", "central-binomial series in sin(pi t) in Clausen functions")
            .params(&[("t", Interval::closed(0.0, 0.5))])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/3", &[1.0 / 3.0])
            .at("t=0.4", &[0.4])
            .tol(REFLECTION)
            .eval(|p, _| {
                let t = p[0];
                let x = TWO_PI * t;
                let r = 4.0 * PI * PI * t * t * (2.0 * (PI * t).sin()).ln() + 2.0 * cl(3, x)? + 2.0 * x * cl(2, x)?
                    - 2.0 * ZETA3;
                sides(ser(zucker_sum(PI * t)?), val(r))
            }),
        rec("eq-2.47", "central-binomial series in sin u in Clausen functions")
            .params(&[("u", HALF_PI)])
            .at("u=pi/12", &[PI / 12.0])
            .at("u=pi/6", &[FRAC_PI_6])
            .at("u=pi/4", &[FRAC_PI_4])
            .at("u=pi/3", &[FRAC_PI_3])
            .at("u=5pi/12", &[5.0 * PI / 12.0])
            .at("u=pi/2", &[FRAC_PI_2])
            .eval(|p, _| sides(ser(zucker_sum(p[0])?), val(zucker_closed_form(p[0])?))),
        rec("eq-2.48", "sum 1/(n^3 C(2n,n)) in Cl_3(pi/3) and Cl_2(pi/3)")
            .point()
            .eval(|_, _| {
                let r = 2.0 * cl(3, FRAC_PI_3)? + 2.0 * PI / 3.0 * cl(2, FRAC_PI_3)? - 2.0 * ZETA3;
                sides(ser(cbc_power_sum(1.0, 3)?), val(r))
            }),
        rec("eq-2.48-cl3", "Cl_3(pi/3) = zeta(3)/3")
            .point()
            .eval(|_, _| values(cl(3, FRAC_PI_3)?, ZETA3 / 3.0)),
        rec("eq-2.48-cl2", "sum 1/(n^3 C(2n,n)) = 2 pi Cl_2(pi/3)/3 - 4 zeta(3)/3")
            .point()
            .eval(|_, _| {
                let r = 2.0 * PI / 3.0 * cl(2, FRAC_PI_3)? - 4.0 * ZETA3 / 3.0;
                sides(ser(cbc_power_sum(1.0, 3)?), val(r))
            }),
        rec("eq-2.49", "sum 2^n/(n^3 C(2n,n)) in Cl_3(pi/2) and Cl_2(pi/2)")
            .point()
            .eval(|_, _| {
                let r = PI * PI * LN_2 / 8.0 + 2.0 * cl(3, FRAC_PI_2)? + PI * cl(2, FRAC_PI_2)? - 2.0 * ZETA3;
                sides(ser(cbc_power_sum(2.0, 3)?), val(r))
            }),
        rec("eq-2.49-clausen", "odd-order Clausen values at 2 pi / q as multiples of zeta(2n+1)")
            .params(&[("q", Interval::closed(3.0, 6.0)), ("n", Interval::closed(1.0, 10.0))])
            .at("theta=pi/2 n=1", &[4.0, 1.0])
            .at("theta=pi/2 n=2", &[4.0, 2.0])
            .at("theta=pi/3 n=1", &[6.0, 1.0])
            .at("theta=pi/3 n=3", &[6.0, 3.0])
            .at("theta=2pi/3 n=1", &[3.0, 1.0])
            .at("theta=2pi/3 n=2", &[3.0, 2.0])
            .eval(|p, _| {
                let (q, n) = (p[0] as u32, int_arg(p[1]));
                let m = 2 * n + 1;
                let z = riemann_zeta(m as f64)?;
                let two = 2f64.powi(-2 * n as i32);
                let three = 3f64.powi(-2 * n as i32);
                let closed = match q {
                    4 => -2f64.powi(-(m as i32)) * (1.0 - two) * z,
                    6 => 0.5 * (1.0 - two) * (1.0 - three) * z,
                    _ => -0.5 * (1.0 - three) * z,
                };
                values(cl(m, TWO_PI / q as f64)?, closed)
            }),
        rec("eq-2.50", "2 sqrt(3) Cl_2(pi/3) = psi'(1/3) - 2 pi^2/3")
            .point()
            .eval(|_, _| values(2.0 * 3f64.sqrt() * cl(2, FRAC_PI_3)?, polygamma(1, 1.0 / 3.0)? - 2.0 * PI * PI / 3.0)),
        rec("eq-2.51", "trigamma at rational points in Clausen values")
            .params(&[("p", Interval::closed(1.0, 100.0)), ("q", Interval::closed(2.0, 100.0))])
            .at("p/q=1/3", &[1.0, 3.0])
            .at("p/q=1/4", &[1.0, 4.0])
            .at("p/q=2/5", &[2.0, 5.0])
            .at("p/q=3/7", &[3.0, 7.0])
            .eval(|a, _| trigamma_rational(a[0], a[1], true))
            .corrected(|a, _| trigamma_rational(a[0], a[1], false)),
        rec("eq-2.52", "Cl_2(pi/6) in psi'(1/3) and G")
            .point()
            .eval(|_, _| {
                let r = (3f64.sqrt() * polygamma(1, 1.0 / 3.0)? + 16.0 * CATALAN - 2.0 * PI * PI / 3f64.sqrt()) / 24.0;
                values(cl(2, FRAC_PI_6)?, r)
            }),
        rec("eq-2.53", "Clausen relation at alpha = 2 arctan sqrt 7")
            .point()
            .tol(REFLECTION)
            .eval(|_, _| {
                let a = 2.0 * 7f64.sqrt().atan();
                let l = 6.0 * cl(2, a)? - 6.0 * cl(2, 2.0 * a)? + 2.0 * cl(2, 3.0 * a)?;
                let q = TWO_PI / 7.0;
                values(l, 7.0 * (cl(2, q)? + cl(2, 2.0 * q)? - cl(2, 3.0 * q)?))
            }),
        rec("eq-2.55", "int_0^{pi/2} u^2 log sin u du = -pi^3 log 2 / 24 + 3 pi zeta(3) / 16")
            .point()
            .eval(|_, _| {
                let l = quad_tagged(|u: f64| u * u * u.sin().ln(), 0.0, FRAC_PI_2, EndpointTag::Log, EndpointTag::None)?;
                sides(l, val(-PI.powi(3) * LN_2 / 24.0 + 3.0 * PI * ZETA3 / 16.0))
            }),
        rec("eq-2.56", "Wiener's closed form of int_0^x sin^{2n} u du")
            .params(&[("n", Interval::closed(0.0, 200.0)), ("x", ANY)])
            .at("n=1 x=pi/2", &[1.0, FRAC_PI_2])
            .at("n=2 x=pi/3", &[2.0, FRAC_PI_3])
            .at("n=5 x=1", &[5.0, 1.0])
            .at("n=8 x=pi/2", &[8.0, FRAC_PI_2])
            .eval(|p, _| {
                let (closed, q) = wiener_integral(p[0] as usize, p[1])?;
                values(q, closed)
            }),
        rec("eq-2.57", "double central-binomial sum in int_0^x u^2 log sin u du and Clausen functions")
            .params(&[("x", Interval::open_closed(0.0, 1.0))])
            .at("x=pi/6", &[FRAC_PI_6])
            .at("x=pi/4", &[FRAC_PI_4])
            .at("x=1", &[1.0])
            .eval(|p, _| {
                let x = p[0];
                let q = quad_tagged(|u: f64| u * u * u.sin().ln(), 0.0, x, EndpointTag::Log, EndpointTag::None)?;
                let r = 4.0 / 3.0 * x.powi(3) * LN_2 + 4.0 * q.value + 2.0 * cl(4, 2.0 * x)? - 2.0 * x * cl(3, 2.0 * x)?
                    - 3.0 * x * ZETA3;
                values(wiener_double_sum(x)?, r)
            }),
        rec("eq-2.58", "double central-binomial sum in log sin x and Clausen functions")
            .params(&[("x", Interval::open_closed(0.0, 1.0))])
            .at("x=pi/6", &[FRAC_PI_6])
            .at("x=pi/4", &[FRAC_PI_4])
            .at("x=1", &[1.0])
            .eval(|p, _| {
                let x = p[0];
                let x3 = x.powi(3);
                let r = x3 * x.sin().ln() / 3.0 + 4.0 / 3.0 * x3 * LN_2 + 17.0 / 8.0 * cl(4, 2.0 * x)?
                    - 9.0 / 4.0 * x * cl(3, 2.0 * x)?
                    - 0.25 * x * x * cl(2, 2.0 * x)?
                    + x3 * cl(1, 2.0 * x)? / 3.0
                    - 3.0 * x * ZETA3;
                values(wiener_double_sum(x)?, r)
            })
            .corrected(|p, _| {
                let x = p[0];
                let x3 = x.powi(3);
                let r = 4.0 / 3.0 * x3 * x.sin().ln() + 4.0 / 3.0 * x3 * LN_2 + 3.0 * cl(4, 2.0 * x)?
                    - 4.0 * x * cl(3, 2.0 * x)?
                    - 2.0 * x * x * cl(2, 2.0 * x)?
                    + 4.0 / 3.0 * x3 * cl(1, 2.0 * x)?
                    - 3.0 * x * ZETA3;
                values(wiener_double_sum(x)?, r)
            }),
    ]
}

/// `psi'(p/q)` against `pi^2/2 csc^2(pi p/q) + 2q sum_m sin(2 m pi p/q) Cl_2(2 m pi a/q)`
/// with `a = p` (`printed`) or `a = 1`.
fn trigamma_rational(p: f64, q: f64, printed: bool) -> MathResult<(Side, Side)> {
    let a = if printed { p } else { 1.0 };
    let mut sum = 0.0;
    for m in 1..=((q as u32 - 1) / 2) {
        let m = m as f64;
        sum += (TWO_PI * m * p / q).sin() * cl(2, TWO_PI * m * a / q)?;
    }
    let r = 0.5 * PI * PI / (PI * p / q).sin().powi(2) + 2.0 * q * sum;
    values(polygamma(1, p / q)?, r)
}

fn section_two_odd() -> Vec<Rec> {
    vec![
        rec("eq-2.59", "x as a series in sin^{2n-1} x cos x")
            .params(&[("x", Interval::open(-FRAC_PI_2, FRAC_PI_2))])
            .at("x=pi/6", &[FRAC_PI_6])
            .at("x=pi/4", &[FRAC_PI_4])
            .at("x=1.2", &[1.2])
            .at("x=-1/2", &[-0.5])
            .tol(GEOMETRIC)
            .eval(|p, _| sides(val(p[0]), ser(arcsin_sq_derivative_series(p[0])?))),
        rec("eq-2.60", "pi x as a series in sin^{2n-1}(pi x) cos(pi x)")
            .params(&[("x", Interval::open(-0.5, 0.5))])
            .at("x=1/6", &[1.0 / 6.0])
            .at("x=1/4", &[0.25])
            .at("x=1/3", &[1.0 / 3.0])
            .tol(GEOMETRIC)
            .eval(|p, _| sides(val(PI * p[0]), ser(arcsin_sq_derivative_series(PI * p[0])?))),
        rec("eq-2.60-half", "int_0^{1/2} pi x cot(pi x) dx against sum 1/(n(2n-1))")
            .point()
            .eval(|_, _| {
                let s = half_reciprocal_sum()?;
                sides(val(log_multiple_sine(MultipleSineOrder::new(2, 0.5)?)?), Side { value: PI * PI / 4.0 * s.value, terms: s.terms })
            })
            .corrected(|_, _| {
                let s = half_reciprocal_sum()?;
                sides(val(log_multiple_sine(MultipleSineOrder::new(2, 0.5)?)?), Side { value: s.value / 4.0, terms: s.terms })
            }),
        rec("eq-2.60-integral", "int_0^{1/2} x cot(pi x) dx against (pi/2) log 2")
            .point()
            .eval(|_, _| {
                let l = quad(|x: f64| if x == 0.0 { 1.0 / PI } else { x / (PI * x).tan() }, 0.0, 0.5)?;
                sides(l, val(FRAC_PI_2 * LN_2))
            })
            .corrected(|_, _| {
                let l = quad(|x: f64| if x == 0.0 { 1.0 / PI } else { x / (PI * x).tan() }, 0.0, 0.5)?;
                sides(l, val(LN_2 / (2.0 * PI)))
            }),
        rec("eq-2.61", "int_0^t x/sin x dx as a central-binomial series")
            .params(&[("t", HALF_PI)])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/4", &[FRAC_PI_4])
            .at("t=pi/3", &[FRAC_PI_3])
            .at("t=pi/2", &[FRAC_PI_2])
            .tol(REFLECTION)
            .eval(|p, _| sides(x_over_sin_quad(p[0])?, ser(x_over_sin_series(p[0])?))),
        rec("eq-2.63", "int_0^t x/sin x dx as odd cosine and sine series")
            .params(&[("t", Interval::open(0.0, PI))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/3", &[FRAC_PI_3])
            .at("t=pi/2", &[FRAC_PI_2])
            .at("t=2.5", &[2.5])
            .eval(|p, _| {
                let t = p[0];
                sides(x_over_sin_quad(t)?, val(-2.0 * t * odd_cosine_sum(t) + 2.0 * odd_sine_sum(t)?))
            }),
        rec("eq-2.64", "central-binomial series for int_0^t x/sin x against the odd Fourier series")
            .params(&[("t", Interval::open_closed(0.0, FRAC_PI_2))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/3", &[FRAC_PI_3])
            .at("t=pi/2", &[FRAC_PI_2])
            .tol(REFLECTION)
            .eval(|p, _| {
                let t = p[0];
                sides(ser(x_over_sin_series(t)?), val(-t * odd_cosine_sum(t) + odd_sine_sum(t)?))
            })
            .corrected(|p, _| {
                let t = p[0];
                sides(ser(x_over_sin_series(t)?), val(2.0 * (-t * odd_cosine_sum(t) + odd_sine_sum(t)?)))
            }),
        rec("eq-2.65", "int_0^{pi/2} x/sin x dx = 2 sum (-1)^n/(2n+1)^2")
            .point()
            .eval(|_, _| {
                let s = euler_transform_sum(|n| 1.0 / ((2 * n + 1) as f64).powi(2), 1e-17, 10_000)?;
                sides(x_over_sin_quad(FRAC_PI_2)?, ser(s.scale(2.0)))
            }),
        rec("eq-2.66", "Catalan's constant as a central-binomial series")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| sides(val(CATALAN), ser(catalan_series()?))),
        rec("eq-2.67", "t log tan t plus an odd sine series against the central-binomial series")
            .params(&[("t", Interval::open_closed(0.0, FRAC_PI_4))])
            .at("t=pi/12", &[PI / 12.0])
            .at("t=pi/8", &[PI / 8.0])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/4", &[FRAC_PI_4])
            .tol(REFLECTION)
            .eval(|p, _| {
                let t = p[0];
                let l = t * t.tan().ln() + cl(2, 2.0 * t)? - 0.25 * cl(2, 4.0 * t)?;
                sides(val(l), ser(x_over_sin_series(t)?))
            })
            .corrected(|p, _| {
                let t = p[0];
                let l = t * t.tan().ln() + cl(2, 2.0 * t)? - 0.25 * cl(2, 4.0 * t)?;
                sides(val(l), ser(x_over_sin_series(2.0 * t)?.scale(0.5)))
            }),
        rec("eq-2.68", "int_0^t x/sin x dx = t log tan(t/2) + 2 sum sin((2n+1)t)/(2n+1)^2")
            .params(&[("t", Interval::open(0.0, PI))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/3", &[FRAC_PI_3])
            .at("t=2.5", &[2.5])
            .eval(|p, _| {
                let t = p[0];
                sides(x_over_sin_quad(t)?, val(t * (0.5 * t).tan().ln() + 2.0 * odd_sine_sum(t)?))
            }),
        rec("eq-2.69", "int_0^t x/sin x dx = t log tan(t/2) + Cl_2(t) + Cl_2(pi - t)")
            .params(&[("t", Interval::open(0.0, PI))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/2", &[FRAC_PI_2])
            .at("t=2.5", &[2.5])
            .tol(REFLECTION)
            .eval(|p, _| {
                let x = x_over_sin(p[0])?;
                values(x.quadrature, x.clausen)
            }),
        rec("eq-2.70", "odd Fourier series against the central-binomial series for int_0^t x/sin x")
            .params(&[("t", Interval::open_closed(0.0, FRAC_PI_2))])
            .at("t=pi/4", &[FRAC_PI_4])
            .at("t=1", &[1.0])
            .at("t=pi/2", &[FRAC_PI_2])
            .tol(REFLECTION)
            .eval(|p, _| {
                let t = p[0];
                sides(val(odd_sine_sum(t)? - t * odd_cosine_sum(t)), ser(x_over_sin_series(t)?))
            })
            .corrected(|p, _| {
                let t = p[0];
                sides(val(2.0 * (odd_sine_sum(t)? - t * odd_cosine_sum(t))), ser(x_over_sin_series(t)?))
            }),
        rec("eq-2.71", "sum C(n,k)(-1)^k/(2k+1) = [2^n n!]^2/(2n+1)!")
            .params(&[("n", Interval::closed(0.0, 150.0))])
            .at("n=0", &[0.0])
            .at("n=1", &[1.0])
            .at("n=2", &[2.0])
            .at("n=7", &[7.0])
            .at("n=12", &[12.0])
            .at("n=20", &[20.0])
            .eval(|p, _| {
                let (alt, prod) = wallis_pair(p[0] as usize)?;
                values(alt, prod)
            }),
        rec("eq-2.72", "int_0^{pi/2} sin^{2n+1} x dx = [2^n n!]^2/(2n+1)!")
            .params(&[("n", Interval::closed(0.0, 150.0))])
            .at("n=0", &[0.0])
            .at("n=3", &[3.0])
            .at("n=10", &[10.0])
            .eval(|p, _| {
                let n = p[0];
                let k = 2.0 * n + 1.0;
                let l = quad(|x: f64| x.sin().powf(k), 0.0, FRAC_PI_2)?;
                let r = (n * 4f64.ln() + 2.0 * log_gamma(n + 1.0)? - log_gamma(2.0 * n + 2.0)?).exp();
                sides(l, val(r))
            }),
        rec("eq-2.73", "sum 16^n (n!)^4 / ((2n+1)^3 ((2n)!)^2) against 7 zeta(3)/4 - pi G / 2")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| sides(val(7.0 * ZETA3 / 4.0 - PI * CATALAN / 2.0), ser(batir_sum(BatirVariant::OddCube)?)))
            .corrected(|_, _| sides(val(7.0 * ZETA3 / 2.0 - PI * CATALAN), ser(batir_sum(BatirVariant::OddCube)?))),
        rec("eq-2.74", "pi - 2 = (1/2) sum 16^n (n!)^4 / (n^2 (2n+1) ((2n)!)^2)")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| sides(val(PI - 2.0), ser(batir_sum(BatirVariant::SquareTimesOdd)?.scale(0.5)))),
        rec("eq-2.75", "8 pi G - 14 zeta(3) = sum 16^n (n!)^4 / (n^3 ((2n)!)^2)")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| sides(val(8.0 * PI * CATALAN - 14.0 * ZETA3), ser(batir_sum(BatirVariant::Cube)?))),
    ]
}

fn half_reciprocal_sum() -> MathResult<Side> {
    let f = |nu: f64| 1.0 / (nu * (2.0 * nu - 1.0));
    Ok(ser(sum_with_smooth_tail(|n| f(n as f64), f, 1, 2000, 1e-16)?))
}

/// `2p cos(p pi/2) sum (-1)^n / ((2n+1)^2 - p^2)`.
fn fettis_series_side(p: f64) -> MathResult<Side> {
    let s = fettis_alternating_series(p)?;
    Ok(Side { value: 2.0 * p * (0.5 * PI * p).cos() * s.value, terms: s.terms_used })
}

/// `2 sum [1/(2n+1) + ((2n+1) - c (-1)^n p) / (p^2 - (2n+1)^2)]`.
fn one_minus_cos_series(p: f64, c: f64) -> MathResult<f64> {
    Ok(2.0 * (odd_reciprocal_sum(p)? + c * p * fettis_alternating_series(p)?.value))
}

fn digamma_quarter_gap(p: f64) -> MathResult<f64> {
    Ok(digamma((3.0 + p) / 4.0)? - digamma((1.0 + p) / 4.0)?)
}

fn section_two_fettis() -> Vec<Rec> {
    let p_param: &[(&'static str, Interval)] = &[("p", Interval::open(0.0, 10.0))];
    vec![
        rec("eq-2.76", "(1/2) int_0^x u^n cot(u/2) du in Clausen functions")
            .params(&[("n", Interval::closed(1.0, 10.0)), ("x", Interval::open_closed(0.0, TWO_PI))])
            .at("n=1 x=pi/2", &[1.0, FRAC_PI_2])
            .at("n=2 x=pi", &[2.0, PI])
            .at("n=3 x=2", &[3.0, 2.0])
            .at("n=4 x=5", &[4.0, 5.0])
            .eval(|p, _| {
                let (q, closed) = ramanujan_cot(int_arg(p[0]), p[1])?;
                values(q, closed)
            }),
        rec("eq-2.77", "2^n int_0^{pi/2} x^n cot x dx in zeta(n+1) and Cl_{j+1}(pi)")
            .params(&[("n", Interval::closed(1.0, 10.0))])
            .at("n=1", &[1.0])
            .at("n=2", &[2.0])
            .at("n=3", &[3.0])
            .at("n=5", &[5.0])
            .eval(|p, _| {
                let n = int_arg(p[0]);
                let nf = n as f64;
                let l = quad(|x: f64| if x == 0.0 { 0.0 } else { x.powi(n as i32) / x.tan() }, 0.0, FRAC_PI_2)?;
                let fact = gamma(nf + 1.0)?;
                let mut r = (0.5 * nf * PI).cos() * fact * riemann_zeta(nf + 1.0)?;
                for j in 0..=n {
                    let sign = if (j * (j + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    let falling = fact / gamma(nf + 1.0 - j as f64)?;
                    r -= sign * falling * PI.powi((n - j) as i32) * cl(j + 1, PI)?;
                }
                sides(Side { value: 2f64.powi(n as i32) * l.value, terms: l.terms }, val(r))
            }),
        rec("eq-2.78", "int_0^{pi/2} sin(px)/sin x dx as an alternating series")
            .params(p_param)
            .at("p=1/2", &[0.5])
            .at("p=2", &[2.0])
            .at("p=5/2", &[2.5])
            .at("p=4.4", &[4.4])
            .eval(|p, _| sides(val(fettis_integral(FettisKind::SinRatio, p[0])?.0), fettis_series_side(p[0])?)),
        rec("eq-2.79", "sum (-1)^{n+1} / ((2n+1)^2 - 16) = 1/2")
            .point()
            .eval(|_, _| sides(ser(fettis_alternating_series(4.0)?.scale(-1.0)), val(0.5)))
            .corrected(|_, _| sides(ser(fettis_alternating_series(2.0)?.scale(-1.0)), val(0.5))),
        rec("eq-2.80", "int_0^{pi/2} sin(px)/sin x dx in digamma values")
            .params(p_param)
            .at("p=1/2", &[0.5])
            .at("p=1", &[1.0])
            .at("p=2", &[2.0])
            .at("p=5/2", &[2.5])
            .eval(|p, _| {
                let (q, closed) = fettis_integral(FettisKind::SinRatio, p[0])?;
                values(q, closed)
            }),
        rec("eq-2.81", "int_0^{pi/2} (1 - cos px)/sin x dx in digamma values")
            .params(p_param)
            .at("p=1/2", &[0.5])
            .at("p=1", &[1.0])
            .at("p=2", &[2.0])
            .at("p=3.7", &[3.7])
            .eval(|p, _| {
                let (q, closed) = fettis_integral(FettisKind::OneMinusCos, p[0])?;
                values(q, closed)
            }),
        rec("eq-2.82", "alternating series in digamma values")
            .params(p_param)
            .at("p=1/2", &[0.5])
            .at("p=2", &[2.0])
            .at("p=5/2", &[2.5])
            .eval(|p, _| {
                let p = p[0];
                let r = FRAC_PI_2 - 0.5 * (0.5 * PI * p).cos() * digamma_quarter_gap(p)?;
                sides(fettis_series_side(p)?, val(r))
            }),
        rec("eq-2.83", "2G = -(psi'(3/4) - psi'(1/4))/8")
            .point()
            .eval(|_, _| values(2.0 * CATALAN, -(polygamma(1, 0.75)? - polygamma(1, 0.25)?) / 8.0)),
        rec("eq-2.84", "psi'(1/2) = pi^2/2")
            .point()
            .eval(|_, _| values(polygamma(1, 0.5)?, PI * PI / 2.0)),
        rec("eq-2.85", "int_0^{pi/2} (1 - cos px)/sin x dx as a series over odd integers")
            .params(p_param)
            .at("p=1/2", &[0.5])
            .at("p=2", &[2.0])
            .at("p=5/2", &[2.5])
            .eval(|p, _| {
                let p = p[0];
                values(fettis_integral(FettisKind::OneMinusCos, p)?.0, one_minus_cos_series(p, -1.0)?)
            })
            .corrected(|p, _| {
                let p = p[0];
                values(fettis_integral(FettisKind::OneMinusCos, p)?.0, one_minus_cos_series(p, (0.5 * PI * p).sin())?)
            }),
        rec("eq-2.86", "2p^2 sum 1/((2n+1)(p^2 - (2n+1)^2)) in digamma values")
            .params(p_param)
            .at("p=1/2", &[0.5])
            .at("p=5/2", &[2.5])
            .at("p=1/3", &[1.0 / 3.0])
            .eval(|p, _| {
                let p = p[0];
                let sigma = (0.5 * PI * p).sin();
                let r = digamma((1.0 + p) / 2.0)? - digamma(0.5)? + 0.5 * (1.0 - sigma) * digamma_quarter_gap(p)?
                    - FRAC_PI_2 / (0.5 * PI * p).cos();
                values(2.0 * odd_reciprocal_sum(p)?, r)
            })
            .corrected(|p, _| {
                let p = p[0];
                let r = digamma((1.0 + p) / 2.0)? - digamma(0.5)? - FRAC_PI_2 * (0.5 * PI * p).tan();
                values(2.0 * odd_reciprocal_sum(p)?, r)
            }),
        rec("eq-2.87", "2p^2 sum 1/(n(p^2 - n^2)) = psi(1+p) + psi(1-p) + 2 gamma")
            .params(&[("p", UNIT_OPEN)])
            .at("p=1/2", &[0.5])
            .at("p=1/3", &[1.0 / 3.0])
            .at("p=0.7", &[0.7])
            .eval(|p, _| {
                let p = p[0];
                let f = |nu: f64| 2.0 * p * p / (nu * (p * p - nu * nu));
                let s = sum_with_smooth_tail(|n| f(n as f64), f, 1, 2000, 1e-16)?;
                sides(ser(s), val(digamma(1.0 + p)? + digamma(1.0 - p)? + 2.0 * EULER_GAMMA))
            }),
        rec("eq-2.88", "digamma combination at 1 +- p and 1 +- p/2")
            .params(&[("p", UNIT_OPEN)])
            .at("p=1/2", &[0.5])
            .at("p=0.7", &[0.7])
            .at("p=1/3", &[1.0 / 3.0])
            .eval(|p, _| {
                let p = p[0];
                let sigma = (0.5 * PI * p).sin();
                let r = digamma((1.0 + p) / 2.0)? + 2.0 * LN_2 + 0.5 * (1.0 - sigma) * digamma_quarter_gap(p)?
                    - FRAC_PI_2 / (0.5 * PI * p).cos();
                values(digamma_combination(p)?, r)
            })
            .corrected(|p, _| {
                let p = p[0];
                let r = digamma((1.0 + p) / 2.0)? + 2.0 * LN_2 - FRAC_PI_2 * (0.5 * PI * p).tan();
                values(digamma_combination(p)?, r)
            }),
        rec("eq-2.89", "central-binomial series with H^{(2)}_{n-1} for (arcsin y)^4")
            .params(&[("y", Interval::closed(-1.0, 1.0))])
            .at("y=1/2", &[0.5])
            .at("y=0.9", &[0.9])
            .at("y=1", &[1.0])
            .tol(SQRT_TAIL)
            .eval(|p, _| sides(ser(arcsin_fourth_series(p[0])?), val(p[0].asin().powi(4)))),
        rec("eq-2.90", "x^4 as a series in sin^{2n} x")
            .params(&[("x", Interval::closed(-FRAC_PI_2, FRAC_PI_2))])
            .at("x=pi/6", &[FRAC_PI_6])
            .at("x=pi/3", &[FRAC_PI_3])
            .at("x=pi/2", &[FRAC_PI_2])
            .tol(SQRT_TAIL)
            .eval(|p, _| sides(ser(arcsin_fourth_series(p[0].sin())?), val(p[0].powi(4)))),
        rec("eq-2.91", "int_0^t x^4 cot x dx as a central-binomial series")
            .params(&[("t", HALF_PI)])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/4", &[FRAC_PI_4])
            .at("t=1", &[1.0])
            .at("t=pi/2", &[FRAC_PI_2])
            .tol(REFLECTION)
            .eval(|p, _| {
                let l = quad(|x: f64| if x == 0.0 { 0.0 } else { x.powi(4) / x.tan() }, 0.0, p[0])?;
                sides(l, ser(quartic_cot_series(p[0])?))
            }),
        rec("eq-2.92", "pi^4/16 - 3 pi^2 + 24 as a harmonic central-binomial series")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| sides(val(PI.powi(4) / 16.0 - 3.0 * PI * PI + 24.0), ser(batir_sum(BatirVariant::HarmonicOdd)?.scale(1.5)))),
        rec("eq-2.92-euler", "sum H^{(2)}_n / n^2 = 7 zeta(4)/4")
            .point()
            .tol(SQRT_TAIL)
            .eval(|_, _| {
                let (s, closed) = euler_sum_h2()?;
                sides(ser(s), val(closed))
            }),
    ]
}

/// `psi(1+p) + psi(1-p) - (psi(1+p/2) + psi(1-p/2))/2`.
fn digamma_combination(p: f64) -> MathResult<f64> {
    Ok(digamma(1.0 + p)? + digamma(1.0 - p)? - 0.5 * (digamma(1.0 + 0.5 * p)? + digamma(1.0 - 0.5 * p)?))
}

fn reflection_record(id: &str, parity: ReflectionParity) -> Rec {
    let mut r = rec(id, &format!("zeta' reflection formula, {} parity, against Clausen values", parity.as_str()))
        .params(&[("n", Interval::closed(0.0, 10.0)), ("t", UNIT_OPEN)])
        .tol(REFLECTION);
    for n in 0..3 {
        for (tl, t) in [("1/6", 1.0 / 6.0), ("1/4", 0.25), ("1/3", 1.0 / 3.0), ("0.4", 0.4)] {
            r = r.at(&format!("n={n} t={tl}"), &[n as f64, t]);
        }
    }
    r
}

/// `(printed lhs, rhs)` of the `zeta'(-2, 1/6)` specialisation, with the Bernoulli
/// value and the `Cl_3(pi/3)` term either as printed or recomputed.
fn fourier_sixth(printed: bool, ctx: &EvalContext) -> MathResult<(Side, Side)> {
    let t = 1.0 / 6.0;
    let (_, rhs) = fourier_zeta_prime(t, FourierOrder::MinusTwo, ctx.budget(FOURIER_TERMS))?;
    let series = rhs.value + cl(3, FRAC_PI_3)? / (4.0 * PI * PI);
    let (b3, w, cl3) = if printed { (5.0 / 216.0, 0.5, ZETA3 / 4.0) } else { (bernoulli_poly(3, t), 1.0 / 3.0, ZETA3 / 3.0) };
    let lhs = zp(-2.0, t)? - b3 * (0.5 - EULER_GAMMA / 3.0 - w * TWO_PI.ln());
    sides(val(lhs), Side { value: series - cl3 / (4.0 * PI * PI), terms: rhs.terms_used })
}

fn section_two_zeta_prime() -> Vec<Rec> {
    let k = constants();
    let zeta_prime_minus1 = k.zeta_prime_minus1.value;
    vec![
        rec("eq-2.16", "zeta'(-1, x) - zeta'(-1) = x log Gamma(x) - log G(1+x)")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .at("x=0.8", &[0.8])
            .tol(REFLECTION)
            .eval(move |p, _| {
                let x = p[0];
                values(zp(-1.0, x)? - zeta_prime_minus1, x * log_gamma(x)? - log_barnes_g(x)?)
            }),
        rec("eq-2.17", "zeta'(-1, x) - zeta'(-1, 1-x) in log Gamma and Barnes G")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/3", &[1.0 / 3.0])
            .at("x=0.7", &[0.7])
            .tol(REFLECTION)
            .eval(|p, _| {
                let x = p[0];
                let r = x * (log_gamma(x)? + log_gamma(1.0 - x)?) + log_barnes_g(-x)? - log_barnes_g(x)?;
                values(zp(-1.0, x)? - zp(-1.0, 1.0 - x)?, r)
            }),
        rec("eq-2.18", "zeta'(-2, 1/2) = 3 zeta(3)/(16 pi^2)")
            .point()
            .eval(|_, _| values(zp(-2.0, 0.5)?, 3.0 * ZETA3 / (16.0 * PI * PI))),
        reflection_record("eq-2.20", ReflectionParity::Odd)
            .eval(|p, _| {
                let (n, t) = (int_arg(p[0]), p[1]);
                let nf = n as f64;
                let m = 2.0 * nf + 1.0;
                let l = zp(-m, t)? - zp(-m, 1.0 - t)?;
                values(l, gamma(m + 1.0)? / TWO_PI.powf(m) * cl(2 * n + 2, TWO_PI * t)?)
            })
            .corrected(|p, _| {
                let (l, r) = adamchik_reflection(int_arg(p[0]), p[1], ReflectionParity::Odd)?;
                values(l, r)
            }),
        reflection_record("eq-2.21", ReflectionParity::Even).eval(|p, _| {
            let (l, r) = adamchik_reflection(int_arg(p[0]), p[1], ReflectionParity::Even)?;
            values(l, r)
        }),
        rec("eq-2.22", "zeta'(-1, 1/4) - zeta'(-1, 3/4) = G/(2 pi)")
            .point()
            .eval(|_, _| values(zp(-1.0, 0.25)? - zp(-1.0, 0.75)?, CATALAN / TWO_PI)),
        rec("eq-2.26", "zeta'(-2, 1/6) + zeta'(-2, 5/6) = -zeta(3)/(8 pi^2)")
            .point()
            .eval(|_, _| values(zp(-2.0, 1.0 / 6.0)? + zp(-2.0, 5.0 / 6.0)?, -ZETA3 / (8.0 * PI * PI)))
            .corrected(|_, _| values(zp(-2.0, 1.0 / 6.0)? + zp(-2.0, 5.0 / 6.0)?, -ZETA3 / (6.0 * PI * PI))),
        rec("eq-2.26-cl3", "Cl_3(pi/3) = zeta(3)/4 from the Lewin formula")
            .point()
            .eval(|_, _| values(cl(3, FRAC_PI_3)?, ZETA3 / 4.0))
            .corrected(|_, _| values(cl(3, FRAC_PI_3)?, 0.5 * 0.75 * (8.0 / 9.0) * ZETA3)),
        rec("eq-2.30", "Fourier form of 2 zeta'(-1, t)")
            .params(&[("t", Interval::open_closed(0.0, 1.0))])
            .at("t=1/4", &[0.25])
            .at("t=1/3", &[1.0 / 3.0])
            .at("t=1/2", &[0.5])
            .at("t=1", &[1.0])
            .at("t=0.3", &[0.3])
            .tol(FOURIER)
            .eval(|p, ctx| {
                let (l, r) = fourier_zeta_prime(p[0], FourierOrder::MinusOne, ctx.budget(FOURIER_TERMS))?;
                sides(val(l), ser(r))
            }),
        rec("eq-2.31", "Fourier form of zeta'(-2, t)")
            .params(&[("t", Interval::open_closed(0.0, 1.0))])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/3", &[1.0 / 3.0])
            .at("t=1/2", &[0.5])
            .at("t=1/sqrt5", &[1.0 / 5f64.sqrt()])
            .tol(FOURIER)
            .eval(|p, ctx| {
                let (l, r) = fourier_zeta_prime(p[0], FourierOrder::MinusTwo, ctx.budget(FOURIER_TERMS))?;
                sides(val(l), ser(r))
            })
            .corrected(|p, ctx| {
                let (_, r) = fourier_zeta_prime(p[0], FourierOrder::MinusTwo, ctx.budget(FOURIER_TERMS))?;
                sides(val(fourier_lhs(FourierOrder::MinusTwo, p[0], false)?), ser(r))
            }),
        rec("eq-2.31-t6", "Fourier form of zeta'(-2, 1/6) with B_3(1/6) and Cl_3(pi/3) inserted")
            .point()
            .tol(FOURIER)
            .eval(|_, ctx| fourier_sixth(true, ctx))
            .corrected(|_, ctx| fourier_sixth(false, ctx)),
        rec("eq-2.32", "zeta'(-1, 1/4) = G/(4 pi) - zeta'(-1)/8")
            .point()
            .tol(REFLECTION)
            .eval(move |_, _| values(zp(-1.0, 0.25)?, CATALAN / (4.0 * PI) - zeta_prime_minus1 / 8.0)),
        rec("eq-2.93", "int_0^t pi x cot(pi x) dx in zeta'(-1, t)")
            .params(&[("t", UNIT_OPEN)])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/3", &[1.0 / 3.0])
            .at("t=1/2", &[0.5])
            .at("t=0.7", &[0.7])
            .eval(|p, _| {
                let t = p[0];
                let r = zp(-1.0, t)? - zp(-1.0, 1.0 - t)? + t * (2.0 * (PI * t).sin()).ln();
                values(log_multiple_sine(MultipleSineOrder::new(2, t)?)?, r)
            }),
        rec("eq-2.94", "pi x cot(pi x) = -2 sum zeta(2n) x^{2n}")
            .params(&[("x", Interval::open(-1.0, 1.0))])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .at("x=0.6", &[0.6])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (s, c) = zeta_even_series(p[0], EvenZetaForm::Cot)?;
                values(c, s)
            }),
        rec("eq-2.95", "-2 sum zeta(2n) t^{2n+1}/(2n+1) in zeta'(-1, t)")
            .params(&[("t", UNIT_OPEN)])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/2", &[0.5])
            .at("t=0.7", &[0.7])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (s, c) = zeta_even_series(p[0], EvenZetaForm::OddPower)?;
                values(s, c)
            }),
        rec("eq-2.96", "int_0^t log(2 sin pi x) dx = -(zeta'(-1, t) - zeta'(-1, 1-t))")
            .params(&[("t", Interval::open_closed(0.0, 1.0))])
            .at("t=1/6", &[1.0 / 6.0])
            .at("t=1/4", &[0.25])
            .at("t=1/2", &[0.5])
            .at("t=0.8", &[0.8])
            .eval(|p, _| {
                let (q, c) = log_sin_integral_identity(p[0])?;
                values(q, c)
            }),
        rec("eq-2.97", "mixed derivative of zeta(s, t) in t and s")
            .params(&[("s", Interval::closed(-5.0, 5.0)), ("t", Interval::open(0.0, 2.0))])
            .at("s=-3/2 t=1/2", &[-1.5, 0.5])
            .at("s=2 t=0.7", &[2.0, 0.7])
            .at("s=-2 t=1/3", &[-2.0, 1.0 / 3.0])
            .tol(ZETA_INTEGRAL)
            .eval(|p, _| {
                let (s, t) = (p[0], p[1]);
                let h = 1e-3;
                let d = |k: f64| zp(s, t + k * h);
                let lhs = (d(-2.0)? - 8.0 * d(-1.0)? + 8.0 * d(1.0)? - d(2.0)?) / (12.0 * h);
                values(lhs, -hurwitz_zeta(s + 1.0, t)? - s * zp(s + 1.0, t)?)
            }),
        rec("eq-2.97-logsin", "sum zeta(2n) t^{2n}/n = log(pi t) - log sin(pi t)")
            .params(&[("t", Interval::open(-1.0, 1.0))])
            .at("t=1/4", &[0.25])
            .at("t=1/2", &[0.5])
            .at("t=0.8", &[0.8])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (s, c) = zeta_even_series(p[0], EvenZetaForm::LogSin)?;
                values(s, c)
            }),
        rec("eq-2.97-zeta3", "zeta(3) = (2 pi^2/7)(log pi - 1/2 - sum zeta(2n)/(n(n+1) 4^n))")
            .point()
            .tol(GEOMETRIC)
            .eval(|_, _| {
                let (s, c) = zeta_even_series(0.0, EvenZetaForm::FujiiSuzuki)?;
                values(s, c)
            }),
        rec("eq-2.98", "n int_0^v zeta'(1-n, t) dt in Bernoulli polynomials and zeta'(-n, v)")
            .params(&[("n", Interval::closed(1.0, 10.0)), ("v", Interval::open_closed(0.0, 1.0))])
            .at("n=1 v=1/2", &[1.0, 0.5])
            .at("n=1 v=1", &[1.0, 1.0])
            .at("n=2 v=1/2", &[2.0, 0.5])
            .at("n=2 v=1", &[2.0, 1.0])
            .at("n=3 v=0.3", &[3.0, 0.3])
            .tol(ZETA_INTEGRAL)
            .eval(|p, _| {
                let (l, r) = adamchik_integral(int_arg(p[0]), p[1])?;
                values(l, r)
            }),
        rec("eq-2.99", "int_0^v zeta'(-1, t) dt = -B_3(v)/12 + zeta'(-2, v)/2 + zeta(3)/(8 pi^2)")
            .params(&[("v", Interval::open_closed(0.0, 1.0))])
            .at("v=1/4", &[0.25])
            .at("v=1/2", &[0.5])
            .at("v=0.8", &[0.8])
            .tol(ZETA_INTEGRAL)
            .eval(|p, _| {
                let v = p[0];
                let (l, _) = adamchik_integral(2, v)?;
                values(0.5 * l, -bernoulli_poly(3, v) / 12.0 + 0.5 * zp(-2.0, v)? + ZETA3 / (8.0 * PI * PI))
            }),
        rec("eq-2.100", "int_0^1 zeta'(1-n, t) dt = 0")
            .params(&[("n", Interval::closed(1.0, 10.0))])
            .at("n=1", &[1.0])
            .at("n=2", &[2.0])
            .at("n=3", &[3.0])
            .at("n=4", &[4.0])
            .tol(ZETA_INTEGRAL)
            .eval(|p, _| {
                let n = int_arg(p[0]);
                let (l, _) = adamchik_integral(n, 1.0)?;
                values(l / n as f64, 0.0)
            }),
    ]
}

fn log_s2(x: f64) -> MathResult<f64> {
    log_multiple_sine(MultipleSineOrder::new(2, x)?)
}

fn log_s3(x: f64) -> MathResult<f64> {
    log_multiple_sine(MultipleSineOrder::new(3, x)?)
}

fn section_three() -> Vec<Rec> {
    let k = constants();
    let zeta_prime_minus1 = k.zeta_prime_minus1.value;
    let x_grid: &[(&str, f64)] = &[("1/6", 1.0 / 6.0), ("1/4", 0.25), ("1/3", 1.0 / 3.0), ("1/2", 0.5), ("0.7", 0.7)];
    let with_grid = |mut r: Rec| {
        for &(l, x) in x_grid {
            r = r.at(&format!("x={l}"), &[x]);
        }
        r
    };
    let signed_grid = |mut r: Rec| {
        for (l, x) in [("-1/2", -0.5), ("-1/4", -0.25), ("1/4", 0.25), ("1/2", 0.5), ("0.9", 0.9)] {
            r = r.at(&format!("x={l}"), &[x]);
        }
        r
    };
    vec![
        rec("eq-3.2", "product for S_3(x) with factors e^{-x^2}")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .tol(PRODUCT)
            .eval(|p, ctx| values(products::log_sine3(p[0], ctx.budget(PRODUCT_FACTORS), -1.0), log_s3(p[0])?))
            .corrected(|p, ctx| values(products::log_sine3(p[0], ctx.budget(PRODUCT_FACTORS), 1.0), log_s3(p[0])?)),
        rec("eq-3.3", "partial fractions of pi cot(pi x)")
            .params(&[("x", UNIT_OPEN)])
            .at("x=0.3", &[0.3])
            .at("x=3/4", &[0.75])
            .eval(|p, _| {
                let x = p[0];
                let f = |nu: f64| 2.0 * x / (x * x - nu * nu);
                let s = sum_with_smooth_tail(|n| f(n as f64), f, 1, 2000, 1e-16)?;
                sides(val(PI / (PI * x).tan()), Side { value: 1.0 / x + s.value, terms: s.terms_used })
            }),
        with_grid(rec("eq-3.4", "log S_3(x) = int_0^x pi t^2 cot(pi t) dt against the zeta(2k) series").params(&[("x", UNIT_OPEN)]))
            .eval(|p, _| sides(val(log_s3(p[0])?), ser(log_sine3_series(p[0])?))),
        rec("eq-3.5", "product for S_2(x)")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .tol(PRODUCT)
            .eval(|p, ctx| values(products::log_sine2(p[0], ctx.budget(PRODUCT_FACTORS)), log_s2(p[0])?)),
        with_grid(rec("eq-3.7", "log S_2(x) = int_0^x pi t cot(pi t) dt against the odd zeta(2n) series").params(&[("x", UNIT_OPEN)]))
            .tol(GEOMETRIC)
            .eval(|p, _| values(log_s2(p[0])?, zeta_even_series(p[0], EvenZetaForm::OddPower)?.0)),
        rec("eq-3.8", "Euler product for S_1(x) = 2 sin(pi x)")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .tol(PRODUCT)
            .eval(|p, ctx| values(products::log_sine1(p[0], ctx.budget(PRODUCT_FACTORS)), (2.0 * (PI * p[0]).sin()).ln())),
        rec("eq-3.9", "Weierstrass product for G(1+x)")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .tol(PRODUCT)
            .eval(|p, ctx| values(products::log_barnes_g(p[0], ctx.budget(PRODUCT_FACTORS), true), log_barnes_g_gosper(p[0])?))
            .corrected(|p, ctx| {
                values(products::log_barnes_g(p[0], ctx.budget(PRODUCT_FACTORS), false), log_barnes_g_gosper(p[0])?)
            }),
        rec("eq-3.10", "log G(1+x) as a sum over the logarithms of the product factors")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .tol(PRODUCT)
            .eval(|p, ctx| values(products::log_barnes_g_sum(p[0], ctx.budget(PRODUCT_FACTORS)), log_barnes_g_gosper(p[0])?)),
        with_grid(rec("eq-3.11", "log S_2(x) = log G(1-x) - log G(1+x) + x log 2 pi").params(&[("x", UNIT_OPEN)])).eval(|p, _| {
            let x = p[0];
            values(log_s2(x)?, log_barnes_g(-x)? - log_barnes_g(x)? + x * TWO_PI.ln())
        }),
        with_grid(rec("eq-3.12", "Kinkelin: log(G(1+x)/G(1-x)) = x log 2 pi - int_0^x pi t cot(pi t) dt").params(&[("x", UNIT_OPEN)]))
            .tol(REFLECTION)
            .eval(|p, _| {
                let x = p[0];
                values(log_barnes_g_gosper(x)? - log_barnes_g_gosper(-x)?, x * TWO_PI.ln() - log_s2(x)?)
            }),
        rec("eq-3.14", "log S_r(x) as an integral, against Barnes G (r = 2) and the zeta(2k) series (r = 3)")
            .params(&[("r", Interval::closed(2.0, 3.0)), ("x", UNIT_OPEN)])
            .at("r=2 x=1/4", &[2.0, 0.25])
            .at("r=2 x=1/2", &[2.0, 0.5])
            .at("r=3 x=1/4", &[3.0, 0.25])
            .at("r=3 x=1/2", &[3.0, 0.5])
            .eval(|p, _| {
                let (r, x) = (int_arg(p[0]), p[1]);
                let l = log_multiple_sine(MultipleSineOrder::new(r, x)?)?;
                let rhs = if r == 2 {
                    log_barnes_g(-x)? - log_barnes_g(x)? + x * TWO_PI.ln()
                } else {
                    log_sine3_series(x)?.value
                };
                values(l, rhs)
            }),
        rec("eq-3.14-bromwich", "sum [n log((2n+1)/(2n-1)) - 1] = (1 - log 2)/2")
            .point()
            .eval(|_, _| {
                let (s, c) = bromwich_sum()?;
                sides(ser(s), val(c))
            }),
        signed_grid(rec("eq-3.17", "Maclaurin series of log G(1+x) against the zeta' form").params(&[("x", Interval::open(-1.0, 1.0))]))
            .eval(|p, _| values(log_barnes_g(p[0])?, log_barnes_g_gosper(p[0])?)),
        signed_grid(rec("eq-3.18", "log G(1+x) - x log Gamma(1+x) = zeta'(-1) - zeta'(-1, 1+x)").params(&[("x", Interval::open(-1.0, 1.0))]))
            .tol(REFLECTION)
            .eval(move |p, _| {
                let x = p[0];
                values(log_barnes_g(x)? - x * log_gamma(1.0 + x)?, zeta_prime_minus1 - zp(-1.0, 1.0 + x)?)
            }),
        signed_grid(rec("eq-3.19", "Maclaurin series of zeta'(-1) - zeta'(-1, 1+x)").params(&[("x", Interval::open(-1.0, 1.0))]))
            .eval(move |p, _| values(zeta_prime_shift_series(p[0])?, zeta_prime_minus1 - zp(-1.0, 1.0 + p[0])?)),
        rec("eq-3.21", "log S_3(x) = -sum zeta(2k) x^{2k+2}/(k+1) against the zeta' form")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .at("x=0.7", &[0.7])
            .eval(|p, _| sides(ser(log_sine3_series(p[0])?), val(triple_sine_hurwitz(p[0])?))),
        rec("eq-3.22", "sum_{k>=1} zeta(2k) x^{2k+2}/(k+1) = x^2/2 - int_0^x pi t^2 cot(pi t) dt")
            .params(&[("x", UNIT_OPEN)])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .at("x=0.9", &[0.9])
            .eval(|p, _| {
                let x = p[0];
                let s = log_sine3_series(x)?;
                sides(Side { value: 0.5 * x * x - s.value, terms: s.terms_used }, val(0.5 * x * x - log_s3(x)?))
            }),
        rec("eq-3.23", "Bernoulli series for t cot t")
            .params(&[("t", Interval::open(-2.2, 2.2))])
            .at("t=1/2", &[0.5])
            .at("t=1", &[1.0])
            .at("t=2", &[2.0])
            .eval(|p, _| {
                let t = p[0];
                let mut acc = 0.0;
                for n in (0..=40).rev() {
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    acc += sign * 4f64.powi(n) * bernoulli_over_factorial(2 * n as usize) * t.powi(2 * n);
                }
                values(t / t.tan(), acc)
            }),
        rec("eq-3.24", "zeta(2n) in Bernoulli numbers")
            .params(&[("n", Interval::closed(1.0, 40.0))])
            .at("n=1", &[1.0])
            .at("n=2", &[2.0])
            .at("n=5", &[5.0])
            .at("n=10", &[10.0])
            .at("n=20", &[20.0])
            .eval(|p, _| {
                let n = int_arg(p[0]) as i32;
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                let r = sign * 2f64.powi(2 * n - 1) * PI.powi(2 * n) * bernoulli_over_factorial(2 * n as usize);
                values(riemann_zeta(2.0 * n as f64)?, r)
            }),
        rec("eq-3.25", "pi t cot(pi t) = -2 sum zeta(2n) t^{2n}")
            .params(&[("t", Interval::open(-1.0, 1.0))])
            .at("t=0", &[0.0])
            .at("t=0.3", &[0.3])
            .at("t=1/2", &[0.5])
            .at("t=0.9", &[0.9])
            .tol(GEOMETRIC)
            .eval(|p, _| {
                let (s, c) = zeta_even_series(p[0], EvenZetaForm::Cot)?;
                values(s, c)
            }),
    ]
}

/// `sum_{k=0}^n C(n,k) x^k / (k+y)^s` in exact rationals, for integer `s >= 0`.
fn exact_binomial_sum(n: usize, x: f64, y: f64, s: u32) -> Option<f64> {
    let x = BigRational::from_float(x)?;
    let y = BigRational::from_float(y)?;
    let mut binom = BigInt::one();
    let mut power = BigRational::one();
    let mut acc = BigRational::zero();
    for k in 0..=n {
        let base = &y + BigRational::from_integer(BigInt::from(k));
        let denom = num_traits::pow(base, s as usize);
        acc += BigRational::from_integer(binom.clone()) * &power / denom;
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
        power *= &x;
    }
    acc.to_f64()
}

/// `sum_{n=1}^{N} trig(2 n pi t) / (2 pi n)^e` with `N` scaled by the budget.
fn hurwitz_fourier_sum(t: f64, e: f64, cosine: bool, ctx: &EvalContext) -> Side {
    let n = ctx.budget(100_000);
    let mut acc = CompensatedSum::new();
    for k in (1..=n).rev() {
        let kf = k as f64;
        let arg = TWO_PI * kf * t;
        let trig = if cosine { arg.cos() } else { arg.sin() };
        acc.add(trig / (TWO_PI * kf).powf(e));
    }
    Side { value: acc.value(), terms: n }
}

fn section_supplement() -> Vec<Rec> {
    vec![
        rec("eq-1.3", "Gamma integral for (k+y)^{-s}")
            .params(&[("k", Interval::closed_open(0.0, f64::INFINITY)), ("y", POSITIVE), ("s", Interval::closed_open(1.0, f64::INFINITY))])
            .at("k=0 y=1 s=2", &[0.0, 1.0, 2.0])
            .at("k=3 y=1/2 s=3/2", &[3.0, 0.5, 1.5])
            .at("k=2 y=2 s=3", &[2.0, 2.0, 3.0])
            .eval(|p, _| {
                let (k, y, s) = (p[0], p[1], p[2]);
                // u = -log w maps (0, inf) onto (0, 1)
                let q = quad(|w: f64| if w == 0.0 { 0.0 } else { (-w.ln()).powf(s - 1.0) * w.powf(k + y - 1.0) }, 0.0, 1.0)?;
                sides(Side { value: q.value / gamma(s)?, terms: q.terms }, val((k + y).powf(-s)))
            }),
        rec("eq-1.4", "finite binomial sum S_n(x, y) in double-double against exact rationals")
            .params(&[("n", Interval::closed(0.0, 120.0)), ("x", Interval::closed(-1.0, 1.0)), ("y", POSITIVE), ("s", Interval::closed(0.0, 6.0))])
            .at("n=10 x=1/2 y=1 s=2", &[10.0, 0.5, 1.0, 2.0])
            .at("n=30 x=-1 y=1/2 s=3", &[30.0, -1.0, 0.5, 3.0])
            .at("n=60 x=-1 y=1 s=1", &[60.0, -1.0, 1.0, 1.0])
            .eval(|p, _| {
                let (n, x, y, s) = (p[0] as usize, p[1], p[2], p[3]);
                let exact = exact_binomial_sum(n, x, y, s as u32).unwrap_or(f64::NAN);
                values(finite_binomial_sum(n, x, y, s, Precision::DoubleDouble, 1e-12)?, exact)
            }),
        rec("eq-2.5", "int_a^b x cot x dx = 2 sum int_a^b x sin 2nx dx")
            .params(&[("a", Interval::open(0.0, PI)), ("b", Interval::open(0.0, PI))])
            .at("a=pi/6 b=pi/2", &[FRAC_PI_6, FRAC_PI_2])
            .at("a=0.3 b=2.5", &[0.3, 2.5])
            .eval(|p, _| {
                let (a, b) = (p[0], p[1]);
                // 2 int_a^b x sin 2nx dx summed over n, evaluated at each end
                let f = |x: f64| -> MathResult<f64> { Ok(x * (2.0 * x.sin()).ln() + 0.5 * cl(2, 2.0 * x)?) };
                sides(quad(|x: f64| x / x.tan(), a, b)?, val(f(b)? - f(a)?))
            }),
        rec("eq-2.8", "central-binomial series in sin t against cos 2nt and sin 2nt series")
            .params(&[("t", HALF_PI)])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=1/4", &[0.25])
            .at("t=1", &[1.0])
            .tol(REFLECTION)
            .eval(|p, _| {
                let t = p[0];
                let cos_n = if t == 0.0 { 0.0 } else { -(2.0 * t.sin()).ln() };
                let r = 0.5 * cl(3, 2.0 * t)? - t * t * cos_n + t * cl(2, 2.0 * t)? - 0.5 * ZETA3;
                sides(ser(zucker_sum(t)?.scale(0.25)), val(r))
            }),
        rec("eq-2.10.1", "Li_n(z) as an integral over log^{n-1} u / (1 - z u)")
            .params(&[("n", Interval::closed(2.0, 8.0)), ("z", Interval::closed_open(-1.0, 1.0))])
            .at("n=2 z=1/2", &[2.0, 0.5])
            .at("n=3 z=-1", &[3.0, -1.0])
            .at("n=4 z=0.9", &[4.0, 0.9])
            .eval(|p, _| {
                let (n, z) = (int_arg(p[0]), p[1]);
                let k = n as i32 - 1;
                let q = quad_tagged(|u: f64| z * u.ln().powi(k) / (1.0 - z * u), 0.0, 1.0, EndpointTag::Log, EndpointTag::None)?;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sides(val(polylog(n as f64, z)?), Side { value: sign * q.value / gamma(n as f64)?, terms: q.terms })
            }),
        rec("eq-2.11.1", "int_0^t x^3 cot x dx in the central-binomial series and its integral")
            .params(&[("t", Interval::closed(0.0, 1.0))])
            .at("t=pi/6", &[FRAC_PI_6])
            .at("t=pi/4", &[FRAC_PI_4])
            .at("t=1", &[1.0])
            .eval(|p, _| {
                let t = p[0];
                let l = quad(|x: f64| if x == 0.0 { 0.0 } else { x.powi(3) / x.tan() }, 0.0, t)?;
                let integral = wiener_double_sum(t)? + t * ZETA3;
                sides(l, val(0.25 * t * zucker_sum(t)?.value - 0.25 * integral))
            }),
        rec("eq-2.11.2", "int_0^{pi/2} sin^{2n} x dx = C(2n,n) pi / 2^{2n+1}")
            .params(&[("n", Interval::closed(0.0, 500.0))])
            .at("n=0", &[0.0])
            .at("n=3", &[3.0])
            .at("n=12", &[12.0])
            .eval(|p, _| {
                let n = p[0] as usize;
                let l = quad(|x: f64| x.sin().powi(2 * n as i32), 0.0, FRAC_PI_2)?;
                let r = if n == 0 { FRAC_PI_2 } else { FRAC_PI_2 / CbcTerm::at(n).ratio() };
                sides(l, val(r))
            }),
        rec("eq-2.21.1", "Clausen functions against their defining Fourier series")
            .params(&[("n", Interval::closed(2.0, 6.0)), ("t", Interval::open(0.0, TWO_PI))])
            .at("n=2 t=1", &[2.0, 1.0])
            .at("n=3 t=pi/5", &[3.0, PI / 5.0])
            .at("n=4 t=2.5", &[4.0, 2.5])
            .at("n=5 t=4", &[5.0, 4.0])
            .tol(REFLECTION)
            .eval(|p, ctx| {
                let (n, t) = (int_arg(p[0]), p[1]);
                let terms = ctx.budget(100_000);
                let mut acc = CompensatedSum::new();
                for k in (1..=terms).rev() {
                    let kf = k as f64;
                    let trig = if n % 2 == 0 { (kf * t).sin() } else { (kf * t).cos() };
                    acc.add(trig / kf.powi(n as i32));
                }
                sides(Side { value: acc.value(), terms }, val(cl(n, t)?))
            }),
        rec("eq-2.22.1", "Cl_{2n+1}(pi/2) = (1 - 2^{2n}) zeta(2n+1) / 2^{4n+1}")
            .params(&[("n", Interval::closed(1.0, 12.0))])
            .at("n=1", &[1.0])
            .at("n=2", &[2.0])
            .at("n=5", &[5.0])
            .eval(|p, _| {
                let n = int_arg(p[0]) as i32;
                let r = (1.0 - 2f64.powi(2 * n)) / 2f64.powi(4 * n + 1) * riemann_zeta((2 * n + 1) as f64)?;
                values(cl(2 * n as u32 + 1, FRAC_PI_2)?, r)
            }),
        rec("eq-2.28", "Hurwitz's Fourier expansion of zeta(s, t), s < 0")
            .params(&[("s", Interval::open(f64::NEG_INFINITY, -1.0)), ("t", Interval::open_closed(0.0, 1.0))])
            .at("s=-3/2 t=1/3", &[-1.5, 1.0 / 3.0])
            .at("s=-5/2 t=0.7", &[-2.5, 0.7])
            .at("s=-2 t=1/4", &[-2.0, 0.25])
            .eval(|p, ctx| {
                let (s, t) = (p[0], p[1]);
                let c = hurwitz_fourier_sum(t, 1.0 - s, true, ctx);
                let sn = hurwitz_fourier_sum(t, 1.0 - s, false, ctx);
                let g = 2.0 * gamma(1.0 - s)?;
                let r = g * ((0.5 * PI * s).sin() * c.value + (0.5 * PI * s).cos() * sn.value);
                sides(val(hurwitz_zeta(s, t)?), Side { value: r, terms: c.terms })
            }),
        rec("eq-2.29", "Hurwitz's Fourier expansion of zeta(1-s, t), s > 2")
            .params(&[("s", Interval::open(2.0, f64::INFINITY)), ("t", Interval::open_closed(0.0, 1.0))])
            .at("s=5/2 t=1/3", &[2.5, 1.0 / 3.0])
            .at("s=3 t=0.7", &[3.0, 0.7])
            .at("s=7/2 t=1/4", &[3.5, 0.25])
            .eval(|p, ctx| {
                let (s, t) = (p[0], p[1]);
                let c = hurwitz_fourier_sum(t, s, true, ctx);
                let sn = hurwitz_fourier_sum(t, s, false, ctx);
                let r = 2.0 * gamma(s)? * ((0.5 * PI * s).cos() * c.value + (0.5 * PI * s).sin() * sn.value);
                sides(val(hurwitz_zeta(1.0 - s, t)?), Side { value: r, terms: c.terms })
            }),
        rec("eq-2.62", "int_a^b x / sin x dx = 2 sum int_a^b x sin((2n+1)x) dx")
            .params(&[("a", Interval::open(0.0, PI)), ("b", Interval::open(0.0, PI))])
            .at("a=pi/6 b=pi/2", &[FRAC_PI_6, FRAC_PI_2])
            .at("a=0.3 b=2.5", &[0.3, 2.5])
            .eval(|p, _| {
                let (a, b) = (p[0], p[1]);
                let f = |x: f64| -> MathResult<f64> { Ok(-2.0 * x * odd_cosine_sum(x) + 2.0 * odd_sine_sum(x)?) };
                sides(quad(|x: f64| x / x.sin(), a, b)?, val(f(b)? - f(a)?))
            }),
        rec("eq-3.15", "Maclaurin series of log Gamma(1+x)")
            .params(&[("x", Interval::open(-1.0, 1.0))])
            .at("x=-1/2", &[-0.5])
            .at("x=1/4", &[0.25])
            .at("x=1/2", &[0.5])
            .at("x=0.9", &[0.9])
            .eval(|p, _| {
                let x = p[0];
                // zeta(k) - 1 decays like 2^{-k}; the unit part sums to x - log(1+x)
                let mut acc = CompensatedSum::new();
                let mut terms = 0;
                for k in 2..400 {
                    let t = (riemann_zeta(k as f64)? - 1.0) * (-x).powi(k) / k as f64;
                    acc.add(t);
                    terms = k as usize;
                    if t.abs() < 1e-18 {
                        break;
                    }
                }
                let series = -EULER_GAMMA * x + acc.value() + x - (1.0 + x).ln();
                sides(val(log_gamma(1.0 + x)?), Side { value: series, terms })
            }),
    ]
}

/// Every registered identity, sorted by id.
///
/// Panics if the registry fails its own audit (duplicate ids, samples
/// outside the declared ranges), which would be a bug in this table.
pub fn build_registry() -> Vec<IdentityRecord> {
    let mut records: Vec<IdentityRecord> = section_one()
        .into_iter()
        .chain(section_two_binomial())
        .chain(section_two_clausen())
        .chain(section_two_odd())
        .chain(section_two_fettis())
        .chain(section_two_zeta_prime())
        .chain(section_three())
        .chain(section_supplement())
        .map(Rec::build)
        .collect();
    records.sort_by(|a, b| compare_ids(&a.id, &b.id));
    let issues = audit_registry(&records);
    assert!(issues.is_empty(), "registry audit failed: {issues:?}");
    records
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let r = build_registry();
        assert!(r.len() >= 60, "{}", r.len());
        let tol = r.iter().find(|x| x.id == "eq-2.23").unwrap().tolerance;
        assert_eq!(tol, 1e-7);
        for id in ["eq-1.23", "eq-2.26", "eq-2.64", "eq-2.70", "eq-2.73", "eq-2.79"] {
            let rec = r.iter().find(|x| x.id == id).unwrap();
            assert_eq!(rec.expected, Expected::MisprintSuspect, "{id}");
        }
    }
}
