//! Name-based dispatch to single module operations, for the `eval` verb.

use thiserror::Error;

use crate::binom_series::{arcsin_sq_series, catalan_series, cbc_power_sum, zucker_sum};
use crate::error::MathError;
use crate::hasse::hasse_zeta;
use crate::specfun::{
    alt_hurwitz_zeta, alt_zeta, bernoulli_poly, clausen, digamma, gamma, hurwitz_zeta, hurwitz_zeta_sderiv,
    lerch_phi, log_gamma, polygamma, polylog, riemann_zeta, riemann_zeta_sderiv, LerchTriple,
};
use crate::zeta_deriv::{log_barnes_g_gosper, log_multiple_sine, MultipleSineOrder};

#[derive(Debug, Error)]
pub enum AdhocError {
    #[error("unknown function '{0}' (see `eval --list`)")]
    UnknownFunction(String),
    #[error("{name} takes {expected} argument(s), got {got}")]
    Arity { name: &'static str, expected: usize, got: usize },
    #[error("{name}: argument {value} must be a non-negative integer")]
    NotAnInteger { name: &'static str, value: f64 },
    #[error(transparent)]
    Math(#[from] MathError),
}

type Op = fn(&[f64]) -> Result<f64, AdhocError>;

#[derive(Debug, Clone, Copy)]
pub struct AdhocFunction {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub summary: &'static str,
    op: Op,
}

fn whole(name: &'static str, v: f64) -> Result<u32, AdhocError> {
    if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
        Ok(v as u32)
    } else {
        Err(AdhocError::NotAnInteger { name, value: v })
    }
}

const TABLE: &[AdhocFunction] = &[
    AdhocFunction {
        name: "alt_hurwitz_zeta",
        args: &["s", "y"],
        summary: "sum (-1)^k / (k+y)^s",
        op: |a| Ok(alt_hurwitz_zeta(a[0], a[1])?),
    },
    AdhocFunction { name: "alt_zeta", args: &["s"], summary: "alternating zeta", op: |a| Ok(alt_zeta(a[0])?) },
    AdhocFunction {
        name: "arcsin_sq_series",
        args: &["y"],
        summary: "central-binomial series for asin(y)^2",
        op: |a| Ok(arcsin_sq_series(a[0])?.value),
    },
    AdhocFunction {
        name: "bernoulli_poly",
        args: &["n", "t"],
        summary: "Bernoulli polynomial B_n(t)",
        op: |a| Ok(bernoulli_poly(whole("bernoulli_poly", a[0])? as usize, a[1])),
    },
    AdhocFunction {
        name: "catalan_series",
        args: &[],
        summary: "central-binomial series for Catalan's constant",
        op: |_| Ok(catalan_series()?.value),
    },
    AdhocFunction {
        name: "cbc_power_sum",
        args: &["p", "k"],
        summary: "sum p^n / (n^k C(2n,n))",
        op: |a| Ok(cbc_power_sum(a[0], whole("cbc_power_sum", a[1])?)?.value),
    },
    AdhocFunction {
        name: "clausen",
        args: &["n", "theta"],
        summary: "Clausen function Cl_n(theta)",
        op: |a| Ok(clausen(whole("clausen", a[0])?, a[1])?),
    },
    AdhocFunction { name: "digamma", args: &["x"], summary: "psi(x)", op: |a| Ok(digamma(a[0])?) },
    AdhocFunction { name: "gamma", args: &["x"], summary: "Gamma(x)", op: |a| Ok(gamma(a[0])?) },
    AdhocFunction {
        name: "hasse_zeta",
        args: &["s"],
        summary: "zeta(s) from the Hasse double series",
        op: |a| Ok(hasse_zeta(a[0])?.value),
    },
    AdhocFunction {
        name: "hurwitz_zeta",
        args: &["s", "a"],
        summary: "Hurwitz zeta(s, a)",
        op: |a| Ok(hurwitz_zeta(a[0], a[1])?),
    },
    AdhocFunction {
        name: "hurwitz_zeta_sderiv",
        args: &["s", "a"],
        summary: "d/ds zeta(s, a)",
        op: |a| Ok(hurwitz_zeta_sderiv(a[0], a[1])?),
    },
    AdhocFunction {
        name: "lerch_phi",
        args: &["x", "s", "y"],
        summary: "Lerch transcendent Phi(x, s, y)",
        op: |a| Ok(lerch_phi(LerchTriple::new(a[0], a[1], a[2])?)?),
    },
    AdhocFunction {
        name: "log_barnes_g",
        args: &["x"],
        summary: "log G(1 + x)",
        op: |a| Ok(log_barnes_g_gosper(a[0])?),
    },
    AdhocFunction { name: "log_gamma", args: &["x"], summary: "log Gamma(x)", op: |a| Ok(log_gamma(a[0])?) },
    AdhocFunction {
        name: "log_multiple_sine",
        args: &["r", "x"],
        summary: "log S_r(x) for r in 1..=3",
        op: |a| Ok(log_multiple_sine(MultipleSineOrder::new(whole("log_multiple_sine", a[0])?, a[1])?)?),
    },
    AdhocFunction {
        name: "polygamma",
        args: &["k", "x"],
        summary: "psi^(k)(x)",
        op: |a| Ok(polygamma(whole("polygamma", a[0])?, a[1])?),
    },
    AdhocFunction { name: "polylog", args: &["s", "x"], summary: "Li_s(x)", op: |a| Ok(polylog(a[0], a[1])?) },
    AdhocFunction {
        name: "riemann_zeta",
        args: &["s"],
        summary: "Riemann zeta(s)",
        op: |a| Ok(riemann_zeta(a[0])?),
    },
    AdhocFunction {
        name: "riemann_zeta_sderiv",
        args: &["s"],
        summary: "zeta'(s)",
        op: |a| Ok(riemann_zeta_sderiv(a[0])?),
    },
    AdhocFunction {
        name: "zucker_sum",
        args: &["u"],
        summary: "sum 4^n sin^{2n} u / (n^3 C(2n,n))",
        op: |a| Ok(zucker_sum(a[0])?.value),
    },
];

/// The exported operation table, sorted by name.
pub fn adhoc_functions() -> &'static [AdhocFunction] {
    TABLE
}

/// Calls the named operation with `args`.
pub fn eval_adhoc(function_name: &str, args: &[f64]) -> Result<f64, AdhocError> {
    let f = TABLE
        .iter()
        .find(|f| f.name == function_name)
        .ok_or_else(|| AdhocError::UnknownFunction(function_name.to_string()))?;
    if args.len() != f.args.len() {
        return Err(AdhocError::Arity { name: f.name, expected: f.args.len(), got: args.len() });
    }
    (f.op)(args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::CATALAN;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn table_is_sorted_and_unique() {
        for w in TABLE.windows(2) {
            assert!(w[0].name < w[1].name, "{} before {}", w[0].name, w[1].name);
        }
    }

    #[test]
    fn examples() {
        assert!((eval_adhoc("clausen", &[2.0, FRAC_PI_2]).unwrap() - CATALAN).abs() < 1e-15);
        assert_eq!(eval_adhoc("polylog", &[2.0, 0.0]).unwrap(), 0.0);
        assert!((eval_adhoc("hurwitz_zeta", &[2.0, 1.0]).unwrap() - PI * PI / 6.0).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        assert!(matches!(eval_adhoc("nope", &[]), Err(AdhocError::UnknownFunction(_))));
        assert!(matches!(eval_adhoc("clausen", &[2.0]), Err(AdhocError::Arity { expected: 2, got: 1, .. })));
        assert!(matches!(eval_adhoc("clausen", &[2.5, 1.0]), Err(AdhocError::NotAnInteger { .. })));
        assert!(matches!(eval_adhoc("riemann_zeta", &[1.0]), Err(AdhocError::Math(_))));
    }
}
