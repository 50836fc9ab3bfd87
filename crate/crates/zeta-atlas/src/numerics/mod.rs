//! Summation, acceleration and quadrature primitives shared by every other module.
//!
//! Everything here works in binary64 with compensated accumulation; the
//! [`DoubleDouble`] type is available where cancellation demands more.

mod bernoulli;
mod dd;
mod quad;
mod series;
mod tail;

pub use bernoulli::{bernoulli_f64, bernoulli_over_factorial, bernoulli_numbers, BernoulliTable};
pub use dd::DoubleDouble;
pub use quad::{integrate, tanh_sinh_integrate, EndpointTag, QuadratureProblem};
pub use series::{
    abel_mean, compensated_sum, euler_transform_sum, geometric_schedule, sum_series,
    CompensatedSum,
};
pub use tail::{euler_maclaurin_tail, sum_with_smooth_tail};

use thiserror::Error;

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    EulerAccel,
    AbelMean,
    Quadrature,
    EulerMaclaurin,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::EulerAccel => "euler_accel",
            Method::AbelMean => "abel_mean",
            Method::Quadrature => "quadrature",
            Method::EulerMaclaurin => "euler_maclaurin",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// Result of any summation or quadrature: the value plus an error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub value: f64,
    pub terms_used: usize,
    /// Estimated bound on the neglected remainder; finite and >= 0 when `converged`.
    pub tail_bound: f64,
    pub method: Method,
    pub converged: bool,
}

impl SeriesEval {
    pub fn exact(value: f64, method: Method) -> Self {
        SeriesEval { value, terms_used: 0, tail_bound: 0.0, method, converged: true }
    }

    /// Combine two independent evaluations additively.
    pub fn plus(self, other: SeriesEval) -> SeriesEval {
        SeriesEval {
            value: self.value + other.value,
            terms_used: self.terms_used + other.terms_used,
            tail_bound: self.tail_bound + other.tail_bound,
            method: self.method,
            converged: self.converged && other.converged,
        }
    }

    pub fn scale(self, factor: f64) -> SeriesEval {
        SeriesEval {
            value: self.value * factor,
            tail_bound: self.tail_bound * factor.abs(),
            ..self
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum NumericsError {
    #[error("no convergence after {} terms (partial value {:e}, tail estimate {:e})", .partial.terms_used, .partial.value, .partial.tail_bound)]
    ConvergenceFailure { partial: SeriesEval },
    #[error("integrand is not finite at x = {x:e}")]
    NonfiniteIntegrand { x: f64 },
    #[error("term {index} of the series is not finite")]
    NonfiniteTerm { index: usize },
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type NumResult<T> = Result<T, NumericsError>;
