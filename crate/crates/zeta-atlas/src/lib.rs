//! Numerical verification of zeta, Lerch, Clausen and central-binomial identities.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod binom_series;
pub mod cli;
pub mod error;
pub mod hasse;
pub mod numerics;
pub mod registry;
pub mod specfun;
pub mod zeta_deriv;

pub use error::{MathError, MathResult};
