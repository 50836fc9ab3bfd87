//! Real special functions: gamma family, zeta family, Lerch, polylog, Clausen,
//! Bernoulli polynomials and a block of named constants.

mod clausen;
mod gamma;
mod lerch;
mod zeta;

use std::f64::consts::{LN_2, PI};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use clausen::{clausen, clausen_power_series};
pub use gamma::{cos_pi, digamma, gamma, log_gamma, polygamma, sin_pi};
pub use lerch::{lerch_phi, lerch_phi_series, polylog, LerchTriple};
pub use zeta::{alt_hurwitz_zeta, alt_zeta, hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta, riemann_zeta_sderiv};

use crate::error::MathResult;
use crate::numerics::{bernoulli_f64, bernoulli_numbers};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const CATALAN: f64 = 0.915_965_594_177_219;
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// `B_n(t) = sum_k C(n, k) B_k t^{n-k}`, for `n <= 80`.
pub fn bernoulli_poly(n: usize, t: f64) -> f64 {
    // Horner in t over the coefficients C(n, k) B_{n-j}
    let mut binom = 1.0f64;
    let mut acc = 0.0f64;
    for k in 0..=n {
        // coefficient of t^{n-k}
        acc = acc * t + binom * bernoulli_f64(k);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

/// Exact `B_n(t)` for rational `t`.
pub fn bernoulli_poly_exact(n: usize, t: &BigRational) -> BigRational {
    let table = bernoulli_numbers(n.div_ceil(2).max(1)).expect("exact table never overflows for small n");
    let mut binom = BigInt::one();
    let mut acc = BigRational::zero();
    for k in 0..=n {
        acc = acc * t + BigRational::from_integer(binom.clone()) * table.exact(k).cloned().unwrap_or_else(BigRational::zero);
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Computed,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::Computed => "computed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constant {
    pub name: &'static str,
    pub value: f64,
    pub provenance: Provenance,
}

/// Named constants used throughout the identity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsBlock {
    pub pi: Constant,
    pub log2: Constant,
    pub euler_gamma: Constant,
    pub zeta3: Constant,
    pub catalan_g: Constant,
    pub zeta_prime_minus1: Constant,
    pub zeta_prime_minus2: Constant,
}

impl ConstantsBlock {
    fn compute() -> MathResult<Self> {
        let zeta3 = riemann_zeta(3.0)?;
        let c = |name, value, provenance| Constant { name, value, provenance };
        Ok(ConstantsBlock {
            pi: c("pi", PI, Provenance::ClosedForm),
            log2: c("log2", LN_2, Provenance::ClosedForm),
            euler_gamma: c("euler_gamma", -digamma(1.0)?, Provenance::Computed),
            zeta3: c("zeta3", zeta3, Provenance::Computed),
            catalan_g: c("catalan_G", clausen(2, PI / 2.0)?, Provenance::Computed),
            zeta_prime_minus1: c("zeta_prime_minus1", riemann_zeta_sderiv(-1.0)?, Provenance::Computed),
            zeta_prime_minus2: c("zeta_prime_minus2", -zeta3 / (4.0 * PI * PI), Provenance::ClosedForm),
        })
    }

    pub fn entries(&self) -> [Constant; 7] {
        [
            self.pi,
            self.log2,
            self.euler_gamma,
            self.zeta3,
            self.catalan_g,
            self.zeta_prime_minus1,
            self.zeta_prime_minus2,
        ]
    }
}

/// The process-wide constants, computed on first use.
pub fn constants() -> &'static ConstantsBlock {
    static BLOCK: OnceLock<ConstantsBlock> = OnceLock::new();
    BLOCK.get_or_init(|| ConstantsBlock::compute().expect("constants evaluate on fixed, valid arguments"))
}
