use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{NumResult, NumericsError};

/// Bernoulli numbers `B_0 ..= B_{2m}` (with `B_1 = -1/2`), exact and rounded.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    exact: Vec<BigRational>,
    values: Vec<f64>,
}

impl BernoulliTable {
    pub fn get(&self, n: usize) -> Option<f64> {
        self.values.get(n).copied()
    }

    pub fn exact(&self, n: usize) -> Option<&BigRational> {
        self.exact.get(n)
    }

    /// Highest index stored.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Exact rational recurrence `sum_{k<=n} C(n+1, k) B_k = 0`, rounded once per entry.
///
/// Fails with `Overflow` if some `B_{2k}`, `k <= m`, is outside the binary64 range.
pub fn bernoulli_numbers(m: usize) -> NumResult<BernoulliTable> {
    let top = 2 * m.max(1);
    let mut exact: Vec<BigRational> = Vec::with_capacity(top + 1);
    exact.push(BigRational::from_integer(BigInt::from(1)));
    for n in 1..=top {
        if n > 1 && n % 2 == 1 {
            exact.push(BigRational::zero());
            continue;
        }
        // binomial C(n+1, k) built incrementally
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (k, bk) in exact.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        let bn = -acc / BigRational::from_integer(BigInt::from(n + 1));
        exact.push(bn);
    }
    let mut values = Vec::with_capacity(exact.len());
    for (n, b) in exact.iter().enumerate() {
        let v = b.to_f64().unwrap_or(f64::NAN);
        if !v.is_finite() {
            return Err(NumericsError::Overflow(format!("B_{n} is outside the binary64 range")));
        }
        values.push(v);
    }
    exact.truncate(2 * m + 1);
    values.truncate(2 * m + 1);
    Ok(BernoulliTable { exact, values })
}

const CACHED_HALF_INDEX: usize = 40;

fn cached() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_numbers(CACHED_HALF_INDEX).expect("B_80 fits in binary64"))
}

/// `B_n` for `n <= 80` from a process-wide table.
pub fn bernoulli_f64(n: usize) -> f64 {
    cached().get(n).unwrap_or_else(|| panic!("Bernoulli index {n} beyond cached table"))
}

/// `B_n / n!` for `n <= 80`, rounded once from the exact quotient.
pub fn bernoulli_over_factorial(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut fact = BigInt::from(1);
        let mut out = Vec::with_capacity(2 * CACHED_HALF_INDEX + 1);
        for (k, b) in cached().exact.iter().enumerate() {
            if k > 0 {
                fact *= BigInt::from(k);
            }
            let q = b / BigRational::from_integer(fact.clone());
            out.push(q.to_f64().unwrap_or(0.0));
        }
        out
    });
    *table.get(n).unwrap_or_else(|| panic!("Bernoulli index {n} beyond cached table"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let t = bernoulli_numbers(6).unwrap();
        assert_eq!(t.get(0), Some(1.0));
        assert_eq!(t.get(1), Some(-0.5));
        assert_eq!(t.get(2), Some(1.0 / 6.0));
        assert_eq!(t.get(3), Some(0.0));
        assert_eq!(t.get(4), Some(-1.0 / 30.0));
        assert_eq!(t.get(12), Some(-691.0 / 2730.0));
        assert_eq!(t.exact(12).unwrap(), &BigRational::new(BigInt::from(-691), BigInt::from(2730)));
    }

    #[test]
    fn overflow_is_signalled() {
        assert!(bernoulli_numbers(100).is_ok());
        assert!(matches!(bernoulli_numbers(140), Err(NumericsError::Overflow(_))));
    }

    #[test]
    fn cached_agrees() {
        assert_eq!(bernoulli_f64(10), 5.0 / 66.0);
        assert_eq!(bernoulli_f64(80), bernoulli_numbers(40).unwrap().get(80).unwrap());
    }

    #[test]
    fn scaled_by_factorial() {
        assert_eq!(bernoulli_over_factorial(2), 1.0 / 12.0);
        assert!((bernoulli_over_factorial(4) + 1.0 / 720.0).abs() < 1e-20);
        // B_80 / 80! is tiny but representable
        assert!(bernoulli_over_factorial(80) != 0.0);
    }
}
