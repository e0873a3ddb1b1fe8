//! Elementary multiplicative number theory: the Möbius function, divisor
//! enumeration, and the divisor-indexed polynomial `Q_m(a) = Σ_{r|m} μ(r) a^{m/r}`
//! together with an exact exponential-growth check for it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthConfigError {
    #[error("growth base must satisfy |a| >= 2, got {0}")]
    BaseNotExpanding(i64),
    #[error("growth constant must lie in (0, 1], got {0}")]
    ConstantOutOfRange(BigRational),
    #[error("growth threshold {threshold} must be strictly below the horizon {horizon}")]
    EmptyWindow { threshold: u64, horizon: u64 },
}

/// Window parameters for the lower bound `|Q_m(a)| >= C * |a|^m`, checked for
/// every `m` with `threshold < m <= horizon`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthCheckConfig {
    base: i64,
    constant: BigRational,
    threshold: u64,
    horizon: u64,
}

impl GrowthCheckConfig {
    pub fn new(
        base: i64,
        constant: BigRational,
        threshold: u64,
        horizon: u64,
    ) -> Result<Self, GrowthConfigError> {
        if base.unsigned_abs() < 2 {
            return Err(GrowthConfigError::BaseNotExpanding(base));
        }
        if constant <= BigRational::zero() || constant > BigRational::from_integer(1.into()) {
            return Err(GrowthConfigError::ConstantOutOfRange(constant));
        }
        if threshold >= horizon {
            return Err(GrowthConfigError::EmptyWindow { threshold, horizon });
        }
        Ok(Self {
            base,
            constant,
            threshold,
            horizon,
        })
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }
}

/// Classical Möbius function: `1` for `m = 1`, `0` when a square divides `m`,
/// `(-1)^r` when `m` is a product of `r` distinct primes.
///
/// Panics for `m = 0`, where the function is undefined.
pub fn mobius(m: u64) -> i64 {
    assert!(m >= 1, "mobius(0) is undefined");
    let mut n = m;
    let mut distinct_primes = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            distinct_primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        distinct_primes += 1;
    }
    if distinct_primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All positive divisors of `m` in ascending order.
///
/// Panics for `m = 0`.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1, "divisors(0) is undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `Σ_{r|m} μ(r)`; equals 1 exactly when `m = 1` and 0 otherwise.
pub fn mobius_divisor_sum(m: u64) -> i64 {
    divisors(m).into_iter().map(mobius).sum()
}

/// `Q_m(a) = Σ_{r|m} μ(r) a^{m/r}`, in arbitrary precision.
pub fn q_poly(a: i64, m: u64) -> BigInt {
    assert!(m >= 1, "q_poly is undefined for m = 0");
    let base = BigInt::from(a);
    let mut sum = BigInt::zero();
    for r in divisors(m) {
        match mobius(r) {
            0 => {}
            mu => sum += BigInt::from(mu) * base.pow((m / r) as u32),
        }
    }
    sum
}

/// Checks `|Q_m(a)| >= C * |a|^m` for every `m` in the configured window.
pub fn verify_q_growth(cfg: &GrowthCheckConfig) -> bool {
    let abs_base = BigInt::from(cfg.base().unsigned_abs());
    for m in (cfg.threshold() + 1)..=cfg.horizon() {
        let value = BigRational::from_integer(q_poly(cfg.base(), m).abs());
        let bound = cfg.constant() * BigRational::from_integer(abs_base.pow(m as u32));
        if value < bound {
            return false;
        }
    }
    true
}
