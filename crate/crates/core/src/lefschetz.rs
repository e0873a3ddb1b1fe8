//! Lefschetz numbers of iterates, `L(f^m) = Π_i (1 + (-1)^{n_i} a_i^m)`, and
//! their Möbius-inverted companions `ell(f^m) = Σ_{r|m} μ(r) L(f^{m/r})`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::homology::MapDescriptor;
use crate::numtheory::{divisors, mobius};

/// Default bound on windowed evaluation; `|L(f^m)|` grows like
/// `|a_1 ... a_l|^m`, so a runaway horizon means runaway memory.
pub const DEFAULT_HORIZON_CAP: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("horizon {requested} exceeds the cap {cap}")]
    HorizonTooLarge { requested: u64, cap: u64 },
}

/// `L(f^m)`, exactly.
pub fn lefschetz_number(desc: &MapDescriptor, m: u64) -> BigInt {
    assert!(m >= 1, "iterate exponent must be positive");
    let mut product = BigInt::one();
    for (&dim, &a) in desc.space().dims().iter().zip(desc.eigs()) {
        let power = BigInt::from(a).pow(m as u32);
        let factor = if dim % 2 == 0 {
            BigInt::one() + power
        } else {
            BigInt::one() - power
        };
        if factor.is_zero() {
            return BigInt::zero();
        }
        product *= factor;
    }
    product
}

/// `ell(f^m)`, from the defining Möbius sum over `L`.
pub fn periodic_lefschetz(desc: &MapDescriptor, m: u64) -> BigInt {
    assert!(m >= 1, "iterate exponent must be positive");
    let mut sum = BigInt::zero();
    for r in divisors(m) {
        match mobius(r) {
            0 => {}
            mu => sum += BigInt::from(mu) * lefschetz_number(desc, m / r),
        }
    }
    sum
}

/// The sequences `L(f^1)..L(f^M)` and `ell(f^1)..ell(f^M)` for one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzProfile {
    desc: MapDescriptor,
    horizon: u64,
    lefschetz: Vec<BigInt>,
    periodic: Vec<BigInt>,
}

impl LefschetzProfile {
    pub fn descriptor(&self) -> &MapDescriptor {
        &self.desc
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// `L(f^1)..L(f^M)`.
    pub fn lefschetz_numbers(&self) -> &[BigInt] {
        &self.lefschetz
    }

    /// `ell(f^1)..ell(f^M)`.
    pub fn periodic_numbers(&self) -> &[BigInt] {
        &self.periodic
    }

    /// `L(f^m)` for `1 <= m <= horizon`.
    pub fn lefschetz_at(&self, m: u64) -> &BigInt {
        &self.lefschetz[(m - 1) as usize]
    }

    /// `ell(f^m)` for `1 <= m <= horizon`.
    pub fn periodic_at(&self, m: u64) -> &BigInt {
        &self.periodic[(m - 1) as usize]
    }
}

/// Windowed evaluation of both sequences with the default horizon cap.
pub fn profile(desc: &MapDescriptor, horizon: u64) -> Result<LefschetzProfile, LefschetzError> {
    profile_with_cap(desc, horizon, DEFAULT_HORIZON_CAP)
}

pub fn profile_with_cap(
    desc: &MapDescriptor,
    horizon: u64,
    cap: u64,
) -> Result<LefschetzProfile, LefschetzError> {
    assert!(horizon >= 1, "horizon must be positive");
    if horizon > cap {
        return Err(LefschetzError::HorizonTooLarge {
            requested: horizon,
            cap,
        });
    }
    let lefschetz: Vec<BigInt> = (1..=horizon).map(|m| lefschetz_number(desc, m)).collect();
    let periodic: Vec<BigInt> = (1..=horizon)
        .map(|m| {
            let mut sum = BigInt::zero();
            for r in divisors(m) {
                match mobius(r) {
                    0 => {}
                    mu => sum += BigInt::from(mu) * &lefschetz[(m / r - 1) as usize],
                }
            }
            sum
        })
        .collect();
    // Inversion identity Σ_{r|m} ell(f^r) = L(f^m), checked on construction.
    for m in 1..=horizon {
        let total: BigInt = divisors(m)
            .into_iter()
            .map(|r| periodic[(r - 1) as usize].clone())
            .sum();
        assert_eq!(
            total,
            lefschetz[(m - 1) as usize],
            "inversion identity failed at m = {m}"
        );
    }
    assert_eq!(periodic[0], lefschetz[0]);
    Ok(LefschetzProfile {
        desc: desc.clone(),
        horizon,
        lefschetz,
        periodic,
    })
}
