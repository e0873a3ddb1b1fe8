//! The zeta function of a map as an exact factored rational function
//! `Π_c (1 - c t)^{e_c}`, its exact power-series expansions, and the
//! `(1-t)^alpha (1+t)^beta` exponent bookkeeping for unit eigenvalues.
//!
//! Every homology eigenvalue in this setting is an integer, so linear
//! integer factors are a complete representation and cancellation is exact
//! multiset arithmetic; no polynomial gcd is ever required.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::homology::MapDescriptor;
use crate::lefschetz::lefschetz_number;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("argument rescale factor must be nonzero")]
    RescaleByZero,
    #[error("eigenvalue a_{index} = {value} has |a| != 1; all eigenvalues must be roots of unity")]
    NotQuasiUnipotent { index: usize, value: i64 },
}

/// Product `Π_c (1 - c t)^{e_c}` over nonzero integer bases `c` with nonzero
/// integer exponents. The empty product is the constant 1. Bases equal to 0
/// denote the factor 1 and are dropped on insertion, as are factors whose
/// exponents cancel to 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredRationalFunction {
    factors: BTreeMap<BigInt, i64>,
}

impl FactoredRationalFunction {
    /// The constant function 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, i64)>,
    {
        let mut out = Self::default();
        for (base, exponent) in factors {
            out.push_factor(base, exponent);
        }
        out
    }

    /// Multiplies by `(1 - base t)^exponent`, re-canonicalizing.
    pub fn push_factor(&mut self, base: BigInt, exponent: i64) {
        if base.is_zero() || exponent == 0 {
            return;
        }
        match self.factors.entry(base) {
            Entry::Vacant(slot) => {
                slot.insert(exponent);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += exponent;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(base, exponent)` pairs with bases ascending.
    pub fn factors(&self) -> impl Iterator<Item = (&BigInt, i64)> {
        self.factors.iter().map(|(base, &exponent)| (base, exponent))
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent_of(&self, base: &BigInt) -> i64 {
        self.factors.get(base).copied().unwrap_or(0)
    }

    /// Exponent-wise sum of two factored functions.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (base, exponent) in other.factors() {
            out.push_factor(base.clone(), exponent);
        }
        out
    }

    /// Raises the whole product to an integer power.
    pub fn pow(&self, exponent: i64) -> Self {
        if exponent == 0 {
            return Self::one();
        }
        Self {
            factors: self
                .factors
                .iter()
                .map(|(base, &e)| (base.clone(), e * exponent))
                .collect(),
        }
    }

    /// Substitutes `t -> s t`, replacing each base `c` by `c s`.
    pub fn rescale_argument(&self, scale: &BigInt) -> Result<Self, ZetaError> {
        if scale.is_zero() {
            return Err(ZetaError::RescaleByZero);
        }
        Ok(Self {
            factors: self
                .factors
                .iter()
                .map(|(base, &e)| (base * scale, e))
                .collect(),
        })
    }

    /// True when every base is `+1` or `-1`.
    pub fn has_unit_bases_only(&self) -> bool {
        self.factors.keys().all(|base| base.abs().is_one())
    }

    /// Exact power-series expansion about `t = 0` up to the given order; the
    /// constant term is always 1.
    pub fn series_expand(&self, order: usize) -> RationalSeries {
        let mut series = RationalSeries::one(order);
        for (base, exponent) in self.factors() {
            for _ in 0..exponent.unsigned_abs() {
                if exponent > 0 {
                    series.mul_linear(base);
                } else {
                    series.div_linear(base);
                }
            }
        }
        series
    }
}

fn factor_text(base: &BigInt, exponent: i64) -> String {
    let magnitude = base.abs();
    let linear = if base.is_negative() {
        if magnitude.is_one() {
            "(1+t)".to_string()
        } else {
            format!("(1+{magnitude}t)")
        }
    } else if magnitude.is_one() {
        "(1-t)".to_string()
    } else {
        format!("(1-{magnitude}t)")
    };
    if exponent == 1 {
        linear
    } else {
        format!("{linear}^{exponent}")
    }
}

/// Canonical rendering: numerator factors (positive exponents) by base
/// ascending, then denominator factors (negative exponents) by base
/// ascending; `^e` omitted when `e = 1`; the empty product prints as `1`.
impl fmt::Display for FactoredRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut parts = Vec::with_capacity(self.factors.len());
        for (base, exponent) in self.factors() {
            if exponent > 0 {
                parts.push(factor_text(base, exponent));
            }
        }
        for (base, exponent) in self.factors() {
            if exponent < 0 {
                parts.push(factor_text(base, exponent));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// Truncated power series `c_0 + c_1 t + ... + c_M t^M` with exact rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Builds a series from `c_0..c_M`; the order `M` must be at least 1.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(coeffs.len() >= 2, "series order must be at least 1");
        Self { coeffs }
    }

    /// The constant series 1 truncated at the given order.
    pub fn one(order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = BigRational::one();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// In-place multiplication by the polynomial `(1 - c t)`.
    fn mul_linear(&mut self, c: &BigInt) {
        let c = BigRational::from_integer(c.clone());
        for n in (1..self.coeffs.len()).rev() {
            let shifted = &self.coeffs[n - 1] * &c;
            self.coeffs[n] -= shifted;
        }
    }

    /// In-place division by `(1 - c t)`, i.e. multiplication by the
    /// geometric series `Σ c^j t^j`.
    fn div_linear(&mut self, c: &BigInt) {
        let c = BigRational::from_integer(c.clone());
        for n in 1..self.coeffs.len() {
            let carried = &self.coeffs[n - 1] * &c;
            self.coeffs[n] += carried;
        }
    }
}

/// Closed factored form of the zeta function: `(1-t)^{-1}` times one factor
/// `(1 - (Π_{i in S} a_i) t)^{±1}` per nonempty subset `S` of the sphere
/// factors, the sign of the exponent being `(-1)^{(Σ_{i in S} n_i) - 1}`.
pub fn zeta_closed(desc: &MapDescriptor) -> FactoredRationalFunction {
    let mut zeta = FactoredRationalFunction::one();
    zeta.push_factor(BigInt::one(), -1);
    for (degree, product) in desc.subset_terms() {
        if degree == 0 {
            continue; // empty subset: accounted for by the leading (1-t)^{-1}
        }
        let exponent = if degree % 2 == 1 { 1 } else { -1 };
        zeta.push_factor(product, exponent);
    }
    zeta
}

/// The same function assembled degree by degree from the homology spectra,
/// `Π_k Π_{λ in spec(k)} (1 - λ t)^{(-1)^{k+1}}`.
pub fn zeta_homological(desc: &MapDescriptor) -> FactoredRationalFunction {
    let n = desc.space().total_dimension();
    let mut zeta = FactoredRationalFunction::one();
    for k in 0..=n {
        let exponent = if k % 2 == 0 { -1 } else { 1 };
        for eigenvalue in desc
            .homology_spectrum(k)
            .expect("degree ranges over 0..=N")
        {
            zeta.push_factor(eigenvalue, exponent);
        }
    }
    zeta
}

/// Exact expansion of `exp(Σ_{m>=1} L(f^m) t^m / m)` truncated at the given
/// order, computed through the logarithmic-derivative recurrence
/// `n c_n = Σ_{k=1}^{n} L(f^k) c_{n-k}`.
pub fn series_from_lefschetz(desc: &MapDescriptor, order: usize) -> RationalSeries {
    assert!(order >= 1, "series order must be at least 1");
    let lefschetz: Vec<BigRational> = (1..=order)
        .map(|m| BigRational::from_integer(lefschetz_number(desc, m as u64)))
        .collect();
    let mut coeffs = vec![BigRational::zero(); order + 1];
    coeffs[0] = BigRational::one();
    for n in 1..=order {
        let mut sum = BigRational::zero();
        for k in 1..=n {
            sum += &lefschetz[k - 1] * &coeffs[n - k];
        }
        coeffs[n] = sum / BigRational::from_integer(BigInt::from(n));
    }
    RationalSeries { coeffs }
}

/// Exponent data of the `(1-t)^alpha (1+t)^beta` form taken by the zeta
/// function when every eigenvalue is `+1` or `-1`. `e_counts[k-1]` counts the
/// nonempty subsets of total dimension `k` with eigenvalue product `+1`,
/// `o_counts[k-1]` those with product `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiUnipotentExponents {
    pub alpha: i64,
    pub beta: i64,
    pub e_counts: Vec<u64>,
    pub o_counts: Vec<u64>,
}

impl QuasiUnipotentExponents {
    /// `Σ_k (-1)^{k+1} e(k)`; `alpha` is this sum minus 1.
    pub fn alternating_e_sum(&self) -> i64 {
        alternating_sum(&self.e_counts)
    }

    /// `Σ_k (-1)^{k+1} o(k)`; equals `beta`.
    pub fn alternating_o_sum(&self) -> i64 {
        alternating_sum(&self.o_counts)
    }

    /// `(1-t)^alpha (1+t)^beta` as a factored rational function.
    pub fn factored(&self) -> FactoredRationalFunction {
        let mut out = FactoredRationalFunction::one();
        out.push_factor(BigInt::one(), self.alpha);
        out.push_factor(BigInt::from(-1), self.beta);
        out
    }
}

fn alternating_sum(counts: &[u64]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(idx, &count)| {
            // idx + 1 is the homology degree k; sign is (-1)^{k+1}.
            let signed = count as i64;
            if idx % 2 == 0 {
                signed
            } else {
                -signed
            }
        })
        .sum()
}

/// Computes `alpha` and `beta` with `beta` taken from the `o(k)` counts; the
/// e-based alternating sum is exposed separately so callers can report when
/// the two disagree.
pub fn quasi_unipotent_exponents(
    desc: &MapDescriptor,
) -> Result<QuasiUnipotentExponents, ZetaError> {
    if let Some((index, &value)) = desc
        .eigs()
        .iter()
        .enumerate()
        .find(|(_, a)| a.unsigned_abs() != 1)
    {
        return Err(ZetaError::NotQuasiUnipotent { index, value });
    }
    let n = desc.space().total_dimension();
    let mut e_counts = vec![0u64; n];
    let mut o_counts = vec![0u64; n];
    for (degree, product) in desc.subset_terms() {
        if degree == 0 {
            continue;
        }
        if product.is_one() {
            e_counts[degree - 1] += 1;
        } else {
            o_counts[degree - 1] += 1;
        }
    }
    let result = QuasiUnipotentExponents {
        alpha: alternating_sum(&e_counts) - 1,
        beta: alternating_sum(&o_counts),
        e_counts,
        o_counts,
    };
    Ok(result)
}
