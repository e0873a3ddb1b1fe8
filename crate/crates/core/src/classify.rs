//! Decision procedures on top of the exact invariants: the minimal set of
//! Lefschetz periods for quasi-unipotent maps, the periodic-data obstruction
//! for maps with finitely many hyperbolic periodic points, and the period-set
//! classification for transversal maps.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::homology::MapDescriptor;
use crate::lefschetz::periodic_lefschetz;
use crate::zeta::{zeta_closed, FactoredRationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("eigenvalue a_{index} = {value} has |a| != 1; quasi-unipotent input required")]
    NotQuasiUnipotent { index: usize, value: i64 },
    #[error("eigenvalue a_{index} is zero; the classification requires nonzero eigenvalues")]
    ZeroEigenvalue { index: usize },
    #[error("a base of modulus > 1 survives; not a product of factors (1 ± t^p)^(±1)")]
    NotExpressible,
}

/// Partition of the factor indices (0-based) by dimension parity and
/// eigenvalue class. The six sets are pairwise disjoint and cover `0..l`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignPattern {
    /// `n_i` odd, `a_i = -1`.
    pub odd_minus: Vec<usize>,
    /// `n_i` even, `a_i = 1`.
    pub even_plus: Vec<usize>,
    /// `n_i` even, `a_i = -1`.
    pub even_minus: Vec<usize>,
    /// `n_i` odd, `a_i = 1`.
    pub odd_plus: Vec<usize>,
    /// `|a_i| > 1`.
    pub expanding: Vec<usize>,
    /// `a_i = 0`.
    pub vanishing: Vec<usize>,
}

pub fn sign_pattern(desc: &MapDescriptor) -> SignPattern {
    let mut pattern = SignPattern::default();
    for (i, (&dim, &a)) in desc.space().dims().iter().zip(desc.eigs()).enumerate() {
        let set = match a {
            0 => &mut pattern.vanishing,
            1 if dim % 2 == 0 => &mut pattern.even_plus,
            1 => &mut pattern.odd_plus,
            -1 if dim % 2 == 0 => &mut pattern.even_minus,
            -1 => &mut pattern.odd_minus,
            _ => &mut pattern.expanding,
        };
        set.push(i);
    }
    pattern
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MPerLVerdict {
    EmptySet,
    SetOne,
}

/// Which half of the sign dichotomy applies: every `(-1)^{n_i} a_i = 1`, or
/// some `(-1)^{n_i} a_i = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MPerLBranch {
    AllSignsPositive,
    SomeSignNegative,
}

/// Minimal set of Lefschetz periods of a quasi-unipotent map: `{1}` exactly
/// when every signed eigenvalue `(-1)^{n_i} a_i` equals 1, empty otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MPerLResult {
    pub verdict: MPerLVerdict,
    pub branch: MPerLBranch,
}

pub fn mperl(desc: &MapDescriptor) -> Result<MPerLResult, ClassifyError> {
    if let Some((index, &value)) = desc
        .eigs()
        .iter()
        .enumerate()
        .find(|(_, a)| a.unsigned_abs() != 1)
    {
        return Err(ClassifyError::NotQuasiUnipotent { index, value });
    }
    let all_signs_positive = desc
        .space()
        .dims()
        .iter()
        .zip(desc.eigs())
        .all(|(&dim, &a)| if dim % 2 == 0 { a == 1 } else { a == -1 });
    Ok(if all_signs_positive {
        MPerLResult {
            verdict: MPerLVerdict::SetOne,
            branch: MPerLBranch::AllSignsPositive,
        }
    } else {
        MPerLResult {
            verdict: MPerLVerdict::EmptySet,
            branch: MPerLBranch::SomeSignNegative,
        }
    })
}

/// One `(1 - Δ t^p)^{±1}` factor of a periodic-data product; the linear
/// factored functions produced here always carry `p = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FranksFactor {
    pub period: u64,
    /// Orientation `Δ`, `+1` or `-1`.
    pub orientation: i8,
    /// Sign of the exponent, encoding the parity `(-1)^{u+1}` of the index.
    pub exponent_sign: i8,
}

/// True when every surviving base is `+1` or `-1`, i.e. the function is a
/// finite product of factors `(1 ± t^p)^{±1}`. A map with finitely many
/// periodic points, all hyperbolic, must have its zeta function in this form.
pub fn franks_compatible(f: &FactoredRationalFunction) -> bool {
    f.has_unit_bases_only()
}

/// Decomposes a compatible function into periodic-data factors, `|e|` copies
/// of `(1 - Δ t)^{sign e}` per factor `(1 - c t)^e` with `Δ = c`.
pub fn franks_decompose(
    f: &FactoredRationalFunction,
) -> Result<Vec<FranksFactor>, ClassifyError> {
    if !franks_compatible(f) {
        return Err(ClassifyError::NotExpressible);
    }
    let mut out = Vec::new();
    for (base, exponent) in f.factors() {
        let orientation: i8 = if base.is_one() { 1 } else { -1 };
        let exponent_sign: i8 = if exponent > 0 { 1 } else { -1 };
        for _ in 0..exponent.unsigned_abs() {
            out.push(FranksFactor {
                period: 1,
                orientation,
                exponent_sign,
            });
        }
    }
    Ok(out)
}

/// Exact unboundedness of `{|L(f^m)|}_m`: some `|a_j| > 1` must be present
/// and either the odd-iterate or the even-iterate subsequence must be free of
/// identically vanishing factors. A factor vanishes on every odd iterate when
/// `n_i` is odd with `a_i = 1` or `n_i` is even with `a_i = -1`, and on every
/// even iterate when `n_i` is odd with `|a_i| = 1`.
pub fn lefschetz_unbounded(desc: &MapDescriptor) -> bool {
    let pattern = sign_pattern(desc);
    if pattern.expanding.is_empty() {
        return false;
    }
    let odd_iterates_alive = pattern.odd_plus.is_empty() && pattern.even_minus.is_empty();
    let even_iterates_alive = pattern.odd_plus.is_empty() && pattern.odd_minus.is_empty();
    odd_iterates_alive || even_iterates_alive
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolicOutcome {
    InfinitelyManyPeriodicPoints,
    Inconclusive,
}

/// Verdict for a C^1 map with all periodic points hyperbolic, together with
/// the evidence it rests on. The verdict is driven by the periodic-data
/// obstruction: a surviving zeta base of modulus > 1 rules out finitely many
/// hyperbolic periodic points. The eigenvalue criterion (`a_i != 1` on every
/// odd factor and some `|a_j| > 1`) is reported alongside because it does not
/// by itself decide the question: eigenvalue patterns exist that satisfy it
/// while the zeta function collapses to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicVerdict {
    pub verdict: HyperbolicOutcome,
    pub eigenvalue_criterion_met: bool,
    pub lefschetz_unbounded: bool,
    pub franks_compatible: bool,
}

pub fn hyperbolic_verdict(desc: &MapDescriptor) -> HyperbolicVerdict {
    let zeta = zeta_closed(desc);
    let compatible = franks_compatible(&zeta);
    let no_odd_unit = desc
        .space()
        .dims()
        .iter()
        .zip(desc.eigs())
        .all(|(&dim, &a)| dim % 2 == 0 || a != 1);
    let some_expanding = desc.eigs().iter().any(|a| a.unsigned_abs() > 1);
    HyperbolicVerdict {
        verdict: if compatible {
            HyperbolicOutcome::Inconclusive
        } else {
            HyperbolicOutcome::InfinitelyManyPeriodicPoints
        },
        eigenvalue_criterion_met: no_odd_unit && some_expanding,
        lefschetz_unbounded: lefschetz_unbounded(desc),
        franks_compatible: compatible,
    }
}

/// Structural class of a transversal map's eigenvalue pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// Every `|a_i| > 1`; `ell(f^m) != 0` for all large `m`.
    AllExpanding,
    /// Some even factor carries `-1` and some factor expands: odd iterates
    /// vanish, even iterates eventually do not.
    EvenIteratesGrow,
    /// Some odd factor carries `-1` and some factor expands: odd iterates
    /// eventually do not vanish.
    OddIteratesGrow,
    /// Some factor expands and every non-expanding factor is an even sphere
    /// with eigenvalue 1; `ell(f^m) != 0` for all large `m`.
    ExpandingWithUnitEvens,
    /// All eigenvalues 1 on even spheres: `ell` is supported exactly on {1}.
    UnitAllPlus,
    /// Unit eigenvalues, some odd factor with `-1`, no even factor with
    /// `-1`: `ell` is supported exactly on {1, 2}.
    UnitOddMinus,
    /// Unit eigenvalues on even spheres only, some factor with `-1`: `ell`
    /// is supported exactly on {2}.
    UnitEvenMinus,
    /// Preconditions are violated or `L` vanishes identically; no period
    /// guarantees are emitted.
    Degenerate,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::AllExpanding => "all-expanding",
            CaseTag::EvenIteratesGrow => "even-iterates-grow",
            CaseTag::OddIteratesGrow => "odd-iterates-grow",
            CaseTag::ExpandingWithUnitEvens => "expanding-with-unit-evens",
            CaseTag::UnitAllPlus => "unit-all-plus",
            CaseTag::UnitOddMinus => "unit-odd-minus",
            CaseTag::UnitEvenMinus => "unit-even-minus",
            CaseTag::Degenerate => "degenerate",
        }
    }
}

/// One statement about the period set, justified either by a concrete
/// nonvanishing `ell(f^m)` in the inspected window or by the eventual
/// nonvanishing that the structural class provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodAssertion {
    /// `m` is odd with `ell(f^m) != 0`: `m` is a period.
    OddPeriod { m: u64 },
    /// `m` is even with `ell(f^m) != 0`: `m` or `m/2` is a period.
    EvenOrHalfPeriod { m: u64 },
    /// Beyond some unspecified threshold every odd `m` is a period.
    EventuallyAllOddPeriods,
    /// Beyond some unspecified threshold every even `m` has `m` or `m/2`
    /// as a period.
    EventuallyAllEvenOrHalfPeriods,
}

/// Period-set report for a transversal map: the class taken, the window of
/// iterates with nonvanishing `ell`, the period statements they justify, and
/// notes where the exact computation contradicts commonly stated claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodSetReport {
    pub case_tag: CaseTag,
    pub guaranteed: Vec<PeriodAssertion>,
    pub ell_support_window: Vec<u64>,
    pub deviation_flags: Vec<String>,
}

fn unit_support_flag(support: &str) -> String {
    format!(
        "ell(f^m) vanishes at m = 2^s for every s >= 2 (the odd- and even-divisor \
         Mobius sums are supported on m = 2 only), so the nonzero support is exactly \
         {support}, not all powers of 2"
    )
}

/// Classifies the eigenvalue pattern, inspects `ell(f^m)` for `m` up to
/// `window`, and emits the period guarantees the data justifies. Violated
/// preconditions (a zero eigenvalue, or an odd sphere with eigenvalue 1)
/// degrade to a `Degenerate` report with empty guarantees rather than an
/// error; use [`transversal_classify_strict`] to reject zero eigenvalues.
pub fn transversal_classify(desc: &MapDescriptor, window: u64) -> PeriodSetReport {
    assert!(window >= 1, "window must be positive");
    let pattern = sign_pattern(desc);
    let support: Vec<u64> = (1..=window)
        .filter(|&m| !periodic_lefschetz(desc, m).is_zero())
        .collect();

    let mut flags = Vec::new();
    let all_unit = pattern.expanding.is_empty() && pattern.vanishing.is_empty();

    let case_tag = if !pattern.vanishing.is_empty() {
        flags.push(format!(
            "eigenvalue a_{} is zero: the classification assumes nonzero basic eigenvalues, \
             so no period guarantees are emitted",
            pattern.vanishing[0]
        ));
        CaseTag::Degenerate
    } else if !pattern.odd_plus.is_empty() {
        flags.push(format!(
            "factor {} is an odd sphere with eigenvalue 1, which forces L(f^m) = 0 for every m; \
             no nonvanishing data exists",
            pattern.odd_plus[0]
        ));
        CaseTag::Degenerate
    } else if pattern.expanding.len() == desc.space().factor_count() {
        CaseTag::AllExpanding
    } else if !pattern.expanding.is_empty() {
        if !pattern.even_minus.is_empty() && !pattern.odd_minus.is_empty() {
            flags.push(
                "unit eigenvalues -1 on both an odd and an even sphere force L(f^m) = 0 \
                 for every m; no nonvanishing data exists"
                    .to_string(),
            );
            CaseTag::Degenerate
        } else if !pattern.even_minus.is_empty() {
            CaseTag::EvenIteratesGrow
        } else if !pattern.odd_minus.is_empty() {
            CaseTag::OddIteratesGrow
        } else {
            CaseTag::ExpandingWithUnitEvens
        }
    } else if all_unit {
        match (pattern.odd_minus.is_empty(), pattern.even_minus.is_empty()) {
            (true, true) => CaseTag::UnitAllPlus,
            (false, true) => {
                flags.push(unit_support_flag("{1, 2}"));
                CaseTag::UnitOddMinus
            }
            (true, false) => {
                flags.push(unit_support_flag("{2}"));
                CaseTag::UnitEvenMinus
            }
            (false, false) => {
                flags.push(
                    "unit eigenvalues -1 on both an odd and an even sphere force L(f^m) = 0 \
                     for every m; no nonvanishing data exists"
                        .to_string(),
                );
                CaseTag::Degenerate
            }
        }
    } else {
        CaseTag::Degenerate
    };

    if case_tag == CaseTag::OddIteratesGrow && support.iter().any(|&m| m % 2 == 0 && m > 2) {
        flags.push(
            "even iterates do not vanish identically in this class: the window support \
             contains an even m > 2 with ell(f^m) != 0"
                .to_string(),
        );
    }

    let mut guaranteed = Vec::new();
    if case_tag != CaseTag::Degenerate {
        for &m in &support {
            guaranteed.push(if m % 2 == 1 {
                PeriodAssertion::OddPeriod { m }
            } else {
                PeriodAssertion::EvenOrHalfPeriod { m }
            });
        }
        match case_tag {
            CaseTag::AllExpanding | CaseTag::ExpandingWithUnitEvens => {
                guaranteed.push(PeriodAssertion::EventuallyAllOddPeriods);
                guaranteed.push(PeriodAssertion::EventuallyAllEvenOrHalfPeriods);
            }
            CaseTag::EvenIteratesGrow => {
                guaranteed.push(PeriodAssertion::EventuallyAllEvenOrHalfPeriods);
            }
            CaseTag::OddIteratesGrow => {
                guaranteed.push(PeriodAssertion::EventuallyAllOddPeriods);
            }
            _ => {}
        }
    }

    PeriodSetReport {
        case_tag,
        guaranteed,
        ell_support_window: support,
        deviation_flags: flags,
    }
}

/// As [`transversal_classify`], but rejects zero eigenvalues outright.
pub fn transversal_classify_strict(
    desc: &MapDescriptor,
    window: u64,
) -> Result<PeriodSetReport, ClassifyError> {
    if let Some((index, _)) = desc.eigs().iter().enumerate().find(|(_, &a)| a == 0) {
        return Err(ClassifyError::ZeroEigenvalue { index });
    }
    Ok(transversal_classify(desc, window))
}
