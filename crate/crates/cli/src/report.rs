//! Dispatch from a validated request to the library, and the serializable
//! report shapes. Payload keys are part of the output contract and stay
//! stable across releases; big integers and rationals serialize as decimal
//! strings so the JSON is exact.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use lefzeta::classify::{
    hyperbolic_verdict, mperl, transversal_classify, HyperbolicOutcome, MPerLBranch,
    MPerLVerdict, PeriodAssertion,
};
use lefzeta::homology::LieGroupPreset;
use lefzeta::lefschetz::{lefschetz_number, profile, DEFAULT_HORIZON_CAP};
use lefzeta::numtheory::divisors;
use lefzeta::oracle::{adjudicate_q_product, lefschetz_via_traces, zeta_via_charpoly};
use lefzeta::zeta::{
    quasi_unipotent_exponents, series_from_lefschetz, zeta_closed, zeta_homological,
};
use lefzeta::{FactoredRationalFunction, MapDescriptor, SphereProduct};

use crate::request::{CliError, CommandRequest, SubcommandKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandReport {
    pub request: CommandRequest,
    pub payload: Payload,
    pub deviation_flags: Vec<String>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Betti(BettiPayload),
    Lefschetz(LefschetzPayload),
    Ell(EllPayload),
    Zeta(ZetaPayload),
    Series(SeriesPayload),
    Mperl(MperlPayload),
    Hyperbolic(HyperbolicPayload),
    Transversal(TransversalPayload),
    Lie(LiePayload),
    Verify(VerifyPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BettiPayload {
    pub space: String,
    pub total_dimension: usize,
    pub betti: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LefschetzPayload {
    pub horizon: u64,
    pub lefschetz: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllPayload {
    pub horizon: u64,
    pub periodic_lefschetz: Vec<String>,
}

/// One `(1 - base * t)^exponent` factor; factors are listed with bases
/// ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorDto {
    pub base: String,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuasiUnipotentDto {
    pub alpha: i64,
    pub beta: i64,
    pub e_counts: Vec<u64>,
    pub o_counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZetaPayload {
    pub factors: Vec<FactorDto>,
    pub text: String,
    pub series: Vec<String>,
    pub quasi_unipotent: Option<QuasiUnipotentDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPayload {
    pub order: usize,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MperlPayload {
    pub verdict: String,
    pub set: String,
    pub branch: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperbolicPayload {
    pub verdict: String,
    pub eigenvalue_criterion_met: bool,
    pub lefschetz_unbounded: bool,
    pub franks_compatible: bool,
    pub zeta: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GuaranteeDto {
    pub kind: String,
    pub m: Option<u64>,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransversalPayload {
    pub case: String,
    pub horizon: u64,
    pub ell_support: Vec<u64>,
    pub guarantees: Vec<GuaranteeDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LiePayload {
    pub family: String,
    pub parameter: u32,
    pub rank: usize,
    pub dimension: usize,
    pub dims: Vec<u32>,
    pub zeta: String,
    pub mperl: MperlPayload,
    pub hyperbolic_verdict: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QProductDto {
    pub m: u64,
    pub inversion: String,
    pub q_product: String,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub checks: Vec<CheckDto>,
    pub q_product_adjudication: Vec<QProductDto>,
    pub passed: bool,
}

fn factor_dtos(f: &FactoredRationalFunction) -> Vec<FactorDto> {
    f.factors()
        .map(|(base, exponent)| FactorDto {
            base: base.to_string(),
            exponent,
        })
        .collect()
}

fn mperl_payload(desc: &MapDescriptor) -> Result<MperlPayload, CliError> {
    let result = mperl(desc).map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(MperlPayload {
        verdict: match result.verdict {
            MPerLVerdict::SetOne => "set-one".to_string(),
            MPerLVerdict::EmptySet => "empty-set".to_string(),
        },
        set: match result.verdict {
            MPerLVerdict::SetOne => "{1}".to_string(),
            MPerLVerdict::EmptySet => "{}".to_string(),
        },
        branch: match result.branch {
            MPerLBranch::AllSignsPositive => "all-signs-positive".to_string(),
            MPerLBranch::SomeSignNegative => "some-sign-negative".to_string(),
        },
    })
}

fn outcome_text(outcome: HyperbolicOutcome) -> String {
    match outcome {
        HyperbolicOutcome::InfinitelyManyPeriodicPoints => {
            "infinitely-many-periodic-points".to_string()
        }
        HyperbolicOutcome::Inconclusive => "inconclusive".to_string(),
    }
}

fn guarantee_dto(assertion: &PeriodAssertion) -> GuaranteeDto {
    match assertion {
        PeriodAssertion::OddPeriod { m } => GuaranteeDto {
            kind: "odd-period".to_string(),
            m: Some(*m),
            statement: format!("{m} is in Per(f)"),
        },
        PeriodAssertion::EvenOrHalfPeriod { m } => GuaranteeDto {
            kind: "even-or-half-period".to_string(),
            m: Some(*m),
            statement: format!("{m} or {} is in Per(f)", m / 2),
        },
        PeriodAssertion::EventuallyAllOddPeriods => GuaranteeDto {
            kind: "eventually-all-odd".to_string(),
            m: None,
            statement: "every sufficiently large odd m is in Per(f) (threshold unverified; \
                        supported by the window evidence)"
                .to_string(),
        },
        PeriodAssertion::EventuallyAllEvenOrHalfPeriods => GuaranteeDto {
            kind: "eventually-all-even-or-half".to_string(),
            m: None,
            statement: "for every sufficiently large even m, m or m/2 is in Per(f) (threshold \
                        unverified; supported by the window evidence)"
                .to_string(),
        },
    }
}

/// The eigenvalue-criterion caveat for the hyperbolic report: the criterion
/// alone would promise infinitely many periodic points, but the zeta function
/// collapses, so no conclusion follows from the periodic-data obstruction.
fn hyperbolic_flag() -> String {
    "the eigenvalue criterion (no odd-sphere eigenvalue equal to 1, some |a| > 1) is met, \
     yet every zeta factor cancels; the criterion alone does not certify infinitely many \
     periodic points"
        .to_string()
}

fn beta_flag(e_sum: i64, beta: i64) -> String {
    format!(
        "beta must be computed from the negative-product subset counts o(k); reusing the \
         positive-product counts e(k) would give {e_sum} instead of {beta} and fails to \
         reproduce the zeta function"
    )
}

fn q_product_flag(first_disagreement: &QProductDto) -> String {
    format!(
        "the per-factor product formula for ell(f^m) disagrees with Mobius inversion at \
         m = {}: inversion gives {}, the product gives {}; the product form is unreliable \
         for two or more factors",
        first_disagreement.m, first_disagreement.inversion, first_disagreement.q_product
    )
}

fn build_descriptor(req: &CommandRequest) -> Result<MapDescriptor, CliError> {
    let space = SphereProduct::new(&req.dims).map_err(|e| CliError::Domain(e.to_string()))?;
    let eigs = req
        .eigs
        .clone()
        .ok_or_else(|| CliError::Usage("--eigs is required".to_string()))?;
    MapDescriptor::new(space, eigs).map_err(|e| CliError::Domain(e.to_string()))
}

fn check_horizon(req: &CommandRequest) -> Result<(), CliError> {
    if req.horizon > DEFAULT_HORIZON_CAP {
        return Err(CliError::Domain(format!(
            "horizon {} exceeds the cap {DEFAULT_HORIZON_CAP}",
            req.horizon
        )));
    }
    Ok(())
}

fn zeta_payload_for(desc: &MapDescriptor, order: usize, flags: &mut Vec<String>) -> ZetaPayload {
    let zeta = zeta_closed(desc);
    let series = zeta
        .series_expand(order)
        .coefficients()
        .iter()
        .map(|c| c.to_string())
        .collect();
    let quasi_unipotent = quasi_unipotent_exponents(desc).ok().map(|qu| {
        if qu.alternating_e_sum() != qu.beta {
            flags.push(beta_flag(qu.alternating_e_sum(), qu.beta));
        }
        QuasiUnipotentDto {
            alpha: qu.alpha,
            beta: qu.beta,
            e_counts: qu.e_counts,
            o_counts: qu.o_counts,
        }
    });
    ZetaPayload {
        factors: factor_dtos(&zeta),
        text: zeta.to_string(),
        series,
        quasi_unipotent,
    }
}

fn verify_payload(desc: &MapDescriptor, req: &CommandRequest) -> (VerifyPayload, Vec<String>) {
    let mut checks = Vec::new();
    let mut flags = Vec::new();

    let closed = zeta_closed(desc);
    let trace_ok =
        (1..=req.horizon).all(|m| lefschetz_via_traces(desc, m) == lefschetz_number(desc, m));
    checks.push(CheckDto {
        name: "lefschetz-trace-route".to_string(),
        passed: trace_ok,
        detail: format!(
            "alternating trace sums equal the closed product for m <= {}",
            req.horizon
        ),
    });

    let homological = zeta_homological(desc);
    let charpoly = zeta_via_charpoly(desc);
    let zeta_ok = closed == homological && closed == charpoly;
    checks.push(CheckDto {
        name: "zeta-factor-routes".to_string(),
        passed: zeta_ok,
        detail: "closed form, degreewise assembly, and matrix route agree".to_string(),
    });

    let series_ok =
        closed.series_expand(req.order) == series_from_lefschetz(desc, req.order);
    checks.push(CheckDto {
        name: "zeta-series-routes".to_string(),
        passed: series_ok,
        detail: format!(
            "factored expansion equals exp of the Lefschetz series to order {}",
            req.order
        ),
    });

    let prof = profile(desc, req.horizon).expect("horizon already checked against the cap");
    let inversion_ok = (1..=req.horizon).all(|m| {
        let total: BigInt = divisors(m)
            .into_iter()
            .map(|r| prof.periodic_at(r).clone())
            .sum();
        total == *prof.lefschetz_at(m)
    });
    checks.push(CheckDto {
        name: "mobius-inversion-round-trip".to_string(),
        passed: inversion_ok,
        detail: format!(
            "sum of ell(f^r) over r | m equals L(f^m) for m <= {}",
            req.horizon
        ),
    });

    let adjudication: Vec<QProductDto> = (2..=req.horizon)
        .map(|m| {
            let check = adjudicate_q_product(desc, m);
            QProductDto {
                m,
                inversion: check.inversion.to_string(),
                q_product: check.q_product.to_string(),
                agree: check.agree,
            }
        })
        .collect();
    if let Some(first) = adjudication.iter().find(|record| !record.agree) {
        flags.push(q_product_flag(first));
    }

    let passed = checks.iter().all(|c| c.passed);
    (
        VerifyPayload {
            checks,
            q_product_adjudication: adjudication,
            passed,
        },
        flags,
    )
}

pub fn dispatch(req: &CommandRequest) -> Result<CommandReport, CliError> {
    let mut flags: Vec<String> = Vec::new();
    let payload = match req.subcommand {
        SubcommandKind::Betti => {
            let space =
                SphereProduct::new(&req.dims).map_err(|e| CliError::Domain(e.to_string()))?;
            Payload::Betti(BettiPayload {
                space: space.to_string(),
                total_dimension: space.total_dimension(),
                betti: space.betti_numbers(),
            })
        }
        SubcommandKind::Lefschetz => {
            let desc = build_descriptor(req)?;
            check_horizon(req)?;
            let prof = profile(&desc, req.horizon)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Payload::Lefschetz(LefschetzPayload {
                horizon: req.horizon,
                lefschetz: prof.lefschetz_numbers().iter().map(|v| v.to_string()).collect(),
            })
        }
        SubcommandKind::Ell => {
            let desc = build_descriptor(req)?;
            check_horizon(req)?;
            let prof = profile(&desc, req.horizon)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Payload::Ell(EllPayload {
                horizon: req.horizon,
                periodic_lefschetz: prof
                    .periodic_numbers()
                    .iter()
                    .map(|v| v.to_string())
                    .collect(),
            })
        }
        SubcommandKind::Zeta => {
            let desc = build_descriptor(req)?;
            Payload::Zeta(zeta_payload_for(&desc, req.order, &mut flags))
        }
        SubcommandKind::Series => {
            let desc = build_descriptor(req)?;
            let series = series_from_lefschetz(&desc, req.order);
            Payload::Series(SeriesPayload {
                order: req.order,
                coefficients: series.coefficients().iter().map(|c| c.to_string()).collect(),
            })
        }
        SubcommandKind::Mperl => {
            let desc = build_descriptor(req)?;
            Payload::Mperl(mperl_payload(&desc)?)
        }
        SubcommandKind::Hyperbolic => {
            let desc = build_descriptor(req)?;
            let verdict = hyperbolic_verdict(&desc);
            if verdict.eigenvalue_criterion_met && verdict.franks_compatible {
                flags.push(hyperbolic_flag());
            }
            Payload::Hyperbolic(HyperbolicPayload {
                verdict: outcome_text(verdict.verdict),
                eigenvalue_criterion_met: verdict.eigenvalue_criterion_met,
                lefschetz_unbounded: verdict.lefschetz_unbounded,
                franks_compatible: verdict.franks_compatible,
                zeta: zeta_closed(&desc).to_string(),
            })
        }
        SubcommandKind::Transversal => {
            let desc = build_descriptor(req)?;
            check_horizon(req)?;
            let report = transversal_classify(&desc, req.horizon);
            flags.extend(report.deviation_flags.iter().cloned());
            Payload::Transversal(TransversalPayload {
                case: report.case_tag.as_str().to_string(),
                horizon: req.horizon,
                ell_support: report.ell_support_window.clone(),
                guarantees: report.guaranteed.iter().map(guarantee_dto).collect(),
            })
        }
        SubcommandKind::Lie => {
            let desc = build_descriptor(req)?;
            let family = req
                .lie_family
                .clone()
                .ok_or_else(|| CliError::Usage("--family is required".to_string()))?;
            let parameter = req
                .lie_parameter
                .ok_or_else(|| CliError::Usage("--n is required".to_string()))?;
            let preset = match family.as_str() {
                "SU" => LieGroupPreset::SpecialUnitary(parameter),
                "Sp" => LieGroupPreset::Symplectic(parameter),
                other => {
                    return Err(CliError::Usage(format!(
                        "--family must be SU or Sp, got `{other}`"
                    )))
                }
            };
            let verdict = hyperbolic_verdict(&desc);
            if verdict.eigenvalue_criterion_met && verdict.franks_compatible {
                flags.push(hyperbolic_flag());
            }
            Payload::Lie(LiePayload {
                family,
                parameter,
                rank: preset.rank().map_err(|e| CliError::Domain(e.to_string()))?,
                dimension: preset
                    .group_dimension()
                    .map_err(|e| CliError::Domain(e.to_string()))?,
                dims: desc.space().dims().to_vec(),
                zeta: zeta_closed(&desc).to_string(),
                mperl: mperl_payload(&desc)?,
                hyperbolic_verdict: outcome_text(verdict.verdict),
            })
        }
        SubcommandKind::Verify => {
            let desc = build_descriptor(req)?;
            check_horizon(req)?;
            let (payload, verify_flags) = verify_payload(&desc, req);
            flags.extend(verify_flags);
            if !payload.passed {
                let failed: Vec<&str> = payload
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.name.as_str())
                    .collect();
                return Err(CliError::Internal(format!(
                    "cross-check mismatch: {}",
                    failed.join(", ")
                )));
            }
            Payload::Verify(payload)
        }
    };
    Ok(CommandReport {
        request: req.clone(),
        payload,
        deviation_flags: flags,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}
