//! Plain-text rendering of command reports. The layout is part of the
//! output contract: identical requests must produce byte-identical text.

use std::fmt::Write;

use crate::report::{CommandReport, Payload};

fn int_list<T: std::fmt::Display>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_text(report: &CommandReport) -> String {
    let mut out = String::new();
    match &report.payload {
        Payload::Betti(p) => {
            let _ = writeln!(out, "space: {}", p.space);
            let _ = writeln!(out, "total_dimension: {}", p.total_dimension);
            let _ = writeln!(out, "betti: {}", int_list(&p.betti));
        }
        Payload::Lefschetz(p) => {
            for (idx, value) in p.lefschetz.iter().enumerate() {
                let _ = writeln!(out, "L(f^{}) = {value}", idx + 1);
            }
        }
        Payload::Ell(p) => {
            for (idx, value) in p.periodic_lefschetz.iter().enumerate() {
                let _ = writeln!(out, "ell(f^{}) = {value}", idx + 1);
            }
        }
        Payload::Zeta(p) => {
            let _ = writeln!(out, "zeta: {}", p.text);
            let _ = writeln!(out, "series: {}", p.series.join(" "));
            if let Some(qu) = &p.quasi_unipotent {
                let _ = writeln!(out, "alpha: {}", qu.alpha);
                let _ = writeln!(out, "beta: {}", qu.beta);
            }
        }
        Payload::Series(p) => {
            let _ = writeln!(out, "order: {}", p.order);
            let _ = writeln!(out, "series: {}", p.coefficients.join(" "));
        }
        Payload::Mperl(p) => {
            let _ = writeln!(out, "MPer_L = {}", p.set);
            let _ = writeln!(out, "branch: {}", p.branch);
        }
        Payload::Hyperbolic(p) => {
            let _ = writeln!(out, "verdict: {}", p.verdict);
            let _ = writeln!(out, "eigenvalue_criterion_met: {}", p.eigenvalue_criterion_met);
            let _ = writeln!(out, "lefschetz_unbounded: {}", p.lefschetz_unbounded);
            let _ = writeln!(out, "franks_compatible: {}", p.franks_compatible);
            let _ = writeln!(out, "zeta: {}", p.zeta);
        }
        Payload::Transversal(p) => {
            let _ = writeln!(out, "case: {}", p.case);
            let _ = writeln!(out, "ell_support (m <= {}): {}", p.horizon, int_list(&p.ell_support));
            for guarantee in &p.guarantees {
                let _ = writeln!(out, "guarantee: {}", guarantee.statement);
            }
        }
        Payload::Lie(p) => {
            let _ = writeln!(out, "group: {}({})", p.family, p.parameter);
            let _ = writeln!(out, "rank: {}", p.rank);
            let _ = writeln!(out, "dimension: {}", p.dimension);
            let _ = writeln!(out, "dims: {}", int_list(&p.dims));
            let _ = writeln!(out, "zeta: {}", p.zeta);
            let _ = writeln!(out, "MPer_L = {}", p.mperl.set);
            let _ = writeln!(out, "branch: {}", p.mperl.branch);
            let _ = writeln!(out, "hyperbolic_verdict: {}", p.hyperbolic_verdict);
        }
        Payload::Verify(p) => {
            for check in &p.checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} {} ({})", check.name, check.detail);
            }
            for record in &p.q_product_adjudication {
                let verdict = if record.agree { "agree" } else { "disagree" };
                let _ = writeln!(
                    out,
                    "q-product m={}: inversion {} vs product {} ({verdict})",
                    record.m, record.inversion, record.q_product
                );
            }
            let _ = writeln!(out, "verify: {}", if p.passed { "PASS" } else { "FAIL" });
        }
    }
    for flag in &report.deviation_flags {
        let _ = writeln!(out, "note: {flag}");
    }
    out
}
