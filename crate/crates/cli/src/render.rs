use std::fmt::Write;

use hbeta_core::Status;

use crate::command::ReportDocument;

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

/// Human-readable table of a report.
pub fn text(report: &ReportDocument) -> String {
    let mut out = String::new();
    let mut head = format!("{} {}  {}", report.tool, report.version, report.command);
    if let Some(e) = &report.entity {
        let _ = write!(head, "  {e}");
    }
    for s in &report.sigmas {
        let _ = write!(head, "  σ={s}");
    }
    if report.forced {
        head.push_str("  (forced)");
    }
    let _ = writeln!(out, "{head}");
    let _ = writeln!(out, "input sha256 {}", report.input_sha256);
    let width = report
        .report
        .checks
        .iter()
        .map(|c| c.id.chars().count())
        .max()
        .unwrap_or(0)
        .max(5);
    let _ = writeln!(out, "{:<width$}  status  failures", "check");
    for c in &report.report.checks {
        let _ = writeln!(out, "{:<width$}  {:<6}  {}", c.id, status(c.status), c.failures);
        for w in &c.witnesses {
            let _ = writeln!(
                out,
                "    at ({}): lhs {}  rhs {}  residual {}",
                w.at.join(", "),
                w.lhs,
                w.rhs,
                w.residual
            );
        }
        if c.witnesses.len() < c.failures {
            let _ = writeln!(out, "    … {} more", c.failures - c.witnesses.len());
        }
        if let Some(n) = &c.note {
            let _ = writeln!(out, "    note: {n}");
        }
    }
    for n in &report.report.notes {
        let _ = writeln!(out, "note: {n}");
    }
    let _ = writeln!(out, "verdict: {}", status(report.verdict));
    out
}
