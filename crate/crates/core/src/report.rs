//! Deterministic text renderings of the computed tables. All floating-point
//! columns carry 17 significant digits so the files round-trip exactly and
//! byte-identical reruns are a testable contract.

use crate::error::Result;
use crate::pressure::{PartitionTable, QTable, RootResult};
use crate::roof::RoofSpec;
use crate::sft::{LanguageTable, SftComponent};
use crate::suspension::{LiftedMeasureReport, SuspensionModel};

/// Full-precision rendering of an f64 (17 significant digits).
pub fn fmt_full(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{x:.16e}")
}

/// Language table as CSV: n, count, log_count, ratio_to_lambda_n. The count
/// column is blank past the exact big-integer range.
pub fn language_csv(table: &LanguageTable, lambda: f64) -> String {
    let mut out = String::from("n,count,log_count,ratio_to_lambda_n\n");
    let log_lambda = lambda.ln();
    for n in 1..=table.len() {
        let count = table.count(n).map(|c| c.to_string()).unwrap_or_default();
        let log_count = table.log_count(n);
        let ratio = (log_count - n as f64 * log_lambda).exp();
        out.push_str(&format!(
            "{n},{count},{},{}\n",
            fmt_full(log_count),
            fmt_full(ratio)
        ));
    }
    out
}

/// Component census as CSV: index, symbols (space separated), lambda, entropy.
pub fn components_csv(components: &[SftComponent]) -> String {
    let mut out = String::from("component,symbols,lambda,entropy\n");
    for (idx, c) in components.iter().enumerate() {
        let symbols: Vec<String> = c.symbols.iter().map(|s| s.to_string()).collect();
        out.push_str(&format!(
            "{idx},{},{},{}\n",
            symbols.join(" "),
            fmt_full(c.lambda),
            fmt_full(c.entropy)
        ));
    }
    out
}

/// a_j table as CSV: j, block_n, a_j, a_j_minus_h_y.
pub fn aj_csv(spec: &RoofSpec) -> Result<String> {
    let mut out = String::from("j,block_n,a_j,a_j_minus_h_y\n");
    let h = spec.h_y();
    for j in 1..=spec.aj().j_max() {
        let a = spec.aj().value(j)?;
        out.push_str(&format!(
            "{j},{},{},{}\n",
            crate::roof::block_index(j),
            fmt_full(a),
            fmt_full(a - h)
        ));
    }
    Ok(out)
}

/// Partition table as CSV: n, c, log_Zn, P_n, lower_bound, upper_bound.
pub fn partition_csv(table: &PartitionTable) -> String {
    let mut out = String::from("n,c,log_Zn,P_n,lower_bound,upper_bound\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.n,
            fmt_full(table.scale),
            fmt_full(row.log_z),
            fmt_full(row.p),
            fmt_full(row.lower),
            fmt_full(row.upper)
        ));
    }
    out
}

/// Q table as CSV: r, Q_r, recursion_rhs.
pub fn q_csv(table: &QTable) -> String {
    let mut out = String::from("r,Q_r,recursion_rhs\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{},{},{}\n",
            row.r,
            fmt_full(row.q),
            fmt_full(row.recursion_rhs)
        ));
    }
    out
}

/// Bisection trace as CSV: iteration, c_lo, c_hi.
pub fn root_csv(result: &RootResult) -> String {
    let mut out = String::from("iteration,c_lo,c_hi\n");
    for step in &result.steps {
        out.push_str(&format!(
            "{},{},{}\n",
            step.iteration,
            fmt_full(step.lo),
            fmt_full(step.hi)
        ));
    }
    out
}

/// Roof build manifest as pretty JSON.
pub fn manifest_json(spec: &RoofSpec) -> String {
    let mut s = serde_json::to_string_pretty(&spec.manifest()).expect("manifest serializes");
    s.push('\n');
    s
}

/// Suspension report as pretty JSON.
pub fn report_json(model: &SuspensionModel, measures: &LiftedMeasureReport) -> String {
    #[derive(serde::Serialize)]
    struct Full<'a> {
        model: &'a SuspensionModel,
        measures: &'a LiftedMeasureReport,
    }
    let mut s = serde_json::to_string_pretty(&Full { model, measures }).expect("report serializes");
    s.push('\n');
    s
}
