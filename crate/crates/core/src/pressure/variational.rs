//! Variational bookkeeping: on the target the potential is the constant
//! -h(Y), so every maximal-entropy component satisfies
//! h_mu + integral of g = 0; the residual below is the numerical gap
//! |log lambda_component - h(Y)|. Components of smaller entropy report
//! their strict slack instead.

use crate::roof::RoofSpec;
use crate::sft::SftComponent;

#[derive(Debug, Clone, serde::Serialize)]
pub struct VariationalRow {
    pub symbols: Vec<usize>,
    pub component_entropy: f64,
    /// |h_C - h(Y)| for maximal components.
    pub residual: f64,
    /// h(Y) - h_C, strictly positive for non-maximal components.
    pub slack: f64,
    pub max_entropy: bool,
}

/// Tolerance separating maximal-entropy components from the rest.
pub const MAX_ENTROPY_TOLERANCE: f64 = 1e-9;

pub fn variational_check(spec: &RoofSpec, components: &[SftComponent]) -> Vec<VariationalRow> {
    let h = spec.h_y();
    components
        .iter()
        .map(|c| {
            let slack = h - c.entropy;
            VariationalRow {
                symbols: c.symbols.clone(),
                component_entropy: c.entropy,
                residual: slack.abs(),
                slack,
                max_entropy: slack.abs() <= MAX_ENTROPY_TOLERANCE,
            }
        })
        .collect()
}
