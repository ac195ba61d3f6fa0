//! Suspension-flow semantics at the measure level: lifted entropies through
//! the Abramov formula, roof integrals against stationary Markov measures,
//! and the multiplicity report identifying the flow's measures of maximal
//! entropy with the lifts of the target's.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pressure::{pressure_root, variational_check, RootResult, VariationalRow};
use crate::roof::RoofSpec;
use crate::sft::{irreducible_components, parry_measure, ParryMeasure, SftComponent};

/// Entropy of the lifted measure: base entropy divided by the roof integral.
pub fn abramov(h_mu: f64, roof_integral: f64) -> Result<f64> {
    if !(roof_integral > 0.0) {
        return Err(Error::NonPositiveIntegral(roof_integral));
    }
    Ok(h_mu / roof_integral)
}

/// Roof integral of a stationary Markov measure, with an explicit bound on
/// the truncation error.
#[derive(Debug, Clone, Serialize)]
pub struct RoofIntegral {
    /// sum_{m <= m_max} a_m mu(first violation at m) + h(Y) mu(T > m_max).
    pub value: f64,
    /// (sup_{j > m_max} a_j - h(Y)) * mu(T > m_max); zero when the measure
    /// never leaves the target.
    pub remainder_bound: f64,
    /// mu(first violation beyond the truncation depth).
    pub tail_mass: f64,
    /// The measure is supported inside the target: the integral is exact.
    pub never_violates: bool,
}

/// Integrate the roof against the stationary Markov measure (pi, kernel) on
/// the ambient alphabet. The violation-time distribution mu(T = m) comes
/// from the vector recursion p_{m+1}(j) = sum_i p_m(i) kernel[i][j] over
/// target-admissible transitions; rho equals a_m on {T = m} and h(Y) on the
/// target, so the truncated sum plus an h(Y) tail underestimates by at most
/// `remainder_bound`.
pub fn roof_integral_markov(
    spec: &RoofSpec,
    stationary: &[f64],
    kernel: &[Vec<f64>],
    m_max: usize,
) -> Result<RoofIntegral> {
    let d = spec.ambient_size();
    if stationary.len() != d || kernel.len() != d {
        return Err(Error::MalformedKernel { row: 0 });
    }
    if m_max == 0 {
        return Err(Error::EmptyWord);
    }
    for (i, row) in kernel.iter().enumerate() {
        if row.len() != d {
            return Err(Error::MalformedKernel { row: i });
        }
        let sum: f64 = row.iter().sum();
        let off_graph = row
            .iter()
            .enumerate()
            .any(|(j, &p)| p > 0.0 && !spec.ambient().get(i, j));
        if (sum - 1.0).abs() > 1e-9 || off_graph || row.iter().any(|&p| p < 0.0) {
            return Err(Error::MalformedKernel { row: i });
        }
    }
    let pushed: Vec<f64> = (0..d)
        .map(|j| (0..d).map(|i| stationary[i] * kernel[i][j]).sum())
        .collect();
    let residual = pushed
        .iter()
        .zip(stationary)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    if residual > 1e-9 {
        return Err(Error::NotStationary { residual });
    }

    let target = spec.target();
    let h = spec.h_y();
    let mut p: Vec<f64> = stationary.to_vec();
    let mut value = 0.0;
    for m in 1..=m_max {
        let mut flux = 0.0;
        let mut next = vec![0.0; d];
        for i in 0..d {
            if p[i] == 0.0 {
                continue;
            }
            for j in 0..d {
                let w = p[i] * kernel[i][j];
                if w == 0.0 {
                    continue;
                }
                if target.get(i, j) {
                    next[j] += w;
                } else {
                    flux += w;
                }
            }
        }
        if m == 1 && flux == 0.0 {
            // A stationary measure with no violating step at time 1 keeps
            // its distribution fixed under the restricted kernel, so it
            // never violates at all: the integral is exactly h(Y).
            return Ok(RoofIntegral {
                value: h,
                remainder_bound: 0.0,
                tail_mass: 1.0,
                never_violates: true,
            });
        }
        if flux > 0.0 {
            value += spec.a_value(m)? * flux;
        }
        p = next;
    }
    let tail_mass: f64 = p.iter().sum();
    value += h * tail_mass;
    let remainder_bound = (spec.tail_sup(m_max)? - h) * tail_mass;
    Ok(RoofIntegral {
        value,
        remainder_bound,
        tail_mass,
        never_violates: false,
    })
}

/// One maximal-entropy component and its lifted measure.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureRow {
    pub symbols: Vec<usize>,
    pub base_entropy: f64,
    pub parry_stationarity_residual: f64,
    pub parry_entropy_residual: f64,
    pub roof_integral: f64,
    pub roof_integral_remainder: f64,
    pub lifted_entropy: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftedMeasureReport {
    pub rows: Vec<MeasureRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentRow {
    pub symbols: Vec<usize>,
    pub entropy: f64,
    pub max_entropy: bool,
}

/// Flow-level summary: the pressure root with its enclosure, the component
/// census of the target, and the number of measures of maximal entropy.
#[derive(Debug, Clone, Serialize)]
pub struct SuspensionModel {
    pub h_y: f64,
    pub c: f64,
    pub alpha: f64,
    pub flow_entropy: RootResult,
    pub components: Vec<ComponentRow>,
    pub variational: Vec<VariationalRow>,
    pub multiplicity: usize,
}

/// Build the suspension report: every irreducible component of the target
/// with entropy h(Y) carries its Parry measure, whose roof integral is
/// exactly h(Y), so each lift has entropy exactly one; the flow entropy
/// enclosure comes from the pressure root at depth `n_pressure`.
pub fn mme_report(
    spec: &RoofSpec,
    n_pressure: usize,
    tol: f64,
    m_max: usize,
) -> Result<(SuspensionModel, LiftedMeasureReport)> {
    let comps: Vec<SftComponent> = irreducible_components(spec.target())?;
    let variational = variational_check(spec, &comps);
    let flow_entropy = pressure_root(spec, n_pressure, None, tol)?;

    let mut rows = Vec::new();
    for (comp, varrow) in comps.iter().zip(&variational) {
        if !varrow.max_entropy {
            continue;
        }
        let parry: ParryMeasure = parry_measure(&comp.matrix)?;
        let (pi, kernel) = parry.embed(&comp.symbols, spec.ambient());
        let integral = roof_integral_markov(spec, &pi, &kernel, m_max)?;
        let lifted = abramov(comp.entropy, integral.value)?;
        rows.push(MeasureRow {
            symbols: comp.symbols.clone(),
            base_entropy: comp.entropy,
            parry_stationarity_residual: parry.stationarity_residual(),
            parry_entropy_residual: (parry.entropy() - comp.entropy).abs(),
            roof_integral: integral.value,
            roof_integral_remainder: integral.remainder_bound,
            lifted_entropy: lifted,
        });
    }
    let multiplicity = rows.len();
    let components = comps
        .iter()
        .zip(&variational)
        .map(|(c, v)| ComponentRow {
            symbols: c.symbols.clone(),
            entropy: c.entropy,
            max_entropy: v.max_entropy,
        })
        .collect();
    Ok((
        SuspensionModel {
            h_y: spec.h_y(),
            c: spec.c(),
            alpha: spec.alpha(),
            flow_entropy,
            components,
            variational,
            multiplicity,
        },
        LiftedMeasureReport { rows },
    ))
}
