//! Exact partition sums Z_n(scale * g) by dynamic programming.
//!
//! State (last symbol, length of the current violation-free run). A
//! target-admissible step extends the run; a violating step closes it and
//! multiplies by exp(-scale * sum_{j<=len} a_j); the terminal closure adds
//! the admissible tail exp(-scale * len * h(Y)) for live end symbols and a
//! forced final violation for dead ones. Everything runs in the log domain
//! with reductions in a fixed order, so Z_n spanning hundreds of orders of
//! magnitude is exact to roundoff and reproducible bit for bit.

use crate::error::{Error, Result};
use crate::logdomain::log_add;
use crate::roof::RoofSpec;

/// Per-layer DP sweep shared by the partition sums and the recursion
/// quantity. `on_layer(p, states)` sees the layer for words of length p;
/// states[s][l-1] is the log-weight of (last symbol s, run length l).
pub(crate) fn run_dp<F>(spec: &RoofSpec, n_max: usize, scale: f64, mut on_layer: F) -> Result<()>
where
    F: FnMut(usize, &[Vec<f64>]) -> Result<()>,
{
    if n_max == 0 {
        return Ok(());
    }
    if n_max > spec.aj().j_max() {
        return Err(Error::CapacityExceeded {
            requested: n_max,
            capacity: spec.aj().j_max(),
        });
    }
    let d = spec.ambient_size();
    let ambient = spec.ambient();
    let target = spec.target();
    let mut cur: Vec<Vec<f64>> = (0..d).map(|_| vec![0.0]).collect();
    on_layer(1, &cur)?;
    for p in 1..n_max {
        let mut next: Vec<Vec<f64>> = (0..d).map(|_| vec![f64::NEG_INFINITY; p + 1]).collect();
        for s in 0..d {
            for l in 1..=p {
                let w = cur[s][l - 1];
                if w == f64::NEG_INFINITY {
                    continue;
                }
                let closed = w + scale * (-spec.prefix_a(l)?);
                for s2 in 0..d {
                    if !ambient.get(s, s2) {
                        continue;
                    }
                    if target.get(s, s2) {
                        next[s2][l] = log_add(next[s2][l], w);
                    } else {
                        next[s2][0] = log_add(next[s2][0], closed);
                    }
                }
            }
        }
        cur = next;
        on_layer(p + 1, &cur)?;
    }
    Ok(())
}

/// Close a layer into log Z_p: admissible tails for live end symbols, a
/// forced final violation for dead ones.
pub(crate) fn close_partition(spec: &RoofSpec, states: &[Vec<f64>], scale: f64) -> Result<f64> {
    let h = spec.h_y();
    let mut acc = f64::NEG_INFINITY;
    for (s, row) in states.iter().enumerate() {
        let live = spec.target().row_has_one(s);
        for (idx, &w) in row.iter().enumerate() {
            if w == f64::NEG_INFINITY {
                continue;
            }
            let l = idx + 1;
            let term = if live {
                w + scale * (-(l as f64) * h)
            } else {
                w + scale * (-spec.prefix_a(l)?)
            };
            acc = log_add(acc, term);
        }
    }
    if acc.is_nan() {
        return Err(Error::NonFiniteWeight);
    }
    Ok(acc)
}

/// log Z_n(scale * g), exact over all ambient-admissible words of length n.
pub fn partition_sum(spec: &RoofSpec, n: usize, scale: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut out = f64::NEG_INFINITY;
    run_dp(spec, n, scale, |p, states| {
        if p == n {
            out = close_partition(spec, states, scale)?;
        }
        Ok(())
    })?;
    Ok(out)
}

/// One row of a pressure table.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PartitionRow {
    pub n: usize,
    pub log_z: f64,
    /// P_n = (1/n) log Z_n.
    pub p: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Finite-n pressure estimates with sandwich bounds. At scale 1 the bounds
/// are 0 <= P_n <= log(n C2)/n with C2 the empirical Perron constant; for
/// other scales they shift by the roof range [h(Y), a_1] per unit of scale.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PartitionTable {
    pub scale: f64,
    pub c2: f64,
    pub rows: Vec<PartitionRow>,
}

pub fn pressure_estimate(spec: &RoofSpec, n_max: usize, scale: f64) -> Result<PartitionTable> {
    if n_max == 0 {
        return Err(Error::EmptyWord);
    }
    if spec.language().len() < n_max {
        return Err(Error::CapacityExceeded {
            requested: n_max,
            capacity: spec.language().len(),
        });
    }
    let (_, c2) = spec.language().perron_constants(spec.lambda(), n_max);
    let h = spec.h_y();
    let a1 = spec.a1();
    let mut rows = Vec::with_capacity(n_max);
    run_dp(spec, n_max, scale, |p, states| {
        let log_z = close_partition(spec, states, scale)?;
        let n = p as f64;
        let ub1 = (n * c2).ln() / n;
        let (lower, upper) = if scale >= 1.0 {
            (-(scale - 1.0) * a1, ub1 - (scale - 1.0) * h)
        } else {
            ((1.0 - scale) * h, ub1 + (1.0 - scale) * a1)
        };
        rows.push(PartitionRow {
            n: p,
            log_z,
            p: log_z / n,
            lower,
            upper,
        });
        Ok(())
    })?;
    Ok(PartitionTable { scale, c2, rows })
}
