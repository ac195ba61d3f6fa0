//! Bisection on the strictly decreasing map scale -> P_n(scale).
//!
//! P_n drops by at least h(Y) per unit of scale, so P_n(1) >= 0 pins the
//! root of the pressure equation inside [1, 1 + P_n(1)/h(Y)] before any
//! search runs. Bisection is used rather than a secant step: the map is
//! monotone but only piecewise smooth at finite n.

use crate::error::{Error, Result};
use crate::pressure::partition::partition_sum;
use crate::roof::RoofSpec;

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct RootStep {
    pub iteration: usize,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RootResult {
    pub root: f64,
    pub value_at_root: f64,
    pub residual: f64,
    pub steps: Vec<RootStep>,
    pub bracket: Bracket,
    /// Enclosure available before the search: [1, 1 + P_n(1)/h(Y)].
    pub apriori: Option<Bracket>,
}

pub const BISECTION_MAX_STEPS: usize = 100;

/// Bisection root of a decreasing function; requires f(lo) >= 0 >= f(hi) up
/// to `tol`. Stops once |f(mid)| <= tol and reports the residual honestly if
/// the step cap lands first.
pub fn bisect_decreasing<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let Bracket { mut lo, mut hi } = bracket;
    if !(lo <= hi) {
        return Err(Error::InvalidBracket { lo, hi });
    }
    let f_lo = f(lo)?;
    if f_lo.abs() <= tol {
        return Ok(RootResult {
            root: lo,
            value_at_root: f_lo,
            residual: f_lo.abs(),
            steps: Vec::new(),
            bracket,
            apriori: None,
        });
    }
    let f_hi = f(hi)?;
    if f_lo < 0.0 || f_hi > tol {
        return Err(Error::InvalidBracket { lo, hi });
    }
    if f_hi.abs() <= tol {
        return Ok(RootResult {
            root: hi,
            value_at_root: f_hi,
            residual: f_hi.abs(),
            steps: Vec::new(),
            bracket,
            apriori: None,
        });
    }
    let mut steps = Vec::new();
    let mut mid = 0.5 * (lo + hi);
    let mut f_mid = f(mid)?;
    for iteration in 1..=BISECTION_MAX_STEPS {
        if f_mid >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        steps.push(RootStep { iteration, lo, hi });
        if f_mid.abs() <= tol || hi - lo <= f64::EPSILON * hi.abs() {
            break;
        }
        mid = 0.5 * (lo + hi);
        f_mid = f(mid)?;
    }
    Ok(RootResult {
        root: mid,
        value_at_root: f_mid,
        residual: f_mid.abs(),
        steps,
        bracket,
        apriori: None,
    })
}

/// Root of scale -> P_n(scale) for the potential of `spec`. The residual of
/// the returned root satisfies |P_n| <= tol * h(Y). With no bracket given
/// the a-priori enclosure is used.
pub fn pressure_root(
    spec: &RoofSpec,
    n: usize,
    bracket: Option<Bracket>,
    tol: f64,
) -> Result<RootResult> {
    let h = spec.h_y();
    let tol_abs = tol * h;
    let p1 = partition_sum(spec, n, 1.0)? / n as f64;
    let apriori = Bracket {
        lo: 1.0,
        hi: 1.0 + p1.max(0.0) / h,
    };
    let search = bracket.unwrap_or(Bracket {
        lo: apriori.lo,
        // tiny widening so the endpoint sign survives roundoff
        hi: apriori.hi + 1e-9,
    });
    let f = |scale: f64| Ok(partition_sum(spec, n, scale)? / n as f64);
    let mut out = bisect_decreasing(f, search, tol_abs)?;
    out.apriori = Some(apriori);
    Ok(out)
}
