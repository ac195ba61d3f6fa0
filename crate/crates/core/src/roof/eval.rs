//! Evaluation of the potential g and the roof rho = -g on finite words.
//!
//! On a word with a visible violation the value is exact. On a fully
//! admissible word the cylinder still contains points of the target and
//! points that break away later, so the evaluation returns a certified
//! interval computed from the tail of the a_j table.

use crate::error::{Error, Result};
use crate::roof::RoofSpec;
use crate::sft::{TransitionMatrix, Word};

/// Result of evaluating g or rho on the cylinder of a finite word.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialEval {
    /// A violation is visible at `position`; the function is constant on the
    /// cylinder and `value` is exact.
    Violation { position: usize, value: f64 },
    /// The word is admissible to `depth` = len - 1; the function ranges over
    /// `[lower, upper]` on the cylinder.
    AdmissiblePrefix {
        depth: usize,
        lower: f64,
        upper: f64,
    },
}

impl PotentialEval {
    pub fn lower(&self) -> f64 {
        match *self {
            PotentialEval::Violation { value, .. } => value,
            PotentialEval::AdmissiblePrefix { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> f64 {
        match *self {
            PotentialEval::Violation { value, .. } => value,
            PotentialEval::AdmissiblePrefix { upper, .. } => upper,
        }
    }
}

/// Position of the first break from the target inside `w`: the least t with
/// A(w_t, w_{t+1}) = 0, or len(w) when the final symbol has an all-zero
/// target row (every continuation is then forced to violate immediately).
/// None means the word is target-admissible and extendable.
pub fn first_violation(target: &TransitionMatrix, w: &Word) -> Result<Option<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    for &s in w.symbols() {
        if s >= target.size() {
            return Err(Error::SymbolOutOfRange {
                symbol: s,
                alphabet: target.size(),
            });
        }
    }
    Ok(first_violation_scan(target, w.symbols()))
}

pub(crate) fn first_violation_scan(target: &TransitionMatrix, symbols: &[usize]) -> Option<usize> {
    let n = symbols.len();
    for t in 1..n {
        if !target.get(symbols[t - 1], symbols[t]) {
            return Some(t);
        }
    }
    if !target.row_has_one(symbols[n - 1]) {
        return Some(n);
    }
    None
}

/// All violation positions of a word, in increasing order, including the
/// forced final violation when the word ends in a dead symbol.
pub(crate) fn violation_positions(target: &TransitionMatrix, symbols: &[usize]) -> Vec<usize> {
    let n = symbols.len();
    let mut out = Vec::new();
    for t in 1..n {
        if !target.get(symbols[t - 1], symbols[t]) {
            out.push(t);
        }
    }
    if !target.row_has_one(symbols[n - 1]) {
        out.push(n);
    }
    out
}

/// Evaluate g on the cylinder of `w`: exactly -a_t when a violation is
/// visible at t, otherwise the interval [-max_{j > m} a_j, -h(Y)] at depth
/// m = len(w) - 1.
pub fn g_eval(spec: &RoofSpec, w: &Word) -> Result<PotentialEval> {
    match first_violation(spec.target(), w)? {
        Some(t) => Ok(PotentialEval::Violation {
            position: t,
            value: -spec.a_value(t)?,
        }),
        None => {
            let depth = w.len() - 1;
            Ok(PotentialEval::AdmissiblePrefix {
                depth,
                lower: -spec.tail_sup(depth)?,
                upper: -spec.h_y(),
            })
        }
    }
}

/// Evaluate the roof rho = -g on the forward coordinates of a two-sided
/// point. Exact value a_t at a visible violation, otherwise the interval
/// [h(Y), max_{j > m} a_j].
pub fn roof_eval(spec: &RoofSpec, forward: &Word) -> Result<PotentialEval> {
    match g_eval(spec, forward)? {
        PotentialEval::Violation { position, value } => Ok(PotentialEval::Violation {
            position,
            value: -value,
        }),
        PotentialEval::AdmissiblePrefix {
            depth,
            lower,
            upper,
        } => Ok(PotentialEval::AdmissiblePrefix {
            depth,
            lower: -upper,
            upper: -lower,
        }),
    }
}

/// The successor map used to close partition-sum prefixes: for every symbol
/// i that has an ambient-admissible successor outside the target (the set
/// A_0), pick the least such successor. Symbols outside A_0 map to None.
pub fn compute_beta(ambient: &TransitionMatrix, target: &TransitionMatrix) -> Vec<Option<usize>> {
    let d = ambient.size();
    (0..d)
        .map(|i| (0..d).find(|&j| ambient.get(i, j) && !target.get(i, j)))
        .collect()
}
