//! The recursion quantity Q(r): the partition sum over length-r prefixes
//! whose last symbol lies in A_0, closed with the forced violation that the
//! fixed successor map creates at position r. Shares the DP of
//! `partition.rs`; only the terminal closure differs.

use crate::error::{Error, Result};
use crate::logdomain::log_add;
use crate::pressure::partition::run_dp;
use crate::roof::RoofSpec;

/// log Q(r). The value never depends on which valid successor map the spec
/// carries; the map only fixes the maximizing tails.
pub fn q_value_log(spec: &RoofSpec, r: usize, scale: f64) -> Result<f64> {
    if r == 0 {
        return Err(Error::EmptyWord);
    }
    let mut out = f64::NEG_INFINITY;
    run_dp(spec, r, scale, |p, states| {
        if p == r {
            out = close_q(spec, states, scale)?;
        }
        Ok(())
    })?;
    Ok(out)
}

/// Q(r) itself; 0 when A_0 is empty.
pub fn q_value(spec: &RoofSpec, r: usize, scale: f64) -> Result<f64> {
    Ok(q_value_log(spec, r, scale)?.exp())
}

fn close_q(spec: &RoofSpec, states: &[Vec<f64>], scale: f64) -> Result<f64> {
    let mut acc = f64::NEG_INFINITY;
    for (s, row) in states.iter().enumerate() {
        if spec.beta()[s].is_none() {
            continue;
        }
        for (idx, &w) in row.iter().enumerate() {
            if w == f64::NEG_INFINITY {
                continue;
            }
            acc = log_add(acc, w + scale * (-spec.prefix_a(idx + 1)?));
        }
    }
    if acc.is_nan() {
        return Err(Error::NonFiniteWeight);
    }
    Ok(acc)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct QRow {
    pub r: usize,
    pub log_q: f64,
    pub q: f64,
    /// Right side of the recursion bound
    /// sum_{s=2..r} exp(-c sqrt(s)) + (1/2) max_{s<r} Q(s); 1 for r = 1
    /// where the recursion does not apply.
    pub recursion_rhs: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct QTable {
    pub scale: f64,
    pub c: f64,
    pub rows: Vec<QRow>,
}

/// Q(r) for r = 1..=r_max in one DP sweep.
pub fn q_table(spec: &RoofSpec, r_max: usize, scale: f64) -> Result<QTable> {
    if r_max == 0 {
        return Err(Error::EmptyWord);
    }
    let c = spec.c();
    let mut rows: Vec<QRow> = Vec::with_capacity(r_max);
    let mut series = 0.0;
    let mut q_sup = 0.0f64;
    run_dp(spec, r_max, scale, |p, states| {
        let log_q = close_q(spec, states, scale)?;
        let q = log_q.exp();
        let recursion_rhs = if p == 1 {
            1.0
        } else {
            series += (-c * (p as f64).sqrt()).exp();
            series + 0.5 * q_sup
        };
        q_sup = q_sup.max(q);
        rows.push(QRow {
            r: p,
            log_q,
            q,
            recursion_rhs,
        });
        Ok(())
    })?;
    Ok(QTable { scale, c, rows })
}

/// Upper bound on the full series sum_{s=2..infinity} exp(-c sqrt(s)):
/// partial sum plus the integral tail 2 (c sqrt(S) + 1) exp(-c sqrt(S))/c^2.
pub fn sqrt_series_bound(c: f64) -> f64 {
    let cutoff = 1000usize;
    let mut sum = 0.0;
    for s in 2..=cutoff {
        sum += (-c * (s as f64).sqrt()).exp();
    }
    let root = (cutoff as f64).sqrt();
    sum + 2.0 * (c * root + 1.0) * (-c * root).exp() / (c * c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pressure::oracle::{naive_q_value, naive_q_value_with_beta};
    use crate::roof::{build_roof, BuildOptions};
    use crate::sft::{Alphabet, Sft, TransitionMatrix, Word};

    fn golden_spec() -> RoofSpec {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1])]).unwrap();
        build_roof(&sft, BuildOptions::default()).unwrap()
    }

    #[test]
    fn q1_closed_form() {
        let spec = golden_spec();
        // A_0 = {1}: Q(1) = exp(-a_1) = exp(-c) / |L_1|
        let expect = (-2.5f64).exp() / 2.0;
        let q = q_value(&spec, 1, 1.0).unwrap();
        assert!((q - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn full_target_has_zero_q() {
        let sft = Sft::from_matrix(TransitionMatrix::full(2).unwrap());
        let spec = build_roof(&sft, BuildOptions::default()).unwrap();
        assert_eq!(q_value(&spec, 3, 1.0).unwrap(), 0.0);
        assert_eq!(q_value_log(&spec, 3, 1.0).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn dp_matches_naive_enumeration() {
        let spec = golden_spec();
        for r in 1..=10 {
            let dp = q_value(&spec, r, 1.0).unwrap();
            let naive = naive_q_value(&spec, r, 1.0).unwrap();
            assert!(
                (dp - naive).abs() <= 1e-12 * naive.max(1e-300),
                "r = {r}: {dp} vs {naive}"
            );
        }
    }

    #[test]
    fn dp_matches_naive_with_dead_symbols() {
        let m =
            TransitionMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]).unwrap();
        let spec = build_roof(&Sft::from_matrix(m), BuildOptions::default()).unwrap();
        for r in 1..=8 {
            let dp = q_value(&spec, r, 1.0).unwrap();
            let naive = naive_q_value(&spec, r, 1.0).unwrap();
            assert!((dp - naive).abs() <= 1e-12 * naive.max(1e-300), "r = {r}");
        }
    }

    #[test]
    fn q_stays_below_one_and_respects_recursion() {
        let spec = golden_spec();
        let table = q_table(&spec, 80, 1.0).unwrap();
        assert_eq!(table.rows.len(), 80);
        for row in &table.rows {
            assert!(row.q < 1.0, "r = {}", row.r);
            assert!(row.log_q < 0.0);
            if row.r >= 2 {
                assert!(row.q <= row.recursion_rhs + 1e-15, "r = {}", row.r);
            }
        }
        // table agrees with one-shot values
        for r in [1usize, 7, 33, 80] {
            let q = q_value(&spec, r, 1.0).unwrap();
            assert_eq!(q, table.rows[r - 1].q);
        }
    }

    #[test]
    fn series_bound_is_small_for_admissible_constants() {
        // with c >= 2 the tail series stays below 1/2
        assert!(sqrt_series_bound(2.0) < 0.5);
        assert!(sqrt_series_bound(2.5) < 0.5);
        // sanity: bound dominates a straight partial sum
        let partial: f64 = (2..500).map(|s| (-2.0 * (s as f64).sqrt()).exp()).sum();
        assert!(sqrt_series_bound(2.0) >= partial);
    }

    #[test]
    fn beta_choice_does_not_move_q() {
        // two-component example: every symbol has two valid successors
        let rows = vec![
            vec![1, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1],
        ];
        let sft = Sft::from_matrix(TransitionMatrix::from_rows(&rows).unwrap());
        let spec = build_roof(&sft, BuildOptions::default()).unwrap();
        let choices: Vec<Vec<usize>> = (0..4)
            .map(|i| {
                (0..4)
                    .filter(|&j| spec.ambient().get(i, j) && !spec.target().get(i, j))
                    .collect()
            })
            .collect();
        assert!(choices.iter().all(|c| c.len() == 2));
        for r in 1..=6 {
            let reference = naive_q_value(&spec, r, 1.0).unwrap();
            for combo in 0..16usize {
                let beta: Vec<Option<usize>> =
                    (0..4).map(|i| Some(choices[i][(combo >> i) & 1])).collect();
                let got = naive_q_value_with_beta(&spec, r, 1.0, &beta).unwrap();
                assert!(
                    (got - reference).abs() <= 1e-12 * reference.max(1e-300),
                    "r = {r}, combo = {combo}"
                );
                let respec = spec.with_beta(beta).unwrap();
                let dp = q_value(&respec, r, 1.0).unwrap();
                assert!((dp - reference).abs() <= 1e-12 * reference.max(1e-300));
            }
        }
    }
}
