//! Exact and log-domain word counting for subshifts of finite type.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::logdomain::{big_ln, log_sum_exp};
use crate::sft::{higher_block_recode, Sft, SftKind, TransitionMatrix};

/// Word counts are kept as exact big integers up to this length by default;
/// longer entries switch to extended-precision logs. Partition sums only need
/// the logs, exact counts feed the oracle tests.
pub const DEFAULT_EXACT_LIMIT: usize = 300;

/// Per-length data about the language of a subshift: exact counts, natural
/// logs of the counts, and the running entropy estimate inf over computed n
/// of (1/n) log |L_n|.
#[derive(Debug, Clone)]
pub struct LanguageTable {
    log_counts: Vec<f64>,
    exact: Vec<BigUint>,
    entropy_estimate: f64,
}

impl LanguageTable {
    /// Counts for the 1-step shift of a transition matrix. The matrix is
    /// essentialized first, so the counts are invariant under
    /// essentialization and describe the words that actually occur.
    pub fn for_matrix(
        matrix: &TransitionMatrix,
        n_max: usize,
        exact_limit: usize,
    ) -> LanguageTable {
        let a = matrix.essentialize();
        let d = a.size();
        let live = a.live_symbols();
        let exact_len = n_max.min(exact_limit.max(1));

        let mut exact: Vec<BigUint> = Vec::with_capacity(exact_len);
        let mut log_counts: Vec<f64> = Vec::with_capacity(n_max);
        if n_max >= 1 {
            let c1 = BigUint::from(live.len());
            log_counts.push(big_ln(&c1));
            exact.push(c1);
        }

        // u[i] = number of admissible words of the current length starting at i
        let mut u: Vec<BigUint> = vec![BigUint::from(1u32); d];
        let mut n = 2;
        while n <= exact_len {
            let mut next = vec![BigUint::from(0u32); d];
            for i in 0..d {
                for j in 0..d {
                    if a.get(i, j) {
                        next[i] += &u[j];
                    }
                }
            }
            u = next;
            let total: BigUint = u.iter().sum();
            log_counts.push(big_ln(&total));
            exact.push(total);
            n += 1;
        }

        if n <= n_max {
            // continue in the log domain from the exact boundary
            let mut lu: Vec<f64> = u.iter().map(big_ln).collect();
            let mut buf = Vec::with_capacity(d);
            while n <= n_max {
                let mut next = vec![f64::NEG_INFINITY; d];
                for i in 0..d {
                    buf.clear();
                    for j in 0..d {
                        if a.get(i, j) {
                            buf.push(lu[j]);
                        }
                    }
                    next[i] = log_sum_exp(&buf);
                }
                lu = next;
                log_counts.push(log_sum_exp(&lu));
                n += 1;
            }
        }

        let entropy_estimate = log_counts
            .iter()
            .enumerate()
            .map(|(i, &l)| l / (i + 1) as f64)
            .fold(f64::INFINITY, f64::min);
        LanguageTable {
            log_counts,
            exact,
            entropy_estimate,
        }
    }

    /// Counts for any SFT. M-step presentations are recoded to 1-step via the
    /// higher block map; lengths below M count distinct prefixes of the live
    /// blocks.
    pub fn for_sft(sft: &Sft, n_max: usize, exact_limit: usize) -> Result<LanguageTable> {
        match sft.kind() {
            SftKind::Matrix(m) => Ok(Self::for_matrix(m, n_max, exact_limit)),
            SftKind::Forbidden { step: 1, .. } => {
                Ok(Self::for_matrix(&sft.to_matrix()?, n_max, exact_limit))
            }
            SftKind::Forbidden { step, .. } => {
                let m = *step;
                let recoded = higher_block_recode(sft)?;
                let target = &recoded.target;
                let live = target.live_symbols();
                let mut exact: Vec<BigUint> = Vec::new();
                let mut log_counts: Vec<f64> = Vec::new();
                // short words are the distinct prefixes of the live blocks
                for n in 1..=n_max.min(m - 1) {
                    let prefixes: BTreeSet<&[usize]> = live
                        .iter()
                        .map(|&b| &recoded.blocks[b].symbols()[..n])
                        .collect();
                    let c = BigUint::from(prefixes.len());
                    log_counts.push(big_ln(&c));
                    if n <= exact_limit {
                        exact.push(c);
                    }
                }
                if n_max >= m {
                    let inner_max = n_max - m + 1;
                    let inner_exact = exact_limit.saturating_sub(m - 1);
                    let inner = Self::for_matrix(target, inner_max, inner_exact.max(1));
                    for n in m..=n_max {
                        let k = n - m + 1;
                        log_counts.push(inner.log_count(k));
                        if n <= exact_limit {
                            if let Some(c) = inner.count(k) {
                                exact.push(c.clone());
                            }
                        }
                    }
                }
                let entropy_estimate = log_counts
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| l / (i + 1) as f64)
                    .fold(f64::INFINITY, f64::min);
                Ok(LanguageTable {
                    log_counts,
                    exact,
                    entropy_estimate,
                })
            }
        }
    }

    pub fn len(&self) -> usize {
        self.log_counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log_counts.is_empty()
    }

    /// Exact count of admissible words of length n, when within the exact range.
    pub fn count(&self, n: usize) -> Option<&BigUint> {
        if n == 0 {
            return None;
        }
        self.exact.get(n - 1)
    }

    /// log |L_n|; panics if n is out of the computed range.
    pub fn log_count(&self, n: usize) -> f64 {
        self.log_counts[n - 1]
    }

    pub fn try_log_count(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.log_counts.len() {
            return Err(Error::CapacityExceeded {
                requested: n,
                capacity: self.log_counts.len(),
            });
        }
        Ok(self.log_counts[n - 1])
    }

    /// inf over computed n of (1/n) log |L_n|.
    pub fn entropy_estimate(&self) -> f64 {
        self.entropy_estimate
    }

    /// |L_n| / lambda^n for n = 1..=limit.
    pub fn ratios(&self, lambda: f64, limit: usize) -> Vec<f64> {
        let log_lambda = lambda.ln();
        (1..=limit.min(self.len()))
            .map(|n| (self.log_count(n) - n as f64 * log_lambda).exp())
            .collect()
    }

    /// Empirical Perron constants (C1, C2): min and max of |L_n| / lambda^n
    /// over the computed range up to `limit`.
    pub fn perron_constants(&self, lambda: f64, limit: usize) -> (f64, f64) {
        let ratios = self.ratios(lambda, limit);
        let c1 = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let c2 = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (c1, c2)
    }
}
