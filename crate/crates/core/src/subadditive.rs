//! Sub-additive sequences and the combinatorial inequality
//! n (b_1 + ... + b_(n-1)) + k b_n >= n b_(1+...+(n-1)+k) for k <= n,
//! with a seeded generator and an exact integer mode for the tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Relative tolerance for real-valued comparisons; the inequality itself is
/// exact, the slack only absorbs float roundoff.
pub const REL_TOL: f64 = 1e-12;

/// Finite real sequence b_1..b_N with b_(i+j) <= b_i + b_j, checked on
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SubadditiveSeq {
    values: Vec<f64>,
}

impl SubadditiveSeq {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some((i, j)) = check_subadditive(&values) {
            return Err(Error::NotSubadditive { i, j });
        }
        Ok(SubadditiveSeq { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> Result<f64> {
        if i == 0 || i > self.values.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.values.len(),
            });
        }
        Ok(self.values[i - 1])
    }
}

/// Exhaustive pairwise check; None means sub-additive, otherwise the first
/// violating pair (i, j) in lexicographic order.
pub fn check_subadditive(values: &[f64]) -> Option<(usize, usize)> {
    let n = values.len();
    for i in 1..=n {
        for j in i..=n {
            if i + j > n {
                break;
            }
            let lhs = values[i + j - 1];
            let rhs = values[i - 1] + values[j - 1];
            if lhs > rhs + REL_TOL * rhs.abs().max(1.0) {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluate both sides of the inequality for a given (n, k) with k <= n:
/// lhs = n (b_1 + ... + b_(n-1)) + k b_n, rhs = n b_(n(n-1)/2 + k).
pub fn lemma_inequality(seq: &SubadditiveSeq, n: usize, k: usize) -> Result<LemmaCheck> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let s = n * (n - 1) / 2 + k;
    let target = seq.get(s)?;
    let mut head = 0.0;
    for i in 1..n {
        head += seq.get(i)?;
    }
    let lhs = n as f64 * head + k as f64 * seq.get(n)?;
    let rhs = n as f64 * target;
    let holds = lhs >= rhs - REL_TOL * lhs.abs().max(1.0);
    Ok(LemmaCheck { lhs, rhs, holds })
}

/// Exact integer mode of the same inequality.
pub fn lemma_inequality_exact(values: &[i64], n: usize, k: usize) -> Result<(i128, i128, bool)> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let s = n * (n - 1) / 2 + k;
    if s > values.len() {
        return Err(Error::IndexOutOfRange {
            index: s,
            len: values.len(),
        });
    }
    let head: i128 = values[..n - 1].iter().map(|&v| v as i128).sum();
    let lhs = n as i128 * head + k as i128 * values[n - 1] as i128;
    let rhs = n as i128 * values[s - 1] as i128;
    Ok((lhs, rhs, lhs >= rhs))
}

/// Deterministic sub-additive sequence from a seed: draw positive candidates
/// c_n and clamp b_n = min(c_n + n c_1, min_{i<n}(b_i + b_(n-i))), which is
/// sub-additive by construction.
pub fn random_subadditive(len: usize, seed: u64) -> SubadditiveSeq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<f64> = Vec::with_capacity(len);
    for n in 1..=len {
        let c: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
        if n == 1 {
            values.push(c);
            continue;
        }
        let mut b = c + n as f64 * values[0];
        for i in 1..n {
            b = b.min(values[i - 1] + values[n - i - 1]);
        }
        values.push(b);
    }
    SubadditiveSeq { values }
}
