//! The a_j table behind the potential: a_j = (1/n) log |L_n(Y)| + c / sqrt(j)
//! where block n covers the n consecutive indices n(n-1)/2 < j <= n(n+1)/2
//! (block 1 = {1}, block 2 = {2, 3}, block 3 = {4, 5, 6}, ...). This block
//! convention makes the partial sums telescope exactly:
//! sum_{j<=s} a_j = sum_{m<n} log |L_m| + (k/n) log |L_n| + c sum_{j<=s} 1/sqrt(j)
//! for s = n(n-1)/2 + k with 1 <= k <= n.

use crate::error::{Error, Result};
use crate::sft::LanguageTable;

/// Block containing index j (1-based).
pub fn block_index(j: usize) -> usize {
    debug_assert!(j >= 1);
    let mut n = (((8.0 * j as f64 + 1.0).sqrt() - 1.0) / 2.0).ceil() as usize;
    n = n.max(1);
    while n * (n + 1) / 2 < j {
        n += 1;
    }
    while n > 1 && (n - 1) * n / 2 >= j {
        n -= 1;
    }
    n
}

/// First index of block n.
pub fn block_start(n: usize) -> usize {
    n * (n - 1) / 2 + 1
}

/// Last index of block n.
pub fn block_end(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Precomputed a_j values with prefix sums and suffix maxima.
#[derive(Debug, Clone)]
pub struct AjTable {
    c: f64,
    values: Vec<f64>,
    prefix: Vec<f64>,
    tail_max: Vec<f64>,
    base: Vec<f64>,
}

impl AjTable {
    /// Build values for j = 1..=j_max from a language table that covers at
    /// least `block_index(j_max)` lengths.
    pub fn new(lang: &LanguageTable, c: f64, j_max: usize) -> Result<AjTable> {
        let blocks = block_index(j_max.max(1));
        if lang.len() < blocks {
            return Err(Error::CapacityExceeded {
                requested: blocks,
                capacity: lang.len(),
            });
        }
        let base: Vec<f64> = (1..=blocks).map(|n| lang.log_count(n) / n as f64).collect();
        let mut values = Vec::with_capacity(j_max);
        for j in 1..=j_max {
            values.push(base[block_index(j) - 1] + c / (j as f64).sqrt());
        }
        let mut prefix = Vec::with_capacity(j_max + 1);
        prefix.push(0.0);
        for &v in &values {
            prefix.push(prefix.last().unwrap() + v);
        }
        let mut tail_max = vec![f64::NEG_INFINITY; j_max];
        let mut running = f64::NEG_INFINITY;
        for m in (0..j_max).rev() {
            running = running.max(values[m]);
            tail_max[m] = running;
        }
        Ok(AjTable {
            c,
            values,
            prefix,
            tail_max,
            base,
        })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn j_max(&self) -> usize {
        self.values.len()
    }

    pub fn a1(&self) -> f64 {
        self.values[0]
    }

    /// a_j for j within the table.
    pub fn value(&self, j: usize) -> Result<f64> {
        if j == 0 || j > self.values.len() {
            return Err(Error::CapacityExceeded {
                requested: j,
                capacity: self.values.len(),
            });
        }
        Ok(self.values[j - 1])
    }

    /// sum_{j <= s} a_j, s = 0 allowed.
    pub fn prefix_sum(&self, s: usize) -> Result<f64> {
        self.prefix.get(s).copied().ok_or(Error::CapacityExceeded {
            requested: s,
            capacity: self.values.len(),
        })
    }

    /// max of a_j over the tabulated indices j > m; requires m < j_max.
    pub fn tail_max(&self, m: usize) -> Result<f64> {
        self.tail_max
            .get(m)
            .copied()
            .ok_or(Error::CapacityExceeded {
                requested: m,
                capacity: self.values.len().saturating_sub(1),
            })
    }

    /// (1/n) log |L_n| for blocks covered by the table.
    pub fn block_base(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.base.len() {
            return Err(Error::CapacityExceeded {
                requested: n,
                capacity: self.base.len(),
            });
        }
        Ok(self.base[n - 1])
    }

    pub fn blocks(&self) -> usize {
        self.base.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sft::TransitionMatrix;

    #[test]
    fn block_layout() {
        assert_eq!(block_index(1), 1);
        assert_eq!(block_index(2), 2);
        assert_eq!(block_index(3), 2);
        assert_eq!(block_index(4), 3);
        assert_eq!(block_index(6), 3);
        assert_eq!(block_index(7), 4);
        assert_eq!(block_index(10), 4);
        assert_eq!(block_index(11), 5);
        // block n holds exactly n consecutive indices
        for n in 1..60 {
            assert_eq!(block_end(n) - block_start(n) + 1, n);
            for j in block_start(n)..=block_end(n) {
                assert_eq!(block_index(j), n, "j = {j}");
            }
        }
    }

    fn golden_table(c: f64, j_max: usize) -> AjTable {
        let m = TransitionMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        let lang = crate::sft::LanguageTable::for_matrix(&m, 64, 300);
        AjTable::new(&lang, c, j_max).unwrap()
    }

    #[test]
    fn golden_mean_values() {
        let t = golden_table(2.5, 210);
        // independent formulas: counts 2, 3, 5 were verified against
        // enumeration in the language tests
        let a1 = 2f64.ln() + 2.5;
        let a2 = 3f64.ln() / 2.0 + 2.5 / 2f64.sqrt();
        let a4 = 5f64.ln() / 3.0 + 2.5 / 2.0;
        assert!((t.value(1).unwrap() - a1).abs() < 1e-14);
        assert!((t.value(2).unwrap() - a2).abs() < 1e-14);
        assert!((t.value(4).unwrap() - a4).abs() < 1e-14);
    }

    #[test]
    fn values_stay_between_entropy_and_a1() {
        let t = golden_table(2.5, 210);
        let h = ((1.0 + 5f64.sqrt()) / 2.0).ln();
        for j in 1..=210 {
            let a = t.value(j).unwrap();
            assert!(a >= h, "a_{j} below entropy");
            assert!(a <= t.a1() + 1e-15, "a_{j} above a_1");
        }
    }

    #[test]
    fn prefix_and_tail_accessors() {
        let t = golden_table(2.5, 50);
        let mut acc = 0.0;
        for s in 1..=50 {
            acc += t.value(s).unwrap();
            assert!((t.prefix_sum(s).unwrap() - acc).abs() < 1e-12);
        }
        for m in 0..49 {
            assert!(t.tail_max(m).unwrap() >= t.tail_max(m + 1).unwrap());
            assert!(t.tail_max(m).unwrap() >= t.value(m + 1).unwrap());
        }
        assert!(t.value(0).is_err());
        assert!(t.value(51).is_err());
        assert!(t.tail_max(50).is_err());
    }
}
