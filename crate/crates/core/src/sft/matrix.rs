//! 0/1 transition matrices for 1-step subshifts of finite type.

use crate::error::{Error, Result};

/// Square 0/1 matrix. Entry (i, j) = 1 means symbol j may follow symbol i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    size: usize,
    bits: Vec<bool>,
}

impl TransitionMatrix {
    pub fn zero(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self {
            size,
            bits: vec![false; size * size],
        })
    }

    /// All-ones matrix: the full shift on `size` symbols.
    pub fn full(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self {
            size,
            bits: vec![true; size * size],
        })
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let mut bits = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::MalformedMatrix);
            }
            for &e in row {
                match e {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    _ => return Err(Error::MalformedMatrix),
                }
            }
        }
        Ok(Self { size, bits })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.size + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }

    pub fn row_has_one(&self, i: usize) -> bool {
        (0..self.size).any(|j| self.get(i, j))
    }

    /// Symbols whose row contains a 1. For an essential matrix these are
    /// exactly the symbols that occur in the subshift.
    pub fn live_symbols(&self) -> Vec<usize> {
        (0..self.size).filter(|&i| self.row_has_one(i)).collect()
    }

    pub fn is_empty_shift(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn transpose(&self) -> TransitionMatrix {
        let mut t = TransitionMatrix {
            size: self.size,
            bits: vec![false; self.size * self.size],
        };
        for i in 0..self.size {
            for j in 0..self.size {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Entrywise comparison; true when every 1 of `self` is a 1 of `other`.
    pub fn entrywise_le(&self, other: &TransitionMatrix) -> bool {
        self.size == other.size
            && self
                .bits
                .iter()
                .zip(other.bits.iter())
                .all(|(a, b)| !*a || *b)
    }

    /// Every edge leads to a symbol that has an outgoing edge.
    pub fn is_essential(&self) -> bool {
        for i in 0..self.size {
            for j in 0..self.size {
                if self.get(i, j) && !self.row_has_one(j) {
                    return false;
                }
            }
        }
        true
    }

    /// Iteratively remove edges into symbols with an all-zero row until a
    /// fixed point. The result presents the same shift space and satisfies
    /// `is_essential`. An all-zero result means the shift is empty.
    pub fn essentialize(&self) -> TransitionMatrix {
        let mut m = self.clone();
        loop {
            let mut changed = false;
            for j in 0..m.size {
                if m.row_has_one(j) {
                    continue;
                }
                for i in 0..m.size {
                    if m.get(i, j) {
                        m.set(i, j, false);
                        changed = true;
                    }
                }
            }
            if !changed {
                return m;
            }
        }
    }

    /// Restriction to a subset of symbols, relabelled 0..k in the order given.
    pub fn restrict(&self, symbols: &[usize]) -> Result<TransitionMatrix> {
        let mut m = TransitionMatrix::zero(symbols.len())?;
        for (a, &i) in symbols.iter().enumerate() {
            for (b, &j) in symbols.iter().enumerate() {
                if self.get(i, j) {
                    m.set(a, b, true);
                }
            }
        }
        Ok(m)
    }
}
