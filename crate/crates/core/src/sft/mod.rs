//! Subshifts of finite type over a finite alphabet: words, transition
//! matrices, language counting, spectral data, irreducible components,
//! Parry measures, and higher-block recoding.

mod components;
mod language;
mod matrix;
mod parry;
mod recode;
mod spectral;

pub use components::{irreducible_components, is_irreducible, strongly_connected, SftComponent};
pub use language::{LanguageTable, DEFAULT_EXACT_LIMIT};
pub use matrix::TransitionMatrix;
pub use parry::{measure_entropy, parry_measure, ParryMeasure};
pub use recode::{higher_block_recode, Recoded, RECODE_LIMIT};
pub use spectral::{entropy_spectral, SpectralData, POWER_MAX_ITERATIONS, POWER_TOLERANCE};

use crate::error::{Error, Result};

/// Alphabet of `size` contiguous symbols 0..size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, symbol: usize) -> bool {
        symbol < self.size
    }
}

/// Finite word over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(symbols: Vec<usize>) -> Self {
        Word(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        for &s in &self.0 {
            if !alphabet.contains(s) {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    alphabet: alphabet.size(),
                });
            }
        }
        Ok(())
    }

    /// True when `other` occurs in `self` as a contiguous block.
    pub fn contains_subword(&self, other: &Word) -> bool {
        if other.is_empty() || other.len() > self.len() {
            return other.is_empty();
        }
        self.0.windows(other.len()).any(|w| w == other.symbols())
    }
}

impl From<&[usize]> for Word {
    fn from(symbols: &[usize]) -> Self {
        Word(symbols.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Word {
    fn from(symbols: [usize; N]) -> Self {
        Word(symbols.to_vec())
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.iter().all(|&s| s < 10) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join("-"))
        }
    }
}

/// How the shift space is described.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SftKind {
    /// 1-step shift given by a transition matrix.
    Matrix(TransitionMatrix),
    /// M-step shift given by forbidden words, all of length `step + 1`.
    Forbidden { step: usize, words: Vec<Word> },
}

/// Subshift of finite type inside the full shift on its alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sft {
    alphabet: Alphabet,
    kind: SftKind,
}

impl Sft {
    pub fn from_matrix(matrix: TransitionMatrix) -> Sft {
        let alphabet = Alphabet {
            size: matrix.size(),
        };
        Sft {
            alphabet,
            kind: SftKind::Matrix(matrix),
        }
    }

    /// Build an SFT from a finite set of forbidden words. The step is one
    /// less than the longest forbidden word (at least 1) and the stored
    /// forbidden set is normalized to uniform length step + 1: a word of that
    /// length is forbidden exactly when it contains one of the inputs.
    pub fn from_forbidden_words(alphabet: Alphabet, forbidden: &[Word]) -> Result<Sft> {
        for w in forbidden {
            if w.is_empty() {
                return Err(Error::EmptyForbiddenWord);
            }
            w.validate(&alphabet)?;
        }
        let max_len = forbidden.iter().map(Word::len).max().unwrap_or(2);
        let step = max_len.saturating_sub(1).max(1);
        let words = normalize_forbidden(&alphabet, forbidden, step)?;
        Ok(Sft {
            alphabet,
            kind: SftKind::Forbidden { step, words },
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn kind(&self) -> &SftKind {
        &self.kind
    }

    pub fn step(&self) -> usize {
        match &self.kind {
            SftKind::Matrix(_) => 1,
            SftKind::Forbidden { step, .. } => *step,
        }
    }

    /// Normalized forbidden words (empty for the matrix form).
    pub fn forbidden_words(&self) -> &[Word] {
        match &self.kind {
            SftKind::Matrix(_) => &[],
            SftKind::Forbidden { words, .. } => words,
        }
    }

    /// Transition matrix of a 1-step SFT: entry (i, j) is 0 exactly when the
    /// pair (i, j) is forbidden.
    pub fn to_matrix(&self) -> Result<TransitionMatrix> {
        match &self.kind {
            SftKind::Matrix(m) => Ok(m.clone()),
            SftKind::Forbidden { step: 1, words } => {
                let mut m = TransitionMatrix::full(self.alphabet.size())?;
                for w in words {
                    m.set(w.symbols()[0], w.symbols()[1], false);
                }
                Ok(m)
            }
            SftKind::Forbidden { step, .. } => Err(Error::NotOneStep { step: *step }),
        }
    }

    /// Number of admissible words of length n; see [`LanguageTable`].
    pub fn language_count(&self, n: usize) -> Result<num_bigint::BigUint> {
        let table = self.language_table(n, n)?;
        table.count(n).cloned().ok_or(Error::CapacityExceeded {
            requested: n,
            capacity: n,
        })
    }

    pub fn language_table(&self, n_max: usize, exact_limit: usize) -> Result<LanguageTable> {
        LanguageTable::for_sft(self, n_max, exact_limit)
    }
}

fn normalize_forbidden(alphabet: &Alphabet, forbidden: &[Word], step: usize) -> Result<Vec<Word>> {
    if forbidden.is_empty() {
        return Ok(Vec::new());
    }
    let d = alphabet.size();
    let len = step + 1;
    let total = d
        .checked_pow(len as u32)
        .filter(|&t| t <= recode::RECODE_LIMIT);
    let Some(total) = total else {
        return Err(Error::RecodeTooLarge {
            blocks: usize::MAX,
            limit: recode::RECODE_LIMIT,
        });
    };
    let mut words = Vec::new();
    let mut buf = vec![0usize; len];
    for code in 0..total {
        let mut c = code;
        for slot in buf.iter_mut().rev() {
            *slot = c % d;
            c /= d;
        }
        let w = Word::new(buf.clone());
        if forbidden.iter().any(|f| w.contains_subword(f)) {
            words.push(w);
        }
    }
    Ok(words)
}
