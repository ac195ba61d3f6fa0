//! Construction of the explicit roof function over a full shift from a
//! positive-entropy SFT target.
//!
//! `build_roof` essentializes the target, recodes M-step presentations to
//! 1-step through the higher block map (the ambient full shift becomes the
//! overlap shift), assembles the a_j table from the target's word counts,
//! and fixes the successor map used by the partition-sum closures. The
//! resulting [`RoofSpec`] is immutable and every evaluation on it is pure.

pub mod aj;
pub mod eval;

pub use aj::{block_end, block_index, block_start, AjTable};
pub use eval::{compute_beta, first_violation, g_eval, roof_eval, PotentialEval};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sft::{
    entropy_spectral, higher_block_recode, LanguageTable, Sft, SpectralData, TransitionMatrix,
    Word, DEFAULT_EXACT_LIMIT,
};

/// Lower bound the roof constant must exceed: max(2, log of the ambient
/// alphabet size).
pub fn min_c(ambient_alphabet: usize) -> f64 {
    2f64.max((ambient_alphabet as f64).ln())
}

/// Default roof constant: the required lower bound plus 1/2.
pub fn default_c(ambient_alphabet: usize) -> f64 {
    min_c(ambient_alphabet) + 0.5
}

/// Knobs for [`build_roof`]. `j_capacity` is the largest index the a_j
/// table must serve (word lengths in partition sums and recursion depths);
/// `language_len` the number of word counts kept for reporting and bounds.
#[derive(Debug, Clone)]
pub struct BuildOptions {
    pub c: Option<f64>,
    pub alpha: f64,
    pub j_capacity: usize,
    pub language_len: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions::for_limits(60, 200, 200)
    }
}

impl BuildOptions {
    /// Size the tables for partition sums up to `n_max`, recursion depths up
    /// to `r_max`, and roof-integral truncation up to `m_max`.
    pub fn for_limits(n_max: usize, r_max: usize, m_max: usize) -> Self {
        let j_capacity = n_max.max(r_max).max(m_max).max(1);
        BuildOptions {
            c: None,
            alpha: 0.5,
            j_capacity,
            language_len: (n_max + 10).max(r_max.min(300)).max(60),
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = Some(c);
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }
}

/// Recoding data kept when the target came from an M-step presentation.
#[derive(Debug, Clone)]
pub struct RecodeData {
    pub step: usize,
    pub base_alphabet: usize,
    pub blocks: Vec<Word>,
}

/// The constructed roof: ambient 1-step matrix, essentialized target inside
/// it, the constant c, the metric base alpha, the a_j table, and the fixed
/// successor map. rho takes the value a_t on points whose first break from
/// the target is at position t and h(Y) on the target itself, so its range
/// sits inside [h(Y), a_1].
#[derive(Debug, Clone)]
pub struct RoofSpec {
    ambient: TransitionMatrix,
    target: TransitionMatrix,
    recode: Option<RecodeData>,
    alpha: f64,
    c: f64,
    h_y: f64,
    spectral: SpectralData,
    lang: LanguageTable,
    aj: AjTable,
    beta: Vec<Option<usize>>,
}

/// Build the roof for a positive-entropy SFT sitting inside the full shift
/// on its alphabet.
pub fn build_roof(sft: &Sft, opts: BuildOptions) -> Result<RoofSpec> {
    if !(opts.alpha > 0.0 && opts.alpha < 1.0) {
        return Err(Error::InvalidAlpha(opts.alpha));
    }
    let recoded = higher_block_recode(sft)?;
    let ambient = recoded.ambient;
    let target = recoded.target;
    let recode = if sft.step() > 1 {
        Some(RecodeData {
            step: sft.step(),
            base_alphabet: sft.alphabet().size(),
            blocks: recoded.blocks,
        })
    } else {
        None
    };

    let spectral = entropy_spectral(&target)?;
    let h_y = spectral.lambda.ln();
    if h_y <= 1e-9 {
        return Err(Error::ZeroEntropy);
    }

    let minimum = min_c(ambient.size());
    let c = match opts.c {
        Some(c) if c > minimum => c,
        Some(c) => return Err(Error::RoofConstantTooSmall { value: c, minimum }),
        None => default_c(ambient.size()),
    };

    let blocks_needed = block_index(opts.j_capacity.max(1)) + 2;
    let j_max = block_end(blocks_needed);
    let lang_len = opts.language_len.max(blocks_needed);
    let lang = LanguageTable::for_matrix(&target, lang_len, DEFAULT_EXACT_LIMIT);
    let aj = AjTable::new(&lang, c, j_max)?;
    let beta = compute_beta(&ambient, &target);

    Ok(RoofSpec {
        ambient,
        target,
        recode,
        alpha: opts.alpha,
        c,
        h_y,
        spectral,
        lang,
        aj,
        beta,
    })
}

impl RoofSpec {
    pub fn ambient(&self) -> &TransitionMatrix {
        &self.ambient
    }

    pub fn target(&self) -> &TransitionMatrix {
        &self.target
    }

    pub fn recode(&self) -> Option<&RecodeData> {
        self.recode.as_ref()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn h_y(&self) -> f64 {
        self.h_y
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.spectral
    }

    pub fn lambda(&self) -> f64 {
        self.spectral.lambda
    }

    pub fn language(&self) -> &LanguageTable {
        &self.lang
    }

    pub fn aj(&self) -> &AjTable {
        &self.aj
    }

    /// Successor map on A_0; None for symbols whose target row matches the
    /// ambient row.
    pub fn beta(&self) -> &[Option<usize>] {
        &self.beta
    }

    /// Symbols with an ambient-admissible successor outside the target.
    pub fn a_zero(&self) -> Vec<usize> {
        self.beta
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.map(|_| i))
            .collect()
    }

    /// Symbols that do not occur in the target at all.
    pub fn dead_symbols(&self) -> Vec<usize> {
        (0..self.target.size())
            .filter(|&i| !self.target.row_has_one(i))
            .collect()
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient.size()
    }

    pub fn a1(&self) -> f64 {
        self.aj.a1()
    }

    /// a_j for any j >= 1; indices beyond the table are recomputed on the
    /// fly from the target matrix (pure, uncached).
    pub fn a_value(&self, j: usize) -> Result<f64> {
        if j == 0 {
            return Err(Error::CapacityExceeded {
                requested: 0,
                capacity: self.aj.j_max(),
            });
        }
        if j <= self.aj.j_max() {
            return self.aj.value(j);
        }
        let n = block_index(j);
        let base = if n <= self.lang.len() {
            self.lang.log_count(n) / n as f64
        } else {
            let t = LanguageTable::for_matrix(&self.target, n, 1);
            t.log_count(n) / n as f64
        };
        Ok(base + self.c / (j as f64).sqrt())
    }

    /// Supremum of a_j over the tabulated window j > m. For m inside the
    /// table this is the suffix maximum up to j_max; beyond it the next
    /// three blocks after m are scanned on the fly.
    pub fn tail_sup(&self, m: usize) -> Result<f64> {
        if m < self.aj.j_max() {
            return self.aj.tail_max(m);
        }
        let last = block_end(block_index(m + 1) + 3);
        let mut best = f64::NEG_INFINITY;
        for j in m + 1..=last {
            best = best.max(self.a_value(j)?);
        }
        Ok(best)
    }

    /// sum of a_j for j = 1..=s.
    pub fn prefix_a(&self, s: usize) -> Result<f64> {
        self.aj.prefix_sum(s)
    }

    /// Replace the successor map; every entry must point at an
    /// ambient-admissible successor outside the target and A_0 must keep
    /// the same support.
    pub fn with_beta(&self, beta: Vec<Option<usize>>) -> Result<RoofSpec> {
        if beta.len() != self.ambient.size() {
            return Err(Error::MalformedMatrix);
        }
        for (i, entry) in beta.iter().enumerate() {
            match (entry, self.beta[i]) {
                (Some(j), Some(_)) => {
                    if *j >= self.ambient.size()
                        || !self.ambient.get(i, *j)
                        || self.target.get(i, *j)
                    {
                        return Err(Error::SymbolOutOfRange {
                            symbol: *j,
                            alphabet: self.ambient.size(),
                        });
                    }
                }
                (None, None) => {}
                _ => return Err(Error::MalformedMatrix),
            }
        }
        let mut out = self.clone();
        out.beta = beta;
        Ok(out)
    }

    /// Reproducibility record serialized next to the emitted tables.
    pub fn manifest(&self) -> RoofManifest {
        RoofManifest {
            c: self.c,
            alpha: self.alpha,
            block_convention: "block n covers n(n-1)/2 < j <= n(n+1)/2".to_string(),
            h_y: self.h_y,
            lambda: self.spectral.lambda,
            spectral_residual: self.spectral.residual,
            ambient_alphabet: self.ambient.size(),
            original_alphabet: self.recode.as_ref().map(|r| r.base_alphabet),
            step: self.recode.as_ref().map_or(1, |r| r.step),
            target_matrix: self.target.rows(),
            live_symbols: self.target.live_symbols(),
            dead_symbols: self.dead_symbols(),
            beta: self.beta.clone(),
            j_max: self.aj.j_max(),
            a1: self.a1(),
        }
    }
}

/// Serializable record of how a roof was built.
#[derive(Debug, Clone, Serialize)]
pub struct RoofManifest {
    pub c: f64,
    pub alpha: f64,
    pub block_convention: String,
    pub h_y: f64,
    pub lambda: f64,
    pub spectral_residual: f64,
    pub ambient_alphabet: usize,
    pub original_alphabet: Option<usize>,
    pub step: usize,
    pub target_matrix: Vec<Vec<u8>>,
    pub live_symbols: Vec<usize>,
    pub dead_symbols: Vec<usize>,
    pub beta: Vec<Option<usize>>,
    pub j_max: usize,
    pub a1: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sft::Alphabet;

    #[test]
    fn default_c_values() {
        assert!((default_c(2) - 2.5).abs() < 1e-15);
        assert!((default_c(4) - 2.5).abs() < 1e-15); // log 4 < 2
        assert!((default_c(16) - (16f64.ln() + 0.5)).abs() < 1e-15);
    }

    #[test]
    fn golden_mean_build() {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1])]).unwrap();
        let spec = build_roof(&sft, BuildOptions::default()).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((spec.h_y() - phi.ln()).abs() < 1e-12);
        assert!((spec.c() - 2.5).abs() < 1e-15);
        assert!(spec.recode().is_none());
        assert!(spec.dead_symbols().is_empty());
        assert!(spec.aj().j_max() >= 200);
    }

    #[test]
    fn zero_entropy_target_is_rejected() {
        let m = TransitionMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        let sft = Sft::from_matrix(m);
        assert!(matches!(
            build_roof(&sft, BuildOptions::default()),
            Err(Error::ZeroEntropy)
        ));
    }

    #[test]
    fn empty_target_is_rejected() {
        let m = TransitionMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        let sft = Sft::from_matrix(m);
        assert!(matches!(
            build_roof(&sft, BuildOptions::default()),
            Err(Error::EmptyShift)
        ));
    }

    #[test]
    fn recoded_build_uses_overlap_ambient() {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1, 1])]).unwrap();
        let spec = build_roof(&sft, BuildOptions::default()).unwrap();
        assert_eq!(spec.ambient_size(), 4);
        assert_eq!(spec.recode().unwrap().step, 2);
        // overlap shift is conjugate to the full 2-shift; c defaults from
        // the 4-block alphabet
        assert!((spec.c() - 2.5).abs() < 1e-15);
        assert!(spec.target().entrywise_le(spec.ambient()));
        // a_1 uses the recoded target's one-block count |L_2(Y)| = 4
        assert!((spec.a1() - (4f64.ln() + 2.5)).abs() < 1e-12);
    }

    #[test]
    fn c_override_must_clear_minimum() {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1])]).unwrap();
        assert!(matches!(
            build_roof(&sft, BuildOptions::default().with_c(1.5)),
            Err(Error::RoofConstantTooSmall { .. })
        ));
        let spec = build_roof(&sft, BuildOptions::default().with_c(3.0)).unwrap();
        assert_eq!(spec.c(), 3.0);
    }

    #[test]
    fn on_demand_values_extend_the_table() {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1])]).unwrap();
        let spec = build_roof(&sft, BuildOptions::for_limits(10, 10, 10)).unwrap();
        let j = spec.aj().j_max() + 5;
        let n = block_index(j);
        let expect = spec.language().log_count(n) / n as f64 + 2.5 / (j as f64).sqrt();
        assert!((spec.a_value(j).unwrap() - expect).abs() < 1e-12);
        assert!(spec.tail_sup(spec.aj().j_max() + 1).unwrap() >= spec.h_y());
    }

    #[test]
    fn alpha_is_validated() {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1])]).unwrap();
        assert!(matches!(
            build_roof(&sft, BuildOptions::default().with_alpha(1.0)),
            Err(Error::InvalidAlpha(_))
        ));
    }
}
