//! Exact suprema of Birkhoff sums of the potential over cylinders.
//!
//! For a word w of length n the supremum of S_n g over [w] is determined by
//! the violation positions inside w: position i contributes -a_(t - i + 1)
//! where t is the first violation at or after i, and -h(Y) when no violation
//! follows. A word ending in a dead symbol carries a forced violation at
//! position n. The supremum is attained by extending the word into the
//! target after its last violation.

use crate::error::{Error, Result};
use crate::roof::eval::violation_positions;
use crate::roof::RoofSpec;
use crate::sft::Word;

/// Maximal run of violation-free positions ending at a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub violation: usize,
    pub length: usize,
}

/// Recipe for a tail that attains the supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessTail {
    /// Continue from the word's last symbol inside the target.
    IntoTarget { from: usize },
    /// The final position is already a forced violation; any ambient tail
    /// attains the supremum.
    Arbitrary { from: usize },
}

/// sup over the cylinder [w] of scale * S_n g, with the run decomposition
/// and a maximizer recipe.
#[derive(Debug, Clone)]
pub struct BirkhoffSupResult {
    pub value: f64,
    pub scale: f64,
    /// Last violation position, 0 when the word is fully admissible.
    pub last_violation: usize,
    pub runs: Vec<Run>,
    pub witness: WitnessTail,
}

pub fn birkhoff_sup(spec: &RoofSpec, w: &Word, scale: f64) -> Result<BirkhoffSupResult> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let d = spec.ambient_size();
    for &s in w.symbols() {
        if s >= d {
            return Err(Error::SymbolOutOfRange {
                symbol: s,
                alphabet: d,
            });
        }
    }
    let n = w.len();
    let positions = violation_positions(spec.target(), w.symbols());
    let mut runs = Vec::with_capacity(positions.len());
    let mut base = 0.0;
    let mut prev = 0usize;
    for &v in &positions {
        let length = v - prev;
        base -= spec.prefix_a(length)?;
        runs.push(Run {
            violation: v,
            length,
        });
        prev = v;
    }
    base -= (n - prev) as f64 * spec.h_y();
    let last = w.symbols()[n - 1];
    let witness = if prev == n {
        WitnessTail::Arbitrary { from: last }
    } else {
        WitnessTail::IntoTarget { from: last }
    };
    Ok(BirkhoffSupResult {
        value: scale * base,
        scale,
        last_violation: prev,
        runs,
        witness,
    })
}

/// Concrete tail of `len` symbols realizing a witness recipe: the least
/// admissible successor walk, inside the target for `IntoTarget` and inside
/// the ambient graph otherwise.
pub fn witness_tail(spec: &RoofSpec, witness: WitnessTail, len: usize) -> Vec<usize> {
    let (mut at, matrix) = match witness {
        WitnessTail::IntoTarget { from } => (from, spec.target()),
        WitnessTail::Arbitrary { from } => (from, spec.ambient()),
    };
    let d = matrix.size();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let next = (0..d)
            .find(|&j| matrix.get(at, j))
            .expect("essential matrix rows stay extendable");
        out.push(next);
        at = next;
    }
    out
}

/// Upper bound on scale * S_n g over every point extending `symbols`
/// (which must be at least n long): positions whose next violation is
/// visible contribute exactly, unresolved positions are bounded by -h(Y).
/// When the suffix after position n never violates and stays in the target
/// forever the bound is the exact Birkhoff sum.
pub fn birkhoff_sum_bound(spec: &RoofSpec, symbols: &[usize], n: usize, scale: f64) -> Result<f64> {
    if symbols.len() < n || n == 0 {
        return Err(Error::EmptyWord);
    }
    let positions = violation_positions(spec.target(), symbols);
    let mut acc = 0.0;
    let mut next_idx = 0usize;
    for i in 1..=n {
        while next_idx < positions.len() && positions[next_idx] < i {
            next_idx += 1;
        }
        if next_idx < positions.len() {
            acc -= spec.a_value(positions[next_idx] - i + 1)?;
        } else {
            acc -= spec.h_y();
        }
    }
    Ok(scale * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roof::{build_roof, BuildOptions};
    use crate::sft::{Alphabet, Sft};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn golden_spec() -> RoofSpec {
        let a = Alphabet::new(2).unwrap();
        let sft = Sft::from_forbidden_words(a, &[Word::from([1, 1])]).unwrap();
        build_roof(&sft, BuildOptions::default()).unwrap()
    }

    #[test]
    fn admissible_word_gives_entropy_only() {
        let spec = golden_spec();
        let r = birkhoff_sup(&spec, &Word::from([0, 1, 0, 1]), 1.0).unwrap();
        assert_eq!(r.last_violation, 0);
        assert!(r.runs.is_empty());
        assert!((r.value + 4.0 * spec.h_y()).abs() < 1e-13);
    }

    #[test]
    fn single_violation_then_tail() {
        let spec = golden_spec();
        let a1 = 2f64.ln() + 2.5;
        let r = birkhoff_sup(&spec, &Word::from([1, 1]), 1.0).unwrap();
        assert_eq!(r.last_violation, 1);
        assert_eq!(
            r.runs,
            vec![Run {
                violation: 1,
                length: 1
            }]
        );
        assert!((r.value - (-a1 - spec.h_y())).abs() < 1e-13);
    }

    #[test]
    fn consecutive_violations_make_unit_runs() {
        let spec = golden_spec();
        let a1 = 2f64.ln() + 2.5;
        let r = birkhoff_sup(&spec, &Word::from([1, 1, 1]), 1.0).unwrap();
        assert_eq!(
            r.runs,
            vec![
                Run {
                    violation: 1,
                    length: 1
                },
                Run {
                    violation: 2,
                    length: 1
                }
            ]
        );
        assert!((r.value - (-2.0 * a1 - spec.h_y())).abs() < 1e-13);
    }

    #[test]
    fn scale_multiplies_the_value() {
        let spec = golden_spec();
        let base = birkhoff_sup(&spec, &Word::from([0, 1, 1, 0]), 1.0).unwrap();
        let scaled = birkhoff_sup(&spec, &Word::from([0, 1, 1, 0]), 2.5).unwrap();
        assert!((scaled.value - 2.5 * base.value).abs() < 1e-12);
    }

    #[test]
    fn witness_attains_and_extensions_never_exceed() {
        let spec = golden_spec();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let w: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
            let sup = birkhoff_sup(&spec, &Word::new(w.clone()), 1.0).unwrap();

            let tail = witness_tail(&spec, sup.witness, 40);
            let mut full = w.clone();
            full.extend(tail);
            let attained = birkhoff_sum_bound(&spec, &full, n, 1.0).unwrap();
            assert!(
                (attained - sup.value).abs() <= 1e-12 * sup.value.abs().max(1.0),
                "witness must attain the sup"
            );

            for _ in 0..20 {
                let mut ext = w.clone();
                for _ in 0..30 {
                    ext.push(rng.gen_range(0..2));
                }
                let bound = birkhoff_sum_bound(&spec, &ext, n, 1.0).unwrap();
                assert!(bound <= sup.value + 1e-12 * sup.value.abs().max(1.0));
            }
        }
    }

    #[test]
    fn dead_final_symbol_forces_last_run() {
        // target lives on {0,1} (golden mean), symbol 2 is dead in a 3-shift
        let m =
            crate::sft::TransitionMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 0]])
                .unwrap();
        let sft = Sft::from_matrix(m);
        let spec = build_roof(&sft, BuildOptions::default()).unwrap();
        let r = birkhoff_sup(&spec, &Word::from([0, 0, 2]), 1.0).unwrap();
        // violation entering 2 (zero column) at position 2 and the forced
        // final violation at position 3
        assert_eq!(r.last_violation, 3);
        assert_eq!(
            r.runs,
            vec![
                Run {
                    violation: 2,
                    length: 2
                },
                Run {
                    violation: 3,
                    length: 1
                }
            ]
        );
        let expect = -(spec.prefix_a(2).unwrap() + spec.prefix_a(1).unwrap());
        assert!((r.value - expect).abs() < 1e-13);
        assert!(matches!(r.witness, WitnessTail::Arbitrary { from: 2 }));
    }
}
