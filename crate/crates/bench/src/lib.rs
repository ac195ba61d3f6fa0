//! Shared fixtures for the criterion benchmarks.

use shiftroof_core::roof::{build_roof, BuildOptions, RoofSpec};
use shiftroof_core::sft::{Alphabet, Sft, TransitionMatrix, Word};

pub fn golden_spec() -> RoofSpec {
    let alphabet = Alphabet::new(2).unwrap();
    let sft = Sft::from_forbidden_words(alphabet, &[Word::from([1, 1])]).unwrap();
    build_roof(&sft, BuildOptions::default()).unwrap()
}

pub fn recoded_spec() -> RoofSpec {
    let alphabet = Alphabet::new(2).unwrap();
    let sft = Sft::from_forbidden_words(alphabet, &[Word::from([1, 1, 1])]).unwrap();
    build_roof(&sft, BuildOptions::default()).unwrap()
}

pub fn golden_matrix() -> TransitionMatrix {
    TransitionMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap()
}
