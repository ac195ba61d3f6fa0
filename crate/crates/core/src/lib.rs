//! Symbolic-dynamics toolkit: subshifts of finite type inside a full shift,
//! the explicit roof function built from per-length word counts, exact
//! partition-sum dynamic programming, pressure root finding, and
//! suspension-flow entropy reports.

pub mod error;
pub mod logdomain;
pub mod pressure;
pub mod report;
pub mod roof;
pub mod sft;
pub mod sftfile;
pub mod subadditive;
pub mod suspension;

pub use error::{Error, Result};
pub use pressure::{
    birkhoff_sup, partition_sum, pressure_estimate, pressure_root, q_table, q_value,
    variational_check, BirkhoffSupResult, Bracket, PartitionTable, QTable, RootResult,
};
pub use roof::{build_roof, default_c, BuildOptions, PotentialEval, RoofSpec};
pub use sft::{
    entropy_spectral, higher_block_recode, irreducible_components, parry_measure, Alphabet,
    LanguageTable, ParryMeasure, Recoded, Sft, SftComponent, SpectralData, TransitionMatrix, Word,
};
pub use subadditive::{check_subadditive, lemma_inequality, random_subadditive, SubadditiveSeq};
pub use suspension::{
    abramov, mme_report, roof_integral_markov, LiftedMeasureReport, RoofIntegral, SuspensionModel,
};
