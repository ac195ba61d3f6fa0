//! On-disk SFT definition: `alphabet_size` plus exactly one of `matrix`
//! (0/1 rows) or `forbidden_words` (lists of symbols). The textual container
//! format (TOML) is handled by the caller; this module only defines the
//! shape and the conversion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sft::{Alphabet, Sft, TransitionMatrix, Word};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SftFile {
    pub alphabet_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbidden_words: Option<Vec<Vec<usize>>>,
}

impl SftFile {
    pub fn into_sft(self) -> Result<Sft> {
        match (self.matrix, self.forbidden_words) {
            (Some(_), Some(_)) => Err(Error::InvalidDefinition(
                "give either `matrix` or `forbidden_words`, not both".into(),
            )),
            (None, None) => Err(Error::InvalidDefinition(
                "one of `matrix` or `forbidden_words` is required".into(),
            )),
            (Some(rows), None) => {
                if rows.len() != self.alphabet_size {
                    return Err(Error::InvalidDefinition(format!(
                        "matrix has {} rows but alphabet_size is {}",
                        rows.len(),
                        self.alphabet_size
                    )));
                }
                Ok(Sft::from_matrix(TransitionMatrix::from_rows(&rows)?))
            }
            (None, Some(words)) => {
                let alphabet = Alphabet::new(self.alphabet_size)?;
                let words: Vec<Word> = words.into_iter().map(Word::new).collect();
                Sft::from_forbidden_words(alphabet, &words)
            }
        }
    }
}
