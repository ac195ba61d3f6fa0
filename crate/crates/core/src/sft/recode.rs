//! Higher-block recoding: presents an M-step SFT as a 1-step SFT over the
//! alphabet of length-M blocks. The ambient full shift becomes the overlap
//! shift (block u may follow block v when they overlap in M - 1 symbols) and
//! the target additionally requires every concatenated (M+1)-window to avoid
//! the forbidden set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sft::{Sft, SftKind, TransitionMatrix, Word};

/// Hard cap on the number of blocks a recoding may produce.
pub const RECODE_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone)]
pub struct Recoded {
    /// Overlap matrix of the recoded full shift.
    pub ambient: TransitionMatrix,
    /// Recoded target, essentialized; entrywise below `ambient`.
    pub target: TransitionMatrix,
    /// Block dictionary: block symbol -> original word of length M.
    pub blocks: Vec<Word>,
}

/// Recode an SFT through the length-M higher block map. M = 1 is the
/// identity recoding (ambient stays the full shift). Word counts satisfy
/// |L_n(recoded target)| = |L_(n + M - 1)(original)|.
pub fn higher_block_recode(sft: &Sft) -> Result<Recoded> {
    let d = sft.alphabet().size();
    let m = sft.step();
    if m == 1 {
        let target = sft.to_matrix()?.essentialize();
        if target.is_empty_shift() {
            return Err(Error::EmptyShift);
        }
        return Ok(Recoded {
            ambient: TransitionMatrix::full(d)?,
            target,
            blocks: (0..d).map(|s| Word::new(vec![s])).collect(),
        });
    }

    let count = d
        .checked_pow(m as u32)
        .filter(|&c| c <= RECODE_LIMIT)
        .ok_or(Error::RecodeTooLarge {
            blocks: usize::MAX,
            limit: RECODE_LIMIT,
        })?;

    let mut blocks = Vec::with_capacity(count);
    let mut buf = vec![0usize; m];
    for code in 0..count {
        let mut c = code;
        for slot in buf.iter_mut().rev() {
            *slot = c % d;
            c /= d;
        }
        blocks.push(Word::new(buf.clone()));
    }

    let forbidden: BTreeSet<&[usize]> = match sft.kind() {
        SftKind::Forbidden { words, .. } => words.iter().map(Word::symbols).collect(),
        SftKind::Matrix(_) => BTreeSet::new(),
    };

    let mut ambient = TransitionMatrix::zero(count)?;
    let mut target = TransitionMatrix::zero(count)?;
    let mut window = vec![0usize; m + 1];
    for (v, bv) in blocks.iter().enumerate() {
        for (u, bu) in blocks.iter().enumerate() {
            if bv.symbols()[1..] != bu.symbols()[..m - 1] {
                continue;
            }
            ambient.set(v, u, true);
            window[..m].copy_from_slice(bv.symbols());
            window[m] = bu.symbols()[m - 1];
            if !forbidden.contains(window.as_slice()) {
                target.set(v, u, true);
            }
        }
    }
    let target = target.essentialize();
    if target.is_empty_shift() {
        return Err(Error::EmptyShift);
    }
    Ok(Recoded {
        ambient,
        target,
        blocks,
    })
}
