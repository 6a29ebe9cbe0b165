//! Defining relators of `K_n(k)`, as words that must represent to 1.

use crate::cohen::word::{GroupGenerator, GroupWord};
use crate::error::{Error, Result};

/// `[[a1, a2], ..., al]` for `l ≥ 1`.
pub fn left_normed_commutator(entries: &[GroupWord]) -> Result<GroupWord> {
    let (first, rest) = entries
        .split_first()
        .ok_or_else(|| Error::out_of_range("commutator entries", 0, "at least 1"))?;
    rest.iter().try_fold(first.clone(), |acc, e| acc.commutator(e))
}

fn block_powers(rank: u32, block_size: usize, blocks: &[Vec<u32>], exponents: &[i64]) -> Result<Vec<GroupWord>> {
    if blocks.len() != exponents.len() {
        return Err(Error::ArityMismatch {
            expected: blocks.len(),
            found: exponents.len(),
        });
    }
    blocks
        .iter()
        .zip(exponents)
        .map(|(b, &e)| GroupWord::from_syllables(rank, block_size, [(GroupGenerator::new(b.clone()), e)]))
        .collect()
}

/// `[[g1^{n1}, ..., gl^{nl}]]` where some base index occurs twice among the blocks.
pub fn repeated_index_relator(
    rank: u32,
    block_size: usize,
    blocks: &[Vec<u32>],
    exponents: &[i64],
) -> Result<GroupWord> {
    let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
    all.sort_unstable();
    if !all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Hypothesis("no base index is repeated".into()));
    }
    left_normed_commutator(&block_powers(rank, block_size, blocks, exponents)?)
}

/// `[[g1^{n1}, ..., gl^{nl}]] · ([[g1, ..., gl]]^{n1...nl})^{-1}`.
pub fn exponent_relator(rank: u32, block_size: usize, blocks: &[Vec<u32>], exponents: &[i64]) -> Result<GroupWord> {
    let lhs = left_normed_commutator(&block_powers(rank, block_size, blocks, exponents)?)?;
    let ones = vec![1; exponents.len()];
    let total = exponents
        .iter()
        .try_fold(1i64, |acc, &e| acc.checked_mul(e))
        .ok_or_else(|| Error::out_of_range("exponent product", i64::MAX, "fits in 64 bits"))?;
    let rhs = left_normed_commutator(&block_powers(rank, block_size, blocks, &ones)?)?.power(total);
    lhs.product(&rhs.inverse())
}
