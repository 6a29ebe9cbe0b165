use std::fmt;

use crate::cohen::multilinear::MultilinearElement;
use crate::combination::{fmt_terms, Combination, Monomial};
use crate::error::{Error, Result};
use crate::freealg::element::TensorElement;
use crate::freealg::word::Word;
use crate::modarith::{Coeff, CoefficientRing};

/// A word in the block alphabet: a sequence of blocks, each a word of length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BlockWord(Vec<Word>);

impl BlockWord {
    pub fn new(blocks: Vec<Word>) -> Self {
        BlockWord(blocks)
    }

    pub fn blocks(&self) -> &[Word] {
        &self.0
    }
}

impl Monomial for BlockWord {
    fn concat(&self, other: &Self) -> Self {
        BlockWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for b in &self.0 {
            write!(f, "({b})")?;
        }
        Ok(())
    }
}

/// A linear combination of block words with blocks of a fixed size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockElement {
    block_size: usize,
    terms: Combination<BlockWord>,
}

impl BlockElement {
    pub fn zero(block_size: usize, ring: CoefficientRing) -> Self {
        BlockElement {
            block_size,
            terms: Combination::zero(ring),
        }
    }

    pub fn from_terms(
        block_size: usize,
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (BlockWord, Coeff)>,
    ) -> Result<Self> {
        let mut out = Self::zero(block_size, ring);
        for (w, c) in terms {
            if let Some(b) = w.blocks().iter().find(|b| b.len() != block_size) {
                return Err(Error::ArityMismatch {
                    expected: block_size,
                    found: b.len(),
                });
            }
            out.terms.add_term(w, c);
        }
        Ok(out)
    }

    /// `[u, v] = (u)(v) - (v)(u)` for two blocks.
    pub fn block_bracket(u: &Word, v: &Word, ring: CoefficientRing) -> Result<Self> {
        Self::from_terms(
            u.len(),
            ring,
            [
                (BlockWord(vec![u.clone(), v.clone()]), 1),
                (BlockWord(vec![v.clone(), u.clone()]), -1),
            ],
        )
    }

    /// Degree-`m` part of a representation, each `k` consecutive indices read as one block.
    pub fn from_multilinear(e: &MultilinearElement, m: usize) -> Self {
        let k = e.block_size();
        let mut out = Self::zero(k, e.ring());
        for (w, c) in e.degree_part(m).iter() {
            let blocks = w.letters().chunks(k).map(Word::new).collect();
            out.terms.add_term(BlockWord(blocks), c);
        }
        out
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn ring(&self) -> CoefficientRing {
        self.terms.ring()
    }

    pub fn terms(&self) -> &Combination<BlockWord> {
        &self.terms
    }

    pub fn coefficient(&self, w: &BlockWord) -> Coeff {
        self.terms.coefficient(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BlockWord, Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.block_size != other.block_size {
            return Err(Error::ArityMismatch {
                expected: self.block_size,
                found: other.block_size,
            });
        }
        if self.ring() != other.ring() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(BlockElement {
            block_size: self.block_size,
            terms: self.terms.plus(&other.terms),
        })
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(BlockElement {
            block_size: self.block_size,
            terms: self.terms.minus(&other.terms),
        })
    }

    pub fn scaled(&self, c: Coeff) -> Self {
        BlockElement {
            block_size: self.block_size,
            terms: self.terms.scaled(c),
        }
    }

    /// Is every block word made of exactly `m` blocks?
    pub fn is_homogeneous(&self, m: usize) -> bool {
        self.terms.is_homogeneous(m)
    }
}

impl fmt::Display for BlockElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, |w| w.to_string())
    }
}

/// Partitions of `0..len` into blocks of size `k`, each block increasing and
/// the blocks sorted by their last position.
pub fn block_partitions(len: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(remaining: &[usize], k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&first, rest)) = remaining.split_first() else {
            let mut p = cur.clone();
            p.sort_by_key(|b| *b.last().expect("nonempty block"));
            out.push(p);
            return;
        };
        let mut choose = |others: &[usize]| {
            let mut block = vec![first];
            block.extend_from_slice(others);
            let left: Vec<usize> = rest.iter().copied().filter(|i| !others.contains(i)).collect();
            cur.push(block);
            rec(&left, k, cur, out);
            cur.pop();
        };
        for_each_combination(rest, k - 1, &mut choose);
    }
    let mut out = Vec::new();
    if k == 0 || !len.is_multiple_of(k) {
        return out;
    }
    let all: Vec<usize> = (0..len).collect();
    rec(&all, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn for_each_combination(items: &[usize], r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, r, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, r, 0, &mut Vec::new(), f);
}

/// Homological `H_k` of a word: zero unless `k` divides its length, otherwise
/// the sum over [`block_partitions`] of the blocks read off in order.
pub fn homology_james_hopf(w: &Word, k: usize) -> Result<BlockElement> {
    homology_james_hopf_in(w, k, CoefficientRing::INTEGERS)
}

fn homology_james_hopf_in(w: &Word, k: usize, ring: CoefficientRing) -> Result<BlockElement> {
    if k == 0 {
        return Err(Error::out_of_range("k", 0, "at least 1"));
    }
    let letters = w.letters();
    let mut out = BlockElement::zero(k, ring);
    for p in block_partitions(w.len(), k) {
        let blocks = p
            .iter()
            .map(|b| Word::new(b.iter().map(|&i| letters[i]).collect::<Vec<_>>()))
            .collect();
        out.terms.add_term(BlockWord(blocks), 1);
    }
    Ok(out)
}

/// Linear extension of [`homology_james_hopf`], in the ring of `e`.
pub fn homology_james_hopf_linear(e: &TensorElement, k: usize) -> Result<BlockElement> {
    let ring = e.context().ring();
    let mut out = BlockElement::zero(k, ring);
    if k == 0 {
        return Err(Error::out_of_range("k", 0, "at least 1"));
    }
    for (w, c) in e.iter() {
        let h = homology_james_hopf_in(w, k, ring)?;
        out.terms.add_scaled(&h.terms, c);
    }
    Ok(out)
}
