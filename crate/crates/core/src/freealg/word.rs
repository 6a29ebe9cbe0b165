use std::cmp::Ordering;
use std::fmt;

use crate::combination::Monomial;

/// A word in the generators `x1, x2, ...`; the empty word is the unit.
///
/// Words order by length first, then lexicographically, so printed elements
/// list their terms degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u32) -> Self {
        Word(vec![i])
    }

    /// `x1 x2 ... xn`.
    pub fn multilinear(n: u32) -> Self {
        Word((1..=n).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Does every letter occur at most once?
    pub fn is_multilinear(&self) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Subword on the positions whose bit is set, and the complementary subword.
    pub fn split_by_mask(&self, mask: u64) -> (Word, Word) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(a);
            } else {
                right.push(a);
            }
        }
        (Word(left), Word(right))
    }

    /// Blocks of an ordered split: position `i` goes to block `assignment[i]`.
    pub fn split_by_assignment(&self, assignment: &[usize], blocks: usize) -> Vec<Word> {
        let mut out = vec![Vec::new(); blocks];
        for (&a, &b) in self.0.iter().zip(assignment) {
            out[b].push(a);
        }
        out.into_iter().map(Word).collect()
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for Word {
    fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "x{a}")?;
        }
        Ok(())
    }
}

/// Call `f` on every assignment of `len` positions to `blocks` blocks,
/// enumerated as base-`blocks` counters (`blocks^len` calls).
pub(crate) fn for_each_assignment(len: usize, blocks: usize, mut f: impl FnMut(&[usize])) {
    if blocks == 0 {
        if len == 0 {
            f(&[]);
        }
        return;
    }
    let mut digits = vec![0usize; len];
    loop {
        f(&digits);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            digits[i] += 1;
            if digits[i] < blocks {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
