use std::fmt;

use crate::cohen::word::GroupWord;
use crate::combination::{fmt_terms, Combination, Monomial};
use crate::error::{Error, Result};
use crate::freealg::word::Word;
use crate::modarith::{Coeff, CoefficientRing};

/// An element of the square-zero quotient receiving `K_n(k)`.
///
/// Basis keys are sequences of `k`-blocks with no base index repeated,
/// stored flattened as a [`Word`]; the empty sequence is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearElement {
    rank: u32,
    block_size: usize,
    terms: Combination<Word>,
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|i| !b.contains(i))
}

impl MultilinearElement {
    pub fn one(rank: u32, block_size: usize, ring: CoefficientRing) -> Self {
        MultilinearElement {
            rank,
            block_size,
            terms: Combination::monomial(ring, Word::empty(), 1),
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn ring(&self) -> CoefficientRing {
        self.terms.ring()
    }

    pub fn terms(&self) -> &Combination<Word> {
        &self.terms
    }

    /// Coefficient of the block sequence given flattened.
    pub fn coefficient(&self, flat: &[u32]) -> Coeff {
        self.terms.coefficient(&Word::new(flat))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.coefficient(&Word::empty()) == 1
    }

    /// The terms made of exactly `m` blocks.
    pub fn degree_part(&self, m: usize) -> Combination<Word> {
        let len = m * self.block_size;
        self.terms.filter(|w| w.len() == len)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank && self.block_size == other.block_size {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected_n: self.rank,
                expected_k: self.block_size as u32,
                found_n: other.rank,
                found_k: other.block_size as u32,
            })
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self.ring() != other.ring() {
            return Err(Error::ContextMismatch);
        }
        let ring = self.ring();
        let mut out = Combination::zero(ring);
        for (a, c) in self.iter() {
            for (b, d) in other.iter() {
                if disjoint(a.letters(), b.letters()) {
                    out.add_term(a.concat(b), ring.mul(c, d));
                }
            }
        }
        Ok(MultilinearElement {
            rank: self.rank,
            block_size: self.block_size,
            terms: out,
        })
    }

    /// Right multiplication by `1 + e·block`.
    fn multiply_generator(&mut self, block: &[u32], e: Coeff) {
        let ring = self.ring();
        let mut extra = Vec::new();
        for (a, c) in self.iter() {
            if disjoint(a.letters(), block) {
                let mut v = a.letters().to_vec();
                v.extend_from_slice(block);
                extra.push((Word::new(v), ring.mul(c, e)));
            }
        }
        for (w, c) in extra {
            self.terms.add_term(w, c);
        }
    }

    pub fn power(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(self.rank, self.block_size, self.ring());
        let mut rest = e;
        while rest > 0 {
            if rest & 1 == 1 {
                out = out.multiply(&base).expect("same ambient");
            }
            rest >>= 1;
            if rest > 0 {
                base = base.multiply(&base).expect("same ambient");
            }
        }
        out
    }
}

impl fmt::Display for MultilinearElement {
    /// `1 + y1.y2 - y2.y1`, or with blocks `{y1|y2}.{y3|y4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.block_size;
        fmt_terms(f, &self.terms, |w| {
            if w.is_empty() {
                return "1".to_string();
            }
            let blocks: Vec<String> = w
                .letters()
                .chunks(k)
                .map(|b| {
                    let ys: Vec<String> = b.iter().map(|i| format!("y{i}")).collect();
                    if k == 1 {
                        ys[0].clone()
                    } else {
                        format!("{{{}}}", ys.join("|"))
                    }
                })
                .collect();
            blocks.join(".")
        })
    }
}

/// The image of `w` under `x ↦ 1 + y` (blocks likewise), expanded in the square-zero quotient.
pub fn represent(w: &GroupWord, ring: CoefficientRing) -> MultilinearElement {
    let mut out = MultilinearElement::one(w.rank(), w.block_size(), ring);
    for (g, e) in w.syllables() {
        if g.has_repeated_index() {
            continue;
        }
        out.multiply_generator(g.block(), ring.reduce(*e));
    }
    out
}

/// Equality in `K_n(k)`, decided by comparing representations.
pub fn equal_in_group(a: &GroupWord, b: &GroupWord, ring: CoefficientRing) -> Result<bool> {
    a.check_ambient(b)?;
    Ok(represent(a, ring) == represent(b, ring))
}

/// `represent((x1 x2 ... xn)^m)`.
pub fn group_power_expansion(rank: u32, m: u64, ring: CoefficientRing) -> MultilinearElement {
    represent(&GroupWord::product_of_generators(rank), ring).power(m)
}
