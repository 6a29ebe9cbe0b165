use std::fmt;

use crate::error::{Error, Result};
use crate::freealg::element::Parser;

/// A generator of `K_n(k)`: the block `{x_{i1}|...|x_{ik}}`, or `x_i` when `k = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupGenerator {
    block: Vec<u32>,
}

impl GroupGenerator {
    pub fn new(block: impl Into<Vec<u32>>) -> Self {
        GroupGenerator { block: block.into() }
    }

    pub fn simple(i: u32) -> Self {
        GroupGenerator { block: vec![i] }
    }

    pub fn block(&self) -> &[u32] {
        &self.block
    }

    /// Does some base index occur twice in the block?
    pub fn has_repeated_index(&self) -> bool {
        let mut v = self.block.clone();
        v.sort_unstable();
        v.windows(2).any(|w| w[0] == w[1])
    }
}

impl fmt::Display for GroupGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [i] = self.block[..] {
            return write!(f, "x{i}");
        }
        let parts: Vec<String> = self.block.iter().map(|i| format!("x{i}")).collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// A freely reduced word in the generators of `K_n(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupWord {
    rank: u32,
    block_size: usize,
    syllables: Vec<(GroupGenerator, i64)>,
}

impl GroupWord {
    pub fn identity(rank: u32, block_size: usize) -> Self {
        GroupWord {
            rank,
            block_size,
            syllables: Vec::new(),
        }
    }

    pub fn from_syllables(
        rank: u32,
        block_size: usize,
        syllables: impl IntoIterator<Item = (GroupGenerator, i64)>,
    ) -> Result<Self> {
        if block_size == 0 {
            return Err(Error::out_of_range("block size", 0, "at least 1"));
        }
        let mut w = Self::identity(rank, block_size);
        for (g, e) in syllables {
            w.check_generator(&g)?;
            w.push(g, e);
        }
        Ok(w)
    }

    /// `x_i` in `K_n`.
    pub fn generator(rank: u32, i: u32) -> Result<Self> {
        Self::from_syllables(rank, 1, [(GroupGenerator::simple(i), 1)])
    }

    /// `x_1 x_2 ... x_n` in `K_n`.
    pub fn product_of_generators(rank: u32) -> Self {
        Self::from_syllables(rank, 1, (1..=rank).map(|i| (GroupGenerator::simple(i), 1))).expect("indices in range")
    }

    /// The `n`-fold commutator `[[x1, x2], ..., xn]` in `K_n`.
    pub fn iterated_commutator(rank: u32) -> Result<Self> {
        let mut acc = Self::generator(rank, 1)?;
        for i in 2..=rank {
            acc = acc.commutator(&Self::generator(rank, i)?)?;
        }
        Ok(acc)
    }

    fn check_generator(&self, g: &GroupGenerator) -> Result<()> {
        if g.block.len() != self.block_size {
            return Err(Error::out_of_range(
                "block length",
                g.block.len(),
                format!("exactly {}", self.block_size),
            ));
        }
        for &i in &g.block {
            if i < 1 || i > self.rank {
                return Err(Error::out_of_range("generator index", i, format!("[1, {}]", self.rank)));
            }
        }
        Ok(())
    }

    fn push(&mut self, g: GroupGenerator, e: i64) {
        if e == 0 {
            return;
        }
        if let Some((last, f)) = self.syllables.last_mut() {
            if *last == g {
                *f = f.checked_add(e).expect("exponent overflow");
                if *f == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((g, e));
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn syllables(&self) -> &[(GroupGenerator, i64)] {
        &self.syllables
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    /// Is this the empty word?
    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub(crate) fn check_ambient(&self, other: &Self) -> Result<()> {
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

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (g, e) in &other.syllables {
            out.push(g.clone(), *e);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::identity(self.rank, self.block_size);
        for (g, e) in self.syllables.iter().rev() {
            out.push(g.clone(), -e);
        }
        out
    }

    pub fn power(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank, self.block_size);
        let mut rest = e.unsigned_abs();
        while rest > 0 {
            if rest & 1 == 1 {
                out = out.product(&base).expect("same ambient");
            }
            rest >>= 1;
            if rest > 0 {
                base = base.product(&base).expect("same ambient");
            }
        }
        out
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.inverse()
            .product(&other.inverse())?
            .product(self)?
            .product(other)
    }

    /// The first `i` syllables and the rest.
    pub fn split_at(&self, i: usize) -> (Self, Self) {
        let (a, b) = self.syllables.split_at(i.min(self.len()));
        let make = |s: &[(GroupGenerator, i64)]| GroupWord {
            rank: self.rank,
            block_size: self.block_size,
            syllables: s.to_vec(),
        };
        (make(a), make(b))
    }

    /// Parse the text format, e.g. `x1^2 x2^-1`, `[x1,x2]^6`, `{x1|x3}^-2`, or `1`.
    pub fn parse(rank: u32, block_size: usize, text: &str) -> Result<Self> {
        if block_size == 0 {
            return Err(Error::out_of_range("block size", 0, "at least 1"));
        }
        if text.trim() == "1" {
            return Ok(Self::identity(rank, block_size));
        }
        let mut p = Parser::new(text);
        let w = parse_word(&mut p, rank, block_size)?;
        let w = w.ok_or_else(|| p.error("expected a group word"))?;
        if !p.at_end() {
            return Err(p.error("unexpected input"));
        }
        Ok(w)
    }
}

fn parse_word(p: &mut Parser<'_>, rank: u32, k: usize) -> Result<Option<GroupWord>> {
    let mut acc: Option<GroupWord> = None;
    while let Some(item) = parse_item(p, rank, k)? {
        acc = Some(match acc {
            None => item,
            Some(a) => a.product(&item)?,
        });
    }
    Ok(acc)
}

fn parse_item(p: &mut Parser<'_>, rank: u32, k: usize) -> Result<Option<GroupWord>> {
    p.skip_ws();
    let start = p.offset();
    let atom = match p.peek() {
        Some('x') => {
            let i = p.generator(rank)?;
            if k != 1 {
                return Err(Error::parse(start, format!("expected a block of {k} generators")));
            }
            GroupWord::from_syllables(rank, k, [(GroupGenerator::simple(i), 1)])?
        }
        Some('{') => {
            p.eat('{');
            let mut block = vec![p.generator(rank)?];
            while p.eat('|') {
                block.push(p.generator(rank)?);
            }
            p.expect('}')?;
            if block.len() != k {
                return Err(Error::parse(start, format!("block has {} entries, expected {k}", block.len())));
            }
            GroupWord::from_syllables(rank, k, [(GroupGenerator::new(block), 1)])?
        }
        Some('[') => {
            p.eat('[');
            let mut acc = parse_word(p, rank, k)?.ok_or_else(|| p.error("empty commutator entry"))?;
            let mut entries = 1;
            while p.eat(',') {
                let next = parse_word(p, rank, k)?.ok_or_else(|| p.error("empty commutator entry"))?;
                acc = acc.commutator(&next)?;
                entries += 1;
            }
            p.expect(']')?;
            if entries < 2 {
                return Err(Error::parse(start, "a commutator needs at least two entries"));
            }
            acc
        }
        _ => return Ok(None),
    };
    if p.eat('^') {
        let e = p.signed_integer()?;
        Ok(Some(atom.power(e)))
    } else {
        Ok(Some(atom))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (j, (g, e)) in self.syllables.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}
