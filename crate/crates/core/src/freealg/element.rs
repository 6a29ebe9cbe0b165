use std::fmt;

use crate::combination::{fmt_terms, Combination, Monomial};
use crate::error::{Error, Result};
use crate::freealg::word::Word;
use crate::modarith::{Coeff, CoefficientRing};

/// Rank of `V`, the James truncation degree, and the ground ring.
///
/// Every element built in a context has letters in `1..=generator_count` and
/// words of length at most `degree_bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    generator_count: u32,
    degree_bound: usize,
    ring: CoefficientRing,
}

impl AlgebraContext {
    pub fn new(generator_count: u32, degree_bound: usize, ring: CoefficientRing) -> Result<Self> {
        if generator_count == 0 {
            return Err(Error::out_of_range("generator_count", 0, "positive"));
        }
        if degree_bound == 0 {
            return Err(Error::out_of_range("degree_bound", 0, "positive"));
        }
        Ok(AlgebraContext {
            generator_count,
            degree_bound,
            ring,
        })
    }

    pub fn generator_count(&self) -> u32 {
        self.generator_count
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    /// The same context over another ring.
    pub fn with_ring(&self, ring: CoefficientRing) -> Self {
        AlgebraContext { ring, ..*self }
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.len() <= self.degree_bound && w.letters().iter().all(|&a| a >= 1 && a <= self.generator_count)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() > self.degree_bound {
            return Err(Error::out_of_range("word length", w.len(), format!("at most {}", self.degree_bound)));
        }
        if let Some(&a) = w.letters().iter().find(|&&a| a < 1 || a > self.generator_count) {
            return Err(Error::out_of_range("letter index", a, format!("[1, {}]", self.generator_count)));
        }
        Ok(())
    }

    pub fn zero(&self) -> TensorElement {
        TensorElement {
            ctx: *self,
            terms: Combination::zero(self.ring),
        }
    }

    pub fn one(&self) -> TensorElement {
        self.element_unchecked(Combination::monomial(self.ring, Word::empty(), 1))
    }

    pub fn word(&self, letters: &[u32]) -> Result<TensorElement> {
        self.term(Word::new(letters), 1)
    }

    pub fn generator(&self, i: u32) -> Result<TensorElement> {
        self.word(&[i])
    }

    pub fn term(&self, w: Word, coeff: Coeff) -> Result<TensorElement> {
        self.check_word(&w)?;
        Ok(self.element_unchecked(Combination::monomial(self.ring, w, coeff)))
    }

    pub fn element(&self, terms: impl IntoIterator<Item = (Word, Coeff)>) -> Result<TensorElement> {
        let mut out = Combination::zero(self.ring);
        for (w, c) in terms {
            self.check_word(&w)?;
            out.add_term(w, c);
        }
        Ok(self.element_unchecked(out))
    }

    /// Wrap a combination, dropping words outside the context.
    pub(crate) fn truncate(&self, terms: Combination<Word>) -> TensorElement {
        let terms = if terms.ring() == self.ring {
            terms
        } else {
            terms.change_ring(self.ring)
        };
        let ctx = *self;
        TensorElement {
            ctx,
            terms: terms.filter(|w| ctx.contains_word(w)),
        }
    }

    pub(crate) fn element_unchecked(&self, terms: Combination<Word>) -> TensorElement {
        TensorElement { ctx: *self, terms }
    }

    /// All words of length exactly `len`, in canonical order.
    pub fn basis_words(&self, len: usize) -> Vec<Word> {
        let d = self.generator_count as usize;
        let mut out = Vec::new();
        crate::freealg::word::for_each_assignment(len, d, |digits| {
            // Counter digits run least-significant first; reverse for lexicographic order.
            out.push(Word::new(digits.iter().rev().map(|&i| i as u32 + 1).collect::<Vec<_>>()));
        });
        out.sort();
        out
    }

    /// All words of length `0..=max_len`.
    pub fn basis_words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len.min(self.degree_bound)).flat_map(|l| self.basis_words(l)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<TensorElement> {
        TensorElement::parse(*self, text)
    }
}

/// A finite linear combination of words in a truncated tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    ctx: AlgebraContext,
    terms: Combination<Word>,
}

impl TensorElement {
    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn terms(&self) -> &Combination<Word> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Coeff {
        self.terms.coefficient(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, Coeff)> + '_ {
        self.terms.iter()
    }

    /// `Some(d)` if nonzero and every term has length `d`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.terms.keys().next()?.len();
        self.terms.is_homogeneous(d).then_some(d)
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Concatenation product, truncated at the context's degree bound.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let p = self.terms.product(&other.terms, Some(self.ctx.degree_bound));
        Ok(self.ctx.element_unchecked(p))
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let p = self.terms.commutator(&other.terms, Some(self.ctx.degree_bound));
        Ok(self.ctx.element_unchecked(p))
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.ctx.element_unchecked(self.terms.plus(&other.terms)))
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.ctx.element_unchecked(self.terms.minus(&other.terms)))
    }

    pub fn scaled(&self, c: Coeff) -> Self {
        self.ctx.element_unchecked(self.terms.scaled(c))
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    /// Reinterpret in the same context over another ring.
    pub fn reduce_into(&self, ring: CoefficientRing) -> Self {
        let ctx = self.ctx.with_ring(ring);
        ctx.element_unchecked(self.terms.change_ring(ring))
    }

    /// Component of degree `d`.
    pub fn degree_part(&self, d: usize) -> Self {
        self.ctx.element_unchecked(self.terms.filter(|w| w.degree() == d))
    }

    /// Parse the text form: `term (("+"|"-") term)*`, `term := [coeff "*"] word`,
    /// `word := "1" | x<i> ("." x<i>)*`; `0` is the zero element.
    pub fn parse(ctx: AlgebraContext, text: &str) -> Result<Self> {
        Parser::new(text).element(ctx)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, |w| w.to_string())
    }
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub(crate) fn offset(&self) -> usize {
        self.pos
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.pos, message)
    }

    /// Unsigned decimal integer directly at the cursor (no leading whitespace skip).
    pub(crate) fn digits(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    pub(crate) fn signed_integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            self.eat('+');
            false
        };
        self.skip_ws();
        let start = self.pos;
        let v = self.digits()?;
        let v = i64::try_from(v).map_err(|_| Error::parse(start, "integer too large"))?;
        Ok(if neg { -v } else { v })
    }

    /// `x<i>` with the index validated against `1..=max`.
    pub(crate) fn generator(&mut self, max: u32) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some('x') {
            return Err(self.error("expected a generator x<i>"));
        }
        self.pos += 1;
        let start = self.pos;
        let i = self.digits()?;
        if i < 1 || i > max as u64 {
            return Err(Error::parse(start, format!("generator index {i} outside [1, {max}]")));
        }
        Ok(i as u32)
    }

    fn word(&mut self, ctx: &AlgebraContext) -> Result<Word> {
        let mut letters = vec![self.generator(ctx.generator_count())?];
        while self.eat('.') {
            letters.push(self.generator(ctx.generator_count())?);
        }
        let w = Word::new(letters);
        if w.len() > ctx.degree_bound() {
            return Err(self.error(format!("word {w} longer than degree bound {}", ctx.degree_bound())));
        }
        Ok(w)
    }

    fn term(&mut self, ctx: &AlgebraContext) -> Result<(Word, Coeff)> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.digits()?;
                let n = i64::try_from(n).map_err(|_| Error::parse(start, "coefficient too large"))?;
                if self.eat('*') {
                    self.skip_ws();
                    if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        let at = self.pos;
                        if self.digits()? != 1 {
                            return Err(Error::parse(at, "only 1 may stand for a word"));
                        }
                        Ok((Word::empty(), n))
                    } else {
                        Ok((self.word(ctx)?, n))
                    }
                } else if n == 1 {
                    Ok((Word::empty(), 1))
                } else {
                    Err(Error::parse(start, "a bare integer must be 1 (the empty word); write c*word"))
                }
            }
            _ => Ok((self.word(ctx)?, 1)),
        }
    }

    fn element(mut self, ctx: AlgebraContext) -> Result<TensorElement> {
        self.skip_ws();
        let rest = self.src[self.pos..].trim_end();
        if rest == "0" {
            return Ok(ctx.zero());
        }
        let mut terms = Combination::zero(ctx.ring());
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (w, c) = self.term(&ctx)?;
            terms.add_term(w, ctx.ring().mul(sign, c));
            if self.at_end() {
                break;
            }
            sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                return Err(self.error("expected '+' or '-'"));
            };
        }
        Ok(ctx.element_unchecked(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32, deg: usize) -> AlgebraContext {
        AlgebraContext::new(d, deg, CoefficientRing::INTEGERS).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let c = ctx(2, 4);
        let x1 = c.generator(1).unwrap();
        let x2 = c.generator(2).unwrap();
        assert_eq!(x1.multiply(&x2).unwrap(), c.word(&[1, 2]).unwrap());
        let lhs = x1.minus(&x2).unwrap().multiply(&x1).unwrap();
        assert_eq!(lhs, c.parse("x1.x1 - x2.x1").unwrap());
    }

    #[test]
    fn multiply_truncates_at_degree_bound() {
        let c = ctx(2, 2);
        let a = c.word(&[1, 2]).unwrap();
        let b = c.word(&[1]).unwrap();
        assert!(a.multiply(&b).unwrap().is_zero());
        assert!(c.zero().multiply(&a).unwrap().is_zero());
        assert_eq!(c.one().multiply(&a).unwrap(), a);
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = ctx(2, 2).generator(1).unwrap();
        let b = ctx(3, 2).generator(1).unwrap();
        assert_eq!(a.multiply(&b), Err(Error::ContextMismatch));
        assert_eq!(a.plus(&b), Err(Error::ContextMismatch));
    }

    #[test]
    fn text_format_examples() {
        let c = ctx(3, 3);
        let e = c.parse("3*x1.x2 - x2.x1").unwrap();
        assert_eq!(e.coefficient(&Word::new(vec![1, 2])), 3);
        assert_eq!(e.coefficient(&Word::new(vec![2, 1])), -1);
        assert_eq!(e.to_string(), "3*x1.x2 - x2.x1");
        assert_eq!(c.parse("1").unwrap(), c.one());
        assert_eq!(c.parse("  0 ").unwrap(), c.zero());
        assert_eq!(c.zero().to_string(), "0");
        assert_eq!(c.parse("2*1 - x3").unwrap().to_string(), "2*1 - x3");
        assert_eq!(c.parse("-x2 + x1").unwrap().to_string(), "x1 - x2");
    }

    #[test]
    fn modular_printing_uses_residues() {
        let c = AlgebraContext::new(2, 2, CoefficientRing::modulo(2).unwrap()).unwrap();
        assert_eq!(c.parse("x1.x2 - x2.x1").unwrap().to_string(), "x1.x2 + x2.x1");
        let c4 = c.with_ring(CoefficientRing::modulo(4).unwrap());
        assert_eq!(c4.parse("-x1").unwrap().to_string(), "3*x1");
    }

    #[test]
    fn parse_errors() {
        let c = ctx(2, 2);
        assert!(matches!(c.parse("x3"), Err(Error::Parse { .. })));
        assert!(matches!(c.parse("x1.x1.x1"), Err(Error::Parse { .. })));
        assert!(matches!(c.parse("3"), Err(Error::Parse { .. })));
        assert!(matches!(c.parse("x1 x2"), Err(Error::Parse { .. })));
        assert!(matches!(c.parse("x1 +"), Err(Error::Parse { .. })));
        assert!(matches!(c.parse(""), Err(Error::Parse { .. })));
        assert!(matches!(c.parse("x0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn basis_words_are_canonical() {
        let c = ctx(2, 3);
        let words: Vec<String> = c.basis_words(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["x1.x1", "x1.x2", "x2.x1", "x2.x2"]);
        assert_eq!(c.basis_words(0), vec![Word::empty()]);
        assert_eq!(c.basis_words_up_to(3).len(), 1 + 2 + 4 + 8);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn element() -> impl Strategy<Value = TensorElement> {
            let word = proptest::collection::vec(1u32..=3, 0..=3);
            proptest::collection::vec((word, -5i64..=5), 0..6).prop_map(|terms| {
                let c = AlgebraContext::new(3, 3, CoefficientRing::INTEGERS).unwrap();
                c.element(terms.into_iter().map(|(w, k)| (Word::new(w), k))).unwrap()
            })
        }

        proptest! {
            #[test]
            fn print_parse_round_trip(e in element()) {
                let text = e.to_string();
                let back = TensorElement::parse(e.context(), &text).unwrap();
                prop_assert_eq!(&back, &e);
                prop_assert_eq!(back.to_string(), text);
            }

            #[test]
            fn product_is_associative(a in element(), b in element(), c in element()) {
                let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
                let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }
}
