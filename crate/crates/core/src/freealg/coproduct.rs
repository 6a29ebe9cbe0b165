use std::fmt;

use crate::combination::{fmt_terms, Combination};
use crate::error::{Error, Result};
use crate::freealg::element::{AlgebraContext, TensorElement};
use crate::freealg::word::{for_each_assignment, Word};
use crate::modarith::Coeff;

/// An element of `T^{⊗k}`: combination of `k`-tuples of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSplitElement {
    ctx: AlgebraContext,
    arity: usize,
    terms: Combination<Vec<Word>>,
}

impl TensorSplitElement {
    pub fn zero(ctx: AlgebraContext, arity: usize) -> Self {
        TensorSplitElement {
            ctx,
            arity,
            terms: Combination::zero(ctx.ring()),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, parts: &[Word]) -> Coeff {
        self.terms.coefficient(&parts.to_vec())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, parts: Vec<Word>, c: Coeff) {
        debug_assert_eq!(parts.len(), self.arity);
        self.terms.add_term(parts, c);
    }

    /// Apply the coproduct to tensor factor `slot`, raising the arity by one.
    pub fn expand_slot(&self, slot: usize) -> Result<Self> {
        if slot >= self.arity {
            return Err(Error::out_of_range("slot", slot, format!("[0, {})", self.arity)));
        }
        let mut out = Self::zero(self.ctx, self.arity + 1);
        for (parts, c) in self.iter() {
            for (pair, d) in coproduct(&parts[slot]).iter() {
                let mut next = parts[..slot].to_vec();
                next.extend(pair.iter().cloned());
                next.extend(parts[slot + 1..].iter().cloned());
                out.add_term(next, self.ctx.ring().mul(c, d));
            }
        }
        Ok(out)
    }

    /// Multiply the tensor factors together (`μ`).
    pub fn multiply_out(&self) -> TensorElement {
        let mut out = Combination::zero(self.ctx.ring());
        for (parts, c) in self.iter() {
            let letters: Vec<u32> = parts.iter().flat_map(|w| w.letters().iter().copied()).collect();
            out.add_term(Word::new(letters), c);
        }
        self.ctx.truncate(out)
    }
}

impl fmt::Display for TensorSplitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, |parts| {
            let inner: Vec<String> = parts.iter().map(|w| w.to_string()).collect();
            format!("({})", inner.join(", "))
        })
    }
}

fn split_context(w: &Word) -> AlgebraContext {
    let max_letter = w.letters().iter().copied().max().unwrap_or(1);
    AlgebraContext::new(max_letter, w.len().max(1), Default::default()).expect("positive bounds")
}

/// `Δ(w)`: sum over subsets `S` of positions of `(w_S, w_{S^c})`.
pub fn coproduct(w: &Word) -> TensorSplitElement {
    iterated_coproduct(w, 2).expect("arity 2 is positive")
}

/// `Δ^{(k-1)}(w)`: sum over ordered splits of the positions into `k`
/// possibly-empty blocks, each block keeping the original order.
pub fn iterated_coproduct(w: &Word, k: usize) -> Result<TensorSplitElement> {
    if k == 0 {
        return Err(Error::out_of_range("k", 0, "positive"));
    }
    let mut out = TensorSplitElement::zero(split_context(w), k);
    for_each_assignment(w.len(), k, |a| out.add_term(w.split_by_assignment(a, k), 1));
    Ok(out)
}

/// [`iterated_coproduct`] in a given context (coefficients in its ring).
pub fn iterated_coproduct_in(ctx: AlgebraContext, w: &Word, k: usize) -> Result<TensorSplitElement> {
    ctx.check_word(w)?;
    let raw = iterated_coproduct(w, k)?;
    let mut out = TensorSplitElement::zero(ctx, k);
    for (parts, c) in raw.iter() {
        out.add_term(parts.clone(), c);
    }
    Ok(out)
}
