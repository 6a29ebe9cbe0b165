//! The convolution algebra `Hom(T, T)`.
//!
//! An [`EndoMap`] is a degree-preserving linear self-map of the truncated
//! tensor algebra, given lazily by its value on each basis word. The
//! convolution product is `f * g = μ ∘ (f ⊗ g) ∘ Δ`, with unit `1 = η ∘ ε`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::freealg::element::{AlgebraContext, TensorElement};
use crate::freealg::word::{for_each_assignment, Word};
use crate::modarith::Coeff;

type Rule = Arc<dyn Fn(&Word) -> Combination<Word> + Send + Sync>;

#[derive(Clone)]
pub struct EndoMap {
    ctx: AlgebraContext,
    rule: Rule,
}

impl fmt::Debug for EndoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EndoMap").field("ctx", &self.ctx).finish_non_exhaustive()
    }
}

impl EndoMap {
    /// A map given by its value on basis words. Values are reduced into the
    /// context ring and truncated to the context.
    pub fn from_rule(ctx: AlgebraContext, rule: impl Fn(&Word) -> Combination<Word> + Send + Sync + 'static) -> Self {
        EndoMap {
            ctx,
            rule: Arc::new(rule),
        }
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn identity(ctx: AlgebraContext) -> Self {
        let ring = ctx.ring();
        Self::from_rule(ctx, move |w| Combination::monomial(ring, w.clone(), 1))
    }

    /// The convolution unit `η ∘ ε`: the empty word maps to 1, every other word to 0.
    pub fn unit(ctx: AlgebraContext) -> Self {
        let ring = ctx.ring();
        Self::from_rule(ctx, move |w| {
            if w.is_empty() {
                Combination::monomial(ring, Word::empty(), 1)
            } else {
                Combination::zero(ring)
            }
        })
    }

    /// `Īd = Id − 1`: fixes positive-degree words, kills the unit.
    pub fn reduced_identity(ctx: AlgebraContext) -> Self {
        let ring = ctx.ring();
        Self::from_rule(ctx, move |w| {
            if w.is_empty() {
                Combination::zero(ring)
            } else {
                Combination::monomial(ring, w.clone(), 1)
            }
        })
    }

    pub fn apply_word(&self, w: &Word) -> TensorElement {
        self.ctx.truncate((self.rule)(w))
    }

    pub fn apply(&self, e: &TensorElement) -> Result<TensorElement> {
        if e.context() != self.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.ctx.truncate(e.terms().map_linear(|w| (self.rule)(w))))
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// `(f * g)(w) = Σ f(w_S) g(w_{S^c})` over the 2-splits of `w`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let (f, g) = (self.clone(), other.clone());
        let ctx = self.ctx;
        Ok(Self::from_rule(ctx, move |w| {
            let mut out = Combination::zero(ctx.ring());
            let n = w.len();
            for mask in 0..(1u64 << n) {
                let (left, right) = w.split_by_mask(mask);
                let fl = f.apply_word(&left);
                if fl.is_zero() {
                    continue;
                }
                let gr = g.apply_word(&right);
                out.add_scaled(&fl.terms().product(gr.terms(), Some(ctx.degree_bound())), 1);
            }
            out
        }))
    }

    /// `f * f * ... * f` (`m` factors) by repeated convolution; `m = 0` gives the unit.
    pub fn convolution_power(&self, m: u32) -> Self {
        let mut acc = Self::unit(self.ctx);
        for _ in 0..m {
            acc = acc.convolve(self).expect("same context");
        }
        acc
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.linear_combination(other, 1)
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.linear_combination(other, -1)
    }

    fn linear_combination(&self, other: &Self, sign: Coeff) -> Result<Self> {
        self.same_context(other)?;
        let (f, g) = (self.clone(), other.clone());
        Ok(Self::from_rule(self.ctx, move |w| {
            let mut out = (f.rule)(w);
            out.add_scaled(&(g.rule)(w), sign);
            out
        }))
    }

    pub fn scaled(&self, c: Coeff) -> Self {
        let f = self.clone();
        Self::from_rule(self.ctx, move |w| (f.rule)(w).scaled(c))
    }

    /// First basis word of length `<= max_degree` (canonical order) on which the two maps differ.
    pub fn first_disagreement(&self, other: &Self, max_degree: usize) -> Result<Option<Word>> {
        self.same_context(other)?;
        Ok(self
            .ctx
            .basis_words_up_to(max_degree)
            .into_iter()
            .find(|w| self.apply_word(w) != other.apply_word(w)))
    }

    pub fn agrees_with(&self, other: &Self, max_degree: usize) -> Result<bool> {
        Ok(self.first_disagreement(other, max_degree)?.is_none())
    }
}

/// Sum over ordered `blocks`-splits of `w` of the concatenated blocks.
/// With `nonempty`, only splits into nonempty blocks count.
fn split_concatenations(ctx: AlgebraContext, w: &Word, blocks: usize, nonempty: bool) -> Combination<Word> {
    let letters = w.letters();
    let n = letters.len();
    let mut counts: HashMap<Vec<u32>, Coeff> = HashMap::new();
    let mut buf = Vec::with_capacity(n);
    let mut used = vec![false; blocks];
    for_each_assignment(n, blocks, |a| {
        if nonempty {
            used.iter_mut().for_each(|u| *u = false);
            a.iter().for_each(|&b| used[b] = true);
            if used.iter().any(|u| !u) {
                return;
            }
        }
        buf.clear();
        for b in 0..blocks {
            buf.extend(a.iter().zip(letters).filter(|(&ab, _)| ab == b).map(|(_, &x)| x));
        }
        *counts.entry(buf.clone()).or_insert(0) += 1;
    });
    Combination::from_terms(ctx.ring(), counts.into_iter().map(|(k, c)| (Word::new(k), c)))
}

/// `Id^{*m}`, evaluated per word by enumerating the `m^len` ordered splits.
pub fn identity_convolution_power(ctx: AlgebraContext, m: u32) -> Result<EndoMap> {
    if m == 0 {
        return Err(Error::out_of_range("m", 0, "positive"));
    }
    Ok(EndoMap::from_rule(ctx, move |w| split_concatenations(ctx, w, m as usize, false)))
}

/// `Īd^{*k}`, evaluated per word by enumerating splits into `k` nonempty blocks.
pub fn reduced_identity_power(ctx: AlgebraContext, k: u32) -> Result<EndoMap> {
    if k == 0 {
        return Err(Error::out_of_range("k", 0, "positive"));
    }
    Ok(EndoMap::from_rule(ctx, move |w| {
        if w.len() < k as usize {
            Combination::zero(ctx.ring())
        } else {
            split_concatenations(ctx, w, k as usize, true)
        }
    }))
}

/// Number of ordered `m`-splits evaluated by [`identity_convolution_power`] on a word of length `len`.
pub fn split_enumeration_cost(m: u64, len: u32) -> Option<u64> {
    m.checked_pow(len)
}
