//! Symmetric groups, their integral group algebras, and the action on
//! tensor powers by permuting positions.
//!
//! Composition convention: `σ.compose(τ)` is `στ`, "apply `τ` first, then
//! `σ`". A permutation acts on a word by moving the letter in position `i`
//! to position `σ(i)`, which makes the action a left action.

use std::fmt;

use crate::combination::{fmt_terms, Combination};
use crate::error::{Error, Result};
use crate::freealg::element::TensorElement;
use crate::freealg::word::Word;
use crate::modarith::{Coeff, CoefficientRing};

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// From one-line notation `[σ(1), ..., σ(n)]`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i < 1 || i as usize > n || seen[i as usize - 1] {
                return Err(Error::out_of_range("permutation image", i, format!("a bijection of [1, {n}]")));
            }
            seen[i as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of the given cycles (rightmost applied first).
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u32> = (1..=n as u32).collect();
            for (j, &a) in cycle.iter().enumerate() {
                let b = cycle[(j + 1) % cycle.len()];
                if a < 1 || a as usize > n || b < 1 || b as usize > n {
                    return Err(Error::out_of_range("cycle entry", a.max(b), format!("[1, {n}]")));
                }
                images[a as usize - 1] = b;
            }
            let c = Self::from_images(images)?;
            acc = c.compose(&acc);
        }
        Ok(acc)
    }

    pub fn transposition(n: usize, i: u32, j: u32) -> Result<Self> {
        if i == j {
            return Err(Error::out_of_range("transposition", i, "two distinct points"));
        }
        Self::from_cycles(n, &[&[i, j]])
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `σ(i)` for `i` in `1..=n`.
    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// `στ`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.arity(), other.arity(), "composing permutations of different arity");
        Permutation {
            images: other.images.iter().map(|&i| self.image(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.arity()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.arity());
        for _ in 0..e.unsigned_abs() {
            acc = base.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| s as usize == i + 1)
    }

    /// All `n!` permutations in lexicographic order of their one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Permutation { images: cur.clone() });
        }
        out
    }

    /// Move the letter in position `i` to position `σ(i)`.
    pub fn act_on_word(&self, w: &Word) -> Word {
        debug_assert_eq!(w.len(), self.arity());
        let mut out = vec![0; w.len()];
        for (i, &a) in w.letters().iter().enumerate() {
            out[self.images[i] as usize - 1] = a;
        }
        Word::new(out)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.arity();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j as usize - 1] = true;
                cycle.push(j);
                j = self.image(j);
            }
            out.push(cycle);
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// An element of the group algebra `R[Σ_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymGroupAlgebraElement {
    arity: usize,
    terms: Combination<Permutation>,
}

impl SymGroupAlgebraElement {
    pub fn zero(arity: usize, ring: CoefficientRing) -> Self {
        SymGroupAlgebraElement {
            arity,
            terms: Combination::zero(ring),
        }
    }

    pub fn from_permutation(sigma: Permutation, ring: CoefficientRing) -> Self {
        Self::from_terms(sigma.arity(), ring, [(sigma, 1)]).expect("arity matches")
    }

    pub fn from_terms(
        arity: usize,
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (Permutation, Coeff)>,
    ) -> Result<Self> {
        let mut out = Self::zero(arity, ring);
        for (sigma, c) in terms {
            if sigma.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: sigma.arity(),
                });
            }
            out.terms.add_term(sigma, c);
        }
        Ok(out)
    }

    /// `φ_n = Σ_σ σ`.
    pub fn symmetrizer(arity: usize, ring: CoefficientRing) -> Self {
        Self::from_terms(arity, ring, Permutation::all(arity).into_iter().map(|s| (s, 1))).expect("arity matches")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn ring(&self) -> CoefficientRing {
        self.terms.ring()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> Coeff {
        self.terms.coefficient(sigma)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The augmentation `χ`: sum of the coefficients.
    pub fn augmentation(&self) -> Coeff {
        let ring = self.ring();
        self.iter().fold(0, |acc, (_, c)| ring.add(acc, c))
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            })
        }
    }

    /// Product `αβ` in the group algebra (`β` acts first).
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let ring = self.ring();
        let mut out = Self::zero(self.arity, ring);
        for (s, a) in self.iter() {
            for (t, b) in other.iter() {
                out.terms.add_term(s.compose(t), ring.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(SymGroupAlgebraElement {
            arity: self.arity,
            terms: self.terms.plus(&other.terms),
        })
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(SymGroupAlgebraElement {
            arity: self.arity,
            terms: self.terms.minus(&other.terms),
        })
    }

    pub fn scaled(&self, c: Coeff) -> Self {
        SymGroupAlgebraElement {
            arity: self.arity,
            terms: self.terms.scaled(c),
        }
    }
}

impl fmt::Display for SymGroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, |s| s.to_string())
    }
}

/// Apply `σ` to a homogeneous element of degree `σ.arity()` by permuting positions.
pub fn permute_positions(sigma: &Permutation, e: &TensorElement) -> Result<TensorElement> {
    let n = sigma.arity();
    if !e.terms().is_homogeneous(n) {
        return Err(Error::Inhomogeneous(n));
    }
    Ok(e.context().element_unchecked(
        e.terms()
            .map_linear(|w| Combination::monomial(e.context().ring(), sigma.act_on_word(w), 1)),
    ))
}

/// Linear extension of [`permute_positions`].
pub fn apply_group_algebra(alpha: &SymGroupAlgebraElement, e: &TensorElement) -> Result<TensorElement> {
    let ctx = e.context();
    if e.is_zero() {
        return Ok(ctx.zero());
    }
    match e.homogeneous_degree() {
        Some(d) if d == alpha.arity() => {}
        Some(d) => {
            return Err(Error::ArityMismatch {
                expected: alpha.arity(),
                found: d,
            })
        }
        None => return Err(Error::Inhomogeneous(alpha.arity())),
    }
    let ring = ctx.ring();
    let mut out = Combination::zero(ring);
    for (w, c) in e.iter() {
        for (sigma, a) in alpha.iter() {
            out.add_term(sigma.act_on_word(w), ring.mul(a, c));
        }
    }
    Ok(ctx.element_unchecked(out))
}

/// Substitute `x_i ↦ x_{σ(i)}` in every word (precomposition with `σ` on the letters).
pub fn relabel_letters(sigma: &Permutation, e: &TensorElement) -> Result<TensorElement> {
    let ctx = e.context();
    if sigma.arity() > ctx.generator_count() as usize {
        return Err(Error::out_of_range(
            "permutation arity",
            sigma.arity(),
            format!("at most {}", ctx.generator_count()),
        ));
    }
    let ring = ctx.ring();
    Ok(ctx.element_unchecked(e.terms().map_linear(|w| {
        let letters: Vec<u32> = w
            .letters()
            .iter()
            .map(|&a| if (a as usize) <= sigma.arity() { sigma.image(a) } else { a })
            .collect();
        Combination::monomial(ring, Word::new(letters), 1)
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::element::AlgebraContext;

    fn ctx(d: u32, deg: usize) -> AlgebraContext {
        AlgebraContext::new(d, deg, CoefficientRing::INTEGERS).unwrap()
    }

    #[test]
    fn enumeration_and_composition() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0).len(), 1);
        let s = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let t = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // στ with τ first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
        assert_eq!(s.compose(&t).images(), &[2, 3, 1]);
        assert_eq!(s.compose(&t).to_string(), "(1 2 3)");
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert!(c.pow(3).is_identity());
        assert_eq!(c.pow(-1), c.inverse());
        assert!(Permutation::from_images(vec![1, 1]).is_err());
    }

    #[test]
    fn permute_positions_examples() {
        let c = ctx(3, 3);
        let tau = Permutation::transposition(2, 1, 2).unwrap();
        let x12 = c.word(&[1, 2]).unwrap();
        assert_eq!(permute_positions(&tau, &x12).unwrap(), c.word(&[2, 1]).unwrap());
        assert_eq!(permute_positions(&Permutation::identity(2), &x12).unwrap(), x12);
        let cyc = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let x123 = c.word(&[1, 2, 3]).unwrap();
        let once = permute_positions(&cyc, &x123).unwrap();
        // Letter in position 1 moves to position 2, and so on.
        assert_eq!(once, c.word(&[3, 1, 2]).unwrap());
        let thrice = permute_positions(&cyc, &permute_positions(&cyc, &once).unwrap()).unwrap();
        assert_eq!(thrice, x123);
    }

    #[test]
    fn permute_positions_rejects_inhomogeneous() {
        let c = ctx(2, 3);
        let e = c.parse("x1 + x1.x2").unwrap();
        let tau = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(permute_positions(&tau, &e), Err(Error::Inhomogeneous(2)));
    }

    #[test]
    fn action_is_a_left_action() {
        let c = ctx(4, 4);
        let w = c.word(&[1, 2, 3, 4]).unwrap();
        for s in Permutation::all(4) {
            for t in Permutation::all(4).iter().step_by(5) {
                let lhs = permute_positions(&s, &permute_positions(t, &w).unwrap()).unwrap();
                let rhs = permute_positions(&s.compose(t), &w).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn group_algebra_examples() {
        let c = ctx(2, 2);
        let z = CoefficientRing::INTEGERS;
        let phi2 = SymGroupAlgebraElement::symmetrizer(2, z);
        let x12 = c.word(&[1, 2]).unwrap();
        assert_eq!(apply_group_algebra(&phi2, &x12).unwrap(), c.parse("x1.x2 + x2.x1").unwrap());
        let zero = SymGroupAlgebraElement::zero(2, z);
        assert!(apply_group_algebra(&zero, &x12).unwrap().is_zero());
        let phi3 = SymGroupAlgebraElement::symmetrizer(3, z);
        assert!(matches!(apply_group_algebra(&phi3, &x12), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn group_algebra_product_matches_composed_action() {
        let c = ctx(3, 3);
        let z = CoefficientRing::INTEGERS;
        let perms = Permutation::all(3);
        let a = SymGroupAlgebraElement::from_terms(3, z, [(perms[1].clone(), 2), (perms[4].clone(), -1)]).unwrap();
        let b = SymGroupAlgebraElement::from_terms(3, z, [(perms[3].clone(), 3), (perms[0].clone(), 1)]).unwrap();
        for w in c.basis_words(3) {
            let e = c.term(w, 1).unwrap();
            let seq = apply_group_algebra(&a, &apply_group_algebra(&b, &e).unwrap()).unwrap();
            assert_eq!(seq, apply_group_algebra(&a.multiply(&b).unwrap(), &e).unwrap());
        }
    }

    #[test]
    fn relabeling_letters() {
        let c = ctx(3, 3);
        let s = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let e = c.parse("x1.x2 - 2*x3").unwrap();
        assert_eq!(relabel_letters(&s, &e).unwrap(), c.parse("x2.x3 - 2*x1").unwrap());
    }
}
