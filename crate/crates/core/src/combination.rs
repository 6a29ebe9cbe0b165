//! Sparse finite linear combinations over a [`CoefficientRing`].
//!
//! Every element type in the crate (tensor elements, split tensors, block
//! words, group-algebra elements, multilinear elements) is a `Combination`
//! keyed by its own basis type.

use std::collections::btree_map::{self, BTreeMap};

use crate::modarith::{Coeff, CoefficientRing};

/// A basis element that multiplies by concatenation.
pub trait Monomial: Ord + Clone {
    fn concat(&self, other: &Self) -> Self;
    fn degree(&self) -> usize;
}

/// Map from basis keys to nonzero ring coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    ring: CoefficientRing,
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero(ring: CoefficientRing) -> Self {
        Combination {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ring: CoefficientRing, key: K, coeff: Coeff) -> Self {
        let mut c = Self::zero(ring);
        c.add_term(key, coeff);
        c
    }

    pub fn from_terms(ring: CoefficientRing, terms: impl IntoIterator<Item = (K, Coeff)>) -> Self {
        let mut c = Self::zero(ring);
        for (k, v) in terms {
            c.add_term(k, v);
        }
        c
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        let ring = self.ring;
        let coeff = ring.reduce(coeff);
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = ring.add(*e.get(), coeff);
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, key: &K) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, Coeff)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn add_scaled(&mut self, other: &Self, scale: Coeff) {
        debug_assert_eq!(self.ring, other.ring);
        let ring = self.ring;
        for (k, c) in other.iter() {
            self.add_term(k.clone(), ring.mul(c, scale));
        }
    }

    pub fn scaled(&self, scale: Coeff) -> Self {
        let mut out = Self::zero(self.ring);
        out.add_scaled(self, scale);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    /// Same terms, coefficients reduced into `ring`.
    pub fn change_ring(&self, ring: CoefficientRing) -> Self {
        Self::from_terms(ring, self.iter().map(|(k, c)| (k.clone(), c)))
    }

    /// Linear extension of a map on basis keys.
    pub fn map_linear<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<J>) -> Combination<J> {
        let mut out = Combination::zero(self.ring);
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Keep only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Combination {
            ring: self.ring,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, &c)| (k.clone(), c)).collect(),
        }
    }
}

impl<K: Monomial> Combination<K> {
    /// Concatenation product; terms of degree above `max_degree` are dropped.
    pub fn product(&self, other: &Self, max_degree: Option<usize>) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let ring = self.ring;
        let mut out = Self::zero(ring);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                if let Some(d) = max_degree {
                    if a.degree() + b.degree() > d {
                        continue;
                    }
                }
                out.add_term(a.concat(b), ring.mul(ca, cb));
            }
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self, max_degree: Option<usize>) -> Self {
        self.product(other, max_degree).minus(&other.product(self, max_degree))
    }

    /// Is every term of degree `d`?
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.keys().all(|k| k.degree() == d)
    }
}

/// Write terms in the `[coeff "*"] key` text form, joined by ` + ` / ` - `.
///
/// Unit coefficients are omitted; the zero combination prints as `0`.
pub(crate) fn fmt_terms<K: Ord + Clone>(
    f: &mut std::fmt::Formatter<'_>,
    combo: &Combination<K>,
    mut key: impl FnMut(&K) -> String,
) -> std::fmt::Result {
    if combo.is_zero() {
        return write!(f, "0");
    }
    for (i, (k, c)) in combo.iter().enumerate() {
        let (neg, mag) = (c < 0, c.unsigned_abs());
        match (i, neg) {
            (0, false) => {}
            (0, true) => write!(f, "-")?,
            (_, false) => write!(f, " + ")?,
            (_, true) => write!(f, " - ")?,
        }
        if mag != 1 {
            write!(f, "{mag}*")?;
        }
        write!(f, "{}", key(k))?;
    }
    Ok(())
}
