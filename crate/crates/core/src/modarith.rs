//! Exact integer, modular and p-adic arithmetic.
//!
//! Coefficients throughout the crate are `i64` values living in a
//! [`CoefficientRing`]: either the integers (modulus 0) or `Z/m`. Integer
//! arithmetic is checked and panics on overflow rather than wrapping; modular
//! arithmetic reduces eagerly to the canonical residue in `[0, m)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = i64;

/// The ground ring `Z` (modulus 0) or `Z/m` (modulus `m >= 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoefficientRing {
    modulus: u64,
}

impl CoefficientRing {
    pub const INTEGERS: CoefficientRing = CoefficientRing { modulus: 0 };

    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 1 || modulus > i64::MAX as u64 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(CoefficientRing { modulus })
    }

    pub fn integers() -> Self {
        Self::INTEGERS
    }

    pub fn modulo(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Self::new(modulus)
    }

    /// `Z/p^r`.
    pub fn prime_power(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = checked_pow(p, r).ok_or_else(|| Error::out_of_range("p^r", i64::MAX, "fits in 63 bits"))?;
        Self::modulo(q)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 0
    }

    pub fn reduce(&self, c: Coeff) -> Coeff {
        if self.modulus == 0 {
            c
        } else {
            c.rem_euclid(self.modulus as i64)
        }
    }

    pub fn reduce_big(&self, c: &BigInt) -> Coeff {
        if self.modulus == 0 {
            c.to_i64().expect("integer coefficient overflow")
        } else {
            let m = BigInt::from(self.modulus);
            let r = ((c % &m) + &m) % &m;
            r.to_i64().expect("residue fits in i64")
        }
    }

    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        if self.modulus == 0 {
            a.checked_add(b).expect("integer coefficient overflow")
        } else {
            ((a as i128 + b as i128).rem_euclid(self.modulus as i128)) as i64
        }
    }

    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        if self.modulus == 0 {
            a.checked_mul(b).expect("integer coefficient overflow")
        } else {
            ((a as i128 * b as i128).rem_euclid(self.modulus as i128)) as i64
        }
    }

    pub fn neg(&self, a: Coeff) -> Coeff {
        if self.modulus == 0 {
            a.checked_neg().expect("integer coefficient overflow")
        } else {
            (-(a as i128)).rem_euclid(self.modulus as i128) as i64
        }
    }

    pub fn is_zero(&self, c: Coeff) -> bool {
        self.reduce(c) == 0
    }
}

impl Default for CoefficientRing {
    fn default() -> Self {
        Self::INTEGERS
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}

/// A p-adic valuation. Zero has infinite valuation, which compares above
/// every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let v = base.checked_pow(exp)?;
    (v <= i64::MAX as u64).then_some(v)
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Largest `e` with `p^e | n`.
pub fn p_valuation(n: i64, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if n == 0 {
        return Ok(Valuation::Infinite);
    }
    let p = p as u128;
    let mut m = n.unsigned_abs() as u128;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    Ok(Valuation::Finite(e))
}

/// [`p_valuation`] for arbitrary-precision integers.
pub fn p_valuation_big(n: &BigInt, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if n.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigUint::from(p);
    let mut m = n.abs().to_biguint().expect("absolute value is nonnegative");
    let mut e = 0;
    loop {
        let (q, r) = (&m / &p, &m % &p);
        if !r.is_zero() {
            break;
        }
        m = q;
        e += 1;
    }
    Ok(Valuation::Finite(e))
}

/// Exact binomial coefficient; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Sum of base-`p` digits.
fn digit_sum(mut n: u64, p: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// `ν_p(C(p^a, k))` for `1 <= k <= p^a`, computed from base-`p` digit sums
/// (the number of carries when adding `k` and `p^a - k`).
pub fn binomial_prime_power_valuation(p: u64, a: u32, k: u64) -> Result<u32> {
    require_prime(p)?;
    let n = checked_pow(p, a).ok_or_else(|| Error::out_of_range("p^a", i64::MAX, "fits in 63 bits"))?;
    if k < 1 || k > n {
        return Err(Error::out_of_range("k", k, format!("[1, {n}]")));
    }
    let carries = (digit_sum(k, p) + digit_sum(n - k, p) - digit_sum(n, p)) / (p - 1);
    Ok(carries as u32)
}
