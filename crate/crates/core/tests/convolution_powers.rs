use hopfcalc::freealg::{identity_convolution_power, reduced_identity_power, AlgebraContext, EndoMap, Permutation, Word};
use hopfcalc::modarith::{binomial, CoefficientRing};
use num_traits::ToPrimitive;

const Z: CoefficientRing = CoefficientRing::INTEGERS;

fn binom(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || b > a {
        0
    } else {
        binomial(a as u64, b as u64).to_i64().unwrap()
    }
}

/// Coefficient of the rearrangement `y` of `x1...xn` in `Id^{*m}(x1...xn)`:
/// weakly increasing block labels along `y`, strictly increasing at each
/// descent, counted as `C(m + n - 1 - des(y), n)`.
fn descent_count(y: &[u32], m: i64) -> i64 {
    let n = y.len() as i64;
    let des = y.windows(2).filter(|w| w[0] > w[1]).count() as i64;
    binom(m + n - 1 - des, n)
}

#[test]
fn identity_power_on_multilinear_word_matches_descent_formula() {
    for n in 1..=4u32 {
        let ctx = AlgebraContext::new(n, n as usize, Z).unwrap();
        let x = Word::multilinear(n);
        for m in 1..=6u32 {
            let value = identity_convolution_power(ctx, m).unwrap().apply_word(&x);
            let mut support = 0;
            for sigma in Permutation::all(n as usize) {
                let y = sigma.images().to_vec();
                let expected = descent_count(&y, m as i64);
                assert_eq!(value.coefficient(&Word::new(y.clone())), expected, "n={n} m={m} {y:?}");
                support += usize::from(expected != 0);
            }
            assert_eq!(value.len(), support, "n={n} m={m}");
        }
    }
}

#[test]
fn reduced_powers_vanish_above_word_length() {
    let ctx = AlgebraContext::new(2, 5, Z).unwrap();
    for w in ctx.basis_words_up_to(5) {
        for k in 1..=6u32 {
            let v = reduced_identity_power(ctx, k).unwrap().apply_word(&w);
            if k as usize > w.len() {
                assert!(v.is_zero(), "k={k} on {w}");
            }
        }
    }
}

#[test]
fn top_reduced_power_is_the_full_symmetrization_of_letters() {
    let ctx = AlgebraContext::new(4, 4, Z).unwrap();
    for w in ctx.basis_words(3) {
        let v = reduced_identity_power(ctx, 3).unwrap().apply_word(&w);
        let mut expected = ctx.zero();
        for sigma in Permutation::all(3) {
            let letters: Vec<u32> = sigma.images().iter().map(|&i| w.letters()[i as usize - 1]).collect();
            expected = expected.plus(&ctx.word(&letters).unwrap()).unwrap();
        }
        assert_eq!(v, expected, "{w}");
    }
}

#[test]
fn binomial_expansion_over_prime_powers() {
    for modulus in [2u64, 4, 9] {
        let ring = CoefficientRing::modulo(modulus).unwrap();
        let ctx = AlgebraContext::new(2, 4, ring).unwrap();
        for m in 1..=5u32 {
            let mut sum = EndoMap::unit(ctx);
            for k in 1..=m {
                let c = binom(m as i64, k as i64);
                sum = sum.plus(&reduced_identity_power(ctx, k).unwrap().scaled(c)).unwrap();
            }
            let direct = identity_convolution_power(ctx, m).unwrap();
            assert!(direct.agrees_with(&sum, 4).unwrap(), "m={m} mod {modulus}");
        }
    }
}

#[test]
fn power_map_orders_at_desk_scale() {
    // Id^{*p^(r+t)} is the unit on words of length < p^(t+1) over Z/p^r.
    for (p, r, t) in [(2u64, 1u32, 0u32), (2, 1, 1), (3, 1, 0), (2, 2, 0), (2, 2, 1), (5, 1, 0)] {
        let ring = CoefficientRing::prime_power(p, r).unwrap();
        let len = p.pow(t + 1) as usize - 1;
        let ctx = AlgebraContext::new(2, len, ring).unwrap();
        let m = p.pow(r + t) as u32;
        let power = identity_convolution_power(ctx, m).unwrap();
        assert!(power.agrees_with(&EndoMap::unit(ctx), len).unwrap(), "({p},{r},{t})");
    }
}
