use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cohen::{combinatorial_james_hopf, represent, GroupWord};
use crate::error::{Error, Result};
use crate::freealg::{
    apply_group_algebra, identity_convolution_power, left_normed_bracket, lie_trace_element, permute_positions,
    relabel_letters, trace_element, AlgebraContext, EndoMap, Permutation, SymGroupAlgebraElement, Word,
};
use crate::hopfcheck::blocks::{homology_james_hopf_linear, BlockElement};
use crate::hopfcheck::report::CheckReport;
use crate::modarith::{binomial_prime_power_valuation, checked_pow, is_prime, p_valuation, CoefficientRing, Valuation};

/// Longest word evaluated by the convolution checks.
pub const MAX_DEGREE: usize = 5;
/// Most generators used by the convolution checks.
pub const MAX_GENERATORS: u32 = 5;
/// Most ordered splits enumerated by one convolution check.
pub const MAX_SPLITS: u64 = 10_000_000;
/// Largest `n` for the homological route of the Hopf–Whitehead check.
pub const MAX_HOMOLOGICAL_ARITY: u32 = 8;
/// Largest `n` for the combinatorial route of the Hopf–Whitehead check (run for `k = 2, 3`).
pub const MAX_COMBINATORIAL_ARITY: u32 = 4;

const Z: CoefficientRing = CoefficientRing::INTEGERS;

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn require_positive(what: &'static str, v: u32) -> Result<()> {
    if v == 0 {
        Err(Error::out_of_range(what, 0, "at least 1"))
    } else {
        Ok(())
    }
}

/// Homological `H_k` of the `n`-fold left-normed bracket vanishes when `k ∤ n`,
/// and for small `n` so does the combinatorial `H_k` of the `n`-fold commutator.
pub fn check_hopf_whitehead_vanishing(n: u32, k: u32) -> Result<CheckReport> {
    if !(1 < k && k < n) {
        return Err(Error::Hypothesis(format!("need 1 < k < n, got n = {n}, k = {k}")));
    }
    if n.is_multiple_of(k) {
        return Err(Error::Hypothesis(format!("k = {k} divides n = {n}")));
    }
    let mut rb = CheckReport::start("hopf-whitehead").param("n", n).param("k", k);
    if n > MAX_HOMOLOGICAL_ARITY {
        return Ok(rb.skipped(format!("n = {n} exceeds {MAX_HOMOLOGICAL_ARITY}")));
    }
    let combinatorial = n <= MAX_COMBINATORIAL_ARITY && (k == 2 || k == 3);
    rb.set(
        "routes",
        if combinatorial { json!(["homological", "combinatorial"]) } else { json!(["homological"]) },
    );
    let ctx = AlgebraContext::new(n, n as usize, Z)?;
    let letters: Vec<u32> = (1..=n).collect();
    let beta = left_normed_bracket(ctx, &letters)?;
    let h = homology_james_hopf_linear(&beta, k as usize)?;
    let mut failures = Vec::new();
    if !h.is_zero() {
        failures.push(format!("homological H{k} of the {n}-fold bracket: {h}"));
    }
    if combinatorial {
        let c = GroupWord::iterated_commutator(n)?;
        let rep = represent(&combinatorial_james_hopf(&c, k as usize)?, Z);
        if !rep.is_one() {
            failures.push(format!("combinatorial H{k} of the {n}-fold commutator represents to {rep}"));
        }
    }
    Ok(rb.conclude(failures))
}

/// `Φ = τ34 - τ12 τ34 + τ14 τ23 + τ13 τ24` in `Z[Σ_4]`.
pub fn phi_element() -> SymGroupAlgebraElement {
    let c = |cycles: &[&[u32]]| Permutation::from_cycles(4, cycles).expect("valid cycles");
    SymGroupAlgebraElement::from_terms(
        4,
        Z,
        [
            (c(&[&[3, 4]]), 1),
            (c(&[&[1, 2], &[3, 4]]), -1),
            (c(&[&[1, 4], &[2, 3]]), 1),
            (c(&[&[1, 3], &[2, 4]]), 1),
        ],
    )
    .expect("arity 4")
}

/// The four routes to `H_2 ∘ β_4` compared by [`check_h2_beta4`].
#[derive(Clone, Debug)]
pub struct H2Beta4Routes {
    /// Partition formula applied to `[[[x1, x2], x3], x4]`.
    pub partition: BlockElement,
    /// `[x1x2, x4x3] - [x2x1, x4x3] + [x4x1, x3x2] + [x3x1, x4x2]`.
    pub printed: BlockElement,
    /// `S_2` (block bracket of the two halves) applied to `Φ(x1 x2 x3 x4)`.
    pub phi: BlockElement,
    /// Top part of the representation of `H_2` of the 4-fold commutator.
    pub group: BlockElement,
}

pub fn h2_beta4_routes() -> H2Beta4Routes {
    let ctx = AlgebraContext::new(4, 4, Z).expect("valid context");
    let beta = left_normed_bracket(ctx, &[1, 2, 3, 4]).expect("letters in range");
    let partition = homology_james_hopf_linear(&beta, 2).expect("k positive");

    let w = |v: &[u32]| Word::new(v);
    let mut printed = BlockElement::zero(2, Z);
    for (u, v, c) in [
        (w(&[1, 2]), w(&[4, 3]), 1),
        (w(&[2, 1]), w(&[4, 3]), -1),
        (w(&[4, 1]), w(&[3, 2]), 1),
        (w(&[3, 1]), w(&[4, 2]), 1),
    ] {
        let b = BlockElement::block_bracket(&u, &v, Z).expect("equal block sizes");
        printed = printed.plus(&b.scaled(c)).expect("same ambient");
    }

    let x = ctx.word(&[1, 2, 3, 4]).expect("letters in range");
    let permuted = apply_group_algebra(&phi_element(), &x).expect("arity 4");
    let mut phi = BlockElement::zero(2, Z);
    for (u, c) in permuted.iter() {
        let l = u.letters();
        let b = BlockElement::block_bracket(&w(&l[..2]), &w(&l[2..]), Z).expect("equal block sizes");
        phi = phi.plus(&b.scaled(c)).expect("same ambient");
    }

    let comm = GroupWord::iterated_commutator(4).expect("rank 4");
    let h = combinatorial_james_hopf(&comm, 2).expect("simple generators");
    let group = BlockElement::from_multilinear(&represent(&h, Z), 2);

    H2Beta4Routes {
        partition,
        printed,
        phi,
        group,
    }
}

/// Exact agreement over `Z` of the partition formula, the printed four-bracket
/// expression, and `S_2 ∘ Φ`.
pub fn check_h2_beta4() -> CheckReport {
    let rb = CheckReport::start("h2-beta4");
    let r = h2_beta4_routes();
    if r.partition == r.printed && r.printed == r.phi {
        return rb.param("value", r.partition.to_string()).pass();
    }
    let diff = |a: &BlockElement, b: &BlockElement| a.minus(b).expect("same ambient").to_string();
    rb.fail(
        [
            format!("(a) partition formula: {}", r.partition),
            format!("(b) four-bracket expression: {}", r.printed),
            format!("(c) S2 of Phi(x1.x2.x3.x4): {}", r.phi),
            format!("group route, top part of H2 of the 4-fold commutator: {}", r.group),
            format!("(a) - (b): {}", diff(&r.partition, &r.printed)),
            format!("(a) - (c): {}", diff(&r.partition, &r.phi)),
            format!("(b) - (c): {}", diff(&r.printed, &r.phi)),
        ]
        .join("\n"),
    )
}

/// `Id^{*p^(r+t)}` agrees with the convolution unit on words of length
/// `1..=p^(t+1) - 1` over `Z/p^r`, and `Id^{*p^(r+t-1)}` does not (when `t ≥ 1` or `r ≥ 2`).
pub fn check_power_map_triviality(p: u64, r: u32, t: u32, dim: u32) -> Result<CheckReport> {
    require_prime(p)?;
    require_positive("r", r)?;
    require_positive("dim", dim)?;
    let mut rb = CheckReport::start("power")
        .param("p", p)
        .param("r", r)
        .param("t", t)
        .param("dim", dim);
    let (Some(top), Some(m)) = (checked_pow(p, t + 1), checked_pow(p, r + t)) else {
        return Ok(rb.skipped("exponents overflow"));
    };
    let len = top - 1;
    if len > MAX_DEGREE as u64 || dim > MAX_GENERATORS {
        return Ok(rb.skipped(format!(
            "words of length up to {len} over {dim} generators exceed degree {MAX_DEGREE} or {MAX_GENERATORS} generators"
        )));
    }
    let cost = (1..=len as u32).try_fold(0u64, |acc, l| {
        let words = (dim as u64).checked_pow(l)?;
        acc.checked_add(words.checked_mul(m.checked_pow(l)?)?)
    });
    if cost.is_none_or(|c| c > MAX_SPLITS) {
        return Ok(rb.skipped(format!("more than {MAX_SPLITS} splits to enumerate")));
    }
    if (dim as u64) < len {
        return Err(Error::Hypothesis(format!("dim = {dim} is below p^(t+1) - 1 = {len}")));
    }
    let ring = CoefficientRing::prime_power(p, r)?;
    let ctx = AlgebraContext::new(dim, len as usize, ring)?;
    let unit = EndoMap::unit(ctx);
    let power = identity_convolution_power(ctx, m as u32)?;
    rb.set("exponent", m);
    rb.set("max_length", len);
    let mut failures = Vec::new();
    if let Some(w) = power.first_disagreement(&unit, len as usize)? {
        failures.push(format!("Id^*{m}({w}) = {} over {ring}, expected 0", power.apply_word(&w)));
    }
    if t >= 1 || r >= 2 {
        let lower = m / p;
        let map = identity_convolution_power(ctx, lower as u32)?;
        match map.first_disagreement(&unit, len as usize)? {
            Some(w) => {
                rb.set("sharpness_exponent", lower);
                rb.set("sharpness_word", w.to_string());
                rb.set("sharpness_value", map.apply_word(&w).to_string());
            }
            None => failures.push(format!(
                "no sharpness witness: Id^*{lower} also agrees with the unit up to length {len} over {ring}"
            )),
        }
    }
    Ok(rb.conclude(failures))
}

/// With `n = p^(t+1)` and `m = p^(r+t)`, over `Z/p^r`: `Id^{*m}(x1...xn)` minus the
/// unit is `c·tr_n` with `ν_p(c) = r - 1 = ν_p(C(m, n))`, and `c·tr_n = c·tr̄_n`.
pub fn check_obstruction_formula(p: u64, r: u32, t: u32) -> Result<CheckReport> {
    require_prime(p)?;
    require_positive("r", r)?;
    let mut rb = CheckReport::start("obstruction").param("p", p).param("r", r).param("t", t);
    let (Some(n), Some(m)) = (checked_pow(p, t + 1), checked_pow(p, r + t)) else {
        return Ok(rb.skipped("exponents overflow"));
    };
    if n > MAX_DEGREE as u64 {
        return Ok(rb.skipped(format!("p^(t+1) = {n} exceeds {MAX_DEGREE}")));
    }
    if m.checked_pow(n as u32).is_none_or(|c| c > MAX_SPLITS) {
        return Ok(rb.skipped(format!("more than {MAX_SPLITS} splits to enumerate")));
    }
    let n = n as usize;
    let ring = CoefficientRing::prime_power(p, r)?;
    let ctx = AlgebraContext::new(n as u32, n, ring)?;
    let word = Word::multilinear(n as u32);
    let power = identity_convolution_power(ctx, m as u32)?;
    let value = power.apply_word(&word).minus(&EndoMap::unit(ctx).apply_word(&word))?;
    let c = value.coefficient(&word);
    let valuation = p_valuation(c, p)?;
    let binomial_valuation = binomial_prime_power_valuation(p, r + t, n as u64)?;
    rb.set("n", n);
    rb.set("exponent", m);
    rb.set("scalar", c);
    rb.set("valuation", valuation.to_string());
    rb.set("binomial_valuation", binomial_valuation);

    let mut failures = Vec::new();
    if let Some((w, _)) = value.iter().find(|(w, _)| w.len() != n || !w.is_multilinear()) {
        failures.push(format!("term {w} of the obstruction is not a multilinear word of length {n}"));
    }
    let tr = trace_element(ctx, n)?.scaled(c);
    if value != tr {
        failures.push(format!("obstruction - {c}*tr_{n} = {}", value.minus(&tr)?));
    }
    if valuation != Valuation::Finite(r - 1) {
        failures.push(format!("scalar {c} has {p}-adic valuation {valuation}, expected {}", r - 1));
    }
    if binomial_valuation != r - 1 {
        failures.push(format!(
            "valuation of C({m}, {n}) is {binomial_valuation}, expected {}",
            r - 1
        ));
    }
    let lie = lie_trace_element(ctx, n)?.scaled(c);
    if lie != tr {
        failures.push(format!("{c}*(lie trace - trace) = {}", lie.minus(&tr)?));
    }
    Ok(rb.conclude(failures))
}

/// Over `Z/p` with `n = p^t`: `tr̄_n = tr_n`, and `tr̄_n` is fixed by every
/// permutation of positions and of letters.
pub fn check_cmn_congruence(p: u64, t: u32) -> Result<CheckReport> {
    require_prime(p)?;
    require_positive("t", t)?;
    let mut rb = CheckReport::start("cmn").param("p", p).param("t", t);
    let n = match checked_pow(p, t) {
        Some(n) if n <= MAX_DEGREE as u64 => n as usize,
        _ => return Ok(rb.skipped(format!("p^t exceeds {MAX_DEGREE}"))),
    };
    rb.set("n", n);
    let ring = CoefficientRing::modulo(p)?;
    let ctx = AlgebraContext::new(n as u32, n, ring)?;
    let tr = trace_element(ctx, n)?;
    let lie = lie_trace_element(ctx, n)?;
    let mut failures = Vec::new();
    if lie != tr {
        failures.push(format!("lie trace - trace = {} mod {p}", lie.minus(&tr)?));
    }
    for sigma in Permutation::all(n) {
        let moved = permute_positions(&sigma, &lie)?;
        if moved != lie {
            failures.push(format!("positions permuted by {sigma}: difference {}", moved.minus(&lie)?));
            break;
        }
        let relabeled = relabel_letters(&sigma, &lie)?;
        if relabeled != lie {
            failures.push(format!("letters relabeled by {sigma}: difference {}", relabeled.minus(&lie)?));
            break;
        }
    }
    Ok(rb.conclude(failures))
}

/// `(123) + (123)^2 + (123)^3` in `R[Σ_3]`.
pub fn three_cycle_sum(ring: CoefficientRing) -> SymGroupAlgebraElement {
    let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).expect("valid cycle");
    SymGroupAlgebraElement::from_terms(3, ring, (1..=3).map(|e| (c.pow(e), 1))).expect("arity 3")
}

/// Both `φ_n α` and `α φ_n` equal `χ(α) φ_n`, in the group algebra and acting
/// on tensors, for seeded random `α`; likewise for [`three_cycle_sum`] over `Z` and `Z/2`.
pub fn check_trace_lemmas(n: usize, trials: u32, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, "at least 1"));
    }
    let rb = CheckReport::start("trace")
        .param("n", n)
        .param("trials", trials)
        .param("seed", seed);
    if n > MAX_DEGREE {
        return Ok(rb.skipped(format!("n = {n} exceeds {MAX_DEGREE}")));
    }
    let perms = Permutation::all(n);
    let phi = SymGroupAlgebraElement::symmetrizer(n, Z);
    let ctx = AlgebraContext::new(n as u32, n, Z)?;
    let x = ctx.term(Word::multilinear(n as u32), 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let alpha = SymGroupAlgebraElement::from_terms(n, Z, perms.iter().map(|s| (s.clone(), rng.gen_range(-3..=3))))?;
        let chi = alpha.augmentation();
        let expected = phi.scaled(chi);
        if phi.multiply(&alpha)? != expected {
            failures.push(format!("trial {trial}: phi*alpha differs from {chi}*phi for alpha = {alpha}"));
        }
        if alpha.multiply(&phi)? != expected {
            failures.push(format!("trial {trial}: alpha*phi differs from {chi}*phi for alpha = {alpha}"));
        }
        let letters: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=n as u32)).collect();
        for e in [x.clone(), ctx.word(&letters)?] {
            let rhs = apply_group_algebra(&phi, &e)?.scaled(chi);
            let after = apply_group_algebra(&phi, &apply_group_algebra(&alpha, &e)?)?;
            let before = apply_group_algebra(&alpha, &apply_group_algebra(&phi, &e)?)?;
            if after != rhs || before != rhs {
                failures.push(format!("trial {trial}: action on {e} differs from {chi}*phi for alpha = {alpha}"));
            }
        }
        if !failures.is_empty() {
            break;
        }
    }
    for ring in [Z, CoefficientRing::modulo(2)?] {
        let f = three_cycle_sum(ring);
        let phi3 = SymGroupAlgebraElement::symmetrizer(3, ring);
        let chi = f.augmentation();
        if chi != ring.reduce(3) {
            failures.push(format!("augmentation of {f} is {chi} over {ring}"));
        }
        let ctx3 = AlgebraContext::new(3, 3, ring)?;
        for w in ctx3.basis_words(3) {
            let e = ctx3.term(w, 1)?;
            let rhs = apply_group_algebra(&phi3, &e)?.scaled(3);
            let after = apply_group_algebra(&phi3, &apply_group_algebra(&f, &e)?)?;
            let before = apply_group_algebra(&f, &apply_group_algebra(&phi3, &e)?)?;
            if after != rhs || before != rhs {
                failures.push(format!("f = {f} on {e} over {ring}: differs from 3*phi"));
                break;
            }
        }
    }
    Ok(rb.conclude(failures))
}
