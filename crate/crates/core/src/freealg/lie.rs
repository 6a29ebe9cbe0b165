//! Left-normed brackets and the trace elements built from them.

use crate::error::{Error, Result};
use crate::freealg::element::{AlgebraContext, TensorElement};
use crate::freealg::symmetric::Permutation;

/// `[[x_{a1}, x_{a2}], ..., x_{am}]`; a single letter is itself.
pub fn left_normed_bracket(ctx: AlgebraContext, letters: &[u32]) -> Result<TensorElement> {
    let (&first, rest) = letters
        .split_first()
        .ok_or_else(|| Error::out_of_range("bracket length", 0, "at least 1"))?;
    let mut acc = ctx.generator(first)?;
    for &a in rest {
        acc = acc.bracket(&ctx.generator(a)?)?;
    }
    Ok(acc)
}

fn check_trace_arity(ctx: AlgebraContext, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::out_of_range("n", 0, "at least 1"));
    }
    if n > ctx.generator_count() as usize || n > ctx.degree_bound() {
        return Err(Error::out_of_range(
            "n",
            n,
            format!("at most {} generators and degree {}", ctx.generator_count(), ctx.degree_bound()),
        ));
    }
    Ok(())
}

/// `tr_n = Σ_σ x_{σ(1)} ... x_{σ(n)}`.
pub fn trace_element(ctx: AlgebraContext, n: usize) -> Result<TensorElement> {
    check_trace_arity(ctx, n)?;
    ctx.element(
        Permutation::all(n)
            .into_iter()
            .map(|s| (crate::freealg::word::Word::new(s.images().to_vec()), 1)),
    )
}

/// `Σ_τ [[x1, x_{τ(2)}], ..., x_{τ(n)}]` over permutations `τ` of `{2, ..., n}`.
pub fn lie_trace_element(ctx: AlgebraContext, n: usize) -> Result<TensorElement> {
    check_trace_arity(ctx, n)?;
    let mut acc = ctx.zero();
    for tau in Permutation::all(n - 1) {
        let mut letters = vec![1];
        letters.extend(tau.images().iter().map(|&i| i + 1));
        acc = acc.plus(&left_normed_bracket(ctx, &letters)?)?;
    }
    Ok(acc)
}
