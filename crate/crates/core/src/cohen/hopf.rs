use crate::cohen::multilinear::represent;
use crate::cohen::word::{GroupGenerator, GroupWord};
use crate::error::{Error, Result};
use crate::modarith::CoefficientRing;

/// Call `f` on every increasing `k`-subsequence of `0..len`, in right
/// lexicographical order: by last entry, then next-to-last, and so on.
pub fn for_each_right_lex_subsequence(len: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(slot: usize, limit: usize, cur: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if slot == 0 {
            f(cur);
            return;
        }
        for j in slot - 1..limit {
            cur[slot - 1] = j;
            rec(slot - 1, j, cur, f);
        }
    }
    let mut cur = vec![0; k];
    rec(k, len, &mut cur, &mut f);
}

fn require_simple(w: &GroupWord) -> Result<()> {
    if w.block_size() == 1 {
        Ok(())
    } else {
        Err(Error::AmbientMismatch {
            expected_n: w.rank(),
            expected_k: 1,
            found_n: w.rank(),
            found_k: w.block_size() as u32,
        })
    }
}

/// `H_k`: product over increasing `k`-subsequences of syllables of the block
/// generator, raised to the product of the exponents.
///
/// Applied to the syllables exactly as stored in `w`.
pub fn combinatorial_james_hopf(w: &GroupWord, k: usize) -> Result<GroupWord> {
    require_simple(w)?;
    if k == 0 {
        return Err(Error::out_of_range("k", 0, "at least 1"));
    }
    let syl = w.syllables();
    let mut out = Vec::new();
    for_each_right_lex_subsequence(syl.len(), k, |pos| {
        let block: Vec<u32> = pos.iter().map(|&j| syl[j].0.block()[0]).collect();
        let e = pos
            .iter()
            .try_fold(1i64, |acc, &j| acc.checked_mul(syl[j].1))
            .expect("exponent overflow");
        out.push((GroupGenerator::new(block), e));
    });
    GroupWord::from_syllables(w.rank(), k, out)
}

/// `d_j`: delete `x_j` and renumber the later generators down by one.
pub fn face_projection(w: &GroupWord, j: u32) -> Result<GroupWord> {
    require_simple(w)?;
    if j < 1 || j > w.rank() {
        return Err(Error::out_of_range("face index", j, format!("[1, {}]", w.rank())));
    }
    GroupWord::from_syllables(
        w.rank() - 1,
        1,
        w.syllables().iter().filter_map(|(g, e)| {
            let i = g.block()[0];
            match i.cmp(&j) {
                std::cmp::Ordering::Less => Some((g.clone(), *e)),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some((GroupGenerator::simple(i - 1), *e)),
            }
        }),
    )
}

/// Do all faces `d_1(w), ..., d_n(w)` agree in `K_{n-1}`?
pub fn is_in_h_n(w: &GroupWord) -> Result<bool> {
    require_simple(w)?;
    let faces: Vec<_> = (1..=w.rank())
        .map(|j| face_projection(w, j).map(|d| represent(&d, CoefficientRing::INTEGERS)))
        .collect::<Result<_>>()?;
    Ok(faces.windows(2).all(|p| p[0] == p[1]))
}
