//! Word-level twist, extend and merge, and the tree invariant built from them.

use crate::error::{Error, Result};
use crate::plumbing::{decompose, BuildPlan, RootedTree};
use crate::words::{
    canonicalize, invert_letters, loop_encode_letters, CyclicWord, Letter, LoopKind, LoopLetter,
    LoopWord, MultiCurve,
};
use num_integer::Integer;

/// Letterwise twist: β ↦ βα^{-m}, β⁻¹ ↦ α^{m}β⁻¹.
pub fn twist_letters(letters: &[Letter], m: i64) -> Vec<Letter> {
    let power = |k: i64| {
        let l = if k >= 0 { Letter::Alpha } else { Letter::AlphaInv };
        std::iter::repeat_n(l, k.unsigned_abs() as usize)
    };
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        match l {
            Letter::Beta => {
                out.push(Letter::Beta);
                out.extend(power(-m));
            }
            Letter::BetaInv => {
                out.extend(power(m));
                out.push(Letter::BetaInv);
            }
            other => out.push(other),
        }
    }
    out
}

/// Loop-letterwise twist: `c_k ↦ c_{k-m}`, `c̄_k ↦ c̄_{k-m}`, `a` and `b` fixed.
pub fn twist_loop(lw: &LoopWord, m: i64) -> LoopWord {
    LoopWord(
        lw.letters()
            .iter()
            .map(|&l| match l.kind {
                LoopKind::C | LoopKind::CBar => LoopLetter { kind: l.kind, k: l.k - m },
                _ => l,
            })
            .collect(),
    )
}

/// Twist on a single word.
pub fn twist_word(w: &CyclicWord, m: i64) -> CyclicWord {
    canonicalize(&twist_letters(w.letters(), m)).expect("twist preserves nontrivial words")
}

/// 𝕋^m on every component.
pub fn twist_op(mc: &MultiCurve, m: i64) -> MultiCurve {
    MultiCurve::new(mc.components().iter().map(|w| twist_word(w, m)).collect())
}

/// Letterwise extend: β ↦ α, α ↦ β⁻¹, β⁻¹ ↦ α⁻¹, α⁻¹ ↦ β.
pub fn extend_letters(letters: &[Letter]) -> Vec<Letter> {
    letters
        .iter()
        .map(|l| match l {
            Letter::Beta => Letter::Alpha,
            Letter::Alpha => Letter::BetaInv,
            Letter::BetaInv => Letter::AlphaInv,
            Letter::AlphaInv => Letter::Beta,
        })
        .collect()
}

/// Extend on a single word.
pub fn extend_word(w: &CyclicWord) -> CyclicWord {
    canonicalize(&extend_letters(w.letters())).expect("extend preserves nontrivial words")
}

/// 𝔼 on every component.
pub fn extend_op(mc: &MultiCurve) -> MultiCurve {
    MultiCurve::new(mc.components().iter().map(extend_word).collect())
}

/// Loop encoding of `w` oriented so that every letter is a `c` letter.
pub fn all_c_encoding(w: &CyclicWord) -> Option<LoopWord> {
    let lw = loop_encode_letters(w.letters());
    if lw.is_all_c() {
        return Some(lw);
    }
    if lw.is_all_cbar() {
        return Some(loop_encode_letters(&invert_letters(w.letters())));
    }
    None
}

/// Loop encoding of `w` oriented so that the signed `c` count is nonnegative.
pub fn nonnegative_encoding(w: &CyclicWord) -> LoopWord {
    let lw = loop_encode_letters(w.letters());
    if lw.c_count() >= 0 {
        lw
    } else {
        loop_encode_letters(&invert_letters(w.letters()))
    }
}

/// Merge inputs after orientation: the all-c row word and the column word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeGrid {
    pub rows: LoopWord,
    pub columns: LoopWord,
}

/// Chooses the row word (all-c after orientation) and orients the column word
/// to nonnegative signed c-count. `w1` is preferred as the row word.
pub fn orient_merge_inputs(w1: &CyclicWord, w2: &CyclicWord) -> Result<MergeGrid> {
    if let Some(rows) = all_c_encoding(w1) {
        return Ok(MergeGrid {
            rows,
            columns: nonnegative_encoding(w2),
        });
    }
    if let Some(rows) = all_c_encoding(w2) {
        return Ok(MergeGrid {
            rows,
            columns: nonnegative_encoding(w1),
        });
    }
    Err(Error::MergePrecondition)
}

/// 𝕄 on two words via the toroidal grid.
///
/// Rows are the letters `c_m` of the all-c word; horizontal grid lines are
/// indexed mod the row count, row `i` lying between lines `i` and `i + 1`.
/// In row `c_m` the square of column letter `a_k` carries `a_k` along line
/// `i`, `b_k` carries `b_k` along line `i + 1`, `c_k` carries `c_{k+m}` from
/// line `i` to `i + 1`, and `c̄_k` carries `c̄_{k+m}` from line `i + 1` to `i`.
pub fn merge_op(w1: &CyclicWord, w2: &CyclicWord) -> Result<MultiCurve> {
    let grid = orient_merge_inputs(w1, w2)?;
    let rows: Vec<i64> = grid.rows.letters().iter().map(|l| l.k).collect();
    let n1 = rows.len();
    let mut visited = vec![false; n1];
    let mut components = Vec::new();
    for start in 0..n1 {
        if visited[start] {
            continue;
        }
        let mut line = start;
        let mut labels = Vec::new();
        loop {
            visited[line] = true;
            for &col in grid.columns.letters() {
                let (label, next) = match col.kind {
                    LoopKind::A => (col, line),
                    LoopKind::B => (col, line),
                    LoopKind::C => (LoopLetter::c(col.k + rows[line]), (line + 1) % n1),
                    LoopKind::CBar => {
                        let row = (line + n1 - 1) % n1;
                        (LoopLetter::cbar(col.k + rows[row]), row)
                    }
                };
                labels.push(label);
                line = next;
            }
            if line == start {
                break;
            }
        }
        components.push(canonicalize(&LoopWord(labels).expand())?);
    }
    Ok(MultiCurve::new(components))
}

/// Expected component count `gcd(n1, n2)` of a merge.
pub fn merge_component_count(w1: &CyclicWord, w2: &CyclicWord) -> Result<usize> {
    let g = orient_merge_inputs(w1, w2)?;
    Ok((g.rows.letters().len() as i64).gcd(&g.columns.c_count()) as usize)
}

/// 𝕄 on collections: the union of pairwise merges.
pub fn merge_multicurves(a: &MultiCurve, b: &MultiCurve) -> Result<MultiCurve> {
    let mut out = Vec::new();
    for x in a.components() {
        for y in b.components() {
            out.extend(merge_op(x, y)?.components().iter().cloned());
        }
    }
    Ok(MultiCurve::new(out))
}

/// Evaluates a plan on words: Base ↦ (β), moves ↦ word operations.
pub fn evaluate_plan(plan: &BuildPlan) -> Result<MultiCurve> {
    eval_at(plan, "root")
}

fn eval_at(plan: &BuildPlan, path: &str) -> Result<MultiCurve> {
    match plan {
        BuildPlan::Base => Ok(MultiCurve::single(CyclicWord::beta())),
        BuildPlan::Twist(m, c) => Ok(twist_op(&eval_at(c, &format!("{path}.twist"))?, *m)),
        BuildPlan::Extend(c) => Ok(extend_op(&eval_at(c, &format!("{path}.extend"))?)),
        BuildPlan::Merge(a, b) => {
            let left = eval_at(a, &format!("{path}.merge0"))?;
            let right = eval_at(b, &format!("{path}.merge1"))?;
            merge_multicurves(&left, &right).map_err(|e| match e {
                tagged @ Error::AtPlanNode { .. } => tagged,
                other => Error::AtPlanNode {
                    node: format!("{path} = {plan}"),
                    source: Box::new(other),
                },
            })
        }
    }
}

/// Immersed-curve invariant of a rooted tree.
pub fn invariant(tree: &RootedTree) -> Result<MultiCurve> {
    evaluate_plan(&decompose(tree))
}
