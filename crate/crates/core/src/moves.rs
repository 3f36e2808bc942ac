//! Predicted effect of twist, extend and merge on Wu types, Δμ̄ and Δ_sym.
//!
//! These rules are what the randomized move suites compare against direct
//! computation.

use crate::rational::{rat, Rational};
use crate::words::HstType;
use crate::wu::WuType;

/// Wu type after a ±1 twist: `(a,b,c,d) ↦ (c,b,a,d)`.
pub fn wu_type_after_twist(t: WuType) -> WuType {
    WuType(t.2, t.1, t.0, t.3)
}

/// Wu type after extend: `(a,b,c,d) ↦ (a,c,b,d)`.
pub fn wu_type_after_extend(t: WuType) -> WuType {
    WuType(t.0, t.2, t.1, t.3)
}

/// Wu type after merge: the bilinear census of pairs of relative Wu sets.
pub fn wu_type_after_merge(p: WuType, q: WuType) -> WuType {
    WuType(
        p.0 * q.0 + p.2 * q.2,
        p.1 * q.1 + p.3 * q.3,
        p.0 * q.2 + p.2 * q.0,
        p.1 * q.3 + p.3 * q.1,
    )
}

/// Δμ̄ after extend.
pub fn delta_mubar_after_extend(d: i64) -> i64 {
    -d
}

/// Δμ̄ after a twist by `sign = ±1` of an input of the given type.
pub fn delta_mubar_after_twist(d: i64, ty: HstType, sign: i64) -> i64 {
    match ty {
        HstType::Beta => -d,
        _ => d + sign,
    }
}

/// Δμ̄ after merge of inputs with the given values and types; `None` when both
/// inputs have type β.
pub fn delta_mubar_after_merge(d1: i64, t1: HstType, d2: i64, t2: HstType) -> Option<i64> {
    merge_rule(d1, t1, d2, t2, |a, b| a + b, |a| -a)
}

/// Δ_sym after extend.
pub fn delta_sym_after_extend(d: Rational) -> Rational {
    -d
}

/// Δ_sym after a twist by `sign = ±1` of an input of the given type.
pub fn delta_sym_after_twist(d: Rational, ty: HstType, sign: i64) -> Rational {
    match ty {
        HstType::Beta => -d,
        _ => d - rat(sign, 4),
    }
}

/// Δ_sym after merge of inputs with the given values and types; `None` when
/// both inputs have type β.
pub fn delta_sym_after_merge(
    d1: Rational,
    t1: HstType,
    d2: Rational,
    t2: HstType,
) -> Option<Rational> {
    merge_rule(d1, t1, d2, t2, |a, b| a + b, |a| -a)
}

/// The shared five-case merge table: a type-β input passes its value through,
/// negated when the partner has type αβ; otherwise values add.
fn merge_rule<T: Copy>(
    d1: T,
    t1: HstType,
    d2: T,
    t2: HstType,
    add: impl Fn(T, T) -> T,
    neg: impl Fn(T) -> T,
) -> Option<T> {
    let pass = |d: T, partner: HstType| match partner {
        HstType::Alpha => Some(d),
        HstType::AlphaBeta => Some(neg(d)),
        _ => None,
    };
    match (t1, t2) {
        (HstType::Beta, other) => pass(d1, other),
        (other, HstType::Beta) => pass(d2, other),
        _ => Some(add(d1, d2)),
    }
}
