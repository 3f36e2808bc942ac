//! Randomized suites behind the move-lemma acceptance criteria. Each suite
//! panics with the offending tree on the first mismatch and returns the number
//! of instances it checked.

use super::{brute_force_wu_type, random_tree_any_root, rng};
use num_integer::Integer;
use plumbcurve::geometry::{delta_sym_curves, fixed_points, Lift};
use plumbcurve::harness::random_tree;
use plumbcurve::loopcalc::{
    extend_word, invariant, merge_op, orient_merge_inputs, twist_loop, twist_word,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use plumbcurve::moves::*;
use plumbcurve::plumbing::RootedTree;
use plumbcurve::rational::Rational;
use plumbcurve::words::{
    canonicalize, curve_class, loop_decode, loop_encode, CurveClass, CyclicWord, HstType, Letter,
    LoopLetter, LoopWord,
};
use plumbcurve::wu::{delta_mubar, wu_type, WuType};

fn brute(tree: &RootedTree) -> WuType {
    let (a, b, c, d) = brute_force_wu_type(tree);
    WuType(a, b, c, d)
}

/// Counts of trees checked against each Wu-type move rule.
#[derive(Debug, Default, Clone, Copy)]
pub struct WuMoveCounts {
    pub solver: usize,
    pub twist: usize,
    pub extend: usize,
    pub merge: usize,
}

/// Wu types of twisted, extended and merged trees with at most eight vertices,
/// all computed by subset search, against the move rules.
pub fn wu_move_suite(trees: usize) -> WuMoveCounts {
    let mut r = rng(0x5eed_0007);
    let mut counts = WuMoveCounts::default();
    for _ in 0..trees {
        let t = random_tree_any_root(&mut r, 7, -6, 6);
        let ty = brute(&t);
        assert_eq!(wu_type(&t).expect("small tree"), ty, "solver vs subset search on {}", t.to_json());
        counts.solver += 1;
        for m in [1, -1] {
            assert_eq!(brute(&t.twist(m)), wu_type_after_twist(ty), "twist {m} of {}", t.to_json());
        }
        counts.twist += 1;
        assert_eq!(brute(&t.extend()), wu_type_after_extend(ty), "extend of {}", t.to_json());
        counts.extend += 1;
        let other = random_tree_any_root(&mut r, 9 - t.len(), -6, 6);
        let merged = t.merge(&other);
        assert!(merged.len() <= 8);
        assert_eq!(
            brute(&merged),
            wu_type_after_merge(ty, brute(&other)),
            "merge of {} and {}",
            t.to_json(),
            other.to_json()
        );
        counts.merge += 1;
    }
    counts
}

/// Both sides of the identity with the homology type of each, when defined.
#[derive(Debug, Clone, Copy)]
pub struct Sides {
    pub delta_sym: Option<(Rational, HstType)>,
    pub delta_mubar: Option<(i64, HstType)>,
}

/// Δ_sym needs the invariant and a labeled distinguished curve; Δμ̄ needs
/// exactly two relative Wu sets.
pub fn sides(tree: &RootedTree) -> Sides {
    let delta_sym = invariant(tree).ok().and_then(|mc| {
        let ty = curve_class(&mc).total.hst_type;
        delta_sym_curves(&mc).ok().map(|d| (d, ty))
    });
    let delta_mubar = delta_mubar(tree)
        .ok()
        .map(|d| (d, wu_type(tree).expect("two sets").hst_type()));
    Sides { delta_sym, delta_mubar }
}

/// Instances checked per move rule.
#[derive(Debug, Default, Clone, Copy)]
pub struct DeltaMoveCounts {
    pub sym_extend: usize,
    pub sym_twist: usize,
    pub sym_merge: usize,
    pub mubar_extend: usize,
    pub mubar_twist: usize,
    pub mubar_merge: usize,
}

impl DeltaMoveCounts {
    pub fn min(&self) -> usize {
        [
            self.sym_extend,
            self.sym_twist,
            self.sym_merge,
            self.mubar_extend,
            self.mubar_twist,
            self.mubar_merge,
        ]
        .into_iter()
        .min()
        .expect("six counts")
    }
}

/// Δ_sym and Δμ̄ before and after each move on harness-style random trees, for
/// instances where both sides of a rule are defined. Stops once every rule has
/// `target` instances or `max_trees` trees were drawn.
pub fn delta_move_suite(target: usize, max_trees: usize) -> DeltaMoveCounts {
    let mut c = DeltaMoveCounts::default();
    for i in 0..max_trees {
        if c.min() >= target {
            break;
        }
        let t = random_tree(0xd1ff, i, 5);
        let other = random_tree(0xd1ff ^ 0xffff, i, 4);
        let s = sides(&t);
        let so = sides(&other);
        let label = || format!("tree {} other {}", t.to_json(), other.to_json());

        let e = sides(&t.extend());
        if let (Some((d, _)), Some((d2, _))) = (s.delta_sym, e.delta_sym) {
            assert_eq!(d2, delta_sym_after_extend(d), "sym extend: {}", label());
            c.sym_extend += 1;
        }
        if let (Some((d, _)), Some((d2, _))) = (s.delta_mubar, e.delta_mubar) {
            assert_eq!(d2, delta_mubar_after_extend(d), "mubar extend: {}", label());
            c.mubar_extend += 1;
        }

        for sign in [1, -1] {
            let tw = sides(&t.twist(sign));
            if let (Some((d, ty)), Some((d2, _))) = (s.delta_sym, tw.delta_sym) {
                assert_eq!(d2, delta_sym_after_twist(d, ty, sign), "sym twist {sign}: {}", label());
                c.sym_twist += 1;
            }
            if let (Some((d, ty)), Some((d2, _))) = (s.delta_mubar, tw.delta_mubar) {
                assert_eq!(d2, delta_mubar_after_twist(d, ty, sign), "mubar twist {sign}: {}", label());
                c.mubar_twist += 1;
            }
        }

        let m = sides(&t.merge(&other));
        if let (Some((d1, t1)), Some((d2, t2)), Some((d, _))) = (s.delta_sym, so.delta_sym, m.delta_sym) {
            if let Some(expect) = delta_sym_after_merge(d1, t1, d2, t2) {
                assert_eq!(d, expect, "sym merge: {}", label());
                c.sym_merge += 1;
            }
        }
        if let (Some((d1, t1)), Some((d2, t2)), Some((d, _))) =
            (s.delta_mubar, so.delta_mubar, m.delta_mubar)
        {
            if let Some(expect) = delta_mubar_after_merge(d1, t1, d2, t2) {
                assert_eq!(d, expect, "mubar merge: {}", label());
                c.mubar_merge += 1;
            }
        }
    }
    c
}

/// Cases run per structural property.
pub const STRUCTURAL_CASES: u32 = 1000;

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: STRUCTURAL_CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

/// All-c words `(c_{k₁} … c_{k_r})` with `|k| ≤ 3` and `r ≤ 4`.
pub fn all_c_words() -> impl Strategy<Value = CyclicWord> {
    prop::collection::vec(-3i64..=3, 1..=4).prop_map(|ks| {
        loop_decode(&LoopWord(ks.into_iter().map(LoopLetter::c).collect())).expect("all-c word")
    })
}

/// Words containing at least one β letter.
pub fn words_with_beta(max_len: usize) -> impl Strategy<Value = CyclicWord> {
    super::reduced_letters(max_len).prop_filter_map("needs a beta letter", |w| {
        w.iter().any(|l| l.is_beta()).then(|| canonicalize(&w).expect("nonempty"))
    })
}

/// Runs one named structural property; returns the failure message, if any.
fn check<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner()
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

/// The structural properties, each on [`STRUCTURAL_CASES`] generated inputs.
/// Returns the names of the properties checked.
pub fn structural_suite() -> Result<Vec<&'static str>, String> {
    let mut done = Vec::new();

    check("canonicalization", super::reduced_letters(16).prop_flat_map(|w| {
        let n = w.len();
        (Just(w), 0..n)
    }), |(w, k)| {
        let c = canonicalize(&w).expect("nonempty");
        prop_assert_eq!(&canonicalize(c.letters()).expect("nonempty"), &c);
        let rotated: Vec<Letter> = w[k..].iter().chain(&w[..k]).copied().collect();
        prop_assert_eq!(&canonicalize(&rotated).expect("nonempty"), &c);
        prop_assert_eq!(&canonicalize(&super::invert(&w)).expect("nonempty"), &c);
        prop_assert_eq!(c.letters(), &super::naive_canonical(&w)[..]);
        Ok(())
    })?;
    done.push("canonicalize idempotent, rotation and inversion invariant");

    check("loop round trip", words_with_beta(16), |w| {
        prop_assert_eq!(loop_decode(&loop_encode(&w)).expect("decodes"), w);
        Ok(())
    })?;
    done.push("loop encode-decode round trip");

    check("extend squared", super::symmetric_letters(8), |w| {
        let word = canonicalize(&w).expect("nonempty");
        prop_assert_eq!(extend_word(&extend_word(&word)), word);
        Ok(())
    })?;
    check("extend squared reverses", super::cyclic_words(16), |w| {
        let reversed: Vec<Letter> = w.letters().iter().rev().copied().collect();
        let e2 = extend_word(&extend_word(&w));
        prop_assert_eq!(&e2, &canonicalize(&reversed).expect("nonempty"));
        prop_assert_eq!(extend_word(&extend_word(&e2)), w);
        Ok(())
    })?;
    done.push("E^2 = id on involution-fixed words, E^2 = reversal and E^4 = id on all words");

    check("twist inverse", (super::cyclic_words(12), -5i64..=5), |(w, m)| {
        prop_assert_eq!(twist_word(&twist_word(&w, m), -m), w.clone());
        if w.letters().iter().any(|l| l.is_beta()) {
            let via_loop = loop_decode(&twist_loop(&loop_encode(&w), m)).expect("decodes");
            prop_assert_eq!(via_loop, twist_word(&w, m));
        }
        Ok(())
    })?;
    done.push("T^m T^-m = id, letter and loop twists agree");

    check("merge parity and gcd", (all_c_words(), words_with_beta(8)), |(w1, w2)| {
        let grid = orient_merge_inputs(&w1, &w2).expect("w1 is all-c");
        let r = CurveClass::of_letters(&grid.rows.expand());
        let c = CurveClass::of_letters(&grid.columns.expand());
        let (m, n) = (r.a * c.b + c.a * r.b, r.b * c.b);
        let out = merge_op(&w1, &w2).expect("valid merge");
        let k = out.len() as i64;
        for w in out.components() {
            let cl = CurveClass::of_letters(w.letters());
            prop_assert!(
                (cl.a * k, cl.b * k) == (m, n) || (cl.a * k, cl.b * k) == (-m, -n),
                "component {} of {} has class ({}, {}), expected ±({}, {})/{}",
                w, out, cl.a, cl.b, m, n, k
            );
        }
        let g = (grid.rows.letters().len() as i64).gcd(&grid.columns.c_count());
        prop_assert_eq!(k, g);
        Ok(())
    })?;
    done.push("merge parity identity and gcd component count");

    check("pi rotation", super::labeled_symmetric_letters(8), |w| {
        let word = canonicalize(&w).expect("nonempty");
        let sp = fixed_points(&word).expect("labeled symmetric word");
        let lift = Lift::of(&word);
        let l = lift.len() as i64;
        for t in [sp.t0, sp.t1] {
            let c = lift.point(t);
            for u in -3 * l..=3 * l {
                prop_assert_eq!(lift.point(t + u) + lift.point(t - u), c.scale(2));
            }
        }
        prop_assert_eq!(sp.t1.rem_euclid(l), sp.t0.rem_euclid(l));
        prop_assert_ne!(sp.t1, sp.t0);
        Ok(())
    })?;
    done.push("fixed-point pi-rotation postcondition");
    Ok(done)
}
