//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls the solver it is meant to check: Wu sets come from
//! exhaustive subset search, signatures from the characteristic polynomial,
//! canonical forms from all rotations, and symmetry from every offset.

#![allow(dead_code)]

pub mod suites;

use plumbcurve::plumbing::{RootedTree, Vertex};
use plumbcurve::words::{canonicalize, CyclicWord, Letter};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One relative Wu set found by subset search: bitmask, balanced flag, and
/// root membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteWu {
    pub mask: u64,
    pub balanced: bool,
    pub kind: u8,
}

fn congruence_holds(tree: &RootedTree, mask: u64, w: usize) -> bool {
    let inside = |v: usize| mask >> v & 1 == 1;
    let mut q = if inside(w) { tree.weight(w) } else { 0 };
    q += tree.neighbors(w).iter().filter(|&&u| inside(u)).count() as i64;
    (q - tree.weight(w)).rem_euclid(2) == 0
}

/// Every relative Wu set by checking all `2^|V|` vertex subsets.
pub fn brute_force_wu(tree: &RootedTree) -> Vec<BruteWu> {
    let n = tree.len();
    assert!(n <= 20, "subset search is exponential");
    let root = tree.root();
    (0u64..1 << n)
        .filter(|&m| (0..n).filter(|&w| w != root).all(|w| congruence_holds(tree, m, w)))
        .map(|m| BruteWu {
            mask: m,
            balanced: congruence_holds(tree, m, root),
            kind: (m >> root & 1) as u8,
        })
        .collect()
}

/// Census `(balanced type 0, balanced type 1, unbalanced type 0, unbalanced
/// type 1)` from subset search.
pub fn brute_force_wu_type(tree: &RootedTree) -> (usize, usize, usize, usize) {
    let mut t = (0, 0, 0, 0);
    for s in brute_force_wu(tree) {
        match (s.balanced, s.kind) {
            (true, 0) => t.0 += 1,
            (true, _) => t.1 += 1,
            (false, 0) => t.2 += 1,
            (false, _) => t.3 += 1,
        }
    }
    t
}

pub fn mask_weight(tree: &RootedTree, mask: u64) -> i64 {
    (0..tree.len()).filter(|&v| mask >> v & 1 == 1).map(|v| tree.weight(v)).sum()
}

/// Δμ̄ from subset search: `S₁` is the balanced type-1 set for types α and αβ
/// and the balanced type-0 set for type β.
pub fn brute_force_delta_mubar(tree: &RootedTree) -> Option<i64> {
    let sets = brute_force_wu(tree);
    if sets.len() != 2 {
        return None;
    }
    let census = brute_force_wu_type(tree);
    let s1_kind = if census == (1, 0, 1, 0) { 0 } else { 1 };
    let s1 = sets.iter().find(|s| s.balanced && s.kind == s1_kind)?;
    let s0 = sets.iter().find(|s| s.mask != s1.mask)?;
    Some(mask_weight(tree, s1.mask) - mask_weight(tree, s0.mask))
}

/// Characteristic polynomial coefficients `c_0..=c_n` of `det(xI − A)` by
/// Faddeev–LeVerrier; every division is exact for integer matrices.
pub fn char_poly(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] as i128 * m[l][j]).sum::<i128>();
            }
            next[i][i] += c[n + 1 - k];
        }
        m = next;
        let tr: i128 = (0..n)
            .map(|i| (0..n).map(|l| a[i][l] as i128 * m[l][i]).sum::<i128>())
            .sum();
        assert_eq!(tr % k as i128, 0, "Faddeev–LeVerrier division is exact");
        c[n - k] = -tr / k as i128;
    }
    c
}

fn sign_changes(coeffs: impl Iterator<Item = i128>) -> usize {
    let signs: Vec<i128> = coeffs.filter(|&x| x != 0).map(i128::signum).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(det, signature)` of a symmetric integer matrix. All roots of the
/// characteristic polynomial are real, so Descartes' rule counts them exactly.
pub fn det_and_signature_oracle(a: &[Vec<i64>]) -> (i128, i64) {
    let n = a.len();
    let c = char_poly(a);
    let det = if n.is_multiple_of(2) { c[0] } else { -c[0] };
    let zeros = c.iter().take_while(|&&x| x == 0).count();
    let pos = sign_changes(c.iter().copied().skip(zeros));
    let neg = sign_changes(
        c.iter()
            .enumerate()
            .skip(zeros)
            .map(|(i, &x)| if i % 2 == 1 { -x } else { x }),
    );
    assert_eq!(pos + neg + zeros, n, "symmetric matrices have real spectra");
    (det, pos as i64 - neg as i64)
}

pub fn invert(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Least sequence among all rotations of the word and of its inverse.
pub fn naive_canonical(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    let inv = invert(w);
    (0..n)
        .flat_map(|k| {
            let r1: Vec<Letter> = w[k..].iter().chain(&w[..k]).copied().collect();
            let r2: Vec<Letter> = inv[k..].iter().chain(&inv[..k]).copied().collect();
            [r1, r2]
        })
        .min()
        .expect("nonempty word")
}

/// All offsets `o` with `w[i] = w[(o − 1 − i) mod L]` for every `i`.
pub fn symmetric_offsets(w: &[Letter]) -> Vec<usize> {
    let n = w.len();
    (0..n)
        .filter(|&o| (0..n).all(|i| w[i] == w[(o + 2 * n - 1 - i) % n]))
        .collect()
}

/// True when no two cyclically adjacent letters cancel.
pub fn is_cyclically_reduced(w: &[Letter]) -> bool {
    let n = w.len();
    n > 0 && (0..n).all(|i| w[(i + 1) % n] != w[i].inverse())
}

pub const LETTERS: [Letter; 4] = [Letter::Alpha, Letter::Beta, Letter::AlphaInv, Letter::BetaInv];

/// Cyclically reduced letter sequences of length `1..=max_len`.
pub fn reduced_letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    (prop::collection::vec(0usize..3, 1..=max_len), 0usize..4).prop_filter_map(
        "cyclically reduced",
        |(steps, first)| {
            let mut w = vec![LETTERS[first]];
            for s in steps.into_iter().skip(1) {
                let prev = *w.last().expect("nonempty");
                let choices: Vec<Letter> =
                    LETTERS.iter().copied().filter(|&l| l != prev.inverse()).collect();
                w.push(choices[s]);
            }
            is_cyclically_reduced(&w).then_some(w)
        },
    )
}

/// Canonical words of length `1..=max_len`.
pub fn cyclic_words(max_len: usize) -> impl Strategy<Value = CyclicWord> {
    reduced_letters(max_len).prop_map(|w| canonicalize(&w).expect("reduced words are nonempty"))
}

/// Reduced letter sequence of given length starting after `prev` (if any).
fn extend_reduced(prev: Option<Letter>, steps: &[usize]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &s in steps {
        let before = out.last().copied().or(prev);
        let choices: Vec<Letter> = LETTERS
            .iter()
            .copied()
            .filter(|&l| Some(l.inverse()) != before)
            .collect();
        out.push(choices[s % choices.len()]);
    }
    out
}

/// Words fixed by the involution with an odd α or odd β count, so that the
/// fixed points are labeled. Shapes are `u c ū` (odd length) or `c₁ u c₂ ū`
/// with `c₁`, `c₂` on different axes, followed by a random rotation.
pub fn labeled_symmetric_letters(max_half: usize) -> impl Strategy<Value = Vec<Letter>> {
    (
        prop::collection::vec(0usize..4, 0..=max_half),
        any::<bool>(),
        0usize..4,
        0usize..4,
        any::<prop::sample::Index>(),
    )
        .prop_filter_map("reduced symmetric", |(steps, odd, c1, c2, rot)| {
            let u = extend_reduced(None, &steps);
            let ubar: Vec<Letter> = u.iter().rev().copied().collect();
            let w: Vec<Letter> = if odd {
                u.iter().copied().chain([LETTERS[c1]]).chain(ubar).collect()
            } else {
                let a = LETTERS[c1];
                let b = if a.is_alpha() { [Letter::Beta, Letter::BetaInv][c2 % 2] } else { [Letter::Alpha, Letter::AlphaInv][c2 % 2] };
                [a].into_iter().chain(u.iter().copied()).chain([b]).chain(ubar).collect()
            };
            if !is_cyclically_reduced(&w) {
                return None;
            }
            let k = rot.index(w.len());
            Some(w[k..].iter().chain(&w[..k]).copied().collect())
        })
}

/// Words fixed by the involution, of every shape: `u ū`, `u c ū` and
/// `c₁ u c₂ ū`, followed by a random rotation.
pub fn symmetric_letters(max_half: usize) -> impl Strategy<Value = Vec<Letter>> {
    (
        prop::collection::vec(0usize..4, 0..=max_half),
        0usize..3,
        0usize..4,
        0usize..4,
        any::<prop::sample::Index>(),
    )
        .prop_filter_map("reduced symmetric", |(steps, shape, c1, c2, rot)| {
            let u = extend_reduced(None, &steps);
            let ubar: Vec<Letter> = u.iter().rev().copied().collect();
            let w: Vec<Letter> = match shape {
                0 => u.iter().copied().chain(ubar).collect(),
                1 => u.iter().copied().chain([LETTERS[c1]]).chain(ubar).collect(),
                _ => [LETTERS[c1]]
                    .into_iter()
                    .chain(u.iter().copied())
                    .chain([LETTERS[c2]])
                    .chain(ubar)
                    .collect(),
            };
            if !is_cyclically_reduced(&w) {
                return None;
            }
            let k = rot.index(w.len());
            Some(w[k..].iter().chain(&w[..k]).copied().collect())
        })
}

/// Random rooted tree with arbitrary weights in `[lo, hi]`, `1..=max_n`
/// vertices and a uniformly chosen root.
pub fn random_tree_any_root(rng: &mut ChaCha8Rng, max_n: usize, lo: i64, hi: i64) -> RootedTree {
    let n = rng.gen_range(1..=max_n);
    let vertices: Vec<Vertex> = (0..n)
        .map(|v| Vertex { id: format!("v{v}"), weight: rng.gen_range(lo..=hi) })
        .collect();
    let edges: Vec<(String, String)> = (1..n)
        .map(|i| (format!("v{}", rng.gen_range(0..i)), format!("v{i}")))
        .collect();
    let root = format!("v{}", rng.gen_range(0..n));
    RootedTree::new(vertices, edges, &root).expect("random tree is valid")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
