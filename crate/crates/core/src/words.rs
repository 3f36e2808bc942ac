//! Cyclic words in the letters α±1, β±1.
//!
//! A [`CyclicWord`] is a freely reduced word taken up to rotation and
//! inversion, stored in canonical form. This module also provides the loop
//! letters `a_k, b_k, c_k, c̄_k` ([`LoopWord`]), letter-count classification
//! ([`CurveClass`]), symmetry detection under the elliptic involution, and the
//! type D structure attached to a word.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// One of α, β, α⁻¹, β⁻¹; the derived order α < β < α⁻¹ < β⁻¹ is the
/// canonical letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Alpha,
    Beta,
    AlphaInv,
    BetaInv,
}

/// Axis of a letter: α is vertical, β horizontal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Alpha,
    Beta,
}

impl Letter {
    pub fn new(axis: Axis, sign: i8) -> Letter {
        match (axis, sign > 0) {
            (Axis::Alpha, true) => Letter::Alpha,
            (Axis::Alpha, false) => Letter::AlphaInv,
            (Axis::Beta, true) => Letter::Beta,
            (Axis::Beta, false) => Letter::BetaInv,
        }
    }

    pub fn axis(self) -> Axis {
        match self {
            Letter::Alpha | Letter::AlphaInv => Axis::Alpha,
            Letter::Beta | Letter::BetaInv => Axis::Beta,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Letter::Alpha | Letter::Beta => 1,
            Letter::AlphaInv | Letter::BetaInv => -1,
        }
    }

    pub fn is_alpha(self) -> bool {
        self.axis() == Axis::Alpha
    }

    pub fn is_beta(self) -> bool {
        self.axis() == Axis::Beta
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Alpha => Letter::AlphaInv,
            Letter::AlphaInv => Letter::Alpha,
            Letter::Beta => Letter::BetaInv,
            Letter::BetaInv => Letter::Beta,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::AlphaInv => 'A',
            Letter::Beta => 'b',
            Letter::BetaInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::Alpha),
            'A' => Some(Letter::AlphaInv),
            'b' => Some(Letter::Beta),
            'B' => Some(Letter::BetaInv),
            _ => None,
        }
    }
}

/// Parses a raw letter sequence such as `"(babaBAABaba)"` or `"bab"`.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let body = text.trim();
    let body = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .unwrap_or(body);
    body.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| Letter::from_char(c).ok_or_else(|| Error::MalformedWord(format!("letter `{c}`"))))
        .collect()
}

/// Renders a raw letter sequence in parentheses.
pub fn render_letters(letters: &[Letter]) -> String {
    let mut s = String::with_capacity(letters.len() + 2);
    s.push('(');
    s.extend(letters.iter().map(|l| l.to_char()));
    s.push(')');
    s
}

/// Reverses the sequence and inverts every letter.
pub fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inverse()).collect()
}

/// Cyclic free reduction.
pub fn cyclic_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    let (mut lo, mut hi) = (0, stack.len());
    while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

/// Start index of the lexicographically least rotation (Booth).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = f[j - k - 1];
        while i != -1 && at(j) != at(k + i as usize + 1) {
            if at(j) < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

fn rotated<T: Clone>(s: &[T], k: usize) -> Vec<T> {
    s[k..].iter().chain(s[..k].iter()).cloned().collect()
}

/// Reduced cyclic word in canonical form: the least rotation of the word or
/// its inverse under α < β < α⁻¹ < β⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

/// Reduces and canonicalizes a raw letter sequence.
pub fn canonicalize(letters: &[Letter]) -> Result<CyclicWord> {
    let reduced = cyclic_reduce(letters);
    if reduced.is_empty() {
        return Err(Error::EmptyWord);
    }
    let fwd = rotated(&reduced, least_rotation(&reduced));
    let inv = invert_letters(&reduced);
    let bwd = rotated(&inv, least_rotation(&inv));
    Ok(CyclicWord {
        letters: fwd.min(bwd),
    })
}

impl CyclicWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word (β).
    pub fn beta() -> CyclicWord {
        CyclicWord {
            letters: vec![Letter::Beta],
        }
    }

    /// Canonical form of the inverse; equal to `self` by construction.
    pub fn inverse_letters(&self) -> Vec<Letter> {
        invert_letters(&self.letters)
    }

    /// Signed β-count.
    pub fn beta_sum(&self) -> i64 {
        self.letters.iter().filter(|l| l.is_beta()).map(|l| l.sign()).sum()
    }

    /// Signed α-count.
    pub fn alpha_sum(&self) -> i64 {
        self.letters.iter().filter(|l| l.is_alpha()).map(|l| l.sign()).sum()
    }

    pub fn is_homologically_trivial(&self) -> bool {
        self.beta_sum() == 0 && self.alpha_sum() == 0
    }
}

impl FromStr for CyclicWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        canonicalize(&parse_letters(s)?)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters))
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Loop-letter kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LoopKind {
    A,
    B,
    C,
    CBar,
}

/// Loop letter: `a_k = βα^kβ⁻¹`, `b_k = α^k`, `c_k = βα^k`, `c̄_k = α^{-k}β⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopLetter {
    pub kind: LoopKind,
    pub k: i64,
}

impl LoopLetter {
    pub fn a(k: i64) -> Self {
        LoopLetter { kind: LoopKind::A, k }
    }
    pub fn b(k: i64) -> Self {
        LoopLetter { kind: LoopKind::B, k }
    }
    pub fn c(k: i64) -> Self {
        LoopLetter { kind: LoopKind::C, k }
    }
    pub fn cbar(k: i64) -> Self {
        LoopLetter {
            kind: LoopKind::CBar,
            k,
        }
    }

    /// Expansion into ordinary letters.
    pub fn letters(self) -> Vec<Letter> {
        let alphas = |k: i64| {
            let l = if k >= 0 { Letter::Alpha } else { Letter::AlphaInv };
            std::iter::repeat_n(l, k.unsigned_abs() as usize)
        };
        let mut out = Vec::new();
        match self.kind {
            LoopKind::A => {
                out.push(Letter::Beta);
                out.extend(alphas(self.k));
                out.push(Letter::BetaInv);
            }
            LoopKind::B => out.extend(alphas(self.k)),
            LoopKind::C => {
                out.push(Letter::Beta);
                out.extend(alphas(self.k));
            }
            LoopKind::CBar => {
                out.extend(alphas(-self.k));
                out.push(Letter::BetaInv);
            }
        }
        out
    }

    /// Signed β-count of the letter.
    pub fn beta_sum(self) -> i64 {
        match self.kind {
            LoopKind::C => 1,
            LoopKind::CBar => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for LoopLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            LoopKind::A => "a",
            LoopKind::B => "b",
            LoopKind::C => "c",
            LoopKind::CBar => "cc",
        };
        write!(f, "{name}[{}]", self.k)
    }
}

/// Cyclic sequence of loop letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopWord(pub Vec<LoopLetter>);

impl LoopWord {
    pub fn letters(&self) -> &[LoopLetter] {
        &self.0
    }

    /// True when every letter is a `c` letter.
    pub fn is_all_c(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|l| l.kind == LoopKind::C)
    }

    /// True when every letter is a `c̄` letter.
    pub fn is_all_cbar(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|l| l.kind == LoopKind::CBar)
    }

    /// Signed `c` count (number of c letters minus number of c̄ letters).
    pub fn c_count(&self) -> i64 {
        self.0.iter().map(|l| l.beta_sum()).sum()
    }

    /// Concatenated ordinary letters.
    pub fn expand(&self) -> Vec<Letter> {
        self.0.iter().flat_map(|l| l.letters()).collect()
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for LoopWord {
    type Err = Error;
    /// Accepts tokens such as `c[1]`, `cc[-2]`, `a-1` or `b1`, separated by
    /// whitespace, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let mut out = Vec::new();
        for tok in body.split_whitespace() {
            let bad = || Error::MalformedWord(format!("loop letter `{tok}`"));
            let (kind, rest) = if let Some(r) = tok.strip_prefix("cc") {
                (LoopKind::CBar, r)
            } else if let Some(r) = tok.strip_prefix('c') {
                (LoopKind::C, r)
            } else if let Some(r) = tok.strip_prefix('a') {
                (LoopKind::A, r)
            } else if let Some(r) = tok.strip_prefix('b') {
                (LoopKind::B, r)
            } else {
                return Err(bad());
            };
            let digits = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .unwrap_or(rest);
            let k: i64 = digits.parse().map_err(|_| bad())?;
            out.push(LoopLetter { kind, k });
        }
        if out.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(LoopWord(out))
    }
}

/// Cuts a reduced cyclic letter sequence into loop letters: before each β and
/// after each β⁻¹. A pure α power becomes a single `b_k`.
pub fn loop_encode_letters(letters: &[Letter]) -> LoopWord {
    let n = letters.len();
    let is_cut = |i: usize| letters[i] == Letter::Beta || letters[(i + n - 1) % n] == Letter::BetaInv;
    let start = match (0..n).find(|&i| is_cut(i)) {
        Some(s) => s,
        None => {
            let k: i64 = letters.iter().map(|l| l.sign()).sum();
            return LoopWord(vec![LoopLetter::b(k)]);
        }
    };
    let seq = rotated(letters, start);
    let mut out = Vec::new();
    let mut i = 0;
    let alpha_run = |i: &mut usize| {
        let mut k = 0i64;
        while *i < n && seq[*i].is_alpha() {
            k += seq[*i].sign();
            *i += 1;
        }
        k
    };
    while i < n {
        if seq[i] == Letter::Beta {
            i += 1;
            let k = alpha_run(&mut i);
            if i < n && seq[i] == Letter::BetaInv {
                i += 1;
                out.push(LoopLetter::a(k));
            } else {
                out.push(LoopLetter::c(k));
            }
        } else {
            let k = alpha_run(&mut i);
            if i < n && seq[i] == Letter::BetaInv {
                i += 1;
                out.push(LoopLetter::cbar(-k));
            } else {
                out.push(LoopLetter::b(k));
            }
        }
    }
    LoopWord(out)
}

/// Loop encoding of a canonical word.
pub fn loop_encode(word: &CyclicWord) -> LoopWord {
    loop_encode_letters(&word.letters)
}

/// Expands and canonicalizes.
pub fn loop_decode(lw: &LoopWord) -> Result<CyclicWord> {
    canonicalize(&lw.expand())
}

/// Homological type of a Z2-homology solid torus read from letter parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HstType {
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "alpha-beta")]
    AlphaBeta,
    #[serde(rename = "none")]
    None,
}

impl HstType {
    /// α iff the β-count is odd and the α-count even; β iff the reverse;
    /// αβ iff both odd.
    pub fn from_counts(alpha_letters: usize, beta_letters: usize) -> HstType {
        match (alpha_letters % 2 == 1, beta_letters % 2 == 1) {
            (false, true) => HstType::Alpha,
            (true, false) => HstType::Beta,
            (true, true) => HstType::AlphaBeta,
            (false, false) => HstType::None,
        }
    }
}

impl fmt::Display for HstType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HstType::Alpha => "alpha",
            HstType::Beta => "beta",
            HstType::AlphaBeta => "alpha-beta",
            HstType::None => "none",
        })
    }
}

/// Letter counts of a word or collection of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveClass {
    /// Signed β-count.
    pub b: i64,
    /// Signed α-count.
    pub a: i64,
    pub beta_letters: usize,
    pub alpha_letters: usize,
    pub hst_type: HstType,
}

impl CurveClass {
    pub fn of_letters(letters: &[Letter]) -> CurveClass {
        let mut c = CurveClass {
            b: 0,
            a: 0,
            beta_letters: 0,
            alpha_letters: 0,
            hst_type: HstType::None,
        };
        for l in letters {
            if l.is_beta() {
                c.b += l.sign();
                c.beta_letters += 1;
            } else {
                c.a += l.sign();
                c.alpha_letters += 1;
            }
        }
        c.hst_type = HstType::from_counts(c.alpha_letters, c.beta_letters);
        c
    }

    fn add(self, o: CurveClass) -> CurveClass {
        let alpha_letters = self.alpha_letters + o.alpha_letters;
        let beta_letters = self.beta_letters + o.beta_letters;
        CurveClass {
            b: self.b + o.b,
            a: self.a + o.a,
            beta_letters,
            alpha_letters,
            hst_type: HstType::from_counts(alpha_letters, beta_letters),
        }
    }
}

/// Collection of curve components, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiCurve {
    components: Vec<CyclicWord>,
}

impl MultiCurve {
    pub fn new(mut components: Vec<CyclicWord>) -> Self {
        components.sort();
        MultiCurve { components }
    }

    pub fn single(w: CyclicWord) -> Self {
        MultiCurve {
            components: vec![w],
        }
    }

    pub fn components(&self) -> &[CyclicWord] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for MultiCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Per-component classes and the aggregate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiCurveClass {
    pub components: Vec<CurveClass>,
    pub total: CurveClass,
}

/// Letter counts per component and aggregated.
pub fn curve_class(mc: &MultiCurve) -> MultiCurveClass {
    let components: Vec<CurveClass> = mc
        .components
        .iter()
        .map(|w| CurveClass::of_letters(&w.letters))
        .collect();
    let total = components
        .iter()
        .fold(CurveClass::of_letters(&[]), |acc, &c| acc.add(c));
    MultiCurveClass { components, total }
}

/// Offset `o` with `w[i] = w[(o - 1 - i) mod L]` for all `i`, i.e. the word
/// is a palindrome up to rotation; `None` when no such offset exists.
///
/// The reflection `t ↦ o - t` of the parameter circle `[0, L)` then carries the
/// curve to itself reversing orientation, which is the action of the elliptic
/// involution; its fixed parameters are `o/2` and `o/2 + L/2`.
pub fn symmetry_offset(word: &CyclicWord) -> Option<usize> {
    symmetry_offset_letters(&word.letters)
}

/// [`symmetry_offset`] on a raw cyclic sequence.
pub fn symmetry_offset_letters(w: &[Letter]) -> Option<usize> {
    let n = w.len();
    if n == 0 {
        return None;
    }
    let r: Vec<Letter> = w.iter().rev().copied().collect();
    // w = rotate_s(r) means w[i] = r[(i + s) mod n] = w[(n - 1 - s - i) mod n].
    let s = find_rotation(&r, w)?;
    Some((2 * n - s) % n)
}

/// Smallest `s` with `hay[(i + s) mod n] == needle[i]` for all `i` (KMP).
fn find_rotation<T: PartialEq>(hay: &[T], needle: &[T]) -> Option<usize> {
    let n = needle.len();
    if hay.len() != n {
        return None;
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && needle[i] != needle[k] {
            k = fail[k - 1];
        }
        if needle[i] == needle[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut q = 0;
    for i in 0..2 * n - 1 {
        let c = &hay[i % n];
        while q > 0 && *c != needle[q] {
            q = fail[q - 1];
        }
        if *c == needle[q] {
            q += 1;
        }
        if q == n {
            return Some(i + 1 - n);
        }
    }
    None
}

/// Idempotent of a type D generator: ι₀ for β letters, ι₁ for α letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Idempotent {
    #[serde(rename = "iota0")]
    Iota0,
    #[serde(rename = "iota1")]
    Iota1,
}

/// Algebra element labeling a type D arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rho {
    #[serde(rename = "rho1")]
    R1,
    #[serde(rename = "rho2")]
    R2,
    #[serde(rename = "rho3")]
    R3,
    #[serde(rename = "rho12")]
    R12,
    #[serde(rename = "rho23")]
    R23,
    #[serde(rename = "rho123")]
    R123,
}

/// Whether an arrow runs from the first letter's generator to the second's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    #[serde(rename = "forward")]
    Forward,
    #[serde(rename = "backward")]
    Backward,
}

/// Arrow between the generators of two cyclically consecutive letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub first: usize,
    pub second: usize,
    pub label: Rho,
    pub direction: Direction,
}

impl Arrow {
    pub fn source(&self) -> usize {
        match self.direction {
            Direction::Forward => self.first,
            Direction::Backward => self.second,
        }
    }

    pub fn target(&self) -> usize {
        match self.direction {
            Direction::Forward => self.second,
            Direction::Backward => self.first,
        }
    }
}

/// Type D structure: one generator per letter, one arrow per consecutive pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeD {
    pub generators: Vec<Idempotent>,
    pub arrows: Vec<Arrow>,
}

fn pair_arrow(x: Letter, y: Letter) -> (Rho, Direction) {
    use Direction::*;
    use Letter::*;
    match (x, y) {
        (BetaInv, AlphaInv) => (Rho::R1, Forward),
        (BetaInv, BetaInv) => (Rho::R12, Forward),
        (BetaInv, Alpha) => (Rho::R123, Forward),
        (Alpha, BetaInv) => (Rho::R2, Forward),
        (Alpha, Alpha) => (Rho::R23, Forward),
        (Beta, Alpha) => (Rho::R3, Forward),
        (Alpha, Beta) => (Rho::R1, Backward),
        (Beta, Beta) => (Rho::R12, Backward),
        (AlphaInv, Beta) => (Rho::R123, Backward),
        (Beta, AlphaInv) => (Rho::R2, Backward),
        (AlphaInv, AlphaInv) => (Rho::R23, Backward),
        (AlphaInv, BetaInv) => (Rho::R3, Backward),
        _ => unreachable!("reduced words have no cancelling pairs"),
    }
}

/// Type D structure of a raw reduced cyclic sequence.
pub fn type_d_letters(letters: &[Letter]) -> TypeD {
    let n = letters.len();
    let generators = letters
        .iter()
        .map(|l| if l.is_beta() { Idempotent::Iota0 } else { Idempotent::Iota1 })
        .collect();
    let arrows = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            let (label, direction) = pair_arrow(letters[i], letters[j]);
            Arrow {
                first: i,
                second: j,
                label,
                direction,
            }
        })
        .collect();
    TypeD { generators, arrows }
}

/// Type D structure of a canonical word.
pub fn to_type_d(word: &CyclicWord) -> TypeD {
    type_d_letters(&word.letters)
}
