//! Lattice realizations of curves and the invariants read off them.
//!
//! A word is lifted to the plane in rectilinear position: horizontal unit
//! segments lie on lines `y ∈ ℤ + ½`, vertical ones on lines `x ∈ ℤ + ½`, and
//! the punctures sit at `ℤ²`. Points are stored with doubled coordinates so
//! that every quantity stays integral until areas are formed.

use crate::error::{Error, Result};
use crate::loopcalc::{invariant, orient_merge_inputs};
use crate::plumbing::RootedTree;
use crate::rational::{serialize_rational, Rational};
use crate::words::{
    canonicalize, symmetry_offset, CurveClass, CyclicWord, Letter, MultiCurve,
};
use num_integer::Integer;
use serde::Serialize;
use std::collections::BTreeMap;
use std::ops::{Add, Sub};

/// Point in `(½ℤ)²` stored as twice its coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfPoint {
    pub x2: i64,
    pub y2: i64,
}

impl HalfPoint {
    pub const fn new(x2: i64, y2: i64) -> Self {
        HalfPoint { x2, y2 }
    }

    pub fn x(&self) -> Rational {
        Rational::new(self.x2, 2)
    }

    pub fn y(&self) -> Rational {
        Rational::new(self.y2, 2)
    }

    pub fn scale(self, k: i64) -> HalfPoint {
        HalfPoint::new(self.x2 * k, self.y2 * k)
    }

    /// Representative in the fundamental square, coordinates in `{0, ½}`.
    pub fn mod_one(self) -> HalfPoint {
        HalfPoint::new(self.x2.rem_euclid(2), self.y2.rem_euclid(2))
    }
}

impl Add for HalfPoint {
    type Output = HalfPoint;

    fn add(self, o: HalfPoint) -> HalfPoint {
        HalfPoint::new(self.x2 + o.x2, self.y2 + o.y2)
    }
}

impl Sub for HalfPoint {
    type Output = HalfPoint;

    fn sub(self, o: HalfPoint) -> HalfPoint {
        HalfPoint::new(self.x2 - o.x2, self.y2 - o.y2)
    }
}

/// Unit move of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    Up,
    Down,
    Left,
    Right,
}

impl Step {
    pub fn of(letter: Letter) -> Step {
        match letter {
            Letter::Alpha => Step::Up,
            Letter::AlphaInv => Step::Down,
            Letter::Beta => Step::Right,
            Letter::BetaInv => Step::Left,
        }
    }

    /// Displacement in doubled units.
    pub fn delta2(self) -> HalfPoint {
        match self {
            Step::Up => HalfPoint::new(0, 2),
            Step::Down => HalfPoint::new(0, -2),
            Step::Right => HalfPoint::new(2, 0),
            Step::Left => HalfPoint::new(-2, 0),
        }
    }
}

/// Lift of a word starting at the corner `(½, ½)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePath {
    pub start: HalfPoint,
    pub steps: Vec<Step>,
    /// `(signed β-count, signed α-count)`.
    pub period: (i64, i64),
}

/// Lifts a word to the plane.
pub fn realize_lift(word: &CyclicWord) -> LatticePath {
    let c = CurveClass::of_letters(word.letters());
    LatticePath {
        start: HalfPoint::new(1, 1),
        steps: word.letters().iter().map(|&l| Step::of(l)).collect(),
        period: (c.b, c.a),
    }
}

/// Periodic lift with evaluation at half-step parameters.
///
/// Parameter `t2` counts half letters: `t2 = 2i` is the corner before letter
/// `i` and `t2 = 2i + 1` is the midpoint of letter `i`; parameters extend
/// periodically to all of `ℤ`.
#[derive(Debug, Clone)]
pub struct Lift {
    letters: Vec<Letter>,
    corners: Vec<HalfPoint>,
    period2: HalfPoint,
}

impl Lift {
    pub fn new(letters: &[Letter]) -> Lift {
        let mut corners = Vec::with_capacity(letters.len() + 1);
        let mut p = HalfPoint::new(1, 1);
        corners.push(p);
        for &l in letters {
            p = p + Step::of(l).delta2();
            corners.push(p);
        }
        let period2 = p - corners[0];
        Lift {
            letters: letters.to_vec(),
            corners,
            period2,
        }
    }

    pub fn of(word: &CyclicWord) -> Lift {
        Lift::new(word.letters())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Period vector in doubled units.
    pub fn period2(&self) -> HalfPoint {
        self.period2
    }

    /// Letter at any integer index, taken cyclically.
    pub fn letter(&self, i: i64) -> Letter {
        self.letters[i.rem_euclid(self.len() as i64) as usize]
    }

    /// Corner before letter `i`.
    pub fn corner(&self, i: i64) -> HalfPoint {
        let n = self.len() as i64;
        let (q, r) = (i.div_euclid(n), i.rem_euclid(n));
        self.corners[r as usize] + self.period2.scale(q)
    }

    /// Point at half-step parameter `t2`.
    pub fn point(&self, t2: i64) -> HalfPoint {
        let i = t2.div_euclid(2);
        let c = self.corner(i);
        if t2.rem_euclid(2) == 0 {
            c
        } else {
            let d = Step::of(self.letter(i)).delta2();
            HalfPoint::new(c.x2 + d.x2 / 2, c.y2 + d.y2 / 2)
        }
    }

    /// Points from parameter `from` to `to` (either direction), including both
    /// endpoints and every corner in between.
    pub fn points_between(&self, from: i64, to: i64) -> Vec<HalfPoint> {
        let mut out = vec![self.point(from)];
        if to > from {
            let mut t = from + 1;
            if t % 2 != 0 {
                t += 1;
            }
            while t < to {
                out.push(self.point(t));
                t += 2;
            }
        } else if to < from {
            let mut t = from - 1;
            if t.rem_euclid(2) != 0 {
                t -= 1;
            }
            while t > to {
                out.push(self.point(t));
                t -= 2;
            }
        }
        if to != from {
            out.push(self.point(to));
        }
        out
    }
}

/// Twice the signed shoelace area of a closed polygon given in doubled
/// coordinates; counterclockwise is positive.
pub fn twice_area(points: &[HalfPoint]) -> Rational {
    let n = points.len();
    let mut s = 0i64;
    for i in 0..n {
        let (p, q) = (points[i], points[(i + 1) % n]);
        s += p.x2 * q.y2 - q.x2 * p.y2;
    }
    Rational::new(s, 4)
}

/// Symmetric points of a curve fixed by the elliptic involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymPoints {
    /// `x0` reduced to the fundamental square.
    pub x0: HalfPoint,
    /// `x1` reduced to the fundamental square.
    pub x1: HalfPoint,
    /// Half-step parameter of `x0` in `[0, 2L)`.
    pub t0: i64,
    /// Half-step parameter of `x1` in `[0, 2L)`.
    pub t1: i64,
}

/// Locates and labels the two fixed points of the involution on the curve.
///
/// With odd α-count `x0` is the point with half-integer `y`; otherwise with
/// odd β-count `x0` is the point with integer `x`.
pub fn fixed_points(word: &CyclicWord) -> Result<SymPoints> {
    let o = symmetry_offset(word).ok_or(Error::NotSymmetric)? as i64;
    let cls = CurveClass::of_letters(word.letters());
    let lift = Lift::of(word);
    let l = lift.len() as i64;
    let (ta, tb) = (o, o + l);
    let (pa, pb) = (lift.point(ta), lift.point(tb));
    let is_x0 = |p: HalfPoint| {
        if cls.alpha_letters % 2 == 1 {
            Ok(p.y2.rem_euclid(2) == 1)
        } else if cls.beta_letters % 2 == 1 {
            Ok(p.x2.rem_euclid(2) == 0)
        } else {
            Err(Error::EvenEven)
        }
    };
    let a_is_x0 = is_x0(pa)?;
    assert_ne!(a_is_x0, is_x0(pb)?, "exactly one fixed point is x0");
    let (t0, t1) = if a_is_x0 { (ta, tb) } else { (tb, ta) };
    let (t0, t1) = (t0.rem_euclid(2 * l), t1.rem_euclid(2 * l));
    for &t in &[t0, t1] {
        let c = lift.point(t);
        for u in 0..=2 * l {
            let (p, q) = (lift.point(t + u), lift.point(t - u));
            assert_eq!(
                p + q,
                c.scale(2),
                "rotation by pi about a fixed point must preserve the lift"
            );
        }
    }
    Ok(SymPoints {
        x0: lift.point(t0).mod_one(),
        x1: lift.point(t1).mod_one(),
        t0,
        t1,
    })
}

/// Half-lap from `x0` to `x1` closed by the chord, in either direction.
pub fn half_lap_polygon(word: &CyclicWord, forward: bool) -> Result<Vec<HalfPoint>> {
    let sp = fixed_points(word)?;
    Ok(half_lap(&Lift::of(word), sp.t0, forward))
}

fn half_lap(lift: &Lift, t0: i64, forward: bool) -> Vec<HalfPoint> {
    let l = lift.len() as i64;
    let end = if forward { t0 + l } else { t0 - l };
    lift.points_between(t0, end)
}

/// Twice the signed area between the half-lap from `x0` to `x1` and its chord.
pub fn delta_sym(word: &CyclicWord) -> Result<Rational> {
    let sp = fixed_points(word)?;
    let lift = Lift::of(word);
    let fwd = twice_area(&half_lap(&lift, sp.t0, true));
    let bwd = twice_area(&half_lap(&lift, sp.t0, false));
    assert_eq!(fwd, bwd, "both half-laps must give the same deviation");
    Ok(fwd)
}

/// The unique homologically nontrivial component fixed by the involution.
///
/// Repeated copies of one word count once; among several distinct candidates
/// the ones of odd multiplicity are kept.
pub fn distinguished_component(mc: &MultiCurve) -> Result<CyclicWord> {
    let mut counts: BTreeMap<&CyclicWord, usize> = BTreeMap::new();
    for w in mc.components() {
        if !w.is_homologically_trivial() && symmetry_offset(w).is_some() {
            *counts.entry(w).or_default() += 1;
        }
    }
    match counts.len() {
        0 => Err(Error::NoDistinguishedCurve),
        1 => Ok(counts.keys().next().map(|w| (*w).clone()).expect("one key")),
        _ => {
            let odd: Vec<&CyclicWord> = counts
                .iter()
                .filter(|(_, &c)| c % 2 == 1)
                .map(|(w, _)| *w)
                .collect();
            if odd.len() == 1 {
                Ok(odd[0].clone())
            } else {
                Err(Error::DistinguishedNotUnique)
            }
        }
    }
}

/// Δ_sym of the distinguished component of a tree's invariant.
pub fn delta_sym_tree(tree: &RootedTree) -> Result<Rational> {
    delta_sym_curves(&invariant(tree)?)
}

/// Δ_sym of the distinguished component of a multicurve.
pub fn delta_sym_curves(mc: &MultiCurve) -> Result<Rational> {
    delta_sym(&distinguished_component(mc)?)
}

/// Vertical sum realization of the merge.
///
/// The all-c word is the graph of a height function `F` on the unit
/// intervals `I_j` between the vertical lines `x = j + ½`. Each shift of the
/// other word has every horizontal unit segment over `I_j` raised by `F(j)`,
/// and each vertical run at a junction stretched by the jump of `F` between
/// the interval it arrives from and the interval it leaves into.
pub fn vertical_sum_merge(w1: &CyclicWord, w2: &CyclicWord) -> Result<MultiCurve> {
    let grid = orient_merge_inputs(w1, w2)?;
    let rows: Vec<i64> = grid.rows.letters().iter().map(|l| l.k).collect();
    let n1 = rows.len() as i64;
    let total: i64 = rows.iter().sum();
    let mut prefix = vec![0i64; rows.len() + 1];
    for (i, &m) in rows.iter().enumerate() {
        prefix[i + 1] = prefix[i] + m;
    }
    let f = |j: i64| prefix[j.rem_euclid(n1) as usize] + j.div_euclid(n1) * total;

    let col = grid.columns.expand();
    let n2 = grid.columns.c_count();
    let g = n1.gcd(&n2);
    let first_h = match col.iter().position(|l| l.is_beta()) {
        Some(p) => p,
        None => {
            let w = canonicalize(&col)?;
            return Ok(MultiCurve::new(vec![w; g as usize]));
        }
    };
    let seq: Vec<Letter> = col[first_h..].iter().chain(col[..first_h].iter()).copied().collect();
    let laps = if n2 == 0 { 1 } else { n1 / g };
    let push_alpha = |out: &mut Vec<Letter>, k: i64| {
        let l = if k >= 0 { Letter::Alpha } else { Letter::AlphaInv };
        out.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
    };
    let mut comps = Vec::new();
    for shift in 0..g {
        let mut j = shift;
        let mut out = Vec::new();
        let mut prev_interval: Option<i64> = None;
        let mut first_interval = 0;
        for _ in 0..laps {
            for &l in &seq {
                match l {
                    Letter::Beta | Letter::BetaInv => {
                        let interval = if l == Letter::Beta { j } else { j - 1 };
                        match prev_interval {
                            Some(p) => push_alpha(&mut out, f(interval) - f(p)),
                            None => first_interval = interval,
                        }
                        out.push(l);
                        prev_interval = Some(interval);
                        j += l.sign();
                    }
                    other => out.push(other),
                }
            }
        }
        let closing = first_interval + laps * n2;
        push_alpha(
            &mut out,
            f(closing) - f(prev_interval.expect("column word has a beta letter")),
        );
        comps.push(canonicalize(&out)?);
    }
    Ok(MultiCurve::new(comps))
}

/// Intersection of a curve with the horizontal pairing line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub component: usize,
    /// Ordinal of the maximal horizontal segment among those of the component.
    pub index: usize,
    /// Half-step parameter of the segment midpoint, in `[0, 2L)`.
    pub t2: i64,
    /// Midpoint of the maximal horizontal segment.
    pub point: HalfPoint,
    /// The flanking vertical letters point up.
    pub upward: bool,
}

impl Generator {
    pub fn height(&self) -> Rational {
        self.point.y()
    }

    pub fn x(&self) -> Rational {
        self.point.x()
    }
}

/// Generators of one word: midpoints of maximal horizontal segments flanked by
/// vertical letters of equal sign.
pub fn word_generators(word: &CyclicWord, component: usize) -> Result<Vec<Generator>> {
    let lift = Lift::of(word);
    let l = lift.len() as i64;
    let alphas: Vec<i64> = (0..l).filter(|&i| lift.letter(i).is_alpha()).collect();
    if alphas.is_empty() {
        return Err(Error::PureBetaComponent(component));
    }
    let mut out = Vec::new();
    for (j, &p) in alphas.iter().enumerate() {
        let q = if j + 1 < alphas.len() { alphas[j + 1] } else { alphas[0] + l };
        if lift.letter(p) == lift.letter(q) {
            let t2 = ((p + 1) + q).rem_euclid(2 * l);
            out.push(Generator {
                component,
                index: j,
                t2,
                point: lift.point(t2),
                upward: lift.letter(p) == Letter::Alpha,
            });
        }
    }
    out.sort_by_key(|g| g.t2);
    for (i, g) in out.iter_mut().enumerate() {
        g.index = i;
    }
    Ok(out)
}

/// Number of generators of one word, without locating them.
pub fn generator_count(word: &CyclicWord, component: usize) -> Result<usize> {
    let alphas: Vec<Letter> = word.letters().iter().copied().filter(|l| l.is_alpha()).collect();
    if alphas.is_empty() {
        return Err(Error::PureBetaComponent(component));
    }
    let m = alphas.len();
    Ok((0..m).filter(|&j| alphas[j] == alphas[(j + 1) % m]).count())
}

/// Total generator count over all components.
pub fn pairing_generator_count(mc: &MultiCurve) -> Result<usize> {
    mc.components()
        .iter()
        .enumerate()
        .try_fold(0, |acc, (i, w)| Ok(acc + generator_count(w, i)?))
}

/// Generators of the pairing with the horizontal line, over all components.
pub fn pairing_generators(mc: &MultiCurve) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    for (i, w) in mc.components().iter().enumerate() {
        out.extend(word_generators(w, i)?);
    }
    Ok(out)
}

/// Spin-c class of the filling: a component and a lift-height residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SpincClass {
    pub component: usize,
    /// Residue of `height - ½` modulo `|a|`; `None` for a null-homologous
    /// component, whose generators form one group.
    pub residue: Option<i64>,
}

/// Rank of one spin-c class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpincRank {
    pub class: SpincClass,
    pub rank: usize,
}

/// Class of a generator on a component with signed α-count `a`.
pub fn spinc_class_of(g: &Generator, a: i64) -> SpincClass {
    SpincClass {
        component: g.component,
        residue: (a != 0).then(|| ((g.point.y2 - 1) / 2).rem_euclid(a.abs())),
    }
}

/// Generator counts per spin-c class; every residue mod `|a|` of every
/// homologically nontrivial component is listed, including rank 0.
pub fn spinc_ranks(mc: &MultiCurve) -> Result<Vec<SpincRank>> {
    let mut out = Vec::new();
    for (i, w) in mc.components().iter().enumerate() {
        let cls = CurveClass::of_letters(w.letters());
        let gens = word_generators(w, i)?;
        if cls.a == 0 {
            if cls.b != 0 {
                return Err(Error::ZeroAlphaCount(i));
            }
            out.push(SpincRank {
                class: SpincClass {
                    component: i,
                    residue: None,
                },
                rank: gens.len(),
            });
            continue;
        }
        let mut ranks = vec![0usize; cls.a.unsigned_abs() as usize];
        for g in &gens {
            let c = spinc_class_of(g, cls.a);
            ranks[c.residue.expect("a != 0") as usize] += 1;
        }
        out.extend(ranks.into_iter().enumerate().map(|(r, rank)| SpincRank {
            class: SpincClass {
                component: i,
                residue: Some(r as i64),
            },
            rank,
        }));
    }
    Ok(out)
}

/// Rational value serialized as a `"p/q"` string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalValue(#[serde(serialize_with = "serialize_rational")] pub Rational);
