//! Rotation numbers, enclosed areas and rational grading differences.
//!
//! Curves are held in symmetric β-pairing position: every generator sits on a
//! horizontal segment where the curve is perturbed to cross the pairing line
//! vertically, upward when the flanking letters are α and downward when they
//! are α⁻¹. Paths are rectilinear in doubled coordinates with these vertical
//! tangents attached at generator endpoints.

use crate::error::{Error, Result};
use crate::geometry::{
    distinguished_component, fixed_points, pairing_generator_count, spinc_class_of, twice_area,
    word_generators, Generator, HalfPoint, Lift, SpincClass, Step,
};
use crate::loopcalc::invariant;
use crate::plumbing::{determinant, intersection_form, RootedTree};
use crate::rational::{rat, serialize_rational, Rational};
use crate::words::{CurveClass, CyclicWord, HstType, MultiCurve};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

/// Rectilinear path in `(½ℤ)²` with optional endpoint tangents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveSegmentPath {
    pub points: Vec<HalfPoint>,
    pub start_tangent: Option<Step>,
    pub end_tangent: Option<Step>,
}

impl CurveSegmentPath {
    pub fn new(points: Vec<HalfPoint>) -> Self {
        CurveSegmentPath {
            points,
            start_tangent: None,
            end_tangent: None,
        }
    }

    pub fn with_tangents(mut self, start: Step, end: Step) -> Self {
        self.start_tangent = Some(start);
        self.end_tangent = Some(end);
        self
    }

    pub fn is_closed(&self) -> bool {
        self.points.first() == self.points.last()
    }

    /// Directions of the nondegenerate edges, in order.
    fn directions(&self) -> Result<Vec<Step>> {
        let mut out = Vec::new();
        for w in self.points.windows(2) {
            let d = w[1] - w[0];
            let s = match (d.x2.signum(), d.y2.signum()) {
                (0, 0) => continue,
                (1, 0) => Step::Right,
                (-1, 0) => Step::Left,
                (0, 1) => Step::Up,
                (0, -1) => Step::Down,
                _ => return Err(Error::NotClosed),
            };
            out.push(s);
        }
        Ok(out)
    }
}

/// Turn from one direction to the next: left `+½`, right `−½`, straight `0`.
pub fn turn(from: Step, to: Step) -> Result<Rational> {
    let angle = |s: Step| -> i32 {
        match s {
            Step::Right => 0,
            Step::Up => 1,
            Step::Left => 2,
            Step::Down => 3,
        }
    };
    match (angle(to) - angle(from)).rem_euclid(4) {
        0 => Ok(Rational::zero()),
        1 => Ok(rat(1, 2)),
        3 => Ok(rat(-1, 2)),
        _ => Err(Error::InteriorReversal),
    }
}

/// Total tangent rotation in units of π, endpoint tangents included.
pub fn rotation_number(path: &CurveSegmentPath) -> Result<Rational> {
    let mut dirs = Vec::new();
    dirs.extend(path.start_tangent);
    dirs.extend(path.directions()?);
    dirs.extend(path.end_tangent);
    dirs.windows(2)
        .try_fold(Rational::zero(), |acc, w| Ok(acc + turn(w[0], w[1])?))
}

/// Signed area of a closed path, each region weighted by its winding number.
pub fn enclosed_area(path: &CurveSegmentPath) -> Result<Rational> {
    if !path.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(twice_area(&path.points) / 2)
}

fn reverse(s: Step) -> Step {
    match s {
        Step::Up => Step::Down,
        Step::Down => Step::Up,
        Step::Left => Step::Right,
        Step::Right => Step::Left,
    }
}

/// Tangent at a generator when the curve is traversed forward or backward.
pub fn generator_tangent(g: &Generator, forward: bool) -> Step {
    let s = if g.upward { Step::Up } else { Step::Down };
    if forward {
        s
    } else {
        reverse(s)
    }
}

fn append(path: &mut Vec<HalfPoint>, pts: impl IntoIterator<Item = HalfPoint>) {
    for p in pts {
        if path.last() != Some(&p) {
            path.push(p);
        }
    }
}

/// The curve segment `ρ_{x,y}` from `x` to the first occurrence of `y` in the
/// chosen direction, and its parameter span.
pub fn rho_path(word: &CyclicWord, x: &Generator, y: &Generator, forward: bool) -> (CurveSegmentPath, i64) {
    let lift = Lift::of(word);
    let two_l = 2 * lift.len() as i64;
    let span = if forward {
        (y.t2 - x.t2).rem_euclid(two_l)
    } else {
        -(x.t2 - y.t2).rem_euclid(two_l)
    };
    let path = CurveSegmentPath::new(lift.points_between(x.t2, x.t2 + span))
        .with_tangents(generator_tangent(x, forward), generator_tangent(y, forward));
    (path, span)
}

/// One full lap `γ_x` from `x` in the chosen direction.
pub fn lap_path(word: &CyclicWord, x: &Generator, forward: bool) -> CurveSegmentPath {
    let lift = Lift::of(word);
    let two_l = 2 * lift.len() as i64;
    let end = if forward { x.t2 + two_l } else { x.t2 - two_l };
    let t = generator_tangent(x, forward);
    CurveSegmentPath::new(lift.points_between(x.t2, end)).with_tangents(t, t)
}

/// Every quantity entering the general grading formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingTerms {
    pub forward: bool,
    pub a_xy: i64,
    #[serde(serialize_with = "serialize_rational")]
    pub b_xy: Rational,
    pub a_gamma: i64,
    pub b_gamma: i64,
    pub n: i64,
    pub ell: i64,
    #[serde(serialize_with = "serialize_rational")]
    pub k: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rot_rho: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rot_gamma: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rot: Rational,
    /// `Area(P)`.
    #[serde(serialize_with = "serialize_rational")]
    pub area: Rational,
    /// `Area(P′)` when `ℓ ≥ 1`, where `P′` drops the shared initial copy of
    /// `ρ_{x,y}`.
    #[serde(skip)]
    pub area_trimmed: Option<Rational>,
    /// `gr(y) − gr(x)`.
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
}

/// Builds `P = ρ̃ⁿ · β̃^{−k} · (γ̃ˡ)⁻¹` and evaluates
/// `(2·Area(P) − rot(P) − (n−1)·k·a_{x,y}) / n`.
pub fn grading_terms(
    word: &CyclicWord,
    x: &Generator,
    y: &Generator,
    forward: bool,
) -> Result<GradingTerms> {
    let lift = Lift::of(word);
    let (rho, span) = rho_path(word, x, y, forward);
    let lap = lap_path(word, x, forward);
    let sign = if forward { 1 } else { -1 };
    let period = lift.period2().scale(sign);
    let (a_gamma, b_gamma) = (period.y2 / 2, period.x2 / 2);
    if a_gamma == 0 {
        return Err(Error::ZeroAlphaCount(x.component));
    }
    let disp = lift.point(x.t2 + span) - lift.point(x.t2);
    let a_xy = disp.y2 / 2;
    let g = a_xy.gcd(&a_gamma);
    let n = a_gamma.abs() / g;
    let ell = n * a_xy / a_gamma;
    // k in doubled units
    let k2 = n * disp.x2 - ell * period.x2;

    let mut p = Vec::new();
    for i in 0..n {
        append(&mut p, rho.points.iter().map(|&q| q + disp.scale(i)));
    }
    let corner = p.last().copied().expect("nonempty path");
    append(&mut p, [corner - HalfPoint::new(k2, 0)]);
    let start = lift.point(x.t2);
    let end = x.t2 + sign * ell * 2 * lift.len() as i64;
    append(&mut p, lift.points_between(end, x.t2));
    debug_assert_eq!(p.last(), Some(&start));
    let area = enclosed_area(&CurveSegmentPath::new(p))?;

    let area_trimmed = (ell >= 1).then(|| {
        let mut q = Vec::new();
        for i in 1..n {
            append(&mut q, rho.points.iter().map(|&r| r + disp.scale(i)));
        }
        if q.is_empty() {
            q.push(start + disp);
        }
        let c = *q.last().expect("nonempty");
        append(&mut q, [c - HalfPoint::new(k2, 0)]);
        append(&mut q, lift.points_between(end, x.t2 + span));
        twice_area(&q) / 2
    });

    let rot_rho = rotation_number(&rho)?;
    let rot_gamma = rotation_number(&lap)?;
    let rot = rot_rho * n - rot_gamma * ell;
    let k = rat(k2, 2);
    let value = (area * 2 - rot - k * ((n - 1) * a_xy)) / n;
    Ok(GradingTerms {
        forward,
        a_xy,
        b_xy: rat(disp.x2, 2),
        a_gamma,
        b_gamma,
        n,
        ell,
        k,
        rot_rho,
        rot_gamma,
        rot,
        area,
        area_trimmed,
        value,
    })
}

/// Traversal direction along which the signed α-count is positive.
pub fn positive_direction(word: &CyclicWord) -> Result<bool> {
    match CurveClass::of_letters(word.letters()).a {
        0 => Err(Error::ZeroAlphaCount(0)),
        a => Ok(a > 0),
    }
}

/// Terms of the general formula with the curve oriented so that `a_γ > 0`.
pub fn grading_terms_oriented(word: &CyclicWord, x: &Generator, y: &Generator) -> Result<GradingTerms> {
    let forward = positive_direction(word).map_err(|_| Error::ZeroAlphaCount(x.component))?;
    grading_terms(word, x, y, forward)
}

/// `gr(y) − gr(x)` for generators on one homologically nontrivial component.
pub fn grading_diff_general(word: &CyclicWord, x: &Generator, y: &Generator) -> Result<Rational> {
    Ok(grading_terms_oriented(word, x, y)?.value)
}

/// `gr(y) − gr(x)` for generators in one spin-c class, where the closing path
/// needs no wrapping (`n = 1`).
pub fn grading_diff_same_spinc(word: &CyclicWord, x: &Generator, y: &Generator) -> Result<Rational> {
    let t = grading_terms_oriented(word, x, y)?;
    if t.n != 1 {
        return Err(Error::DifferentSpinc);
    }
    Ok(t.value)
}

/// Data of the fixed-point grading difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedGrading {
    /// `Area(P′)` with `P′ = ρ̃_{x0,x1} · (ρ̃_{x1,x0})⁻¹`.
    #[serde(serialize_with = "serialize_rational")]
    pub area: Rational,
    /// `rot(ρ_{x0,x1})`.
    #[serde(serialize_with = "serialize_rational")]
    pub rot: Rational,
    /// `gr(x1) − gr(x0)`.
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
}

fn generator_at(word: &CyclicWord, t2: i64) -> Result<Generator> {
    word_generators(word, 0)?
        .into_iter()
        .find(|g| g.t2 == t2)
        .ok_or(Error::NotTypeAlpha)
}

/// `gr(x1) − gr(x0) = Area(P′) − rot(ρ_{x0,x1})`.
pub fn grading_diff_fixed(word: &CyclicWord) -> Result<FixedGrading> {
    let sp = fixed_points(word)?;
    let g0 = generator_at(word, sp.t0)?;
    let g1 = generator_at(word, sp.t1)?;
    let lift = Lift::of(word);
    let l = lift.len() as i64;
    let first = lift.points_between(sp.t0, sp.t0 + l);
    let second = lift.points_between(sp.t0 + l, sp.t0 + 2 * l);
    let shift = *first.last().expect("nonempty") - *second.last().expect("nonempty");
    let mut p = first.clone();
    append(&mut p, second.iter().rev().map(|&q| q + shift));
    let area = enclosed_area(&CurveSegmentPath::new(p))?;
    let rho = CurveSegmentPath::new(first)
        .with_tangents(generator_tangent(&g0, true), generator_tangent(&g1, true));
    let rot = rotation_number(&rho)?;
    Ok(FixedGrading {
        area,
        rot,
        value: area - rot,
    })
}

/// True when the periodic lift of the word passes through no point twice.
pub fn lift_is_embedded(word: &CyclicWord) -> bool {
    let lift = Lift::of(word);
    let per = lift.period2();
    let l = lift.len() as i64;
    let corners: Vec<HalfPoint> = (0..l).map(|i| lift.corner(i)).collect();
    for i in 0..corners.len() {
        for j in i + 1..corners.len() {
            let d = corners[j] - corners[i];
            let q = if per.x2 != 0 {
                d.x2 / per.x2
            } else if per.y2 != 0 {
                d.y2 / per.y2
            } else {
                0
            };
            let multiple = d == per.scale(q);
            if multiple {
                return false;
            }
        }
    }
    true
}

/// One row of a grading table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingRow {
    pub component: usize,
    pub index: usize,
    pub class: SpincClass,
    pub point: HalfPoint,
    /// Grading relative to the first generator of the component.
    #[serde(serialize_with = "serialize_rational")]
    pub grading: Rational,
}

/// Gradings of all generators, each relative to the first generator of its
/// component.
pub fn grading_table(components: &[CyclicWord]) -> Result<Vec<GradingRow>> {
    let mut out = Vec::new();
    for (ci, w) in components.iter().enumerate() {
        let gens = word_generators(w, ci)?;
        let a = CurveClass::of_letters(w.letters()).a;
        let Some(base) = gens.first() else { continue };
        for g in &gens {
            let grading = if a == 0 {
                grading_terms(w, base, g, true)
                    .map(|t| t.value)
                    .unwrap_or_else(|_| Rational::zero())
            } else {
                grading_diff_general(w, base, g)?
            };
            out.push(GradingRow {
                component: ci,
                index: g.index,
                class: spinc_class_of(g, a),
                point: g.point,
                grading,
            });
        }
    }
    Ok(out)
}

/// Which formula produced a d-invariant difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaDRegime {
    /// L-space filling with embedded lift: the value is Δ_sym.
    LSpace,
    /// Otherwise: bottom gradings of the two self-conjugate classes.
    GradingEstimate,
}

/// Spin d-invariant difference of the β-filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaD {
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    pub regime: DeltaDRegime,
}

/// Total generator count equals `|det Q|`.
pub fn is_lspace(tree: &RootedTree) -> Result<bool> {
    let det = determinant(&intersection_form(tree).entries);
    is_lspace_with(&invariant(tree)?, det)
}

/// [`is_lspace`] for a precomputed invariant and determinant.
pub fn is_lspace_with(mc: &MultiCurve, det: i64) -> Result<bool> {
    if det == 0 {
        return Err(Error::SingularForm);
    }
    Ok(pairing_generator_count(mc)? as u64 == det.unsigned_abs())
}

/// Bottom grading of a class: the least grading among generators in the
/// grading parity that occurs most often.
fn class_bottom(gradings: &[Rational]) -> Rational {
    let mut by_parity: BTreeMap<Rational, Vec<Rational>> = BTreeMap::new();
    for &g in gradings {
        let two = Rational::from_integer(2);
        let parity = g - (g / two).floor() * two;
        by_parity.entry(parity).or_default().push(g);
    }
    let best = by_parity
        .values()
        .max_by_key(|v| v.len())
        .expect("class has a generator");
    *best.iter().min().expect("nonempty")
}

/// `d(𝔰₁) − d(𝔰₀)` for the classes of `x1` and `x0`.
pub fn delta_d(tree: &RootedTree) -> Result<DeltaD> {
    let mc = invariant(tree)?;
    let det = determinant(&intersection_form(tree).entries);
    if det == 0 {
        return Err(Error::SingularForm);
    }
    let w = distinguished_component(&mc)?;
    let cls = CurveClass::of_letters(w.letters());
    if cls.hst_type != HstType::Alpha {
        return Err(Error::NotTypeAlpha);
    }
    let fixed = grading_diff_fixed(&w)?;
    if is_lspace_with(&mc, det)? && lift_is_embedded(&w) {
        return Ok(DeltaD {
            value: fixed.area,
            regime: DeltaDRegime::LSpace,
        });
    }
    let sp = fixed_points(&w)?;
    let gens = word_generators(&w, 0)?;
    let x0 = generator_at(&w, sp.t0)?;
    let x1 = generator_at(&w, sp.t1)?;
    let c0 = spinc_class_of(&x0, cls.a);
    let c1 = spinc_class_of(&x1, cls.a);
    let mut g0 = Vec::new();
    let mut g1 = Vec::new();
    for g in &gens {
        let c = spinc_class_of(g, cls.a);
        let gr = grading_diff_general(&w, &x0, g)?;
        if c == c0 {
            g0.push(gr);
        }
        if c == c1 {
            g1.push(gr);
        }
    }
    Ok(DeltaD {
        value: class_bottom(&g1) - class_bottom(&g0),
        regime: DeltaDRegime::GradingEstimate,
    })
}
