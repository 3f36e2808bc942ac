//! Deterministic SVG drawings of lifted curves.
//!
//! Output depends only on the input and the options: coordinates are integers
//! and elements are emitted in a fixed order.

use crate::error::Result;
use crate::geometry::{
    distinguished_component, fixed_points, twice_area, word_generators, HalfPoint, Lift,
};
use crate::rational::fmt_rational;
use crate::words::{CyclicWord, MultiCurve};
use std::fmt::Write;

/// Drawing options.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SvgOptions {
    /// Periods of the lift to draw, at least 1.
    pub periods: usize,
    /// Shade the region between the half-lap from `x0` to `x1` and its chord.
    pub shade_delta_sym: bool,
    /// Mark the generators of the first period.
    pub mark_generators: bool,
    /// Mark the fixed points `x0` and `x1`.
    pub mark_fixed_points: bool,
    /// Pixels per unit; rounded up to an even number.
    pub scale: i64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            periods: 2,
            shade_delta_sym: true,
            mark_generators: false,
            mark_fixed_points: true,
            scale: 40,
        }
    }
}

struct Frame {
    min: HalfPoint,
    max: HalfPoint,
    half: i64,
    margin: i64,
}

impl Frame {
    fn px(&self, p: HalfPoint) -> (i64, i64) {
        (
            self.margin + (p.x2 - self.min.x2) * self.half,
            self.margin + (self.max.y2 - p.y2) * self.half,
        )
    }

    fn width(&self) -> i64 {
        2 * self.margin + (self.max.x2 - self.min.x2) * self.half
    }

    fn height(&self) -> i64 {
        2 * self.margin + (self.max.y2 - self.min.y2) * self.half
    }
}

fn polyline(frame: &Frame, pts: &[HalfPoint]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = frame.px(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders every component of a multicurve; markers and shading apply to the
/// distinguished component when there is one.
pub fn render_curves(mc: &MultiCurve, opts: &SvgOptions) -> Result<String> {
    let periods = opts.periods.max(1) as i64;
    let lifts: Vec<Lift> = mc.components().iter().map(Lift::of).collect();
    let paths: Vec<Vec<HalfPoint>> = lifts
        .iter()
        .map(|l| l.points_between(0, 2 * l.len() as i64 * periods))
        .collect();
    let all = paths.iter().flatten();
    let min = HalfPoint::new(
        all.clone().map(|p| p.x2).min().unwrap_or(0).min(0) - 1,
        all.clone().map(|p| p.y2).min().unwrap_or(0).min(0) - 1,
    );
    let max = HalfPoint::new(
        all.clone().map(|p| p.x2).max().unwrap_or(2).max(2) + 1,
        all.map(|p| p.y2).max().unwrap_or(2).max(2) + 1,
    );
    let scale = opts.scale.max(2) + opts.scale.max(2) % 2;
    let frame = Frame {
        min,
        max,
        half: scale / 2,
        margin: scale / 2,
    };
    let distinguished = distinguished_component(mc).ok();

    let mut s = String::new();
    let (w, h) = (frame.width(), frame.height());
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .expect("write to string");
    writeln!(s, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##).expect("write");

    for x2 in (min.x2..=max.x2).filter(|v| v.rem_euclid(2) == 0) {
        for y2 in (min.y2..=max.y2).filter(|v| v.rem_euclid(2) == 0) {
            let (x, y) = frame.px(HalfPoint::new(x2, y2));
            writeln!(s, r##"<circle class="puncture" cx="{x}" cy="{y}" r="3" fill="#000000"/>"##)
                .expect("write");
        }
    }

    if let Some(word) = distinguished.as_ref().filter(|_| opts.shade_delta_sym) {
        if let Ok(sp) = fixed_points(word) {
            let lift = Lift::of(word);
            let poly = lift.points_between(sp.t0, sp.t0 + lift.len() as i64);
            let area = twice_area(&poly);
            writeln!(
                s,
                r##"<polygon class="delta-sym" data-delta-sym="{}" points="{}" fill="#f4a582" fill-opacity="0.6" stroke="none"/>"##,
                fmt_rational(&area),
                polyline(&frame, &poly)
            )
            .expect("write");
        }
    }

    for (i, (word, pts)) in mc.components().iter().zip(&paths).enumerate() {
        writeln!(
            s,
            r##"<polyline class="curve" data-component="{i}" data-word="{word}" points="{}" fill="none" stroke="#2166ac" stroke-width="2"/>"##,
            polyline(&frame, pts)
        )
        .expect("write");
    }

    if opts.mark_generators {
        for (i, word) in mc.components().iter().enumerate() {
            for g in word_generators(word, i)? {
                let (x, y) = frame.px(g.point);
                writeln!(
                    s,
                    r##"<circle class="generator" data-component="{i}" data-index="{}" cx="{x}" cy="{y}" r="5" fill="#b2182b"/>"##,
                    g.index
                )
                .expect("write");
            }
        }
    }

    if let Some(word) = distinguished.as_ref().filter(|_| opts.mark_fixed_points) {
        if let Ok(sp) = fixed_points(word) {
            let lift = Lift::of(word);
            for (label, t) in [("x0", sp.t0), ("x1", sp.t1)] {
                let (x, y) = frame.px(lift.point(t));
                writeln!(
                    s,
                    r##"<circle class="fixed-point" data-label="{label}" cx="{x}" cy="{y}" r="6" fill="none" stroke="#1b7837" stroke-width="2"/>"##
                )
                .expect("write");
                writeln!(
                    s,
                    r##"<text x="{}" y="{}" font-family="monospace" font-size="12">{label}</text>"##,
                    x + 8,
                    y - 8
                )
                .expect("write");
            }
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Renders a single word.
pub fn render_word(word: &CyclicWord, opts: &SvgOptions) -> Result<String> {
    render_curves(&MultiCurve::single(word.clone()), opts)
}
