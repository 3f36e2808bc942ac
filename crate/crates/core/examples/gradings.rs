//! Rational grading differences on the TA curve: the general formula for each
//! generator, the fixed-point formula, and the d-invariant difference.
//!
//! Run with `cargo run -p plumbcurve --example gradings`.

use plumbcurve::fixtures;
use plumbcurve::geometry::{distinguished_component, fixed_points, word_generators};
use plumbcurve::gradings::{delta_d, grading_diff_fixed, grading_terms_oriented};
use plumbcurve::loopcalc::invariant;
use plumbcurve::rational::fmt_rational;

fn main() -> plumbcurve::Result<()> {
    let tree = fixtures::ta();
    let word = distinguished_component(&invariant(&tree)?)?;
    let sp = fixed_points(&word)?;
    let gens = word_generators(&word, 0)?;
    let x = gens.iter().find(|g| g.t2 == sp.t0).expect("x0 is a generator");
    println!("curve {word}, base generator x0 at ({}, {})", x.x(), x.height());
    for y in &gens {
        let t = grading_terms_oriented(&word, x, y)?;
        println!(
            "  y at ({}, {}): n = {} l = {} k = {} Area(P) = {} rot(rho) = {} gr(y) - gr(x) = {}",
            y.x(),
            y.height(),
            t.n,
            t.ell,
            fmt_rational(&t.k),
            fmt_rational(&t.area),
            fmt_rational(&t.rot_rho),
            fmt_rational(&t.value)
        );
    }
    let fixed = grading_diff_fixed(&word)?;
    println!(
        "gr(x1) - gr(x0) = Area(P') - rot = {} - {} = {}",
        fmt_rational(&fixed.area),
        fmt_rational(&fixed.rot),
        fmt_rational(&fixed.value)
    );
    let dd = delta_d(&tree)?;
    println!("d-invariant difference {} ({:?})", fmt_rational(&dd.value), dd.regime);
    Ok(())
}
