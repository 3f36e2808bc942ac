//! Locates the fixed points of the elliptic involution on the distinguished
//! curve and computes Δ_sym as twice the area between the half-lap and its
//! chord.
//!
//! Run with `cargo run -p plumbcurve --example delta_sym`.

use plumbcurve::fixtures;
use plumbcurve::geometry::{delta_sym, distinguished_component, fixed_points};
use plumbcurve::loopcalc::invariant;
use plumbcurve::rational::fmt_rational;

fn main() -> plumbcurve::Result<()> {
    for (name, tree) in fixtures::all() {
        let curves = invariant(&tree)?;
        let word = distinguished_component(&curves)?;
        match fixed_points(&word) {
            Ok(sp) => {
                let d = delta_sym(&word)?;
                println!(
                    "{name}: {word}  x0 = ({}, {})  x1 = ({}, {})  delta_sym = {}",
                    sp.x0.x(),
                    sp.x0.y(),
                    sp.x1.x(),
                    sp.x1.y(),
                    fmt_rational(&d)
                );
            }
            Err(e) => println!("{name}: {word}  {e}"),
        }
    }
    Ok(())
}
