//! Decomposes the fixture trees into twist, extend and merge moves and prints
//! the resulting cyclic words in letter and loop notation.
//!
//! Run with `cargo run -p plumbcurve --example curve_invariant`.

use plumbcurve::fixtures;
use plumbcurve::loopcalc::invariant;
use plumbcurve::plumbing::decompose;
use plumbcurve::words::{curve_class, loop_encode};

fn main() -> plumbcurve::Result<()> {
    for (name, tree) in fixtures::all() {
        let curves = invariant(&tree)?;
        println!("{name}: plan {}", decompose(&tree));
        for w in curves.components() {
            println!("  word {w}");
            println!("  loop {}", loop_encode(w));
        }
        let class = curve_class(&curves);
        println!(
            "  signed counts (b, a) = ({}, {}), type {:?}",
            class.total.b, class.total.a, class.total.hst_type
        );
    }
    Ok(())
}
