//! Draws the lifted invariant of T1 with its fixed points and the shaded
//! deviation region, and TA with its generators marked.
//!
//! Run with `cargo run -p plumbcurve --example render_svg -- [output-dir]`.

use plumbcurve::fixtures;
use plumbcurve::loopcalc::invariant;
use plumbcurve::svg::{render_curves, SvgOptions};
use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let t1 = render_curves(&invariant(&fixtures::t1())?, &SvgOptions::default())?;
    let ta = render_curves(
        &invariant(&fixtures::ta())?,
        &SvgOptions { mark_generators: true, ..SvgOptions::default() },
    )?;
    for (name, doc) in [("t1.svg", t1), ("ta.svg", ta)] {
        let path = dir.join(name);
        std::fs::write(&path, doc)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
