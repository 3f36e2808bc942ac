//! Counts pairing generators per spin-c class and compares the total with
//! |det Q| to decide whether the β-filling is an L-space.
//!
//! Run with `cargo run -p plumbcurve --example spinc_ranks`.

use plumbcurve::fixtures;
use plumbcurve::geometry::spinc_ranks;
use plumbcurve::gradings::is_lspace;
use plumbcurve::loopcalc::invariant;
use plumbcurve::plumbing::{det_and_signature, intersection_form};

fn main() -> plumbcurve::Result<()> {
    for (name, tree) in fixtures::all() {
        let (det, sig) = det_and_signature(&intersection_form(&tree));
        let ranks = match spinc_ranks(&invariant(&tree)?) {
            Ok(r) => r,
            Err(e) => {
                println!("{name}: det {det} signature {sig} no ranks: {e}");
                continue;
            }
        };
        let list: Vec<usize> = ranks.iter().map(|r| r.rank).collect();
        let total: usize = list.iter().sum();
        let lspace = if det == 0 { "n/a".to_string() } else { is_lspace(&tree)?.to_string() };
        println!("{name}: det {det} signature {sig} ranks {list:?} total {total} L-space {lspace}");
    }
    Ok(())
}
