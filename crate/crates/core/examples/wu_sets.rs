//! Enumerates relative Wu sets over F2, prints Wu types and Δμ̄, and picks a
//! leaf root of type α for closed trees with two spin structures.
//!
//! Run with `cargo run -p plumbcurve --example wu_sets`.

use plumbcurve::fixtures;
use plumbcurve::wu::{choose_type_alpha_root, delta_mubar, enumerate_relative_wu, wu_type};

fn main() -> plumbcurve::Result<()> {
    for (name, tree) in fixtures::all() {
        println!("{name}: Wu type {:?}", wu_type(&tree)?.as_tuple());
        for s in enumerate_relative_wu(&tree)? {
            println!(
                "  {{{}}} type {} {}",
                s.ids.join(", "),
                s.kind,
                if s.balanced { "balanced" } else { "unbalanced" }
            );
        }
        println!("  delta_mubar = {}", delta_mubar(&tree)?);
        match choose_type_alpha_root(&tree) {
            Ok(v) => println!("  type-alpha leaf root: {}", tree.id(v)),
            Err(e) => println!("  no type-alpha root: {e}"),
        }
    }
    Ok(())
}
