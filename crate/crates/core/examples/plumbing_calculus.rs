//! Intersection forms, determinants, signatures, the stripped continued
//! fraction r_* and tree reduction on a few rooted trees.
//!
//! Run with `cargo run -p plumbcurve --example plumbing_calculus`.

use plumbcurve::fixtures;
use plumbcurve::plumbing::{det_and_signature, intersection_form, r_star, reduce_tree, RootedTree};

fn main() -> plumbcurve::Result<()> {
    let chain = RootedTree::from_spec(
        &[("r", 0), ("a", 0), ("b", -3), ("c", -1)],
        &[("r", "a"), ("a", "b"), ("b", "c")],
        "r",
    )?;
    let mut trees = fixtures::all();
    trees.push(("chain", chain));
    for (name, tree) in trees {
        let (det, sig) = det_and_signature(&intersection_form(&tree));
        let red = reduce_tree(&tree);
        println!(
            "{name}: det {det} signature {sig} r_* {} reduced {} -> {}",
            r_star(&tree),
            red.reduced,
            red.tree.to_json()
        );
    }
    Ok(())
}
