//! Merges two cyclic words with the toroidal grid and with the geometric
//! vertical sum, and shows that both give the same components.
//!
//! Run with `cargo run -p plumbcurve --example merge_grid`.

use plumbcurve::geometry::vertical_sum_merge;
use plumbcurve::loopcalc::{merge_component_count, merge_op};
use plumbcurve::words::{loop_decode, loop_encode, LoopWord};

fn main() -> plumbcurve::Result<()> {
    let pairs = [("c0 c-1", "c0 c0 c-1"), ("c0 c-1", "a-1 b-1 c-4"), ("c1 c2", "cc1 c3 a2 c0")];
    for (left, right) in pairs {
        let w1 = loop_decode(&left.parse::<LoopWord>()?)?;
        let w2 = loop_decode(&right.parse::<LoopWord>()?)?;
        let grid = merge_op(&w1, &w2)?;
        let sum = vertical_sum_merge(&w1, &w2)?;
        println!("merge({left} | {right})");
        println!("  expected components: {}", merge_component_count(&w1, &w2)?);
        for w in grid.components() {
            println!("  grid  {}", loop_encode(w));
        }
        println!("  vertical sum agrees: {}", grid == sum);
    }
    Ok(())
}
