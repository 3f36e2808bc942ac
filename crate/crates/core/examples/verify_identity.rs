//! Runs the randomized check of Δ_sym = −¼·Δμ̄ and prints the gate tallies.
//!
//! Run with `cargo run --release -p plumbcurve --example verify_identity -- [seed] [count]`.

use plumbcurve::harness::run_verify_batch;

fn main() -> plumbcurve::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let report = run_verify_batch(seed, count, 10)?;
    for f in &report.fixtures {
        println!(
            "fixture {}: delta_sym {} delta_mubar {} identity {}",
            f.name, f.delta_sym, f.delta_mubar, f.identity_holds
        );
    }
    let a = &report.aggregate;
    println!(
        "seed {seed}: generated {} passed all gates {} violations {}",
        a.generated, a.passed_all_gates, a.violations
    );
    for (gate, n) in &a.filtered_by {
        println!("  filtered by {gate:?}: {n}");
    }
    Ok(())
}
