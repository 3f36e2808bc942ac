//! Command-line front end: every subcommand prints a JSON envelope
//! `{"ok": bool, "result" | "error": ...}` on stdout.
//!
//! Exit codes: 0 success, 1 domain error, 2 input error, 3 identity violation.

use clap::{Parser, Subcommand, ValueEnum};
use plumbcurve::error::ErrorClass;
use plumbcurve::geometry::{delta_sym, distinguished_component, fixed_points, spinc_ranks};
use plumbcurve::gradings::{delta_d, grading_diff_fixed, grading_table, is_lspace_with};
use plumbcurve::harness::run_verify_batch;
use plumbcurve::loopcalc::invariant;
use plumbcurve::plumbing::{
    decompose, det_and_signature, intersection_form, parse_tree, reduce_tree, RootedTree,
};
use plumbcurve::rational::fmt_rational;
use plumbcurve::svg::{render_curves, SvgOptions};
use plumbcurve::words::{curve_class, loop_encode};
use plumbcurve::wu::{enumerate_relative_wu, labeled_pair, mubar_closed, RelWuSet};
use plumbcurve::{Error, Result};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "plumbcurve", version, about = "Immersed-curve invariants of rooted plumbing trees")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build plan and cyclic words of the curve invariant.
    Invariant { tree: PathBuf },
    /// Generator ranks per spin-c class of the beta filling.
    Rank { tree: PathBuf },
    /// Symmetry invariant of the distinguished component.
    DeltaSym { tree: PathBuf },
    /// Weight-sum difference between the two relative Wu sets.
    DeltaMubar { tree: PathBuf },
    /// Relative Wu sets and the Wu type.
    Wu { tree: PathBuf },
    /// Grading table and d-invariant difference.
    Gradings { tree: PathBuf },
    /// Randomized check of the main identity.
    Verify {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long = "max-vertices")]
        max_vertices: usize,
    },
    /// Draw the lifted invariant.
    Svg {
        tree: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Periods of the lift to draw.
        #[arg(long, default_value_t = 2)]
        periods: usize,
        /// Mark the generators of the first period.
        #[arg(long)]
        mark_generators: bool,
        /// Leave the deviation region unshaded.
        #[arg(long)]
        no_shade: bool,
    },
    /// Blow down and collapse away from the root until reduced.
    Reduce { tree: PathBuf },
}

fn load(path: &Path) -> Result<RootedTree> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    parse_tree(&text)
}

fn sorted_ids(s: &RelWuSet) -> Vec<String> {
    let mut ids = s.ids.clone();
    ids.sort();
    ids
}

fn wu_json(s: &RelWuSet) -> Value {
    json!({ "ids": sorted_ids(s), "type": s.kind, "balanced": s.balanced })
}

fn run(cmd: &Command) -> Result<(Value, String)> {
    match cmd {
        Command::Invariant { tree } => {
            let t = load(tree)?;
            let mc = invariant(&t)?;
            let words: Vec<String> = mc.components().iter().map(|w| w.to_string()).collect();
            let loops: Vec<String> = mc.components().iter().map(|w| loop_encode(w).to_string()).collect();
            let plan = decompose(&t).to_string();
            let text = format!("plan: {plan}\n{}", words.join("\n"));
            Ok((
                json!({ "plan": plan, "components": words, "loop": loops, "class": curve_class(&mc) }),
                text,
            ))
        }
        Command::Rank { tree } => {
            let t = load(tree)?;
            let mc = invariant(&t)?;
            let (det, sig) = det_and_signature(&intersection_form(&t));
            let ranks = spinc_ranks(&mc)?;
            let total: usize = ranks.iter().map(|r| r.rank).sum();
            let lspace = if det == 0 { None } else { Some(is_lspace_with(&mc, det)?) };
            let list: Vec<String> = ranks.iter().map(|r| r.rank.to_string()).collect();
            let text = format!("det {det}\ntotal rank {total}\nranks {}", list.join(" "));
            Ok((
                json!({ "det": det, "signature": sig, "total": total, "lspace": lspace, "ranks": ranks }),
                text,
            ))
        }
        Command::DeltaSym { tree } => {
            let t = load(tree)?;
            let w = distinguished_component(&invariant(&t)?)?;
            let d = delta_sym(&w)?;
            let sp = fixed_points(&w)?;
            Ok((
                json!({ "delta_sym": fmt_rational(&d), "word": w.to_string(), "fixed_points": sp }),
                fmt_rational(&d),
            ))
        }
        Command::DeltaMubar { tree } => {
            let t = load(tree)?;
            let (s0, s1) = labeled_pair(&t)?;
            let d = s1.weight_sum(&t) - s0.weight_sum(&t);
            let mubar = |s: &RelWuSet| {
                s.balanced
                    .then(|| mubar_closed(&t, &s.members).ok())
                    .flatten()
            };
            Ok((
                json!({
                    "delta_mubar": d,
                    "s0": wu_json(&s0),
                    "s1": wu_json(&s1),
                    "mubar_s0": mubar(&s0),
                    "mubar_s1": mubar(&s1),
                }),
                d.to_string(),
            ))
        }
        Command::Wu { tree } => {
            let t = load(tree)?;
            let sets = enumerate_relative_wu(&t)?;
            let ty = plumbcurve::wu::census(&sets);
            let lines: Vec<String> = sets
                .iter()
                .map(|s| format!("{{{}}} type {} {}", sorted_ids(s).join(","), s.kind, if s.balanced { "balanced" } else { "unbalanced" }))
                .collect();
            let text = format!("wu type {:?}\n{}", ty.as_tuple(), lines.join("\n"));
            Ok((
                json!({
                    "wu_type": [ty.0, ty.1, ty.2, ty.3],
                    "hst_type": ty.hst_type(),
                    "sets": sets.iter().map(wu_json).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Gradings { tree } => {
            let t = load(tree)?;
            let mc = invariant(&t)?;
            let table = grading_table(mc.components())?;
            let fixed = distinguished_component(&mc).and_then(|w| grading_diff_fixed(&w)).ok();
            let dd = delta_d(&t);
            let mut text: Vec<String> = table
                .iter()
                .map(|r| format!("component {} generator {} grading {}", r.component, r.index, fmt_rational(&r.grading)))
                .collect();
            let dd_json = match &dd {
                Ok(v) => {
                    text.push(format!("delta_d {} ({:?})", fmt_rational(&v.value), v.regime));
                    json!(v)
                }
                Err(e) => json!({ "error": { "code": e.code(), "message": e.to_string() } }),
            };
            Ok((json!({ "table": table, "fixed": fixed, "delta_d": dd_json }), text.join("\n")))
        }
        Command::Verify { seed, count, max_vertices } => {
            let report = run_verify_batch(*seed, *count, *max_vertices)?;
            let a = &report.aggregate;
            let text = format!(
                "generated {} passed all gates {} violations {}",
                a.generated, a.passed_all_gates, a.violations
            );
            Ok((serde_json::to_value(&report).expect("report serializes"), text))
        }
        Command::Svg { tree, output, periods, mark_generators, no_shade } => {
            let t = load(tree)?;
            let opts = SvgOptions {
                periods: *periods,
                mark_generators: *mark_generators,
                shade_delta_sym: !*no_shade,
                ..SvgOptions::default()
            };
            let doc = render_curves(&invariant(&t)?, &opts)?;
            std::fs::write(output, &doc)
                .map_err(|e| Error::Malformed(format!("cannot write {}: {e}", output.display())))?;
            let path = output.display().to_string();
            Ok((json!({ "path": path, "bytes": doc.len() }), format!("wrote {path}")))
        }
        Command::Reduce { tree } => {
            let t = load(tree)?;
            let r = reduce_tree(&t);
            Ok((
                json!({ "tree": r.tree.to_value(), "reduced": r.reduced, "blocking": r.blocking }),
                r.tree.to_json(),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((value, text)) => {
            match cli.format {
                Format::Json => println!("{}", json!({ "ok": true, "result": value })),
                Format::Text => println!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let class = e.class();
            let label = match class {
                ErrorClass::Domain => "domain",
                ErrorClass::Input => "input",
                ErrorClass::Identity => "identity",
            };
            println!(
                "{}",
                json!({ "ok": false, "error": { "code": e.code(), "class": label, "message": e.to_string() } })
            );
            eprintln!("error: {e}");
            ExitCode::from(match class {
                ErrorClass::Domain => 1,
                ErrorClass::Input => 2,
                ErrorClass::Identity => 3,
            })
        }
    }
}
