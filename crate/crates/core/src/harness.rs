//! Randomized verification of Δ_sym = −¼·Δμ̄ on gated rooted trees.
//!
//! Every instance is derived from `(seed, index)` alone, so reports are
//! byte-identical across runs and thread counts.

use crate::error::{Error, Result};
use crate::fixtures;
use crate::geometry::delta_sym_curves;
use crate::gradings::{is_lspace, is_lspace_with};
use crate::loopcalc::invariant;
use crate::plumbing::{determinant, intersection_form, r_star, reduce_tree, RootedTree, Vertex};
use crate::rational::{fmt_rational, Rational};
use crate::words::MultiCurve;
use crate::wu::{delta_mubar, enumerate_relative_wu};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

/// Hypotheses checked before the identity, cheapest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    Reduced,
    TwoRelativeWuSets,
    MergePreconditions,
    DetNonzero,
    LSpace,
    RStarNonintegral,
}

impl Gate {
    pub const ORDER: [Gate; 6] = [
        Gate::Reduced,
        Gate::TwoRelativeWuSets,
        Gate::MergePreconditions,
        Gate::DetNonzero,
        Gate::LSpace,
        Gate::RStarNonintegral,
    ];
}

/// Outcome for one tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub digest: String,
    pub vertices: usize,
    pub gates_passed: Vec<Gate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_gate: Option<Gate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_sym: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_mubar: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_holds: Option<bool>,
}

/// Fixture consistency check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureRecord {
    pub name: String,
    pub delta_sym: String,
    pub delta_mubar: i64,
    pub lspace: bool,
    pub identity_holds: bool,
}

/// Tallies over all generated instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub generated: usize,
    pub passed_all_gates: usize,
    pub violations: usize,
    pub filtered_by: BTreeMap<Gate, usize>,
}

/// Full verify report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    pub fixtures: Vec<FixtureRecord>,
    pub instances: Vec<InstanceRecord>,
    pub aggregate: Aggregate,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Hex SHA-256 of the tree document.
pub fn tree_digest(tree: &RootedTree) -> String {
    hex::encode(Sha256::digest(tree.to_json().as_bytes()))
}

/// Random tree for instance `index`: weights in `[−6, −2]` off the root,
/// root weight in `[−5, 5]`, root placed on a leaf.
pub fn random_tree(seed: u64, index: usize, max_vertices: usize) -> RootedTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut edges = Vec::new();
    let mut valence = vec![0usize; n];
    for i in 1..n {
        let p = rng.gen_range(0..i);
        edges.push((p, i));
        valence[p] += 1;
        valence[i] += 1;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| valence[v] <= 1).collect();
    let root = leaves[rng.gen_range(0..leaves.len())];
    let vertices: Vec<Vertex> = (0..n)
        .map(|v| Vertex {
            id: format!("v{v}"),
            weight: if v == root {
                rng.gen_range(-5..=5)
            } else {
                rng.gen_range(-6..=-2)
            },
        })
        .collect();
    RootedTree::from_indices(vertices, edges, root)
}

/// Outcome of the gates: the passed prefix, the first failure, and the
/// invariant when it was built.
pub fn run_gates(tree: &RootedTree) -> (Vec<Gate>, Option<Gate>, Option<MultiCurve>) {
    let mut passed = Vec::new();
    let mut curves: Option<MultiCurve> = None;
    let det = determinant(&intersection_form(tree).entries);
    for gate in Gate::ORDER {
        let ok = match gate {
            Gate::Reduced => {
                let r = reduce_tree(tree);
                r.reduced && r.tree.len() == tree.len()
            }
            Gate::TwoRelativeWuSets => {
                matches!(enumerate_relative_wu(tree), Ok(s) if s.len() == 2)
            }
            Gate::MergePreconditions => {
                curves = invariant(tree).ok();
                curves.is_some()
            }
            Gate::DetNonzero => det != 0,
            Gate::LSpace => curves
                .as_ref()
                .is_some_and(|mc| matches!(is_lspace_with(mc, det), Ok(true))),
            Gate::RStarNonintegral => !r_star(tree).is_integral_or_infinite(),
        };
        if !ok {
            return (passed, Some(gate), curves);
        }
        passed.push(gate);
    }
    (passed, None, curves)
}

/// Both sides of the identity.
fn identity_sides(tree: &RootedTree, mc: &MultiCurve) -> Result<(Rational, i64)> {
    Ok((delta_sym_curves(mc)?, delta_mubar(tree)?))
}

fn holds(ds: Rational, dm: i64) -> bool {
    ds * 4 == Rational::from_integer(-dm)
}

/// Evaluates one tree; an identity violation is an error carrying the tree.
pub fn evaluate_instance(index: usize, tree: &RootedTree) -> Result<InstanceRecord> {
    let (gates_passed, failed_gate, curves) = run_gates(tree);
    let mut rec = InstanceRecord {
        index,
        digest: tree_digest(tree),
        vertices: tree.len(),
        gates_passed,
        failed_gate,
        delta_sym: None,
        delta_mubar: None,
        identity_holds: None,
    };
    if failed_gate.is_none() {
        let violation = |why: String| {
            Error::IdentityViolation(format!("instance {index}: {why}; tree {}", tree.to_json()))
        };
        let mc = curves.expect("invariant built by the gates");
        let (ds, dm) = identity_sides(tree, &mc).map_err(|e| violation(e.to_string()))?;
        rec.delta_sym = Some(fmt_rational(&ds));
        rec.delta_mubar = Some(dm);
        rec.identity_holds = Some(holds(ds, dm));
        if !holds(ds, dm) {
            return Err(violation(format!(
                "delta_sym = {} but delta_mubar = {dm}",
                fmt_rational(&ds)
            )));
        }
    }
    Ok(rec)
}

/// Checks the identity on the named fixtures T1, TA and TB.
pub fn check_fixtures() -> Result<Vec<FixtureRecord>> {
    let mut out = Vec::new();
    for (name, tree) in [("T1", fixtures::t1()), ("TA", fixtures::ta()), ("TB", fixtures::tb())] {
        let (ds, dm) = identity_sides(&tree, &invariant(&tree)?)?;
        let rec = FixtureRecord {
            name: name.to_string(),
            delta_sym: fmt_rational(&ds),
            delta_mubar: dm,
            lspace: is_lspace(&tree)?,
            identity_holds: holds(ds, dm),
        };
        if !rec.identity_holds {
            return Err(Error::IdentityViolation(format!(
                "fixture {name}: delta_sym = {} but delta_mubar = {dm}",
                rec.delta_sym
            )));
        }
        out.push(rec);
    }
    Ok(out)
}

/// Generates `count` random trees and verifies the identity on every one that
/// passes all gates.
pub fn run_verify_batch(seed: u64, count: usize, max_vertices: usize) -> Result<VerifyReport> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    let fixtures = check_fixtures()?;
    let instances: Vec<InstanceRecord> = (0..count)
        .into_par_iter()
        .map(|i| evaluate_instance(i, &random_tree(seed, i, max_vertices)))
        .collect::<Result<_>>()?;
    let mut filtered_by = BTreeMap::new();
    for r in &instances {
        if let Some(g) = r.failed_gate {
            *filtered_by.entry(g).or_insert(0) += 1;
        }
    }
    let aggregate = Aggregate {
        generated: instances.len(),
        passed_all_gates: instances.iter().filter(|r| r.failed_gate.is_none()).count(),
        violations: instances
            .iter()
            .filter(|r| r.identity_holds == Some(false))
            .count(),
        filtered_by,
    };
    Ok(VerifyReport {
        seed,
        count,
        max_vertices,
        fixtures,
        instances,
        aggregate,
    })
}
