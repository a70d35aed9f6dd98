//! Search for nonzero bounded maximal coefficients over tree choices.

use std::collections::HashSet;
use std::time::Instant;

use anyhow::{bail, Result};
use efl_core::algebra::{coefficient_by_orientations, enumerate_vc_monomials, vc_completions};
use efl_core::auxgraph::{build_aux, enumerate_spanning_tree_choices};
use efl_core::hypergraph::{generate, Family};
use efl_core::orientation::{complete_orientation, orient_g1, orient_g2_pathlike};
use efl_core::{AuxGraph, AuxKind, ExponentVector, LinearHypergraph};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::engine::Coefficient;

/// Largest `n` the orientation engine is run at in sweeps.
pub const MAX_SEARCH_N: usize = 4;

pub struct Witness {
    pub tree_index: usize,
    pub aux: AuxGraph,
    pub target: ExponentVector,
    pub coefficient: Coefficient,
}

pub struct InstanceOutcome {
    pub trees_tried: usize,
    pub targets_tried: usize,
    pub vc_monomials: usize,
    pub witness: Option<Witness>,
}

/// The constructive target for this tree choice, when one exists.
fn constructive_target(h: &LinearHypergraph, aux: &AuxGraph, tree_index: usize) -> Option<ExponentVector> {
    let identifiers = match aux.kind() {
        AuxKind::G1 => orient_g1(aux).ok()?,
        // The G2 construction is defined for path-like trees, which are the
        // first choice.
        AuxKind::G2 if tree_index == 0 => orient_g2_pathlike(h).ok()?.1,
        AuxKind::G2 => return None,
    };
    complete_orientation(aux, &identifiers)
        .ok()
        .map(|o| o.in_degrees(aux.n()))
}

/// Tries up to `tree_limit` tree choices; within each, the constructive
/// target first and then every completion of every VC monomial.
pub fn find_nonzero(h: &LinearHypergraph, kind: AuxKind, tree_limit: usize) -> Result<InstanceOutcome> {
    let n = h.n();
    if kind == AuxKind::G1 && !efl_core::scalar::SUPPORTED_PRIMES.contains(&(n as u64)) {
        bail!("kind g1 needs a prime n, got {n}");
    }
    let mut outcome = InstanceOutcome {
        trees_tried: 0,
        targets_tried: 0,
        vc_monomials: 0,
        witness: None,
    };
    for (tree_index, trees) in enumerate_spanning_tree_choices(h, tree_limit)?.enumerate() {
        outcome.trees_tried += 1;
        let aux = build_aux(h, &trees, kind)?;
        let mut seen: HashSet<ExponentVector> = HashSet::new();
        let monomials = enumerate_vc_monomials(&aux);
        outcome.vc_monomials += monomials.len();
        let candidates = constructive_target(h, &aux, tree_index)
            .into_iter()
            .chain(monomials.iter().flat_map(|beta| vc_completions(beta, n)));
        for target in candidates {
            if !seen.insert(target.clone()) {
                continue;
            }
            outcome.targets_tried += 1;
            let coefficient = Coefficient::from_integer(&aux, coefficient_by_orientations(&aux, &target)?);
            if !coefficient.is_zero() {
                outcome.witness = Some(Witness {
                    tree_index,
                    aux,
                    target,
                    coefficient,
                });
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub kind: AuxKind,
    pub tree_limit: usize,
    pub skip: usize,
    pub timings: bool,
}

fn kind_name(kind: AuxKind) -> &'static str {
    match kind {
        AuxKind::G1 => "g1",
        AuxKind::G2 => "g2",
    }
}

/// One JSON report per sampled instance, in sample order. Instance `s` is
/// the random family with seed `seed + s`.
pub fn search_reports(cfg: &SearchConfig) -> Result<Vec<Value>> {
    if cfg.n > MAX_SEARCH_N {
        bail!(
            "the orientation engine is limited to n <= {MAX_SEARCH_N} in searches, got n={}",
            cfg.n
        );
    }
    (cfg.skip..cfg.samples)
        .into_par_iter()
        .map(|sample| {
            let seed = cfg.seed + sample as u64;
            let start = Instant::now();
            let h = generate(Family::Random { n: cfg.n }, seed)?;
            let outcome = find_nonzero(&h, cfg.kind, cfg.tree_limit)?;
            let mut report = json!({
                "family": "random",
                "n": cfg.n,
                "seed": seed,
                "sample": sample,
                "kind": kind_name(cfg.kind),
                "engine": "orient",
                "trees_tried": outcome.trees_tried,
                "vc_monomials": outcome.vc_monomials,
                "targets_tried": outcome.targets_tried,
                "nonzero_found": outcome.witness.is_some(),
                "candidate": outcome.witness.is_none(),
                "version": env!("CARGO_PKG_VERSION"),
            });
            if let Some(w) = &outcome.witness {
                report["witness"] = json!({
                    "tree_index": w.tree_index,
                    "target": w.target.to_json_map(cfg.n),
                    "coefficient": w.coefficient.to_json(),
                });
            }
            if cfg.timings {
                report["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
            }
            Ok(report)
        })
        .collect()
}
