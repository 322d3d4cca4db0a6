//! JSON report types and golden-file comparison.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

/// Machine-readable outcome of the `verify` and `tangent` subcommands.
/// All numeric fields are integers; `timings` is excluded from golden
/// comparison.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub colength: u64,
    pub tangent_total: u64,
    pub weight_marginal: BTreeMap<i64, u64>,
    pub torus_weight0_dim: u64,
    pub parity_violation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gen_count: Option<u64>,
    pub timings: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn from_outcome(out: &hilbtan::tangent::VerificationOutcome) -> VerificationReport {
        VerificationReport {
            colength: out.colength as u64,
            tangent_total: out.tangent_total as u64,
            weight_marginal: out
                .weight_marginal
                .iter()
                .map(|(&w, &d)| (w, d as u64))
                .collect(),
            torus_weight0_dim: out.torus_weight0_dim as u64,
            parity_violation: out.parity_violation,
            min_gen_count: Some(out.min_gen_count as u64),
            timings: out.timings_ms.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GbReport {
    pub order: String,
    pub variables: Vec<String>,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParityRowReport {
    pub n: u64,
    pub generators: Vec<String>,
    pub dim_graded: u64,
    pub dim_taylor: u64,
    pub parity_ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParityScanReport {
    pub max_n: u64,
    pub counts: Vec<u64>,
    pub total_ideals: u64,
    pub all_ok: bool,
    pub rows: Vec<ParityRowReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TorusCheckReport {
    pub scaling: [i64; 3],
    pub weight: i64,
    pub random_reps: u64,
    pub all_hold: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverReport {
    pub dimension: u64,
    pub commutes: bool,
    pub cyclic: bool,
    pub superpotential_zero: bool,
    pub gradient_zero: bool,
    /// the framing vector never enters the superpotential, so its gradient
    /// vanishes identically
    pub gradient_v_zero: bool,
    pub torus_checks: Vec<TorusCheckReport>,
    pub all_ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoryReport {
    pub splitting_worked_ok: bool,
    pub splitting_random_cases: u64,
    pub splitting_random_ok: bool,
    pub critical_worked_ok: bool,
    pub trivial_weight_reports_unequal: bool,
    pub critical_random_cases: u64,
    pub critical_random_ok: bool,
    pub pullback_ok: bool,
    pub all_ok: bool,
}

/// Field-wise exact comparison of two reports with `timings` removed.
/// Returns the offending keys on mismatch.
pub fn compare_golden(report: &Value, golden: &Value) -> Result<(), Vec<String>> {
    let strip = |v: &Value| -> BTreeMap<String, Value> {
        match v {
            Value::Object(map) => map
                .iter()
                .filter(|(k, _)| k.as_str() != "timings")
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            _ => BTreeMap::new(),
        }
    };
    let a = strip(report);
    let b = strip(golden);
    let mut bad: Vec<String> = Vec::new();
    for (k, va) in &a {
        match b.get(k) {
            Some(vb) if va == vb => {}
            _ => bad.push(k.clone()),
        }
    }
    for k in b.keys() {
        if !a.contains_key(k) {
            bad.push(k.clone());
        }
    }
    bad.sort();
    bad.dedup();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}
