//! Cross-checks between the criteria and the brute-force oracle, and sweeps
//! of the closed-form families. The command line exposes both.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::families::{family_predictions, Family};
use crate::criteria::{classify, classify_action, trace_contains_monomial, Classification, ExponentVector, Verdict};
use crate::oracle::{oracle_residue, oracle_trace_contains, semigroup_members};
use crate::residue::{residue, ResidueReport, ResidueValue};
use crate::singularity::{reduce_zero_weights, ActionError, CyclicAction, ReductionOutcome};
use crate::tables::enumerate_classes;

/// Everything the `classify` command reports for one raw input.
#[derive(Debug, Clone)]
pub struct InputReport {
    pub n: u32,
    /// Input weights reduced modulo `n`, zeros included.
    pub weights: Vec<u32>,
    /// The action the criteria ran on: the input itself, or the reduced
    /// action when zero weights were stripped.
    pub action: CyclicAction,
    pub stripped: bool,
    pub classification: Classification,
    pub residue: Option<ResidueReport>,
}

impl InputReport {
    /// The residue of the input ring. With stripped weights the ring is a
    /// power series ring over the reduced one, so the residue is 0 when the
    /// reduced ring is Gorenstein and infinite otherwise.
    pub fn residue_value(&self) -> Option<ResidueValue> {
        let report = self.residue.as_ref()?;
        Some(match (self.stripped, report.value) {
            (false, v) => v,
            (true, ResidueValue::Finite(0)) => ResidueValue::Finite(0),
            (true, _) => ResidueValue::Infinite,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        crate::tables::record_json(self.n, &self.weights, self.classification.verdict, self.residue_value())
    }
}

pub fn analyze_input(n: i64, raw_weights: &[i64], with_residue: bool) -> Result<InputReport, ActionError> {
    let classification = classify(n, raw_weights)?;
    let outcome = reduce_zero_weights(n, raw_weights)?;
    let stripped = matches!(outcome, ReductionOutcome::ReducedAction { .. });
    let action = outcome.action().clone();
    let weights = raw_weights.iter().map(|&w| w.rem_euclid(n) as u32).collect();
    let residue = with_residue.then(|| residue(&action));
    Ok(InputReport { n: n as u32, weights, action, stripped, classification, residue })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub degree_bound: u32,
    pub monomials_checked: usize,
    /// Monomials on which the two membership tests disagree.
    pub disagreements: Vec<ExponentVector>,
    /// Human-readable descriptions of verdict or residue conflicts.
    pub conflicts: Vec<String>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty() && self.conflicts.is_empty()
    }
}

/// Compares trace membership with the oracle on every nonzero invariant
/// monomial of degree at most `degree_bound`, and checks the verdict and
/// residue against the oracle's truncated residue count.
pub fn cross_check(action: &CyclicAction, degree_bound: u32) -> CrossCheck {
    let members: Vec<ExponentVector> =
        semigroup_members(action, degree_bound).into_iter().filter(|m| m.degree() > 0).collect();
    let disagreements: Vec<ExponentVector> = members
        .par_iter()
        .filter(|m| {
            let fast = trace_contains_monomial(action, m).expect("semigroup members are valid monomials");
            let slow = oracle_trace_contains(action, m).expect("semigroup members are valid monomials");
            fast != slow
        })
        .cloned()
        .collect();

    let mut conflicts = Vec::new();
    let verdict = classify_action(action).verdict;
    let lower = oracle_residue(action, degree_bound).count;
    if (lower == 0) != (verdict == Verdict::Gorenstein) {
        conflicts.push(format!("verdict {} but oracle residue bound {}", verdict.label(), lower));
    }
    if verdict == Verdict::NearlyGorensteinNotGorenstein && lower != 1 {
        conflicts.push(format!("verdict NG but oracle residue bound {lower}"));
    }
    match residue(action).value {
        ResidueValue::Finite(r) if r < lower => {
            conflicts.push(format!("residue {r} below oracle lower bound {lower}"));
        }
        ResidueValue::Finite(r) if (r == 0) != (verdict == Verdict::Gorenstein) || (r <= 1) != verdict.is_nearly_gorenstein() => {
            conflicts.push(format!("residue {r} inconsistent with verdict {}", verdict.label()));
        }
        ResidueValue::Infinite if verdict.is_nearly_gorenstein() => {
            conflicts.push(format!("infinite residue with verdict {}", verdict.label()));
        }
        _ => {}
    }
    CrossCheck { degree_bound, monomials_checked: members.len(), disagreements, conflicts }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMismatch {
    pub action: CyclicAction,
    pub family: &'static str,
    pub expected: &'static str,
    pub verdict: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamilySweep {
    /// Matched classes per family name.
    pub checked: BTreeMap<&'static str, usize>,
    pub mismatches: Vec<FamilyMismatch>,
}

/// Classifies every class with `2 <= n <= n_max`, `2 <= d <= d_max` that
/// belongs to some family and compares with each family's prediction.
pub fn family_sweep(n_max: u32, d_max: usize) -> FamilySweep {
    let classes: Vec<CyclicAction> =
        (2..=n_max).flat_map(|n| (2..=d_max).flat_map(move |d| enumerate_classes(n, d))).collect();
    let results: Vec<(Family, Option<FamilyMismatch>)> = classes
        .par_iter()
        .flat_map_iter(|a| {
            let predictions = family_predictions(a);
            let verdict = if predictions.is_empty() { None } else { Some(classify_action(a).verdict) };
            predictions.into_iter().map(move |p| {
                let v = verdict.expect("classified whenever a family matched");
                let mismatch = (!p.expected.admits(v)).then(|| FamilyMismatch {
                    action: a.clone(),
                    family: p.family.name(),
                    expected: p.expected.label(),
                    verdict: v.label(),
                });
                (p.family, mismatch)
            })
        })
        .collect();
    let mut sweep = FamilySweep::default();
    for (family, mismatch) in results {
        *sweep.checked.entry(family.name()).or_default() += 1;
        sweep.mismatches.extend(mismatch);
    }
    sweep
}
