//! Gorenstein and nearly Gorenstein tests for cyclic quotient singularities.
//!
//! Trace membership of an invariant monomial `x^a` is decided by the
//! support of `a`: full support always lies in the trace, and otherwise
//! `x^a` lies in the trace iff `-Σ_{k∉J} t_k` is reachable as
//! `Σ_{j∈J} b_j t_j` with `1 <= b_j <= a_j + 1`, where `J` is the support.
//! The ring is nearly Gorenstein iff every monomial generator of the
//! maximal ideal (exponent sum at most `n`) passes this test.

pub mod families;
mod reach;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::singularity::{reduce_zero_weights, ActionError, CyclicAction, ReductionOutcome};
use crate::subsets::proper_subsets;

pub use families::{family_predict, family_predictions, Expectation, Family, FamilyPrediction};
pub(crate) use reach::extend_by_weight;
pub use reach::{reachable_residues, ResidueSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("empty input")]
    EmptyInput,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("upper bound at position {index} must be at least 1")]
    ZeroBound { index: usize },
    #[error("monomial is not invariant: Σ a_i t_i ≡ {residue} mod n")]
    NotInvariant { residue: u32 },
    #[error("the unit monomial is not an element of the maximal ideal")]
    ZeroMonomial,
    #[error("exponent {value} at position {index} is out of range")]
    BadExponent { index: usize, value: i64 },
}

/// Exponents of a monomial `x_1^{e_1} ... x_d^{e_d}`. Colon-ideal elements
/// may carry entries equal to `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// `x^2*z` style rendering with variables `x1..xd`.
    pub fn monomial_string(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        if parts.is_empty() {
            "1".to_owned()
        } else {
            parts.join("*")
        }
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

pub fn is_gorenstein(action: &CyclicAction) -> bool {
    action.weight_sum().is_multiple_of(action.order() as u64)
}

/// `-Σ_{k∉J} t_k mod n` for a sorted support `J`.
pub(crate) fn complement_target(action: &CyclicAction, support: &[usize]) -> u32 {
    let n = action.order() as u64;
    let outside: u64 = action
        .weights()
        .iter()
        .enumerate()
        .filter(|(i, _)| support.binary_search(i).is_err())
        .map(|(_, &w)| w as u64)
        .sum();
    ((n - outside % n) % n) as u32
}

fn validate_monomial(action: &CyclicAction, m: &ExponentVector) -> Result<(), CriteriaError> {
    if m.len() != action.dim() {
        return Err(CriteriaError::LengthMismatch { expected: action.dim(), found: m.len() });
    }
    if let Some((index, &value)) = m.entries().iter().enumerate().find(|(_, &e)| e < 0) {
        return Err(CriteriaError::BadExponent { index, value });
    }
    if m.entries().iter().all(|&e| e == 0) {
        return Err(CriteriaError::ZeroMonomial);
    }
    let residue = action.degree_class(m.entries());
    if residue != 0 {
        return Err(CriteriaError::NotInvariant { residue });
    }
    Ok(())
}

/// Decides whether the invariant monomial `x^m` lies in the trace of the
/// canonical module.
pub fn trace_contains_monomial(action: &CyclicAction, m: &ExponentVector) -> Result<bool, CriteriaError> {
    validate_monomial(action, m)?;
    let support = m.support();
    if support.len() == action.dim() {
        return Ok(true);
    }
    let weights: Vec<u32> = support.iter().map(|&j| action.weights()[j]).collect();
    let bounds: Vec<u64> = support.iter().map(|&j| m.entries()[j] as u64 + 1).collect();
    let reachable = reachable_residues(&weights, &bounds, action.order())?;
    Ok(reachable.contains(complement_target(action, &support)))
}

/// A monomial generator `Π_{j∈J} x_j^{a_j}` of the maximal ideal that is not
/// in the trace of the canonical module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NgWitness {
    /// Zero-based indices of the support `J`.
    pub support: Vec<usize>,
    /// The weights `t_j` on the support.
    pub weights: Vec<u32>,
    /// The exponents `a_j` on the support.
    pub exponents: Vec<u32>,
    /// `-Σ_{k∉J} t_k mod n`.
    pub target: u32,
    /// Residues of `Σ b_j t_j` with `1 <= b_j <= a_j + 1`.
    pub reachable: Vec<u32>,
}

impl NgWitness {
    pub fn describe(&self) -> String {
        let join = |v: &[String]| v.join(",");
        let support: Vec<String> = self.support.iter().map(|i| (i + 1).to_string()).collect();
        let weights: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        let exps: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        let reach: Vec<String> = self.reachable.iter().map(u32::to_string).collect();
        format!(
            "J={{{}}} weights=({}) a=({}) target={} reachable={{{}}}",
            join(&support),
            join(&weights),
            join(&exps),
            self.target,
            join(&reach)
        )
    }
}

/// Depth-first search over exponent tuples on one support, in lexicographic
/// order, carrying the reachable set of the current prefix.
struct SupportSearch<'a> {
    n: u32,
    weights: &'a [u32],
    target: u32,
    exps: Vec<u32>,
}

impl SupportSearch<'_> {
    fn run(&mut self, depth: usize, used: u32, class: u32, reach: &ResidueSet) -> Option<ResidueSet> {
        let n = self.n;
        let w = self.weights[depth];
        let last = depth + 1 == self.weights.len();
        let slots_after = (self.weights.len() - depth - 1) as u32;
        for a in 1..=(n - used - slots_after) {
            let class_here = ((class as u64 + a as u64 * w as u64) % n as u64) as u32;
            if last && class_here != 0 {
                continue;
            }
            let next = extend_by_weight(reach, w, a as u64 + 1);
            self.exps.push(a);
            if last {
                if !next.contains(self.target) {
                    return Some(next);
                }
            } else if let Some(found) = self.run(depth + 1, used + a, class_here, &next) {
                return Some(found);
            }
            self.exps.pop();
        }
        None
    }
}

/// Decides whether the ring of invariants is nearly Gorenstein. On failure,
/// returns the first failing generator in the order (support size, support
/// lexicographic, exponents lexicographic).
pub fn is_nearly_gorenstein(action: &CyclicAction) -> (bool, Option<NgWitness>) {
    let n = action.order();
    if is_gorenstein(action) {
        return (true, None);
    }
    for support in proper_subsets(action.dim()) {
        if support.len() as u32 > n {
            break;
        }
        let weights: Vec<u32> = support.iter().map(|&j| action.weights()[j]).collect();
        let target = complement_target(action, &support);
        let mut search = SupportSearch { n, weights: &weights, target, exps: Vec::new() };
        if let Some(reach) = search.run(0, 0, 0, &ResidueSet::singleton(n, 0)) {
            let witness = NgWitness {
                exponents: search.exps,
                weights,
                support,
                target,
                reachable: reach.to_vec(),
            };
            return (false, Some(witness));
        }
    }
    (true, None)
}

/// A subset `J` whose weights share the factor `gcd = gcd(t_J, n) > 1` while
/// the complementary weights do not sum to zero modulo it. Its existence
/// rules out the nearly Gorenstein property; its absence proves nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefilterWitness {
    pub support: Vec<usize>,
    pub gcd: u32,
}

pub fn remark_prefilter(action: &CyclicAction) -> Option<PrefilterWitness> {
    let n = action.order();
    let total = action.weight_sum();
    proper_subsets(action.dim()).into_iter().find_map(|support| {
        let g = support.iter().fold(n, |g, &j| g.gcd(&action.weights()[j]));
        let inside: u64 = support.iter().map(|&j| action.weights()[j] as u64).sum();
        ((g > 1) && !(total - inside).is_multiple_of(g as u64)).then_some(PrefilterWitness { support, gcd: g })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    Gorenstein,
    NearlyGorensteinNotGorenstein,
    NotNearlyGorenstein,
}

impl Verdict {
    /// The short labels `G`, `NG` and `notNG`.
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Gorenstein => "G",
            Verdict::NearlyGorensteinNotGorenstein => "NG",
            Verdict::NotNearlyGorenstein => "notNG",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "G" => Some(Verdict::Gorenstein),
            "NG" => Some(Verdict::NearlyGorensteinNotGorenstein),
            "notNG" => Some(Verdict::NotNearlyGorenstein),
            _ => None,
        }
    }

    pub fn is_nearly_gorenstein(self) -> bool {
        self != Verdict::NotNearlyGorenstein
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Set for `NotNearlyGorenstein` verdicts decided by the generator test.
    /// Verdicts obtained through zero-weight reduction carry no witness.
    pub witness: Option<NgWitness>,
    pub via_reduction: Option<String>,
}

pub fn classify_action(action: &CyclicAction) -> Classification {
    if is_gorenstein(action) {
        return Classification { verdict: Verdict::Gorenstein, witness: None, via_reduction: None };
    }
    let (ng, witness) = is_nearly_gorenstein(action);
    let verdict = if ng { Verdict::NearlyGorensteinNotGorenstein } else { Verdict::NotNearlyGorenstein };
    Classification { verdict, witness, via_reduction: None }
}

/// Classifies `1/n(t)` for raw weights, stripping weights divisible by `n`.
///
/// With stripped weights the ring is a power series ring over the reduced
/// ring, so it is nearly Gorenstein iff it is Gorenstein iff the reduced
/// ring is Gorenstein.
pub fn classify(n: i64, raw_weights: &[i64]) -> Result<Classification, ActionError> {
    let outcome = reduce_zero_weights(n, raw_weights)?;
    Ok(match &outcome {
        ReductionOutcome::AlreadyReduced(action) => classify_action(action),
        ReductionOutcome::ReducedAction { action, .. } => {
            let verdict = if is_gorenstein(action) { Verdict::Gorenstein } else { Verdict::NotNearlyGorenstein };
            Classification { verdict, witness: None, via_reduction: outcome.note() }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(n: i64, t: &[i64]) -> CyclicAction {
        CyclicAction::new(n, t).unwrap()
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    #[test]
    fn gorenstein_examples() {
        assert!(is_gorenstein(&act(4, &[1, 1, 2])));
        assert!(!is_gorenstein(&act(4, &[1, 2, 3])));
        assert!(is_gorenstein(&act(6, &[1, 2, 3])));
    }

    #[test]
    fn trace_membership_examples() {
        let a = act(5, &[1, 2, 4]);
        // full support; (1,1,1) itself is not invariant here
        assert!(trace_contains_monomial(&a, &ev(&[2, 2, 1])).unwrap());
        assert!(!trace_contains_monomial(&a, &ev(&[1, 0, 1])).unwrap());
        assert!(trace_contains_monomial(&a, &ev(&[0, 3, 1])).unwrap());
        // x^5: b ranges over all residues
        assert!(trace_contains_monomial(&a, &ev(&[5, 0, 0])).unwrap());
    }

    #[test]
    fn trace_membership_errors() {
        let a = act(5, &[1, 2, 4]);
        assert_eq!(
            trace_contains_monomial(&a, &ev(&[1, 0, 0])),
            Err(CriteriaError::NotInvariant { residue: 1 })
        );
        assert_eq!(trace_contains_monomial(&a, &ev(&[0, 0, 0])), Err(CriteriaError::ZeroMonomial));
        assert!(matches!(
            trace_contains_monomial(&a, &ev(&[1, 1])),
            Err(CriteriaError::LengthMismatch { .. })
        ));
        assert!(matches!(
            trace_contains_monomial(&a, &ev(&[-1, 0, 4])),
            Err(CriteriaError::BadExponent { index: 0, value: -1 })
        ));
    }

    #[test]
    fn not_ng_witness_for_1_2_3_mod_4() {
        let (ng, witness) = is_nearly_gorenstein(&act(4, &[1, 2, 3]));
        assert!(!ng);
        let w = witness.unwrap();
        assert_eq!(w.support, vec![0, 2]);
        assert_eq!(w.weights, vec![1, 3]);
        assert_eq!(w.exponents, vec![1, 1]);
        assert_eq!(w.target, 2);
        assert_eq!(w.reachable, vec![0, 1, 3]);
        assert_eq!(w.describe(), "J={1,3} weights=(1,3) a=(1,1) target=2 reachable={0,1,3}");
    }

    #[test]
    fn ng_examples() {
        assert_eq!(is_nearly_gorenstein(&act(6, &[1, 1, 2, 4])), (true, None));
        assert_eq!(is_nearly_gorenstein(&act(2, &[1, 1])), (true, None));
    }

    #[test]
    fn witness_satisfies_its_invariants() {
        let a = act(8, &[1, 1, 4]);
        let (_, w) = is_nearly_gorenstein(&a);
        let w = w.unwrap();
        let n = a.order() as u64;
        assert!(w.exponents.iter().map(|&x| x as u64).sum::<u64>() <= n);
        let class: u64 = w.exponents.iter().zip(&w.weights).map(|(&x, &t)| x as u64 * t as u64).sum();
        assert_eq!(class % n, 0);
        assert!(!w.reachable.contains(&w.target));
    }

    #[test]
    fn prefilter_examples() {
        assert_eq!(
            remark_prefilter(&act(8, &[1, 1, 4])),
            Some(PrefilterWitness { support: vec![2], gcd: 4 })
        );
        assert_eq!(remark_prefilter(&act(4, &[1, 2, 3])), None);
        assert_eq!(remark_prefilter(&act(7, &[1, 1, 1, 1])), None);
    }

    #[test]
    fn prefilter_is_not_a_positive_certificate() {
        // 1/5(1,4,3) has no prefilter witness and still fails
        let a = act(5, &[1, 4, 3]);
        assert_eq!(remark_prefilter(&a), None);
        assert!(!is_nearly_gorenstein(&a).0);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(5, &[1, 1, 2]).unwrap().verdict, Verdict::NearlyGorensteinNotGorenstein);
        assert_eq!(classify(5, &[1, 1, 3]).unwrap().verdict, Verdict::Gorenstein);
        let c = classify(6, &[1, 1, 3]).unwrap();
        assert_eq!(c.verdict, Verdict::NotNearlyGorenstein);
        assert!(c.witness.is_some());
    }

    #[test]
    fn classify_through_reduction() {
        // reduced 1/4(1,1) is not Gorenstein
        let c = classify(4, &[1, 1, 4]).unwrap();
        assert_eq!(c.verdict, Verdict::NotNearlyGorenstein);
        assert!(c.witness.is_none());
        assert!(c.via_reduction.is_some());
        // reduced 1/4(1,3) is Gorenstein, so is the original
        let c = classify(4, &[1, 0, 3]).unwrap();
        assert_eq!(c.verdict, Verdict::Gorenstein);
        assert!(c.via_reduction.is_some());
        assert!(matches!(classify(3, &[3, 6]), Err(ActionError::AllZero { .. })));
    }

    #[test]
    fn verdict_labels_round_trip() {
        for v in [Verdict::Gorenstein, Verdict::NearlyGorensteinNotGorenstein, Verdict::NotNearlyGorenstein] {
            assert_eq!(Verdict::from_label(v.label()), Some(v));
        }
        assert_eq!(Verdict::from_label("ng"), None);
    }

    #[test]
    fn monomial_rendering() {
        assert_eq!(ev(&[1, 0, 2]).monomial_string(), "x1*x3^2");
        assert_eq!(ev(&[0, 0]).monomial_string(), "1");
    }
}
