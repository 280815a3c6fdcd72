//! Cyclic group actions `1/n(t_1, ..., t_d)` and their normal forms.
//!
//! A [`CyclicAction`] stores the order `n` of the group and the weights of
//! the diagonal generator `diag(λ^{t_1}, ..., λ^{t_d})`, each reduced into
//! `1..n`. Construction checks that the group is small (contains no
//! pseudo-reflections), which for a diagonal cyclic group amounts to
//! `gcd(t_{i_1}, ..., t_{i_{d-1}}, n) = 1` for every `(d-1)`-subset of
//! indices.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("group order must be at least 2, got {0}")]
    BadOrder(i64),
    #[error("weight list is empty")]
    EmptyWeights,
    #[error("weight t{} = {value} is divisible by n = {n}; reduce zero weights first", .index + 1)]
    ZeroWeight { n: u32, index: usize, value: i64 },
    #[error("every weight is divisible by n = {n}")]
    AllZero { n: u32 },
    #[error("action is not small: gcd of weights {} with n is {gcd}", display_subset(.subset))]
    NotSmall { subset: Vec<usize>, gcd: u32 },
}

fn display_subset(subset: &[usize]) -> String {
    let inner: Vec<String> = subset.iter().map(|i| format!("t{}", i + 1)).collect();
    format!("{{{}}}", inner.join(","))
}

/// The action of the cyclic group of order `n` generated by
/// `diag(λ^{t_1}, ..., λ^{t_d})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicAction {
    n: u32,
    weights: Vec<u32>,
}

impl CyclicAction {
    /// Builds an action from raw integer weights, reducing each modulo `n`.
    ///
    /// Weights keep their input order. Weights divisible by `n` are rejected;
    /// those belong to [`reduce_zero_weights`].
    pub fn new(n: i64, raw_weights: &[i64]) -> Result<Self, ActionError> {
        let n = check_order(n)?;
        if raw_weights.is_empty() {
            return Err(ActionError::EmptyWeights);
        }
        let mut weights = Vec::with_capacity(raw_weights.len());
        for (index, &value) in raw_weights.iter().enumerate() {
            let w = value.rem_euclid(n as i64) as u32;
            if w == 0 {
                return Err(ActionError::ZeroWeight { n, index, value });
            }
            weights.push(w);
        }
        check_small(n, &weights)?;
        Ok(Self { n, weights })
    }

    /// Builds an action from weights already known to lie in `1..n`.
    pub(crate) fn from_reduced(n: u32, weights: Vec<u32>) -> Self {
        debug_assert!(weights.iter().all(|&w| w >= 1 && w < n));
        Self { n, weights }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum()
    }

    /// Residue of `Σ e_i t_i` modulo `n` for an exponent vector (entries may
    /// be negative).
    pub fn degree_class(&self, exponents: &[i64]) -> u32 {
        debug_assert_eq!(exponents.len(), self.dim());
        let n = self.n as i64;
        exponents
            .iter()
            .zip(&self.weights)
            .fold(0i64, |acc, (&e, &w)| (acc + e.rem_euclid(n) * w as i64) % n) as u32
    }

    /// Multiplies every weight by `unit` modulo `n`, keeping coordinate order.
    pub fn scaled(&self, unit: u32) -> Self {
        debug_assert_eq!(unit.gcd(&self.n), 1);
        let n = self.n as u64;
        let weights = self.weights.iter().map(|&w| ((w as u64 * unit as u64) % n) as u32).collect();
        Self { n: self.n, weights }
    }
}

impl fmt::Display for CyclicAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(", self.n)?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

fn check_order(n: i64) -> Result<u32, ActionError> {
    if n < 2 || n > u32::MAX as i64 {
        return Err(ActionError::BadOrder(n));
    }
    Ok(n as u32)
}

/// Checks `gcd(t_S, n) = 1` for every subset `S` obtained by dropping one
/// index. A one-dimensional action drops to the empty subset, whose gcd is
/// `n` itself, so it is never small.
fn check_small(n: u32, weights: &[u32]) -> Result<(), ActionError> {
    let d = weights.len();
    // prefix[i] = gcd(n, t_0..t_{i-1}), suffix[i] = gcd(n, t_i..t_{d-1})
    let mut prefix = vec![n; d + 1];
    let mut suffix = vec![n; d + 1];
    for i in 0..d {
        prefix[i + 1] = prefix[i].gcd(&weights[i]);
        suffix[d - 1 - i] = suffix[d - i].gcd(&weights[d - 1 - i]);
    }
    for omit in 0..d {
        let g = prefix[omit].gcd(&suffix[omit + 1]);
        if g != 1 {
            let subset = (0..d).filter(|&i| i != omit).collect();
            return Err(ActionError::NotSmall { subset, gcd: g });
        }
    }
    Ok(())
}

/// Whether the reduced weights `weights` (all in `1..n`) define a small
/// action.
pub fn is_small(n: u32, weights: &[u32]) -> bool {
    check_small(n, weights).is_ok()
}

/// Result of stripping weights divisible by `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// No weight was divisible by `n`.
    AlreadyReduced(CyclicAction),
    /// Some weights were stripped. The original ring is the reduced ring
    /// with power series variables adjoined, so it is nearly Gorenstein
    /// exactly when the reduced ring is Gorenstein.
    ReducedAction {
        action: CyclicAction,
        /// Zero-based positions of the stripped weights in the input.
        stripped: Vec<usize>,
    },
}

impl ReductionOutcome {
    pub fn action(&self) -> &CyclicAction {
        match self {
            Self::AlreadyReduced(a) => a,
            Self::ReducedAction { action, .. } => action,
        }
    }

    pub fn note(&self) -> Option<String> {
        match self {
            Self::AlreadyReduced(_) => None,
            Self::ReducedAction { action, stripped } => Some(format!(
                "stripped {} weight(s) divisible by n; the original ring is nearly Gorenstein \
                 iff {action} is Gorenstein",
                stripped.len()
            )),
        }
    }
}

pub fn reduce_zero_weights(n: i64, raw_weights: &[i64]) -> Result<ReductionOutcome, ActionError> {
    let order = check_order(n)?;
    if raw_weights.is_empty() {
        return Err(ActionError::EmptyWeights);
    }
    let (stripped, kept): (Vec<usize>, Vec<usize>) =
        (0..raw_weights.len()).partition(|&i| raw_weights[i].rem_euclid(n) == 0);
    if kept.is_empty() {
        return Err(ActionError::AllZero { n: order });
    }
    let surviving: Vec<i64> = kept.iter().map(|&i| raw_weights[i]).collect();
    let action = CyclicAction::new(n, &surviving).map_err(|e| match e {
        // report positions relative to the caller's input
        ActionError::NotSmall { subset, gcd } => ActionError::NotSmall {
            subset: subset.into_iter().map(|i| kept[i]).collect(),
            gcd,
        },
        other => other,
    })?;
    Ok(if stripped.is_empty() {
        ReductionOutcome::AlreadyReduced(action)
    } else {
        ReductionOutcome::ReducedAction { action, stripped }
    })
}

/// Units of `Z/n`, ascending.
pub fn units(n: u32) -> impl Iterator<Item = u32> {
    (1..n).filter(move |u| u.gcd(&n) == 1)
}

/// The normal form of an action up to isomorphism: the lexicographically
/// smallest sorted weight vector over all unit rescalings `u·t mod n`.
pub fn canonical_form(action: &CyclicAction) -> CyclicAction {
    let n = action.order();
    let mut best: Option<Vec<u32>> = None;
    let mut scratch = Vec::with_capacity(action.dim());
    for u in units(n) {
        scratch.clear();
        scratch.extend(action.weights().iter().map(|&w| ((w as u64 * u as u64) % n as u64) as u32));
        scratch.sort_unstable();
        if best.as_ref().is_none_or(|b| scratch < *b) {
            best = Some(scratch.clone());
        }
    }
    CyclicAction::from_reduced(n, best.expect("1 is always a unit"))
}

pub fn iso_equivalent(a: &CyclicAction, b: &CyclicAction) -> bool {
    a.order() == b.order() && a.dim() == b.dim() && canonical_form(a) == canonical_form(b)
}
