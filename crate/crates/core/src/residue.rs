//! The residue `ℓ(R^G / tr(ω))`, exactly.
//!
//! Monomials of full support always lie in the trace. For a monomial with
//! proper support `J`, membership depends only on the caps
//! `c_j = min(a_j, n - 1)`: the bounds `a_j + 1` saturate at `n`. So each
//! support contributes finitely many cap vectors. A failing cap vector
//! without saturated coordinates is a single monomial (counted when it is
//! invariant). A failing cap vector with saturated coordinates stands for
//! every `a` with `a_j >= n - 1` on the saturated set, and if one of them is
//! invariant then adding `n` to a saturated exponent produces infinitely
//! many more, so the residue is infinite.

use std::fmt;

use num_integer::Integer;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::criteria::{complement_target, is_gorenstein, ExponentVector, ResidueSet};
use crate::singularity::CyclicAction;
use crate::subsets::proper_subsets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ResidueValue {
    Finite(u64),
    Infinite,
}

impl ResidueValue {
    pub fn is_finite(self) -> bool {
        matches!(self, ResidueValue::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ResidueValue::Finite(v) => Some(v),
            ResidueValue::Infinite => None,
        }
    }
}

impl fmt::Display for ResidueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueValue::Finite(v) => write!(f, "{v}"),
            ResidueValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Serialized as an integer, or as the string `"inf"`.
impl Serialize for ResidueValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ResidueValue::Finite(v) => serializer.serialize_u64(*v),
            ResidueValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ResidueValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = ResidueValue;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ResidueValue, E> {
                Ok(ResidueValue::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ResidueValue, E> {
                u64::try_from(v).map(ResidueValue::Finite).map_err(|_| E::custom("negative residue"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ResidueValue, E> {
                match v {
                    "inf" => Ok(ResidueValue::Infinite),
                    other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
                }
            }
        }
        deserializer.deserialize_any(Visitor)
    }
}

/// A failing cap vector whose fiber is infinite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityWitness {
    pub support: Vec<usize>,
    pub caps: Vec<u32>,
    /// First coordinate (zero-based, in the ambient numbering) whose cap is
    /// saturated.
    pub saturated: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueReport {
    pub value: ResidueValue,
    /// Invariant monomials of the maximal ideal outside the trace, ordered by
    /// support size, support, then exponents. Empty when the residue is
    /// infinite.
    pub failing: Vec<ExponentVector>,
    pub infinity_witness: Option<InfinityWitness>,
}

enum Outcome {
    Continue,
    Infinite(InfinityWitness),
}

struct CapSearch<'a> {
    action: &'a CyclicAction,
    support: &'a [usize],
    weights: Vec<u32>,
    target: u32,
    caps: Vec<u32>,
    failing: Vec<ExponentVector>,
}

impl CapSearch<'_> {
    fn run(&mut self, depth: usize, prefix: &ResidueSet) -> Outcome {
        let n = self.action.order();
        let w = self.weights[depth];
        let last = depth + 1 == self.weights.len();
        // reach = ∪_{b=1..c+1} (prefix + b·w), grown one shift per cap
        let mut shifted = prefix.shifted(w);
        let mut reach = shifted.clone();
        for cap in 1..n {
            shifted = shifted.shifted(w);
            reach.union_with(&shifted);
            self.caps.push(cap);
            let outcome = if last {
                if reach.contains(self.target) {
                    Outcome::Continue
                } else {
                    self.failing_caps()
                }
            } else {
                self.run(depth + 1, &reach)
            };
            self.caps.pop();
            if let Outcome::Infinite(_) = outcome {
                return outcome;
            }
        }
        Outcome::Continue
    }

    fn failing_caps(&mut self) -> Outcome {
        let n = self.action.order();
        let saturated: Vec<usize> = (0..self.caps.len()).filter(|&i| self.caps[i] == n - 1).collect();
        let fixed_class = (0..self.caps.len())
            .filter(|&i| self.caps[i] != n - 1)
            .map(|i| self.caps[i] as u64 * self.weights[i] as u64)
            .sum::<u64>()
            % n as u64;
        if saturated.is_empty() {
            if fixed_class == 0 {
                let mut e = vec![0i64; self.action.dim()];
                for (&j, &c) in self.support.iter().zip(&self.caps) {
                    e[j] = c as i64;
                }
                self.failing.push(ExponentVector(e));
            }
            return Outcome::Continue;
        }
        let g = saturated.iter().fold(n, |g, &i| g.gcd(&self.weights[i])) as u64;
        let needed = (n as u64 - fixed_class) % n as u64;
        if needed.is_multiple_of(g) {
            Outcome::Infinite(InfinityWitness {
                support: self.support.to_vec(),
                caps: self.caps.clone(),
                saturated: self.support[saturated[0]],
            })
        } else {
            Outcome::Continue
        }
    }
}

pub fn residue(action: &CyclicAction) -> ResidueReport {
    if is_gorenstein(action) {
        return ResidueReport { value: ResidueValue::Finite(0), failing: Vec::new(), infinity_witness: None };
    }
    let n = action.order();
    let mut failing = Vec::new();
    for support in proper_subsets(action.dim()) {
        let mut search = CapSearch {
            action,
            weights: support.iter().map(|&j| action.weights()[j]).collect(),
            target: complement_target(action, &support),
            support: &support,
            caps: Vec::with_capacity(support.len()),
            failing: Vec::new(),
        };
        if let Outcome::Infinite(witness) = search.run(0, &ResidueSet::singleton(n, 0)) {
            return ResidueReport {
                value: ResidueValue::Infinite,
                failing: Vec::new(),
                infinity_witness: Some(witness),
            };
        }
        failing.append(&mut search.failing);
    }
    ResidueReport {
        value: ResidueValue::Finite(1 + failing.len() as u64),
        failing,
        infinity_witness: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("hypothesis violated: need gcd(n, m) = 1, n >= 3 and 1 <= m < ceil(n/2), got n = {n}, m = {m}")]
    HypothesisViolated { n: u64, m: u64 },
}

/// The residue of `1/n(1, m, n - 1)` for coprime `n >= 3` and
/// `1 <= m < ceil(n/2)`, which is `m`.
pub fn residue_family_expected(n: u64, m: u64) -> Result<u64, ResidueError> {
    if n < 3 || m < 1 || m >= n.div_ceil(2) || n.gcd(&m) != 1 {
        return Err(ResidueError::HypothesisViolated { n, m });
    }
    Ok(m)
}
