//! Closed-form families with a known verdict. These serve as test oracles
//! for [`classify_action`](super::classify_action), never as a shortcut.

use num_integer::Integer;

use super::Verdict;
use crate::singularity::{units, CyclicAction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `d = 2`.
    TwoDimensional,
    /// `n <= 3`.
    OrderAtMostThree,
    /// `t ≅ (1, ..., 1)`.
    Veronese,
    /// `t ≅ (1, ..., 1, t_d)` with `t_d ≡ 2 - d (mod n)`, `gcd(d - 2, n) = 1`,
    /// `d >= 3` and `n >= 3`.
    ShiftedLastWeight,
    /// `t ≅ (1, n - 1, n - 2)` with `n >= 4`.
    ReflectedTriple,
    /// `t ≅ (w, ..., w, m + 1, m + 1)` with `m = gcd(w, n) > 2` and
    /// `gcd(m + 1, n) = 1`.
    SharedFactor,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::TwoDimensional => "two-dimensional",
            Family::OrderAtMostThree => "order-at-most-three",
            Family::Veronese => "veronese",
            Family::ShiftedLastWeight => "shifted-last-weight",
            Family::ReflectedTriple => "reflected-triple",
            Family::SharedFactor => "shared-factor",
        }
    }

    pub fn expectation(self) -> Expectation {
        match self {
            Family::TwoDimensional | Family::OrderAtMostThree | Family::Veronese => Expectation::NearlyGorenstein,
            Family::ShiftedLastWeight => Expectation::NearlyGorensteinNotGorenstein,
            Family::ReflectedTriple | Family::SharedFactor => Expectation::NotNearlyGorenstein,
        }
    }
}

/// A predicted verdict. `NearlyGorenstein` admits Gorenstein rings too.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    NearlyGorenstein,
    NearlyGorensteinNotGorenstein,
    NotNearlyGorenstein,
}

impl Expectation {
    pub fn admits(self, verdict: Verdict) -> bool {
        match self {
            Expectation::NearlyGorenstein => verdict.is_nearly_gorenstein(),
            Expectation::NearlyGorensteinNotGorenstein => verdict == Verdict::NearlyGorensteinNotGorenstein,
            Expectation::NotNearlyGorenstein => verdict == Verdict::NotNearlyGorenstein,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Expectation::NearlyGorenstein => "G-or-NG",
            Expectation::NearlyGorensteinNotGorenstein => "NG",
            Expectation::NotNearlyGorenstein => "notNG",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyPrediction {
    pub family: Family,
    pub expected: Expectation,
}

/// Sorted weight vectors `u·t mod n` for every unit `u`.
fn sorted_rescalings(action: &CyclicAction) -> impl Iterator<Item = Vec<u32>> + '_ {
    let n = action.order() as u64;
    units(action.order()).map(move |u| {
        let mut v: Vec<u32> = action.weights().iter().map(|&w| ((w as u64 * u as u64) % n) as u32).collect();
        v.sort_unstable();
        v
    })
}

fn is_veronese(action: &CyclicAction) -> bool {
    sorted_rescalings(action).any(|v| v.iter().all(|&w| w == 1))
}

fn is_shifted_last_weight(action: &CyclicAction) -> bool {
    let (n, d) = (action.order(), action.dim());
    if d < 3 || n < 3 || ((d - 2) as u32).gcd(&n) != 1 {
        return false;
    }
    let last = ((2 - d as i64).rem_euclid(n as i64)) as u32;
    let mut pattern = vec![1; d - 1];
    pattern.push(last);
    pattern.sort_unstable();
    sorted_rescalings(action).any(|v| v == pattern)
}

fn is_reflected_triple(action: &CyclicAction) -> bool {
    let n = action.order();
    if action.dim() != 3 || n < 4 {
        return false;
    }
    let mut pattern = vec![1, n - 1, n - 2];
    pattern.sort_unstable();
    sorted_rescalings(action).any(|v| v == pattern)
}

fn is_shared_factor(action: &CyclicAction) -> bool {
    let (n, d) = (action.order(), action.dim());
    if d < 3 {
        return false;
    }
    let fits = |v: &[u32], w: u32, pair: u32| {
        v.iter().filter(|&&x| x == pair).count() == 2 && v.iter().filter(|&&x| x == w).count() == d - 2
    };
    sorted_rescalings(action).any(|v| {
        v.iter().any(|&w| {
            let m = w.gcd(&n);
            m > 2 && (m + 1).gcd(&n) == 1 && w != (m + 1) % n && fits(&v, w, (m + 1) % n)
        })
    })
}

type MemberTest = fn(&CyclicAction) -> bool;

/// Every closed-form family the action belongs to, in declaration order of
/// [`Family`]. Family membership is checked up to isomorphism.
pub fn family_predictions(action: &CyclicAction) -> Vec<FamilyPrediction> {
    let checks: [(Family, MemberTest); 6] = [
        (Family::TwoDimensional, |a| a.dim() == 2),
        (Family::OrderAtMostThree, |a| a.order() <= 3),
        (Family::Veronese, is_veronese),
        (Family::ShiftedLastWeight, is_shifted_last_weight),
        (Family::ReflectedTriple, is_reflected_triple),
        (Family::SharedFactor, is_shared_factor),
    ];
    checks
        .into_iter()
        .filter(|(_, check)| check(action))
        .map(|(family, _)| FamilyPrediction { family, expected: family.expectation() })
        .collect()
}

pub fn family_predict(action: &CyclicAction) -> Option<FamilyPrediction> {
    family_predictions(action).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(n: i64, t: &[i64]) -> CyclicAction {
        CyclicAction::new(n, t).unwrap()
    }

    fn family(n: i64, t: &[i64]) -> Option<Family> {
        family_predict(&act(n, t)).map(|p| p.family)
    }

    #[test]
    fn shifted_last_weight_hypotheses() {
        assert_eq!(family(9, &[1, 1, 1, 1, 5]), None);
        assert_eq!(family(7, &[1, 1, 1, 4]), None);
        let p = family_predict(&act(7, &[1, 1, 1, 5])).unwrap();
        assert_eq!(p.family, Family::ShiftedLastWeight);
        assert_eq!(p.expected, Expectation::NearlyGorensteinNotGorenstein);
    }

    #[test]
    fn veronese() {
        let p = family_predict(&act(12, &[1, 1, 1])).unwrap();
        assert_eq!(p.family, Family::Veronese);
        assert_eq!(p.expected, Expectation::NearlyGorenstein);
        // 1/5(2,2,2) is 1/5(1,1,1) after rescaling by 3
        assert_eq!(family(5, &[2, 2, 2]), Some(Family::Veronese));
    }

    #[test]
    fn negative_families() {
        assert_eq!(family(8, &[4, 5, 5]), Some(Family::SharedFactor));
        assert_eq!(family(8, &[1, 1, 4]), Some(Family::SharedFactor));
        assert_eq!(family(4, &[1, 2, 3]), Some(Family::ReflectedTriple));
        assert_eq!(family(9, &[2, 7, 5]), Some(Family::ReflectedTriple));
    }

    #[test]
    fn small_families() {
        assert_eq!(family(11, &[3, 5]), Some(Family::TwoDimensional));
        assert_eq!(family(3, &[1, 2, 2, 1]), Some(Family::OrderAtMostThree));
        let all = family_predictions(&act(3, &[1, 1]));
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn expectation_admits() {
        assert!(Expectation::NearlyGorenstein.admits(Verdict::Gorenstein));
        assert!(!Expectation::NearlyGorensteinNotGorenstein.admits(Verdict::Gorenstein));
        assert!(Expectation::NotNearlyGorenstein.admits(Verdict::NotNearlyGorenstein));
    }
}
