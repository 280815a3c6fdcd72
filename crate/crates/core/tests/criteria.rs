mod common;

use common::{act, action_strategy, all_actions_up_to, invariant_monomials, is_invariant};
use cqs::criteria::reachable_residues;
use cqs::oracle::oracle_trace_contains;
use cqs::{classify, classify_action, is_gorenstein, is_nearly_gorenstein, remark_prefilter, residue};
use cqs::{trace_contains_monomial, ExponentVector, ResidueValue, Verdict};
use itertools::Itertools;
use proptest::prelude::*;

fn brute_reachable(weights: &[u32], bounds: &[u64], n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = bounds
        .iter()
        .map(|&b| 1..=b)
        .multi_cartesian_product()
        .map(|bs| (bs.iter().zip(weights).map(|(&b, &w)| b * w as u64).sum::<u64>() % n as u64) as u32)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `m` splits as an invariant multiple of `x_1 ⋯ x_d` plus an invariant
/// Laurent exponent bounded below by `-1`.
fn naive_contains(a: &cqs::CyclicAction, m: &[i64]) -> bool {
    let ranges: Vec<std::ops::RangeInclusive<i64>> = m.iter().map(|&e| -1..=e - 1).collect();
    ranges.into_iter().multi_cartesian_product().any(|v| {
        let u: Vec<i64> = m.iter().zip(&v).map(|(x, y)| x - y).collect();
        is_invariant(a, &v) && is_invariant(a, &u)
    })
}

#[test]
fn reachable_matches_brute_force_exhaustively() {
    for n in 2..=9u32 {
        for weights in (0..2).map(|_| 0..n).multi_cartesian_product() {
            for bounds in (0..2).map(|_| 1..=(n as u64 + 2)).multi_cartesian_product() {
                let got = reachable_residues(&weights, &bounds, n).unwrap().to_vec();
                assert_eq!(got, brute_reachable(&weights, &bounds, n), "{weights:?} {bounds:?} {n}");
            }
        }
    }
}

#[test]
fn naive_and_library_membership_agree() {
    for a in all_actions_up_to(6, 3) {
        for m in invariant_monomials(&a, a.order() as i64) {
            let fast = trace_contains_monomial(&a, &ExponentVector(m.clone())).unwrap();
            assert_eq!(fast, naive_contains(&a, &m), "{a} {m:?}");
        }
    }
}

#[test]
fn gorenstein_matches_weight_sum() {
    for a in all_actions_up_to(12, 4) {
        assert_eq!(is_gorenstein(&a), a.weight_sum() % a.order() as u64 == 0, "{a}");
    }
}

#[test]
fn verdict_hierarchy() {
    for a in all_actions_up_to(9, 4) {
        let c = classify_action(&a);
        if is_gorenstein(&a) {
            assert_eq!(c.verdict, Verdict::Gorenstein);
            assert!(is_nearly_gorenstein(&a).0, "{a}");
        }
        assert_eq!(c.witness.is_some(), c.verdict == Verdict::NotNearlyGorenstein, "{a}");
        if remark_prefilter(&a).is_some() {
            assert_eq!(c.verdict, Verdict::NotNearlyGorenstein, "{a}");
            assert_eq!(residue(&a).value, ResidueValue::Infinite, "{a}");
        }
    }
}

#[test]
fn witness_is_a_genuine_failure() {
    for a in all_actions_up_to(9, 4) {
        if let (false, Some(w)) = is_nearly_gorenstein(&a) {
            let mut m = vec![0i64; a.dim()];
            for (&j, &e) in w.support.iter().zip(&w.exponents) {
                m[j] = e as i64;
            }
            assert!(is_invariant(&a, &m), "{a}");
            assert!(m.iter().sum::<i64>() <= a.order() as i64);
            assert!(!oracle_trace_contains(&a, &ExponentVector(m)).unwrap(), "{a}");
        }
    }
}

#[test]
fn zero_weight_classification() {
    assert_eq!(classify(4, &[1, 1, 2, 0]).unwrap().verdict, Verdict::Gorenstein);
    assert_eq!(classify(5, &[1, 2, 4, 5]).unwrap().verdict, Verdict::NotNearlyGorenstein);
    // NG reduced ring, but the extension is not NG
    assert_eq!(classify(4, &[1, 1, 1]).unwrap().verdict, Verdict::NearlyGorensteinNotGorenstein);
    assert_eq!(classify(4, &[1, 1, 1, 0]).unwrap().verdict, Verdict::NotNearlyGorenstein);
    assert!(classify(4, &[1, 2, 2, 0]).is_err());
}

#[test]
fn classify_examples() {
    assert_eq!(classify_action(&act(6, &[1, 2, 3])).verdict, Verdict::Gorenstein);
    assert_eq!(classify_action(&act(4, &[1, 2, 3])).verdict, Verdict::NotNearlyGorenstein);
    assert_eq!(classify_action(&act(8, &[1, 1, 4])).verdict, Verdict::NotNearlyGorenstein);
    assert_eq!(classify_action(&act(5, &[1, 1, 1])).verdict, Verdict::NearlyGorensteinNotGorenstein);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reachable_random(n in 2u32..40, raw in prop::collection::vec((0u32..40, 1u64..12), 1..5)) {
        let weights: Vec<u32> = raw.iter().map(|&(w, _)| w % n).collect();
        let bounds: Vec<u64> = raw.iter().map(|&(_, b)| b).collect();
        prop_assume!(bounds.iter().product::<u64>() <= 10_000);
        prop_assert_eq!(reachable_residues(&weights, &bounds, n).unwrap().to_vec(), brute_reachable(&weights, &bounds, n));
    }

    #[test]
    fn membership_is_monotone(a in action_strategy(12, 4), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let monomials = invariant_monomials(&a, a.order() as i64);
        let m = i.get(&monomials);
        let k = j.get(&monomials);
        let bigger: Vec<i64> = m.iter().zip(k).map(|(x, y)| x + y).collect();
        if trace_contains_monomial(&a, &ExponentVector(m.clone())).unwrap() {
            prop_assert!(trace_contains_monomial(&a, &ExponentVector(bigger)).unwrap());
        }
    }

    #[test]
    fn membership_matches_oracle(a in action_strategy(14, 4), i in any::<prop::sample::Index>()) {
        let monomials = invariant_monomials(&a, 2 * a.order() as i64);
        let m = ExponentVector(i.get(&monomials).clone());
        prop_assert_eq!(trace_contains_monomial(&a, &m).unwrap(), oracle_trace_contains(&a, &m).unwrap());
    }
}
