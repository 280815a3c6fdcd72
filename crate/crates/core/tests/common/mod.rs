#![allow(dead_code)]

use cqs::CyclicAction;
use itertools::Itertools;
use proptest::prelude::*;

/// Every valid action of order `n` in dimension `d`, in every coordinate
/// order.
pub fn all_actions(n: u32, d: usize) -> Vec<CyclicAction> {
    (0..d)
        .map(|_| 1..n as i64)
        .multi_cartesian_product()
        .filter_map(|t| CyclicAction::new(n as i64, &t).ok())
        .collect()
}

pub fn all_actions_up_to(n_max: u32, d_max: usize) -> Vec<CyclicAction> {
    (2..=n_max).flat_map(|n| (2..=d_max).flat_map(move |d| all_actions(n, d))).collect()
}

pub fn act(n: i64, t: &[i64]) -> CyclicAction {
    CyclicAction::new(n, t).unwrap()
}

pub fn action_strategy(n_max: u32, d_max: usize) -> impl Strategy<Value = CyclicAction> {
    (2..=n_max, 2..=d_max)
        .prop_flat_map(|(n, d)| (Just(n), prop::collection::vec(1..n as i64, d)))
        .prop_filter_map("not small", |(n, t)| CyclicAction::new(n as i64, &t).ok())
}

/// Gcd by repeated subtraction-free Euclid, kept separate from the library.
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_invariant(a: &CyclicAction, m: &[i64]) -> bool {
    let s: i64 = m.iter().zip(a.weights()).map(|(&e, &w)| e * w as i64).sum();
    s.rem_euclid(a.order() as i64) == 0
}

/// Invariant nonzero exponent vectors with entries at most `max_entry`.
pub fn invariant_monomials(a: &CyclicAction, max_entry: i64) -> Vec<Vec<i64>> {
    (0..a.dim())
        .map(|_| 0..=max_entry)
        .multi_cartesian_product()
        .filter(|m| m.iter().any(|&e| e != 0) && is_invariant(a, m))
        .collect()
}
