//! Brute-force trace membership straight from the product description
//! `tr(ω) = (fR)^G · (R :_{Q(R)} fR)^G` with `f = x_1 ⋯ x_d`.
//!
//! An invariant monomial `x^m` lies in the trace iff `m = u + v` where
//! `x^u` is an invariant multiple of `f` (all `u_i >= 1`) and `x^v` is an
//! invariant Laurent monomial with `v_i >= -1`. The search runs over the
//! whole box of candidate `v`. Nothing here is shared with the criteria
//! module; the point is to check it.

use crate::criteria::{CriteriaError, ExponentVector};
use crate::singularity::CyclicAction;

fn is_invariant(action: &CyclicAction, exps: &[i64]) -> bool {
    let n = action.order() as i64;
    let total: i64 = exps.iter().zip(action.weights()).map(|(&e, &w)| e * w as i64).sum();
    total.rem_euclid(n) == 0
}

/// Calls `visit` on every vector in the box `lo[i] <= x[i] <= hi[i]`,
/// stopping early when it returns `true`.
fn any_in_box(lo: &[i64], hi: &[i64], mut visit: impl FnMut(&[i64]) -> bool) -> bool {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return false;
    }
    let mut x = lo.to_vec();
    loop {
        if visit(&x) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == x.len() {
                return false;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// Whether `m` splits as (multiple of f) + (element of the colon ideal).
/// Accepts `m = 0`, which asks whether the unit lies in the trace.
fn splits(action: &CyclicAction, m: &[i64]) -> bool {
    let lo = vec![-1; m.len()];
    let hi: Vec<i64> = m.iter().map(|&e| e - 1).collect();
    any_in_box(&lo, &hi, |v| {
        let u: Vec<i64> = m.iter().zip(v).map(|(&a, &b)| a - b).collect();
        u.iter().all(|&e| e >= 1) && is_invariant(action, &u) && is_invariant(action, v)
    })
}

pub fn oracle_trace_contains(action: &CyclicAction, m: &ExponentVector) -> Result<bool, CriteriaError> {
    if m.len() != action.dim() {
        return Err(CriteriaError::LengthMismatch { expected: action.dim(), found: m.len() });
    }
    if let Some((index, &value)) = m.entries().iter().enumerate().find(|(_, &e)| e < 0) {
        return Err(CriteriaError::BadExponent { index, value });
    }
    if m.entries().iter().all(|&e| e == 0) {
        return Err(CriteriaError::ZeroMonomial);
    }
    if !is_invariant(action, m.entries()) {
        let n = action.order() as i64;
        let residue: i64 = m.entries().iter().zip(action.weights()).map(|(&e, &w)| e * w as i64).sum();
        return Err(CriteriaError::NotInvariant { residue: residue.rem_euclid(n) as u32 });
    }
    Ok(splits(action, m.entries()))
}

/// All invariant exponent vectors with total degree at most `degree_bound`,
/// ordered by degree and then lexicographically.
pub fn semigroup_members(action: &CyclicAction, degree_bound: u32) -> Vec<ExponentVector> {
    let d = action.dim();
    let bound = degree_bound as i64;
    let mut out = Vec::new();
    any_in_box(&vec![0; d], &vec![bound; d], |e| {
        if e.iter().sum::<i64>() <= bound && is_invariant(action, e) {
            out.push(ExponentVector(e.to_vec()));
        }
        false
    });
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    out
}

/// Invariant monomials `m != 0` with every entry at most `max_entry` that
/// are not in the trace, in the same order as [`semigroup_members`].
pub fn oracle_non_members(action: &CyclicAction, max_entry: u32) -> Vec<ExponentVector> {
    let d = action.dim();
    let mut out = Vec::new();
    any_in_box(&vec![0; d], &vec![max_entry as i64; d], |e| {
        if e.iter().any(|&x| x != 0) && is_invariant(action, e) && !splits(action, e) {
            out.push(ExponentVector(e.to_vec()));
        }
        false
    });
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    out
}

/// A lower bound for the residue from the monomials of degree at most the
/// bound. Never claims to be exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleResidue {
    pub count: u64,
    pub truncated: bool,
}

pub fn oracle_residue(action: &CyclicAction, degree_bound: u32) -> OracleResidue {
    let d = action.dim();
    let zero = vec![0; d];
    if splits(action, &zero) {
        // the unit is in the trace, so the trace is everything
        return OracleResidue { count: 0, truncated: true };
    }
    let bound = degree_bound as i64;
    let mut count = 1;
    any_in_box(&zero, &vec![bound; d], |e| {
        let deg: i64 = e.iter().sum();
        if deg > 0 && deg <= bound && is_invariant(action, e) && !splits(action, e) {
            count += 1;
        }
        false
    });
    OracleResidue { count, truncated: true }
}
