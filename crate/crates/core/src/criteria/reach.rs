//! Bounded modular reachability: which residues `Σ b_j w_j mod n` are
//! attainable with `1 <= b_j <= ub_j`.

use std::fmt;

use super::CriteriaError;

/// A subset of `Z/n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    n: u32,
    words: Vec<u64>,
}

impl ResidueSet {
    pub fn empty(n: u32) -> Self {
        assert!(n >= 1);
        Self { n, words: vec![0; (n as usize).div_ceil(64)] }
    }

    pub fn singleton(n: u32, r: u32) -> Self {
        let mut s = Self::empty(n);
        s.insert(r);
        s
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn insert(&mut self, r: u32) {
        let r = (r % self.n) as usize;
        self.words[r / 64] |= 1 << (r % 64);
    }

    pub fn contains(&self, r: u32) -> bool {
        let r = (r % self.n) as usize;
        self.words[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n as usize
    }

    pub fn union_with(&mut self, other: &ResidueSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `{ s + k mod n : s in self }`.
    pub fn shifted(&self, k: u32) -> ResidueSet {
        let k = k % self.n;
        if k == 0 {
            return self.clone();
        }
        if self.n <= 64 {
            let n = self.n;
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let w = self.words[0];
            let rotated = ((w << k) | (w >> (n - k))) & mask;
            return Self { n, words: vec![rotated] };
        }
        let mut out = ResidueSet::empty(self.n);
        for r in self.iter() {
            out.insert(r + k);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.n).filter(move |&r| self.contains(r))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Replaces `set` by `∪_{b=1..min(ub, n)} (set + b·w)`.
///
/// `b` running over `n` or more consecutive values already realizes every
/// multiple of `w`, so larger bounds change nothing.
pub(crate) fn extend_by_weight(set: &ResidueSet, weight: u32, upper_bound: u64) -> ResidueSet {
    let n = set.modulus();
    let steps = upper_bound.min(n as u64) as u32;
    let w = weight % n;
    let mut acc = ResidueSet::empty(n);
    let mut cur = set.clone();
    for _ in 0..steps {
        cur = cur.shifted(w);
        acc.union_with(&cur);
    }
    acc
}

/// The set `{ Σ_j b_j·w_j mod n : 1 <= b_j <= upper_bounds[j] }`.
pub fn reachable_residues(
    weights: &[u32],
    upper_bounds: &[u64],
    n: u32,
) -> Result<ResidueSet, CriteriaError> {
    if weights.is_empty() {
        return Err(CriteriaError::EmptyInput);
    }
    if weights.len() != upper_bounds.len() {
        return Err(CriteriaError::LengthMismatch { expected: weights.len(), found: upper_bounds.len() });
    }
    if n == 0 {
        return Err(CriteriaError::ZeroModulus);
    }
    if let Some(j) = upper_bounds.iter().position(|&ub| ub == 0) {
        return Err(CriteriaError::ZeroBound { index: j });
    }
    let mut set = ResidueSet::singleton(n, 0);
    for (&w, &ub) in weights.iter().zip(upper_bounds) {
        set = extend_by_weight(&set, w, ub);
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, items: &[u32]) -> ResidueSet {
        let mut s = ResidueSet::empty(n);
        for &r in items {
            s.insert(r);
        }
        s
    }

    #[test]
    fn examples() {
        assert_eq!(reachable_residues(&[3], &[4], 5).unwrap(), set(5, &[1, 2, 3, 4]));
        assert_eq!(reachable_residues(&[2], &[1], 6).unwrap(), set(6, &[2]));
        assert_eq!(reachable_residues(&[1, 2], &[2, 2], 5).unwrap(), set(5, &[0, 1, 3, 4]));
    }

    #[test]
    fn errors() {
        assert_eq!(reachable_residues(&[], &[], 5), Err(CriteriaError::EmptyInput));
        assert!(matches!(reachable_residues(&[1], &[1, 2], 5), Err(CriteriaError::LengthMismatch { .. })));
        assert_eq!(reachable_residues(&[1, 1], &[1, 0], 5), Err(CriteriaError::ZeroBound { index: 1 }));
    }

    #[test]
    fn saturated_bound_covers_multiples() {
        // b·4 mod 6 only reaches {0, 2, 4} no matter how large the bound
        let s = reachable_residues(&[4], &[1_000_000], 6).unwrap();
        assert_eq!(s, set(6, &[0, 2, 4]));
    }

    #[test]
    fn shift_wraps_for_large_moduli() {
        let s = set(130, &[0, 64, 129]);
        assert_eq!(s.shifted(1), set(130, &[1, 65, 0]));
        assert_eq!(s.shifted(129).to_vec(), vec![63, 128, 129]);
        let small = set(64, &[0, 63]);
        assert_eq!(small.shifted(1), set(64, &[1, 0]));
    }

    #[test]
    fn len_and_full() {
        let s = reachable_residues(&[1], &[7], 7).unwrap();
        assert!(s.is_full());
        assert_eq!(s.len(), 7);
        assert!(!ResidueSet::empty(3).is_full());
    }
}
