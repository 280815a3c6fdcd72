//! Sparse polynomials in `u, v` over `Q(ζ_88)`, and 2×2 matrices acting on
//! them by linear substitution.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::CyclotomicNumber;

/// Exponent pair `u^u_exp v^v_exp`, ordered by total degree and then with
/// higher powers of `u` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub u_exp: u32,
    pub v_exp: u32,
}

impl Term {
    pub fn degree(self) -> u32 {
        self.u_exp + self.v_exp
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(other.u_exp.cmp(&self.u_exp))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Term, CyclotomicNumber>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::one())
    }

    pub fn monomial(u_exp: u32, v_exp: u32, c: CyclotomicNumber) -> Self {
        let mut p = Self::zero();
        p.add_term(Term { u_exp, v_exp }, c);
        p
    }

    pub fn u() -> Self {
        Self::monomial(1, 0, CyclotomicNumber::one())
    }

    pub fn v() -> Self {
        Self::monomial(0, 1, CyclotomicNumber::one())
    }

    /// Integer-coefficient polynomial from `(coefficient, u_exp, v_exp)`
    /// triples.
    pub fn from_integer_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, i, j) in terms {
            p.add_term(Term { u_exp: i, v_exp: j }, CyclotomicNumber::from_integer(c));
        }
        p
    }

    fn add_term(&mut self, term: Term, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&term) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&term);
                }
            }
            None => {
                self.terms.insert(term, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Term, &CyclotomicNumber)> {
        self.terms.iter().map(|(t, c)| (*t, c))
    }

    pub fn coefficient(&self, u_exp: u32, v_exp: u32) -> CyclotomicNumber {
        self.terms.get(&Term { u_exp, v_exp }).cloned().unwrap_or_else(CyclotomicNumber::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|t| t.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|t| t.degree());
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut p = Self::zero();
        for (t, a) in self.terms() {
            p.add_term(t, a * c);
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut p = self.clone();
        for (t, c) in rhs.terms() {
            p.add_term(t, c.clone());
        }
        p
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial { terms: self.terms.iter().map(|(t, c)| (*t, -c)).collect() }
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut p = BivariatePolynomial::zero();
        for (s, a) in self.terms() {
            for (t, b) in rhs.terms() {
                p.add_term(Term { u_exp: s.u_exp + t.u_exp, v_exp: s.v_exp + t.v_exp }, a * b);
            }
        }
        p
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms().map(|(t, c)| format!("({c})*u^{}*v^{}", t.u_exp, t.v_exp)).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub entries: [[CyclotomicNumber; 2]; 2],
}

impl Matrix2 {
    pub fn new(a: CyclotomicNumber, b: CyclotomicNumber, c: CyclotomicNumber, d: CyclotomicNumber) -> Self {
        Self { entries: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::diagonal(CyclotomicNumber::one(), CyclotomicNumber::one())
    }

    pub fn diagonal(a: CyclotomicNumber, d: CyclotomicNumber) -> Self {
        Self::new(a, CyclotomicNumber::zero(), CyclotomicNumber::zero(), d)
    }

    pub fn det(&self) -> CyclotomicNumber {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn scale(&self, s: &CyclotomicNumber) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        Self::new(a * s, b * s, c * s, d * s)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| &acc * self)
    }
}

impl Mul for &Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: &Matrix2) -> Matrix2 {
        let x = &self.entries;
        let y = &rhs.entries;
        let cell = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
        Matrix2::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }
}

/// `p(M_11 u + M_12 v, M_21 u + M_22 v)`.
///
/// With this convention `substitute(substitute(p, A), B) == substitute(p, A·B)`.
pub fn substitute(p: &BivariatePolynomial, m: &Matrix2) -> BivariatePolynomial {
    let [[a, b], [c, d]] = &m.entries;
    let new_u = &BivariatePolynomial::monomial(1, 0, a.clone()) + &BivariatePolynomial::monomial(0, 1, b.clone());
    let new_v = &BivariatePolynomial::monomial(1, 0, c.clone()) + &BivariatePolynomial::monomial(0, 1, d.clone());
    let max_u = p.terms().map(|(t, _)| t.u_exp).max().unwrap_or(0);
    let max_v = p.terms().map(|(t, _)| t.v_exp).max().unwrap_or(0);
    let powers = |base: &BivariatePolynomial, top: u32| {
        let mut out = vec![BivariatePolynomial::one()];
        for k in 1..=top as usize {
            let next = &out[k - 1] * base;
            out.push(next);
        }
        out
    };
    let u_powers = powers(&new_u, max_u);
    let v_powers = powers(&new_v, max_v);
    let mut out = BivariatePolynomial::zero();
    for (t, coeff) in p.terms() {
        let image = &u_powers[t.u_exp as usize] * &v_powers[t.v_exp as usize];
        out = &out + &image.scale(coeff);
    }
    out
}

pub fn is_invariant(p: &BivariatePolynomial, m: &Matrix2) -> bool {
    substitute(p, m) == *p
}

/// `M` maps `p` to `det(M)·p`.
pub fn is_semi_invariant(p: &BivariatePolynomial, m: &Matrix2) -> bool {
    substitute(p, m) == p.scale(&m.det())
}

#[cfg(test)]
mod tests {
    use super::super::field::constants::*;
    use super::*;

    fn int(c: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_integer(c)
    }

    #[test]
    fn term_order_is_graded() {
        let t = |u_exp, v_exp| Term { u_exp, v_exp };
        assert!(t(0, 1) < t(2, 0));
        assert!(t(2, 0) < t(1, 1));
        assert!(t(1, 1) < t(0, 2));
    }

    #[test]
    fn arithmetic_basics() {
        let p = BivariatePolynomial::from_integer_terms(&[(1, 1, 0), (-1, 0, 1)]);
        let q = BivariatePolynomial::from_integer_terms(&[(1, 1, 0), (1, 0, 1)]);
        let prod = &p * &q;
        assert_eq!(prod, BivariatePolynomial::from_integer_terms(&[(1, 2, 0), (-1, 0, 2)]));
        assert!((&p - &p).is_zero());
        assert!((&p * &BivariatePolynomial::zero()).is_zero());
        assert_eq!(prod.degree(), Some(2));
        assert_eq!(prod.num_terms(), 2);
        assert!(prod.is_homogeneous());
        assert!(!(&p + &BivariatePolynomial::one()).is_homogeneous());
    }

    #[test]
    fn substitution_basics() {
        let g3 = BivariatePolynomial::from_integer_terms(&[(1, 8, 0), (14, 4, 4), (1, 0, 8)]);
        assert_eq!(substitute(&g3, &Matrix2::identity()), g3);
        let tau = Matrix2::new(CyclotomicNumber::zero(), imaginary_unit(), imaginary_unit(), CyclotomicNumber::zero());
        assert_eq!(substitute(&g3, &tau), g3);
        let psi = Matrix2::diagonal(zeta8(), zeta8().pow(7));
        assert_eq!(substitute(&g3, &psi), g3);
        assert!(!is_invariant(&BivariatePolynomial::u(), &psi));
    }

    #[test]
    fn substitution_swaps_variables() {
        let swap = Matrix2::new(int(0), int(1), int(1), int(0));
        let p = BivariatePolynomial::from_integer_terms(&[(3, 2, 1), (5, 0, 1)]);
        assert_eq!(substitute(&p, &swap), BivariatePolynomial::from_integer_terms(&[(3, 1, 2), (5, 1, 0)]));
    }

    #[test]
    fn composition_convention_on_non_commuting_pair() {
        let tau = Matrix2::new(int(0), imaginary_unit(), imaginary_unit(), int(0));
        let psi = Matrix2::diagonal(zeta8(), zeta8().pow(7));
        assert_ne!(&tau * &psi, &psi * &tau);
        let p = BivariatePolynomial::from_integer_terms(&[(1, 3, 0), (2, 1, 1), (-4, 0, 2)]);
        assert_eq!(substitute(&substitute(&p, &tau), &psi), substitute(&p, &(&tau * &psi)));
        assert_ne!(substitute(&substitute(&p, &tau), &psi), substitute(&p, &(&psi * &tau)));
    }

    #[test]
    fn semi_invariance_of_uv_under_diagonal() {
        // diag(a, b) sends uv to ab·uv = det·uv
        let m = Matrix2::diagonal(lambda(), zeta8());
        let uv = BivariatePolynomial::monomial(1, 1, int(1));
        assert!(is_semi_invariant(&uv, &m));
        assert!(!is_invariant(&uv, &m));
    }

    #[test]
    fn matrix_helpers() {
        let m = Matrix2::new(int(1), int(2), int(3), int(4));
        assert_eq!(m.det(), int(-2));
        assert_eq!(m.pow(0), Matrix2::identity());
        assert_eq!(m.scale(&int(2)).det(), int(-8));
    }
}
