//! Exact arithmetic in `Q(ζ)` for a primitive 88th root of unity `ζ`.
//!
//! Elements are coefficient vectors over the power basis `1, ζ, ..., ζ^39`,
//! reduced modulo the 88th cyclotomic polynomial (degree `φ(88) = 40`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const CONDUCTOR: usize = 88;
pub const DEGREE: usize = 40;

/// Integer coefficients (constant term first) of the `m`-th cyclotomic
/// polynomial, by dividing `x^m - 1` by `Φ_k` for every proper divisor `k`.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1);
    let mut p = vec![0i64; m + 1];
    p[0] = -1;
    p[m] = 1;
    for k in (1..m).filter(|k| m.is_multiple_of(*k)) {
        p = exact_div(&p, &cyclotomic_polynomial(k));
    }
    p
}

/// Quotient of integer polynomials when the divisor is monic and divides.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "divisor does not divide");
    quot
}

/// Row `k` holds `ζ^(40 + k)` in the power basis, for `k < 40`.
fn reduction_table() -> &'static Vec<Vec<i64>> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let phi = cyclotomic_polynomial(CONDUCTOR);
        assert_eq!(phi.len(), DEGREE + 1);
        // ζ^40 = -Σ_{i<40} phi[i] ζ^i
        let mut row: Vec<i64> = phi[..DEGREE].iter().map(|c| -c).collect();
        let mut table = Vec::with_capacity(DEGREE);
        for _ in 0..DEGREE {
            table.push(row.clone());
            // multiply by ζ and reduce the overflowing ζ^40 term
            let top = row[DEGREE - 1];
            let mut next = vec![0i64; DEGREE];
            next[1..].copy_from_slice(&row[..DEGREE - 1]);
            for (i, c) in next.iter_mut().enumerate() {
                *c -= top * phi[i];
            }
            row = next;
        }
        table
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self { coeffs: vec![BigRational::zero(); DEGREE] }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = c;
        z
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(CONDUCTOR as i64) as usize;
        let mut z = Self::zero();
        if k < DEGREE {
            z.coeffs[k] = BigRational::one();
        } else if k < 2 * DEGREE {
            for (i, &c) in reduction_table()[k - DEGREE].iter().enumerate() {
                z.coeffs[i] = BigRational::from_integer(BigInt::from(c));
            }
        } else {
            // 80 <= k < 88
            z = &Self::zeta_pow((k - DEGREE) as i64) * &Self::zeta_pow(DEGREE as i64);
        }
        z
    }

    /// Builds an element from its power-basis coefficients. Shorter inputs
    /// are padded with zeros.
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Self {
        assert!(coeffs.len() <= DEGREE, "use multiplication to reduce higher powers");
        let mut c = coeffs;
        c.resize(DEGREE, BigRational::zero());
        Self { coeffs: c }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn nonzero_terms(&self) -> Vec<(usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let lhs_terms = self.nonzero_terms();
        let rhs_terms = rhs.nonzero_terms();
        let mut wide = vec![BigRational::zero(); 2 * DEGREE - 1];
        for &(i, a) in &lhs_terms {
            for &(j, b) in &rhs_terms {
                wide[i + j] += a * b;
            }
        }
        let table = reduction_table();
        let (low, high) = wide.split_at_mut(DEGREE);
        for (k, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, &t) in table[k].iter().enumerate() {
                if t != 0 {
                    low[i] += c * BigRational::from_integer(BigInt::from(t));
                }
            }
        }
        wide.truncate(DEGREE);
        CyclotomicNumber { coeffs: wide }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.nonzero_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (k, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if pos > 0 { "+" } else { "" };
            let sep = if pos > 0 { " " } else { "" };
            let abs = c.abs();
            match k {
                0 => write!(f, "{sep}{sign}{sep}{abs}")?,
                _ if abs.is_one() => write!(f, "{sep}{sign}{sep}z^{k}")?,
                _ => write!(f, "{sep}{sign}{sep}{abs}*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Named elements of `Q(ζ_88)`.
pub mod constants {
    use super::*;

    /// Primitive 22nd root of unity `ζ^4`.
    pub fn lambda() -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(4)
    }

    /// Primitive 8th root of unity `ζ^11`.
    pub fn zeta8() -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(11)
    }

    /// `ζ^22`, a square root of `-1`.
    pub fn imaginary_unit() -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(22)
    }

    /// `ζ_8 + ζ_8^{-1}`.
    pub fn sqrt2() -> CyclotomicNumber {
        &CyclotomicNumber::zeta_pow(11) + &CyclotomicNumber::zeta_pow(-11)
    }

    /// `(ζ_8 + ζ_8^{-1}) / 2`.
    pub fn inv_sqrt2() -> CyclotomicNumber {
        sqrt2().scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }
}
