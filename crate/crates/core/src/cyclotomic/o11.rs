//! Machine check of the polynomial identities behind the nearly Gorenstein
//! property of the invariant ring of the octahedral group `O_11` acting on
//! `C[[u, v]]`.
//!
//! The group is generated by the scalar `φ = diag(λ, λ)` of order 22 and the
//! binary octahedral generators `ψ, τ, η`. The invariants `g1, g2, g3` of
//! the binary octahedral group give the six generators `z1..z6` of the
//! maximal ideal and the canonical element `f = g3^3`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::field::constants::{imaginary_unit, inv_sqrt2, lambda, zeta8};
use super::field::CyclotomicNumber;
use super::poly::{is_invariant, is_semi_invariant, substitute, BivariatePolynomial, Matrix2};

/// Generators, invariants and the canonical element.
#[derive(Debug, Clone)]
pub struct O11Data {
    pub phi: Matrix2,
    pub psi: Matrix2,
    pub tau: Matrix2,
    pub eta: Matrix2,
    pub g1: BivariatePolynomial,
    pub g2: BivariatePolynomial,
    pub g3: BivariatePolynomial,
    /// `z1..z6`, zero-indexed.
    pub z: [BivariatePolynomial; 6],
    pub f: BivariatePolynomial,
}

impl O11Data {
    pub fn new() -> Self {
        let zeta = zeta8();
        let zero = CyclotomicNumber::zero;
        let phi = Matrix2::diagonal(lambda(), lambda());
        let psi = Matrix2::diagonal(zeta.clone(), zeta.pow(7));
        let tau = Matrix2::new(zero(), imaginary_unit(), imaginary_unit(), zero());
        let eta = Matrix2::new(zeta.clone(), zeta.pow(3), zeta.clone(), zeta.pow(7)).scale(&inv_sqrt2());

        let poly = BivariatePolynomial::from_integer_terms;
        // g1 = (u^5 v - u v^5)^2
        let g1 = poly(&[(1, 5, 1), (-1, 1, 5)]).pow(2);
        // g2 = uv (u^4 - v^4)(u^12 - 33 u^8 v^4 - 33 u^4 v^8 + v^12)
        let g2 = &(&poly(&[(1, 1, 1)]) * &poly(&[(1, 4, 0), (-1, 0, 4)]))
            * &poly(&[(1, 12, 0), (-33, 8, 4), (-33, 4, 8), (1, 0, 12)]);
        let g3 = poly(&[(1, 8, 0), (14, 4, 4), (1, 0, 8)]);

        let prod = |factors: &[(&BivariatePolynomial, u32)]| {
            factors.iter().fold(BivariatePolynomial::one(), |acc, (p, e)| &acc * &p.pow(*e))
        };
        let z = [
            prod(&[(&g3, 11)]),
            prod(&[(&g1, 1), (&g3, 4)]),
            prod(&[(&g1, 4), (&g2, 1)]),
            prod(&[(&g2, 1), (&g3, 6)]),
            prod(&[(&g1, 3), (&g3, 1)]),
            prod(&[(&g1, 2), (&g2, 1), (&g3, 3)]),
        ];
        let f = g3.pow(3);
        Self { phi, psi, tau, eta, g1, g2, g3, z, f }
    }

    pub fn generators(&self) -> [(&'static str, &Matrix2); 4] {
        [("phi", &self.phi), ("psi", &self.psi), ("tau", &self.tau), ("eta", &self.eta)]
    }
}

impl Default for O11Data {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct O11Report {
    pub checks: Vec<Check>,
}

impl O11Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type CheckFn = fn(&O11Data) -> bool;

fn determinants(data: &O11Data) -> bool {
    let one = CyclotomicNumber::one();
    data.psi.det() == one && data.tau.det() == one && data.eta.det() == one && data.phi.det() == lambda().pow(2)
}

fn phi_order(data: &O11Data) -> bool {
    data.phi.pow(22) == Matrix2::identity()
}

fn basic_invariants(data: &O11Data) -> bool {
    [&data.g1, &data.g2, &data.g3]
        .into_par_iter()
        .all(|g| [&data.psi, &data.tau, &data.eta].iter().all(|m| is_invariant(g, m)))
}

fn generator_invariance(data: &O11Data) -> bool {
    let gens = data.generators();
    data.z.par_iter().all(|z| gens.iter().all(|(_, m)| is_invariant(z, m)))
}

fn canonical_semi_invariance(data: &O11Data) -> bool {
    data.generators().par_iter().all(|(_, m)| is_semi_invariant(&data.f, m))
}

/// `f` divides `z1, z2, z4, z6` with cofactors `g3^8, g1 g3, g2 g3^3, g1^2 g2`.
fn divisibility(data: &O11Data) -> bool {
    let (g1, g2, g3) = (&data.g1, &data.g2, &data.g3);
    let cofactors = [
        (0, g3.pow(8)),
        (1, g1 * g3),
        (3, g2 * &g3.pow(3)),
        (5, &g1.pow(2) * g2),
    ];
    cofactors.iter().all(|(i, q)| &data.f * q == data.z[*i])
}

/// `z3 / z6 = z5 / z2 (= g1^2 / g3^3)`, cross-multiplied.
fn ratio_identity(data: &O11Data) -> bool {
    let [_, z2, z3, _, z5, z6] = &data.z;
    let lhs = z3 * z2;
    lhs == z5 * z6 && &lhs * &data.g3.pow(3) == &(z2 * z6) * &data.g1.pow(2)
}

const CHECKS: [(&str, CheckFn); 7] = [
    ("determinants: det psi = det tau = det eta = 1, det phi = lambda^2", determinants),
    ("phi^22 = identity", phi_order),
    ("g1, g2, g3 invariant under psi, tau, eta", basic_invariants),
    ("z1..z6 invariant under phi, psi, tau, eta (invariance only)", generator_invariance),
    ("f = g3^3 semi-invariant under phi, psi, tau, eta", canonical_semi_invariance),
    ("f divides z1, z2, z4, z6", divisibility),
    ("z3*z2 = z5*z6", ratio_identity),
];

/// Runs the seven checks in order. Failures are reported, never raised.
pub fn verify_o11() -> O11Report {
    verify_with(&O11Data::new())
}

pub fn verify_with(data: &O11Data) -> O11Report {
    let checks = CHECKS
        .par_iter()
        .map(|(name, check)| Check { name: (*name).to_owned(), passed: check(data) })
        .collect();
    O11Report { checks }
}

/// `λ^k` as a scalar, for degree bookkeeping under `φ`.
pub fn lambda_pow(k: u32) -> CyclotomicNumber {
    lambda().pow(k)
}

/// `substitute(p, φ) = λ^deg(p) · p` for homogeneous `p`.
pub fn scalar_action_consistent(p: &BivariatePolynomial, data: &O11Data) -> bool {
    let deg = p.degree().unwrap_or(0);
    p.is_homogeneous() && substitute(p, &data.phi) == p.scale(&lambda_pow(deg))
}

/// `1/2` as a field element.
pub fn half() -> CyclotomicNumber {
    CyclotomicNumber::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)))
}
