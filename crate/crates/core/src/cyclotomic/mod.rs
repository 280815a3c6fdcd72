//! Exact arithmetic over `Q(ζ_88)` and the `O_11` verification.

pub mod field;
pub mod o11;
pub mod poly;

pub use field::{constants, CyclotomicNumber};
pub use o11::{verify_o11, Check, O11Data, O11Report};
pub use poly::{is_invariant, is_semi_invariant, substitute, BivariatePolynomial, Matrix2, Term};
