//! Gorenstein, nearly Gorenstein and residue computations for cyclic
//! quotient singularities `1/n(t_1, ..., t_d)`, plus an exact check of the
//! identities behind the nearly Gorenstein property of `C[[u, v]]^{O_11}`.

pub mod audit;
pub mod criteria;
pub mod cyclotomic;
pub mod oracle;
pub mod residue;
pub mod singularity;
pub mod tables;

mod subsets;

pub use criteria::{
    classify, classify_action, is_gorenstein, is_nearly_gorenstein, remark_prefilter, trace_contains_monomial,
    Classification, ExponentVector, NgWitness, Verdict,
};
pub use residue::{residue, ResidueReport, ResidueValue};
pub use singularity::{canonical_form, iso_equivalent, reduce_zero_weights, ActionError, CyclicAction, ReductionOutcome};
