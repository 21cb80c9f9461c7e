//! Exact calculus of generalized Riemann differences.
//!
//! The crate works entirely over arbitrary-precision rationals. It builds
//! schemes from node sets, decomposes and rescales them, decides when two
//! differentiations are equivalent, catalogs MZ verdicts and probes
//! difference quotients numerically.

pub mod equivalence;
pub mod error;
pub mod family;
pub mod lattice;
pub mod linalg;
pub mod mz;
pub mod numeric;
pub mod rational;
pub mod scheme;

pub use equivalence::{
    class_member, decide_equivalent, decide_equivalent_general, equivalent_gaussian,
    equivalent_gaussian_among, explicit_class_member, is_scale, EquivalencePath,
    EquivalenceResult, EquivalenceVerdict, GaussianEquivalence, Inequivalence, Witness,
};
pub use error::{Error, Result};
pub use family::{
    affine_shift_closed_form, named_scheme, qbinom, recognize_gaussian, scale_partners,
    FamilyKind, GaussianMatch, GaussianVariant,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use scheme::{combine, construct_exact, construct_exact_symmetric, OrderInfo, Scheme, Term};
pub use lattice::{subgroup_membership, Subgroup};
pub use mz::{
    ggr_set, mz_check, mz_set_check, n_times_check, verify_quantum_ggr, Certificate, ChainEntry,
    ChainItem, Conjecture, MzStatus, MzVerdict, NTimesReport, PeanoEquivalence,
};
pub use numeric::{
    eval_quotient, limit_probe, peano_probe, Estimate, FunctionOracle, ProbeConfig, ProbeReport,
    ProbeVerdict,
};
