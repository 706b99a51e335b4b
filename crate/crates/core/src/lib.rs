//! Construction, evaluation, verification and decomposition of uninorms on
//! the unit square.
//!
//! A uninorm is a commutative, associative, monotone binary operation on
//! [0, 1] with a neutral element e; t-norms (e = 1) and t-conorms (e = 0) are
//! the boundary cases. This crate builds operators from additive generators,
//! as min/max-based composites around a neutral element, as internal
//! operators driven by a decreasing switch curve, and as ordinal sums of
//! uninorm summands; it verifies the defining axioms numerically, detects
//! idempotent sets and discontinuity loci, and recovers ordinal sum
//! representations from black-box operators.

pub mod analysis;
pub mod catalog;
pub mod decomposition;
pub mod error;
pub mod ext;
pub mod generator;
pub mod operator;
pub mod ordinal;
pub mod pseudo;
pub mod scale;

pub use analysis::{
    axiom_report, classify, curve_of_representable, equilibrium_curve, idempotent_set, jump_locus,
    section, underlying_ops, AxiomCheck, AxiomReport, ClassFlags, IdempotentReport,
};
pub use decomposition::{decompose, recompose, DecompositionResult, SummandClass, SummandFrame};
pub use error::CoreError;
pub use ext::ExtendedReal;
pub use generator::{GeneratorFamily, GeneratorKind, GeneratorSpec};
pub use operator::{AnnihilatorMode, Operator, OperatorKind};
pub use ordinal::{validate_spec, OrdinalSumUninormSpec, SummandSpec, ValidationReport, Violation};
pub use pseudo::{PseudoFunction, PseudoPoint};
pub use scale::ScaleMap;
