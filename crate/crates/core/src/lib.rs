//! Learning spaces and their projections.
//!
//! A learning space is a family of knowledge states (subsets of a finite item
//! domain) that contains `∅` and the whole domain and satisfies learning
//! smoothness and learning consistency; equivalently it is a well-graded,
//! union-closed knowledge structure, or an antimatroid.
//!
//! The crate covers:
//!
//! - [`state`] and [`family`]: bit-mask states over a named domain and
//!   canonically ordered families of them.
//! - [`axioms`]: the structural predicates, tight paths and union closure.
//! - [`projection`]: the partition induced by an item subset, projections,
//!   children, plus children and yielding subsets.
//! - [`oracle`]: exhaustive enumeration, seeded generation and verification
//!   sweeps.
//! - [`assess`]: recursive assessment through projections.

pub mod assess;
pub mod axioms;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod oracle;
pub mod projection;
pub mod state;

pub use assess::{
    assess_on_projection, assess_recursive, reconstruct_state, AssessConfig, AssessmentLevel,
    AssessmentSession, LatentResponder, QueryRecord, Responder, SubsetRule,
};
pub use axioms::TightPath;
pub use error::{Error, Result};
pub use family::SetFamily;
pub use oracle::{GeneratorConfig, Suite, VerificationReport};
pub use projection::{
    equivalent_under, is_trivial_child, plus_child, Child, ClassPartition, EquivClass,
    YieldingViolation,
};
pub use state::{sym_diff_distance, ItemDomain, StateSet, MAX_ITEMS};
