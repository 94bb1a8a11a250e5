use thiserror::Error;

use crate::assess::AssessmentSession;
use crate::family::SetFamily;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("item domain must contain at least one item")]
    EmptyDomain,
    #[error("item domain has {0} items; at most 64 are supported")]
    DomainTooLarge(usize),
    #[error("duplicate item name `{0}` in domain")]
    DuplicateItem(String),
    #[error("unknown item `{0}`")]
    UnknownItem(String),
    #[error("state {state} is not a subset of the family's ground set {ground}")]
    StateOutsideGround { state: String, ground: String },
    #[error("families are defined over different item domains")]
    DomainMismatch,
    #[error("state {0} is not a member of the family")]
    NotAMember(String),

    #[error("subset of items must be non-empty")]
    EmptySubset,
    #[error("subset {subset} must be a proper subset of the family's union {union}")]
    SubsetNotProper { subset: String, union: String },
    #[error("projection needs a family whose union has at least 2 items (found {0})")]
    DomainTooSmall(usize),
    #[error("the trivial child {{∅}} has no plus child")]
    TrivialChild,

    #[error("item count {found} outside supported range {min}..={max}")]
    ItemCount {
        found: usize,
        min: usize,
        max: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no projection state is consistent with the responses")]
    NoConsistentState,
    #[error("assessment stopped at depth {depth} with {} candidate states", candidates.len())]
    DepthExhausted {
        depth: usize,
        session: Box<AssessmentSession>,
        candidates: SetFamily,
    },
    #[error("reconstructed state {0} is not a member of the assessed family")]
    ReconstructionOutsideFamily(String),
}
