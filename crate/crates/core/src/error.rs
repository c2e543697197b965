use thiserror::Error;

use crate::space::Cardinality;

/// Everything that can go wrong while building or evaluating an instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid lattice description: {0}")]
    LatticeSpec(String),

    #[error("order is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("order lacks meets: {0} and {1} have no greatest lower bound")]
    LacksMeets(String, String),

    #[error("order lacks joins: {0} and {1} have no least upper bound")]
    LacksJoins(String, String),

    #[error("tensor is not commutative at ({0}, {1})")]
    TensorNotCommutative(String, String),

    #[error("tensor is not associative at ({0}, {1}, {2})")]
    TensorNotAssociative(String, String, String),

    #[error("top is not a unit for tensor at {0}")]
    TensorUnit(String),

    #[error("adjointness fails at (a, b, c) = ({0}, {1}, {2}): a⊗b ≤ c and a ≤ b→c disagree")]
    Adjointness(String, String, String),

    #[error("unknown lattice element {0:?}")]
    UnknownElement(String),

    #[error("element id {0} is outside the carrier")]
    ElementOutOfRange(usize),

    #[error("lattice mismatch between operands")]
    LatticeMismatch,

    #[error("universe mismatch: expected {expected:?}, found {found:?}")]
    UniverseMismatch { expected: String, found: String },

    #[error("invalid universe {name:?}: {reason}")]
    InvalidUniverse { name: String, reason: String },

    #[error("unknown element {label:?} in universe {universe:?}")]
    UnknownLabel { universe: String, label: String },

    #[error("fuzzy set has {found} values but universe {universe:?} has {expected} elements")]
    Arity { universe: String, expected: usize, found: usize },

    #[error("map is not total: {0}")]
    MapNotTotal(String),

    #[error("block not normal: {0}")]
    BlockNotNormal(String),

    #[error("core overlap at {element} (blocks {first} and {second})")]
    CoreOverlap { element: String, first: String, second: String },

    #[error("element {0} is not covered by any core")]
    Uncovered(String),

    #[error("duplicate block name {0:?}")]
    DuplicateBlock(String),

    #[error("unknown block {0:?}")]
    UnknownBlock(String),

    #[error("declared index function disagrees with cores at {element}: declared {declared}, computed {computed}")]
    IndexMismatch { element: String, declared: String, computed: String },

    #[error("partition is not identity-indexed: {0}")]
    NotIdentityIndexed(String),

    #[error("dom(W) misses block {0}")]
    IncompleteDomain(String),

    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),

    #[error("morphism is not admissible (witness 0): {0}")]
    NotAdmissible(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("budget exceeded: |L|^|X| = {cardinality} exceeds budget {budget}")]
    BudgetExceeded { cardinality: Cardinality, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
