use alloc::string::String;

use thiserror::Error;

use crate::triples::Triple;

/// A geometry value that is not even well-formed (before any axiom check).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("a geometry needs at least one element")]
    Empty,
    #[error("identity index {identity} out of range for {n} elements")]
    IdentityOutOfRange { identity: usize, n: usize },
    #[error("triple {triple:?} has an index out of range for {n} elements")]
    TripleOutOfRange { triple: Triple, n: usize },
    #[error("duplicate triple {0:?}")]
    DuplicateTriple(Triple),
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
}

/// Why a multiplication table is not the table of a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupTableError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})", .witness[0], .witness[1], .witness[2])]
    NotAssociative { witness: [usize; 3] },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("duplicate element label {0}")]
    DuplicateLabel(String),
    #[error("label count {labels} does not match table size {n}")]
    LabelCount { labels: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Group(#[from] GroupTableError),
    #[error("search size limit exceeded: |source| = {source_size} (max {max_source}), |target| = {target_size} (max {max_target})")]
    SizeLimit {
        source_size: usize,
        target_size: usize,
        max_source: usize,
        max_target: usize,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map table has {got} entries, source has {expected} elements")]
    TableLength { got: usize, expected: usize },
    #[error("map sends source element {source_index} to {value}, outside the target")]
    TableOutOfRange { source_index: usize, value: usize },
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("axiom 1 fails at element {element}: {candidates} involution candidates")]
    NoInvolution { element: usize, candidates: usize },
    #[error("geometry is not sharp")]
    NotSharp,
    #[error("map is not a morphism")]
    NotMorphism,
    #[error("map is not a homomorphism")]
    NotHomomorphism,
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("constructed object violates an expected property: {0}")]
    Inconsistent(String),
}
