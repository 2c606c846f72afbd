use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group too large: closure exceeded the element cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("lattice too large: group of order {order} exceeds the lattice cap of {cap}")]
    LatticeTooLarge { order: usize, cap: usize },
    #[error("element {0} is not in the parent group")]
    NotInGroup(String),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("{0} is not normal")]
    NotNormal(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("prime {0} is not covered by the sigma partition")]
    UncoveredPrime(usize),
    #[error("invalid sigma string {text:?}: {msg}")]
    SigmaParse { text: String, msg: String },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("line {line}, field {field}: {msg}")]
    Parse {
        line: usize,
        field: String,
        msg: String,
    },
    #[error("duplicate group id {0:?}")]
    DuplicateId(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
