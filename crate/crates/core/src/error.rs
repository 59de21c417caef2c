use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group too large for full enumeration (more than {cap} elements)")]
    ElementCapExceeded { cap: usize },

    #[error("group of order {order} exceeds the subgroup lattice cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("permutation is not an element of the group")]
    NotInGroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two independent computations of the same property disagreed. This is
    /// always an implementation bug.
    #[error("internal oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error("unknown corpus id `{0}`")]
    UnknownCorpus(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::ElementCapExceeded { .. } | Error::LatticeCapExceeded { .. }
        )
    }
}
