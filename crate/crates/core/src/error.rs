use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// Group axiom reported by [`Error::NotAGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Shape,
    LatinSquare,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Shape => "shape",
            Axiom::LatinSquare => "latin-square",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverse",
            Axiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group ({axiom}): {detail}")]
    NotAGroup { axiom: Axiom, detail: String },

    #[error("closure exceeds the order cap of {limit}")]
    ClosureExceedsLimit { limit: usize },

    #[error("subgroup lattice exceeds the cap of {limit} subgroups")]
    LatticeExceedsLimit { limit: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),

    #[error("clause {clause} of the classifier disagrees on {group}: index form {index_form}, quotient form {quotient_form}")]
    ClauseMismatch {
        group: String,
        clause: &'static str,
        index_form: bool,
        quotient_form: bool,
    },

    #[error("{path}: {message}")]
    GroupFile { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
