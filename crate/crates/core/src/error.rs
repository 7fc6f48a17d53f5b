use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} requires a prime, got {value}")]
    NotPrime { what: &'static str, value: u64 },

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("cayley table, line {line}: {message}")]
    CayleyParse { line: usize, message: String },

    #[error("cayley table is not a group: {0}")]
    CayleyInvalid(CayleyViolation),

    #[error(
        "group of order {order} exceeds the brute-force cap of {cap}; use the closed-form dihedral path"
    )]
    BruteForceCap { order: usize, cap: usize },

    #[error("relation is not reflexive at node {0}")]
    NotReflexive(usize),

    #[error("relation is not antisymmetric on pair ({0}, {1})")]
    NotAntisymmetric(usize, usize),

    #[error("relation is not transitive on triple ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),

    #[error("poset of {size} nodes exceeds the isomorphism cap of {cap}")]
    IsomorphismCap { size: usize, cap: usize },

    #[error("invalid dihedral class key ({m}, {with_two}) for n = {n}: {reason}")]
    InvalidClassKey {
        n: u64,
        m: u64,
        with_two: bool,
        reason: &'static str,
    },

    #[error("map is not a lattice isomorphism: {0}")]
    NotPreserved(String),

    #[error("case outside the theorem's hypothesis: {0}")]
    Domain(String),

    #[error("failed to parse group spec {input:?}: {reason}")]
    SpecSyntax { input: String, reason: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// The first group axiom a Cayley table was found to break.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CayleyViolation {
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    NoIdentity,
    RepeatedEntry {
        row: usize,
        col: usize,
    },
    NonAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
}

impl std::fmt::Display for CayleyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CayleyViolation::OutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is not an element")
            }
            CayleyViolation::NoIdentity => write!(f, "no two-sided identity"),
            CayleyViolation::RepeatedEntry { row, col } => write!(
                f,
                "entry ({row}, {col}) repeats a value in its row or column"
            ),
            CayleyViolation::NonAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}
