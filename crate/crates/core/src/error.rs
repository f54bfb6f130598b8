use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The four defining conditions of an effect algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Commutativity,
    Associativity,
    Orthosupplement,
    ZeroOne,
}

impl Axiom {
    pub fn number(self) -> u8 {
        match self {
            Axiom::Commutativity => 1,
            Axiom::Associativity => 2,
            Axiom::Orthosupplement => 3,
            Axiom::ZeroOne => 4,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Orthosupplement => "unique orthosupplement",
            Axiom::ZeroOne => "zero-one law",
        };
        write!(f, "axiom {} ({name})", self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("degenerate algebra: zero and one coincide")]
    Degenerate,

    #[error("{axiom} violated; witness {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },

    #[error("derived relation is not a partial order: {a} <= {b} <= {a} with {a} != {b}")]
    NotAPartialOrder { a: usize, b: usize },

    #[error("not a lattice: elements {a} and {b} lack a {missing}")]
    NotALattice { a: usize, b: usize, missing: &'static str },

    #[error("not atomic: element {0} dominates no atom")]
    NotAtomic(usize),

    #[error("the zero element has no isotropic index")]
    ZeroHasNoIndex,

    #[error("size guard exceeded: {what} needs carrier {size}, limit is {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("atom decomposition failed for element {0}")]
    DecompositionFailed(usize),

    #[error("sharp decomposition of element {element} is not unique: candidates {witnesses:?}")]
    UniquenessViolated { element: usize, witnesses: Vec<usize> },

    #[error("element {0} has no smallest sharp element above it")]
    NotSharplyDominating(usize),

    #[error("topologies live on different carriers ({left} vs {right} points)")]
    CarrierMismatch { left: usize, right: usize },

    #[error("map domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("order topology fast path disagrees with the open-set criterion on subset {0:#b}")]
    OracleMismatch(u64),

    #[error("line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("line {line}: sum contradicts an earlier declaration")]
    ConflictingSum { line: usize },

    #[error("invalid catalog spec: {0}")]
    InvalidSpec(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal invariant broken: {0}")]
    InvariantBroken(String),
}

impl Error {
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::SizeGuardExceeded { .. })
    }
}
