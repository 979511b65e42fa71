use crate::report::CheckReport;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table `{field}`: {detail}")]
    MalformedTable { field: &'static str, detail: String },
    #[error("order is not a bounded lattice: {0}")]
    NotALattice(String),
    #[error("structure is not an ortholattice")]
    NotOrtholattice(Box<CheckReport>),
    #[error("lattice is not orthomodular")]
    NotOrthomodular(Box<CheckReport>),
    #[error("the two orthomodularity formulations disagree (quasi-equation: {quasi}, equation: {equational})")]
    InternalInconsistency { quasi: bool, equational: bool },
    #[error("{what} exceeds the configured cap ({size} > {cap})")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("a derived identity failed although its premises hold")]
    TheoremViolation(Box<CheckReport>),
    #[error("x·x is not constant: {0}·{0} = {1} but {2}·{2} = {3}")]
    NotConstant(usize, usize, usize, usize),
    #[error("derived relation is not a partial order: {0}")]
    OrderLawViolation(String),
    #[error("quasi-implication algebra has no zero element")]
    Unbounded,
    #[error("input is not a quantum cylindric algebra")]
    InvalidQca(Box<CheckReport>),
    #[error("input is not a cylindric quasi-implication algebra")]
    InvalidCqia(Box<CheckReport>),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("principal filter of the zero element is improper")]
    ZeroGenerator,
    #[error("cannot generate a filter from the empty set")]
    EmptyGenerator,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid document: field `{field}`: {detail}")]
    Validation { field: String, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn malformed(field: &'static str, detail: impl Into<String>) -> Self {
        Error::MalformedTable { field, detail: detail.into() }
    }
}
