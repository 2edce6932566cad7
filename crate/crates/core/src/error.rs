use thiserror::Error;

use crate::ring::AxiomViolation;
use crate::substructures::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} cap exceeded: size {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("modulus {0} is too small; Z(n) needs n >= 2")]
    InvalidModulus(usize),
    #[error("invalid matrix dimension {0}")]
    InvalidDimension(usize),
    #[error("a product ring needs at least one factor")]
    EmptyProduct,
    #[error("ring axioms violated: {0}")]
    Axioms(AxiomViolation),
    #[error("subset does not belong to ring `{0}`")]
    ForeignSubset(String),
    #[error("subset is not a unital subring")]
    NotSubring,
    #[error("subring must be proper")]
    NotProperSubring,
    #[error("subset is not a {0} ideal")]
    NotIdeal(Side),
    #[error("ideal must be proper")]
    ImproperIdeal,
    #[error("subset is not an additive subgroup")]
    NotSubgroup,
    #[error("module action is ill-defined: coset {coset} under actor element {actor}")]
    IllDefinedAction { coset: usize, actor: usize },
    #[error("zero module has no unital endomorphism ring")]
    DegenerateModule,
    #[error("element name `{0}` not found")]
    UnknownElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
