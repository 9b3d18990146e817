use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad scalar {0:?}: expected an integer or p/q with q > 0")]
    BadScalar(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("index out of range at {path}: {index} >= {bound}")]
    IndexOutOfRange { path: String, index: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map {0} is singular")]
    SingularMap(String),
    #[error("a unit is required")]
    MissingUnit,
    #[error("a counit is required")]
    MissingCounit,
    #[error("a weight lambda is required")]
    MissingWeight,
    #[error("missing field: {0}")]
    MissingField(String),
    #[error("element is not invariant under {0}")]
    NotInvariant(String),
    #[error("maps {0} and {1} do not commute")]
    NonCommutingMaps(String, String),
    #[error("map {0} is not multiplicative")]
    NonMultiplicativeMap(String),
    #[error("map {map} is not a morphism: {equation_id} fails")]
    NotMorphism { map: String, equation_id: String },
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: String, found: String },
    #[error("precondition {equation_id} fails")]
    PreconditionFailed { equation_id: String, report: Box<Report> },
    #[error("input is not a bialgebra of the required kind ({} violations)", .0.violations.len())]
    NotBialgebra(Box<Report>),
    #[error("element does not solve the Yang–Baxter equation of the required weight")]
    NotYbeSolution,
    #[error("element is not quasitriangular")]
    NotQuasitriangular,
    #[error("bilinear form is not coquasitriangular")]
    NotCoquasitriangular,
    #[error("search space of {candidates} candidates exceeds the limit {limit}")]
    SearchSpaceTooLarge { candidates: u128, limit: u128 },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn precondition(report: Report) -> Error {
        let equation_id = report
            .violations
            .first()
            .map(|v| v.equation_id.clone())
            .unwrap_or_default();
        Error::PreconditionFailed { equation_id, report: Box::new(report) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
