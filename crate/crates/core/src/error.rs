use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("not a subspace: {0}")]
    NotSubspace(String),

    #[error("algebra does not satisfy {axiom} (required for {needed_for})")]
    Precondition {
        axiom: &'static str,
        needed_for: String,
    },

    #[error("module axiom {axiom} fails on basis pair ({i}, {j})")]
    ModuleAxiom { axiom: &'static str, i: usize, j: usize },

    #[error("subspace is {found}, but {required} is required")]
    NotIdeal {
        found: &'static str,
        required: &'static str,
    },

    #[error("filtration is not compatible with the differential at degree {degree}, step {step}")]
    FiltrationIncompatible { degree: usize, step: usize },

    #[error("differential does not square to zero at degree {degree}")]
    NonZeroComposition { degree: usize },

    #[error("operator does not preserve {what} in degree {degree}")]
    ActionIllDefined { what: &'static str, degree: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("degree {degree} out of range (max {max})")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("enumeration bound: dimension {0} exceeds 3")]
    EnumerationBound(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown catalog entry `{name}`; available: {available}")]
    UnknownCatalog { name: String, available: String },

    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Errors caused by bad user input (as opposed to violated internal invariants).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::UnknownCatalog { .. }
                | Error::UnknownName { .. }
                | Error::Io(_)
                | Error::EnumerationBound(_)
                | Error::Precondition { .. }
                | Error::ModuleAxiom { .. }
                | Error::NotIdeal { .. }
                | Error::DimensionMismatch { .. }
                | Error::DegreeOutOfRange { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
