use thiserror::Error;

use crate::report::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("malformed scalar `{0}`")]
    Scalar(String),
    #[error("the product has no two-sided unit")]
    NoUnit,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("{0}")]
    Invalid(String),
    #[error("precondition `{name}` failed\n{report}")]
    Precondition { name: String, report: AxiomReport },
}

impl Error {
    pub(crate) fn precondition(name: &str, report: AxiomReport) -> Self {
        Error::Precondition {
            name: name.to_string(),
            report,
        }
    }
}

/// Turns a failing report into a precondition error.
pub(crate) fn require(name: &str, report: AxiomReport) -> Result<(), Error> {
    if report.ok() {
        Ok(())
    } else {
        Err(Error::precondition(name, report))
    }
}
