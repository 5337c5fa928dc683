use thiserror::Error;

use crate::complex::ComplexViolation;
use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown simplex id `{0}`")]
    UnknownSimplex(String),

    #[error("unknown generator `{id}` in degree {degree}")]
    UnknownGenerator { id: String, degree: usize },

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("invalid complex `{name}`:\n{report}")]
    InvalidComplex {
        name: String,
        report: ValidationReport<ComplexViolation>,
    },

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),

    #[error("chain complexes are not composable/compatible: {0}")]
    ComplexMismatch(String),

    #[error("structure carriers do not match: {0}")]
    CarrierMismatch(String),

    #[error("image of generator `{generator}` is not a single +1 generator: {image}")]
    NonSimplexImage { generator: String, image: String },

    #[error("no witness with target `{target}` in dimension {dim}")]
    MissingWitness { target: String, dim: usize },

    #[error("basepoint `{0}` is not a vertex of the complex")]
    MissingBasepoint(String),

    #[error("basepoint image `{0}` lies outside the target basepoint's component")]
    BasepointComponent(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
