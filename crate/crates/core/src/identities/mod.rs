//! The catalog of determinantal identities, their specialisations and the
//! fixtures that show where naive generalisations break.

pub mod checks;
pub mod generic;
mod report;

use thiserror::Error;

use crate::matrix::MatrixError;
use crate::ring::RingError;

pub use checks::*;
pub use generic::{
    find_charpoly_counterexample, fraction_proof_check, generic_matrices, make_generic_triple, proof, proofs,
    prove_identity_generic, GenericProof, GenericTriple,
};
pub use report::{render, render_capped, render_matrix, CheckKind, IdentityReport, Stats, DEFAULT_SIZE_CAP};

/// Stable identifiers of the catalog entries.
pub const IDENTITY_IDS: [&str; 12] = [
    "ternary-det",
    "ternary-units",
    "trace",
    "sylvester",
    "theorem32",
    "jacobson",
    "super-jacobson",
    "example31",
    "example33",
    "phk",
    "trace-cx",
    "fraction-proof",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
