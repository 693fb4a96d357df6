//! Constructive equivalences between A+B−AXB and A+B−BXA: the block
//! identities behind the determinant argument, an explicit SL witness for
//! the suspended pair, the direct witness for invertible A and B, and
//! screening invariants for a pair claimed to be inequivalent.

mod blocks;
mod invariants;
mod smith;
mod witness;

use thiserror::Error;

use crate::matrix::MatrixError;
use crate::ring::RingError;

pub use blocks::{verify_block_identity_24, verify_block_identity_25, verify_block_identity_26};
pub use invariants::{
    all_minors, invariant_profile, nonequivalence_fixture, InvariantProfile, NonEquivalenceFixture,
    DEFAULT_EVALUATION_RANGE,
};
pub use smith::{smith_normal_form, SmithForm};
pub use witness::{direct_equivalence_witness, sl_witness, Factor, SlWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivalenceError {
    #[error("witness verification failed: {0}")]
    Verification(String),
    #[error("{which} is not invertible (determinant {det})")]
    NotInvertible { which: &'static str, det: String },
    #[error("Smith normal form needs an integer matrix, got {0}")]
    NotIntegral(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
