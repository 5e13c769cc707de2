//! Structural invariants of a finished Hopf algebra, each one certified.
//!
//! Everything here takes a plain [`HopfAlgebra`](crate::HopfAlgebra) and
//! produces verified structure: centers as canonical subspaces, group-like
//! elements (each checked against `Δg = g⊗g`), Wedderburn decompositions
//! whose block sizes are certified by explicit idempotent chains,
//! enumerations of Hopf subalgebras as sums of simple subcoalgebras,
//! quotient Hopf algebras with their projections, extension verification,
//! and Grothendieck rings computed from irreducible characters.
//!
//! No invariant is ever reported from a formula alone: every idempotent is
//! squared, every character is tested for multiplicativity, every claimed
//! decomposition is recombined.  When certification is impossible over
//! ℚ(i) — an eigenvalue outside the field, a division-algebra block — the
//! functions return an error instead of an approximation.

mod grothendieck;
mod quotient;
mod structure;
mod subalgebras;
mod wedderburn;

pub use grothendieck::{convolution_product, decompose_character, grothendieck_table};
pub use quotient::{
    coinvariants, quotient_by_hopf_ideal, quotient_hopf, verify_extension, ExtensionReport,
};
pub use structure::{
    algebra_characters, center, central_grouplikes, grouplike_group, grouplikes, recognize_hopf,
};
pub use subalgebras::{
    generated_hopf_subalgebra, hopf_ideals_of_dim, hopf_subalgebras_of_dim,
    is_normal_hopf_subalgebra, restrict_hopf,
};
pub use wedderburn::{coalgebra_blocks, irreducible_characters, wedderburn, Block, WedderburnData};

use thiserror::Error;

use crate::exact_math::ExactMathError;
use crate::hopf_core::HopfError;

/// Errors from structural analysis.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AnalysisError {
    /// The algebra is not semisimple, so a Wedderburn decomposition does
    /// not exist.
    #[error("algebra is not semisimple")]
    NotSemisimple,

    /// A matrix-block size could not be certified by an idempotent chain
    /// over ℚ(i).
    #[error("could not certify a full matrix-block splitting: {0}")]
    SplitCertificationFailed(String),

    /// A Grothendieck-ring product failed to decompose into irreducible
    /// characters with nonnegative integer coefficients.
    #[error("character decomposition is not a nonnegative integer combination: {0}")]
    NotIntegral(String),

    /// An assembled quotient failed Hopf verification.
    #[error("verification failed: {0:?}")]
    NotHopf(Vec<String>),

    /// A structural expectation failed (the text says which).
    #[error("{0}")]
    Structure(String),

    #[error(transparent)]
    Hopf(#[from] HopfError),

    #[error(transparent)]
    Math(#[from] ExactMathError),
}
