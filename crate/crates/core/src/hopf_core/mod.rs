//! Hopf algebras as structure constants, and everything that can be checked
//! about them by finite exhaustive computation.
//!
//! A [`HopfAlgebra`] is nothing but tensors: multiplication and
//! comultiplication structure constants in one shared index convention, a
//! unit vector, a counit covector, and (optionally) an antipode matrix.  All
//! axioms — associativity, coassociativity, compatibility, the antipode
//! convolution equations — are verified by looping over basis tuples, which
//! is exact and complete in the dimensions this library works at (≤ 32).
//!
//! The antipode is never entered by hand anywhere in this crate: it is
//! always produced by [`solve_antipode`], which solves the convolution
//! equations, so any closed-form antipode formula checked against it is a
//! verified consequence rather than an input.

mod algebra;
mod antipode;
mod dual;
mod json;
mod morphism;
mod span;

pub use algebra::{HopfAlgebra, HopfReport, TensorElem};
pub(crate) use algebra::add_scaled_tensor;
pub use antipode::{integrals, solve_antipode, IntegralData};
pub use dual::{comm_flags, dual_hopf};
pub use json::{group_from_json, group_to_json, hopf_from_json, hopf_to_json};
pub(crate) use json::{field, matrix_json, parse_array, parse_matrix, parse_tensor, tensor_json};
pub use morphism::{
    extend_smash_algebra_map, verify_morphism, HopfMorphism, MorphismReport, SmashFactorization,
};
pub use span::monomial_span_check;

#[cfg(test)]
pub(crate) mod fixtures;

use thiserror::Error;

use crate::exact_math::ExactMathError;

/// Errors from Hopf-algebra level computations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HopfError {
    /// The convolution equations for an antipode have no solution.
    #[error("bialgebra admits no antipode")]
    NoAntipode,

    /// An integral space does not have the dimension a Hopf algebra requires.
    #[error("integral space has dimension {0}, expected 1")]
    IntegralDimension(usize),

    /// The commutation hypothesis of the smash-extension corollary fails on
    /// a specific basis pair.
    #[error("smash commutation hypothesis fails at algebra basis {a}, group basis {h}")]
    HypothesisFailed { a: usize, h: usize },

    /// Malformed or inconsistent serialized data.
    #[error("invalid serialized object: {0}")]
    Json(String),

    /// A structural expectation (shape, closure, verification) failed.
    #[error("{0}")]
    Structure(String),

    #[error(transparent)]
    Math(#[from] ExactMathError),
}
