//! The concrete objects under study: two eight-dimensional Yetter–Drinfel'd
//! Hopf algebras over `K[ℤ₂×ℤ₂]`, their 32-dimensional Radford biproducts,
//! and every named element, subalgebra, quotient, and canonical map that
//! the verification suite examines.
//!
//! A [`Scenario`] packages one choice of presentation parameter ζ (a fourth
//! root of unity) and one of the two [`Variant`]s.  Everything inside it is
//! constructed from the defining relations by exact arithmetic: the
//! generator presentation is rewritten to a monomial model, changed to the
//! basis of group-like elements, equipped with its action and coaction, and
//! bosonized.  Nothing is entered as a bare structure-constant table.
//!
//! [`fixtures`] freezes the expected values — coordinates of the named
//! elements, displayed coproducts and antipodes, the center basis, and the
//! character tables — into a versioned JSON document that is checked into
//! the repository and diffed against regeneration on every test run.

mod fixtures;
mod model;
mod scenario;
mod suite;

pub use fixtures::{
    fixture_document, fixture_scenario, subspace_json, tensor_json, vector_json, FIXTURES_JSON,
};
pub use model::{
    build_yd, klein_bicharacter, klein_group, zeta_by_name, zeta_name, zeta_values, Variant,
    ZETA_NAMES,
};
pub use scenario::{biproduct_iso, Scenario};
pub use suite::{
    criterion_name, fixture_record, run_criteria, run_criterion, Check, CriterionResult,
    SuiteContext, CRITERION_COUNT,
};

use thiserror::Error;

use crate::analysis::AnalysisError;
use crate::exact_math::ExactMathError;
use crate::hopf_core::HopfError;
use crate::yd_biproduct::YdError;

/// Errors from catalogued constructions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CatalogError {
    /// The presentation parameter must be a fourth root of unity.
    #[error("the parameter must be a fourth root of unity, got {0}")]
    InvalidZeta(String),

    /// A requested named object does not exist in the catalog.
    #[error("unknown object: {0}")]
    UnknownObject(String),

    /// A constructed object failed an internal consistency check (the text
    /// says which).
    #[error("{0}")]
    Inconsistent(String),

    #[error(transparent)]
    Yd(#[from] YdError),

    #[error(transparent)]
    Hopf(#[from] HopfError),

    #[error(transparent)]
    Analysis(#[from] AnalysisError),

    #[error(transparent)]
    Math(#[from] ExactMathError),
}
