//! Exact linear and polynomial algebra over the Gaussian rationals ℚ(i).
//!
//! Everything downstream — Hopf axiom checks, center computations, Wedderburn
//! splitting — reduces to arithmetic in this module, so the ground rules are
//! set here once: scalars are exact (arbitrary-precision rationals for both
//! the real and imaginary part), matrices are dense, elimination is
//! fraction-free in the Bareiss style, and subspaces are kept in reduced
//! row-echelon form so that equality of spans is literal equality of the
//! stored basis.

mod eigen;
mod linalg;
mod matrix;
mod poly;
mod roots;
mod scalar;
mod subspace;

pub use eigen::{char_poly, joint_eigensplit, restrict_operator, Eigenspace};
pub use linalg::{invert, kernel, rank, rref, solve, Rref};
pub use matrix::{Matrix, Tensor3, Vector};
pub use poly::Polynomial;
pub use roots::gaussian_roots;
pub use scalar::{GaussianRational, Rational};
pub use subspace::{intersect, Subspace};

use thiserror::Error;

/// Errors surfaced by exact-arithmetic routines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactMathError {
    /// Attempt to invert the zero scalar.
    #[error("division by zero in Q(i)")]
    DivisionByZero,

    /// A linear system has no solution.
    #[error("linear system is inconsistent")]
    Inconsistent,

    /// An operator's characteristic polynomial does not factor into linear
    /// factors over ℚ(i), or its eigenspaces fail to fill the space.
    #[error("operator does not split over Q(i): {0}")]
    NonSplit(String),

    /// An operator was asked to act on a subspace it does not preserve.
    #[error("operator does not preserve the given subspace")]
    NotInvariant,

    /// Matrix and vector shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
