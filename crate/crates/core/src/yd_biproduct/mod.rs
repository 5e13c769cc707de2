//! Yetter–Drinfel'd Hopf algebras over a group algebra `K[G]` and their
//! Radford biproducts.
//!
//! A [`YDHopfAlgebra`] is a Hopf algebra **in the braided category** of
//! Yetter–Drinfel'd modules over `K[G]`: an ordinary algebra/coalgebra
//! pair whose comultiplication is multiplicative only up to the braiding
//! `σ(v⊗w) = Σ_g (g.w)⊗p_g(v)`.  The data is the same as a plain
//! [`HopfAlgebra`] plus a `G`-action (one matrix per group element) and a
//! `K[G]`-coaction (equivalently, a `G`-grading by projections `p_g`).
//!
//! [`radford_biproduct`] bosonizes such an object into an ordinary Hopf
//! algebra on `A ⊗ K[G]`, the central construction of this crate.  The
//! antipode of the biproduct is always *solved* from the convolution
//! equations and merely cross-checked against its structural formula.

mod biproduct;
mod construct;
mod dual;
#[cfg(test)]
pub(crate) mod fixtures;
mod json;
mod verify;

pub use biproduct::{radford_biproduct, structural_antipode};
pub use construct::{coaction_from_action, cocycle_smash, yd_restrict};
pub use dual::{biproduct_duality_check, dual_yd, DualityReport};
pub use json::{yd_from_json, yd_to_json};
pub use verify::{verify_yd, YdReport};

use thiserror::Error;

use crate::exact_math::{ExactMathError, Matrix, Tensor3, Vector};
use crate::groups::FiniteGroup;
use crate::hopf_core::{HopfAlgebra, HopfError};

/// Errors from Yetter–Drinfel'd constructions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum YdError {
    /// A subspace fails a closure requirement (the text names it).
    #[error("subspace is not closed under {0}")]
    NotClosed(String),

    /// The selected group elements do not form a subgroup.
    #[error("selected elements do not form a subgroup")]
    NotSubgroup,

    /// The solved antipode of a biproduct disagrees with the structural
    /// formula evaluated from the braided antipode.
    #[error("solved biproduct antipode disagrees with the structural formula")]
    AntipodeMismatch,

    /// The assembled object fails Hopf verification.
    #[error("verification failed: {0:?}")]
    NotHopf(Vec<String>),

    #[error(transparent)]
    Hopf(#[from] HopfError),

    #[error(transparent)]
    Math(#[from] ExactMathError),
}

/// A Hopf algebra in the Yetter–Drinfel'd category over `K[G]`.
///
/// Conventions (matching [`HopfAlgebra`]):
/// * `mult[i][j][k]`: coefficient of `e_k` in `e_i·e_j`;
/// * `comult[i][j][k]`: coefficient of `e_j⊗e_k` in `Δ(e_i)`;
/// * `action[g]`: matrix of `v ↦ g.v` (column `i` is `g.e_i`);
/// * `coaction[i][g][k]`: coefficient of `g ⊗ e_k` in `δ(e_i)`, so the
///   projection onto the `g`-graded piece is `p_g(e_i) = Σ_k coaction[i][g][k]·e_k`;
/// * `antipode`, when attached, is the braided antipode (same convolution
///   equations as the ordinary one — the braiding does not enter them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDHopfAlgebra {
    pub group: FiniteGroup,
    /// Dimension of the underlying vector space of `A` (not of `A⊗K[G]`).
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mult: Tensor3,
    pub unit: Vector,
    pub comult: Tensor3,
    pub counit: Vector,
    pub antipode: Option<Matrix>,
    pub action: Vec<Matrix>,
    pub coaction: Tensor3,
}

impl YDHopfAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        group: FiniteGroup,
        basis_labels: Vec<String>,
        mult: Tensor3,
        unit: Vector,
        comult: Tensor3,
        counit: Vector,
        antipode: Option<Matrix>,
        action: Vec<Matrix>,
        coaction: Tensor3,
    ) -> Self {
        let dim = unit.len();
        assert_eq!(mult.dims(), (dim, dim, dim), "mult shape");
        assert_eq!(comult.dims(), (dim, dim, dim), "comult shape");
        assert_eq!(counit.len(), dim, "counit length");
        assert_eq!(basis_labels.len(), dim, "label count");
        assert_eq!(action.len(), group.order, "one action matrix per group element");
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "action shape");
        }
        assert_eq!(coaction.dims(), (dim, group.order, dim), "coaction shape");
        if let Some(s) = &antipode {
            assert_eq!((s.rows(), s.cols()), (dim, dim), "antipode shape");
        }
        YDHopfAlgebra {
            group,
            dim,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            action,
            coaction,
        }
    }

    /// The underlying plain algebra/coalgebra data, forgetting the action
    /// and coaction.  The result is generally **not** a bialgebra — its
    /// comultiplication is only braided-multiplicative — but every
    /// single-structure law can be checked on it, and the braided antipode
    /// can be solved on it because the convolution equations do not
    /// involve the braiding.
    pub fn plain(&self) -> HopfAlgebra {
        HopfAlgebra::new(
            self.basis_labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            self.antipode.clone(),
        )
    }

    /// Matrix of the projection `p_g` onto the `g`-graded component.
    pub fn projection(&self, g: usize) -> Matrix {
        let mut p = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for (h, k, v) in self.coaction.plane_support(i) {
                if h == g {
                    p[(k, i)] = v.clone();
                }
            }
        }
        p
    }

    /// Applies `g` to a vector.
    pub fn act(&self, g: usize, v: &Vector) -> Vector {
        self.action[g].mul_vec(v)
    }

    /// Solves the braided antipode on the plain structure and attaches it.
    pub fn attach_antipode(&mut self) -> Result<(), YdError> {
        let s = crate::hopf_core::solve_antipode(&self.plain())?;
        self.antipode = Some(s);
        Ok(())
    }
}
