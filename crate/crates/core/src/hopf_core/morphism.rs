//! Linear maps between Hopf algebras, their verification, and the
//! extension of algebra maps from a smash-product factorization.

use crate::exact_math::{invert, Matrix, Vector};
use crate::groups::FiniteGroup;

use super::algebra::{add_scaled_tensor, HopfAlgebra, TensorElem};
use super::HopfError;

/// A linear map `f : source → target`, stored as a `target.dim × source.dim`
/// matrix whose column `j` is `f(e_j)` in the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMorphism {
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn new(matrix: Matrix) -> Self {
        HopfMorphism { matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &HopfMorphism) -> HopfMorphism {
        HopfMorphism::new(self.matrix.mul_mat(&other.matrix))
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && invert(&self.matrix).is_some()
    }
}

/// Outcome of checking every structure-compatibility law for a linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    /// `f(a·b) = f(a)·f(b)` on all basis pairs.
    pub algebra_map: bool,
    /// `f(1) = 1`.
    pub unit_preserved: bool,
    /// `Δ(f(a)) = (f⊗f)(Δ(a))` on all basis elements.
    pub coalgebra_map: bool,
    /// `ε(f(a)) = ε(a)` on all basis elements.
    pub counit_preserved: bool,
    /// `f∘S = S∘f`; `None` when either side lacks an attached antipode.
    pub antipode_intertwines: Option<bool>,
    pub bijective: bool,
}

impl MorphismReport {
    /// Bialgebra morphism with the antipode condition not failing.
    /// (For bialgebra maps between Hopf algebras the antipode condition is
    /// automatic; this still checks it when both antipodes are attached.)
    pub fn is_hopf_morphism(&self) -> bool {
        self.algebra_map
            && self.unit_preserved
            && self.coalgebra_map
            && self.counit_preserved
            && self.antipode_intertwines != Some(false)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_hopf_morphism() && self.bijective
    }
}

/// Checks every compatibility law of `f` against the given source and
/// target structures.  All checks are exhaustive over basis elements.
pub fn verify_morphism(
    source: &HopfAlgebra,
    target: &HopfAlgebra,
    f: &HopfMorphism,
) -> MorphismReport {
    assert_eq!(f.source_dim(), source.dim, "morphism column count");
    assert_eq!(f.target_dim(), target.dim, "morphism row count");
    let n = source.dim;
    let images: Vec<Vector> = (0..n).map(|j| f.matrix.col_vector(j)).collect();

    let mut algebra_map = true;
    'alg: for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&source.mult.fiber_vector(i, j));
            let rhs = target.mul_vec(&images[i], &images[j]);
            if lhs != rhs {
                algebra_map = false;
                break 'alg;
            }
        }
    }
    let unit_preserved = f.apply(&source.unit) == target.unit;

    let mut coalgebra_map = true;
    for i in 0..n {
        let lhs = target.comult_vec(&images[i]);
        let mut rhs = TensorElem::new();
        for (j, k, d) in source.comult.plane_support(i) {
            add_scaled_tensor(&mut rhs, &target.tensor_of(&images[j], &images[k]), d);
        }
        if lhs != rhs {
            coalgebra_map = false;
            break;
        }
    }
    let counit_preserved =
        (0..n).all(|i| target.counit_vec(&images[i]) == source.counit[i]);

    let antipode_intertwines = match (&source.antipode, &target.antipode) {
        (Some(ss), Some(st)) => Some(f.matrix.mul_mat(ss) == st.mul_mat(&f.matrix)),
        _ => None,
    };

    MorphismReport {
        algebra_map,
        unit_preserved,
        coalgebra_map,
        counit_preserved,
        antipode_intertwines,
        bijective: f.is_bijective(),
    }
}

/// A smash-product reading of an algebra: `dim = a_dim · |G|`, basis
/// `a_i ⋆ g_j` at index `i·|G| + j`, with `G` acting on the `a` factor by
/// the given matrices (one per group element, column `i` = image of `a_i`).
#[derive(Clone, Debug)]
pub struct SmashFactorization {
    pub a_dim: usize,
    pub group: FiniteGroup,
    pub action: Vec<Matrix>,
}

impl SmashFactorization {
    pub fn dim(&self) -> usize {
        self.a_dim * self.group.order
    }

    /// Index of `a_i ⋆ g_j`.
    pub fn index(&self, a: usize, g: usize) -> usize {
        a * self.group.order + g
    }
}

/// Extends `a_i ↦ fa[i]`, `g_j ↦ fh[j]` to the linear map
/// `a_i ⋆ g_j ↦ fa[i]·fh[j]` on a smash product.
///
/// This is an algebra map provided `fh` is multiplicative on the group and
/// the commutation hypothesis `f(g.a)·f(g) = f(g)·f(a)` holds; both are
/// checked here exhaustively (the first failing pair is reported), and the
/// assembled map should still be run through [`verify_morphism`] for the
/// full certification against the actual product structures.
pub fn extend_smash_algebra_map(
    fact: &SmashFactorization,
    fa: &[Vector],
    fh: &[Vector],
    target: &HopfAlgebra,
) -> Result<HopfMorphism, HopfError> {
    let g_ord = fact.group.order;
    if fa.len() != fact.a_dim || fh.len() != g_ord {
        return Err(HopfError::Structure(format!(
            "image counts ({}, {}) do not match factorization ({}, {})",
            fa.len(),
            fh.len(),
            fact.a_dim,
            g_ord
        )));
    }
    if fh[fact.group.identity] != target.unit {
        return Err(HopfError::Structure(
            "group identity must map to the unit".into(),
        ));
    }
    for g in 0..g_ord {
        for h in 0..g_ord {
            if target.mul_vec(&fh[g], &fh[h]) != fh[fact.group.mul(g, h)] {
                return Err(HopfError::Structure(format!(
                    "group images are not multiplicative at pair ({g}, {h})"
                )));
            }
        }
    }
    // f(g.a_i)·f(g) = f(g)·f(a_i) for every group element and basis vector.
    for g in 0..g_ord {
        let act = &fact.action[g];
        for i in 0..fact.a_dim {
            let mut fga = Vector::zeros(target.dim);
            for (m, coeff) in act.col_vector(i).support() {
                fga.add_assign_scaled(&fa[m], coeff);
            }
            let lhs = target.mul_vec(&fga, &fh[g]);
            let rhs = target.mul_vec(&fh[g], &fa[i]);
            if lhs != rhs {
                return Err(HopfError::HypothesisFailed { a: i, h: g });
            }
        }
    }
    let cols: Vec<Vector> = (0..fact.a_dim)
        .flat_map(|i| (0..g_ord).map(move |j| target.mul_vec(&fa[i], &fh[j])))
        .collect();
    Ok(HopfMorphism::new(Matrix::from_cols(&cols)))
}
