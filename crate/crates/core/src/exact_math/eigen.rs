//! Characteristic polynomials and joint eigenspace decompositions.
//!
//! `joint_eigensplit` refines a subspace through a family of commuting
//! operators: for each operator in turn, every current piece is split into
//! eigenspaces of the restricted matrix.  Eigenvalues are found exactly as
//! the ℚ(i)-roots of the characteristic polynomial of the restriction; if
//! that polynomial has an irreducible factor of higher degree, or the
//! eigenspaces fail to fill the piece, the split is refused rather than
//! approximated.

use super::linalg::kernel;
use super::matrix::{Matrix, Vector};
use super::poly::Polynomial;
use super::roots::gaussian_roots;
use super::scalar::GaussianRational;
use super::subspace::Subspace;
use super::ExactMathError;

/// One piece of a joint eigenspace decomposition: the eigenvalue of each
/// operator (in input order) and the subspace they cut out.
#[derive(Clone, Debug)]
pub struct Eigenspace {
    pub eigenvalues: Vec<GaussianRational>,
    pub space: Subspace,
}

/// Characteristic polynomial `det(t·I − M)` by the Faddeev–LeVerrier
/// recurrence (exact; only divisions by integers occur).
pub fn char_poly(m: &Matrix) -> Polynomial {
    assert_eq!(m.rows(), m.cols(), "char_poly of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut acc = Matrix::identity(n);
    for k in 1..=n {
        acc = m.mul_mat(&acc);
        let c = -&(&acc.trace() / &GaussianRational::from_int(k as i64));
        for i in 0..n {
            let slot = &acc[(i, i)] + &c;
            acc[(i, i)] = slot;
        }
        coeffs[n - k] = c;
    }
    Polynomial::from_coeffs(coeffs)
}

/// Expresses the action of `op` on `space` in the coordinates of the
/// subspace's canonical basis.  Errors when the operator does not map the
/// subspace into itself.
pub fn restrict_operator(op: &Matrix, space: &Subspace) -> Result<Matrix, ExactMathError> {
    let k = space.dim();
    let mut cols: Vec<Vector> = Vec::with_capacity(k);
    for b in space.basis() {
        let image = op.mul_vec(&b);
        let coords = space
            .coordinates(&image)
            .ok_or(ExactMathError::NotInvariant)?;
        cols.push(coords);
    }
    Ok(Matrix::from_cols(&cols))
}

/// Splits `space` into the joint eigenspaces of the commuting operators.
///
/// The pieces are returned with one eigenvalue per operator, ordered
/// deterministically (roots sorted at every refinement).  The direct sum of
/// the pieces is the whole input space; anything short of that is an error,
/// never a partial answer.
pub fn joint_eigensplit(
    ops: &[Matrix],
    space: &Subspace,
) -> Result<Vec<Eigenspace>, ExactMathError> {
    let mut parts = vec![Eigenspace {
        eigenvalues: Vec::new(),
        space: space.clone(),
    }];
    for op in ops {
        let mut next: Vec<Eigenspace> = Vec::new();
        for part in &parts {
            if part.space.dim() == 0 {
                continue;
            }
            let restricted = restrict_operator(op, &part.space)?;
            let k = restricted.rows();
            let cp = char_poly(&restricted);
            let roots = gaussian_roots(&cp);
            let total: usize = roots.iter().map(|(_, m)| m).sum();
            if total != k {
                return Err(ExactMathError::NonSplit(format!(
                    "characteristic polynomial of degree {k} has only {total} roots in Q(i)"
                )));
            }
            let mut dim_sum = 0;
            for (root, _) in &roots {
                let mut shifted = restricted.clone();
                for i in 0..k {
                    let d = &shifted[(i, i)] - root;
                    shifted[(i, i)] = d;
                }
                let null = kernel(&shifted);
                if null.is_empty() {
                    return Err(ExactMathError::NonSplit(format!(
                        "eigenvalue {root} has empty eigenspace"
                    )));
                }
                // Lift coordinate kernel vectors back to the ambient space.
                let lifted: Vec<Vector> = null
                    .iter()
                    .map(|coords| part.space.from_coordinates(coords))
                    .collect();
                let sub = Subspace::span(space.ambient_dim(), &lifted);
                dim_sum += sub.dim();
                let mut eigenvalues = part.eigenvalues.clone();
                eigenvalues.push(root.clone());
                next.push(Eigenspace {
                    eigenvalues,
                    space: sub,
                });
            }
            if dim_sum != k {
                return Err(ExactMathError::NonSplit(format!(
                    "eigenspaces span dimension {dim_sum} of {k}: operator is not diagonalizable"
                )));
            }
        }
        parts = next;
    }
    Ok(parts)
}
