//! Certified block decomposition of a semisimple algebra over ℚ(i),
//! irreducible characters, and the dual (coalgebra) decomposition.

use crate::exact_math::{
    char_poly, gaussian_roots, joint_eigensplit, restrict_operator, solve,
    GaussianRational, Matrix, Subspace, Vector,
};
use crate::hopf_core::{dual_hopf, integrals, HopfAlgebra};

use super::structure::center;
use super::AnalysisError;

/// One matrix block `M_d(ℚ(i))` of a semisimple algebra.
#[derive(Clone, Debug)]
pub struct Block {
    /// Matrix size `d`; the block has dimension `d²`.
    pub size: usize,
    /// The primitive central idempotent projecting onto this block.
    pub idempotent: Vector,
    /// The block itself as a subspace of the algebra.
    pub space: Subspace,
}

/// A complete, verified decomposition into matrix blocks.
#[derive(Clone, Debug)]
pub struct WedderburnData {
    /// The blocks, in the deterministic order of the central eigensplit.
    pub blocks: Vec<Block>,
}

impl WedderburnData {
    /// Block sizes as an ascending multiset, e.g. `[1, 1, 1, 1, 2]`.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(|b| b.size).collect();
        s.sort_unstable();
        s
    }
}

/// Seeks an idempotent `q` strictly between `0` and `p` inside the corner
/// `pHp`, by splitting the spectrum of some corner element.
fn find_spectral_idempotent(
    h: &HopfAlgebra,
    p: &Vector,
    corner: &Subspace,
) -> Result<Vector, AnalysisError> {
    let basis = corner.basis();
    let mut candidates: Vec<Vector> = basis.clone();
    'outer: for a in &basis {
        for b in &basis {
            if candidates.len() >= 200 {
                break 'outer;
            }
            candidates.push(h.mul_vec(a, b));
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(i + 1) {
            if candidates.len() >= 240 {
                break;
            }
            candidates.push(a.add(b));
        }
    }

    for a in &candidates {
        let op = restrict_operator(&h.left_mult_matrix(a), corner)?;
        let cp = char_poly(&op);
        let roots = gaussian_roots(&cp);
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        if Some(total) != cp.degree() || roots.len() < 2 {
            continue;
        }
        // Lagrange projector onto the first eigenvalue:
        //   q = Π_{j≥1} (a − λ_j p) / (λ_0 − λ_j).
        let lambda0 = &roots[0].0;
        let mut q = p.clone();
        let mut scale = GaussianRational::one();
        for (lambda, _) in roots.iter().skip(1) {
            q = h.mul_vec(&q, &a.sub(&p.scale(lambda)));
            scale = &scale * &(lambda0 - lambda).inv().expect("distinct roots");
        }
        q = q.scale(&scale);
        // Candidates with repeated eigenvalues in their minimal polynomial
        // fail the idempotent check and are skipped.
        if q.is_zero() || &q == p || !corner.contains(&q) {
            continue;
        }
        if h.mul_vec(&q, &q) != q {
            continue;
        }
        return Ok(q);
    }
    Err(AnalysisError::SplitCertificationFailed(format!(
        "no splitting element found in a corner of dimension {}",
        corner.dim()
    )))
}

/// Certifies that a simple block with unit `p` is a matrix algebra over
/// ℚ(i), returning its size `d`.
///
/// Walks a strictly descending chain of corners `qHq` until one is
/// one-dimensional, which pins the underlying division algebra to ℚ(i)
/// itself.
fn certify_block_size(
    h: &HopfAlgebra,
    p: &Vector,
    block: &Subspace,
) -> Result<usize, AnalysisError> {
    let n = h.dim;
    let m = block.dim();
    let corner_of = |p: &Vector, spanning: &[Vector]| -> Subspace {
        let images: Vec<Vector> = spanning
            .iter()
            .map(|v| h.mul_many(&[p, v, p]))
            .collect();
        Subspace::span(n, &images)
    };
    let mut p = p.clone();
    let mut corner = corner_of(&p, &block.basis());
    while corner.dim() > 1 {
        let q = find_spectral_idempotent(h, &p, &corner)?;
        let smaller = corner_of(&q, &corner.basis());
        if smaller.dim() == 0 || smaller.dim() >= corner.dim() {
            return Err(AnalysisError::SplitCertificationFailed(
                "corner chain failed to descend".into(),
            ));
        }
        p = q;
        corner = smaller;
    }
    let d = (1..).find(|d| d * d >= m).expect("bounded");
    if d * d != m {
        return Err(AnalysisError::SplitCertificationFailed(format!(
            "matrix block of non-square dimension {m}"
        )));
    }
    Ok(d)
}

/// Decomposes a semisimple algebra into matrix blocks over ℚ(i), with
/// every step certified by explicit idempotent arithmetic.
///
/// Errors with [`AnalysisError::NotSemisimple`] when `ε(Λ) = 0`, with
/// `NonSplit` when the center has eigenvalues outside ℚ(i), and with
/// [`AnalysisError::SplitCertificationFailed`] when some block resists
/// certification as a full matrix algebra.
pub fn wedderburn(h: &HopfAlgebra) -> Result<WedderburnData, AnalysisError> {
    let n = h.dim;
    if !integrals(h)?.semisimple {
        return Err(AnalysisError::NotSemisimple);
    }
    let z = center(h);
    let ops: Vec<Matrix> = z
        .basis()
        .iter()
        .map(|b| h.left_mult_matrix(b))
        .collect();
    let parts = joint_eigensplit(&ops, &Subspace::full(n))?;

    // Resolve the unit into its block components; these are the primitive
    // central idempotents.
    let mut cols: Vec<Vector> = Vec::with_capacity(n);
    let mut segments = Vec::with_capacity(parts.len());
    for part in &parts {
        let start = cols.len();
        cols.extend(part.space.basis());
        segments.push((start, cols.len()));
    }
    if cols.len() != n {
        return Err(AnalysisError::Structure(
            "central eigenspaces do not fill the algebra".into(),
        ));
    }
    let coords = solve(&Matrix::from_cols(&cols), &h.unit)?;
    let mut idempotents = Vec::with_capacity(parts.len());
    for &(start, end) in &segments {
        let mut e = Vector::zeros(n);
        for c in start..end {
            e.add_assign_scaled(&cols[c], &coords[c]);
        }
        idempotents.push(e);
    }

    // Verify the idempotent system before trusting it.
    let mut total = Vector::zeros(n);
    for (k, e) in idempotents.iter().enumerate() {
        if h.mul_vec(e, e) != *e || !z.contains(e) {
            return Err(AnalysisError::Structure(
                "block projection is not a central idempotent".into(),
            ));
        }
        for other in idempotents.iter().skip(k + 1) {
            if !h.mul_vec(e, other).is_zero() {
                return Err(AnalysisError::Structure(
                    "block projections are not orthogonal".into(),
                ));
            }
        }
        total = total.add(e);
    }
    if total != h.unit {
        return Err(AnalysisError::Structure(
            "block projections do not sum to the unit".into(),
        ));
    }

    let mut blocks = Vec::with_capacity(parts.len());
    for (part, e) in parts.into_iter().zip(idempotents) {
        let size = certify_block_size(h, &e, &part.space)?;
        blocks.push(Block {
            size,
            idempotent: e,
            space: part.space,
        });
    }
    Ok(WedderburnData { blocks })
}

/// Irreducible characters, one per block, as value vectors on the basis:
/// `χ_k(e_i) = tr(L_{e_i·p_k}) / d_k`.
pub fn irreducible_characters(
    h: &HopfAlgebra,
    data: &WedderburnData,
) -> Result<Vec<Vector>, AnalysisError> {
    let n = h.dim;
    let mut chars = Vec::with_capacity(data.blocks.len());
    for block in &data.blocks {
        let d = GaussianRational::from_int(block.size as i64);
        let d_inv = d.inv().expect("positive size");
        let chi = Vector::from_fn(n, |i| {
            let x = h.mul_vec(&h.basis_vector(i), &block.idempotent);
            &h.left_mult_matrix(&x).trace() * &d_inv
        });
        if chi.dot(&h.unit) != d {
            return Err(AnalysisError::Structure(
                "character degree does not match its block size".into(),
            ));
        }
        chars.push(chi);
    }
    Ok(chars)
}

/// Decomposes a cosemisimple Hopf algebra into its simple subcoalgebras.
///
/// Each subcoalgebra is the image of the projection `x ↦ (id ⊗ f)Δx` for a
/// primitive central idempotent `f` of the dual algebra, and has dimension
/// `d²` for the corresponding dual block size `d`.  The subspaces are
/// verified to fill the whole space.
pub fn coalgebra_blocks(h: &HopfAlgebra) -> Result<Vec<Subspace>, AnalysisError> {
    let n = h.dim;
    let dual = dual_hopf(h);
    let data = wedderburn(&dual)?;
    let mut spaces = Vec::with_capacity(data.blocks.len());
    let mut sum = Subspace::zero(n);
    for block in &data.blocks {
        let f = &block.idempotent;
        let mut proj = Matrix::zeros(n, n);
        for i in 0..n {
            for (j, k, c) in h.comult.plane_support(i) {
                if !f[k].is_zero() {
                    proj[(j, i)] += &(c * &f[k]);
                }
            }
        }
        let image = Subspace::span(n, &(0..n).map(|i| proj.col_vector(i)).collect::<Vec<_>>());
        if image.dim() != block.size * block.size {
            return Err(AnalysisError::Structure(format!(
                "subcoalgebra of dimension {} attached to a block of size {}",
                image.dim(),
                block.size
            )));
        }
        sum = sum.sum(&image);
        spaces.push(image);
    }
    if sum.dim() != n {
        return Err(AnalysisError::Structure(
            "simple subcoalgebras do not fill the space".into(),
        ));
    }
    Ok(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, dual_group_algebra, group_algebra, GroupSpec};
    use crate::hopf_core::fixtures::{kzn, taft2};

    #[test]
    fn group_algebra_block_sizes_match_the_irreducible_degrees() {
        let d8 = group_algebra(&build_group(&GroupSpec::Dihedral(4)));
        let data = wedderburn(&d8).unwrap();
        assert_eq!(data.sizes(), vec![1, 1, 1, 1, 2]);

        let z4 = kzn(4);
        assert_eq!(wedderburn(&z4).unwrap().sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn quaternion_group_algebra_splits_over_the_gaussian_field() {
        // The 4-dimensional block is a quaternion algebra; over ℚ(i) it
        // must be certified as 2×2 matrices.
        let q8 = group_algebra(&build_group(&GroupSpec::Quaternion8));
        let data = wedderburn(&q8).unwrap();
        assert_eq!(data.sizes(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn non_semisimple_algebras_are_rejected() {
        assert_eq!(
            wedderburn(&taft2()).unwrap_err(),
            AnalysisError::NotSemisimple
        );
    }

    #[test]
    fn characters_reconstruct_the_regular_trace() {
        let d8 = group_algebra(&build_group(&GroupSpec::Dihedral(4)));
        let data = wedderburn(&d8).unwrap();
        let chars = irreducible_characters(&d8, &data).unwrap();
        // Σ d_k·χ_k is the regular character: 8 at the identity, 0 elsewhere.
        let mut regular = Vector::zeros(8);
        for (block, chi) in data.blocks.iter().zip(&chars) {
            let d = GaussianRational::from_int(block.size as i64);
            regular.add_assign_scaled(chi, &d);
        }
        let mut expected = Vector::zeros(8);
        expected[0] = GaussianRational::from_int(8);
        assert_eq!(regular, expected);
        // The 2-dimensional character takes the value −2 at r².
        let two_dim = data
            .blocks
            .iter()
            .zip(&chars)
            .find(|(b, _)| b.size == 2)
            .map(|(_, chi)| chi)
            .unwrap();
        assert_eq!(two_dim[2], GaussianRational::from_int(-2));
    }

    #[test]
    fn coalgebra_blocks_of_group_algebras_and_duals() {
        // A group algebra is pointed: all subcoalgebras are 1-dimensional.
        let d8 = group_algebra(&build_group(&GroupSpec::Dihedral(4)));
        let blocks = coalgebra_blocks(&d8).unwrap();
        assert_eq!(blocks.len(), 8);
        assert!(blocks.iter().all(|c| c.dim() == 1));

        // The dual carries the D₈ representation theory on the coalgebra
        // side: four 1-dimensional subcoalgebras and one of dimension 4.
        let dual = dual_group_algebra(&build_group(&GroupSpec::Dihedral(4)));
        let mut dims: Vec<usize> =
            coalgebra_blocks(&dual).unwrap().iter().map(|c| c.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 1, 1, 4]);
    }
}
