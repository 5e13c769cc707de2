//! Hopf subalgebras: generation, exhaustive enumeration by dimension, and
//! normality under both adjoint actions.

use crate::exact_math::{kernel, Matrix, Subspace, Tensor3, Vector};
use crate::hopf_core::{dual_hopf, HopfAlgebra};

use super::wedderburn::coalgebra_blocks;
use super::AnalysisError;

/// Left and right tensor components of `Δv`, the matrix-coefficient span
/// that any subcoalgebra containing `v` must contain.
fn comult_components(h: &HopfAlgebra, v: &Vector) -> Vec<Vector> {
    let n = h.dim;
    let mut left = vec![Vector::zeros(n); n];
    let mut right = vec![Vector::zeros(n); n];
    for ((a, b), c) in h.comult_vec(v) {
        left[b][a] += &c;
        right[a][b] += &c;
    }
    left.into_iter()
        .chain(right)
        .filter(|w| !w.is_zero())
        .collect()
}

/// The smallest Hopf subalgebra containing the given elements.
///
/// Saturates the span of the unit and the generators under multiplication,
/// the antipode, and comultiplication components until it stabilizes.
pub fn generated_hopf_subalgebra(
    h: &HopfAlgebra,
    gens: &[Vector],
) -> Result<Subspace, AnalysisError> {
    let n = h.dim;
    let antipode = h.antipode.as_ref().ok_or_else(|| {
        AnalysisError::Structure("generation requires an antipode".into())
    })?;
    let mut seed = vec![h.unit.clone()];
    seed.extend_from_slice(gens);
    let mut space = Subspace::span(n, &seed);
    loop {
        let before = space.dim();
        let basis = space.basis();
        let mut extra: Vec<Vector> = Vec::new();
        for v in &basis {
            for w in &basis {
                extra.push(h.mul_vec(v, w));
            }
            extra.push(antipode.mul_vec(v));
            extra.extend(comult_components(h, v));
        }
        space = space.sum(&Subspace::span(n, &extra));
        if space.dim() == before {
            return Ok(space);
        }
    }
}

/// Every Hopf subalgebra of the given dimension, for a cosemisimple Hopf
/// algebra.
///
/// Cosemisimplicity makes any subcoalgebra a direct sum of the simple
/// subcoalgebra blocks, so the enumeration over block subsets containing
/// the unit's block is exhaustive; each candidate sum is kept when it is
/// closed under multiplication and the antipode.
pub fn hopf_subalgebras_of_dim(
    h: &HopfAlgebra,
    dim: usize,
) -> Result<Vec<Subspace>, AnalysisError> {
    let n = h.dim;
    let antipode = h.antipode.as_ref().ok_or_else(|| {
        AnalysisError::Structure("enumeration requires an antipode".into())
    })?;
    let blocks = coalgebra_blocks(h)?;
    let unit_block = blocks
        .iter()
        .position(|c| c.contains(&h.unit))
        .ok_or_else(|| {
            AnalysisError::Structure("no simple subcoalgebra contains the unit".into())
        })?;
    let others: Vec<usize> = (0..blocks.len()).filter(|&k| k != unit_block).collect();

    let mut found = Vec::new();
    for mask in 0..(1u64 << others.len()) {
        let mut total = blocks[unit_block].dim();
        let mut chosen = vec![unit_block];
        for (bit, &k) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                total += blocks[k].dim();
                chosen.push(k);
            }
        }
        if total != dim {
            continue;
        }
        let mut space = Subspace::zero(n);
        for &k in &chosen {
            space = space.sum(&blocks[k]);
        }
        let basis = space.basis();
        let closed = basis.iter().all(|v| space.contains(&antipode.mul_vec(v)))
            && basis
                .iter()
                .all(|v| basis.iter().all(|w| space.contains(&h.mul_vec(v, w))));
        if closed {
            found.push(space);
        }
    }
    Ok(found)
}

/// Every Hopf ideal of the given dimension, for a Hopf algebra whose dual
/// can be enumerated (i.e. a semisimple one).
///
/// Under the evaluation pairing, a Hopf ideal `J ⊆ H` and the Hopf
/// subalgebra `J^⊥ ⊆ H*` determine each other: `J^⊥` is a subalgebra
/// because `J` is a coideal, a subcoalgebra because `J` is an ideal, and
/// antipode-stable because `S(J) ⊆ J`; taking annihilators twice returns
/// the original space.  So the Hopf ideals of dimension `d` are exactly
/// the annihilators of the dual's Hopf subalgebras of dimension
/// `dim H − d`, and that enumeration is exhaustive.
pub fn hopf_ideals_of_dim(
    h: &HopfAlgebra,
    dim: usize,
) -> Result<Vec<Subspace>, AnalysisError> {
    if dim > h.dim {
        return Ok(Vec::new());
    }
    let dual = dual_hopf(h);
    let subs = hopf_subalgebras_of_dim(&dual, h.dim - dim)?;
    Ok(subs.iter().map(|x| annihilator(h.dim, x)).collect())
}

/// The annihilator `{v : φ(v) = 0 for all φ ∈ X}` of a subspace of the
/// dual, as a subspace of the original space.
fn annihilator(n: usize, x: &Subspace) -> Subspace {
    if x.dim() == 0 {
        return Subspace::full(n);
    }
    Subspace::span(n, &kernel(&Matrix::from_rows(&x.basis())))
}

/// The Hopf algebra structure of `H` transported onto a subspace that is
/// closed under multiplication, comultiplication, and the antipode, in the
/// subspace's canonical basis.
///
/// Closure is not assumed: multiplication and antipode images are
/// expressed through [`Subspace::coordinates`], and the comultiplication
/// of each basis vector is factored through basis ⊗ basis; any failure
/// returns an error naming the operation.  Basis vectors that are scalar
/// multiples of a single parent basis vector keep the parent's label.
pub fn restrict_hopf(h: &HopfAlgebra, sub: &Subspace) -> Result<HopfAlgebra, AnalysisError> {
    let d = sub.dim();
    let basis = sub.basis();
    let not_closed =
        |what: &str| AnalysisError::Structure(format!("subspace is not closed under {what}"));

    let mut mult = Tensor3::zeros(d, d, d);
    for a in 0..d {
        for b in 0..d {
            let prod = h.mul_vec(&basis[a], &basis[b]);
            let coords = sub.coordinates(&prod).ok_or_else(|| not_closed("multiplication"))?;
            for (k, v) in coords.support() {
                mult.set(a, b, k, v.clone());
            }
        }
    }
    let unit = sub.coordinates(&h.unit).ok_or_else(|| not_closed("the unit"))?;

    // Δ(basis[a]) = Σ coeffs[k][l] · basis[k]⊗basis[l] is produced by two
    // rounds of coordinates: columns first, then rows of the half-reduced
    // table.
    let mut comult = Tensor3::zeros(d, d, d);
    for a in 0..d {
        let mut table = Matrix::zeros(h.dim, h.dim);
        for ((i, j), c) in h.comult_vec(&basis[a]) {
            table[(i, j)] = c;
        }
        let mut half = Matrix::zeros(d, h.dim);
        for j in 0..h.dim {
            let col = sub
                .coordinates(&table.col_vector(j))
                .ok_or_else(|| not_closed("comultiplication"))?;
            for k in 0..d {
                half[(k, j)] = col[k].clone();
            }
        }
        for k in 0..d {
            let row = sub
                .coordinates(&half.row_vector(k))
                .ok_or_else(|| not_closed("comultiplication"))?;
            for (l, v) in row.support() {
                comult.set(a, k, l, v.clone());
            }
        }
    }
    let counit = Vector::from_fn(d, |a| h.counit_vec(&basis[a]));

    let antipode = match &h.antipode {
        None => None,
        Some(s) => {
            let mut m = Matrix::zeros(d, d);
            for a in 0..d {
                let coords = sub
                    .coordinates(&s.mul_vec(&basis[a]))
                    .ok_or_else(|| not_closed("the antipode"))?;
                for k in 0..d {
                    m[(k, a)] = coords[k].clone();
                }
            }
            Some(m)
        }
    };

    let labels = basis
        .iter()
        .enumerate()
        .map(|(a, v)| {
            let mut support = v.support();
            match (support.next(), support.next()) {
                (Some((i, _)), None) => h.basis_labels[i].clone(),
                _ => format!("v{a}"),
            }
        })
        .collect();
    Ok(HopfAlgebra::new(labels, mult, unit, comult, counit, antipode))
}

/// Whether a Hopf subalgebra is stable under both adjoint actions:
/// `Σ a₍₁₎·k·S(a₍₂₎) ∈ K` and `Σ S(a₍₁₎)·k·a₍₂₎ ∈ K` for all `a`.
pub fn is_normal_hopf_subalgebra(
    h: &HopfAlgebra,
    sub: &Subspace,
) -> Result<bool, AnalysisError> {
    let n = h.dim;
    let antipode = h.antipode.as_ref().ok_or_else(|| {
        AnalysisError::Structure("normality requires an antipode".into())
    })?;
    let s_col = |b: usize| antipode.col_vector(b);
    for k in &sub.basis() {
        for i in 0..n {
            let mut left_adj = Vector::zeros(n);
            let mut right_adj = Vector::zeros(n);
            for (a, b, c) in h.comult.plane_support(i) {
                let ea = h.basis_vector(a);
                let eb = h.basis_vector(b);
                left_adj.add_assign_scaled(&h.mul_many(&[&ea, k, &s_col(b)]), c);
                right_adj.add_assign_scaled(&h.mul_many(&[&s_col(a), k, &eb]), c);
            }
            if !sub.contains(&left_adj) || !sub.contains(&right_adj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, group_algebra, GroupSpec};
    use crate::hopf_core::fixtures::taft2;
    use crate::hopf_core::solve_antipode;

    fn kd8() -> HopfAlgebra {
        group_algebra(&build_group(&GroupSpec::Dihedral(4)))
    }

    #[test]
    fn generation_in_a_group_algebra_tracks_the_generated_subgroup() {
        let h = kd8();
        // ⟨r⟩ has order 4, ⟨s⟩ order 2, ⟨r, s⟩ is everything.
        let r = generated_hopf_subalgebra(&h, &[h.basis_vector(1)]).unwrap();
        assert_eq!(r.dim(), 4);
        for i in 0..4 {
            assert!(r.contains(&h.basis_vector(i)));
        }
        let s = generated_hopf_subalgebra(&h, &[h.basis_vector(4)]).unwrap();
        assert_eq!(s.dim(), 2);
        let both =
            generated_hopf_subalgebra(&h, &[h.basis_vector(1), h.basis_vector(4)]).unwrap();
        assert_eq!(both.dim(), 8);
    }

    #[test]
    fn the_skew_primitive_part_generates_all_of_taft() {
        let mut t = taft2();
        t.antipode = Some(solve_antipode(&t).unwrap());
        // Δx = x⊗1 + g⊗x drags in g, and products then fill the algebra.
        let x = generated_hopf_subalgebra(&t, &[t.basis_vector(2)]).unwrap();
        assert_eq!(x.dim(), 4);
        let g = generated_hopf_subalgebra(&t, &[t.basis_vector(1)]).unwrap();
        assert_eq!(g.dim(), 2);
    }

    #[test]
    fn dihedral_group_algebra_subalgebra_counts_match_subgroup_counts() {
        let h = kd8();
        // D₈ has five subgroups of order 2 and three of order 4.
        assert_eq!(hopf_subalgebras_of_dim(&h, 2).unwrap().len(), 5);
        assert_eq!(hopf_subalgebras_of_dim(&h, 4).unwrap().len(), 3);
        assert_eq!(hopf_subalgebras_of_dim(&h, 8).unwrap().len(), 1);
        assert_eq!(hopf_subalgebras_of_dim(&h, 1).unwrap().len(), 1);
        assert_eq!(hopf_subalgebras_of_dim(&h, 3).unwrap().len(), 0);
    }

    #[test]
    fn normality_in_the_dihedral_group_algebra() {
        let h = kd8();
        let rotations = generated_hopf_subalgebra(&h, &[h.basis_vector(1)]).unwrap();
        assert!(is_normal_hopf_subalgebra(&h, &rotations).unwrap());
        let reflection = generated_hopf_subalgebra(&h, &[h.basis_vector(4)]).unwrap();
        assert!(!is_normal_hopf_subalgebra(&h, &reflection).unwrap());
        let center_sub = generated_hopf_subalgebra(&h, &[h.basis_vector(2)]).unwrap();
        assert!(is_normal_hopf_subalgebra(&h, &center_sub).unwrap());
    }

    #[test]
    fn ideals_of_a_group_algebra_are_augmentation_ideals_of_normal_subgroups() {
        use super::super::quotient_by_hopf_ideal;
        use super::super::recognize_hopf;
        // Hopf ideals of K[D₈] ↔ normal subgroups of D₈; the quotient by
        // the dimension-4 ideal of ⟨r²⟩ is K[D₈/⟨r²⟩] = K[ℤ₂×ℤ₂].
        let h = kd8();
        // Normal subgroups 1, ⟨r²⟩, ⟨r⟩, ⟨r², s⟩, ⟨r², rs⟩, D₈ give Hopf
        // ideals of dimensions 0, 4, 6, 6, 6, 7 (the kernels of the maps
        // onto their quotient group algebras).
        assert_eq!(hopf_ideals_of_dim(&h, 0).unwrap().len(), 1);
        assert_eq!(hopf_ideals_of_dim(&h, 6).unwrap().len(), 3);
        assert_eq!(hopf_ideals_of_dim(&h, 7).unwrap().len(), 1);
        // The whole algebra is never a Hopf ideal: ε cannot vanish on it.
        assert_eq!(hopf_ideals_of_dim(&h, 8).unwrap().len(), 0);
        // No normal subgroup yields dimension 5, and non-normal subgroups
        // yield nothing at all.
        assert_eq!(hopf_ideals_of_dim(&h, 5).unwrap().len(), 0);
        let dim4 = hopf_ideals_of_dim(&h, 4).unwrap();
        assert_eq!(dim4.len(), 1);
        let (q, pi) = quotient_by_hopf_ideal(&h, &dim4[0]).unwrap();
        assert_eq!(q.dim, 4);
        assert_eq!(recognize_hopf(&q).unwrap(), "K[Z2xZ2]");
        assert_eq!(crate::exact_math::rank(&pi.matrix), 4);
    }

    #[test]
    fn quotient_by_a_non_ideal_subspace_is_rejected() {
        use super::super::quotient_by_hopf_ideal;
        // The line through r − 1 kills the counit but is not an ideal.
        let h = kd8();
        let mut v = h.basis_vector(1);
        v = v.sub(&h.basis_vector(0));
        let line = Subspace::span(8, &[v]);
        let err = quotient_by_hopf_ideal(&h, &line).unwrap_err();
        assert!(matches!(err, AnalysisError::Structure(_)));
    }

    #[test]
    fn restriction_onto_the_rotation_subalgebra_is_the_cyclic_group_algebra() {
        use super::super::recognize_hopf;
        let h = kd8();
        let rotations = generated_hopf_subalgebra(&h, &[h.basis_vector(1)]).unwrap();
        let sub = restrict_hopf(&h, &rotations).unwrap();
        assert_eq!(sub.dim, 4);
        assert!(sub.verify_hopf().passed());
        assert_eq!(recognize_hopf(&sub).unwrap(), "K[Z4]");
        // The canonical basis is the four rotation basis vectors, so the
        // parent labels survive.
        assert_eq!(sub.basis_labels, vec!["1", "r", "r2", "r3"]);
        // A subspace that is not a subalgebra is refused.
        let bad = Subspace::span(8, &[h.basis_vector(0), h.basis_vector(4).add(&h.basis_vector(1))]);
        assert!(restrict_hopf(&h, &bad).is_err());
    }
}
