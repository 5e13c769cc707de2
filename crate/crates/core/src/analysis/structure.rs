//! Center, one-dimensional representations, group-like elements, and
//! recognition of group algebras and their duals.

use crate::exact_math::{joint_eigensplit, kernel, Matrix, Subspace, Vector};
use crate::groups::{recognize_group, FiniteGroup};
use crate::hopf_core::{comm_flags, dual_hopf, HopfAlgebra};

use super::AnalysisError;

/// The center `{z : za = az for all a}` as a canonical subspace.
pub fn center(h: &HopfAlgebra) -> Subspace {
    let n = h.dim;
    // Stack (L_i − R_i) over all basis elements; the center is the joint
    // kernel.
    let mut stacked = Matrix::zeros(n * n, n);
    for i in 0..n {
        let b = h.basis_vector(i);
        let diff = h.left_mult_matrix(&b).sub(&h.right_mult_matrix(&b));
        for r in 0..n {
            for c in 0..n {
                stacked[(i * n + r, c)] = diff[(r, c)].clone();
            }
        }
    }
    Subspace::span(n, &kernel(&stacked))
}

/// Reduces by a two-sided ideal: quotient data for an algebra `H/I`.
///
/// Returns the representative indices (non-pivot columns of `I`) and the
/// projection matrix `dim(Q) × dim(H)` reading reduced vectors off at the
/// representatives.
fn ideal_quotient(h: &HopfAlgebra, ideal: &Subspace) -> (Vec<usize>, Matrix) {
    let reps = ideal.complement_unit_vectors();
    let q = reps.len();
    let mut proj = Matrix::zeros(q, h.dim);
    for i in 0..h.dim {
        let reduced = ideal.reduce(&h.basis_vector(i));
        for (a, &c) in reps.iter().enumerate() {
            proj[(a, i)] = reduced[c].clone();
        }
    }
    (reps, proj)
}

/// Multiplication table of a quotient algebra `H/I` in the representative
/// basis: `table[a]` is the matrix of left multiplication by the `a`-th
/// representative.
fn quotient_mult_ops(h: &HopfAlgebra, reps: &[usize], proj: &Matrix) -> Vec<Matrix> {
    let q = reps.len();
    let mut ops = Vec::with_capacity(q);
    for &a in reps {
        let mut m = Matrix::zeros(q, q);
        for (bi, &b) in reps.iter().enumerate() {
            let prod = h.mul_vec(&h.basis_vector(a), &h.basis_vector(b));
            let coords = proj.mul_vec(&prod);
            for r in 0..q {
                m[(r, bi)] = coords[r].clone();
            }
        }
        ops.push(m);
    }
    ops
}

/// All algebra homomorphisms `H → ℚ(i)`, as value vectors on the basis.
///
/// Computed by saturating the commutator ideal, removing the radical of
/// the commutative quotient, and splitting the regular representation into
/// joint eigenspaces.  Every returned functional is then *verified* to be
/// unital and multiplicative on all basis pairs.  Errors with
/// [`NonSplit`](crate::exact_math::ExactMathError::NonSplit) when the
/// quotient has factors that are proper field extensions of ℚ(i).
pub fn algebra_characters(h: &HopfAlgebra) -> Result<Vec<Vector>, AnalysisError> {
    let n = h.dim;

    // Two-sided ideal generated by all commutators.
    let mut commutators = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let a = h.basis_vector(i);
            let b = h.basis_vector(j);
            let c = h.mul_vec(&a, &b).sub(&h.mul_vec(&b, &a));
            if !c.is_zero() {
                commutators.push(c);
            }
        }
    }
    let mut ideal = Subspace::span(n, &commutators);
    loop {
        let before = ideal.dim();
        let mut extra = Vec::new();
        for v in ideal.basis() {
            for k in 0..n {
                let e = h.basis_vector(k);
                extra.push(h.mul_vec(&e, &v));
                extra.push(h.mul_vec(&v, &e));
            }
        }
        ideal = ideal.sum(&Subspace::span(n, &extra));
        if ideal.dim() == before {
            break;
        }
    }

    // Commutative quotient Q = H / ideal.
    let (reps, proj) = ideal_quotient(h, &ideal);
    let q = reps.len();
    let ops = quotient_mult_ops(h, &reps, &proj);

    // Radical of Q: kernel of the trace form tr(L_x L_y) (characteristic
    // zero, commutative).  Quotient by the ideal it generates.
    let mut gram = Matrix::zeros(q, q);
    for a in 0..q {
        for b in 0..q {
            gram[(a, b)] = ops[a].mul_mat(&ops[b]).trace();
        }
    }
    let radical = kernel(&gram);
    let (semi_ops, semi_proj_total, sdim) = if radical.is_empty() {
        (ops, proj.clone(), q)
    } else {
        // The radical is an ideal of the commutative algebra Q; build Q/rad.
        let rad_space = Subspace::span(q, &radical);
        let sreps = rad_space.complement_unit_vectors();
        let sdim = sreps.len();
        let mut sproj = Matrix::zeros(sdim, q);
        for i in 0..q {
            let reduced = rad_space.reduce(&Vector::unit(q, i));
            for (a, &c) in sreps.iter().enumerate() {
                sproj[(a, i)] = reduced[c].clone();
            }
        }
        let mut sops = Vec::with_capacity(sdim);
        for &a in &sreps {
            let mut m = Matrix::zeros(sdim, sdim);
            for (bi, &b) in sreps.iter().enumerate() {
                let prod = ops[a].mul_vec(&Vector::unit(q, b));
                let coords = sproj.mul_vec(&prod);
                for r in 0..sdim {
                    m[(r, bi)] = coords[r].clone();
                }
            }
            sops.push(m);
        }
        (sops, sproj.mul_mat(&proj), sdim)
    };

    // Characters are the joint eigenvectors of the transposed regular
    // representation, normalized at the unit.
    let transposed: Vec<Matrix> = semi_ops.iter().map(|m| m.transpose()).collect();
    let parts = joint_eigensplit(&transposed, &Subspace::full(sdim))?;
    let unit_q = semi_proj_total.mul_vec(&h.unit);
    let mut chars = Vec::new();
    for part in parts {
        if part.space.dim() != 1 {
            return Err(AnalysisError::Structure(format!(
                "joint eigenspace of dimension {} in a split commutative algebra",
                part.space.dim()
            )));
        }
        let v = &part.space.basis()[0];
        let at_unit = v.dot(&unit_q);
        if at_unit.is_zero() {
            return Err(AnalysisError::Structure(
                "candidate character vanishes at the unit".into(),
            ));
        }
        let scale = at_unit.inv().expect("nonzero");
        // Pull back to H: χ(e_i) = ⟨v, image of e_i⟩ / ⟨v, image of 1⟩.
        let chi = Vector::from_fn(n, |i| {
            &semi_proj_total.col_vector(i).dot(v) * &scale
        });
        chars.push(chi);
    }

    // Certification: unital and multiplicative on every basis pair.
    for chi in &chars {
        if !chi.dot(&h.unit).is_one() {
            return Err(AnalysisError::Structure("character not unital".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = chi.dot(&h.mul_vec(&h.basis_vector(i), &h.basis_vector(j)));
                let rhs = &chi[i] * &chi[j];
                if lhs != rhs {
                    return Err(AnalysisError::Structure(
                        "candidate character is not multiplicative".into(),
                    ));
                }
            }
        }
    }
    Ok(chars)
}

/// All group-like elements `g` (`Δg = g⊗g`, `ε(g) = 1`), as vectors.
///
/// These are the algebra characters of the dual; each one is verified
/// against the comultiplication directly.
pub fn grouplikes(h: &HopfAlgebra) -> Result<Vec<Vector>, AnalysisError> {
    let dual = dual_hopf(h);
    let candidates = algebra_characters(&dual)?;
    for g in &candidates {
        if h.comult_vec(g) != h.tensor_of(g, g) || !h.counit_vec(g).is_one() {
            return Err(AnalysisError::Structure(
                "dual character is not group-like".into(),
            ));
        }
    }
    Ok(candidates)
}

/// The group-like elements that are also central.
pub fn central_grouplikes(h: &HopfAlgebra) -> Result<Vec<Vector>, AnalysisError> {
    let z = center(h);
    Ok(grouplikes(h)?
        .into_iter()
        .filter(|g| z.contains(g))
        .collect())
}

/// The group formed by a complete list of group-like elements under
/// multiplication.  Labels are `g1, g2, …` in input order.
pub fn grouplike_group(
    h: &HopfAlgebra,
    gs: &[Vector],
) -> Result<FiniteGroup, AnalysisError> {
    let order = gs.len();
    let find = |v: &Vector| -> Result<usize, AnalysisError> {
        gs.iter().position(|g| g == v).ok_or_else(|| {
            AnalysisError::Structure("product of group-likes escapes the list".into())
        })
    };
    let mut cayley = vec![vec![0usize; order]; order];
    for (i, a) in gs.iter().enumerate() {
        for (j, b) in gs.iter().enumerate() {
            cayley[i][j] = find(&h.mul_vec(a, b))?;
        }
    }
    let identity = find(&h.unit)?;
    let mut inverse = vec![0usize; order];
    for (i, row) in cayley.iter().enumerate() {
        inverse[i] = row
            .iter()
            .position(|&p| p == identity)
            .ok_or_else(|| AnalysisError::Structure("group-like without inverse".into()))?;
    }
    Ok(FiniteGroup {
        order,
        cayley,
        identity,
        inverse,
        labels: (1..=order).map(|k| format!("g{k}")).collect(),
    })
}

/// Identifies group algebras and their duals by name.
///
/// Returns `K[G]` when the Hopf algebra is spanned by its group-likes,
/// `K^G` when its dual is, and `unrecognized(dim=n)` otherwise; `G` is
/// named by [`recognize_group`].
pub fn recognize_hopf(h: &HopfAlgebra) -> Result<String, AnalysisError> {
    let gs = grouplikes(h)?;
    if gs.len() == h.dim {
        let group = grouplike_group(h, &gs)?;
        return Ok(format!("K[{}]", recognize_group(&group)));
    }
    let (commutative, _) = comm_flags(h);
    if commutative {
        let dual = dual_hopf(h);
        let dual_gs = grouplikes(&dual)?;
        if dual_gs.len() == h.dim {
            let group = grouplike_group(&dual, &dual_gs)?;
            return Ok(format!("K^{}", recognize_group(&group)));
        }
    }
    Ok(format!("unrecognized(dim={})", h.dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::GaussianRational;
    use crate::groups::{build_group, dual_group_algebra, group_algebra, GroupSpec};
    use crate::hopf_core::fixtures::{kzn, taft2};

    fn kd8() -> HopfAlgebra {
        group_algebra(&build_group(&GroupSpec::Dihedral(4)))
    }

    #[test]
    fn center_of_dihedral_group_algebra_is_spanned_by_class_sums() {
        let h = kd8();
        let z = center(&h);
        assert_eq!(z.dim(), 5);
        // The class sum r + r³ is central; r alone is not.
        let mut class = Vector::zeros(8);
        class[1] = GaussianRational::one();
        class[3] = GaussianRational::one();
        assert!(z.contains(&class));
        assert!(!z.contains(&Vector::unit(8, 1)));
        // A commutative algebra is its own center.
        assert_eq!(center(&kzn(4)).dim(), 4);
    }

    #[test]
    fn characters_of_cyclic_group_algebra_are_fourth_roots() {
        let h = kzn(4);
        let chars = algebra_characters(&h).unwrap();
        assert_eq!(chars.len(), 4);
        let mut at_g: Vec<GaussianRational> = chars.iter().map(|c| c[1].clone()).collect();
        at_g.sort_by_key(|x| x.to_string());
        let mut expected = vec![
            GaussianRational::one(),
            GaussianRational::i(),
            -&GaussianRational::one(),
            -&GaussianRational::i(),
        ];
        expected.sort_by_key(|x| x.to_string());
        assert_eq!(at_g, expected);
    }

    #[test]
    fn dihedral_group_algebra_has_four_linear_characters() {
        let chars = algebra_characters(&kd8()).unwrap();
        assert_eq!(chars.len(), 4);
        for chi in &chars {
            // Linear characters kill the commutator subgroup ⟨r²⟩.
            assert!(chi[2].is_one());
        }
    }

    #[test]
    fn grouplikes_of_group_algebras_are_the_group_elements() {
        let h = kd8();
        let gs = grouplikes(&h).unwrap();
        assert_eq!(gs.len(), 8);
        for g in &gs {
            assert_eq!(g.support().count(), 1);
        }
        let group = grouplike_group(&h, &gs).unwrap();
        assert_eq!(recognize_group(&group), "D8");
        // Central group-likes of K[D₈]: 1 and r².
        assert_eq!(central_grouplikes(&h).unwrap().len(), 2);
    }

    #[test]
    fn grouplikes_of_taft_are_one_and_g() {
        let gs = grouplikes(&taft2()).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(gs.contains(&Vector::unit(4, 0)));
        assert!(gs.contains(&Vector::unit(4, 1)));
    }

    #[test]
    fn recognition_of_group_algebras_and_duals() {
        assert_eq!(recognize_hopf(&kd8()).unwrap(), "K[D8]");
        let q8 = build_group(&GroupSpec::Quaternion8);
        assert_eq!(
            recognize_hopf(&dual_group_algebra(&q8)).unwrap(),
            "K^Q8"
        );
        assert_eq!(recognize_hopf(&taft2()).unwrap(), "unrecognized(dim=4)");
        // K[ℤ₄] is both a group algebra and, abstractly, a dual one; the
        // group-algebra description wins.
        assert_eq!(recognize_hopf(&kzn(4)).unwrap(), "K[Z4]");
    }
}
