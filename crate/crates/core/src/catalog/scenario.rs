//! One fully assembled catalogue entry: the Yetter–Drinfel'd Hopf
//! algebra of a chosen variant and parameter, its 32-dimensional
//! biproduct B, and the distinguished subobjects that the verification
//! suite examines.
//!
//! The biproduct basis is relabeled from the raw `a#g` pairs to the
//! compact names cᵢhⱼ (index 4(i−1) + (j−1)) and dᵢhⱼ (index
//! 4(i+3) + (j−1)): cᵢ = ωᵢ⋆1, dᵢ = ηᵢ⋆1, hⱼ = 1⋆gⱼ, and each basis
//! vector is the product of its two name parts.  The distinguished
//! generators are u = x⋆1 = βc₂ + αc₃, v = d₁, r = h₂ and s = h₃.

use crate::analysis::generated_hopf_subalgebra;
use crate::exact_math::{intersect, GaussianRational, Matrix, Subspace, Vector};
use crate::groups::{build_group, GroupSpec};
use crate::hopf_core::{
    extend_smash_algebra_map, HopfAlgebra, HopfMorphism, SmashFactorization, TensorElem,
};
use crate::yd_biproduct::{cocycle_smash, radford_biproduct, YDHopfAlgebra};

use super::model::{alpha_beta, build_c, build_yd, grouplike_matrix, projection_to_c, Variant};
use super::CatalogError;

/// Basis labels c₁h₁..c₄h₄, d₁h₁..d₄h₄ for a biproduct over the Klein
/// group; the first sixteen label the ω-part biproduct N on their own.
fn biproduct_labels() -> Vec<String> {
    let mut labels = Vec::with_capacity(32);
    for i in 0..8 {
        for p in 0..4 {
            let a = if i < 4 {
                format!("c{}", i + 1)
            } else {
                format!("d{}", i - 3)
            };
            labels.push(format!("{}h{}", a, p + 1));
        }
    }
    labels
}

/// A catalogue entry, fully constructed and internally verified: every
/// Hopf algebra in it has passed its axiom suite during construction.
pub struct Scenario {
    pub variant: Variant,
    pub zeta: GaussianRational,
    /// The eight-dimensional Yetter–Drinfel'd Hopf algebra.
    pub yd: YDHopfAlgebra,
    /// Its Yetter–Drinfel'd subalgebra spanned by ω₁..ω₄.
    pub c: YDHopfAlgebra,
    /// The 32-dimensional biproduct.
    pub b: HopfAlgebra,
    /// The 16-dimensional biproduct of the ω-part.
    pub n: HopfAlgebra,
    /// The inclusion N ↪ B (the identity block on the first 16 indices).
    pub iota_n: HopfMorphism,
    /// The projection B ↠ N induced by x ↦ x², y ↦ ω₂ on the first
    /// tensor factor.
    pub pi_n: HopfMorphism,
}

impl Scenario {
    pub fn build(variant: Variant, zeta: &GaussianRational) -> Result<Scenario, CatalogError> {
        let yd = build_yd(variant, zeta)?;
        let c = build_c(&yd)?;

        let mut b = radford_biproduct(&yd)?;
        b.basis_labels = biproduct_labels();
        let mut n = radford_biproduct(&c)?;
        n.basis_labels = biproduct_labels()[..16].to_vec();

        let mut iota = Matrix::zeros(32, 16);
        for k in 0..16 {
            iota[(k, k)] = GaussianRational::one();
        }
        let pi_n = projection_to_c().kron(&Matrix::identity(4));

        Ok(Scenario {
            variant,
            zeta: zeta.clone(),
            yd,
            c,
            b,
            n,
            iota_n: HopfMorphism::new(iota),
            pi_n: HopfMorphism::new(pi_n),
        })
    }

    /// The generator u = x⋆1 = βc₂ + αc₃.
    pub fn u(&self) -> Vector {
        let (alpha, beta) = alpha_beta(&self.zeta);
        let mut u = Vector::zeros(32);
        u[4] = beta;
        u[8] = alpha;
        u
    }

    /// The generator v = η₁⋆1 = d₁.
    pub fn v(&self) -> Vector {
        Vector::unit(32, 16)
    }

    /// The group-like generator r = 1⋆g₂ = h₂.
    pub fn r(&self) -> Vector {
        Vector::unit(32, 1)
    }

    /// The group-like generator s = 1⋆g₃ = h₃.
    pub fn s(&self) -> Vector {
        Vector::unit(32, 2)
    }

    /// Resolves an element name: a basis label ("c2h2", "d1h3"), a bare
    /// part name ("c2", "d1", "h3" — the h₁ column), one of the
    /// generators "u", "v", "r", "s", or "1".
    pub fn element(&self, name: &str) -> Option<Vector> {
        match name {
            "1" => return Some(self.b.unit.clone()),
            "u" => return Some(self.u()),
            "v" => return Some(self.v()),
            "r" => return Some(self.r()),
            "s" => return Some(self.s()),
            _ => {}
        }
        if let Some(k) = self.b.basis_labels.iter().position(|l| l == name) {
            return Some(Vector::unit(32, k));
        }
        let with_h1 = format!("{name}h1");
        if let Some(k) = self.b.basis_labels.iter().position(|l| *l == with_h1) {
            return Some(Vector::unit(32, k));
        }
        if let Some(rest) = name.strip_prefix('h') {
            let j: usize = rest.parse().ok()?;
            if (1..=4).contains(&j) {
                return Some(Vector::unit(32, j - 1));
            }
        }
        None
    }

    /// The span of N inside B: the first sixteen coordinates.
    pub fn n_span(&self) -> Subspace {
        let units: Vec<Vector> = (0..16).map(|k| Vector::unit(32, k)).collect();
        Subspace::span(32, &units)
    }

    /// The span of the two-dimensional subalgebra U = K·1 + K·c₄.
    pub fn u_span(&self) -> Subspace {
        Subspace::span(32, &[Vector::unit(32, 0), Vector::unit(32, 12)])
    }

    /// The three eight-dimensional Hopf subalgebras of B, by generators:
    /// M₁ = ⟨c₄, h₂, h₃⟩, M₂ = ⟨c₂, c₄, h₃⟩, M₃ = ⟨c₂h₂, h₃⟩.
    pub fn m_spans(&self) -> Result<[Subspace; 3], CatalogError> {
        let e = |k: usize| Vector::unit(32, k);
        let m1 = generated_hopf_subalgebra(&self.b, &[e(12), e(1), e(2)])?;
        let m2 = generated_hopf_subalgebra(&self.b, &[e(4), e(12), e(2)])?;
        let m3 = generated_hopf_subalgebra(&self.b, &[e(5), e(2)])?;
        Ok([m1, m2, m3])
    }

    /// P = M₁ ∩ M₂, the group algebra of {1, c₄, h₃, c₄h₃}.
    pub fn p_span(&self, m: &[Subspace; 3]) -> Subspace {
        intersect(&m[0], &m[1])
    }

    /// The seven order-4 subgroups of the group-like group of B, as
    /// basis indices; the first one spans the only normal group algebra.
    pub fn grouplike_subgroups() -> [[usize; 4]; 7] {
        [
            [0, 12, 2, 14], // 1, c₄, h₃, c₄h₃
            [0, 12, 1, 13], // 1, c₄, h₂, c₄h₂
            [0, 12, 3, 15], // 1, c₄, h₄, c₄h₄
            [0, 1, 2, 3],   // 1, h₂, h₃, h₄
            [0, 1, 14, 15], // 1, h₂, c₄h₃, c₄h₄
            [0, 2, 13, 15], // 1, h₃, c₄h₂, c₄h₄
            [0, 3, 13, 14], // 1, h₄, c₄h₂, c₄h₃
        ]
    }

    /// The span of one of the [`Scenario::grouplike_subgroups`].
    pub fn subgroup_span(indices: &[usize; 4]) -> Subspace {
        let units: Vec<Vector> = indices.iter().map(|&k| Vector::unit(32, k)).collect();
        Subspace::span(32, &units)
    }

    /// The sixteen-dimensional comparison model: the group algebra of
    /// ℤ₂³ = ⟨x, y, z⟩, smashed with K[ℤ₂] = K[⟨t⟩] where t swaps x and
    /// y and fixes z, with the comultiplication of t̄ twisted by
    /// κ(t) = ½((1+z)⊗1 + (1−z)⊗xy); and the isomorphism onto N that
    /// extends x ↦ h₂, y ↦ c₄h₂, z ↦ h₃, t̄ ↦ c₂.
    pub fn comparison_model(&self) -> Result<(HopfAlgebra, HopfMorphism), CatalogError> {
        let gamma = build_group(&GroupSpec::Abelian(vec![2, 2, 2]));
        let ell = build_group(&GroupSpec::Abelian(vec![2]));

        // On indices a + 2b + 4c for xᵃyᵇzᶜ, t acts by (a,b,c) ↦ (b,a,c).
        let swap = |g: usize| (g >> 1 & 1) | ((g & 1) << 1) | (g & 4);
        let perms: Vec<Vec<usize>> = vec![(0..8).collect(), (0..8).map(swap).collect()];

        let half = GaussianRational::rat(1, 2);
        let mut k0 = TensorElem::new();
        k0.insert((0, 0), GaussianRational::one());
        let mut k1 = TensorElem::new();
        k1.insert((0, 0), half.clone());
        k1.insert((4, 0), half.clone());
        k1.insert((0, 3), half.clone());
        k1.insert((4, 3), -&half);
        let model = cocycle_smash(&gamma, &ell, &perms, &[k0, k1])?;

        let fa: Vec<Vector> = (0..8)
            .map(|g| {
                let (a, b, c) = (g & 1, (g >> 1) & 1, g >> 2);
                Vector::unit(16, 12 * b + (a + b) % 2 + 2 * c)
            })
            .collect();
        let fh = vec![self.n.unit.clone(), Vector::unit(16, 4)];

        let mut swap_matrix = Matrix::zeros(8, 8);
        for g in 0..8 {
            swap_matrix[(swap(g), g)] = GaussianRational::one();
        }
        let fact = SmashFactorization {
            a_dim: 8,
            group: ell,
            action: vec![Matrix::identity(8), swap_matrix],
        };
        let f = extend_smash_algebra_map(&fact, &fa, &fh, &self.n)?;
        Ok((model, f))
    }
}

/// The isomorphism between the biproducts of the two variants at the
/// same parameter, extending x′ ↦ u, y′ ↦ v·r, 1⋆g ↦ 1⋆g; `source`
/// must be the twisted variant and `target` the straight one.
pub fn biproduct_iso(
    source: &Scenario,
    target: &Scenario,
) -> Result<HopfMorphism, CatalogError> {
    let zeta = &target.zeta;
    let u = target.u();
    let vr = target.b.mul_vec(&target.v(), &target.r());
    let u_pow: Vec<Vector> = (0..4).map(|k| target.b.power(&u, k)).collect();

    // The group-like basis has the same monomial coordinates in both
    // variants, so the images of ω′ᵢ, η′ᵢ are read off by sending the
    // monomial x^m y^e to u^m (vr)^e.
    let p = grouplike_matrix(zeta);
    let fa: Vec<Vector> = (0..8)
        .map(|i| {
            let mut img = Vector::zeros(32);
            for (m, w) in p.col_vector(i).support() {
                let base = if m / 4 == 1 {
                    target.b.mul_vec(&u_pow[m % 4], &vr)
                } else {
                    u_pow[m % 4].clone()
                };
                img.add_assign_scaled(&base, w);
            }
            img
        })
        .collect();
    let fh: Vec<Vector> = (0..4).map(|p| Vector::unit(32, p)).collect();

    let fact = SmashFactorization {
        a_dim: 8,
        group: source.yd.group.clone(),
        action: source.yd.action.clone(),
    };
    Ok(extend_smash_algebra_map(&fact, &fa, &fh, &target.b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::model::zeta_values;
    use crate::exact_math::rank;
    use crate::hopf_core::verify_morphism;

    #[test]
    fn biproduct_labels_name_the_products_they_denote() {
        let zeta = GaussianRational::i();
        let sc = Scenario::build(Variant::A, &zeta).expect("builds");
        assert_eq!(sc.b.dim, 32);
        assert_eq!(sc.b.basis_labels[5], "c2h2");
        assert_eq!(sc.b.basis_labels[16], "d1h1");
        assert_eq!(sc.n.basis_labels[14], "c4h3");

        // Each basis vector is the product of its two name parts.
        for i in 0..8 {
            for p in 0..4 {
                let a_part = Vector::unit(32, 4 * i);
                let h_part = Vector::unit(32, p);
                assert_eq!(
                    sc.b.mul_vec(&a_part, &h_part),
                    Vector::unit(32, 4 * i + p),
                    "{}",
                    sc.b.basis_labels[4 * i + p]
                );
            }
        }
    }

    #[test]
    fn element_resolution_covers_all_name_forms() {
        let zeta = GaussianRational::i();
        let sc = Scenario::build(Variant::A, &zeta).expect("builds");
        assert_eq!(sc.element("1"), Some(sc.b.unit.clone()));
        assert_eq!(sc.element("c4"), Some(Vector::unit(32, 12)));
        assert_eq!(sc.element("d2h3"), Some(Vector::unit(32, 22)));
        assert_eq!(sc.element("h4"), Some(Vector::unit(32, 3)));
        assert_eq!(sc.element("v"), Some(Vector::unit(32, 16)));
        assert_eq!(sc.element("w"), None);
    }

    #[test]
    fn defining_relations_hold_for_every_parameter() {
        let half = GaussianRational::rat(1, 2);
        for variant in Variant::ALL {
            for zeta in zeta_values() {
                let sc = Scenario::build(variant, &zeta).expect("builds");
                let b = &sc.b;
                let (u, v, r, s) = (sc.u(), sc.v(), sc.r(), sc.s());
                let mul = |x: &Vector, y: &Vector| b.mul_vec(x, y);

                assert_eq!(b.power(&u, 4), b.unit, "u⁴ = 1");
                assert_eq!(b.power(&r, 2), b.unit, "r² = 1");
                assert_eq!(b.power(&s, 2), b.unit, "s² = 1");
                assert_eq!(mul(&r, &s), mul(&s, &r), "rs = sr");

                // u v = v u (straight variant) or v u³ (twisted variant).
                let uv = mul(&u, &v);
                let commuted = match variant {
                    Variant::A => mul(&v, &u),
                    Variant::APrime => mul(&v, &b.power(&u, 3)),
                };
                assert_eq!(uv, commuted, "commutation of u and v");

                // v² is the variant's rule polynomial in u.
                let vv = mul(&v, &v);
                let mut expected = Vector::zeros(32);
                let coeffs: [GaussianRational; 4] = match variant {
                    Variant::A => [
                        half.clone(),
                        &half * &zeta,
                        half.clone(),
                        -&(&half * &zeta),
                    ],
                    Variant::APrime => [
                        &half * &zeta,
                        half.clone(),
                        -&(&half * &zeta),
                        half.clone(),
                    ],
                };
                for (k, w) in coeffs.iter().enumerate() {
                    expected.add_assign_scaled(&b.power(&u, k), w);
                }
                assert_eq!(vv, expected, "v² rewrites into powers of u");

                // The crossed relations with the group-like part.
                let u3 = b.power(&u, 3);
                let u2 = b.power(&u, 2);
                assert_eq!(mul(&r, &u), mul(&u3, &r), "ru = u³r");
                assert_eq!(mul(&r, &v), mul(&u3, &mul(&v, &r)), "rv = u³vr");
                assert_eq!(mul(&s, &u), mul(&u, &s), "su = us");
                assert_eq!(mul(&s, &v), mul(&u2, &mul(&v, &s)), "sv = u²vs");
            }
        }
    }

    #[test]
    fn powers_of_c2h2_walk_through_the_c_part() {
        for zeta in zeta_values() {
            let sc = Scenario::build(Variant::A, &zeta).expect("builds");
            let c2h2 = Vector::unit(32, 5);
            assert_eq!(sc.b.power(&c2h2, 2), Vector::unit(32, 12), "(c₂h₂)² = c₄");
            assert_eq!(sc.b.power(&c2h2, 3), Vector::unit(32, 9), "(c₂h₂)³ = c₃h₂");
            assert_eq!(sc.b.power(&c2h2, 4), sc.b.unit, "(c₂h₂)⁴ = 1");
        }
    }

    #[test]
    fn u_and_its_inverse_change_of_basis() {
        let zeta = GaussianRational::i();
        let sc = Scenario::build(Variant::A, &zeta).expect("builds");
        let (alpha, beta) = alpha_beta(&zeta);
        // c₂ = αu + βu³ and c₃ = βu + αu³ invert u = βc₂ + αc₃.
        let u = sc.u();
        let u3 = sc.b.power(&u, 3);
        let mut c2 = u.scale(&alpha);
        c2.add_assign_scaled(&u3, &beta);
        assert_eq!(c2, Vector::unit(32, 4));
        assert_eq!(sc.b.power(&u, 2), Vector::unit(32, 12), "u² = c₄");
    }

    #[test]
    fn the_projection_and_inclusion_of_n_are_hopf_morphisms() {
        let zeta = GaussianRational::i();
        let sc = Scenario::build(Variant::A, &zeta).expect("builds");

        let iota = verify_morphism(&sc.n, &sc.b, &sc.iota_n);
        assert!(iota.is_hopf_morphism(), "ι_N: {iota:?}");

        let pi = verify_morphism(&sc.b, &sc.n, &sc.pi_n);
        assert!(pi.is_hopf_morphism(), "π_N: {pi:?}");

        // π_N does NOT restrict to the identity on N (it squares u), yet
        // it is a surjective Hopf morphism — that is the interesting part.
        let composed = sc.pi_n.matrix.mul_mat(&sc.iota_n.matrix);
        assert!(!composed.is_identity());
        assert_eq!(composed.col_vector(4), Vector::unit(16, 12), "(π∘ι)(c₂) = c₄");
        assert_eq!(rank(&sc.pi_n.matrix), 16, "π is surjective");

        // π_N sends u to c₄ = u² (both ω₂ and ω₃ project to ω₄, and
        // α + β = 1), and fixes the group-like part.
        assert_eq!(sc.pi_n.apply(&sc.u()), Vector::unit(16, 12), "π(u) = u²");
        assert_eq!(sc.pi_n.apply(&sc.v()), Vector::unit(16, 4), "π(v) = c₂");
        assert_eq!(sc.pi_n.apply(&sc.r()), Vector::unit(16, 1), "π(r) = r");
        assert_eq!(sc.pi_n.apply(&sc.s()), Vector::unit(16, 2), "π(s) = s");
    }

    #[test]
    fn the_comparison_model_maps_isomorphically_onto_n() {
        for zeta in zeta_values() {
            let sc = Scenario::build(Variant::A, &zeta).expect("builds");
            let (model, f) = sc.comparison_model().expect("model builds");
            assert_eq!(model.dim, 16);
            assert!(model.verify_hopf().passed(), "the comparison model is Hopf");
            let report = verify_morphism(&model, &sc.n, &f);
            assert!(report.is_isomorphism(), "{report:?}");
        }
    }

    #[test]
    fn the_twisted_biproduct_is_isomorphic_to_the_straight_one() {
        // One parameter here; the acceptance suite covers all four.
        let zeta = GaussianRational::i();
        let source = Scenario::build(Variant::APrime, &zeta).expect("builds");
        let target = Scenario::build(Variant::A, &zeta).expect("builds");
        let f = biproduct_iso(&source, &target).expect("extends");
        let report = verify_morphism(&source.b, &target.b, &f);
        assert!(report.is_isomorphism(), "{report:?}");

        // x′ ↦ u and y′ ↦ vr generate the correspondence.
        let u_img = f.apply(&source.u());
        assert_eq!(u_img, target.u());
        let vr = target.b.mul_vec(&target.v(), &target.r());
        assert_eq!(f.apply(&source.v()), vr);
    }
}
