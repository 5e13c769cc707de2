//! The two catalogued presentations, rewritten from generators and
//! relations into exact structure constants.
//!
//! Both variants present an eight-dimensional algebra on generators x, y
//! with x⁴ = 1, parametrised by a fourth root of unity ζ:
//!
//! * [`Variant::A`]:      x·y = y·x  and y² = ½(1 + ζx + x² − ζx³);
//! * [`Variant::APrime`]: x·y = y·x³ and y² = ½(ζ + x − ζx² + x³).
//!
//! The monomials xⁱyʲ (i < 4, j < 2) form a basis and multiplication is
//! normal-form rewriting.  The Klein group G = {g₁, g₂, g₃, g₄} (g₁ = 1)
//! acts by the algebra automorphisms g₂: x ↦ x³, y ↦ x³y and
//! g₃: x ↦ x, y ↦ x²y, and the coaction is induced from the action
//! through the symmetric bicharacter θ with θ(g₂,g₂) = ζ²,
//! θ(g₂,g₃) = −1, θ(g₃,g₃) = 1.
//!
//! With ι a fixed primitive fourth root of unity, α = ½(1 + ιζ²) and
//! β = ½(1 − ιζ²), the eight elements
//!
//! > ω₁ = 1, ω₂ = αx + βx³, ω₃ = βx + αx³, ω₄ = x²,
//! > η₁ = y, η₂ = x³y, η₃ = x²y, η₄ = xy
//!
//! form a basis of group-like elements, and the coalgebra structure is
//! exactly the one making them group-like.  [`build_yd`] delivers the
//! Yetter–Drinfel'd Hopf algebra in this basis.

use crate::exact_math::{invert, GaussianRational, Matrix, Subspace, Tensor3, Vector};
use crate::groups::{build_group, Bicharacter, FiniteGroup, GroupSpec};
use crate::yd_biproduct::{coaction_from_action, yd_restrict, YDHopfAlgebra};

use super::CatalogError;

/// Which of the two catalogued presentations to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Commuting generators: x·y = y·x.
    A,
    /// Twisted commutation: x·y = y·x³.
    APrime,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::A, Variant::APrime];

    /// Canonical name, as accepted on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            Variant::A => "A",
            Variant::APrime => "Aprime",
        }
    }

    /// Inverse of [`Variant::tag`].
    pub fn by_tag(tag: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.tag() == tag)
    }
}

/// The canonical short names of the four admissible parameters, in the
/// same order as [`zeta_values`].
pub const ZETA_NAMES: [&str; 4] = ["1", "i", "-1", "-i"];

/// The four admissible presentation parameters: the fourth roots of unity.
pub fn zeta_values() -> [GaussianRational; 4] {
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    [one.clone(), i.clone(), -&one, -&i]
}

/// Canonical short name ("1", "i", "-1", "-i") of a fourth root of unity.
pub fn zeta_name(zeta: &GaussianRational) -> Option<&'static str> {
    zeta_values()
        .iter()
        .position(|z| z == zeta)
        .map(|k| ZETA_NAMES[k])
}

/// Inverse of [`zeta_name`].
pub fn zeta_by_name(name: &str) -> Option<GaussianRational> {
    ZETA_NAMES
        .iter()
        .position(|&n| n == name)
        .map(|k| zeta_values()[k].clone())
}

fn check_zeta(zeta: &GaussianRational) -> Result<(), CatalogError> {
    if zeta_values().contains(zeta) {
        Ok(())
    } else {
        Err(CatalogError::InvalidZeta(zeta.to_string()))
    }
}

/// The Klein group with g₁ = 1, generators g₂, g₃, and g₄ = g₂g₃.
pub fn klein_group() -> FiniteGroup {
    build_group(&GroupSpec::Abelian(vec![2, 2]))
}

/// The symmetric bicharacter on the Klein group that induces the
/// coactions: θ(g₂,g₂) = ζ², θ(g₂,g₃) = −1, θ(g₃,g₃) = 1.
pub fn klein_bicharacter(
    group: &FiniteGroup,
    zeta: &GaussianRational,
) -> Result<Bicharacter, CatalogError> {
    check_zeta(zeta)?;
    let one = GaussianRational::one();
    let z2 = zeta * zeta;
    let rows = [
        [one.clone(), one.clone(), one.clone(), one.clone()],
        [one.clone(), z2.clone(), -&one, -&z2],
        [one.clone(), -&one, one.clone(), -&one],
        [one.clone(), -&z2, -&one, z2.clone()],
    ];
    let mut values = Matrix::zeros(4, 4);
    for (g, row) in rows.iter().enumerate() {
        for (h, v) in row.iter().enumerate() {
            values[(g, h)] = v.clone();
        }
    }
    Ok(Bicharacter::from_table(group, values).expect("the table is a bicharacter"))
}

/// Index of the monomial xⁱyʲ (i < 4, j < 2).
pub(crate) fn mono(i: usize, j: usize) -> usize {
    4 * j + i
}

/// Coefficients of y² on (1, x, x², x³).
fn y_square(variant: Variant, zeta: &GaussianRational) -> [GaussianRational; 4] {
    let half = GaussianRational::rat(1, 2);
    let hz = &half * zeta;
    match variant {
        Variant::A => [half.clone(), hz.clone(), half, -&hz],
        Variant::APrime => [hz.clone(), half.clone(), -&hz, half],
    }
}

/// Multiplication tensor in the monomial basis: (xᵃyᵇ)(xᶜyᵈ) moves xᶜ
/// through yᵇ (each pass of the twisted variant turns x into x³), then
/// rewrites y² by its defining relation when b + d = 2.
pub(crate) fn monomial_mult(variant: Variant, zeta: &GaussianRational) -> Tensor3 {
    let ysq = y_square(variant, zeta);
    let one = GaussianRational::one();
    let mut t = Tensor3::zeros(8, 8, 8);
    for a in 0..4 {
        for b in 0..2 {
            for c in 0..4 {
                for d in 0..2 {
                    let shift = if b == 1 && variant == Variant::APrime {
                        3 * c % 4
                    } else {
                        c
                    };
                    let i = (a + shift) % 4;
                    if b + d < 2 {
                        t.add_to(mono(a, b), mono(c, d), mono(i, b + d), &one);
                    } else {
                        for (k, w) in ysq.iter().enumerate() {
                            t.add_to(mono(a, b), mono(c, d), mono((i + k) % 4, 0), w);
                        }
                    }
                }
            }
        }
    }
    t
}

/// Action matrices in the monomial basis: g·xᵃyᵇ = x^(pa+qb)·yᵇ with
/// (p, q) = (1,0), (3,3), (1,2), (3,1) for g₁..g₄ — the unique
/// automorphism extensions of g₂: x ↦ x³, y ↦ x³y and g₃: x ↦ x, y ↦ x²y.
fn monomial_action() -> Vec<Matrix> {
    [(1, 0), (3, 3), (1, 2), (3, 1)]
        .iter()
        .map(|&(p, q)| {
            let mut m = Matrix::zeros(8, 8);
            for a in 0..4 {
                for b in 0..2 {
                    m[(mono((p * a + q * b) % 4, b), mono(a, b))] = GaussianRational::one();
                }
            }
            m
        })
        .collect()
}

/// The constants α = ½(1 + ιζ²) and β = ½(1 − ιζ²) of the group-like
/// basis change.  They satisfy α + β = 1, α² + β² = 0 and αβ = ½.
pub(crate) fn alpha_beta(zeta: &GaussianRational) -> (GaussianRational, GaussianRational) {
    let half = GaussianRational::rat(1, 2);
    let iz2 = &GaussianRational::i() * &(zeta * zeta);
    let alpha = &half * &(&GaussianRational::one() + &iz2);
    let beta = &half * &(&GaussianRational::one() - &iz2);
    (alpha, beta)
}

/// Change of basis from the group-like basis (ω₁..ω₄, η₁..η₄) to the
/// monomial basis: column k holds the monomial coordinates of the k-th
/// group-like element.
pub(crate) fn grouplike_matrix(zeta: &GaussianRational) -> Matrix {
    let (alpha, beta) = alpha_beta(zeta);
    let one = GaussianRational::one;
    let mut p = Matrix::zeros(8, 8);
    p[(mono(0, 0), 0)] = one(); // ω₁ = 1
    p[(mono(1, 0), 1)] = alpha.clone(); // ω₂ = αx + βx³
    p[(mono(3, 0), 1)] = beta.clone();
    p[(mono(1, 0), 2)] = beta; // ω₃ = βx + αx³
    p[(mono(3, 0), 2)] = alpha;
    p[(mono(2, 0), 3)] = one(); // ω₄ = x²
    p[(mono(0, 1), 4)] = one(); // η₁ = y
    p[(mono(3, 1), 5)] = one(); // η₂ = x³y
    p[(mono(2, 1), 6)] = one(); // η₃ = x²y
    p[(mono(1, 1), 7)] = one(); // η₄ = xy
    p
}

/// Multiplies two coordinate vectors through a structure tensor.
fn contract(t: &Tensor3, a: &Vector, b: &Vector) -> Vector {
    let (n, _, _) = t.dims();
    let mut out = Vector::zeros(n);
    for (i, va) in a.support() {
        for (j, vb) in b.support() {
            out.add_assign_scaled(&t.fiber_vector(i, j), &(va * vb));
        }
    }
    out
}

/// Labels of the group-like basis.
pub(crate) fn grouplike_labels() -> Vec<String> {
    ["omega1", "omega2", "omega3", "omega4", "eta1", "eta2", "eta3", "eta4"]
        .map(String::from)
        .to_vec()
}

/// Builds the Yetter–Drinfel'd Hopf algebra of the given variant over
/// the Klein group, in its group-like basis and with the antipode
/// attached.
pub fn build_yd(variant: Variant, zeta: &GaussianRational) -> Result<YDHopfAlgebra, CatalogError> {
    check_zeta(zeta)?;
    let group = klein_group();
    let theta = klein_bicharacter(&group, zeta)?;

    let mono_mult = monomial_mult(variant, zeta);
    let p = grouplike_matrix(zeta);
    let p_inv = invert(&p).expect("the group-like basis change is invertible");

    let mut mult = Tensor3::zeros(8, 8, 8);
    for i in 0..8 {
        for j in 0..8 {
            let prod = contract(&mono_mult, &p.col_vector(i), &p.col_vector(j));
            for (k, v) in p_inv.mul_vec(&prod).support() {
                mult.set(i, j, k, v.clone());
            }
        }
    }

    // Every basis element is group-like, which fixes the coalgebra.
    let mut comult = Tensor3::zeros(8, 8, 8);
    let mut counit = Vector::zeros(8);
    for i in 0..8 {
        comult.set(i, i, i, GaussianRational::one());
        counit[i] = GaussianRational::one();
    }

    let action: Vec<Matrix> = monomial_action()
        .iter()
        .map(|m| p_inv.mul_mat(&m.mul_mat(&p)))
        .collect();
    let coaction = coaction_from_action(&group, &action, &theta);

    let mut yd = YDHopfAlgebra::new(
        group,
        grouplike_labels(),
        mult,
        Vector::unit(8, 0),
        comult,
        counit,
        None,
        action,
        coaction,
    );
    yd.attach_antipode()?;
    Ok(yd)
}

/// The four-dimensional Yetter–Drinfel'd Hopf subalgebra spanned by
/// ω₁..ω₄ (equivalently, by the powers of x), over the full Klein group.
pub(crate) fn build_c(a: &YDHopfAlgebra) -> Result<YDHopfAlgebra, CatalogError> {
    let units: Vec<Vector> = (0..4).map(|k| Vector::unit(8, k)).collect();
    let span = Subspace::span(8, &units);
    let subgroup: Vec<usize> = (0..a.group.order).collect();
    Ok(yd_restrict(a, &span, &subgroup)?)
}

/// The projection onto the ω-span in the group-like bases: ω₁ ↦ ω₁,
/// ω₂ ↦ ω₄, ω₃ ↦ ω₄, ω₄ ↦ ω₁, η₁ ↦ ω₂, η₂ ↦ ω₃, η₃ ↦ ω₂, η₄ ↦ ω₃
/// (on the generators: x ↦ x² and y ↦ ω₂).
pub(crate) fn projection_to_c() -> Matrix {
    let images = [0usize, 3, 3, 0, 1, 2, 1, 2];
    let mut m = Matrix::zeros(4, 8);
    for (src, &dst) in images.iter().enumerate() {
        m[(dst, src)] = GaussianRational::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yd_biproduct::verify_yd;

    fn gr(re: i64) -> GaussianRational {
        GaussianRational::from_int(re)
    }

    #[test]
    fn zeta_names_round_trip() {
        for z in zeta_values() {
            let name = zeta_name(&z).expect("admissible value has a name");
            assert_eq!(zeta_by_name(name), Some(z));
        }
        assert_eq!(zeta_name(&gr(2)), None);
        assert_eq!(zeta_by_name("2"), None);
        assert!(matches!(
            build_yd(Variant::A, &gr(2)),
            Err(CatalogError::InvalidZeta(_))
        ));
    }

    #[test]
    fn monomial_relations_hold_in_both_variants() {
        for variant in Variant::ALL {
            for zeta in zeta_values() {
                let t = monomial_mult(variant, &zeta);
                let m = |i: usize, j: usize| Vector::unit(8, mono(i, j));
                let x = m(1, 0);
                let y = m(0, 1);

                // x⁴ = 1 and x is invertible.
                assert_eq!(contract(&t, &m(3, 0), &x), m(0, 0));

                // y² is the defining rule polynomial.
                let mut ysq = Vector::zeros(8);
                for (k, w) in y_square(variant, &zeta).iter().enumerate() {
                    ysq[mono(k, 0)] = w.clone();
                }
                assert_eq!(contract(&t, &y, &y), ysq);

                // The commutation rule: xy = yx or xy = yx³.
                let xy = contract(&t, &x, &y);
                let expected = match variant {
                    Variant::A => contract(&t, &y, &x),
                    Variant::APrime => contract(&t, &y, &m(3, 0)),
                };
                assert_eq!(xy, expected);
                assert_eq!(xy, m(1, 1));
            }
        }
    }

    #[test]
    fn omega_basis_identities() {
        // ω₂² = 1, ω₂ω₃ = ω₄, and the inverse change x = βω₂ + αω₃ —
        // these only involve powers of x, so they are variant-independent.
        for variant in Variant::ALL {
            for zeta in zeta_values() {
                let a = build_yd(variant, &zeta).expect("builds");
                let h = a.plain();
                let omega = |k: usize| Vector::unit(8, k);
                assert_eq!(h.mul_vec(&omega(1), &omega(1)), omega(0));
                assert_eq!(h.mul_vec(&omega(1), &omega(2)), omega(3));
                assert_eq!(h.mul_vec(&omega(3), &omega(3)), omega(0));

                // x = βω₂ + αω₃ squares to ω₄ and cubes to αω₂ + βω₃.
                let p = grouplike_matrix(&zeta);
                let p_inv = invert(&p).unwrap();
                let x = p_inv.mul_vec(&Vector::unit(8, mono(1, 0)));
                let x3 = p_inv.mul_vec(&Vector::unit(8, mono(3, 0)));
                assert_eq!(h.mul_vec(&x, &x), omega(3));
                assert_eq!(h.mul_vec(&omega(3), &x), x3);
            }
        }
    }

    #[test]
    fn comultiplication_of_x_has_the_four_term_form() {
        // Δ(x) = ½(x⊗x + x⊗x³ + x³⊗x − x³⊗x³) follows from x = βω₂ + αω₃
        // with both ω's group-like.
        let zeta = GaussianRational::i();
        let a = build_yd(Variant::A, &zeta).expect("builds");
        let p_inv = invert(&grouplike_matrix(&zeta)).unwrap();
        let x = p_inv.mul_vec(&Vector::unit(8, mono(1, 0)));
        let x3 = p_inv.mul_vec(&Vector::unit(8, mono(3, 0)));

        let actual = a.plain().comult_vec(&x);
        let half = GaussianRational::rat(1, 2);
        let mut expected = std::collections::BTreeMap::new();
        for (u, v, sign) in [(&x, &x, 1), (&x, &x3, 1), (&x3, &x, 1), (&x3, &x3, -1)] {
            let w = if sign == 1 { half.clone() } else { -&half };
            for (i, ci) in u.support() {
                for (j, cj) in v.support() {
                    let entry = expected
                        .entry((i, j))
                        .or_insert_with(GaussianRational::zero);
                    *entry = &*entry + &(&w * &(ci * cj));
                }
            }
        }
        expected.retain(|_, v| !v.is_zero());
        assert_eq!(actual, expected);
    }

    #[test]
    fn action_matrices_are_commuting_involutions() {
        for variant in Variant::ALL {
            for zeta in zeta_values() {
                let a = build_yd(variant, &zeta).expect("builds");
                let id = Matrix::identity(8);
                assert_eq!(a.action[0], id);
                for g in 1..4 {
                    assert_eq!(a.action[g].mul_mat(&a.action[g]), id);
                }
                assert_eq!(
                    a.action[1].mul_mat(&a.action[2]),
                    a.action[3],
                    "the action respects the group law"
                );
            }
        }
    }

    #[test]
    fn coaction_planes_match_the_closed_forms() {
        // δ(ω₂) = ½(g₁+g₃)⊗ω₂ + ½(g₁−g₃)⊗ω₃,
        // δ(η₁) = ¼(g₁+g₂+g₃+g₄)⊗η₁ + ¼(g₁+ζ²g₂−g₃−ζ²g₄)⊗η₂
        //       + ¼(g₁−g₂+g₃−g₄)⊗η₃ + ¼(g₁−ζ²g₂−g₃+ζ²g₄)⊗η₄,
        // and ω₄ is coinvariant.
        for variant in Variant::ALL {
            for zeta in zeta_values() {
                let a = build_yd(variant, &zeta).expect("builds");
                let half = GaussianRational::rat(1, 2);
                let quarter = GaussianRational::rat(1, 4);
                let z2 = &zeta * &zeta;

                let mut omega2 = Tensor3::zeros(8, 4, 8);
                omega2.set(1, 0, 1, half.clone());
                omega2.set(1, 2, 1, half.clone());
                omega2.set(1, 0, 2, half.clone());
                omega2.set(1, 2, 2, -&half);
                for g in 0..4 {
                    for k in 0..8 {
                        assert_eq!(a.coaction.get(1, g, k), omega2.get(1, g, k));
                    }
                }

                let qz2 = &quarter * &z2;
                let eta_rows: [[GaussianRational; 4]; 4] = [
                    [quarter.clone(), quarter.clone(), quarter.clone(), quarter.clone()],
                    [quarter.clone(), qz2.clone(), -&quarter, -&qz2],
                    [quarter.clone(), -&quarter, quarter.clone(), -&quarter],
                    [quarter.clone(), -&qz2, -&quarter, qz2.clone()],
                ];
                for (e, row) in eta_rows.iter().enumerate() {
                    for (g, v) in row.iter().enumerate() {
                        assert_eq!(a.coaction.get(4, g, 4 + e), v, "η₁ component η{}", e + 1);
                    }
                }

                for g in 0..4 {
                    for k in 0..8 {
                        let expected = if g == 0 && k == 3 {
                            GaussianRational::one()
                        } else {
                            GaussianRational::zero()
                        };
                        assert_eq!(*a.coaction.get(3, g, k), expected, "ω₄ is coinvariant");
                    }
                }
            }
        }
    }

    #[test]
    fn both_variants_verify_as_yetter_drinfeld_hopf_algebras() {
        for variant in Variant::ALL {
            for zeta in zeta_values() {
                let a = build_yd(variant, &zeta).expect("builds");
                let report = verify_yd(&a);
                assert!(
                    report.passed(),
                    "variant {} at ζ = {}: {:?}",
                    variant.tag(),
                    zeta_name(&zeta).unwrap(),
                    report
                );
            }
        }
    }

    #[test]
    fn omega_span_restricts_to_a_yd_subalgebra() {
        for zeta in zeta_values() {
            let a = build_yd(Variant::A, &zeta).expect("builds");
            let c = build_c(&a).expect("the ω-span is closed");
            assert_eq!(c.dim, 4);
            assert_eq!(c.basis_labels, ["omega1", "omega2", "omega3", "omega4"]);
            assert!(c.antipode.is_some());
            assert!(verify_yd(&c).passed());
        }
    }

    #[test]
    fn projection_to_c_is_an_equivariant_coalgebra_map() {
        let pi = projection_to_c();
        for zeta in zeta_values() {
            let a = build_yd(Variant::A, &zeta).expect("builds");
            let c = build_c(&a).expect("restricts");

            // Coalgebra map: group-likes map to group-likes, so only the
            // counit needs a check; algebra map and equivariance are the
            // real content.
            for i in 0..8 {
                let img = pi.mul_vec(&Vector::unit(8, i));
                assert!(img.support().count() == 1);
                assert_eq!(a.counit[i], c.counit.dot(&img));
            }
            for i in 0..8 {
                for j in 0..8 {
                    let lhs = pi.mul_vec(&a.plain().mul_vec(&Vector::unit(8, i), &Vector::unit(8, j)));
                    let rhs = c
                        .plain()
                        .mul_vec(&pi.col_vector(i), &pi.col_vector(j));
                    assert_eq!(lhs, rhs, "π is multiplicative at ({i}, {j})");
                }
            }
            for g in 0..4 {
                assert_eq!(
                    pi.mul_mat(&a.action[g]),
                    c.action[g].mul_mat(&pi),
                    "π is equivariant for g{}",
                    g + 1
                );
            }
        }
    }
}
