//! The acceptance suite: every structural claim about the catalogued
//! biproducts, executed as exact-arithmetic checks with zero tolerance.
//!
//! A [`SuiteContext`] holds both variants at one parameter ζ together
//! with the isomorphism between their biproducts, and memoizes every
//! expensive derived object (duals, centers, matrix-block data,
//! subalgebra enumerations, quotients) so each is computed at most once
//! per parameter.  The claims are grouped into fifteen numbered
//! criteria; each produces one [`CriterionResult`] holding a list of
//! labeled pass/fail [`Check`]s, and the whole suite passes exactly
//! when every check of every criterion passes for every ζ.

use std::collections::BTreeSet;

use once_cell::sync::OnceCell;
use serde_json::{json, Value};

use crate::analysis::{
    algebra_characters, center, central_grouplikes, coinvariants, grothendieck_table,
    grouplike_group, grouplikes, hopf_ideals_of_dim, hopf_subalgebras_of_dim,
    irreducible_characters, is_normal_hopf_subalgebra, quotient_by_hopf_ideal, quotient_hopf,
    recognize_hopf, restrict_hopf, verify_extension, wedderburn, WedderburnData,
};
use crate::exact_math::{kernel, GaussianRational, Matrix, Subspace, Vector};
use crate::groups::recognize_group;
use crate::hopf_core::{
    comm_flags, dual_hopf, integrals, monomial_span_check, verify_morphism, HopfAlgebra,
    HopfMorphism, TensorElem,
};
use crate::yd_biproduct::{biproduct_duality_check, verify_yd};

use super::fixtures::{fixture_document, fixture_scenario, subspace_json, tensor_json, vector_json};
use super::model::{alpha_beta, zeta_by_name, zeta_name, Variant};
use super::scenario::{biproduct_iso, Scenario};
use super::CatalogError;

/// Number of criteria in the suite.
pub const CRITERION_COUNT: usize = 15;

/// Stable snake-case name of a criterion; panics outside `1..=15`.
pub fn criterion_name(id: usize) -> &'static str {
    match id {
        1 => "construction_and_generating_relations",
        2 => "coproduct_and_antipode_displays",
        3 => "center_dimension_and_basis",
        4 => "grouplike_and_character_groups",
        5 => "matrix_block_structure",
        6 => "unique_sixteen_dimensional_subalgebra",
        7 => "middle_factor_subalgebras_and_quotients",
        8 => "comparison_model_isomorphism",
        9 => "projection_kernel_and_coinvariants",
        10 => "character_ring_table",
        11 => "eight_dimensional_subalgebras",
        12 => "four_dimensional_subalgebras",
        13 => "variant_isomorphism",
        14 => "duality_and_integrals",
        15 => "frozen_bundle_agreement",
        _ => panic!("criterion id out of range: {id}"),
    }
}

/// One labeled exact check.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

/// The outcome of one criterion: a list of checks, passing as a whole
/// exactly when all of them pass.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The labels of the failed checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.label.as_str())
            .collect()
    }

    pub fn json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed(),
            "checks": self
                .checks
                .iter()
                .map(|c| json!({"label": c.label, "passed": c.passed}))
                .collect::<Vec<_>>(),
        })
    }
}

struct Checks {
    list: Vec<Check>,
}

impl Checks {
    fn new() -> Checks {
        Checks { list: Vec::new() }
    }

    fn push(&mut self, label: impl Into<String>, passed: bool) {
        self.list.push(Check {
            label: label.into(),
            passed,
        });
    }

    fn done(self, id: usize) -> CriterionResult {
        CriterionResult {
            id,
            name: criterion_name(id),
            checks: self.list,
        }
    }
}

/// Memoized derived objects of one scenario.
#[derive(Default)]
struct Cache {
    dual: OnceCell<HopfAlgebra>,
    center: OnceCell<Subspace>,
    grouplikes: OnceCell<Vec<Vector>>,
    characters: OnceCell<Vec<Vector>>,
    wedderburn: OnceCell<WedderburnData>,
    wedderburn_dual: OnceCell<WedderburnData>,
    irreducibles: OnceCell<Vec<Vector>>,
    m_spans: OnceCell<[Subspace; 3]>,
    m_algebras: OnceCell<[HopfAlgebra; 3]>,
    u_algebra: OnceCell<HopfAlgebra>,
    subs2: OnceCell<Vec<Subspace>>,
    subs4: OnceCell<Vec<Subspace>>,
    subs8: OnceCell<Vec<Subspace>>,
    subs16: OnceCell<Vec<Subspace>>,
    ideals16: OnceCell<Vec<Subspace>>,
    n_m_spans: OnceCell<[Subspace; 3]>,
    n_subs8: OnceCell<Vec<Subspace>>,
    n_ideals8: OnceCell<Vec<Subspace>>,
    n_quotients: OnceCell<Vec<(HopfAlgebra, HopfMorphism)>>,
    z_quotient: OnceCell<(HopfAlgebra, HopfMorphism)>,
    q_quotient: OnceCell<(HopfAlgebra, HopfMorphism)>,
    p_quotient: OnceCell<(HopfAlgebra, HopfMorphism)>,
    comparison: OnceCell<(HopfAlgebra, HopfMorphism)>,
}

/// Both variants at one parameter, the isomorphism between their
/// biproducts, and memoized derived data for each.
pub struct SuiteContext {
    pub zeta: GaussianRational,
    pub zeta_name: &'static str,
    straight: Scenario,
    twisted: Scenario,
    iso: HopfMorphism,
    caches: [Cache; 2],
}

impl SuiteContext {
    pub fn build(zeta: &GaussianRational) -> Result<SuiteContext, CatalogError> {
        let name = zeta_name(zeta).ok_or_else(|| CatalogError::InvalidZeta(zeta.to_string()))?;
        let straight = Scenario::build(Variant::A, zeta)?;
        let twisted = Scenario::build(Variant::APrime, zeta)?;
        let iso = biproduct_iso(&twisted, &straight)?;
        Ok(SuiteContext {
            zeta: zeta.clone(),
            zeta_name: name,
            straight,
            twisted,
            iso,
            caches: [Cache::default(), Cache::default()],
        })
    }

    /// Builds from a short parameter name ("1", "i", "-1", "-i").
    pub fn build_by_name(name: &str) -> Result<SuiteContext, CatalogError> {
        let zeta = zeta_by_name(name).ok_or_else(|| CatalogError::InvalidZeta(name.into()))?;
        SuiteContext::build(&zeta)
    }

    pub fn scenario(&self, variant: Variant) -> &Scenario {
        match variant {
            Variant::A => &self.straight,
            Variant::APrime => &self.twisted,
        }
    }

    /// The isomorphism from the twisted biproduct onto the straight one.
    pub fn iso(&self) -> &HopfMorphism {
        &self.iso
    }

    fn cache(&self, variant: Variant) -> &Cache {
        match variant {
            Variant::A => &self.caches[0],
            Variant::APrime => &self.caches[1],
        }
    }

    pub fn b(&self, variant: Variant) -> &HopfAlgebra {
        &self.scenario(variant).b
    }

    pub fn dual_b(&self, variant: Variant) -> &HopfAlgebra {
        self.cache(variant)
            .dual
            .get_or_init(|| dual_hopf(self.b(variant)))
    }

    pub fn center_b(&self, variant: Variant) -> &Subspace {
        self.cache(variant)
            .center
            .get_or_init(|| center(self.b(variant)))
    }

    pub fn grouplikes_b(&self, variant: Variant) -> Result<&Vec<Vector>, CatalogError> {
        self.cache(variant)
            .grouplikes
            .get_or_try_init(|| Ok(grouplikes(self.b(variant))?))
    }

    pub fn characters_b(&self, variant: Variant) -> Result<&Vec<Vector>, CatalogError> {
        self.cache(variant)
            .characters
            .get_or_try_init(|| Ok(algebra_characters(self.b(variant))?))
    }

    pub fn wedderburn_b(&self, variant: Variant) -> Result<&WedderburnData, CatalogError> {
        self.cache(variant)
            .wedderburn
            .get_or_try_init(|| Ok(wedderburn(self.b(variant))?))
    }

    pub fn wedderburn_dual_b(&self, variant: Variant) -> Result<&WedderburnData, CatalogError> {
        self.cache(variant)
            .wedderburn_dual
            .get_or_try_init(|| Ok(wedderburn(self.dual_b(variant))?))
    }

    pub fn irreducibles_b(&self, variant: Variant) -> Result<&Vec<Vector>, CatalogError> {
        self.cache(variant).irreducibles.get_or_try_init(|| {
            let data = wedderburn(self.b(variant))?;
            Ok(irreducible_characters(self.b(variant), &data)?)
        })
    }

    pub fn m_spans(&self, variant: Variant) -> Result<&[Subspace; 3], CatalogError> {
        self.cache(variant)
            .m_spans
            .get_or_try_init(|| self.scenario(variant).m_spans())
    }

    /// M₁–M₃ carved out of the biproduct as standalone Hopf algebras.
    pub fn m_algebras(&self, variant: Variant) -> Result<&[HopfAlgebra; 3], CatalogError> {
        self.cache(variant).m_algebras.get_or_try_init(|| {
            let spans = self.m_spans(variant)?;
            Ok([
                restrict_hopf(self.b(variant), &spans[0])?,
                restrict_hopf(self.b(variant), &spans[1])?,
                restrict_hopf(self.b(variant), &spans[2])?,
            ])
        })
    }

    pub fn u_algebra(&self, variant: Variant) -> Result<&HopfAlgebra, CatalogError> {
        self.cache(variant).u_algebra.get_or_try_init(|| {
            Ok(restrict_hopf(
                self.b(variant),
                &self.scenario(variant).u_span(),
            )?)
        })
    }

    /// All Hopf subalgebras of the biproduct of one of the four
    /// dimensions the suite enumerates.
    pub fn subalgebras_b(&self, variant: Variant, dim: usize) -> Result<&Vec<Subspace>, CatalogError> {
        let cell = match dim {
            2 => &self.cache(variant).subs2,
            4 => &self.cache(variant).subs4,
            8 => &self.cache(variant).subs8,
            16 => &self.cache(variant).subs16,
            _ => {
                return Err(CatalogError::Inconsistent(format!(
                    "subalgebra enumeration is memoized only for dimensions 2, 4, 8, 16; got {dim}"
                )))
            }
        };
        cell.get_or_try_init(|| Ok(hopf_subalgebras_of_dim(self.b(variant), dim)?))
    }

    pub fn ideals16_b(&self, variant: Variant) -> Result<&Vec<Subspace>, CatalogError> {
        self.cache(variant)
            .ideals16
            .get_or_try_init(|| Ok(hopf_ideals_of_dim(self.b(variant), 16)?))
    }

    /// M₁–M₃ as subspaces of the sixteen-dimensional middle factor.
    pub fn n_m_spans(&self, variant: Variant) -> Result<&[Subspace; 3], CatalogError> {
        self.cache(variant).n_m_spans.get_or_try_init(|| {
            let n = &self.scenario(variant).n;
            let e = |k: usize| Vector::unit(16, k);
            Ok([
                crate::analysis::generated_hopf_subalgebra(n, &[e(12), e(1), e(2)])?,
                crate::analysis::generated_hopf_subalgebra(n, &[e(4), e(12), e(2)])?,
                crate::analysis::generated_hopf_subalgebra(n, &[e(5), e(2)])?,
            ])
        })
    }

    pub fn n_subalgebras8(&self, variant: Variant) -> Result<&Vec<Subspace>, CatalogError> {
        self.cache(variant)
            .n_subs8
            .get_or_try_init(|| Ok(hopf_subalgebras_of_dim(&self.scenario(variant).n, 8)?))
    }

    pub fn n_ideals8(&self, variant: Variant) -> Result<&Vec<Subspace>, CatalogError> {
        self.cache(variant)
            .n_ideals8
            .get_or_try_init(|| Ok(hopf_ideals_of_dim(&self.scenario(variant).n, 8)?))
    }

    /// Quotients of the middle factor by its three eight-dimensional
    /// ideals, in the same order as [`SuiteContext::n_ideals8`].
    pub fn n_quotients(&self, variant: Variant) -> Result<&Vec<(HopfAlgebra, HopfMorphism)>, CatalogError> {
        self.cache(variant).n_quotients.get_or_try_init(|| {
            let n = &self.scenario(variant).n;
            let mut out = Vec::new();
            for ideal in self.n_ideals8(variant)? {
                out.push(quotient_by_hopf_ideal(n, ideal)?);
            }
            Ok(out)
        })
    }

    /// The two-dimensional quotient of the biproduct by its middle factor.
    pub fn z_quotient(&self, variant: Variant) -> Result<&(HopfAlgebra, HopfMorphism), CatalogError> {
        self.cache(variant).z_quotient.get_or_try_init(|| {
            Ok(quotient_hopf(
                self.b(variant),
                &self.scenario(variant).n_span(),
            )?)
        })
    }

    /// The four-dimensional quotient by M₂.
    pub fn q_quotient(&self, variant: Variant) -> Result<&(HopfAlgebra, HopfMorphism), CatalogError> {
        self.cache(variant).q_quotient.get_or_try_init(|| {
            let spans = self.m_spans(variant)?;
            Ok(quotient_hopf(self.b(variant), &spans[1])?)
        })
    }

    /// The eight-dimensional quotient by P = M₁ ∩ M₂.
    pub fn p_quotient(&self, variant: Variant) -> Result<&(HopfAlgebra, HopfMorphism), CatalogError> {
        self.cache(variant).p_quotient.get_or_try_init(|| {
            let spans = self.m_spans(variant)?;
            let p = self.scenario(variant).p_span(spans);
            Ok(quotient_hopf(self.b(variant), &p)?)
        })
    }

    /// The sixteen-dimensional cocycle-twisted model and its map onto
    /// the middle factor.
    pub fn comparison(&self, variant: Variant) -> Result<&(HopfAlgebra, HopfMorphism), CatalogError> {
        self.cache(variant)
            .comparison
            .get_or_try_init(|| self.scenario(variant).comparison_model())
    }
}

/// Runs one criterion; `variant` selects which biproduct plays the
/// leading role in the single-object criteria (2–12); criteria 1, 13,
/// 14 always involve both.
pub fn run_criterion(
    ctx: &SuiteContext,
    id: usize,
    variant: Variant,
) -> Result<CriterionResult, CatalogError> {
    match id {
        1 => c01_construction(ctx, variant),
        2 => c02_displays(ctx, variant),
        3 => c03_center(ctx, variant),
        4 => c04_grouplikes(ctx, variant),
        5 => c05_blocks(ctx, variant),
        6 => c06_sixteen(ctx, variant),
        7 => c07_middle(ctx, variant),
        8 => c08_comparison(ctx, variant),
        9 => c09_projection(ctx, variant),
        10 => c10_characters(ctx, variant),
        11 => c11_eight(ctx, variant),
        12 => c12_four(ctx, variant),
        13 => c13_variants(ctx),
        14 => c14_duality(ctx, variant),
        15 => c15_bundle(ctx),
        _ => Err(CatalogError::UnknownObject(format!("criterion {id}"))),
    }
}

/// Runs all criteria in order.
pub fn run_criteria(
    ctx: &SuiteContext,
    variant: Variant,
) -> Result<Vec<CriterionResult>, CatalogError> {
    (1..=CRITERION_COUNT)
        .map(|id| run_criterion(ctx, id, variant))
        .collect()
}

/// The index of the single basis vector a unit vector sits on.
fn unit_index(v: &Vector) -> Option<usize> {
    let mut support = v.support();
    let (k, c) = support.next()?;
    if support.next().is_none() && c.is_one() {
        Some(k)
    } else {
        None
    }
}

/// `Σ w·(x ⊗ y)` as a sparse tensor-square element.
fn tensor_sum(terms: &[(GaussianRational, &Vector, &Vector)]) -> TensorElem {
    let mut out = TensorElem::new();
    for (w, x, y) in terms {
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let c = &(w * xi) * yj;
                let entry = out.entry((i, j)).or_insert_with(GaussianRational::zero);
                *entry = &*entry + &c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ coeffs[k]·basis[k]`.
fn combination(dim: usize, terms: &[(GaussianRational, &Vector)]) -> Vector {
    let mut out = Vector::zeros(dim);
    for (w, x) in terms {
        out.add_assign_scaled(x, w);
    }
    out
}

/// The values of a character on a list of elements when they are all
/// ±1, as a sign row.
fn sign_pattern(chi: &Vector, elements: &[Vector]) -> Option<Vec<i64>> {
    let one = GaussianRational::one();
    let minus = -&one;
    let mut out = Vec::with_capacity(elements.len());
    for x in elements {
        let value = chi.dot(x);
        if value == one {
            out.push(1);
        } else if value == minus {
            out.push(-1);
        } else {
            return None;
        }
    }
    Some(out)
}

/// Structural equality of two Hopf algebras on the nose (same structure
/// constants, ignoring labels).
fn same_structure(x: &HopfAlgebra, y: &HopfAlgebra) -> bool {
    x.dim == y.dim
        && x.mult == y.mult
        && x.unit == y.unit
        && x.comult == y.comult
        && x.counit == y.counit
        && x.antipode == y.antipode
}

/// Small nonnegative integer value of an exact scalar, if it is one.
fn as_small_int(x: &GaussianRational) -> Option<i64> {
    (0..=64).find(|&k| *x == GaussianRational::from_int(k))
}

fn display_name(variant: Variant) -> &'static str {
    match variant {
        Variant::A => "B",
        Variant::APrime => "Bprime",
    }
}

/// Criterion 1: every catalogued object satisfies its axiom system,
/// and u, v, r, s generate the biproduct, so the recorded relations
/// are defining.
fn c01_construction(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    for v in Variant::ALL {
        let sc = ctx.scenario(v);
        let tag = v.tag();
        let bname = display_name(v);
        ch.push(
            format!("{tag} satisfies the Yetter-Drinfel'd Hopf axioms"),
            verify_yd(&sc.yd).passed(),
        );
        ch.push(
            format!("the group-like span C of {tag} satisfies the Yetter-Drinfel'd Hopf axioms"),
            verify_yd(&sc.c).passed(),
        );
        ch.push(
            format!("{bname} satisfies the Hopf axioms"),
            sc.b.verify_hopf().passed(),
        );
        ch.push(
            format!("the middle factor N of {bname} satisfies the Hopf axioms"),
            sc.n.verify_hopf().passed(),
        );
        let generators = [sc.u(), sc.v(), sc.r(), sc.s()];
        ch.push(
            format!("u, v, r, s generate {bname} (monomial span has rank 32)"),
            monomial_span_check(&sc.b, &generators).dim() == 32,
        );
    }

    for (k, alg) in ctx.m_algebras(variant)?.iter().enumerate() {
        ch.push(
            format!("M{} satisfies the Hopf axioms", k + 1),
            alg.verify_hopf().passed(),
        );
    }
    ch.push(
        "U satisfies the Hopf axioms",
        ctx.u_algebra(variant)?.verify_hopf().passed(),
    );
    for (k, (quotient, _)) in ctx.n_quotients(variant)?.iter().enumerate() {
        ch.push(
            format!("the quotient F{} of N satisfies the Hopf axioms", k + 1),
            quotient.verify_hopf().passed(),
        );
    }
    ch.push(
        "the quotient by N satisfies the Hopf axioms",
        ctx.z_quotient(variant)?.0.verify_hopf().passed(),
    );
    ch.push(
        "the quotient by M2 satisfies the Hopf axioms",
        ctx.q_quotient(variant)?.0.verify_hopf().passed(),
    );
    ch.push(
        "the quotient by P satisfies the Hopf axioms",
        ctx.p_quotient(variant)?.0.verify_hopf().passed(),
    );
    ch.push(
        "Hd11 satisfies the Hopf axioms",
        ctx.comparison(variant)?.0.verify_hopf().passed(),
    );
    Ok(ch.done(1))
}

/// Criterion 2: the coproducts and antipodes of u, v, r, s equal their
/// displayed closed forms, entry by entry.
fn c02_displays(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let b = &sc.b;
    let zeta = &sc.zeta;

    let half = GaussianRational::rat(1, 2);
    let quarter = GaussianRational::rat(1, 4);
    let one = GaussianRational::one();
    let z2 = zeta * zeta;
    let z3 = &z2 * zeta;

    let u = sc.u();
    let v = sc.v();
    let r = sc.r();
    let s = sc.s();
    let u_pow: Vec<Vector> = (0..4).map(|k| b.power(&u, k)).collect();
    let rs = b.mul_vec(&r, &s);

    // Δ(u) = ½(u⊗u + u⊗u³ + u³s⊗u − u³s⊗u³).
    let u3s = b.mul_vec(&u_pow[3], &s);
    let expected = tensor_sum(&[
        (half.clone(), &u, &u),
        (half.clone(), &u, &u_pow[3]),
        (half.clone(), &u3s, &u),
        (-&half, &u3s, &u_pow[3]),
    ]);
    ch.push(
        "the coproduct of u has its displayed four-term form",
        b.comult_vec(&u) == expected,
    );

    // Δ(v) = ¼·Σ_k v·(sign combination of 1, r, s, rs) ⊗ uᵏv.
    let group_combo = |c0: &GaussianRational,
                       c1: &GaussianRational,
                       c2: &GaussianRational,
                       c3: &GaussianRational| {
        combination(
            32,
            &[
                (c0.clone(), &b.unit),
                (c1.clone(), &r),
                (c2.clone(), &s),
                (c3.clone(), &rs),
            ],
        )
    };
    let legs = [
        group_combo(&one, &one, &one, &one),
        group_combo(&one, &-&z2, &-&one, &z2),
        group_combo(&one, &-&one, &one, &-&one),
        group_combo(&one, &z2, &-&one, &-&z2),
    ];
    let first: Vec<Vector> = legs.iter().map(|g| b.mul_vec(&v, g)).collect();
    let second: Vec<Vector> = (0..4).map(|k| b.mul_vec(&u_pow[k], &v)).collect();
    let expected = tensor_sum(&[
        (quarter.clone(), &first[0], &second[0]),
        (quarter.clone(), &first[1], &second[1]),
        (quarter.clone(), &first[2], &second[2]),
        (quarter.clone(), &first[3], &second[3]),
    ]);
    ch.push(
        "the coproduct of v has its displayed four-leg form",
        b.comult_vec(&v) == expected,
    );

    ch.push("r is group-like", b.comult_vec(&r) == b.tensor_of(&r, &r));
    ch.push("s is group-like", b.comult_vec(&s) == b.tensor_of(&s, &s));

    // S(u) = ½(u + su + u³ − su³).
    let su = b.mul_vec(&s, &u);
    let su3 = b.mul_vec(&s, &u_pow[3]);
    let expected = combination(
        32,
        &[
            (half.clone(), &u),
            (half.clone(), &su),
            (half.clone(), &u_pow[3]),
            (-&half, &su3),
        ],
    );
    ch.push(
        "the antipode of u has its displayed four-term form",
        b.antipode_vec(&u) == expected,
    );

    // S(v) = ¼·Σ_g (u-polynomial)·(g·v) over g ∈ {1, r, s, rs}.
    let u_poly = |c: [GaussianRational; 4]| {
        combination(
            32,
            &[
                (c[0].clone(), &u_pow[0]),
                (c[1].clone(), &u_pow[1]),
                (c[2].clone(), &u_pow[2]),
                (c[3].clone(), &u_pow[3]),
            ],
        )
    };
    let polys = [
        u_poly([one.clone(), one.clone(), one.clone(), one.clone()]),
        u_poly([zeta.clone(), z3.clone(), -zeta, -&z3]),
        u_poly([one.clone(), -&one, one.clone(), -&one]),
        u_poly([-zeta, z3.clone(), zeta.clone(), -&z3]),
    ];
    let group_parts = [b.unit.clone(), r.clone(), s.clone(), rs.clone()];
    let mut expected = Vector::zeros(32);
    for (poly, g) in polys.iter().zip(&group_parts) {
        let gv = b.mul_vec(g, &v);
        expected.add_assign_scaled(&b.mul_vec(poly, &gv), &quarter);
    }
    ch.push(
        "the antipode of v has its displayed four-leg form",
        b.antipode_vec(&v) == expected,
    );

    ch.push("the antipode fixes r", b.antipode_vec(&r) == r);
    ch.push("the antipode fixes s", b.antipode_vec(&s) == s);
    let antipode = b.antipode.as_ref().expect("biproducts carry antipodes");
    ch.push(
        "the antipode is an involution",
        antipode.mul_mat(antipode).is_identity(),
    );
    Ok(ch.done(2))
}

/// The eleven central basis sums, as index lists.
const CENTER_SUMS: [&[usize]; 11] = [
    &[0],
    &[12],
    &[4, 8],
    &[16, 20, 24, 28],
    &[1, 5, 9, 13],
    &[17, 21, 25, 29],
    &[2, 14],
    &[6, 10],
    &[18, 22, 26, 30],
    &[3, 7, 11, 15],
    &[19, 23, 27, 31],
];

/// Criterion 3: the center has dimension 11 and is spanned by the
/// eleven displayed sums of basis vectors.
fn c03_center(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let z = ctx.center_b(variant);
    ch.push("the center has dimension 11", z.dim() == 11);
    let sums: Vec<Vector> = CENTER_SUMS
        .iter()
        .map(|idxs| {
            let mut v = Vector::zeros(32);
            for &k in *idxs {
                v[k] = GaussianRational::one();
            }
            v
        })
        .collect();
    let span = Subspace::span(32, &sums);
    ch.push(
        "the eleven displayed basis sums span the center exactly",
        *z == span,
    );
    Ok(ch.done(3))
}

/// Criterion 4: the group-likes of the biproduct and of its dual each
/// form an elementary abelian group of order 8, with the recorded
/// value tables and central members.
fn c04_grouplikes(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let b = ctx.b(variant);

    let gs = ctx.grouplikes_b(variant)?;
    ch.push("there are exactly eight group-like elements", gs.len() == 8);
    let indices: BTreeSet<usize> = gs.iter().filter_map(unit_index).collect();
    let expected_indices: BTreeSet<usize> = [0, 1, 2, 3, 12, 13, 14, 15].into_iter().collect();
    ch.push(
        "the group-likes are the eight monomials in u^2, r, s",
        indices == expected_indices && indices.len() == gs.len(),
    );
    match grouplike_group(b, gs) {
        Ok(group) => ch.push(
            "the group-like group is elementary abelian of order 8",
            recognize_group(&group) == "Z2xZ2xZ2",
        ),
        Err(_) => ch.push("the group-like group is elementary abelian of order 8", false),
    }
    let central: BTreeSet<usize> = central_grouplikes(b)?.iter().filter_map(unit_index).collect();
    let expected_central: BTreeSet<usize> = [0, 12].into_iter().collect();
    ch.push(
        "the central group-likes are exactly 1 and u^2",
        central == expected_central,
    );

    let chars = ctx.characters_b(variant)?;
    ch.push("there are exactly eight characters", chars.len() == 8);
    let quad = vec![sc.u(), sc.v(), sc.r(), sc.s()];
    let patterns: BTreeSet<Vec<i64>> = chars
        .iter()
        .filter_map(|chi| sign_pattern(chi, &quad))
        .collect();
    let expected_patterns: BTreeSet<Vec<i64>> = (0..8)
        .map(|mask: i32| {
            vec![
                1,
                if mask & 1 == 0 { 1 } else { -1 },
                if mask & 2 == 0 { 1 } else { -1 },
                if mask & 4 == 0 { 1 } else { -1 },
            ]
        })
        .collect();
    ch.push(
        "the characters realize exactly the eight sign patterns (1, ±1, ±1, ±1) on u, v, r, s",
        patterns == expected_patterns && patterns.len() == chars.len(),
    );

    let dual = ctx.dual_b(variant);
    let dual_gs = grouplikes(dual)?;
    match grouplike_group(dual, &dual_gs) {
        Ok(group) => ch.push(
            "the dual's group-like group is elementary abelian of order 8",
            dual_gs.len() == 8 && recognize_group(&group) == "Z2xZ2xZ2",
        ),
        Err(_) => ch.push(
            "the dual's group-like group is elementary abelian of order 8",
            false,
        ),
    }
    let central_patterns: BTreeSet<Vec<i64>> = central_grouplikes(dual)?
        .iter()
        .filter_map(|chi| sign_pattern(chi, &quad))
        .collect();
    let expected_central_patterns: BTreeSet<Vec<i64>> =
        [vec![1, 1, 1, 1], vec![1, -1, 1, 1]].into_iter().collect();
    ch.push(
        "the central characters are exactly the counit and the v-flipping character",
        central_patterns == expected_central_patterns,
    );
    Ok(ch.done(4))
}

/// Criterion 5: the matrix-block decomposition of the biproduct and of
/// its dual both have sizes 1×8, 2×2, 4×1, realized by full matrix
/// blocks over the base field.
fn c05_blocks(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let expected: Vec<usize> = vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 4];
    for (name, data) in [
        ("the biproduct", ctx.wedderburn_b(variant)?),
        ("its dual", ctx.wedderburn_dual_b(variant)?),
    ] {
        ch.push(
            format!("{name} decomposes into blocks of sizes 1×8, 2×2, 4×1"),
            data.sizes() == expected,
        );
        ch.push(
            format!("every block of {name} is a full matrix algebra over the base field"),
            data.blocks.iter().all(|bl| bl.space.dim() == bl.size * bl.size),
        );
        ch.push(
            format!("the block sizes of {name} square-sum to 32"),
            data.sizes().iter().map(|s| s * s).sum::<usize>() == 32,
        );
    }
    Ok(ch.done(5))
}

/// Criterion 6: the middle factor is the unique sixteen-dimensional
/// Hopf subalgebra, it is normal, and the resulting two-dimensional
/// quotient gives an exact, non-abelian sequence.
fn c06_sixteen(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let subs = ctx.subalgebras_b(variant, 16)?;
    ch.push(
        "there is exactly one sixteen-dimensional Hopf subalgebra",
        subs.len() == 1,
    );
    ch.push(
        "it is N, the span of the first sixteen basis vectors",
        subs.len() == 1 && subs[0] == sc.n_span(),
    );
    ch.push(
        "N is normal",
        is_normal_hopf_subalgebra(&sc.b, &sc.n_span())?,
    );
    let (z, pi_z) = ctx.z_quotient(variant)?;
    ch.push("the quotient by N is two-dimensional", z.dim == 2);
    ch.push(
        "the quotient by N is the group algebra of Z2",
        recognize_hopf(z)? == "K[Z2]",
    );
    let report = verify_extension(&sc.n, &sc.b, z, &sc.iota_n, pi_z)?;
    ch.push("the sequence N -> B -> B/BN+ is exact", report.passed());
    ch.push("that extension is not abelian", !report.abelian());
    Ok(ch.done(6))
}

/// Criterion 7: the middle factor has exactly three eight-dimensional
/// ideals (with the recognized quotients) and exactly the three named
/// eight-dimensional Hopf subalgebras, all normal inside it, with the
/// recognized structures.
fn c07_middle(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let n = &sc.n;

    let ideals = ctx.n_ideals8(variant)?;
    ch.push(
        "N has exactly three eight-dimensional Hopf ideals",
        ideals.len() == 3,
    );
    let quotients = ctx.n_quotients(variant)?;
    // Which ideal contains which group-like difference determines the
    // expected quotient structure.
    let expected = [
        (12usize, "c4 - 1", "K[Z2xZ2xZ2]"),
        (2, "h3 - 1", "K[D8]"),
        (14, "c4h3 - 1", "K[D8]"),
    ];
    for (index, label, recognition) in expected {
        let mut diff = Vector::zeros(16);
        diff[index] = GaussianRational::one();
        diff[0] = -&GaussianRational::one();
        let hits: Vec<usize> = (0..ideals.len())
            .filter(|&k| ideals[k].contains(&diff))
            .collect();
        ch.push(
            format!("exactly one eight-dimensional ideal contains {label}"),
            hits.len() == 1,
        );
        if let [k] = hits[..] {
            ch.push(
                format!("the quotient by the ideal containing {label} is {recognition}"),
                recognize_hopf(&quotients[k].0)? == recognition,
            );
        } else {
            ch.push(
                format!("the quotient by the ideal containing {label} is {recognition}"),
                false,
            );
        }
    }

    let subs = ctx.n_subalgebras8(variant)?;
    ch.push(
        "N has exactly three eight-dimensional Hopf subalgebras",
        subs.len() == 3,
    );
    let m_in_n = ctx.n_m_spans(variant)?;
    ch.push(
        "they are M1, M2, and M3",
        subs.len() == 3 && m_in_n.iter().all(|m| subs.contains(m)),
    );
    for (k, span) in m_in_n.iter().enumerate() {
        ch.push(
            format!("M{} is normal in N", k + 1),
            is_normal_hopf_subalgebra(n, span)?,
        );
    }
    let recognitions = ["K[Z2xZ2xZ2]", "K^D8", "K^D8"];
    for (k, (alg, expected)) in ctx
        .m_algebras(variant)?
        .iter()
        .zip(recognitions)
        .enumerate()
    {
        ch.push(
            format!("M{} is recognized as {expected}", k + 1),
            recognize_hopf(alg)? == expected,
        );
    }
    Ok(ch.done(7))
}

/// Criterion 8: the cocycle-twisted model maps isomorphically onto the
/// middle factor by the recorded generator assignment, its coproduct
/// twist is the recorded one, and it is noncommutative and
/// noncocommutative with elementary abelian group-likes on both sides.
fn c08_comparison(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let (model, f) = ctx.comparison(variant)?;

    let report = verify_morphism(model, &sc.n, f);
    ch.push("the comparison map is a Hopf morphism", report.is_hopf_morphism());
    ch.push("the comparison map is bijective", report.bijective);

    // Generator images: x ↦ h₂, y ↦ c₄h₂, z ↦ h₃, t̄ ↦ c₂ (model
    // indices 2, 4, 8 for the group part and 1 for t̄).
    let image = |k: usize| f.apply(&Vector::unit(16, k));
    ch.push("x maps to h2", image(2) == Vector::unit(16, 1));
    ch.push("y maps to c4h2", image(4) == Vector::unit(16, 13));
    ch.push("z maps to h3", image(8) == Vector::unit(16, 2));
    ch.push("t-bar maps to c2", image(1) == Vector::unit(16, 4));

    let (commutative, cocommutative) = comm_flags(model);
    ch.push(
        "the model is noncommutative and noncocommutative",
        !commutative && !cocommutative,
    );

    let model_gs = grouplikes(model)?;
    match grouplike_group(model, &model_gs) {
        Ok(group) => ch.push(
            "the model's group-likes form Z2xZ2xZ2",
            model_gs.len() == 8 && recognize_group(&group) == "Z2xZ2xZ2",
        ),
        Err(_) => ch.push("the model's group-likes form Z2xZ2xZ2", false),
    }
    let dual = dual_hopf(model);
    let dual_gs = grouplikes(&dual)?;
    match grouplike_group(&dual, &dual_gs) {
        Ok(group) => ch.push(
            "the dual model's group-likes form Z2xZ2xZ2",
            dual_gs.len() == 8 && recognize_group(&group) == "Z2xZ2xZ2",
        ),
        Err(_) => ch.push("the dual model's group-likes form Z2xZ2xZ2", false),
    }

    // Δ(t̄) = κ(t)·(t̄ ⊗ t̄) with κ(t) = ½((1+z)⊗1 + (1−z)⊗xy).
    let half = GaussianRational::rat(1, 2);
    let mut kappa = TensorElem::new();
    kappa.insert((0, 0), half.clone());
    kappa.insert((8, 0), half.clone());
    kappa.insert((0, 6), half.clone());
    kappa.insert((8, 6), -&half);
    let t_bar = Vector::unit(16, 1);
    let twisted = model.tensor_mul(&kappa, &model.tensor_of(&t_bar, &t_bar));
    ch.push(
        "the coproduct of t-bar is the cocycle times t-bar ⊗ t-bar",
        model.comult_vec(&t_bar) == twisted,
    );
    Ok(ch.done(8))
}

/// Criterion 9: the kernel of the projection onto the middle factor is
/// the unique sixteen-dimensional Hopf ideal, its coinvariants are
/// U = span{1, u²} — the unique normal two-dimensional Hopf subalgebra,
/// central — and U -> B -> N is exact but not abelian; the v-flipping
/// character factors through the projection.
fn c09_projection(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);

    let ideals = ctx.ideals16_b(variant)?;
    ch.push(
        "there is exactly one sixteen-dimensional Hopf ideal",
        ideals.len() == 1,
    );
    let ker = Subspace::span(32, &kernel(&sc.pi_n.matrix));
    ch.push(
        "it is the kernel of the projection onto N",
        ideals.len() == 1 && ideals[0] == ker,
    );

    let coin = coinvariants(&sc.b, &sc.pi_n);
    ch.push(
        "the coinvariants of the projection are U = span{1, u^2}",
        coin == sc.u_span(),
    );

    let subs = ctx.subalgebras_b(variant, 2)?;
    ch.push(
        "there are exactly seven two-dimensional Hopf subalgebras",
        subs.len() == 7,
    );
    let mut normal_subs = Vec::new();
    for span in subs {
        if is_normal_hopf_subalgebra(&sc.b, span)? {
            normal_subs.push(span.clone());
        }
    }
    ch.push(
        "U is the unique normal one",
        normal_subs.len() == 1 && normal_subs[0] == sc.u_span(),
    );
    ch.push(
        "U lies in the center",
        ctx.center_b(variant).contains_subspace(&sc.u_span()),
    );

    let u_alg = ctx.u_algebra(variant)?;
    let iota_u = HopfMorphism::new(Matrix::from_cols(&sc.u_span().basis()));
    let report = verify_extension(u_alg, &sc.b, &sc.n, &iota_u, &sc.pi_n)?;
    ch.push("the sequence U -> B -> N is exact", report.passed());
    ch.push("that extension is not abelian", !report.abelian());
    ch.push("its kernel is central", report.central);

    // The v-flipping character is the pullback along the projection of
    // the middle factor's u-flipping character.
    let quad = vec![sc.u(), sc.v(), sc.r(), sc.s()];
    let chi1 = ctx
        .characters_b(variant)?
        .iter()
        .find(|chi| sign_pattern(chi, &quad) == Some(vec![1, -1, 1, 1]))
        .cloned();
    let (alpha, beta) = alpha_beta(&sc.zeta);
    let mut u_n = Vector::zeros(16);
    u_n[4] = beta;
    u_n[8] = alpha;
    let n_quad = vec![u_n, Vector::unit(16, 1), Vector::unit(16, 2)];
    let chi_n = algebra_characters(&sc.n)?
        .iter()
        .find(|chi| sign_pattern(chi, &n_quad) == Some(vec![-1, 1, 1]))
        .cloned();
    match (chi1, chi_n) {
        (Some(chi1), Some(chi_n)) => {
            let pulled = sc.pi_n.matrix.transpose().mul_vec(&chi_n);
            ch.push(
                "the v-flipping character factors through the projection onto N",
                pulled == chi1,
            );
        }
        _ => ch.push(
            "the v-flipping character factors through the projection onto N",
            false,
        ),
    }
    Ok(ch.done(9))
}

/// Criterion 10: the character ring has eight linear characters, two of
/// degree 2, one of degree 4, and its multiplication table decomposes
/// with the recorded multiplicities.
fn c10_characters(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let b = ctx.b(variant);
    let irr = ctx.irreducibles_b(variant)?;

    ch.push("there are eleven irreducible characters", irr.len() == 11);
    let degree = |chi: &Vector| as_small_int(&chi.dot(&b.unit));
    let mut linears = Vec::new();
    let mut twos = Vec::new();
    let mut fours = Vec::new();
    for (k, chi) in irr.iter().enumerate() {
        match degree(chi) {
            Some(1) => linears.push(k),
            Some(2) => twos.push(k),
            Some(4) => fours.push(k),
            _ => {}
        }
    }
    let shape_ok = irr.len() == 11 && linears.len() == 8 && twos.len() == 2 && fours.len() == 1;
    ch.push(
        "the degrees are 1 (eight times), 2 (twice), and 4 (once)",
        shape_ok,
    );
    if !shape_ok {
        return Ok(ch.done(10));
    }
    let (p1, p2, rho) = (twos[0], twos[1], fours[0]);

    let table = grothendieck_table(b, irr)?;
    ch.push(
        "every product of irreducible characters decomposes with nonnegative integral multiplicities",
        true,
    );
    let symmetric = (0..11).all(|a| (0..11).all(|c| table[a][c] == table[c][a]));
    ch.push("the character ring is commutative", symmetric);

    let indicator = |k: usize| {
        let mut m = vec![0i64; 11];
        m[k] = 1;
        m
    };
    // A product that is a single irreducible: its lone slot.
    let lone = |m: &[i64]| -> Option<usize> {
        let mut found = None;
        for (k, &x) in m.iter().enumerate() {
            match x {
                0 => {}
                1 if found.is_none() => found = Some(k),
                _ => return None,
            }
        }
        found
    };

    let linear_set: BTreeSet<usize> = linears.iter().copied().collect();
    let closed = linears.iter().all(|&a| {
        linears
            .iter()
            .all(|&c| matches!(lone(&table[a][c]), Some(k) if linear_set.contains(&k)))
    });
    ch.push("the linear characters are closed under products", closed);

    let quad = vec![sc.u(), sc.v(), sc.r(), sc.s()];
    let find_linear = |pattern: [i64; 4]| {
        linears
            .iter()
            .copied()
            .find(|&k| sign_pattern(&irr[k], &quad) == Some(pattern.to_vec()))
    };
    let eps = find_linear([1, 1, 1, 1]);
    let chi1 = find_linear([1, -1, 1, 1]);
    let chi2 = find_linear([1, 1, -1, 1]);
    let chi3 = find_linear([1, 1, 1, -1]);
    ch.push(
        "the linear characters include the counit and the three sign characters",
        eps.is_some() && chi1.is_some() && chi2.is_some() && chi3.is_some(),
    );
    let (Some(eps), Some(chi1), Some(chi2), Some(chi3)) = (eps, chi1, chi2, chi3) else {
        return Ok(ch.done(10));
    };
    ch.push(
        "the counit is the unit of the character ring",
        (0..11).all(|k| table[eps][k] == indicator(k)),
    );

    // Products with the degree-2 characters.
    for &p in &[p1, p2] {
        ch.push(
            "multiplying a degree-2 character by the v- or r-flipping character fixes it",
            table[p][chi1] == indicator(p) && table[p][chi2] == indicator(p),
        );
    }
    ch.push(
        "multiplying by the s-flipping character swaps the two degree-2 characters",
        table[p1][chi3] == indicator(p2) && table[p2][chi3] == indicator(p1),
    );

    let pair_slot = |a: usize, c: usize| lone(&table[a][c]);
    let c12 = pair_slot(chi1, chi2);
    let c13 = pair_slot(chi1, chi3);
    let c23 = pair_slot(chi2, chi3);
    let c123 = c23.and_then(|k| pair_slot(chi1, k));
    if let (Some(c12), Some(c13), Some(c23), Some(c123)) = (c12, c13, c23, c123) {
        let sum = |slots: [usize; 4]| {
            let mut m = vec![0i64; 11];
            for k in slots {
                m[k] += 1;
            }
            m
        };
        let square = sum([eps, chi1, chi2, c12]);
        ch.push(
            "each degree-2 character squares to the sum of the four v-fixing linear characters",
            table[p1][p1] == square && table[p2][p2] == square,
        );
        ch.push(
            "the product of the two degree-2 characters is the sum of the four v-flipping linear characters",
            table[p1][p2] == sum([chi3, c13, c23, c123]),
        );
    } else {
        ch.push("the products of sign characters are single linear characters", false);
    }

    ch.push(
        "multiplying the degree-4 character by any linear character fixes it",
        linears.iter().all(|&l| table[l][rho] == indicator(rho)),
    );
    let mut twice_rho = vec![0i64; 11];
    twice_rho[rho] = 2;
    ch.push(
        "multiplying the degree-4 character by a degree-2 character doubles it",
        table[p1][rho] == twice_rho && table[p2][rho] == twice_rho,
    );
    let mut rho_square = vec![0i64; 11];
    for &l in &linears {
        rho_square[l] = 1;
    }
    rho_square[p1] = 2;
    rho_square[p2] = 2;
    ch.push(
        "the degree-4 character squares to all linear characters plus twice each degree-2 character",
        table[rho][rho] == rho_square,
    );
    Ok(ch.done(10))
}

/// Criterion 11: M₁, M₂, M₃ are the only eight-dimensional Hopf
/// subalgebras of the biproduct, only M₂ is normal, and the quotient by
/// M₂ is the group algebra of Z2×Z2 in an exact abelian extension that
/// is neither central nor cocentral.
fn c11_eight(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let subs = ctx.subalgebras_b(variant, 8)?;
    ch.push(
        "there are exactly three eight-dimensional Hopf subalgebras",
        subs.len() == 3,
    );
    let m = ctx.m_spans(variant)?;
    ch.push(
        "they are M1, M2, and M3",
        subs.len() == 3 && m.iter().all(|span| subs.contains(span)),
    );
    let mut flags = [false; 3];
    for (k, span) in m.iter().enumerate() {
        flags[k] = is_normal_hopf_subalgebra(&sc.b, span)?;
    }
    ch.push(
        "the normality flags are (false, true, false) for (M1, M2, M3)",
        flags == [false, true, false],
    );
    let (q, pi_q) = ctx.q_quotient(variant)?;
    ch.push("the quotient by M2 is four-dimensional", q.dim == 4);
    ch.push(
        "the quotient by M2 is the group algebra of Z2xZ2",
        recognize_hopf(q)? == "K[Z2xZ2]",
    );
    let m2_alg = &ctx.m_algebras(variant)?[1];
    let iota = HopfMorphism::new(Matrix::from_cols(&m[1].basis()));
    let report = verify_extension(m2_alg, &sc.b, q, &iota, pi_q)?;
    ch.push("the sequence M2 -> B -> B/BM2+ is exact", report.passed());
    ch.push("that extension is abelian", report.abelian());
    ch.push(
        "it is neither central nor cocentral",
        !report.central && !report.cocentral,
    );
    Ok(ch.done(11))
}

/// Criterion 12: the four-dimensional Hopf subalgebras are exactly the
/// seven group algebras of order-4 subgroups of the group-likes, only
/// the one on {1, u², s, u²s} is normal, and its quotient is the group
/// algebra of D8 in an exact abelian extension that is neither central
/// nor cocentral.
fn c12_four(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let sc = ctx.scenario(variant);
    let subs = ctx.subalgebras_b(variant, 4)?;
    ch.push(
        "there are exactly seven four-dimensional Hopf subalgebras",
        subs.len() == 7,
    );
    let expected: Vec<Subspace> = Scenario::grouplike_subgroups()
        .iter()
        .map(Scenario::subgroup_span)
        .collect();
    ch.push(
        "each is the group algebra of an order-4 subgroup of the group-likes",
        subs.len() == 7 && expected.iter().all(|span| subs.contains(span)),
    );
    let mut normal_subs = Vec::new();
    for span in subs {
        if is_normal_hopf_subalgebra(&sc.b, span)? {
            normal_subs.push(span.clone());
        }
    }
    let p = Scenario::subgroup_span(&Scenario::grouplike_subgroups()[0]);
    ch.push(
        "only the span of {1, u^2, s, u^2 s} is normal",
        normal_subs.len() == 1 && normal_subs[0] == p,
    );
    ch.push(
        "that span is the intersection of M1 and M2",
        sc.p_span(ctx.m_spans(variant)?) == p,
    );
    let (pq, pi_p) = ctx.p_quotient(variant)?;
    ch.push("the quotient by P is eight-dimensional", pq.dim == 8);
    ch.push(
        "the quotient by P is the group algebra of D8",
        recognize_hopf(pq)? == "K[D8]",
    );
    let p_alg = restrict_hopf(&sc.b, &p)?;
    let iota = HopfMorphism::new(Matrix::from_cols(&p.basis()));
    let report = verify_extension(&p_alg, &sc.b, pq, &iota, pi_p)?;
    ch.push("the sequence P -> B -> B/BP+ is exact", report.passed());
    ch.push("that extension is abelian", report.abelian());
    ch.push(
        "it is neither central nor cocentral",
        !report.central && !report.cocentral,
    );
    Ok(ch.done(12))
}

/// Criterion 13: the map extending x′ ↦ u, y′ ↦ v·r identically on the
/// group part is an isomorphism from the twisted biproduct onto the
/// straight one, although the underlying eight-dimensional algebras are
/// genuinely different (one commutative, one not).
fn c13_variants(ctx: &SuiteContext) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let source = ctx.scenario(Variant::APrime);
    let target = ctx.scenario(Variant::A);
    let f = ctx.iso();

    let report = verify_morphism(&source.b, &target.b, f);
    ch.push("the extended map is a Hopf morphism", report.is_hopf_morphism());
    ch.push("it is bijective", report.bijective);
    ch.push("it sends u to u", f.apply(&source.u()) == target.u());
    let vr = target.b.mul_vec(&target.v(), &target.r());
    ch.push("it sends v to v·r", f.apply(&source.v()) == vr);
    ch.push(
        "it fixes the group part pointwise",
        (0..4).all(|k| f.apply(&Vector::unit(32, k)) == Vector::unit(32, k)),
    );
    let straight_commutative = comm_flags(&target.yd.plain()).0;
    let twisted_commutative = comm_flags(&source.yd.plain()).0;
    ch.push(
        "the straight eight-dimensional algebra is commutative, the twisted one is not",
        straight_commutative && !twisted_commutative,
    );
    Ok(ch.done(13))
}

/// Criterion 14: dualizing commutes with forming the biproduct for both
/// variants and for the group-like span, the double dual is the
/// identity on structure constants, and the integrals certify that both
/// biproducts are semisimple and cosemisimple.
fn c14_duality(ctx: &SuiteContext, variant: Variant) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    for v in Variant::ALL {
        let report = biproduct_duality_check(&ctx.scenario(v).yd)?;
        ch.push(
            format!(
                "the dual of the biproduct of {} is the biproduct of the dual",
                v.tag()
            ),
            report.dim == 32 && report.passed(),
        );
    }
    let c_report = biproduct_duality_check(&ctx.scenario(variant).c)?;
    ch.push(
        "the dual of the biproduct of the group-like span is the biproduct of its dual",
        c_report.dim == 16 && c_report.passed(),
    );
    let b = ctx.b(variant);
    let double = dual_hopf(ctx.dual_b(variant));
    ch.push(
        "the double dual has the same structure constants",
        same_structure(b, &double),
    );
    for v in Variant::ALL {
        let data = integrals(ctx.b(v))?;
        ch.push(
            format!("the integrals of {} certify semisimplicity", display_name(v)),
            data.semisimple,
        );
        ch.push(
            format!(
                "the integrals of {} certify cosemisimplicity",
                display_name(v)
            ),
            data.cosemisimple,
        );
    }
    Ok(ch.done(14))
}

/// The live expected-value record for one parameter, in the exact shape
/// stored in the frozen bundle.  Always computed from the straight
/// variant, which the bundle records.
pub fn fixture_record(ctx: &SuiteContext) -> Result<Value, CatalogError> {
    let variant = Variant::A;
    let sc = ctx.scenario(variant);
    let b = &sc.b;
    let u = sc.u();
    let v = sc.v();
    let r = sc.r();
    let s = sc.s();

    let indices = |vs: &[Vector]| -> Vec<usize> {
        let mut out: Vec<usize> = vs.iter().filter_map(unit_index).collect();
        out.sort_unstable();
        out
    };
    let gs = ctx.grouplikes_b(variant)?;
    let central = central_grouplikes(b)?;
    let grouplike_group_name = recognize_group(&grouplike_group(b, gs)?);
    let dual = ctx.dual_b(variant);
    let dual_gs = grouplikes(dual)?;
    let dual_group_name = recognize_group(&grouplike_group(dual, &dual_gs)?);

    let quad = vec![u.clone(), v.clone(), r.clone(), s.clone()];
    let mut table: Vec<Vec<i64>> = ctx
        .characters_b(variant)?
        .iter()
        .map(|chi| sign_pattern(chi, &quad).unwrap_or_default())
        .collect();
    table.sort();
    let mut central_table: Vec<Vec<i64>> = central_grouplikes(dual)?
        .iter()
        .map(|chi| sign_pattern(chi, &quad).unwrap_or_default())
        .collect();
    central_table.sort();

    let mut degrees: Vec<i64> = ctx
        .irreducibles_b(variant)?
        .iter()
        .filter_map(|chi| as_small_int(&chi.dot(&b.unit)))
        .collect();
    degrees.sort_unstable();

    let mut counts = serde_json::Map::new();
    for dim in [2usize, 4, 8, 16] {
        counts.insert(
            dim.to_string(),
            json!(ctx.subalgebras_b(variant, dim)?.len()),
        );
    }

    let mut middle_quotients: Vec<String> = Vec::new();
    for (quotient, _) in ctx.n_quotients(variant)? {
        middle_quotients.push(recognize_hopf(quotient)?);
    }
    middle_quotients.sort();

    Ok(json!({
        "comultiplication": {
            "u": tensor_json(&b.comult_vec(&u)),
            "v": tensor_json(&b.comult_vec(&v)),
            "r": tensor_json(&b.comult_vec(&r)),
            "s": tensor_json(&b.comult_vec(&s)),
        },
        "antipode": {
            "u": vector_json(&b.antipode_vec(&u)),
            "v": vector_json(&b.antipode_vec(&v)),
            "r": vector_json(&b.antipode_vec(&r)),
            "s": vector_json(&b.antipode_vec(&s)),
        },
        "center_dim": ctx.center_b(variant).dim(),
        "center_basis": subspace_json(ctx.center_b(variant)),
        "grouplike_indices": indices(gs),
        "central_grouplike_indices": indices(&central),
        "grouplike_group": grouplike_group_name,
        "dual_grouplike_group": dual_group_name,
        "character_table": table,
        "central_character_table": central_table,
        "wedderburn_sizes": ctx.wedderburn_b(variant)?.sizes(),
        "dual_wedderburn_sizes": ctx.wedderburn_dual_b(variant)?.sizes(),
        "irreducible_degrees": degrees,
        "subalgebra_counts": Value::Object(counts),
        "quotient_recognitions": {
            "by_n": recognize_hopf(&ctx.z_quotient(variant)?.0)?,
            "by_m2": recognize_hopf(&ctx.q_quotient(variant)?.0)?,
            "by_p": recognize_hopf(&ctx.p_quotient(variant)?.0)?,
            "of_n": middle_quotients,
        },
    }))
}

/// Criterion 15: the live record agrees field by field with the frozen
/// bundle checked into the repository.
fn c15_bundle(ctx: &SuiteContext) -> Result<CriterionResult, CatalogError> {
    let mut ch = Checks::new();
    let doc = fixture_document()?;
    ch.push(
        "the frozen bundle records the straight variant",
        doc["variant"] == json!("A"),
    );
    match fixture_scenario(&doc, ctx.zeta_name) {
        None => ch.push(
            format!("a frozen record exists for parameter {}", ctx.zeta_name),
            false,
        ),
        Some(expected) => {
            ch.push(
                format!("a frozen record exists for parameter {}", ctx.zeta_name),
                true,
            );
            let live = fixture_record(ctx)?;
            let expected_map = expected.as_object().cloned().unwrap_or_default();
            let live_map = live.as_object().cloned().unwrap_or_default();
            let keys: BTreeSet<&String> = expected_map.keys().chain(live_map.keys()).collect();
            for key in keys {
                ch.push(
                    format!("`{key}` matches the frozen record"),
                    expected_map.get(key) == live_map.get(key),
                );
            }
        }
    }
    Ok(ch.done(15))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_names_are_distinct_and_snake_case() {
        let names: Vec<&str> = (1..=CRITERION_COUNT).map(criterion_name).collect();
        let set: BTreeSet<&&str> = names.iter().collect();
        assert_eq!(set.len(), CRITERION_COUNT);
        for name in names {
            assert!(name
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_'));
        }
    }

    #[test]
    fn check_lists_report_failures_by_label() {
        let mut ch = Checks::new();
        ch.push("first", true);
        ch.push("second", false);
        let result = ch.done(3);
        assert_eq!(result.name, "center_dimension_and_basis");
        assert!(!result.passed());
        assert_eq!(result.failures(), vec!["second"]);
        assert_eq!(result.json()["passed"], json!(false));
    }
}
