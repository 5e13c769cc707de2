//! Exhaustive verification of the Yetter–Drinfel'd Hopf axioms.

use crate::exact_math::Matrix;
use crate::hopf_core::{add_scaled_tensor, verify_morphism, HopfMorphism, TensorElem};

use super::YDHopfAlgebra;

/// Result of checking every axiom of a braided Hopf algebra in the
/// Yetter–Drinfel'd category.  Antipode fields are `None` when no
/// antipode is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdReport {
    /// `(ab)c = a(bc)` on basis triples.
    pub associativity: bool,
    /// `1·a = a = a·1`.
    pub unit_laws: bool,
    /// `(Δ⊗id)Δ = (id⊗Δ)Δ` on basis elements.
    pub coassociativity: bool,
    /// `(ε⊗id)Δ = id = (id⊗ε)Δ` and `ε(1) = 1`.
    pub counit_laws: bool,
    /// `ε(ab) = ε(a)ε(b)` — ε is an algebra map even in the braided world.
    pub counit_multiplicative: bool,
    /// `Δ(1) = 1⊗1`.
    pub comult_unit: bool,
    /// The action matrices form a representation of the group.
    pub action_representation: bool,
    /// Every group element acts as an algebra and coalgebra automorphism.
    pub action_bialgebra_maps: bool,
    /// The projections `p_g` are orthogonal idempotents summing to `id`.
    pub comodule: bool,
    /// `h.p_g(v) = p_{hgh⁻¹}(h.v)` — the Yetter–Drinfel'd condition.
    pub yd_compatibility: bool,
    /// `p_g(ab) = Σ_{hk=g} p_h(a)p_k(b)` and `p_g(1) = [g=1]·1`.
    pub coaction_algebra_map: bool,
    /// `Δp_g = Σ_{hk=g}(p_h⊗p_k)Δ` and `ε∘p_g = [g=1]·ε`.
    pub coaction_coalgebra_map: bool,
    /// `Δ(ab) = Δ(a)·Δ(b)` with the braided product on `A⊗A`.
    pub braided_comult_multiplicative: bool,
    /// Both convolution equations for the attached antipode.
    pub antipode_convolution: Option<bool>,
    /// `S(g.a) = g.S(a)`.
    pub antipode_linear: Option<bool>,
    /// `p_g∘S = S∘p_g`.
    pub antipode_colinear: Option<bool>,
}

impl YdReport {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
            && self.antipode_convolution == Some(true)
            && self.antipode_linear == Some(true)
            && self.antipode_colinear == Some(true)
    }

    /// Names of all failing checks (`None` antipode fields do not count
    /// as failures here; `passed` additionally requires them).
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut flag = |ok: bool, name: &'static str| {
            if !ok {
                out.push(name);
            }
        };
        flag(self.associativity, "associativity");
        flag(self.unit_laws, "unit_laws");
        flag(self.coassociativity, "coassociativity");
        flag(self.counit_laws, "counit_laws");
        flag(self.counit_multiplicative, "counit_multiplicative");
        flag(self.comult_unit, "comult_unit");
        flag(self.action_representation, "action_representation");
        flag(self.action_bialgebra_maps, "action_bialgebra_maps");
        flag(self.comodule, "comodule");
        flag(self.yd_compatibility, "yd_compatibility");
        flag(self.coaction_algebra_map, "coaction_algebra_map");
        flag(self.coaction_coalgebra_map, "coaction_coalgebra_map");
        flag(
            self.braided_comult_multiplicative,
            "braided_comult_multiplicative",
        );
        flag(self.antipode_convolution != Some(false), "antipode_convolution");
        flag(self.antipode_linear != Some(false), "antipode_linear");
        flag(self.antipode_colinear != Some(false), "antipode_colinear");
        out
    }
}

/// Checks every axiom listed on [`YdReport`], exhaustively over basis
/// elements and group elements.
pub fn verify_yd(yd: &YDHopfAlgebra) -> YdReport {
    let plain = yd.plain();
    let plain_report = plain.verify_hopf();
    let n = yd.dim;
    let g_ord = yd.group.order;
    let group = &yd.group;
    let projections: Vec<Matrix> = (0..g_ord).map(|g| yd.projection(g)).collect();

    let action_representation = yd.action[group.identity].is_identity()
        && (0..g_ord).all(|g| {
            (0..g_ord).all(|h| {
                yd.action[g].mul_mat(&yd.action[h]) == yd.action[group.mul(g, h)]
            })
        });

    // Each g acts as a bialgebra automorphism; the same morphism check
    // also covers commutation with the antipode when one is attached.
    let mut action_bialgebra_maps = true;
    let mut antipode_linear = yd.antipode.as_ref().map(|_| true);
    for g in 0..g_ord {
        let rep = verify_morphism(&plain, &plain, &HopfMorphism::new(yd.action[g].clone()));
        if !(rep.algebra_map && rep.unit_preserved && rep.coalgebra_map && rep.counit_preserved)
        {
            action_bialgebra_maps = false;
        }
        if rep.antipode_intertwines == Some(false) {
            antipode_linear = Some(false);
        }
    }

    let comodule = {
        let mut sum = Matrix::zeros(n, n);
        for p in &projections {
            sum = sum.add(p);
        }
        sum.is_identity()
            && (0..g_ord).all(|g| {
                (0..g_ord).all(|h| {
                    let prod = projections[g].mul_mat(&projections[h]);
                    if g == h {
                        prod == projections[g]
                    } else {
                        prod.is_zero()
                    }
                })
            })
    };

    let yd_compatibility = (0..g_ord).all(|h| {
        (0..g_ord).all(|g| {
            let conj = group.mul(group.mul(h, g), group.inv(h));
            yd.action[h].mul_mat(&projections[g]) == projections[conj].mul_mat(&yd.action[h])
        })
    });

    let coaction_algebra_map = {
        let unit_ok = (0..g_ord).all(|g| {
            let img = projections[g].mul_vec(&yd.unit);
            if g == group.identity {
                img == yd.unit
            } else {
                img.is_zero()
            }
        });
        unit_ok
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let prod = yd.mult.fiber_vector(i, j);
                    (0..g_ord).all(|g| {
                        let lhs = projections[g].mul_vec(&prod);
                        let mut rhs = crate::exact_math::Vector::zeros(n);
                        for h in 0..g_ord {
                            for k in 0..g_ord {
                                if group.mul(h, k) == g {
                                    rhs = rhs.add(&plain.mul_vec(
                                        &projections[h].col_vector(i),
                                        &projections[k].col_vector(j),
                                    ));
                                }
                            }
                        }
                        lhs == rhs
                    })
                })
            })
    };

    let coaction_coalgebra_map = {
        let counit_ok = (0..g_ord).all(|g| {
            (0..n).all(|i| {
                let val = plain.counit_vec(&projections[g].col_vector(i));
                if g == group.identity {
                    val == yd.counit[i]
                } else {
                    val.is_zero()
                }
            })
        });
        counit_ok
            && (0..n).all(|i| {
                (0..g_ord).all(|g| {
                    let lhs = plain.comult_vec(&projections[g].col_vector(i));
                    let mut rhs = TensorElem::new();
                    for (a, b, d) in yd.comult.plane_support(i) {
                        for h in 0..g_ord {
                            for k in 0..g_ord {
                                if group.mul(h, k) == g {
                                    let t = plain.tensor_of(
                                        &projections[h].col_vector(a),
                                        &projections[k].col_vector(b),
                                    );
                                    add_scaled_tensor(&mut rhs, &t, d);
                                }
                            }
                        }
                    }
                    lhs == rhs
                })
            })
    };

    // Braided product on A⊗A: (a⊗b)(c⊗d) = Σ_g a(g.c) ⊗ p_g(b)d.
    let braided_comult_multiplicative = (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = plain.comult_vec(&yd.mult.fiber_vector(i, j));
            let mut rhs = TensorElem::new();
            for (a, b, x) in yd.comult.plane_support(i) {
                for (c, d, y) in yd.comult.plane_support(j) {
                    let scale = x * y;
                    for g in 0..g_ord {
                        let left = plain.mul_vec(
                            &plain.basis_vector(a),
                            &yd.action[g].col_vector(c),
                        );
                        let right = plain.mul_vec(
                            &projections[g].col_vector(b),
                            &plain.basis_vector(d),
                        );
                        let t = plain.tensor_of(&left, &right);
                        add_scaled_tensor(&mut rhs, &t, &scale);
                    }
                }
            }
            lhs == rhs
        })
    });

    let antipode_colinear = yd.antipode.as_ref().map(|s| {
        (0..g_ord).all(|g| projections[g].mul_mat(s) == s.mul_mat(&projections[g]))
    });

    let antipode_convolution = match (plain_report.antipode_left, plain_report.antipode_right) {
        (Some(l), Some(r)) => Some(l && r),
        _ => None,
    };

    YdReport {
        associativity: plain_report.associativity,
        unit_laws: plain_report.unit_left && plain_report.unit_right,
        coassociativity: plain_report.coassociativity,
        counit_laws: plain_report.counit_left && plain_report.counit_right && plain_report.counit_unit,
        counit_multiplicative: plain_report.counit_multiplicative,
        comult_unit: plain_report.comult_unit,
        action_representation,
        action_bialgebra_maps,
        comodule,
        yd_compatibility,
        coaction_algebra_map,
        coaction_coalgebra_map,
        braided_comult_multiplicative,
        antipode_convolution,
        antipode_linear,
        antipode_colinear,
    }
}
