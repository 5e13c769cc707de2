//! Shared test fixtures for the Yetter–Drinfel'd modules.

use crate::exact_math::{GaussianRational, Matrix, Tensor3, Vector};
use crate::groups::{build_group, GroupSpec};

use super::YDHopfAlgebra;

/// The "super-line": the exterior algebra `Λ(v)` on one generator as a
/// Yetter–Drinfel'd Hopf algebra over `K[ℤ₂]`.
///
/// Basis `(1, v)` with `v² = 0`, `Δv = v⊗1 + 1⊗v`, `ε(v) = 0`; the
/// nontrivial group element negates `v`, and `v` sits in the nontrivial
/// grade (`δ(v) = g⊗v`).  Its biproduct is the 4-dimensional algebra with
/// a grouplike `g` and a skew-primitive `x` satisfying `x² = 0`,
/// `xg = -gx`.
pub(crate) fn super_line() -> YDHopfAlgebra {
    let group = build_group(&GroupSpec::Abelian(vec![2]));
    let one = GaussianRational::one;

    let mut mult = Tensor3::zeros(2, 2, 2);
    mult.set(0, 0, 0, one());
    mult.set(0, 1, 1, one());
    mult.set(1, 0, 1, one());
    // v·v = 0.

    let mut comult = Tensor3::zeros(2, 2, 2);
    comult.set(0, 0, 0, one());
    comult.set(1, 1, 0, one());
    comult.set(1, 0, 1, one());

    let counit = Vector::unit(2, 0);

    let mut sign = Matrix::identity(2);
    sign[(1, 1)] = -&one();
    let action = vec![Matrix::identity(2), sign];

    let mut coaction = Tensor3::zeros(2, 2, 2);
    coaction.set(0, 0, 0, one());
    coaction.set(1, 1, 1, one());

    YDHopfAlgebra::new(
        group,
        vec!["1".into(), "v".into()],
        mult,
        Vector::unit(2, 0),
        comult,
        counit,
        None,
        action,
        coaction,
    )
}

/// A corrupted super-line: `v² = 1` and `Δv = v⊗v`, `ε(v) = 1`.
///
/// Every *plain* algebra and coalgebra law still holds (as a plain
/// object this is just the group algebra of ℤ₂), but the comultiplication
/// is not multiplicative with respect to the braiding:
/// `Δ(v)Δ(v) = v(g.v) ⊗ p_g(v)v = -1⊗1` while `Δ(v²) = 1⊗1`.
pub(crate) fn broken_super_line() -> YDHopfAlgebra {
    let mut yd = super_line();
    yd.mult.set(1, 1, 0, GaussianRational::one());
    yd.comult.set(1, 1, 0, GaussianRational::zero());
    yd.comult.set(1, 0, 1, GaussianRational::zero());
    yd.comult.set(1, 1, 1, GaussianRational::one());
    yd.counit = Vector::from_fn(2, |_| GaussianRational::one());
    yd
}
