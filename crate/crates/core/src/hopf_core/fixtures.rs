//! Small Hopf algebras shared across test modules.

use crate::exact_math::{GaussianRational, Matrix, Tensor3, Vector};

use super::algebra::HopfAlgebra;

/// Group algebra of ℤ_n with basis `g^0, …, g^{n-1}` and the permutation
/// antipode attached.
pub(crate) fn kzn(n: usize) -> HopfAlgebra {
    let mut mult = Tensor3::zeros(n, n, n);
    let mut comult = Tensor3::zeros(n, n, n);
    let mut antipode = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, (i + j) % n, GaussianRational::one());
        }
        comult.set(i, i, i, GaussianRational::one());
        antipode[((n - i) % n, i)] = GaussianRational::one();
    }
    HopfAlgebra::new(
        (0..n).map(|i| format!("g{i}")).collect(),
        mult,
        Vector::unit(n, 0),
        comult,
        Vector::from_fn(n, |_| GaussianRational::one()),
        Some(antipode),
    )
}

/// The 4-dimensional Hopf algebra ⟨g, x⟩ with g² = 1, x² = 0, x·g = −g·x,
/// Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x.  Basis order (1, g, x, gx); no antipode
/// attached.  Neither commutative, nor cocommutative, nor semisimple.
pub(crate) fn taft2() -> HopfAlgebra {
    let n = 4;
    let one = GaussianRational::one;
    let mut mult = Tensor3::zeros(n, n, n);
    // Multiplication table on (1, g, x, gx); signs from xg = −gx.
    let table: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    for i in 0..4 {
        for j in 0..4 {
            let (k, sign) = table[i][j];
            if sign != 0 {
                mult.set(i, j, k, GaussianRational::from_int(sign));
            }
        }
    }
    let mut comult = Tensor3::zeros(n, n, n);
    comult.set(0, 0, 0, one());
    comult.set(1, 1, 1, one());
    comult.set(2, 2, 0, one());
    comult.set(2, 1, 2, one());
    comult.set(3, 3, 1, one());
    comult.set(3, 0, 3, one());
    let mut counit = Vector::zeros(n);
    counit[0] = one();
    counit[1] = one();
    HopfAlgebra::new(
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        mult,
        Vector::unit(n, 0),
        comult,
        counit,
        None,
    )
}
