//! Solving the antipode convolution equations, and integrals.
//!
//! Two exact strategies are layered:
//!
//! 1. the integral formula `S(h) = Σ λ(h·Λ₍₁₎) Λ₍₂₎`, where `Λ` is a left
//!    integral in `H` and `λ` a right integral in `H*` normalized so
//!    `λ(Λ) = 1` — this costs one kernel computation on each side;
//! 2. the convolution inverse of the identity computed through its minimal
//!    polynomial in the convolution algebra `End(H)` — fully general, used
//!    when the integral route does not produce a verified solution.
//!
//! Whatever either path produces is verified against both convolution
//! equations before being returned, so `solve_antipode` can only hand back
//! an actual antipode.

use crate::exact_math::{kernel, solve, Matrix, Vector};

use super::algebra::HopfAlgebra;
use super::HopfError;

/// Integral data for a finite-dimensional Hopf algebra.
#[derive(Clone, Debug)]
pub struct IntegralData {
    /// Basis vector of the (1-dimensional) space of left integrals in `H`.
    pub left_integral: Vector,
    /// Basis vector of the right integrals in `H`.
    pub right_integral: Vector,
    /// Basis covector of the left integrals in `H*`.
    pub dual_left_integral: Vector,
    /// Basis covector of the right integrals in `H*`.
    pub dual_right_integral: Vector,
    /// `ε(Λ) ≠ 0` — equivalent to semisimplicity in characteristic zero.
    pub semisimple: bool,
    /// `λ(1) ≠ 0` — equivalent to cosemisimplicity.
    pub cosemisimple: bool,
}

/// Space of left integrals: `{Λ : b·Λ = ε(b)·Λ for all b}`.
fn left_integral_space(h: &HopfAlgebra) -> Vec<Vector> {
    let n = h.dim;
    let mut rows: Vec<Vector> = Vec::with_capacity(n * n);
    for i in 0..n {
        let li = h.left_mult_matrix(&h.basis_vector(i));
        let eps = &h.counit[i];
        for r in 0..n {
            let mut row = li.row_vector(r);
            if !eps.is_zero() {
                row[r] = &row[r] - eps;
            }
            rows.push(row);
        }
    }
    kernel(&Matrix::from_rows(&rows))
}

/// Space of right integrals: `{Λ : Λ·b = ε(b)·Λ}`.
fn right_integral_space(h: &HopfAlgebra) -> Vec<Vector> {
    let n = h.dim;
    let mut rows: Vec<Vector> = Vec::with_capacity(n * n);
    for i in 0..n {
        let ri = h.right_mult_matrix(&h.basis_vector(i));
        let eps = &h.counit[i];
        for r in 0..n {
            let mut row = ri.row_vector(r);
            if !eps.is_zero() {
                row[r] = &row[r] - eps;
            }
            rows.push(row);
        }
    }
    kernel(&Matrix::from_rows(&rows))
}

/// Right integrals in the dual: covectors `λ` with `(λ ⊗ id)Δ(b) = λ(b)·1`.
fn dual_right_integral_space(h: &HopfAlgebra) -> Vec<Vector> {
    let n = h.dim;
    // Equations indexed by (i, k), unknowns λ_j:
    //   Σ_j d[i][j][k] λ_j  =  λ_i · unit_k.
    let mut rows: Vec<Vector> = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut block = Matrix::zeros(n, n);
        for (j, k, d) in h.comult.plane_support(i) {
            block[(k, j)] += d;
        }
        for k in 0..n {
            let mut row = block.row_vector(k);
            let u = &h.unit[k];
            if !u.is_zero() {
                row[i] = &row[i] - u;
            }
            rows.push(row);
        }
    }
    kernel(&Matrix::from_rows(&rows))
}

/// Left integrals in the dual: covectors `λ` with `(id ⊗ λ)Δ(b) = λ(b)·1`.
fn dual_left_integral_space(h: &HopfAlgebra) -> Vec<Vector> {
    let n = h.dim;
    // Equations indexed by (i, j), unknowns λ_k:
    //   Σ_k d[i][j][k] λ_k  =  λ_i · unit_j.
    let mut rows: Vec<Vector> = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut block = Matrix::zeros(n, n);
        for (j, k, d) in h.comult.plane_support(i) {
            block[(j, k)] += d;
        }
        for j in 0..n {
            let mut row = block.row_vector(j);
            let u = &h.unit[j];
            if !u.is_zero() {
                row[i] = &row[i] - u;
            }
            rows.push(row);
        }
    }
    kernel(&Matrix::from_rows(&rows))
}

/// Computes all four integral spaces, requiring each to be one-dimensional.
pub fn integrals(h: &HopfAlgebra) -> Result<IntegralData, HopfError> {
    let li = left_integral_space(h);
    let ri = right_integral_space(h);
    let dli = dual_left_integral_space(h);
    let dri = dual_right_integral_space(h);
    for space in [&li, &ri, &dli, &dri] {
        if space.len() != 1 {
            return Err(HopfError::IntegralDimension(space.len()));
        }
    }
    let left_integral = li.into_iter().next().unwrap();
    let right_integral = ri.into_iter().next().unwrap();
    let dual_left_integral = dli.into_iter().next().unwrap();
    let dual_right_integral = dri.into_iter().next().unwrap();
    let semisimple = !h.counit_vec(&left_integral).is_zero();
    let cosemisimple = !dual_left_integral.dot(&h.unit).is_zero();
    Ok(IntegralData {
        left_integral,
        right_integral,
        dual_left_integral,
        dual_right_integral,
        semisimple,
        cosemisimple,
    })
}

/// Checks both antipode convolution equations for a candidate matrix.
fn antipode_ok(h: &HopfAlgebra, s: &Matrix) -> bool {
    let n = h.dim;
    for i in 0..n {
        let mut left = Vector::zeros(n);
        let mut right = Vector::zeros(n);
        for (j, k, d) in h.comult.plane_support(i) {
            left.add_assign_scaled(&h.mul_vec(&s.col_vector(j), &h.basis_vector(k)), d);
            right.add_assign_scaled(&h.mul_vec(&h.basis_vector(j), &s.col_vector(k)), d);
        }
        let expected = h.unit.scale(&h.counit[i]);
        if left != expected || right != expected {
            return false;
        }
    }
    true
}

/// The integral-formula candidate, when the integral spaces cooperate.
fn antipode_from_integrals(h: &HopfAlgebra) -> Option<Matrix> {
    let li = left_integral_space(h);
    let dri = dual_right_integral_space(h);
    let (lambda_cap, lambda) = match (&li[..], &dri[..]) {
        ([cap], [lam]) => (cap, lam),
        _ => return None,
    };
    let pairing = lambda.dot(lambda_cap);
    let scale = pairing.inv().ok()?;
    let lambda = lambda.scale(&scale);
    // W[(j, k)] = coefficient of e_j ⊗ e_k in Δ(Λ).
    let w = h.comult_vec(lambda_cap);
    let n = h.dim;
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        // S(e_i) = Σ_{j,k} W[(j,k)] · λ(e_i e_j) · e_k.
        for ((j, k), wjk) in &w {
            let prod = h.mult.fiber_vector(i, *j);
            let val = lambda.dot(&prod);
            if !val.is_zero() {
                s[(*k, i)] += &(&val * wjk);
            }
        }
    }
    Some(s)
}

/// Convolution product of two endomorphism matrices:
/// `(F * G)(b) = Σ F(b₍₁₎)·G(b₍₂₎)`.
fn convolve(h: &HopfAlgebra, f: &Matrix, g: &Matrix) -> Matrix {
    let n = h.dim;
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        let mut col = Vector::zeros(n);
        for (j, k, d) in h.comult.plane_support(i) {
            col.add_assign_scaled(&h.mul_vec(&f.col_vector(j), &g.col_vector(k)), d);
        }
        for r in 0..n {
            out[(r, i)] = col[r].clone();
        }
    }
    out
}

fn vectorize(m: &Matrix) -> Vector {
    let n = m.rows();
    Vector::from_fn(n * n, |idx| m[(idx / n, idx % n)].clone())
}

/// The convolution inverse of `id`, via the minimal polynomial of `id` in
/// the convolution algebra.  Returns `None` when `id` is not convolution
/// invertible.
fn antipode_from_convolution_powers(h: &HopfAlgebra) -> Option<Matrix> {
    let n = h.dim;
    // Convolution unit: b ↦ ε(b)·1.
    let mut unit_conv = Matrix::zeros(n, n);
    for i in 0..n {
        for r in 0..n {
            unit_conv[(r, i)] = &h.counit[i] * &h.unit[r];
        }
    }
    let id = Matrix::identity(n);
    let mut powers: Vec<Matrix> = vec![unit_conv, id.clone()];
    let cap = n * n + 1;
    loop {
        // First linear dependence: id^m in the span of lower powers, with
        // coordinates taken against the powers themselves.
        let flat: Vec<Vector> = powers.iter().map(vectorize).collect();
        let (last, lower) = flat.split_last().unwrap();
        let stacked = Matrix::from_cols(lower);
        if let Ok(coords) = solve(&stacked, last) {
            // id^m = Σ_{j<m} coords_j·id^j, so
            // id * (id^{m-1} − Σ_{j≥1} coords_j·id^{j-1}) = coords_0·unit.
            let c0 = &coords[0];
            if c0.is_zero() {
                return None;
            }
            let m = powers.len() - 1;
            let mut acc = powers[m - 1].clone();
            for j in 1..m {
                if !coords[j].is_zero() {
                    acc = acc.sub(&powers[j - 1].scale(&coords[j]));
                }
            }
            let inv = c0.inv().ok()?;
            return Some(acc.scale(&inv));
        }
        if powers.len() > cap {
            return None;
        }
        let next = convolve(h, powers.last().unwrap(), &id);
        powers.push(next);
    }
}

/// Solves for the antipode of a verified bialgebra.
///
/// Returns the unique matrix satisfying both convolution equations, or
/// [`HopfError::NoAntipode`] when the bialgebra is not Hopf.  The result is
/// always re-verified exactly before being returned.
pub fn solve_antipode(h: &HopfAlgebra) -> Result<Matrix, HopfError> {
    if let Some(s) = antipode_from_integrals(h) {
        if antipode_ok(h, &s) {
            return Ok(s);
        }
    }
    if let Some(s) = antipode_from_convolution_powers(h) {
        if antipode_ok(h, &s) {
            return Ok(s);
        }
    }
    Err(HopfError::NoAntipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{GaussianRational, Tensor3};

    /// Group algebra of ℤ₄ — the antipode g ↦ g⁻¹ is not the identity
    /// matrix, so orientation errors in the solver would show up here.
    fn kz4() -> HopfAlgebra {
        let n = 4;
        let mut mult = Tensor3::zeros(n, n, n);
        let mut comult = Tensor3::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                mult.set(i, j, (i + j) % n, GaussianRational::one());
            }
            comult.set(i, i, i, GaussianRational::one());
        }
        HopfAlgebra::new(
            (0..n).map(|i| format!("g{i}")).collect(),
            mult,
            Vector::unit(n, 0),
            comult,
            Vector::from_fn(n, |_| GaussianRational::one()),
            None,
        )
    }

    #[test]
    fn antipode_of_cyclic_group_algebra() {
        let mut h = kz4();
        let s = solve_antipode(&h).unwrap();
        // S(g^k) = g^{4-k}
        for j in 0..4 {
            let img = s.col_vector(j);
            assert_eq!(img, Vector::unit(4, (4 - j) % 4), "S(g^{j})");
        }
        h.antipode = Some(s);
        assert!(h.verify_hopf().passed());
    }

    #[test]
    fn convolution_fallback_agrees_on_group_algebra() {
        let h = kz4();
        let a = antipode_from_integrals(&h).unwrap();
        let b = antipode_from_convolution_powers(&h).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn integrals_of_group_algebra() {
        let h = kz4();
        let data = integrals(&h).unwrap();
        assert!(data.semisimple);
        assert!(data.cosemisimple);
        // Left integral of a group algebra: a multiple of the sum of all
        // group elements.
        let sum = Vector::from_fn(4, |_| data.left_integral[0].clone());
        assert_eq!(data.left_integral, sum);
        assert!(!data.left_integral.is_zero());
    }

    #[test]
    fn bialgebra_without_antipode_is_refused() {
        // Monoid bialgebra of {1, z} with z² = z: z has no convolution
        // inverse, so there is no antipode.
        let n = 2;
        let mut mult = Tensor3::zeros(n, n, n);
        mult.set(0, 0, 0, GaussianRational::one());
        mult.set(0, 1, 1, GaussianRational::one());
        mult.set(1, 0, 1, GaussianRational::one());
        mult.set(1, 1, 1, GaussianRational::one());
        let mut comult = Tensor3::zeros(n, n, n);
        comult.set(0, 0, 0, GaussianRational::one());
        comult.set(1, 1, 1, GaussianRational::one());
        let h = HopfAlgebra::new(
            vec!["1".into(), "z".into()],
            mult,
            Vector::unit(n, 0),
            comult,
            Vector::from_fn(n, |_| GaussianRational::one()),
            None,
        );
        assert!(h.verify_hopf().is_bialgebra());
        assert!(matches!(solve_antipode(&h), Err(HopfError::NoAntipode)));
    }
}
