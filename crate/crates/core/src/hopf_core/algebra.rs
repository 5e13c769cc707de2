//! The `HopfAlgebra` carrier type, element arithmetic, and axiom checking.

use std::collections::BTreeMap;

use crate::exact_math::{GaussianRational, Matrix, Tensor3, Vector};

/// A sparse element of the tensor square `H ⊗ H`, keyed by basis pairs.
pub type TensorElem = BTreeMap<(usize, usize), GaussianRational>;

/// Adds `scale · t` into `acc`, dropping entries that cancel to zero.
pub(crate) fn add_scaled_tensor(acc: &mut TensorElem, t: &TensorElem, scale: &GaussianRational) {
    for (key, v) in t {
        tensor_insert(acc, *key, &(scale * v));
    }
}

pub(crate) fn tensor_insert(t: &mut TensorElem, key: (usize, usize), v: &GaussianRational) {
    if v.is_zero() {
        return;
    }
    let slot = t.entry(key).or_insert_with(GaussianRational::zero);
    *slot += v;
    if slot.is_zero() {
        t.remove(&key);
    }
}

/// A finite-dimensional Hopf algebra (or bialgebra, when `antipode` is
/// `None`) given by structure constants over ℚ(i).
///
/// Conventions, shared across the crate:
/// * `mult.get(i, j, k)` is the coefficient of `e_k` in `e_i · e_j`;
/// * `comult.get(i, j, k)` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`;
/// * `unit` holds the coordinates of `1`;
/// * `counit[i]` is `ε(e_i)`;
/// * `antipode`, when present, has `S(e_j) = Σ_i antipode[(i, j)] e_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub mult: Tensor3,
    pub unit: Vector,
    pub comult: Tensor3,
    pub counit: Vector,
    pub antipode: Option<Matrix>,
}

/// Per-axiom outcome of [`HopfAlgebra::verify_hopf`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub associativity: bool,
    pub unit_left: bool,
    pub unit_right: bool,
    pub coassociativity: bool,
    pub counit_left: bool,
    pub counit_right: bool,
    pub comult_multiplicative: bool,
    pub counit_multiplicative: bool,
    pub comult_unit: bool,
    pub counit_unit: bool,
    pub antipode_left: Option<bool>,
    pub antipode_right: Option<bool>,
}

impl HopfReport {
    /// All bialgebra axioms hold.
    pub fn is_bialgebra(&self) -> bool {
        self.associativity
            && self.unit_left
            && self.unit_right
            && self.coassociativity
            && self.counit_left
            && self.counit_right
            && self.comult_multiplicative
            && self.counit_multiplicative
            && self.comult_unit
            && self.counit_unit
    }

    /// All axioms hold, including both antipode equations.
    pub fn passed(&self) -> bool {
        self.is_bialgebra()
            && self.antipode_left == Some(true)
            && self.antipode_right == Some(true)
    }

    /// Names of the axioms that failed (antipode axioms count as failed when
    /// the antipode is absent).
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut flag = |ok: bool, name: &'static str| {
            if !ok {
                out.push(name);
            }
        };
        flag(self.associativity, "associativity");
        flag(self.unit_left, "unit_left");
        flag(self.unit_right, "unit_right");
        flag(self.coassociativity, "coassociativity");
        flag(self.counit_left, "counit_left");
        flag(self.counit_right, "counit_right");
        flag(self.comult_multiplicative, "comult_multiplicative");
        flag(self.counit_multiplicative, "counit_multiplicative");
        flag(self.comult_unit, "comult_unit");
        flag(self.counit_unit, "counit_unit");
        flag(self.antipode_left == Some(true), "antipode_left");
        flag(self.antipode_right == Some(true), "antipode_right");
        out
    }
}

impl HopfAlgebra {
    /// Assembles and shape-checks a structure-constant Hopf algebra.
    pub fn new(
        basis_labels: Vec<String>,
        mult: Tensor3,
        unit: Vector,
        comult: Tensor3,
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Self {
        let dim = basis_labels.len();
        assert_eq!(mult.dims(), (dim, dim, dim), "mult tensor shape");
        assert_eq!(comult.dims(), (dim, dim, dim), "comult tensor shape");
        assert_eq!(unit.len(), dim, "unit length");
        assert_eq!(counit.len(), dim, "counit length");
        if let Some(s) = &antipode {
            assert_eq!((s.rows(), s.cols()), (dim, dim), "antipode shape");
        }
        HopfAlgebra {
            dim,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.dim, i)
    }

    /// Product of two elements given by coordinates.
    pub fn mul_vec(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, ai) in a.support() {
            for (j, bj) in b.support() {
                let c = ai * bj;
                for (k, t) in self.mult.fiber(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// Product of a list of elements, left to right; empty product is `1`.
    pub fn mul_many(&self, factors: &[&Vector]) -> Vector {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul_vec(&acc, f);
        }
        acc
    }

    /// `v^n` for n ≥ 0.
    pub fn power(&self, v: &Vector, n: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul_vec(&acc, v);
        }
        acc
    }

    /// Left-multiplication operator `L_v : w ↦ v·w` as a matrix.
    pub fn left_mult_matrix(&self, v: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, ai) in v.support() {
            for j in 0..self.dim {
                for (k, t) in self.mult.fiber(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        m[(k, j)] += &(ai * t);
                    }
                }
            }
        }
        m
    }

    /// Right-multiplication operator `R_v : w ↦ w·v` as a matrix.
    pub fn right_mult_matrix(&self, v: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (j, aj) in v.support() {
            for i in 0..self.dim {
                for (k, t) in self.mult.fiber(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        m[(k, i)] += &(aj * t);
                    }
                }
            }
        }
        m
    }

    /// `Δ(v)` as a sparse tensor-square element.
    pub fn comult_vec(&self, v: &Vector) -> TensorElem {
        let mut out = TensorElem::new();
        for (i, ai) in v.support() {
            for (j, k, d) in self.comult.plane_support(i) {
                tensor_insert(&mut out, (j, k), &(ai * d));
            }
        }
        out
    }

    /// `ε(v)`.
    pub fn counit_vec(&self, v: &Vector) -> GaussianRational {
        self.counit.dot(v)
    }

    /// `S(v)`; panics when no antipode is attached.
    pub fn antipode_vec(&self, v: &Vector) -> Vector {
        self.antipode
            .as_ref()
            .expect("antipode not attached")
            .mul_vec(v)
    }

    /// `a ⊗ b` as a sparse tensor-square element.
    pub fn tensor_of(&self, a: &Vector, b: &Vector) -> TensorElem {
        let mut out = TensorElem::new();
        for (i, ai) in a.support() {
            for (j, bj) in b.support() {
                tensor_insert(&mut out, (i, j), &(ai * bj));
            }
        }
        out
    }

    /// Componentwise product in `H ⊗ H`.
    pub fn tensor_mul(&self, a: &TensorElem, b: &TensorElem) -> TensorElem {
        let mut out = TensorElem::new();
        for ((p, q), x) in a {
            for ((r, s), y) in b {
                let c = x * y;
                for (k1, t1) in self.mult.fiber(*p, *r).iter().enumerate() {
                    if t1.is_zero() {
                        continue;
                    }
                    let c1 = &c * t1;
                    for (k2, t2) in self.mult.fiber(*q, *s).iter().enumerate() {
                        if !t2.is_zero() {
                            tensor_insert(&mut out, (k1, k2), &(&c1 * t2));
                        }
                    }
                }
            }
        }
        out
    }

    /// Exhaustive verification of every Hopf axiom over basis tuples.
    pub fn verify_hopf(&self) -> HopfReport {
        let n = self.dim;
        let one = &self.unit;

        let mut associativity = true;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.mult.fiber_vector(i, j);
                for k in 0..n {
                    let lhs = self.mul_vec(&ij, &self.basis_vector(k));
                    let jk = self.mult.fiber_vector(j, k);
                    let rhs = self.mul_vec(&self.basis_vector(i), &jk);
                    if lhs != rhs {
                        associativity = false;
                        break 'assoc;
                    }
                }
            }
        }

        let mut unit_left = true;
        let mut unit_right = true;
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul_vec(one, &e) != e {
                unit_left = false;
            }
            if self.mul_vec(&e, one) != e {
                unit_right = false;
            }
        }

        let mut coassociativity = true;
        'coassoc: for i in 0..n {
            // (Δ ⊗ id)Δ(e_i) and (id ⊗ Δ)Δ(e_i) as maps keyed by triples.
            let mut lhs: BTreeMap<(usize, usize, usize), GaussianRational> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), GaussianRational> = BTreeMap::new();
            for (j, k, d) in self.comult.plane_support(i) {
                for (p, q, dd) in self.comult.plane_support(j) {
                    let c = d * dd;
                    let slot = lhs.entry((p, q, k)).or_insert_with(GaussianRational::zero);
                    *slot += &c;
                }
                for (p, q, dd) in self.comult.plane_support(k) {
                    let c = d * dd;
                    let slot = rhs.entry((j, p, q)).or_insert_with(GaussianRational::zero);
                    *slot += &c;
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                coassociativity = false;
                break 'coassoc;
            }
        }

        let mut counit_left = true;
        let mut counit_right = true;
        for i in 0..n {
            let mut left = Vector::zeros(n);
            let mut right = Vector::zeros(n);
            for (j, k, d) in self.comult.plane_support(i) {
                left[k] += &(d * &self.counit[j]);
                right[j] += &(d * &self.counit[k]);
            }
            let e = self.basis_vector(i);
            if left != e {
                counit_left = false;
            }
            if right != e {
                counit_right = false;
            }
        }

        let mut comult_multiplicative = true;
        'cm: for i in 0..n {
            let di = self.comult_vec(&self.basis_vector(i));
            for j in 0..n {
                let dj = self.comult_vec(&self.basis_vector(j));
                let lhs = self.comult_vec(&self.mult.fiber_vector(i, j));
                let rhs = self.tensor_mul(&di, &dj);
                if lhs != rhs {
                    comult_multiplicative = false;
                    break 'cm;
                }
            }
        }

        let mut counit_multiplicative = true;
        for i in 0..n {
            for j in 0..n {
                let lhs = self.counit_vec(&self.mult.fiber_vector(i, j));
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    counit_multiplicative = false;
                }
            }
        }

        let comult_unit = self.comult_vec(one) == self.tensor_of(one, one);
        let counit_unit = self.counit_vec(one).is_one();

        let (antipode_left, antipode_right) = match &self.antipode {
            None => (None, None),
            Some(s) => {
                let mut left_ok = true;
                let mut right_ok = true;
                for i in 0..n {
                    let mut left = Vector::zeros(n);
                    let mut right = Vector::zeros(n);
                    for (j, k, d) in self.comult.plane_support(i) {
                        let sj = s.col_vector(j);
                        left.add_assign_scaled(&self.mul_vec(&sj, &self.basis_vector(k)), d);
                        let sk = s.col_vector(k);
                        right.add_assign_scaled(&self.mul_vec(&self.basis_vector(j), &sk), d);
                    }
                    let expected = one.scale(&self.counit[i]);
                    if left != expected {
                        left_ok = false;
                    }
                    if right != expected {
                        right_ok = false;
                    }
                }
                (Some(left_ok), Some(right_ok))
            }
        };

        HopfReport {
            associativity,
            unit_left,
            unit_right,
            coassociativity,
            counit_left,
            counit_right,
            comult_multiplicative,
            counit_multiplicative,
            comult_unit,
            counit_unit,
            antipode_left,
            antipode_right,
        }
    }
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfAlgebra(dim {})", self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 2-element group algebra K[ℤ₂], antipode = identity.
    pub fn kz2() -> HopfAlgebra {
        let mut mult = Tensor3::zeros(2, 2, 2);
        // g^i · g^j = g^{i+j mod 2}
        for i in 0..2 {
            for j in 0..2 {
                mult.set(i, j, (i + j) % 2, GaussianRational::one());
            }
        }
        let mut comult = Tensor3::zeros(2, 2, 2);
        for i in 0..2 {
            comult.set(i, i, i, GaussianRational::one());
        }
        let unit = Vector::unit(2, 0);
        let counit = Vector::from_fn(2, |_| GaussianRational::one());
        HopfAlgebra::new(
            vec!["1".into(), "g".into()],
            mult,
            unit,
            comult,
            counit,
            Some(Matrix::identity(2)),
        )
    }

    #[test]
    fn group_algebra_z2_passes() {
        let h = kz2();
        let report = h.verify_hopf();
        assert!(report.passed(), "failures: {:?}", report.failures());
    }

    #[test]
    fn broken_structure_is_caught() {
        // Make g idempotent: still a bialgebra, but S = id no longer solves
        // the antipode equations (g is not invertible).
        let mut h = kz2();
        h.mult.set(1, 1, 0, GaussianRational::zero());
        h.mult.set(1, 1, 1, GaussianRational::one());
        let report = h.verify_hopf();
        assert!(report.is_bialgebra());
        assert_eq!(report.antipode_left, Some(false));
        assert!(!report.passed());
        assert_eq!(report.failures(), vec!["antipode_left", "antipode_right"]);

        // Destroy associativity outright: 1·1 = g.
        let mut broken = kz2();
        broken.mult.set(0, 0, 0, GaussianRational::zero());
        broken.mult.set(0, 0, 1, GaussianRational::one());
        assert!(!broken.verify_hopf().associativity);
    }

    #[test]
    fn tensor_algebra_helpers() {
        let h = kz2();
        let g = h.basis_vector(1);
        let gg = h.tensor_of(&g, &g);
        let prod = h.tensor_mul(&gg, &gg);
        // (g ⊗ g)(g ⊗ g) = 1 ⊗ 1
        assert_eq!(prod, h.tensor_of(&h.unit, &h.unit));
        assert_eq!(h.comult_vec(&g), gg);
    }
}
