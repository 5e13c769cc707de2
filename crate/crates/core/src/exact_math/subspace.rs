//! Subspaces of ℚ(i)ⁿ in canonical form.
//!
//! A `Subspace` stores the reduced row-echelon basis of its row space, so two
//! subspaces are equal as sets exactly when their stored bases are equal
//! entry by entry.  That makes "the computed center equals the claimed
//! center" a literal comparison with no tolerance anywhere.

use super::linalg::rref;
use super::matrix::{Matrix, Vector};

/// A linear subspace of ℚ(i)ⁿ, held as an RREF basis with strictly
/// increasing pivot columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the given vectors inside ℚ(i)^ambient.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient, "span: vector length != ambient dim");
        }
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Matrix::zeros(0, ambient),
                pivots: Vec::new(),
            };
        }
        let r = rref(&Matrix::from_rows(vectors));
        Subspace {
            ambient,
            basis: r.mat,
            pivots: r.pivots,
        }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace::span(ambient, &[])
    }

    pub fn full(ambient: usize) -> Subspace {
        let rows: Vec<Vector> = (0..ambient).map(|i| Vector::unit(ambient, i)).collect();
        Subspace::span(ambient, &rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical RREF basis rows.
    pub fn basis(&self) -> Vec<Vector> {
        (0..self.dim()).map(|r| self.basis.row_vector(r)).collect()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction by the basis; zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.clone();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc].clone();
            if !c.is_zero() {
                for col in 0..self.ambient {
                    let delta = &c * &self.basis[(row, col)];
                    w[col] = &w[col] - &delta;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the RREF basis (read off at pivot columns), or
    /// `None` when `v` is outside the subspace.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coords = Vector::from_fn(self.dim(), |r| v[self.pivots[r]].clone());
        let mut recon = Vector::zeros(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            recon.add_assign_scaled(&self.basis.row_vector(r), c);
        }
        if &recon == v {
            Some(coords)
        } else {
            None
        }
    }

    /// Reconstructs the ambient vector with the given basis coordinates.
    pub fn from_coordinates(&self, coords: &Vector) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut out = Vector::zeros(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            out.add_assign_scaled(&self.basis.row_vector(r), c);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis();
        rows.extend(other.basis());
        Subspace::span(self.ambient, &rows)
    }

    /// Standard-basis vectors at non-pivot columns: a complement basis for
    /// the quotient ℚ(i)ⁿ / self, in increasing column order.
    pub fn complement_unit_vectors(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}

/// Intersection of two subspaces, via the kernel of the stacked basis.
pub fn intersect(a: &Subspace, b: &Subspace) -> Subspace {
    assert_eq!(a.ambient_dim(), b.ambient_dim());
    // Rows of [A; B]ᵀ-kernel combinations: x·A = y·B. Solve for coefficient
    // vectors (x, -y) in the kernel of the transpose of the stacked basis.
    let mut rows = a.basis();
    rows.extend(b.basis());
    if rows.is_empty() {
        return Subspace::zero(a.ambient_dim());
    }
    let stacked = Matrix::from_rows(&rows).transpose();
    let null = super::linalg::kernel(&stacked);
    let vectors: Vec<Vector> = null
        .iter()
        .map(|coef| {
            let mut v = Vector::zeros(a.ambient_dim());
            for (r, row) in a.basis().iter().enumerate() {
                v.add_assign_scaled(row, &coef[r]);
            }
            v
        })
        .collect();
    Subspace::span(a.ambient_dim(), &vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::GaussianRational;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn membership_and_coordinates() {
        let s = Subspace::span(
            3,
            &[
                Vector(vec![gr(1), gr(0), gr(1)]),
                Vector(vec![gr(0), gr(1), gr(1)]),
            ],
        );
        assert_eq!(s.dim(), 2);
        let v = Vector(vec![gr(2), gr(3), gr(5)]);
        assert!(s.contains(&v));
        let coords = s.coordinates(&v).unwrap();
        assert_eq!(s.from_coordinates(&coords), v);
        assert!(!s.contains(&Vector(vec![gr(1), gr(0), gr(0)])));
        assert_eq!(s.coordinates(&Vector(vec![gr(1), gr(0), gr(0)])), None);
    }

    #[test]
    fn span_is_canonical() {
        let s1 = Subspace::span(
            2,
            &[Vector(vec![gr(2), gr(4)]), Vector(vec![gr(1), gr(3)])],
        );
        let s2 = Subspace::span(
            2,
            &[Vector(vec![gr(1), gr(1)]), Vector(vec![gr(0), gr(1)])],
        );
        assert_eq!(s1, s2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(
            3,
            &[
                Vector(vec![gr(1), gr(0), gr(0)]),
                Vector(vec![gr(0), gr(1), gr(0)]),
            ],
        );
        let b = Subspace::span(
            3,
            &[
                Vector(vec![gr(0), gr(1), gr(0)]),
                Vector(vec![gr(0), gr(0), gr(1)]),
            ],
        );
        let meet = intersect(&a, &b);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&Vector(vec![gr(0), gr(1), gr(0)])));
    }
}
